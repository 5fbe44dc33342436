"""Coproducts on the double tensor algebra T(T+(A)) and on S(T+(A)).

All maps land in LinComb over two-leg tensors.  On a word input the left leg
stays a Word (it lives in T(A)); on bar-monomial inputs both legs are bar
monomials of the structure's flavor.  Structures are named by a one-letter
tag used throughout the package:

    "T"  subset/complement-runs coproduct on T(T+(A))   (ordered right leg)
    "m"  the same expansion with commutative right leg  (monotone coproduct)
    "b"  both legs split into connected runs            (Boolean coproduct)
    "f"  universal-free-product expansion               (free coproduct)

Everything here is a pure function of its arguments; the module-level caches
are plain dicts keyed by immutable basis elements (safe under the GIL, and
cheap to clear via clear_caches()).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

from .core import (
    CBAR,
    COMMUTATIVE,
    OBAR,
    ORDERED,
    WORD,
    BarMonomial,
    EMPTY_WORD,
    LinComb,
    Word,
    as_bar,
    bar_mul,
    subword,
    unit_bar,
)
from .errors import BasisMismatch, NotAdapted, UnitInput
from .partitions import connected_components, is_adapted

Element = Union[Word, BarMonomial]

STRUCTURES = ("T", "m", "b", "f")

_DELTA_WORD: dict = {}
_DELTA_BAR: dict = {}
_DELTA_HALF: dict = {}
_DELTA_B: dict = {}
_DELTA_F: dict = {}
_FREE_SYMBOLIC: dict = {}
_ANTIPODE: dict = {}


def clear_caches() -> None:
    for cache in (_DELTA_WORD, _DELTA_BAR, _DELTA_HALF, _DELTA_B, _DELTA_F,
                  _FREE_SYMBOLIC, _ANTIPODE):
        cache.clear()


def structure_flavor(structure: str) -> str:
    if structure not in STRUCTURES:
        raise ValueError(f"unknown structure {structure!r}")
    return ORDERED if structure == "T" else COMMUTATIVE


def _pair_mul(a: LinComb, b: LinComb) -> LinComb:
    """Componentwise bar product on two-leg tensors (multiplicative extension)."""
    out: dict = {}
    for (l1, r1), c1 in a.items():
        for (l2, r2), c2 in b.items():
            key = (bar_mul(l1, l2), bar_mul(r1, r2))
            val = out.get(key, Fraction(0)) + c1 * c2
            if val:
                out[key] = val
            else:
                del out[key]
    return LinComb(out.items())


def _promote_left(lc: LinComb, flavor: str) -> LinComb:
    return lc.map_basis(lambda pair: (as_bar(pair[0], flavor), as_bar(pair[1], flavor)))


def _subsets(n: int):
    for mask in range(1 << n):
        yield [i + 1 for i in range(n) if mask >> i & 1]


# ---------------------------------------------------------------------------
# the T(T+) coproduct and its monotone (commutative-right-leg) variant


def delta_word(w: Word, flavor: str = ORDERED) -> LinComb:
    """Delta(a_1...a_n) = sum over S of a_S (x) [a_{J_1}|...|a_{J_k}],
    the J_i being the maximal runs of the complement of S."""
    key = (w, flavor)
    hit = _DELTA_WORD.get(key)
    if hit is not None:
        return hit
    n = w.degree
    terms: dict = {}
    for s in _subsets(n):
        left = subword(w, s)
        _, comp_runs = connected_components(s, n)
        right = BarMonomial((subword(w, run) for run in comp_runs), flavor)
        tkey = (left, right)
        terms[tkey] = terms.get(tkey, Fraction(0)) + 1
    out = LinComb(terms.items(), kind=(WORD, OBAR if flavor == ORDERED else CBAR))
    _DELTA_WORD[key] = out
    return out


def delta(x: Element, flavor: str = ORDERED, reduced: bool = False) -> LinComb:
    """The coproduct on T(T+(A)) (flavor=ordered) or S(T+(A)) (commutative),
    extended multiplicatively from words to bar monomials."""
    if isinstance(x, Word):
        out = delta_word(x, flavor)
        if reduced:
            out = out - LinComb.of((x, unit_bar(flavor))) - LinComb.of(
                (EMPTY_WORD, as_bar(x, flavor)))
        return out
    if x.flavor != flavor:
        raise BasisMismatch(f"{x.flavor} bar monomial fed to {flavor} coproduct")
    key = (x, flavor)
    out = _DELTA_BAR.get(key)
    if out is None:
        out = LinComb.of((unit_bar(flavor), unit_bar(flavor)))
        for w in x.words:
            out = _pair_mul(out, _promote_left(delta_word(w, flavor), flavor))
        _DELTA_BAR[key] = out
    if reduced:
        out = out - LinComb.of((x, unit_bar(flavor))) - LinComb.of((unit_bar(flavor), x))
    return out


def delta_half(x: Element, side: str, reduced: bool = False) -> LinComb:
    """Half-coproducts on the augmentation ideal of T(T+(A)).

    side="prec" keeps the subsets containing position 1, side="succ" those
    avoiding it.  The reduced variants drop the boundary terms x (x) 1
    respectively 1 (x) x, so that delta = prec+ + succ+ and
    delta(w) = prec + succ + w (x) 1 + 1 (x) w on the ideal.
    """
    if side not in ("prec", "succ"):
        raise ValueError(f"side must be 'prec' or 'succ', got {side!r}")
    if x.is_unit():
        raise UnitInput("half-coproducts are undefined on the unit")
    key = (x, side)
    out = _DELTA_HALF.get(key)
    if out is None:
        if isinstance(x, Word):
            n = x.degree
            terms: dict = {}
            for s in _subsets(n):
                if (1 in s) != (side == "prec"):
                    continue
                left = subword(x, s)
                _, comp_runs = connected_components(s, n)
                right = BarMonomial((subword(x, run) for run in comp_runs), ORDERED)
                tkey = (left, right)
                terms[tkey] = terms.get(tkey, Fraction(0)) + 1
            out = LinComb(terms.items(), kind=(WORD, OBAR))
        else:
            first, rest = x.words[0], x.words[1:]
            out = _promote_left(delta_half(first, side), ORDERED)
            for w in rest:
                out = _pair_mul(out, _promote_left(delta_word(w, ORDERED), ORDERED))
        _DELTA_HALF[key] = out
    if reduced:
        if side == "prec":
            out = out - LinComb.of((x, unit_bar(ORDERED)))
        else:
            left_unit = EMPTY_WORD if isinstance(x, Word) else unit_bar(ORDERED)
            out = out - LinComb.of((left_unit, as_bar(x, ORDERED)))
    return out


def delta_m_linearized(w: Word) -> LinComb:
    """delta_m composed with the projections onto single words on both legs:
    sum over non-empty proper intervals S of a_{[n]-S} (x) a_S."""
    if w.is_unit():
        raise UnitInput("the linearized coproduct needs a non-empty word")
    n = w.degree
    terms: dict = {}
    for a in range(1, n + 1):
        for b in range(a, n + 1):
            if a == 1 and b == n:
                continue
            s = list(range(a, b + 1))
            key = (subword(w, [i for i in range(1, n + 1) if i < a or i > b]),
                   subword(w, s))
            terms[key] = terms.get(key, Fraction(0)) + 1
    return LinComb(terms.items(), kind=(WORD, WORD))


# ---------------------------------------------------------------------------
# Boolean coproduct


def delta_b(x: Element, reduced: bool = False) -> LinComb:
    """Delta_b(a_1...a_n) = sum over S of a_{S_1}|...|a_{S_l} (x)
    a_{J_1}|...|a_{J_k}: both legs decompose into connected runs."""
    if isinstance(x, Word):
        out = _DELTA_B.get(x)
        if out is None:
            n = x.degree
            terms: dict = {}
            for s in _subsets(n):
                s_runs, comp_runs = connected_components(s, n)
                key = (BarMonomial((subword(x, run) for run in s_runs), COMMUTATIVE),
                       BarMonomial((subword(x, run) for run in comp_runs), COMMUTATIVE))
                terms[key] = terms.get(key, Fraction(0)) + 1
            out = LinComb(terms.items(), kind=(CBAR, CBAR))
            _DELTA_B[x] = out
    else:
        if x.flavor != COMMUTATIVE:
            raise BasisMismatch("delta_b acts on S(T+(A)): commutative bars only")
        out = _DELTA_B.get(x)
        if out is None:
            out = LinComb.of((unit_bar(COMMUTATIVE), unit_bar(COMMUTATIVE)))
            for w in x.words:
                out = _pair_mul(out, delta_b(w))
            _DELTA_B[x] = out
    if reduced:
        unit = unit_bar(COMMUTATIVE)
        xbar = as_bar(x, COMMUTATIVE)
        out = out - LinComb.of((xbar, unit)) - LinComb.of((unit, xbar))
    return out


# ---------------------------------------------------------------------------
# free coproduct, via the universal free product recursion on tagged words

TaggedRuns = tuple[tuple[Word, int], ...]


def merge_tagged_runs(pairs: Iterable[tuple[Word, int]]) -> TaggedRuns:
    """Alternating normal form: concatenate adjacent words carrying the same tag."""
    runs: list[tuple[Word, int]] = []
    for w, tag in pairs:
        if w.is_unit():
            continue
        if runs and runs[-1][1] == tag:
            prev, _ = runs[-1]
            runs[-1] = (Word(prev.letters + w.letters), tag)
        else:
            runs.append((w, tag))
    return tuple(runs)


def _free_symbolic(tagged: TaggedRuns) -> LinComb:
    """The universal free product of two formal linear forms, evaluated on an
    alternating tagged word.  phi_1(u) contributes a bar factor u on the left
    leg, phi_2(v) one on the right leg; the recursion is
    sum over proper subsets I of positions, sign (-1)^(m-|I|+1), of the
    recursive value on the merged subword times the singleton factors."""
    hit = _FREE_SYMBOLIC.get(tagged)
    if hit is not None:
        return hit
    m = len(tagged)
    if m == 0:
        out = LinComb.of((unit_bar(COMMUTATIVE), unit_bar(COMMUTATIVE)))
        _FREE_SYMBOLIC[tagged] = out
        return out
    acc: dict = {}
    for mask in range((1 << m) - 1):  # proper subsets only
        inside = [tagged[i] for i in range(m) if mask >> i & 1]
        outside = [tagged[i] for i in range(m) if not mask >> i & 1]
        sign = (-1) ** (m - len(inside) + 1)
        rec = _free_symbolic(merge_tagged_runs(inside))
        left_extra = BarMonomial((w for w, t in outside if t == 1), COMMUTATIVE)
        right_extra = BarMonomial((w for w, t in outside if t == 2), COMMUTATIVE)
        for (l, r), c in rec.items():
            key = (bar_mul(l, left_extra), bar_mul(r, right_extra))
            val = acc.get(key, Fraction(0)) + sign * c
            if val:
                acc[key] = val
            else:
                del acc[key]
    out = LinComb(acc.items(), kind=(CBAR, CBAR))
    _FREE_SYMBOLIC[tagged] = out
    return out


def _delta_f_generic(n: int) -> LinComb:
    """Free coproduct of the generic word 1...n (letters = positions)."""
    key = ("generic", n)
    out = _DELTA_F.get(key)
    if out is None:
        acc = LinComb.zero((CBAR, CBAR))
        for s in _subsets(n):
            inside = set(s)
            tagged = merge_tagged_runs(
                (Word((pos,)), 1 if pos in inside else 2)
                for pos in range(1, n + 1))
            acc = acc + _free_symbolic(tagged)
        _DELTA_F[key] = acc
        out = acc
    return out


def _subst_cbar(bar: BarMonomial, letters: tuple) -> BarMonomial:
    return BarMonomial(
        (Word(tuple(letters[i - 1] for i in pw.letters)) for pw in bar.words),
        COMMUTATIVE)


def delta_f(x: Element, reduced: bool = False) -> LinComb:
    """Free coproduct: Delta_f(a_1...a_n) evaluates the universal free product
    on (a_1'+a_1'')...(a_n'+a_n'') with formal left/right copies, i.e. sums the
    symbolic recursion over all tag assignments; extended multiplicatively.

    The recursion runs once per degree on the generic word (positions as
    letters); concrete words are obtained by substitution.
    """
    if isinstance(x, Word):
        out = _DELTA_F.get(x)
        if out is None:
            n = x.degree
            generic = _delta_f_generic(n)
            if x.letters == tuple(range(1, n + 1)):
                out = generic
            else:
                terms: dict = {}
                for (l, r), c in generic.items():
                    key = (_subst_cbar(l, x.letters), _subst_cbar(r, x.letters))
                    val = terms.get(key, Fraction(0)) + c
                    if val:
                        terms[key] = val
                    else:
                        del terms[key]
                out = LinComb(terms.items(), kind=(CBAR, CBAR))
            _DELTA_F[x] = out
    else:
        if x.flavor != COMMUTATIVE:
            raise BasisMismatch("delta_f acts on S(T+(A)): commutative bars only")
        out = _DELTA_F.get(x)
        if out is None:
            out = LinComb.of((unit_bar(COMMUTATIVE), unit_bar(COMMUTATIVE)))
            for w in x.words:
                out = _pair_mul(out, delta_f(w))
            _DELTA_F[x] = out
    if reduced:
        unit = unit_bar(COMMUTATIVE)
        xbar = as_bar(x, COMMUTATIVE)
        out = out - LinComb.of((xbar, unit)) - LinComb.of((unit, xbar))
    return out


def extract_alpha(pi1, pi2) -> Fraction:
    """Universal coefficient alpha_{pi1,pi2} of an adapted splitting, read off
    the free coproduct of the generic word a_1...a_n."""
    pi1 = tuple(tuple(sorted(b)) for b in pi1)
    pi2 = tuple(tuple(sorted(b)) for b in pi2)
    elements = sorted(i for b in pi1 + pi2 for i in b)
    n = len(elements)
    if elements != list(range(1, n + 1)):
        raise NotAdapted(f"blocks {pi1 + pi2} do not cover [1..n]")
    subset = [i for b in pi1 for i in b]
    if not is_adapted(n, pi1, pi2, subset):
        raise NotAdapted(f"({pi1}, {pi2}) violates the adaptedness condition")
    w = Word(range(1, n + 1))
    left = BarMonomial((subword(w, b) for b in pi1), COMMUTATIVE)
    right = BarMonomial((subword(w, b) for b in pi2), COMMUTATIVE)
    return delta_f(w).coeff((left, right))


# ---------------------------------------------------------------------------
# dispatch, counit, antipode


def coproduct(structure: str, x: Element, reduced: bool = False) -> LinComb:
    if structure == "T":
        return delta(x, ORDERED, reduced)
    if structure == "m":
        return delta(x, COMMUTATIVE, reduced)
    if structure == "b":
        return delta_b(x, reduced)
    if structure == "f":
        return delta_f(x, reduced)
    raise ValueError(f"unknown structure {structure!r}")


def counit(x: Element) -> Fraction:
    """The projection onto the ground field: 1 on the unit, 0 elsewhere."""
    return Fraction(1) if x.is_unit() else Fraction(0)


def antipode(x: Element, structure: str = "T") -> LinComb:
    """Antipode of the chosen Hopf structure, by the graded-connected
    recursion S(x) = -x - sum S(x') x'' over the reduced coproduct."""
    flavor = structure_flavor(structure)
    xbar = as_bar(x, flavor)
    if xbar.is_unit():
        return LinComb.of(xbar)
    key = (structure, xbar)
    hit = _ANTIPODE.get(key)
    if hit is not None:
        return hit
    # m(S (x) id) Delta(x) = 0 on the augmentation ideal; the r = 1 term is
    # S(x) itself, so S(x) = -sum of S(l) r over the remaining terms (the
    # l = 1 term contributes -x).
    acc: dict = {}
    for (l, r), c in coproduct(structure, xbar).items():
        if r.is_unit():
            continue
        for e, ce in antipode(l, structure).items():
            k2 = bar_mul(e, r)
            val = acc.get(k2)
            if val is None:
                acc[k2] = -c * ce
            else:
                val = val - c * ce
                if val:
                    acc[k2] = val
                else:
                    del acc[k2]
    out = LinComb(acc.items(), kind=OBAR if flavor == ORDERED else CBAR)
    _ANTIPODE[key] = out
    return out
