"""The convolution algebra of linear forms on the (double) tensor algebra.

A StateTable is a generalized measure: a unital linear form on T(A) given by
finitely many rational moments.  Functionals wrap memoized evaluators over
words and bar monomials; characters multiply over bar factors, infinitesimal
characters vanish on the unit and on bars of length >= 2.  Convolution and
the half-shuffle products pair functionals against the coproducts of the
hopf module; all exponential/logarithm series terminate by grading, so every
value is an exact rational.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Mapping, Optional, Union

from .core import BarMonomial, EMPTY_WORD, Word, render
from .errors import DegreeExceeded, KindMismatch, NonUnital, UndefinedBoundary
from .hopf import coproduct, delta_half, delta_m_linearized, antipode

Element = Union[Word, BarMonomial]

CHARACTER = "character"
INFINITESIMAL = "infinitesimal"
GENERAL = "general"


def all_words(letters: int, min_degree: int, max_degree: int) -> Iterator[Word]:
    """All words over the alphabet a_1..a_letters, by degree then lexicographic."""
    for n in range(min_degree, max_degree + 1):
        for combo in itertools.product(range(1, letters + 1), repeat=n):
            yield Word(combo)


class _WordTable:
    __slots__ = ("letters", "max_degree", "values")

    unit_value = Fraction(0)

    def __init__(self, letters: int, max_degree: int,
                 values: Mapping[Word, Fraction] = ()):
        values = dict(values.items() if isinstance(values, Mapping) else values)
        for w, v in values.items():
            if w.is_unit():
                raise ValueError("the unit carries a fixed value and may not be set")
            if w.degree > max_degree:
                raise ValueError(f"{w} exceeds max degree {max_degree}")
            if any(i > letters for i in w.letters):
                raise ValueError(f"{w} uses letters beyond a{letters}")
        self.letters = letters
        self.max_degree = max_degree
        self.values = {w: Fraction(v) for w, v in values.items() if Fraction(v)}

    def value(self, w: Word) -> Fraction:
        if w.is_unit():
            return self.unit_value
        if w.degree > self.max_degree:
            raise DegreeExceeded(
                f"{w} has degree {w.degree}; table stops at {self.max_degree}")
        return self.values.get(w, Fraction(0))

    def items(self):
        return self.values.items()

    def __eq__(self, other):
        if type(self) is not type(other):
            return NotImplemented
        return (self.letters, self.max_degree, self.values) == (
            other.letters, other.max_degree, other.values)

    def __repr__(self):
        name = type(self).__name__
        body = ", ".join(f"{render(w)}: {v}" for w, v in sorted(
            self.values.items(), key=lambda kv: (kv[0].degree, kv[0].letters)))
        return f"{name}(a1..a{self.letters}, deg<={self.max_degree}, {{{body}}})"


class StateTable(_WordTable):
    """Moments of a generalized measure: phi(1) = 1, total up to max_degree
    (missing words read as 0)."""

    unit_value = Fraction(1)


class CumulantTable(_WordTable):
    """A word-indexed cumulant family; the unit carries 0."""

    unit_value = Fraction(0)


def random_state(letters: int, max_degree: int, rng: random.Random) -> StateTable:
    """Random rational moments: numerators in [-9, 9], denominators in [1, 9]."""
    values = {w: Fraction(rng.randint(-9, 9), rng.randint(1, 9))
              for w in all_words(letters, 1, max_degree)}
    return StateTable(letters, max_degree, values)


def random_cumulant_table(letters: int, max_degree: int, rng: random.Random) -> CumulantTable:
    values = {w: Fraction(rng.randint(-9, 9), rng.randint(1, 9))
              for w in all_words(letters, 1, max_degree)}
    return CumulantTable(letters, max_degree, values)


class Functional:
    """A linear form on T(T+(A)) / S(T+(A)), given by a memoized evaluator.

    kind tracks what the form is known to be: a character (multiplicative,
    value 1 on the unit), an infinitesimal character (0 on the unit and on
    bars of length >= 2), or a general form.  max_degree, when set, bounds
    the inputs the underlying tables can support.
    """

    __slots__ = ("_fn", "kind", "max_degree", "letters", "_memo")

    def __init__(self, fn: Callable[[Element], Fraction], kind: str = GENERAL,
                 max_degree: Optional[int] = None, letters: Optional[int] = None):
        self._fn = fn
        self.kind = kind
        self.max_degree = max_degree
        self.letters = letters
        self._memo: dict = {}

    def __call__(self, x: Element) -> Fraction:
        hit = self._memo.get(x)
        if hit is not None:
            return hit
        if self.max_degree is not None and x.degree > self.max_degree:
            raise DegreeExceeded(
                f"{x} has degree {x.degree}; functional stops at {self.max_degree}")
        val = self._fn(x)
        self._memo[x] = val
        return val

    def evaluate(self, lc) -> Fraction:
        """Pair against a linear combination of basis elements."""
        return sum((c * self(e) for e, c in lc.items()), Fraction(0))

    def with_kind(self, kind: str) -> "Functional":
        return Functional(self, kind, self.max_degree, self.letters)

    def _combine_meta(self, other: "Functional"):
        degs = [d for d in (self.max_degree, other.max_degree) if d is not None]
        lets = [l for l in (self.letters, other.letters) if l is not None]
        return (min(degs) if degs else None, max(lets) if lets else None)

    def __add__(self, other: "Functional") -> "Functional":
        kind = INFINITESIMAL if self.kind == other.kind == INFINITESIMAL else GENERAL
        deg, lets = self._combine_meta(other)
        return Functional(lambda x: self(x) + other(x), kind, deg, lets)

    def __sub__(self, other: "Functional") -> "Functional":
        kind = INFINITESIMAL if self.kind == other.kind == INFINITESIMAL else GENERAL
        deg, lets = self._combine_meta(other)
        return Functional(lambda x: self(x) - other(x), kind, deg, lets)

    def __rmul__(self, scalar) -> "Functional":
        scalar = Fraction(scalar)
        kind = self.kind if self.kind == INFINITESIMAL else GENERAL
        return Functional(lambda x: scalar * self(x), kind, self.max_degree, self.letters)

    def __repr__(self):
        deg = "" if self.max_degree is None else f", deg<={self.max_degree}"
        return f"Functional({self.kind}{deg})"


def counit_functional() -> Functional:
    """nu: the unit of every convolution algebra here (1 on the unit, else 0)."""
    return Functional(lambda x: Fraction(1 if x.is_unit() else 0), CHARACTER)


def char_extend(state: StateTable) -> Functional:
    """char(psi): the unique character with values psi(w_1)...psi(w_n) on bars."""

    def ev(x: Element) -> Fraction:
        if isinstance(x, Word):
            return state.value(x)
        out = Fraction(1)
        for w in x.words:
            out *= state.value(w)
        return out

    return Functional(ev, CHARACTER, state.max_degree, state.letters)


def gm(f: Functional, letters: Optional[int] = None,
       max_degree: Optional[int] = None) -> StateTable:
    """Restrict a character back to its generalized measure (word table)."""
    if f.kind != CHARACTER:
        raise KindMismatch(f"gm needs a character, got {f.kind}")
    letters = letters if letters is not None else f.letters
    max_degree = max_degree if max_degree is not None else f.max_degree
    if letters is None or max_degree is None:
        raise ValueError("alphabet size and degree bound required")
    return StateTable(letters, max_degree,
                      {w: f(w) for w in all_words(letters, 1, max_degree)})


def ichar(table: CumulantTable) -> Functional:
    """Extend a word table to the infinitesimal character vanishing on
    the unit and on bars of length >= 2."""

    def ev(x: Element) -> Fraction:
        if isinstance(x, Word):
            return table.value(x)
        if x.length == 1:
            return table.value(x.words[0])
        return Fraction(0)

    return Functional(ev, INFINITESIMAL, table.max_degree, table.letters)


def igm(f: Functional, letters: Optional[int] = None,
        max_degree: Optional[int] = None) -> CumulantTable:
    if f.kind != INFINITESIMAL:
        raise KindMismatch(f"igm needs an infinitesimal character, got {f.kind}")
    letters = letters if letters is not None else f.letters
    max_degree = max_degree if max_degree is not None else f.max_degree
    if letters is None or max_degree is None:
        raise ValueError("alphabet size and degree bound required")
    return CumulantTable(letters, max_degree,
                         {w: f(w) for w in all_words(letters, 1, max_degree)})


# ---------------------------------------------------------------------------
# convolution and half-shuffles


def convolve(f: Functional, g: Functional, structure: str = "T") -> Functional:
    """f * g := (f (x) g) o Delta for the chosen structure (T, m, b or f)."""
    kind = CHARACTER if f.kind == g.kind == CHARACTER else GENERAL
    deg, lets = f._combine_meta(g)

    def ev(x: Element) -> Fraction:
        acc = Fraction(0)
        for (l, r), c in coproduct(structure, x).items():
            acc += c * f(l) * g(r)
        return acc

    return Functional(ev, kind, deg, lets)


def convolution_powers(f: Functional, structure: str):
    """Lazy list of convolution powers f^{*0}=nu, f^{*1}=f, f^{*2}, ..."""
    powers = [counit_functional(), f]

    def power(k: int) -> Functional:
        while len(powers) <= k:
            powers.append(convolve(f, powers[-1], structure))
        return powers[k]

    return power


def half_shuffle(f: Functional, g: Functional, side: str) -> Functional:
    """f < g or f > g, with the boundary conventions nu < f = 0, f < nu = f,
    nu > f = f, f > nu = 0 (nu < nu and nu > nu are undefined)."""
    if side not in ("prec", "succ"):
        raise ValueError(f"side must be 'prec' or 'succ', got {side!r}")
    cf, cg = f(EMPTY_WORD), g(EMPTY_WORD)
    if cf and cg:
        raise UndefinedBoundary("half-shuffle of two unital forms is undefined")
    deg, lets = f._combine_meta(g)

    def ev(x: Element) -> Fraction:
        if x.is_unit():
            return Fraction(0)
        acc = cg * f(x) if side == "prec" else cf * g(x)
        for (l, r), c in delta_half(x, side, reduced=True).items():
            acc += c * f(l) * g(r)
        return acc

    return Functional(ev, GENERAL, deg, lets)


def prelie(f: Functional, g: Functional) -> Functional:
    """The shuffle pre-Lie product f |> g := f > g - g < f on T(T+(A))^*."""
    return half_shuffle(f, g, "succ") - half_shuffle(g, f, "prec")


def prelie_m(alpha: CumulantTable, beta: CumulantTable) -> CumulantTable:
    """The pre-Lie product dual to the linearized monotone coproduct:
    (alpha |> beta)(w) = sum over proper intervals S of
    alpha(a_{[n]-S}) beta(a_S).

    With this leg order the associator is symmetric in its last two
    arguments (a right pre-Lie identity); the antisymmetrized bracket
    coincides with the commutator bracket of the monotone convolution."""
    max_degree = min(alpha.max_degree, beta.max_degree)
    letters = max(alpha.letters, beta.letters)
    values = {}
    for w in all_words(letters, 1, max_degree):
        acc = Fraction(0)
        for (l, r), c in delta_m_linearized(w).items():
            acc += c * alpha.value(l) * beta.value(r)
        values[w] = acc
    return CumulantTable(letters, max_degree, values)


# ---------------------------------------------------------------------------
# exponentials, logarithms, inversion


def conv_exp(alpha: Functional, structure: str = "T") -> Functional:
    """exp^*(alpha) = nu + sum_{j>0} alpha^{*j}/j!; terminates at j = deg."""
    if alpha.kind != INFINITESIMAL:
        raise KindMismatch(f"exp takes an infinitesimal character, got {alpha.kind}")
    power = convolution_powers(alpha, structure)

    def ev(x: Element) -> Fraction:
        if x.is_unit():
            return Fraction(1)
        d = x.degree
        acc = Fraction(0)
        fact = 1
        for j in range(1, d + 1):
            fact *= j
            acc += Fraction(1, fact) * power(j)(x)
        return acc

    return Functional(ev, CHARACTER, alpha.max_degree, alpha.letters)


def conv_log(phi: Functional, structure: str = "T") -> Functional:
    """log^*(Phi) = sum_{k>0} (-1)^(k-1)/k (Phi - nu)^{*k}; terminates at deg."""
    if phi.kind != CHARACTER:
        raise KindMismatch(f"log takes a character, got {phi.kind}")
    gamma = phi - counit_functional()
    power = convolution_powers(gamma, structure)

    def ev(x: Element) -> Fraction:
        if x.is_unit():
            return Fraction(0)
        acc = Fraction(0)
        for k in range(1, x.degree + 1):
            acc += Fraction((-1) ** (k - 1), k) * power(k)(x)
        return acc

    return Functional(ev, INFINITESIMAL, phi.max_degree, phi.letters)


def invert(phi: Functional, structure: str = "T", method: str = "series") -> Functional:
    """Convolution inverse of a unital functional.

    method="series" uses the graded Neumann series sum (-1)^k (Phi - nu)^{*k};
    method="antipode" composes with the antipode of the structure.  Both agree
    on characters (tested).
    """
    if phi(EMPTY_WORD) != 1:
        raise NonUnital("inversion needs Phi(1) = 1")
    if method == "antipode":
        def ev_a(x: Element) -> Fraction:
            return phi.evaluate(antipode(x, structure))
        return Functional(ev_a, phi.kind, phi.max_degree, phi.letters)
    if method != "series":
        raise ValueError(f"unknown method {method!r}")
    gamma = phi - counit_functional()
    power = convolution_powers(gamma, structure)

    def ev(x: Element) -> Fraction:
        if x.is_unit():
            return Fraction(1)
        acc = Fraction(0)
        for k in range(1, x.degree + 1):
            acc += Fraction((-1) ** k) * power(k)(x)
        return acc

    return Functional(ev, phi.kind, phi.max_degree, phi.letters)


def half_exp(alpha: Functional, side: str) -> Functional:
    """Half-shuffle exponential, by its fixed point equation:
    E_prec = nu + alpha < E_prec,  E_succ = nu + E_succ > alpha."""
    if alpha.kind != INFINITESIMAL:
        raise KindMismatch(f"half exponential takes an infinitesimal character, "
                           f"got {alpha.kind}")
    if side not in ("prec", "succ"):
        raise ValueError(f"side must be 'prec' or 'succ', got {side!r}")
    memo: dict = {}

    def ev(x: Element) -> Fraction:
        if x.is_unit():
            return Fraction(1)
        hit = memo.get(x)
        if hit is not None:
            return hit
        acc = alpha(x)
        for (l, r), c in delta_half(x, side, reduced=True).items():
            if side == "prec":
                acc += c * alpha(l) * ev(r)
            else:
                acc += c * ev(l) * alpha(r)
        memo[x] = acc
        return acc

    return Functional(ev, CHARACTER, alpha.max_degree, alpha.letters)


def half_log(phi: Functional, side: str) -> Functional:
    """Half-shuffle logarithm: L_prec(Phi) = (Phi - nu) < Phi^{-1},
    L_succ(Phi) = Phi^{-1} > (Phi - nu)."""
    if phi.kind != CHARACTER:
        raise KindMismatch(f"half logarithm takes a character, got {phi.kind}")
    nu = counit_functional()
    inv = invert(phi, "T")
    if side == "prec":
        out = half_shuffle(phi - nu, inv, "prec")
    elif side == "succ":
        out = half_shuffle(inv, phi - nu, "succ")
    else:
        raise ValueError(f"side must be 'prec' or 'succ', got {side!r}")
    return out.with_kind(INFINITESIMAL)


# ---------------------------------------------------------------------------
# deterministic "random" functionals for property checks


def random_functional(seed, label: str = "f") -> Functional:
    """A lazily evaluated rational-valued linear form vanishing on the unit;
    values depend deterministically on (seed, label, basis element)."""

    def ev(x: Element) -> Fraction:
        if x.is_unit():
            return Fraction(0)
        rng = random.Random(f"{seed}:{label}:{render(x)}")
        return Fraction(rng.randint(-9, 9), rng.randint(1, 9))

    return Functional(ev, GENERAL)
