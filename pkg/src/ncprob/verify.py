"""Verification harness: reruns the theorem-level identities at desk scale.

Every suite is a function (seed, max_degree, trials) -> list of CheckResult,
deterministic given its arguments.  Suites mirror the property sets of the
individual modules; "paper-examples" pins the displayed expansions bit-exactly.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from .core import (
    BarMonomial,
    COMMUTATIVE,
    EMPTY_WORD,
    LinComb,
    ORDERED,
    Word,
    as_bar,
    bar_mul,
    parse_element,
    parse_word,
    render,
)
from .errors import UndefinedBoundary, UnknownSuite
from . import cumulants as cm
from . import universal as up
from .functionals import (
    CumulantTable,
    StateTable,
    all_words,
    char_extend,
    conv_exp,
    conv_log,
    convolve,
    convolution_powers,
    counit_functional,
    gm,
    half_exp,
    half_log,
    half_shuffle,
    ichar,
    igm,
    invert,
    prelie,
    prelie_m,
    random_cumulant_table,
    random_functional,
    random_state,
)
from .hopf import (
    antipode,
    coproduct,
    delta,
    delta_b,
    delta_f,
    delta_half,
    delta_m_linearized,
    extract_alpha,
    structure_flavor,
)
from .partitions import (
    SetPartition,
    adapted_splittings,
    catalan,
    connected_components,
    enumerate_partitions,
    kreweras_complement,
    mobius_nc,
    nesting_forest,
    tree_factorial,
)
from .core import subword


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    elapsed: float = 0.0


@dataclass
class RunReport:
    suite: str
    seed: int
    max_degree: int
    trials: int
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


class Checker:
    def __init__(self):
        self.checks: list[CheckResult] = []
        self._t0 = time.perf_counter()

    def _clock(self) -> float:
        now = time.perf_counter()
        dt, self._t0 = now - self._t0, now
        return dt

    def record(self, name: str, passed: bool, detail: str = ""):
        self.checks.append(CheckResult(name, bool(passed), detail, self._clock()))

    def equal(self, name: str, lhs, rhs):
        ok = lhs == rhs
        detail = "" if ok else f"{lhs!r} != {rhs!r}"
        self.record(name, ok, detail)


# ---------------------------------------------------------------------------
# small helpers shared by several suites


def word_list(letters: int, max_degree: int) -> list[Word]:
    return list(all_words(letters, 1, max_degree))


def iter_bars(letters: int, max_degree: int, flavor: str) -> list[BarMonomial]:
    """Non-unit bar monomials of total degree <= max_degree, canonical order."""
    found: list[BarMonomial] = []
    seen: set[BarMonomial] = set()

    def rec(prefix: tuple[Word, ...], budget: int):
        for w in all_words(letters, 1, budget):
            cur = prefix + (w,)
            b = BarMonomial(cur, flavor)
            if b not in seen:
                seen.add(b)
                found.append(b)
            rec(cur, budget - w.degree)

    rec((), max_degree)
    found.sort(key=lambda b: (b.degree, render(b)))
    return found


def lc(pairs, kind=None) -> LinComb:
    return LinComb(pairs, kind)


def cb(text: str) -> BarMonomial:
    """Parse a commutative bar monomial (words are coerced)."""
    return as_bar(parse_element(text), COMMUTATIVE)


def ob(text: str) -> BarMonomial:
    elem = parse_element(text.strip("[]") if text.startswith("[") else text)
    return as_bar(elem, ORDERED)


def _coassoc_defect(structure: str, x) -> dict:
    """(Delta (x) id) Delta - (id (x) Delta) Delta as a raw triple dict."""
    flavor = structure_flavor(structure)
    acc: dict = {}
    for (l, r), c in coproduct(structure, x).items():
        for (l1, r1), c1 in coproduct(structure, l).items():
            key = (as_bar(l1, flavor), as_bar(r1, flavor), as_bar(r, flavor))
            val = acc.get(key, Fraction(0)) + c * c1
            if val:
                acc[key] = val
            else:
                del acc[key]
        for (l2, r2), c2 in coproduct(structure, r).items():
            key = (as_bar(l, flavor), as_bar(l2, flavor), as_bar(r2, flavor))
            val = acc.get(key, Fraction(0)) - c * c2
            if val:
                acc[key] = val
            else:
                del acc[key]
    return acc


def _counit_ok(structure: str, x) -> bool:
    flavor = structure_flavor(structure)
    left = LinComb.zero()
    right = LinComb.zero()
    for (l, r), c in coproduct(structure, x).items():
        if l.is_unit():
            left = left + c * LinComb.of(as_bar(r, flavor))
        if r.is_unit():
            right = right + c * LinComb.of(as_bar(l, flavor))
    target = LinComb.of(as_bar(x, flavor))
    return left == target and right == target


def _mult_ok(structure: str, u: Word, v: Word) -> bool:
    """coproduct(u (bar-)product v) against the componentwise product of the
    factor coproducts, built here independently of the hopf-module extension."""
    flavor = structure_flavor(structure)
    prod = bar_mul(as_bar(u, flavor), as_bar(v, flavor))
    lhs = coproduct(structure, prod)
    terms: dict = {}
    for (l1, r1), c1 in coproduct(structure, u).items():
        lb, rb = as_bar(l1, flavor), as_bar(r1, flavor)
        for (l2, r2), c2 in coproduct(structure, v).items():
            key = (bar_mul(lb, as_bar(l2, flavor)),
                   bar_mul(rb, as_bar(r2, flavor)))
            val = terms.get(key)
            if val is None:
                terms[key] = c1 * c2
            else:
                val = val + c1 * c2
                if val:
                    terms[key] = val
                else:
                    del terms[key]
    return lhs.terms == terms


def _cocommutative_defect(structure: str, x) -> LinComb:
    flavor = structure_flavor(structure)
    out = coproduct(structure, x)
    flipped = out.map_basis(lambda p: (as_bar(p[1], flavor), as_bar(p[0], flavor)))
    normal = out.map_basis(lambda p: (as_bar(p[0], flavor), as_bar(p[1], flavor)))
    return normal - flipped


def _antipode_ok(structure: str, x) -> bool:
    """m(S (x) id) Delta(x) = nu(x) 1  and  m(id (x) S) Delta(x) = nu(x) 1."""
    flavor = structure_flavor(structure)
    left: dict = {}
    right: dict = {}

    def bump(acc, key, val):
        old = acc.get(key)
        if old is None:
            acc[key] = val
        else:
            old = old + val
            if old:
                acc[key] = old
            else:
                del acc[key]

    for (l, r), c in coproduct(structure, x).items():
        lb, rb = as_bar(l, flavor), as_bar(r, flavor)
        for e, ce in antipode(l, structure).items():
            bump(left, bar_mul(e, rb), c * ce)
        for e, ce in antipode(r, structure).items():
            bump(right, bar_mul(lb, e), c * ce)
    target = {as_bar(EMPTY_WORD, flavor): Fraction(1)} if x.is_unit() else {}
    return left == target and right == target


# ---------------------------------------------------------------------------
# paper-examples: the displayed expansions, bit exact


def suite_paper_examples(seed: int, max_degree: int, trials: int) -> list[CheckResult]:
    ch = Checker()
    w7 = parse_word("a1.a2.a3.a4.a5.a6.a7")
    ch.equal("subword-n7", subword(w7, {2, 3, 6}), parse_word("a2.a3.a6"))
    ch.equal("connected-components-n7",
             connected_components({2, 3, 6}, 7),
             (((2, 3), (6,)), ((1,), (4, 5), (7,))))

    splittings = adapted_splittings({1, 3}, 3)
    pairs = {(s.pi1, s.pi2) for s in splittings}
    ch.record("adapted-splitting-singletons",
              (((1, 3),), ((2,),)) in pairs and (((1,), (3,)), ((2,),)) in pairs,
              detail=str(sorted(pairs)))

    a12 = parse_word("a1.a2")
    expected = lc({(parse_word("a1.a2"), ob("1")): 1,
                   (parse_word("a1"), ob("a2")): 1,
                   (parse_word("a2"), ob("a1")): 1,
                   (EMPTY_WORD, ob("a1.a2")): 1})
    ch.equal("delta(a1a2)", delta(a12, ORDERED), expected)

    a123 = parse_word("a1.a2.a3")
    expected_m = lc({(parse_word("a2.a3"), cb("a1")): 1,
                     (parse_word("a1.a2"), cb("a3")): 1,
                     (parse_word("a1.a3"), cb("a2")): 1,
                     (parse_word("a1"), cb("a2.a3")): 1,
                     (parse_word("a2"), cb("a1|a3")): 1,
                     (parse_word("a3"), cb("a1.a2")): 1})
    ch.equal("reduced-delta_m(a1a2a3)", delta(a123, COMMUTATIVE, reduced=True),
             expected_m)

    expected_dm3 = lc({(parse_word("a2.a3"), parse_word("a1")): 1,
                       (parse_word("a1.a2"), parse_word("a3")): 1,
                       (parse_word("a1.a3"), parse_word("a2")): 1,
                       (parse_word("a1"), parse_word("a2.a3")): 1,
                       (parse_word("a3"), parse_word("a1.a2")): 1})
    ch.equal("linearized-delta_m(a1a2a3)", delta_m_linearized(a123), expected_dm3)

    a1234 = parse_word("a1.a2.a3.a4")
    expected_dm4 = lc({(parse_word("a2.a3.a4"), parse_word("a1")): 1,
                       (parse_word("a1.a3.a4"), parse_word("a2")): 1,
                       (parse_word("a1.a2.a4"), parse_word("a3")): 1,
                       (parse_word("a1.a2.a3"), parse_word("a4")): 1,
                       (parse_word("a1"), parse_word("a2.a3.a4")): 1,
                       (parse_word("a4"), parse_word("a1.a2.a3")): 1,
                       (parse_word("a1.a2"), parse_word("a3.a4")): 1,
                       (parse_word("a3.a4"), parse_word("a1.a2")): 1,
                       (parse_word("a1.a4"), parse_word("a2.a3")): 1})
    ch.equal("linearized-delta_m(a1a2a3a4)", delta_m_linearized(a1234), expected_dm4)

    expected_b = lc({(cb("a2.a3"), cb("a1")): 1,
                     (cb("a1.a2"), cb("a3")): 1,
                     (cb("a1|a3"), cb("a2")): 1,
                     (cb("a1"), cb("a2.a3")): 1,
                     (cb("a2"), cb("a1|a3")): 1,
                     (cb("a3"), cb("a1.a2")): 1})
    ch.equal("reduced-delta_b(a1a2a3)", delta_b(a123, reduced=True), expected_b)

    expected_f2 = lc({(cb("a1.a2"), cb("1")): 1,
                      (cb("a1"), cb("a2")): 1,
                      (cb("a2"), cb("a1")): 1,
                      (cb("1"), cb("a1.a2")): 1})
    ch.equal("delta_f(a1a2)", delta_f(a12), expected_f2)

    expected_f3 = lc({(cb("a1.a2.a3"), cb("1")): 1,
                      (cb("a1"), cb("a2.a3")): 1,
                      (cb("a1.a2"), cb("a3")): 1,
                      (cb("a1.a3"), cb("a2")): 1,
                      (cb("a2"), cb("a1.a3")): 1,
                      (cb("a3"), cb("a1.a2")): 1,
                      (cb("a2.a3"), cb("a1")): 1,
                      (cb("1"), cb("a1.a2.a3")): 1})
    ch.equal("delta_f(a1a2a3)", delta_f(a123), expected_f3)

    half4 = [("a1.a2.a3.a4", "1", 1), ("a1", "a2.a3.a4", 1),
             ("a1.a2", "a3.a4", 1), ("a1.a4", "a2.a3", 1),
             ("a1.a2.a3", "a4", 1), ("a1.a2.a4", "a3", 1),
             ("a1.a3.a4", "a2", 1), ("a1|a3", "a2.a4", 1),
             ("a1.a3", "a2|a4", 1), ("a1|a3", "a2|a4", -1)]
    terms: dict = {}
    for left, right, coeff in half4:
        terms[(cb(left), cb(right))] = Fraction(coeff)
        terms[(cb(right), cb(left))] = Fraction(coeff)
    ch.equal("delta_f(a1a2a3a4)", delta_f(a1234), lc(terms))

    ch.equal("alpha-singleton-n2", extract_alpha([(1,)], [(2,)]), Fraction(1))
    ch.equal("alpha-singleton-n3", extract_alpha([(1, 3)], [(2,)]), Fraction(1))
    ch.equal("alpha-pair-bars-n4",
             extract_alpha([(1,), (3,)], [(2,), (4,)]), Fraction(-1))

    # boundary conventions and the first half-shuffle axiom
    nu = counit_functional()
    f = random_functional(seed, "f")
    g = random_functional(seed, "g")
    h = random_functional(seed, "h")
    sample = word_list(2, min(max_degree, 4))
    ch.record("nu-prec-f-is-zero",
              all(half_shuffle(nu, f, "prec")(w) == 0 for w in sample))
    ch.record("nu-succ-f-is-f",
              all(half_shuffle(nu, f, "succ")(w) == f(w) for w in sample))
    lhs = half_shuffle(half_shuffle(f, g, "prec"), h, "prec")
    rhs = half_shuffle(f, convolve(g, h, "T"), "prec")
    ch.record("axiom-A1-spot", all(lhs(w) == rhs(w) for w in sample))
    return ch.checks


# ---------------------------------------------------------------------------
# coassoc: Hopf axioms for the four coproducts


def suite_coassoc(seed: int, max_degree: int, trials: int) -> list[CheckResult]:
    ch = Checker()
    rng = random.Random(seed)
    words = word_list(3, max_degree)
    bars2 = iter_bars(2, max(1, max_degree - 2), COMMUTATIVE)
    obars2 = iter_bars(2, max(1, max_degree - 2), ORDERED)
    bars3 = iter_bars(3, max(1, max_degree - 1), COMMUTATIVE)
    obars3 = iter_bars(3, max(1, max_degree - 1), ORDERED)

    for structure in ("T", "m", "b", "f"):
        bar_pool = obars2 if structure == "T" else bars2
        big_pool = obars3 if structure == "T" else bars3
        sample = rng.sample(big_pool, min(4 * trials, len(big_pool)))

        bad = next((w for w in words if _coassoc_defect(structure, w)), None)
        ch.record(f"coassoc-{structure}-words", bad is None, detail=render(bad) if bad else "")
        bad = next((b for b in bar_pool + sample if _coassoc_defect(structure, b)), None)
        ch.record(f"coassoc-{structure}-bars", bad is None, detail=render(bad) if bad else "")

        bad = next((w for w in words if not _counit_ok(structure, w)), None)
        ch.record(f"counit-{structure}-words", bad is None, detail=render(bad) if bad else "")
        bad = next((b for b in bar_pool if not _counit_ok(structure, b)), None)
        ch.record(f"counit-{structure}-bars", bad is None, detail=render(bad) if bad else "")

        bad = None
        for u in word_list(3, max_degree - 1):
            for v in word_list(3, max_degree - u.degree):
                if not _mult_ok(structure, u, v):
                    bad = (u, v)
                    break
            if bad:
                break
        ch.record(f"multiplicative-{structure}", bad is None,
                  detail="" if not bad else f"{render(bad[0])}, {render(bad[1])}")

    for structure in ("b", "f"):
        bad = next((w for w in words if _cocommutative_defect(structure, w)), None)
        ch.record(f"cocommutative-{structure}", bad is None,
                  detail=render(bad) if bad else "")
    # degree 2 is tau-symmetric once word legs are promoted; the first honest
    # witness is degree 3 (a2 (x) a1|a3 flips to a missing two-bar left leg)
    a123 = parse_word("a1.a2.a3")
    ch.record("non-cocommutative-T-m",
              bool(_cocommutative_defect("T", a123))
              and bool(_cocommutative_defect("m", a123)))

    adeg = min(max_degree, 5)
    unit1 = parse_word("a1")
    for structure in ("T", "m", "b", "f"):
        flavor = structure_flavor(structure)
        ch.equal(f"antipode-{structure}-degree1", antipode(unit1, structure),
                 -1 * LinComb.of(as_bar(unit1, flavor)))
        pool = list(all_words(3, 1, adeg)) + (obars2 if structure == "T" else bars2)
        bad = next((x for x in pool if not _antipode_ok(structure, x)), None)
        ch.record(f"antipode-identity-{structure}", bad is None,
                  detail=render(bad) if bad else "")
    return ch.checks


# ---------------------------------------------------------------------------
# shuffle-axioms


def suite_shuffle_axioms(seed: int, max_degree: int, trials: int) -> list[CheckResult]:
    ch = Checker()
    rng = random.Random(seed)
    words = word_list(2, max_degree)

    bad = None
    for t in range(trials):
        f = random_functional((seed, t), "f")
        g = random_functional((seed, t), "g")
        h = random_functional((seed, t), "h")
        gh = convolve(g, h, "T")
        fg = convolve(f, g, "T")
        a1l, a1r = half_shuffle(half_shuffle(f, g, "prec"), h, "prec"), \
            half_shuffle(f, gh, "prec")
        a2l, a2r = half_shuffle(half_shuffle(f, g, "succ"), h, "prec"), \
            half_shuffle(f, half_shuffle(g, h, "prec"), "succ")
        a3l, a3r = half_shuffle(f, half_shuffle(g, h, "succ"), "succ"), \
            half_shuffle(fg, h, "succ")
        split_l, split_r = half_shuffle(f, g, "prec"), half_shuffle(f, g, "succ")
        for w in words:
            if a1l(w) != a1r(w):
                bad = ("A1", t, w)
                break
            if a2l(w) != a2r(w):
                bad = ("A2", t, w)
                break
            if a3l(w) != a3r(w):
                bad = ("A3", t, w)
                break
            if split_l(w) + split_r(w) != fg(w):
                bad = ("splitting", t, w)
                break
        if bad:
            break
    ch.record("axioms-A1-A3-and-splitting", bad is None, detail=str(bad or ""))

    bad = None
    for t in range(trials):
        phi = random_state(2, max_degree, rng)
        chi = char_extend(phi)
        alpha = ichar(random_cumulant_table(2, max_degree, rng))
        for side in ("prec", "succ"):
            recon = half_exp(half_log(chi, side), side)
            back = half_log(half_exp(alpha, side), side)
            fixed = half_exp(alpha, side)
            for w in words:
                if recon(w) != chi(w):
                    bad = (side, "exp(log)", t, w)
                    break
                if back(w) != alpha(w):
                    bad = (side, "log(exp)", t, w)
                    break
                # fixed point: E = nu + alpha < E  (resp. E > alpha)
                pair = half_shuffle(alpha, fixed, "prec") if side == "prec" \
                    else half_shuffle(fixed, alpha, "succ")
                if fixed(w) != pair(w):
                    bad = (side, "fixed-point", t, w)
                    break
            if bad:
                break
        if bad:
            break
    ch.record("half-exp-log-inverse-pairs", bad is None, detail=str(bad or ""))

    nu = counit_functional()
    try:
        half_shuffle(nu, nu, "prec")
        ch.record("nu-prec-nu-undefined", False, "no error raised")
    except UndefinedBoundary:
        ch.record("nu-prec-nu-undefined", True)
    return ch.checks


# ---------------------------------------------------------------------------
# co-prelie


def _co_prelie_defect(w: Word) -> dict:
    """a_m - (id (x) tau) a_m for a_m = (dm (x) id) dm - (id (x) dm) dm.

    With the linearized coproduct writing the complement on the left leg, the
    co-pre-Lie symmetry of a_m is invariance under swapping the two legs that
    carry the nested pair, i.e. the last two (the displayed first-two-legs
    form belongs to the mirrored convention; a1a2a3 separates the two)."""
    acc: dict = {}
    for (l, r), c in delta_m_linearized(w).items():
        for (l1, r1), c1 in delta_m_linearized(l).items():
            for key, sign in (((l1, r1, r), c * c1), ((l1, r, r1), -c * c1)):
                val = acc.get(key, Fraction(0)) + sign
                if val:
                    acc[key] = val
                else:
                    del acc[key]
        for (l2, r2), c2 in delta_m_linearized(r).items():
            for key, sign in (((l, l2, r2), -c * c2), ((l, r2, l2), c * c2)):
                val = acc.get(key, Fraction(0)) + sign
                if val:
                    acc[key] = val
                else:
                    del acc[key]
    return acc


def suite_co_prelie(seed: int, max_degree: int, trials: int) -> list[CheckResult]:
    ch = Checker()
    rng = random.Random(seed)
    words = word_list(3, max_degree)
    bad = next((w for w in words if _co_prelie_defect(w)), None)
    ch.record("co-prelie-identity", bad is None, detail=render(bad) if bad else "")

    deg = min(max_degree, 5)
    small = word_list(2, deg)
    bad = None
    for t in range(trials):
        alpha = random_cumulant_table(2, deg, rng)
        beta = random_cumulant_table(2, deg, rng)
        gamma = random_cumulant_table(2, deg, rng)

        # the pre-Lie identity satisfied by the table product (associator
        # symmetric in its last two arguments, matching the co-pre-Lie
        # symmetry of the linearized coproduct)
        def assoc(x, y, z, w):
            return prelie_m(prelie_m(x, y), z).value(w) \
                - prelie_m(x, prelie_m(y, z)).value(w)

        for w in small:
            if assoc(alpha, beta, gamma, w) != assoc(alpha, gamma, beta, w):
                bad = ("prelie-identity", t, w)
                break
        if bad:
            break
        fa, fb = ichar(alpha), ichar(beta)
        conv_bracket = convolve(fa, fb, "m") - convolve(fb, fa, "m")
        tab_ab, tab_ba = prelie_m(alpha, beta), prelie_m(beta, alpha)
        for w in small:
            if conv_bracket(w) != tab_ab.value(w) - tab_ba.value(w):
                bad = ("bracket-coincidence", t, w)
                break
        if bad:
            break
    ch.record("prelie-and-bracket-coincidence", bad is None, detail=str(bad or ""))

    bad = None
    fdeg = min(max_degree, 4)
    fw = word_list(2, fdeg)
    for t in range(trials):
        f = random_functional((seed, t), "pf")
        g = random_functional((seed, t), "pg")
        h = random_functional((seed, t), "ph")
        lhs = prelie(prelie(f, g), h) - prelie(f, prelie(g, h))
        rhs = prelie(prelie(g, f), h) - prelie(g, prelie(f, h))
        if any(lhs(w) != rhs(w) for w in fw):
            bad = t
            break
    ch.record("shuffle-prelie-identity", bad is None, detail=str(bad or ""))
    return ch.checks


# ---------------------------------------------------------------------------
# group-laws


def suite_group_laws(seed: int, max_degree: int, trials: int) -> list[CheckResult]:
    ch = Checker()
    rng = random.Random(seed)
    for kind in ("monotone", "boolean", "free", "antimonotone"):
        bad = None
        for t in range(trials):
            phi = random_state(2, max_degree, rng)
            psi = random_state(2, max_degree, rng)
            report = up.group_law_check(kind, phi, psi, max_degree)
            if not report.ok:
                bad = (t, report.first_mismatch)
                break
        ch.record(f"group-law-{kind}", bad is None, detail=str(bad or ""))

    # monotone law also agrees with the star_m convolution of characters
    phi = random_state(2, max_degree, rng)
    psi = random_state(2, max_degree, rng)
    via_m = gm(convolve(char_extend(phi), char_extend(psi), "m"), 2, max_degree)
    via_t = gm(convolve(char_extend(phi), char_extend(psi), "T"), 2, max_degree)
    ch.equal("monotone-star_m-agrees", via_m, via_t)

    # non-commutativity witness at degree <= 3
    found = any(
        up.additive_convolve("monotone", phi, psi, w)
        != up.additive_convolve("monotone", psi, phi, w)
        for w in word_list(1, min(3, max_degree)))
    ch.record("monotone-noncommutative-witness", found)

    # role swap: antimonotone(phi,psi) = monotone(psi,phi) on swapped tags
    bad = None
    for w in word_list(2, min(3, max_degree)):
        for mask in range(1 << w.degree):
            tagged = up.TaggedWord.from_letters(
                (letter, 1 if mask >> i & 1 else 2)
                for i, letter in enumerate(w.letters))
            lhs = up.universal_product("antimonotone", phi, psi, tagged)
            rhs = up.universal_product("monotone", psi, phi, tagged.swapped())
            if lhs != rhs:
                bad = (w, mask)
                break
        if bad:
            break
    ch.record("antimonotone-role-swap", bad is None, detail=str(bad or ""))

    # associativity of the additive convolutions
    adeg = min(max_degree, 4)
    chi = random_state(2, adeg, rng)
    phi4 = random_state(2, adeg, rng)
    psi4 = random_state(2, adeg, rng)
    bad = None
    for kind in up.UNIVERSAL_KINDS:
        left = up.additive_convolve_table(
            kind, up.additive_convolve_table(kind, phi4, psi4), chi)
        right = up.additive_convolve_table(
            kind, phi4, up.additive_convolve_table(kind, psi4, chi))
        if left != right:
            bad = kind
            break
    ch.record("additive-associativity", bad is None, detail=str(bad or ""))

    # free evaluation independent of memoization
    mdeg = min(max_degree, 5)
    bad = next(
        (w for w in word_list(1, mdeg)
         if up.additive_convolve("free", phi, psi, w, memoize=True)
         != up.additive_convolve("free", phi, psi, w, memoize=False)),
        None)
    ch.record("free-memo-independent", bad is None, detail=render(bad) if bad else "")

    # Bernoulli anchors: first the cumulant-doubling oracle, then the pins
    bern = StateTable(1, 4, {Word((1,) * n): Fraction(1) for n in (2, 4)})
    a2, a4 = Word((1, 1)), Word((1, 1, 1, 1))
    free_table = up.additive_convolve_table("free", bern, bern)
    k = cm.moments_to_cumulants("free", bern)
    doubled = CumulantTable(1, 4, {w: 2 * v for w, v in k.items()})
    ch.equal("bernoulli-free-oracle", cm.cumulants_to_moments("free", doubled),
             free_table)
    ch.equal("bernoulli-free-m2-m4", (free_table.value(a2), free_table.value(a4)),
             (Fraction(2), Fraction(6)))
    bool_table = up.additive_convolve_table("boolean", bern, bern)
    b = cm.moments_to_cumulants("boolean", bern)
    doubled_b = CumulantTable(1, 4, {w: 2 * v for w, v in b.items()})
    ch.equal("bernoulli-boolean-oracle",
             cm.cumulants_to_moments("boolean", doubled_b), bool_table)
    ch.equal("bernoulli-boolean-m2-m4", (bool_table.value(a2), bool_table.value(a4)),
             (Fraction(2), Fraction(4)))
    return ch.checks


# ---------------------------------------------------------------------------
# cumulant-roundtrips


def suite_cumulant_roundtrips(seed: int, max_degree: int, trials: int) -> list[CheckResult]:
    ch = Checker()
    rng = random.Random(seed)

    bad = None
    for t in range(trials):
        phi = random_state(2, max_degree, rng)
        for kind in cm.CUMULANT_KINDS:
            if cm.cumulants_to_moments(kind, cm.moments_to_cumulants(kind, phi)) != phi:
                bad = (kind, t, "m->c->m")
                break
            table = random_cumulant_table(2, max_degree, rng)
            if cm.moments_to_cumulants(kind, cm.cumulants_to_moments(kind, table)) != table:
                bad = (kind, t, "c->m->c")
                break
        if bad:
            break
    ch.record("roundtrips-all-kinds", bad is None, detail=str(bad or ""))

    deg = min(max_degree, 5)
    bad = None
    for t in range(trials):
        phi = random_state(2, deg, rng)
        chi = char_extend(phi)
        free_cm = cm.moments_to_cumulants("free", phi)
        bool_cm = cm.moments_to_cumulants("boolean", phi)
        mono_cm = cm.moments_to_cumulants("monotone", phi)
        if igm(half_log(chi, "prec"), 2, deg) != free_cm:
            bad = (t, "free")
            break
        if igm(half_log(chi, "succ"), 2, deg) != bool_cm:
            bad = (t, "boolean")
            break
        rho = conv_log(chi, "T")
        if any(rho(w) != mono_cm.value(w) for w in all_words(2, 1, deg)):
            bad = (t, "monotone")
            break
    ch.record("functional-route-agreement", bad is None, detail=str(bad or ""))

    # additivity in cumulant coordinates
    bad = None
    phi = random_state(2, deg, rng)
    psi = random_state(2, deg, rng)
    for kind, conv in (("free", "free"), ("boolean", "boolean")):
        mixed = up.additive_convolve_table(conv, phi, psi, deg)
        lhs = cm.moments_to_cumulants(kind, mixed)
        k1 = cm.moments_to_cumulants(kind, phi)
        k2 = cm.moments_to_cumulants(kind, psi)
        target = CumulantTable(2, deg, {w: k1.value(w) + k2.value(w)
                                        for w in all_words(2, 1, deg)})
        if lhs != target:
            bad = kind
            break
    ch.record("free-boolean-cumulant-additivity", bad is None, detail=str(bad or ""))

    sym = StateTable(2, deg, {w: Fraction(rng.randint(-9, 9), rng.randint(1, 9))
                              for w in all_words(2, 1, deg)
                              if tuple(sorted(w.letters)) == w.letters})
    symmetrized = StateTable(2, deg, {w: sym.value(Word(sorted(w.letters)))
                                      for w in all_words(2, 1, deg)})
    sym2 = StateTable(2, deg, {w: Fraction(rng.randint(-9, 9), rng.randint(1, 9))
                               for w in all_words(2, 1, deg)
                               if tuple(sorted(w.letters)) == w.letters})
    symmetrized2 = StateTable(2, deg, {w: sym2.value(Word(sorted(w.letters)))
                                       for w in all_words(2, 1, deg)})
    conv = cm.classical_convolve(symmetrized, symmetrized2)
    c1 = cm.moments_to_cumulants("classical", symmetrized)
    c2 = cm.moments_to_cumulants("classical", symmetrized2)
    csum = cm.moments_to_cumulants("classical", conv)
    ch.record("classical-cumulant-additivity",
              all(csum.value(w) == c1.value(w) + c2.value(w)
                  for w in all_words(2, 1, deg)))

    # monotone cumulants add along convolution powers of a single state
    bad = None
    base = random_state(1, deg, rng)
    rho = cm.moments_to_cumulants("monotone", base)
    power = base
    for n in (2, 3):
        power = up.additive_convolve_table("monotone", power, base)
        rho_n = cm.moments_to_cumulants("monotone", power)
        if any(rho_n.value(w) != n * rho.value(w) for w in all_words(1, 1, deg)):
            bad = n
            break
    ch.record("monotone-power-additivity", bad is None, detail=str(bad or ""))

    # triangularity: cumulant(w) - moment(w) only involves lower degrees
    phi_t = random_state(2, deg, rng)
    bumped_vals = dict(phi_t.values)
    for w in all_words(2, deg, deg):
        bumped_vals[w] = phi_t.value(w) + Fraction(rng.randint(1, 5))
    bumped = StateTable(2, deg, bumped_vals)
    bad = None
    for kind in cm.CUMULANT_KINDS:
        ca = cm.moments_to_cumulants(kind, phi_t)
        cb_ = cm.moments_to_cumulants(kind, bumped)
        if any(ca.value(w) - phi_t.value(w) != cb_.value(w) - bumped.value(w)
               for w in all_words(2, deg, deg)):
            bad = kind
            break
    ch.record("triangularity", bad is None, detail=str(bad or ""))

    # the two Leonov-Shiryaev forms agree
    ldeg = min(max_degree, 5)
    phi_l = random_state(2, ldeg, rng)
    c_table = cm.moments_to_cumulants("classical", phi_l)
    bad = next((w for w in all_words(2, 1, ldeg)
                if cm.classical_cumulant_ordered(phi_l, w) != c_table.value(w)), None)
    ch.record("leonov-shiryaev-two-forms", bad is None,
              detail=render(bad) if bad else "")

    # numeric anchors
    mono = cm.moments_to_cumulants(
        "monotone", StateTable(1, 3, {Word((1,)): Fraction(1),
                                      Word((1, 1)): Fraction(1),
                                      Word((1, 1, 1)): Fraction(1)}))
    ch.equal("monotone-h3-anchor", mono.value(Word((1, 1, 1))), Fraction(0))
    m1, m2, m3 = (Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(3))
    mono_r = cm.moments_to_cumulants(
        "monotone", StateTable(1, 3, {Word((1,)): m1, Word((1, 1)): m2,
                                      Word((1, 1, 1)): m3}))
    ch.equal("monotone-h3-formula", mono_r.value(Word((1, 1, 1))),
             m3 - Fraction(5, 2) * m1 * m2 + Fraction(3, 2) * m1 ** 3)
    gauss = StateTable(1, 4, {Word((1, 1)): Fraction(1),
                              Word((1, 1, 1, 1)): Fraction(3)})
    ch.equal("gaussian-classical-m4",
             cm.classical_convolve(gauss, gauss).value(Word((1, 1, 1, 1))),
             Fraction(12))

    # cross conversion: semicircular free cumulants to boolean coordinates
    semi = CumulantTable(1, 4, {Word((1, 1)): Fraction(1)})
    to_bool = cm.cumulant_cross_convert("free", "boolean", semi)
    ch.equal("cross-convert-free-to-boolean",
             (to_bool.value(Word((1, 1))), to_bool.value(Word((1, 1, 1, 1)))),
             (Fraction(1), Fraction(1)))
    ch.equal("cross-convert-identity",
             cm.cumulant_cross_convert("monotone", "monotone", semi), semi)
    deg2 = Word((1, 2))
    phi_d = random_state(2, 2, rng)
    vals = {cm.moments_to_cumulants(kind, phi_d).value(deg2)
            for kind in ("free", "boolean", "monotone", "classical")}
    ch.record("degree-2-cumulants-agree", len(vals) == 1, detail=str(vals))
    return ch.checks


# ---------------------------------------------------------------------------
# lemma-powers


def suite_lemma_powers(seed: int, max_degree: int, trials: int) -> list[CheckResult]:
    ch = Checker()
    rng = random.Random(seed)

    bdeg = min(max_degree, 6)
    fdeg = min(max_degree, 5)
    bad = None
    for t in range(trials):
        table = random_cumulant_table(2, bdeg, rng)
        alpha = ichar(table)
        power = convolution_powers(alpha, "b")
        for w in all_words(2, 1, bdeg):
            n = w.degree
            for k in range(1, n + 1):
                expected = Fraction(0)
                for p in enumerate_partitions("interval", n):
                    if len(p) == k:
                        expected += cm._block_product(table, w, p)
                fact = 1
                for i in range(2, k + 1):
                    fact *= i
                if power(k)(w) != fact * expected:
                    bad = ("boolean", t, w, k)
                    break
            if bad:
                break
        if bad:
            break
    ch.record("boolean-power-lemma", bad is None, detail=str(bad or ""))

    bad = None
    for t in range(trials):
        table = random_cumulant_table(2, fdeg, rng)
        kappa = ichar(table)
        power = convolution_powers(kappa, "f")
        for w in all_words(2, 1, fdeg):
            n = w.degree
            for k in range(1, n + 1):
                expected = Fraction(0)
                for p in enumerate_partitions("noncrossing", n):
                    if len(p) == k:
                        expected += cm._block_product(table, w, p)
                fact = 1
                for i in range(2, k + 1):
                    fact *= i
                if power(k)(w) != fact * expected:
                    bad = ("free", t, w, k)
                    break
            if bad:
                break
        if bad:
            break
    ch.record("free-power-lemma", bad is None, detail=str(bad or ""))

    # exp^{star_m} equals the tree-factorial sum over noncrossing partitions
    bad = None
    for t in range(trials):
        phi = random_state(2, fdeg, rng)
        chi = char_extend(phi)
        rho = conv_log(chi, "m")
        rho_table = CumulantTable(2, fdeg, {w: rho(w) for w in all_words(2, 1, fdeg)})
        recon = conv_exp(rho, "m")
        for w in all_words(2, 1, fdeg):
            tree_sum = Fraction(0)
            for p in enumerate_partitions("noncrossing", w.degree):
                tree_sum += Fraction(1, tree_factorial(nesting_forest(p))) \
                    * cm._block_product(rho_table, w, p)
            if tree_sum != phi.value(w) or recon(w) != phi.value(w):
                bad = (t, w)
                break
        if bad:
            break
    ch.record("monotone-tree-factorial-sum", bad is None, detail=str(bad or ""))

    # the star_b / star_f logarithms recover the lattice cumulants
    phi = random_state(2, fdeg, rng)
    chi = char_extend(phi)
    bool_direct = cm.moments_to_cumulants("boolean", phi)
    free_direct = cm.moments_to_cumulants("free", phi)
    ch.equal("log-star_b-is-boolean-cumulants",
             igm(conv_log(chi, "b"), 2, fdeg), bool_direct)
    ch.equal("log-star_f-is-free-cumulants",
             igm(conv_log(chi, "f"), 2, fdeg), free_direct)
    return ch.checks


# ---------------------------------------------------------------------------
# fundamental-identity


def suite_fundamental_identity(seed: int, max_degree: int, trials: int) -> list[CheckResult]:
    ch = Checker()
    rng = random.Random(seed)
    words = word_list(2, max_degree)
    bars = iter_bars(2, min(max_degree, 4), ORDERED)

    bad = None
    for t in range(trials):
        phi = random_state(2, max_degree, rng)
        chi = char_extend(phi)
        rho = conv_log(chi, "T")
        kappa = half_log(chi, "prec")
        beta = half_log(chi, "succ")
        recon = (conv_exp(rho, "T"), half_exp(kappa, "prec"), half_exp(beta, "succ"))
        for w in words:
            target = chi(w)
            if any(r(w) != target for r in recon):
                bad = (t, w)
                break
        if bad:
            break
        long_bars = [b for b in bars if b.length >= 2]
        if any(kappa(b) != 0 or beta(b) != 0 or rho(b) != 0 for b in long_bars):
            bad = (t, "not-infinitesimal")
            break
    ch.record("fundamental-identity-MCrels", bad is None, detail=str(bad or ""))

    phi = random_state(2, max_degree, rng)
    chi = char_extend(phi)
    inv_series = invert(chi, "T", method="series")
    inv_anti = invert(chi, "T", method="antipode")
    pool = words + bars
    ch.record("invert-series-vs-antipode",
              all(inv_series(x) == inv_anti(x) for x in pool))
    ch.record("invert-involution",
              all(invert(inv_series, "T")(w) == chi(w) for w in words))
    unit_conv = convolve(chi, inv_series, "T")
    ch.record("invert-defining-property",
              all(unit_conv(w) == 0 for w in words) and unit_conv(EMPTY_WORD) == 1)
    return ch.checks


SUITES: dict[str, Callable[[int, int, int], list[CheckResult]]] = {
    "paper-examples": suite_paper_examples,
    "coassoc": suite_coassoc,
    "shuffle-axioms": suite_shuffle_axioms,
    "co-prelie": suite_co_prelie,
    "group-laws": suite_group_laws,
    "cumulant-roundtrips": suite_cumulant_roundtrips,
    "lemma-powers": suite_lemma_powers,
    "fundamental-identity": suite_fundamental_identity,
}


def run_suite(name: str, seed: int = 0, max_degree: int = 4,
              trials: int = 3) -> RunReport:
    """Run one named suite (or "all") and collect per-check results."""
    if name == "all":
        report = RunReport("all", seed, max_degree, trials)
        for suite_name, fn in SUITES.items():
            for check in fn(seed, max_degree, trials):
                check.name = f"{suite_name}/{check.name}"
                report.checks.append(check)
        return report
    if name not in SUITES:
        raise UnknownSuite(
            f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
    report = RunReport(name, seed, max_degree, trials)
    report.checks.extend(SUITES[name](seed, max_degree, trials))
    return report
