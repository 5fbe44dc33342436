"""Moment-cumulant transforms over the four partition lattices.

classical   all set partitions, weights (-1)^(k-1)(k-1)! (multivariate
            Leonov-Shiryaev) and plain block sums back
free        noncrossing partitions with the NC Möbius function
boolean     interval partitions with signs (-1)^(k-1)
monotone    noncrossing partitions weighted by inverse tree factorials;
            cumulants recovered by triangular inversion degree by degree

All tables are word-indexed (fully multivariate).  The classical additive
convolution of symmetric tables is included as a benchmark.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations

from .core import Word, subword
from .errors import KindMismatch, NotSymmetric
from .functionals import CumulantTable, StateTable, all_words
from .partitions import (
    SetPartition,
    enumerate_partitions,
    mobius_nc,
    nesting_forest,
    tree_factorial,
)

CUMULANT_KINDS = ("classical", "free", "boolean", "monotone")


def _block_product(table, w: Word, partition: SetPartition) -> Fraction:
    out = Fraction(1)
    for block in partition.blocks:
        out *= table.value(subword(w, block))
    return out


def _check_kind(kind: str):
    if kind not in CUMULANT_KINDS:
        raise KindMismatch(f"unknown cumulant kind {kind!r}")


def moments_to_cumulants(kind: str, state: StateTable) -> CumulantTable:
    """Cumulants of all words up to the table degree.

    classical/free/boolean are direct Möbius-weighted lattice sums; monotone
    inverts Phi(w) = sum over NC of h_pi / t(pi)! degree by degree.
    """
    _check_kind(kind)
    values: dict[Word, Fraction] = {}
    out = CumulantTable(state.letters, state.max_degree, {})
    for w in all_words(state.letters, 1, state.max_degree):
        n = w.degree
        if kind == "classical":
            acc = Fraction(0)
            for p in enumerate_partitions("set", n):
                k = len(p)
                acc += Fraction((-1) ** (k - 1)) * _factorial(k - 1) \
                    * _block_product(state, w, p)
        elif kind == "free":
            acc = Fraction(0)
            for p in enumerate_partitions("noncrossing", n):
                acc += mobius_nc(p) * _block_product(state, w, p)
        elif kind == "boolean":
            acc = Fraction(0)
            for p in enumerate_partitions("interval", n):
                acc += Fraction((-1) ** (len(p) - 1)) * _block_product(state, w, p)
        else:  # monotone: h(w) = phi(w) - sum over pi != 1_n of h_pi / t(pi)!
            acc = state.value(w)
            for p in enumerate_partitions("noncrossing", n):
                if len(p) == 1:
                    continue
                acc -= Fraction(1, tree_factorial(nesting_forest(p))) \
                    * _block_product(out, w, p)
        values[w] = acc
        out.values[w] = acc  # lower degrees feed the monotone inversion
    return CumulantTable(state.letters, state.max_degree, values)


def cumulants_to_moments(kind: str, table: CumulantTable) -> StateTable:
    """Forward lattice sums: the exact inverse of moments_to_cumulants."""
    _check_kind(kind)
    values: dict[Word, Fraction] = {}
    for w in all_words(table.letters, 1, table.max_degree):
        n = w.degree
        if kind == "classical":
            parts = enumerate_partitions("set", n)
            weight = lambda p: Fraction(1)
        elif kind == "free":
            parts = enumerate_partitions("noncrossing", n)
            weight = lambda p: Fraction(1)
        elif kind == "boolean":
            parts = enumerate_partitions("interval", n)
            weight = lambda p: Fraction(1)
        else:
            parts = enumerate_partitions("noncrossing", n)
            weight = lambda p: Fraction(1, tree_factorial(nesting_forest(p)))
        acc = Fraction(0)
        for p in parts:
            acc += weight(p) * _block_product(table, w, p)
        values[w] = acc
    return StateTable(table.letters, table.max_degree, values)


def _factorial(k: int) -> Fraction:
    out = 1
    for i in range(2, k + 1):
        out *= i
    return Fraction(out)


def classical_cumulant_ordered(state: StateTable, w: Word) -> Fraction:
    """The ordered-partition form of the multivariate classical cumulant:
    sum over ordered set partitions with weights (-1)^(k-1)/k.  Kept as an
    independent route against the (k-1)!-weighted unordered sum."""
    n = w.degree
    acc = Fraction(0)
    for p in enumerate_partitions("set", n):
        k = len(p)
        block_value = _block_product(state, w, p)
        for _ in permutations(range(k)):  # each ordering contributes once
            acc += Fraction((-1) ** (k - 1), k) * block_value
    return acc


def is_symmetric(state: StateTable) -> bool:
    """Whether moments are invariant under reordering letters within words."""
    for w in all_words(state.letters, 1, state.max_degree):
        if state.value(w) != state.value(Word(sorted(w.letters))):
            return False
    return True


def classical_convolve(phi: StateTable, psi: StateTable) -> StateTable:
    """Classical additive convolution via the subset expansion of
    (a_1 (x) 1 + 1 (x) a_1)...(a_n (x) 1 + 1 (x) a_n); inputs must be states
    on a commutative polynomial algebra (symmetric word tables)."""
    for table in (phi, psi):
        if not is_symmetric(table):
            raise NotSymmetric("classical convolution needs symmetric moment tables")
    letters = max(phi.letters, psi.letters)
    max_degree = min(phi.max_degree, psi.max_degree)
    values = {}
    for w in all_words(letters, 1, max_degree):
        n = w.degree
        acc = Fraction(0)
        for mask in range(1 << n):
            s = [i + 1 for i in range(n) if mask >> i & 1]
            rest = [i + 1 for i in range(n) if not mask >> i & 1]
            acc += phi.value(subword(w, s)) * psi.value(subword(w, rest))
        values[w] = acc
    return StateTable(letters, max_degree, values)


def cumulant_cross_convert(from_kind: str, to_kind: str,
                           table: CumulantTable) -> CumulantTable:
    """Convert between free/boolean/monotone cumulant coordinates by routing
    through the moment table."""
    for kind in (from_kind, to_kind):
        if kind not in ("free", "boolean", "monotone"):
            raise KindMismatch(f"cross conversion only between free/boolean/"
                               f"monotone, got {kind!r}")
    if from_kind == to_kind:
        return CumulantTable(table.letters, table.max_degree, dict(table.values))
    return moments_to_cumulants(to_kind, cumulants_to_moments(from_kind, table))
