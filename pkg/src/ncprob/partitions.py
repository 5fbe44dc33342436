"""Partition combinatorics: set / interval / noncrossing partitions of [n],
nesting forests, tree factorials, the noncrossing Möbius function, and the
adapted splittings indexing the free coproduct.

Ground sets are 1-indexed ({1,...,n}); blocks are stored as increasing tuples
sorted by minimal element, which makes every partition value canonical and
hashable.  Enumeration follows restricted-growth-string order, with the
noncrossing and interval families obtained by filtering, so golden tests see
one deterministic order everywhere.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Optional, Sequence

from .errors import CapExceeded, NotAdapted

ENUMERATION_CAP = 10

Block = tuple[int, ...]


class SetPartition:
    """A partition of {1,...,n} into disjoint non-empty blocks."""

    __slots__ = ("n", "blocks", "_hash")

    def __init__(self, n: int, blocks: Iterable[Iterable[int]]):
        blocks = tuple(sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0]))
        seen = [i for b in blocks for i in b]
        if sorted(seen) != list(range(1, n + 1)):
            raise ValueError(f"blocks {blocks} do not partition [1..{n}]")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "blocks", blocks)
        object.__setattr__(self, "_hash", hash(("P", n, blocks)))

    def __setattr__(self, *args):
        raise AttributeError("SetPartition is immutable")

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return (
            isinstance(other, SetPartition)
            and self.n == other.n
            and self.blocks == other.blocks
        )

    def __len__(self) -> int:
        return len(self.blocks)

    def block_of(self, i: int) -> Block:
        for b in self.blocks:
            if i in b:
                return b
        raise ValueError(f"{i} not in ground set")

    def is_interval(self) -> bool:
        return all(b[-1] - b[0] + 1 == len(b) for b in self.blocks)

    def is_noncrossing(self) -> bool:
        return blocks_noncrossing(self.blocks)

    def refines(self, other: "SetPartition") -> bool:
        """True iff every block of self is contained in a block of other."""
        owner = {}
        for j, b in enumerate(other.blocks):
            for i in b:
                owner[i] = j
        return all(len({owner[i] for i in b}) == 1 for b in self.blocks)

    def __repr__(self):
        return render_partition(self)


def render_partition(p: SetPartition) -> str:
    return "/".join("{" + ",".join(str(i) for i in b) + "}" for b in p.blocks)


def blocks_noncrossing(blocks: Sequence[Block]) -> bool:
    """Stack scan: a family of disjoint blocks is noncrossing iff open blocks
    close like balanced parentheses when the ground set is read left to right.
    """
    if not blocks:
        return True
    owner: dict[int, int] = {}
    last: dict[int, int] = {}
    for j, b in enumerate(blocks):
        for i in b:
            owner[i] = j
        last[j] = b[-1]
    stack: list[int] = []
    for i in sorted(owner):
        j = owner[i]
        if not stack or stack[-1] != j:
            if j in stack:
                return False
            stack.append(j)
        if last[j] == i:
            stack.pop()
    return True


def connected_components(subset: Iterable[int], n: int) -> tuple[tuple[Block, ...], tuple[Block, ...]]:
    """Maximal runs of S and of [n]-S, each ordered by minimal element.

    Returns (S_1,...,S_p), (J_1,...,J_k) as in the subset expansion of the
    coproducts: for n=7 and S={2,3,6} the runs are ({2,3},{6}) and
    ({1},{4,5},{7}).
    """
    s = set(subset)
    if any(i < 1 or i > n for i in s):
        raise ValueError(f"subset {sorted(s)} not inside [1..{n}]")
    s_runs: list[Block] = []
    j_runs: list[Block] = []
    run: list[int] = []
    side: Optional[bool] = None
    for i in range(1, n + 1):
        here = i in s
        if side is None or here != side:
            if run:
                (s_runs if side else j_runs).append(tuple(run))
            run, side = [], here
        run.append(i)
    if run:
        (s_runs if side else j_runs).append(tuple(run))
    return tuple(s_runs), tuple(j_runs)


def _rgs_partitions(ground: Sequence[int]) -> Iterator[tuple[Block, ...]]:
    """All partitions of an ordered ground list, in restricted-growth order."""
    m = len(ground)
    if m == 0:
        yield ()
        return

    def rec(i: int, rgs: list[int], top: int):
        if i == m:
            blocks: list[list[int]] = [[] for _ in range(top + 1)]
            for pos, label in enumerate(rgs):
                blocks[label].append(ground[pos])
            yield tuple(tuple(b) for b in blocks)
            return
        for label in range(top + 2):
            rgs.append(label)
            yield from rec(i + 1, rgs, max(top, label))
            rgs.pop()

    yield from rec(1, [0], 0)


def partitions_of(ground: Sequence[int]) -> list[tuple[Block, ...]]:
    """Partitions of an arbitrary increasing ground list (blocks unsorted-by-min
    come out in RGS order, with block order fixed by first occurrence)."""
    return list(_rgs_partitions(tuple(ground)))


def enumerate_partitions(kind: str, n: int, cap: int = ENUMERATION_CAP) -> list[SetPartition]:
    """Complete enumeration of set / noncrossing / interval partitions of [n]."""
    if not 1 <= n <= cap:
        raise CapExceeded(f"n={n} outside [1..{cap}]")
    out = []
    for blocks in _rgs_partitions(range(1, n + 1)):
        p = SetPartition(n, blocks)
        if kind == "set":
            out.append(p)
        elif kind == "noncrossing":
            if p.is_noncrossing():
                out.append(p)
        elif kind == "interval":
            if p.is_interval():
                out.append(p)
        else:
            raise ValueError(f"unknown partition kind {kind!r}")
    return out


class NestingForest:
    """Rooted forest on the blocks of a noncrossing partition.

    parent[i] is the index (into blocks) of the innermost block strictly
    enclosing blocks[i], or None for roots.
    """

    __slots__ = ("blocks", "parent")

    def __init__(self, blocks: tuple[Block, ...], parent: tuple[Optional[int], ...]):
        object.__setattr__(self, "blocks", blocks)
        object.__setattr__(self, "parent", parent)

    def __setattr__(self, *args):
        raise AttributeError("NestingForest is immutable")

    def children(self, i: Optional[int]) -> list[int]:
        return [j for j, p in enumerate(self.parent) if p == i]

    def subtree_size(self, i: int) -> int:
        return 1 + sum(self.subtree_size(j) for j in self.children(i))


def nesting_forest(p: SetPartition) -> NestingForest:
    """Forest of blocks ordered by containment of spans (p must be noncrossing)."""
    if not p.is_noncrossing():
        raise ValueError(f"{p} is crossing; nesting forest undefined")
    blocks = p.blocks
    parent: list[Optional[int]] = []
    for i, b in enumerate(blocks):
        best = None
        for j, c in enumerate(blocks):
            if j == i:
                continue
            if c[0] < b[0] and b[-1] < c[-1]:
                if best is None or blocks[best][0] < c[0]:
                    best = j
        parent.append(best)
    return NestingForest(blocks, tuple(parent))


def tree_factorial(forest: NestingForest) -> int:
    """Product over all nodes of the node count of the subtree below them."""
    out = 1
    for i in range(len(forest.blocks)):
        out *= forest.subtree_size(i)
    return out


@lru_cache(maxsize=None)
def _nc_mobius_table(n: int) -> dict[SetPartition, Fraction]:
    """mu_NC(p, 1_n) for every p in NC_n, by downward lattice recursion."""
    ncs = enumerate_partitions("noncrossing", n)
    ncs.sort(key=len)  # coarse (few blocks) first
    top = SetPartition(n, [tuple(range(1, n + 1))])
    table: dict[SetPartition, Fraction] = {}
    for p in ncs:
        if p == top:
            table[p] = Fraction(1)
            continue
        acc = Fraction(0)
        for q in ncs:
            if q != p and p.refines(q):
                acc += table[q]
        table[p] = -acc
    return table


def mobius_nc(p: SetPartition, method: str = "lattice") -> Fraction:
    """Möbius value mu_NC(p, 1_n) in the noncrossing partition lattice.

    method="lattice" sums the recursion over all coarsenings; method="kreweras"
    uses multiplicativity over the Kreweras complement.  The two agree (tested).
    """
    if not p.is_noncrossing():
        raise ValueError(f"{p} is crossing")
    if method == "lattice":
        return _nc_mobius_table(p.n)[p]
    if method == "kreweras":
        out = Fraction(1)
        for b in kreweras_complement(p).blocks:
            m = len(b)
            out *= Fraction((-1) ** (m - 1) * math.comb(2 * (m - 1), m - 1), m)
        return out
    raise ValueError(f"unknown method {method!r}")


def kreweras_complement(p: SetPartition) -> SetPartition:
    """Kreweras complement: cycles of sigma^{-1} * (1 2 ... n), where sigma has
    the blocks of p as cycles in increasing order."""
    n = p.n
    sigma = {}
    for b in p.blocks:
        for i, j in zip(b, b[1:] + (b[0],)):
            sigma[i] = j
    sigma_inv = {v: k for k, v in sigma.items()}
    perm = {i: sigma_inv[i % n + 1] for i in range(1, n + 1)}
    seen, blocks = set(), []
    for i in range(1, n + 1):
        if i in seen:
            continue
        cyc, j = [], i
        while j not in seen:
            seen.add(j)
            cyc.append(j)
            j = perm[j]
        blocks.append(tuple(sorted(cyc)))
    return SetPartition(n, blocks)


class ANCSplitting:
    """A noncrossing partition of [n] split into a partition pi1 of S and a
    partition pi2 of [n]-S satisfying the boundary alternation condition.
    The universal coefficient (alpha) is attached by the hopf module."""

    __slots__ = ("n", "pi1", "pi2", "subset")

    def __init__(self, n: int, pi1: Iterable[Block], pi2: Iterable[Block]):
        pi1 = tuple(sorted((tuple(sorted(b)) for b in pi1), key=lambda b: b[0]))
        pi2 = tuple(sorted((tuple(sorted(b)) for b in pi2), key=lambda b: b[0]))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "pi1", pi1)
        object.__setattr__(self, "pi2", pi2)
        object.__setattr__(self, "subset", frozenset(i for b in pi1 for i in b))

    def __setattr__(self, *args):
        raise AttributeError("ANCSplitting is immutable")

    def union(self) -> SetPartition:
        return SetPartition(self.n, self.pi1 + self.pi2)

    def __eq__(self, other):
        return (
            isinstance(other, ANCSplitting)
            and (self.n, self.pi1, self.pi2) == (other.n, other.pi1, other.pi2)
        )

    def __hash__(self):
        return hash(("ANC", self.n, self.pi1, self.pi2))

    def __repr__(self):
        one = "/".join("{" + ",".join(map(str, b)) + "}" for b in self.pi1) or "{}"
        two = "/".join("{" + ",".join(map(str, b)) + "}" for b in self.pi2) or "{}"
        return f"({one} ; {two})"


def _alternation_ok(n: int, pi1: Sequence[Block], pi2: Sequence[Block]) -> bool:
    # For 1 <= i < n: if i sits in a block B of pi^p then either i+1 in B, or
    # i+1 lies in a block of the other part.  Taken literally: consecutive
    # elements on the same side must share a block.
    side = {}
    block_at = {}
    for b in pi1:
        for i in b:
            side[i], block_at[i] = 1, b
    for b in pi2:
        for i in b:
            side[i], block_at[i] = 2, b
    for i in range(1, n):
        if side[i] == side[i + 1] and block_at[i] is not block_at[i + 1]:
            return False
    return True


def is_adapted(n: int, pi1: Sequence[Block], pi2: Sequence[Block], subset: Iterable[int]) -> bool:
    s = set(subset)
    covered1 = {i for b in pi1 for i in b}
    covered2 = {i for b in pi2 for i in b}
    if covered1 != s or covered2 != set(range(1, n + 1)) - s:
        return False
    if not blocks_noncrossing(tuple(pi1) + tuple(pi2)):
        return False
    return _alternation_ok(n, pi1, pi2)


def adapted_splittings(subset: Iterable[int], n: int) -> list[ANCSplitting]:
    """All (pi1, pi2) in ANC_n^S: pi1 partitions S, pi2 partitions [n]-S,
    their union is noncrossing, and the alternation condition holds."""
    s = sorted(set(subset))
    if any(i < 1 or i > n for i in s):
        raise NotAdapted(f"subset {s} not inside [1..{n}]")
    comp = [i for i in range(1, n + 1) if i not in set(s)]
    out = []
    for pi1 in _rgs_partitions(s):
        for pi2 in _rgs_partitions(comp):
            if is_adapted(n, pi1, pi2, s):
                out.append(ANCSplitting(n, pi1, pi2))
    return out


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)
