"""Universal products (Boolean, free, monotone, antimonotone) on the free
product of two tagged copies of the tensor algebra, the additive convolutions
obtained by doubling every letter, and the group-law equivalence checks
against the Hopf-side constructions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .core import Word
from .errors import KindMismatch
from .functionals import (
    StateTable,
    all_words,
    char_extend,
    convolve,
    gm,
    half_exp,
    half_log,
)
from .hopf import TaggedRuns, merge_tagged_runs

UNIVERSAL_KINDS = ("boolean", "free", "monotone", "antimonotone")


class TaggedWord:
    """A word in the free product of two copies of T+(A): maximal same-tag
    runs are collapsed, so adjacent runs always carry different tags."""

    __slots__ = ("runs", "_hash")

    def __init__(self, runs: Iterable[tuple[Word, int]]):
        runs = merge_tagged_runs(runs)
        if any(tag not in (1, 2) for _, tag in runs):
            raise ValueError("tags must be 1 or 2")
        object.__setattr__(self, "runs", runs)
        object.__setattr__(self, "_hash", hash(("TW", runs)))

    def __setattr__(self, *args):
        raise AttributeError("TaggedWord is immutable")

    @classmethod
    def from_letters(cls, pairs: Iterable[tuple[int, int]]) -> "TaggedWord":
        return cls((Word((letter,)), tag) for letter, tag in pairs)

    def swapped(self) -> "TaggedWord":
        return TaggedWord((w, 3 - t) for w, t in self.runs)

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return isinstance(other, TaggedWord) and self.runs == other.runs

    def __len__(self):
        return len(self.runs)

    def __repr__(self):
        return "".join(f"[{w!r}]{'¹' if t == 1 else '²'}" for w, t in self.runs) or "1"


def normalize(pairs: Iterable[tuple[int, int]]) -> TaggedWord:
    """Alternating normal form of a raw (letter, tag) sequence."""
    return TaggedWord.from_letters(pairs)


class _FreeProductEvaluator:
    """Recursive evaluation of the universal free product on alternating
    tagged words, after the inductive definition: sum over proper subsets I
    of positions with sign (-1)^(m-|I|+1), the positions outside I factoring
    through phi_1/phi_2 and the inside re-normalized before recursing."""

    def __init__(self, phi1: StateTable, phi2: StateTable, memoize: bool = True):
        self.phi1 = phi1
        self.phi2 = phi2
        self.memo: Optional[dict[TaggedRuns, Fraction]] = {} if memoize else None

    def value(self, runs: TaggedRuns) -> Fraction:
        if not runs:
            return Fraction(1)
        if self.memo is not None:
            hit = self.memo.get(runs)
            if hit is not None:
                return hit
        m = len(runs)
        acc = Fraction(0)
        for mask in range((1 << m) - 1):
            inside = [runs[i] for i in range(m) if mask >> i & 1]
            sign = (-1) ** (m - len(inside) + 1)
            term = sign * self.value(merge_tagged_runs(inside))
            for i in range(m):
                if not mask >> i & 1:
                    w, tag = runs[i]
                    term *= self.phi1.value(w) if tag == 1 else self.phi2.value(w)
            acc += term
        if self.memo is not None:
            self.memo[runs] = acc
        return acc


def universal_product(kind: str, phi1: StateTable, phi2: StateTable,
                      w: TaggedWord, memoize: bool = True) -> Fraction:
    """Evaluate the chosen universal product on an alternating tagged word."""
    runs = w.runs
    if kind == "boolean":
        out = Fraction(1)
        for word, tag in runs:
            out *= phi1.value(word) if tag == 1 else phi2.value(word)
        return out
    if kind == "monotone":
        glued = Word(tuple(i for word, tag in runs if tag == 1 for i in word.letters))
        out = phi1.value(glued)
        for word, tag in runs:
            if tag == 2:
                out *= phi2.value(word)
        return out
    if kind == "antimonotone":
        glued = Word(tuple(i for word, tag in runs if tag == 2 for i in word.letters))
        out = phi2.value(glued)
        for word, tag in runs:
            if tag == 1:
                out *= phi1.value(word)
        return out
    if kind == "free":
        return _FreeProductEvaluator(phi1, phi2, memoize).value(runs)
    raise KindMismatch(f"unknown universal product kind {kind!r}")


def additive_convolve(kind: str, phi: StateTable, psi: StateTable, w: Word,
                      memoize: bool = True) -> Fraction:
    """Moment of the chosen additive convolution at w: double every letter
    a -> a' + a'' and expand the 2^n tag assignments."""
    n = w.degree
    if kind not in UNIVERSAL_KINDS:
        raise KindMismatch(f"unknown universal product kind {kind!r}")
    evaluator = _FreeProductEvaluator(phi, psi, memoize) if kind == "free" else None
    acc = Fraction(0)
    for mask in range(1 << n):
        tagged = TaggedWord.from_letters(
            (letter, 1 if mask >> i & 1 else 2) for i, letter in enumerate(w.letters))
        if evaluator is not None:
            acc += evaluator.value(tagged.runs)
        else:
            acc += universal_product(kind, phi, psi, tagged)
    return acc


def additive_convolve_table(kind: str, phi: StateTable, psi: StateTable,
                            max_degree: Optional[int] = None) -> StateTable:
    """The full convolved moment table up to max_degree."""
    letters = max(phi.letters, psi.letters)
    if max_degree is None:
        max_degree = min(phi.max_degree, psi.max_degree)
    evaluator = _FreeProductEvaluator(phi, psi) if kind == "free" else None
    values = {}
    for w in all_words(letters, 1, max_degree):
        if evaluator is not None:
            acc = Fraction(0)
            for mask in range(1 << w.degree):
                tagged = TaggedWord.from_letters(
                    (letter, 1 if mask >> i & 1 else 2)
                    for i, letter in enumerate(w.letters))
                acc += evaluator.value(tagged.runs)
            values[w] = acc
        else:
            values[w] = additive_convolve(kind, phi, psi, w)
    return StateTable(letters, max_degree, values)


@dataclass(frozen=True)
class GroupLawReport:
    kind: str
    max_degree: int
    words_checked: int
    first_mismatch: Optional[tuple[Word, Fraction, Fraction]] = None

    @property
    def ok(self) -> bool:
        return self.first_mismatch is None


def hopf_side_law(kind: str, phi: StateTable, psi: StateTable,
                  max_degree: int) -> StateTable:
    """The group law computed on the Hopf/shuffle side:

    monotone      gm(char(phi) * char(psi))
    boolean       gm(E_succ(L_succ(char phi) + L_succ(char psi)))
    free          gm(E_prec(L_prec(char phi) + L_prec(char psi)))
    antimonotone  gm(char(psi) * char(phi))   (role swap of the two copies)
    """
    letters = max(phi.letters, psi.letters)
    f, g = char_extend(phi), char_extend(psi)
    if kind == "monotone":
        law = convolve(f, g, "T")
    elif kind == "antimonotone":
        law = convolve(g, f, "T")
    elif kind == "boolean":
        law = half_exp(half_log(f, "succ") + half_log(g, "succ"), "succ")
    elif kind == "free":
        law = half_exp(half_log(f, "prec") + half_log(g, "prec"), "prec")
    else:
        raise KindMismatch(f"unknown universal product kind {kind!r}")
    return gm(law, letters, max_degree)


def group_law_check(kind: str, phi: StateTable, psi: StateTable,
                    max_degree: int) -> GroupLawReport:
    """Compare the additive universal-product convolution against the
    Hopf-side law on every word up to max_degree; stop at the first mismatch."""
    hopf_table = hopf_side_law(kind, phi, psi, max_degree)
    letters = max(phi.letters, psi.letters)
    evaluator = _FreeProductEvaluator(phi, psi) if kind == "free" else None
    checked = 0
    for w in all_words(letters, 1, max_degree):
        if evaluator is not None:
            additive = Fraction(0)
            for mask in range(1 << w.degree):
                tagged = TaggedWord.from_letters(
                    (letter, 1 if mask >> i & 1 else 2)
                    for i, letter in enumerate(w.letters))
                additive += evaluator.value(tagged.runs)
        else:
            additive = additive_convolve(kind, phi, psi, w)
        checked += 1
        if additive != hopf_table.value(w):
            return GroupLawReport(kind, max_degree, checked,
                                  (w, additive, hopf_table.value(w)))
    return GroupLawReport(kind, max_degree, checked)
