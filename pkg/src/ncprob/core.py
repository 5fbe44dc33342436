"""Symbolic substrate: words, bar monomials, sparse rational linear combinations.

Basis elements are immutable and hash-cached, so they can be used freely as
dictionary keys in coproduct expansions.  The ground field is the exact
rationals (fractions.Fraction); nothing in the package ever touches floats.

Text syntax (used by the CLI and by golden tests): letters render as ``a<k>``,
concatenation with ``.``, bars with ``|``, ordered bar monomials in square
brackets, and the unit of every algebra as ``1``.  Examples::

    a1.a2.a3          word of degree 3
    a1.a2|a3          commutative bar monomial in S(T+(A))
    [a2|a1]           ordered bar monomial in T(T+(A))
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Mapping, Union

from .errors import BasisMismatch, IndexOutOfRange, MixedFlavor, ParseError

Rat = Fraction

ORDERED = "ordered"
COMMUTATIVE = "commutative"

# Basis kinds for LinComb (pairs/triples of these describe tensor legs).
WORD = "word"
OBAR = "obar"
CBAR = "cbar"


class Word:
    """An element of the word basis of T(A): a finite sequence of letters.

    Letters are positive integers (index 0 is reserved for the algebra unit
    and never occurs inside a word).  The empty word is the unit of T(A).
    """

    __slots__ = ("letters", "_hash")

    kind = WORD

    def __init__(self, letters: Iterable[int] = ()):
        if type(letters) is not tuple:
            letters = tuple(int(i) for i in letters)
        if letters and min(letters) < 1:
            raise ValueError(f"word letters must be >= 1, got {letters}")
        object.__setattr__(self, "letters", letters)
        object.__setattr__(self, "_hash", hash(("W", letters)))

    def __setattr__(self, *args):  # immutable
        raise AttributeError("Word is immutable")

    @property
    def degree(self) -> int:
        return len(self.letters)

    def is_unit(self) -> bool:
        return not self.letters

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self.letters == other.letters

    def __lt__(self, other: "Word") -> bool:
        return (self.degree, self.letters) < (other.degree, other.letters)

    def __repr__(self) -> str:
        return render(self)


class BarMonomial:
    """A product w_1|...|w_n of non-empty words.

    flavor=ORDERED lives in T(T+(A)) (the concatenation product, often written
    with brackets); flavor=COMMUTATIVE lives in S(T+(A)) and is stored in
    canonical order (sort key: degree, then letter indices).  The empty
    monomial is the unit of the respective algebra.
    """

    __slots__ = ("words", "flavor", "kind", "_hash")

    def __init__(self, words: Iterable[Word] = (), flavor: str = COMMUTATIVE):
        words = tuple(words)
        if any(w.is_unit() for w in words):
            raise ValueError("bar monomials may not contain the empty word")
        if flavor == COMMUTATIVE:
            words = tuple(sorted(words, key=lambda w: (w.degree, w.letters)))
            kind = CBAR
        elif flavor == ORDERED:
            kind = OBAR
        else:
            raise ValueError(f"unknown flavor {flavor!r}")
        object.__setattr__(self, "words", words)
        object.__setattr__(self, "flavor", flavor)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "_hash", hash(("B", flavor, words)))

    def __setattr__(self, *args):
        raise AttributeError("BarMonomial is immutable")

    @property
    def length(self) -> int:
        return len(self.words)

    @property
    def degree(self) -> int:
        return sum(w.degree for w in self.words)

    def is_unit(self) -> bool:
        return not self.words

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BarMonomial)
            and self.flavor == other.flavor
            and self.words == other.words
        )

    def __repr__(self) -> str:
        return render(self)


BasisElement = Union[Word, BarMonomial, tuple]

EMPTY_WORD = Word()


def unit_bar(flavor: str) -> BarMonomial:
    return BarMonomial((), flavor)


def concat(u: Word, v: Word) -> Word:
    """Concatenation product of words; the empty word is the unit."""
    return Word(u.letters + v.letters)


def bar_mul(x: BarMonomial, y: BarMonomial) -> BarMonomial:
    """Product of bar monomials: | (commutative) or the ordered product.

    Both arguments must share the same flavor; the commutative result is
    re-canonicalized by the constructor.
    """
    if x.flavor != y.flavor:
        raise MixedFlavor(f"cannot multiply {x.flavor} by {y.flavor} bar monomial")
    return BarMonomial(x.words + y.words, x.flavor)


_AS_BAR_CACHE: dict = {}


def as_bar(x: Union[Word, BarMonomial], flavor: str) -> BarMonomial:
    """Coerce a word into a length-1 bar monomial (unit word -> unit monomial)."""
    if isinstance(x, BarMonomial):
        if x.flavor != flavor:
            raise MixedFlavor(f"expected {flavor} bar monomial, got {x.flavor}")
        return x
    key = (x, flavor)
    hit = _AS_BAR_CACHE.get(key)
    if hit is None:
        hit = BarMonomial((), flavor) if x.is_unit() else BarMonomial((x,), flavor)
        _AS_BAR_CACHE[key] = hit
    return hit


def subword(w: Word, positions: Iterable[int]) -> Word:
    """The word a_S for S a subset of [deg(w)] (1-indexed, increasing order)."""
    pos = sorted(set(positions))
    n = w.degree
    if pos and (pos[0] < 1 or pos[-1] > n):
        raise IndexOutOfRange(f"positions {pos} outside [1..{n}]")
    return Word(w.letters[i - 1] for i in pos)


def degree_of(x: BasisElement) -> int:
    if isinstance(x, tuple):
        return sum(degree_of(t) for t in x)
    return x.degree


def kind_of(x: BasisElement) -> Union[str, tuple]:
    if type(x) is tuple:
        return tuple(t.kind for t in x)
    return x.kind


class LinComb:
    """A finite formal sum of basis elements with exact rational coefficients.

    Zero coefficients are pruned eagerly; two LinCombs are equal iff their
    term maps are equal.  ``kind`` records the basis (WORD/OBAR/CBAR or a
    tuple of these for tensor legs) and is checked when combining.
    The class is treated as immutable: operations return fresh objects.
    """

    __slots__ = ("terms", "kind")

    def __init__(self, terms: Mapping[BasisElement, Rat] = (), kind=None):
        clean: dict[BasisElement, Rat] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for elem, coeff in items:
            if type(coeff) is not Rat:
                coeff = Rat(coeff)
            if not coeff:
                continue
            k = kind_of(elem)
            if kind is None:
                kind = k
            elif k != kind:
                raise BasisMismatch(f"mixed basis kinds {kind} and {k}")
            if elem in clean:
                val = clean[elem] + coeff
                if val:
                    clean[elem] = val
                else:
                    del clean[elem]
            else:
                clean[elem] = coeff
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "kind", kind)

    def __setattr__(self, *args):
        raise AttributeError("LinComb is immutable")

    @classmethod
    def zero(cls, kind=None) -> "LinComb":
        return cls((), kind)

    @classmethod
    def of(cls, elem: BasisElement, coeff: Rat = Rat(1)) -> "LinComb":
        return cls({elem: coeff})

    def items(self):
        return self.terms.items()

    def __iter__(self) -> Iterator[BasisElement]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coeff(self, elem: BasisElement) -> Rat:
        return self.terms.get(elem, Rat(0))

    def _check(self, other: "LinComb"):
        if self.kind is not None and other.kind is not None and self.kind != other.kind:
            raise BasisMismatch(f"cannot combine {self.kind} with {other.kind}")

    def __add__(self, other: "LinComb") -> "LinComb":
        self._check(other)
        out = dict(self.terms)
        for elem, coeff in other.terms.items():
            val = out.get(elem, Rat(0)) + coeff
            if val:
                out[elem] = val
            else:
                out.pop(elem, None)
        lc = LinComb.zero(self.kind if self.kind is not None else other.kind)
        object.__setattr__(lc, "terms", out)
        return lc

    def __sub__(self, other: "LinComb") -> "LinComb":
        return self + (-1) * other

    def __neg__(self) -> "LinComb":
        return (-1) * self

    def __rmul__(self, scalar) -> "LinComb":
        scalar = Rat(scalar)
        if not scalar:
            return LinComb.zero(self.kind)
        lc = LinComb.zero(self.kind)
        object.__setattr__(lc, "terms", {e: scalar * c for e, c in self.terms.items()})
        return lc

    def __eq__(self, other) -> bool:
        return isinstance(other, LinComb) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def bind(self, f: Callable[[BasisElement], "LinComb"]) -> "LinComb":
        """Extend f linearly: sum of coeff * f(elem) over all terms."""
        out: LinComb | None = None
        for elem, coeff in self.terms.items():
            piece = coeff * f(elem)
            out = piece if out is None else out + piece
        return out if out is not None else LinComb.zero()

    def map_basis(self, f: Callable[[BasisElement], BasisElement]) -> "LinComb":
        return LinComb(((f(e), c) for e, c in self.terms.items()))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for elem in sorted(self.terms, key=sort_key):
            coeff = self.terms[elem]
            sign = "-" if coeff < 0 else "+"
            mag = abs(coeff)
            body = render(elem)
            bits.append(f"{sign} {'' if mag == 1 else f'{mag}*'}{body}")
        text = " ".join(bits)
        return text[2:] if text.startswith("+ ") else text


def tensor(left: LinComb, right: LinComb) -> LinComb:
    """Bilinear tensor product; tuple legs are flattened into one tuple."""

    def legs(e: BasisElement) -> tuple:
        return e if isinstance(e, tuple) else (e,)

    out: dict[BasisElement, Rat] = {}
    for e1, c1 in left.items():
        for e2, c2 in right.items():
            key = legs(e1) + legs(e2)
            val = out.get(key, Rat(0)) + c1 * c2
            if val:
                out[key] = val
            else:
                del out[key]
    return LinComb(out.items())


# ---------------------------------------------------------------------------
# rendering and parsing


def render(x: BasisElement) -> str:
    if isinstance(x, tuple):
        return " ⊗ ".join(render(t) for t in x)
    if isinstance(x, Word):
        if x.is_unit():
            return "1"
        return ".".join(f"a{i}" for i in x.letters)
    if x.is_unit():
        return "1"
    body = "|".join(render(w) for w in x.words)
    return f"[{body}]" if x.flavor == ORDERED else body


def sort_key(x: BasisElement):
    """Canonical output order: degree first, then rendering string."""
    return (degree_of(x), render(x))


_WORD_RE = re.compile(r"^a(\d+)$")


def parse_word(text: str) -> Word:
    text = text.strip()
    if text == "1":
        return EMPTY_WORD
    letters = []
    for piece in text.split("."):
        m = _WORD_RE.match(piece.strip())
        if not m or int(m.group(1)) < 1:
            raise ParseError(f"bad letter {piece!r} in word {text!r}")
        letters.append(int(m.group(1)))
    return Word(letters)


def parse_bar(text: str, flavor: str) -> BarMonomial:
    text = text.strip()
    if text == "1":
        return unit_bar(flavor)
    words = [parse_word(piece) for piece in text.split("|")]
    if any(w.is_unit() for w in words):
        raise ParseError(f"unit word inside bar monomial {text!r}")
    return BarMonomial(words, flavor)


def parse_element(text: str) -> Union[Word, BarMonomial]:
    """Parse a word or bar expression: brackets force ORDERED, bars COMMUTATIVE."""
    text = text.strip()
    if text.startswith("["):
        if not text.endswith("]"):
            raise ParseError(f"unbalanced brackets in {text!r}")
        return parse_bar(text[1:-1], ORDERED)
    if "|" in text:
        return parse_bar(text, COMMUTATIVE)
    return parse_word(text)


def parse_rational(text) -> Rat:
    try:
        return Rat(str(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {text!r}") from exc
