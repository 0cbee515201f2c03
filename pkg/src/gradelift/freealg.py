"""Words, graded monomial orders and exact noncommutative polynomials.

Words are plain tuples of generator indices (declaration order).  The
generator *precedence* is kept separately on :class:`GeneratorSet`, so a
file may declare ``Y`` before ``X`` and still order ``X`` below ``Y``.
Coefficients are :class:`fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import IntEnum
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, NamedTuple, Union

from .errors import ZeroPolynomialError

Word = tuple[int, ...]
ONE: Word = ()

Scalar = Fraction
ScalarLike = Union[int, Fraction]


@dataclass(frozen=True)
class GeneratorSet:
    """Generator names plus their base precedence.

    ``precedence`` lists generator indices from smallest to largest, so
    ``precedence = (1, 0)`` means ``names[1] < names[0]``.
    """

    names: tuple[str, ...]
    precedence: tuple[int, ...] = ()
    rank: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if not names:
            raise ValueError("at least one generator is required")
        if any(not n for n in names):
            raise ValueError("generator names must be nonempty")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate generator names in {names}")
        prec = tuple(self.precedence) if self.precedence else tuple(range(len(names)))
        if sorted(prec) != list(range(len(names))):
            raise ValueError(f"precedence {prec} is not a permutation of 0..{len(names) - 1}")
        object.__setattr__(self, "precedence", prec)
        rank = [0] * len(names)
        for r, i in enumerate(prec):
            rank[i] = r
        object.__setattr__(self, "rank", tuple(rank))

    @property
    def n(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def ascending(self) -> list[int]:
        """Generator indices in increasing precedence."""
        return list(self.precedence)

    def word(self, *names: str) -> Word:
        return tuple(self.names.index(s) for s in names)

    def format_word(self, w: Word, sep: str = "*") -> str:
        if not w:
            return "1"
        return sep.join(self.names[i] for i in w)


class Ordering(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class MonomialOrder:
    """Degree-lexicographic order: shorter words first, then lex by precedence."""

    generators: GeneratorSet
    kind: str = "deglex"

    def __post_init__(self) -> None:
        if self.kind != "deglex":
            raise ValueError(f"unsupported monomial order {self.kind!r}")

    def key(self, w: Word) -> tuple:
        rank = self.generators.rank
        return (len(w), tuple(rank[c] for c in w))

    def compare(self, u: Word, v: Word) -> Ordering:
        ku, kv = self.key(u), self.key(v)
        if ku < kv:
            return Ordering.LESS
        if ku > kv:
            return Ordering.GREATER
        return Ordering.EQUAL

    def sorted(self, words: Iterable[Word], reverse: bool = False) -> list[Word]:
        return sorted(words, key=self.key, reverse=reverse)


def deglex(generators: GeneratorSet) -> MonomialOrder:
    return MonomialOrder(generators)


def compare(order: MonomialOrder, u: Word, v: Word) -> Ordering:
    return order.compare(u, v)


def concat(u: Word, v: Word) -> Word:
    return u + v


def occurrences(u: Word, w: Word) -> list[tuple[Word, Word]]:
    """All factorizations ``w = left + u + right``, leftmost first."""
    if not u:
        raise ValueError("occurrences() needs a nonempty pattern")
    k = len(u)
    return [(w[:i], w[i + k:]) for i in range(len(w) - k + 1) if w[i:i + k] == u]


def divides(u: Word, w: Word) -> bool:
    """True when ``u`` occurs as a contiguous subword of ``w``."""
    k = len(u)
    if k > len(w):
        return False
    return any(w[i:i + k] == u for i in range(len(w) - k + 1))


class Term(NamedTuple):
    coeff: Fraction
    word: Word


class NcPolynomial:
    """An immutable element of the free algebra over the rationals.

    Terms are stored strictly descending under ``order``; the zero
    polynomial has no terms.
    """

    __slots__ = ("order", "terms", "_coeffs", "_hash")

    def __init__(self, order: MonomialOrder, coeffs: Mapping[Word, ScalarLike] | Iterable[tuple[Word, ScalarLike]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[Word, Fraction] = {}
        for w, c in items:
            w = tuple(w)
            acc[w] = acc.get(w, Fraction(0)) + Fraction(c)
        acc = {w: c for w, c in acc.items() if c}
        self.order = order
        self._coeffs = acc
        key = order.key
        self.terms: tuple[Term, ...] = tuple(
            Term(acc[w], w) for w in sorted(acc, key=key, reverse=True)
        )
        self._hash: int | None = None

    @classmethod
    def _from_clean(cls, order: MonomialOrder, acc: dict[Word, Fraction]) -> "NcPolynomial":
        # acc must already be free of zero coefficients
        obj = cls.__new__(cls)
        obj.order = order
        obj._coeffs = acc
        key = order.key
        obj.terms = tuple(Term(acc[w], w) for w in sorted(acc, key=key, reverse=True))
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, order: MonomialOrder) -> "NcPolynomial":
        return cls._from_clean(order, {})

    @classmethod
    def monomial(cls, order: MonomialOrder, w: Word, coeff: ScalarLike = 1) -> "NcPolynomial":
        return cls(order, [(w, coeff)])

    @classmethod
    def constant(cls, order: MonomialOrder, c: ScalarLike) -> "NcPolynomial":
        return cls(order, [(ONE, c)])

    # -- inspection -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[Term]:
        return iter(self.terms)

    def coeff(self, w: Word) -> Fraction:
        return self._coeffs.get(tuple(w), Fraction(0))

    def coefficients(self) -> dict[Word, Fraction]:
        return dict(self._coeffs)

    def words(self) -> list[Word]:
        return [t.word for t in self.terms]

    def lm(self) -> Word:
        if not self.terms:
            raise ZeroPolynomialError("leading monomial of the zero polynomial")
        return self.terms[0].word

    def lc(self) -> Fraction:
        if not self.terms:
            raise ZeroPolynomialError("leading coefficient of the zero polynomial")
        return self.terms[0].coeff

    def lt(self) -> Term:
        if not self.terms:
            raise ZeroPolynomialError("leading term of the zero polynomial")
        return self.terms[0]

    def degree(self) -> int:
        if not self.terms:
            raise ZeroPolynomialError("degree of the zero polynomial")
        return max(len(t.word) for t in self.terms)

    def ht(self) -> "NcPolynomial":
        """Top homogeneous component with respect to word length."""
        d = self.degree()
        return NcPolynomial._from_clean(
            self.order, {w: c for w, c in self._coeffs.items() if len(w) == d}
        )

    def is_homogeneous(self) -> bool:
        return len({len(w) for w in self._coeffs}) <= 1

    def monic(self) -> "NcPolynomial":
        if not self.terms:
            return self
        return self.scale(1 / self.lc())

    # -- arithmetic -------------------------------------------------------

    def _check(self, other: "NcPolynomial") -> None:
        if other.order != self.order:
            raise ValueError("polynomials live over different orders/generators")

    def __add__(self, other: "NcPolynomial | ScalarLike") -> "NcPolynomial":
        if not isinstance(other, NcPolynomial):
            other = NcPolynomial.constant(self.order, other)
        self._check(other)
        acc = dict(self._coeffs)
        for w, c in other._coeffs.items():
            s = acc.get(w, 0) + c
            if s:
                acc[w] = s
            else:
                acc.pop(w, None)
        return NcPolynomial._from_clean(self.order, acc)

    __radd__ = __add__

    def __neg__(self) -> "NcPolynomial":
        return NcPolynomial._from_clean(self.order, {w: -c for w, c in self._coeffs.items()})

    def __sub__(self, other: "NcPolynomial | ScalarLike") -> "NcPolynomial":
        if not isinstance(other, NcPolynomial):
            other = NcPolynomial.constant(self.order, other)
        return self + (-other)

    def __rsub__(self, other: ScalarLike) -> "NcPolynomial":
        return (-self) + other

    def scale(self, c: ScalarLike) -> "NcPolynomial":
        c = Fraction(c)
        if not c:
            return NcPolynomial.zero(self.order)
        return NcPolynomial._from_clean(self.order, {w: c * a for w, a in self._coeffs.items()})

    def __mul__(self, other: "NcPolynomial | ScalarLike") -> "NcPolynomial":
        if not isinstance(other, NcPolynomial):
            return self.scale(other)
        self._check(other)
        acc: dict[Word, Fraction] = {}
        for u, a in self._coeffs.items():
            for v, b in other._coeffs.items():
                w = u + v
                acc[w] = acc.get(w, 0) + a * b
        return NcPolynomial._from_clean(self.order, {w: c for w, c in acc.items() if c})

    def __rmul__(self, other: ScalarLike) -> "NcPolynomial":
        return self.scale(other)

    def sandwich(self, left: Word, right: Word, c: ScalarLike = 1) -> "NcPolynomial":
        """``c * left * self * right`` for words ``left``, ``right``."""
        c = Fraction(c)
        if not c:
            return NcPolynomial.zero(self.order)
        return NcPolynomial._from_clean(
            self.order, {left + w + right: c * a for w, a in self._coeffs.items()}
        )

    # -- identity ---------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, NcPolynomial):
            return self.order == other.order and self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            if not other:
                return not self._coeffs
            return self._coeffs == {ONE: Fraction(other)}
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._coeffs.items()))
        return self._hash

    def __repr__(self) -> str:
        from .io import print_poly

        return f"NcPolynomial({print_poly(self)!r})"


def poly_add(f: NcPolynomial, g: NcPolynomial) -> NcPolynomial:
    return f + g


def poly_scale(f: NcPolynomial, c: ScalarLike) -> NcPolynomial:
    return f.scale(c)


def poly_mul(f: NcPolynomial, g: NcPolynomial | ScalarLike) -> NcPolynomial:
    return f * g


def lm(f: NcPolynomial) -> Word:
    return f.lm()


def lc(f: NcPolynomial) -> Fraction:
    return f.lc()


def lt(f: NcPolynomial) -> Term:
    return f.lt()


def ht(f: NcPolynomial) -> NcPolynomial:
    return f.ht()
