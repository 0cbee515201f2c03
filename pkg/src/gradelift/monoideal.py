"""Monomial ideals: obstruction sets, normal words and Hilbert data.

Subword tests go through a small Aho-Corasick automaton compiled from the
obstructions, so enumerating or counting normal words only ever extends a
word on the right and follows one automaton transition.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, NamedTuple

from .freealg import ONE, MonomialOrder, Word, divides


@dataclass(frozen=True)
class ObstructionSet:
    """A reduced set of words generating a monomial ideal.

    The unit word may appear only alone; it marks the whole algebra as
    zero.
    """

    words: frozenset[Word]
    order: MonomialOrder

    def __post_init__(self) -> None:
        ws = frozenset(tuple(w) for w in self.words)
        object.__setattr__(self, "words", ws)
        for u in ws:
            for v in ws:
                if u != v and divides(u, v):
                    raise ValueError(f"obstruction set is not reduced: {u} divides {v}")

    @property
    def max_degree(self) -> int:
        return max((len(w) for w in self.words), default=0)

    @property
    def n(self) -> int:
        return self.order.generators.n

    def is_zero_algebra(self) -> bool:
        return ONE in self.words

    def sorted_words(self) -> list[Word]:
        return self.order.sorted(self.words)

    def __iter__(self):
        return iter(self.sorted_words())

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, w: object) -> bool:
        return w in self.words

    @cached_property
    def automaton(self) -> "ForbiddenWordAutomaton":
        return ForbiddenWordAutomaton(self.words, self.n)


def reduce_obstructions(words: Iterable[Word], order: MonomialOrder) -> ObstructionSet:
    """Drop every word that has another word of the set as a subword."""
    ws = sorted(set(tuple(w) for w in words), key=len)
    kept: list[Word] = []
    for w in ws:
        if not any(divides(u, w) for u in kept):
            kept.append(w)
    return ObstructionSet(frozenset(kept), order)


class ForbiddenWordAutomaton:
    """Aho-Corasick DFA over letters ``0..n-1`` recognising forbidden words.

    ``dead[s]`` is true when reaching state ``s`` means some obstruction
    has just been read as a suffix.
    """

    def __init__(self, patterns: Iterable[Word], n: int):
        self.n = n
        goto: list[dict[int, int]] = [{}]
        dead = [False]
        for p in patterns:
            s = 0
            for c in p:
                nxt = goto[s].get(c)
                if nxt is None:
                    goto.append({})
                    dead.append(False)
                    nxt = len(goto) - 1
                    goto[s][c] = nxt
                s = nxt
            dead[s] = True
        fail = [0] * len(goto)
        delta = [[0] * n for _ in goto]
        queue: deque[int] = deque()
        for c in range(n):
            t = goto[0].get(c)
            if t is None:
                delta[0][c] = 0
            else:
                delta[0][c] = t
                queue.append(t)
        while queue:
            s = queue.popleft()
            dead[s] = dead[s] or dead[fail[s]]
            for c in range(n):
                t = goto[s].get(c)
                if t is None:
                    delta[s][c] = delta[fail[s]][c]
                else:
                    fail[t] = delta[fail[s]][c]
                    delta[s][c] = t
                    queue.append(t)
        self.delta = delta
        self.dead = dead
        # the unit word as a pattern kills the root itself
        self.root_dead = dead[0]

    def run(self, w: Word, state: int = 0) -> int:
        """State after reading ``w``; -1 as soon as a dead state is hit."""
        if self.root_dead:
            return -1
        for c in w:
            state = self.delta[state][c]
            if self.dead[state]:
                return -1
        return state

    def accepts(self, w: Word) -> bool:
        return self.run(w) >= 0


def is_normal(w: Word, omega: ObstructionSet) -> bool:
    return omega.automaton.accepts(tuple(w))


def normal_words(omega: ObstructionSet, d: int) -> list[list[Word]]:
    """Normal words of each length ``0..d``, each list ascending in the order."""
    aut = omega.automaton
    out: list[list[Word]] = []
    if aut.root_dead:
        return [[] for _ in range(d + 1)]
    letters = omega.order.generators.ascending()
    level: list[tuple[Word, int]] = [(ONE, 0)]
    for p in range(d + 1):
        if p:
            nxt: list[tuple[Word, int]] = []
            for w, s in level:
                row = aut.delta[s]
                for c in letters:
                    t = row[c]
                    if not aut.dead[t]:
                        nxt.append((w + (c,), t))
            level = nxt
        out.append([w for w, _ in level])
    return out


@dataclass(frozen=True)
class HilbertData:
    counts: tuple[int, ...]

    def __getitem__(self, p: int) -> int:
        return self.counts[p]

    def __len__(self) -> int:
        return len(self.counts)


def hilbert_function(omega: ObstructionSet, d: int) -> HilbertData:
    """Number of normal words in each degree ``0..d`` (counted, not listed)."""
    aut = omega.automaton
    if aut.root_dead:
        return HilbertData(tuple([0] * (d + 1)))
    counts = [1]
    dist = {0: 1}
    for _ in range(d):
        nxt: dict[int, int] = {}
        for s, k in dist.items():
            for t in aut.delta[s]:
                if not aut.dead[t]:
                    nxt[t] = nxt.get(t, 0) + k
        dist = nxt
        counts.append(sum(dist.values()))
    return HilbertData(tuple(counts))


class Dimension(NamedTuple):
    """``value`` is the dimension, or ``None`` for infinite."""

    value: int | None

    @property
    def is_finite(self) -> bool:
        return self.value is not None

    def __str__(self) -> str:
        return f"Finite({self.value})" if self.value is not None else "Infinite"


INFINITE = Dimension(None)


def quotient_dimension(omega: ObstructionSet) -> Dimension:
    from .graphs import build_ufnarovski, classify_growth

    if omega.is_zero_algebra():
        return Dimension(0)
    g = build_ufnarovski(omega)
    if not classify_growth(g).is_finite:
        return INFINITE
    # acyclic: a path visits each vertex at most once
    top = max(g.ell - 1, 0) + len(g.vertices)
    return Dimension(sum(hilbert_function(omega, top).counts))


# -- rational Hilbert series -----------------------------------------------

def _trim(p: list) -> list:
    while p and not p[-1]:
        p.pop()
    return p


def _poly_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = _trim(list(a))
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        k = len(a) - len(b)
        c = a[-1] / b[-1]
        q[k] = c
        for i, y in enumerate(b):
            a[i + k] -= c * y
        a = _trim(a)
    return _trim(q), a


def _poly_gcd(a: list, b: list) -> list[Fraction]:
    a = _trim([Fraction(x) for x in a])
    b = _trim([Fraction(x) for x in b])
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, r
    return a


def charpoly_reversed(m: list[list[int]]) -> list[int]:
    """Coefficients of ``det(I - t*m)`` via Faddeev-LeVerrier.

    Every division in the recurrence is exact, so the computation stays in
    the integers.
    """
    n = len(m)
    coeffs = [1]
    acc = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        c_prev = coeffs[-1]
        acc = [
            [sum(m[i][r] * acc[r][j] for r in range(n)) + (c_prev if i == j else 0) for j in range(n)]
            for i in range(n)
        ]
        tr = sum(sum(m[i][r] * acc[r][i] for r in range(n)) for i in range(n))
        assert tr % k == 0
        coeffs.append(-tr // k)
    return _trim(coeffs) or [1]


@dataclass(frozen=True)
class RationalSeries:
    """``numerator / denominator`` with integer coefficients, lowest degree first."""

    numerator: tuple[int, ...]
    denominator: tuple[int, ...] = field(default=(1,))

    def expand(self, d: int) -> list[int]:
        """Taylor coefficients of degrees ``0..d``."""
        num, den = self.numerator, self.denominator
        c0 = den[0]
        out: list[int] = []
        for p in range(d + 1):
            s = num[p] if p < len(num) else 0
            for i in range(1, min(p, len(den) - 1) + 1):
                s -= den[i] * out[p - i]
            assert s % c0 == 0
            out.append(s // c0)
        return out

    def __str__(self) -> str:
        num = format_int_poly(self.numerator)
        if tuple(self.denominator) == (1,):
            return num
        if sum(1 for c in self.numerator if c) > 1:
            num = f"({num})"
        return f"{num}/({format_int_poly(self.denominator)})"


def format_int_poly(p: Iterable[int], var: str = "t") -> str:
    parts: list[str] = []
    for i, c in enumerate(p):
        if not c:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts) if parts else "0"


def _canonical_series(num: list, den: list) -> RationalSeries:
    if not _trim(list(num)):
        return RationalSeries((0,), (1,))
    g = _poly_gcd(num, den)
    num_q, _ = _poly_divmod([Fraction(x) for x in num], g)
    den_q, _ = _poly_divmod([Fraction(x) for x in den], g)
    scale = den_q[0]
    num_i = [x / scale for x in num_q]
    den_i = [x / scale for x in den_q]
    assert all(x.denominator == 1 for x in num_i + den_i)
    return RationalSeries(tuple(int(x) for x in num_i) or (0,), tuple(int(x) for x in den_i))


def hilbert_series(omega: ObstructionSet) -> RationalSeries:
    """Closed rational form of the Hilbert series of ``R/<omega>``.

    Degrees below ``l-1`` come from explicit enumeration; from ``l-1`` on
    the counts are path counts in the Ufnarovski graph, summed through
    ``det(I - tM)`` and the first few matrix powers.
    """
    from .graphs import build_ufnarovski

    if omega.is_zero_algebra():
        return RationalSeries((0,), (1,))
    g = build_ufnarovski(omega)
    low = hilbert_function(omega, max(g.ell - 2, 0)).counts[: max(g.ell - 1, 0)]
    m = g.adjacency_matrix()
    size = len(m)
    den = charpoly_reversed(m) if size else [1]
    # path counts a_k = 1^T M^k 1 for k < size suffice for the numerator
    paths: list[int] = []
    row = [1] * size
    for _ in range(size):
        paths.append(sum(row))
        row = [sum(row[i] * m[i][j] for i in range(size)) for j in range(size)]
    tail = _poly_mul(paths, den)[:size] if size else []
    shift = max(g.ell - 1, 0)
    num = _poly_mul(list(low), den) if low else []
    shifted = [0] * shift + list(tail)
    length = max(len(num), len(shifted))
    total = [(num[i] if i < len(num) else 0) + (shifted[i] if i < len(shifted) else 0) for i in range(length)]
    return _canonical_series(_trim(total), den)
