"""Division, overlaps and degree-truncated Buchberger-Mora completion.

Completion processes ambiguities shortest first, with deterministic tie
breaks, and keeps the basis monic and inter-reduced after every insertion.
Ambiguities longer than the degree bound are set aside; once everything
within the bound is resolved they are re-checked, and the run is reported
``COMPLETE`` only if each of them reduces to zero.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from .errors import DegreeBoundTooSmall, ZeroRelationError
from .freealg import GeneratorSet, MonomialOrder, NcPolynomial, Word, divides
from .monoideal import ObstructionSet, reduce_obstructions


@dataclass(frozen=True)
class Presentation:
    generators: GeneratorSet
    relations: tuple[NcPolynomial, ...]
    order: MonomialOrder

    def __post_init__(self) -> None:
        if self.order.generators != self.generators:
            raise ValueError("order is over a different generator set")
        seen: set[NcPolynomial] = set()
        rels: list[NcPolynomial] = []
        for f in self.relations:
            if f.order != self.order:
                raise ValueError("relation lives over a different order")
            if f.is_zero():
                raise ZeroRelationError("zero relation in presentation")
            key = f.monic()
            if key not in seen:
                seen.add(key)
                rels.append(f)
        object.__setattr__(self, "relations", tuple(rels))

    @classmethod
    def build(cls, order: MonomialOrder, relations: Iterable[NcPolynomial]) -> "Presentation":
        return cls(order.generators, tuple(relations), order)

    def max_degree(self) -> int:
        return max((f.degree() for f in self.relations), default=0)


class OverlapKind(str, Enum):
    LEFT_RIGHT = "left-right"
    INCLUSION = "inclusion"


class Overlap(NamedTuple):
    """An ambiguity between leading words ``u = lm(g_i)`` and ``v = lm(g_j)``.

    LEFT_RIGHT: ``u + b == a + v`` with ``0 < len(b) < len(v)``.
    INCLUSION: ``v == a + u + b``.
    """

    kind: OverlapKind
    a: Word
    b: Word

    def word(self, u: Word, v: Word) -> Word:
        return u + self.b if self.kind is OverlapKind.LEFT_RIGHT else v


def overlaps_of(u: Word, v: Word) -> list[Overlap]:
    """Proper suffix/prefix overlaps of ``u`` then ``v``, and inclusions of ``u`` in ``v``."""
    if not u or not v:
        raise ValueError("overlaps need nonempty words")
    out = []
    for k in range(min(len(u), len(v)) - 1, 0, -1):
        if u[-k:] == v[:k]:
            out.append(Overlap(OverlapKind.LEFT_RIGHT, u[:-k], v[k:]))
    if u != v:
        k = len(u)
        for s in range(len(v) - k + 1):
            if v[s:s + k] == u:
                out.append(Overlap(OverlapKind.INCLUSION, v[:s], v[s + k:]))
    return out


def s_polynomial(g1: NcPolynomial, g2: NcPolynomial, o: Overlap) -> NcPolynomial:
    c1, c2 = 1 / g1.lc(), 1 / g2.lc()
    if o.kind is OverlapKind.LEFT_RIGHT:
        return g1.sandwich((), o.b, c1) - g2.sandwich(o.a, (), c2)
    return g1.sandwich(o.a, o.b, c1) - g2.scale(c2)


class _Divisor:
    """Lookup table from leading words to the first basis element carrying them."""

    def __init__(self, basis: Sequence[NcPolynomial]):
        self.basis = list(basis)
        self.by_lm: dict[Word, int] = {}
        for idx, g in enumerate(self.basis):
            self.by_lm.setdefault(g.lm(), idx)
        self.lengths = sorted({len(w) for w in self.by_lm})

    def find(self, w: Word) -> tuple[int, int] | None:
        """(basis index, left length) of the shortest-left-factor match."""
        by_lm = self.by_lm
        n = len(w)
        for i in range(n + 1):
            best = None
            for k in self.lengths:
                if i + k > n:
                    break
                idx = by_lm.get(w[i:i + k])
                if idx is not None and (best is None or idx < best):
                    best = idx
            if best is not None:
                return best, i
        return None


def _neg_key(order: MonomialOrder, w: Word) -> tuple:
    rank = order.generators.rank
    return (-len(w), tuple(-rank[c] for c in w))


def normal_form(f: NcPolynomial, basis: Sequence[NcPolynomial] | _Divisor) -> NcPolynomial:
    """Fully reduce ``f`` by ``basis``.

    The largest reducible word is always rewritten first, at its
    shortest-left-factor occurrence, by the first basis element that
    matches there.
    """
    div = basis if isinstance(basis, _Divisor) else _Divisor([g for g in basis if g])
    if not div.by_lm or not f:
        return f
    order = f.order
    rem: dict[Word, Fraction] = f.coefficients()
    heap = [(_neg_key(order, w), w) for w in rem]
    heapq.heapify(heap)
    queued = set(rem)
    out: dict[Word, Fraction] = {}
    while heap:
        _, w = heapq.heappop(heap)
        queued.discard(w)
        c = rem.pop(w, None)
        if not c:
            continue
        hit = div.find(w)
        if hit is None:
            out[w] = c
            continue
        idx, i = hit
        g = div.basis[idx]
        k = len(g.lm())
        left, right = w[:i], w[i + k:]
        factor = c / g.lc()
        for t in g.terms[1:]:
            v = left + t.word + right
            s = rem.get(v, 0) - factor * t.coeff
            if s:
                rem[v] = s
                if v not in queued:
                    queued.add(v)
                    heapq.heappush(heap, (_neg_key(order, v), v))
            else:
                rem.pop(v, None)
    return NcPolynomial._from_clean(order, out)


class Status(str, Enum):
    COMPLETE = "complete"
    COMPLETE_UP_TO = "complete-up-to"


@dataclass(frozen=True)
class GroebnerResult:
    basis: tuple[NcPolynomial, ...]
    degree_bound: int
    status: Status
    order: MonomialOrder
    spolys_processed: int = 0

    @property
    def is_complete(self) -> bool:
        return self.status is Status.COMPLETE

    def status_text(self) -> str:
        if self.is_complete:
            return "complete"
        return f"complete up to degree {self.degree_bound}"


def _reduce_tail(g: NcPolynomial, others: Sequence[NcPolynomial]) -> NcPolynomial:
    return normal_form(g, others)


def complete(p: Presentation, degree_bound: int) -> GroebnerResult:
    """Reduced Groebner basis of ``<p.relations>`` truncated at ``degree_bound``."""
    if p.max_degree() > degree_bound:
        raise DegreeBoundTooSmall(
            f"relation of degree {p.max_degree()} exceeds degree bound {degree_bound}"
        )
    order = p.order
    basis: dict[int, NcPolynomial] = {}
    ids = itertools.count()
    queue: list[tuple] = []
    processed = 0

    def current() -> list[NcPolynomial]:
        return [basis[k] for k in sorted(basis)]

    def push_overlaps(new_id: int) -> None:
        for other_id in list(basis):
            pairs = [(new_id, other_id)] if other_id == new_id else [(new_id, other_id), (other_id, new_id)]
            for i, j in pairs:
                u, v = basis[i].lm(), basis[j].lm()
                if not u or not v:
                    continue
                for o in overlaps_of(u, v):
                    if o.kind is OverlapKind.INCLUSION:
                        continue  # impossible in an inter-reduced basis
                    amb = o.word(u, v)
                    heapq.heappush(queue, (len(amb), order.key(amb), i, j, o.a, o.b))

    def insert(f: NcPolynomial) -> None:
        work = [f]
        while work:
            h = normal_form(work.pop(), current())
            if not h:
                continue
            h = h.monic()
            lm_h = h.lm()
            displaced = [k for k, g in basis.items() if divides(lm_h, g.lm())]
            for k in displaced:
                work.append(basis.pop(k))
            new_id = next(ids)
            basis[new_id] = h
            for k in sorted(basis):
                if k == new_id:
                    continue
                others = [basis[m] for m in sorted(basis) if m != k]
                basis[k] = _reduce_tail(basis[k], others)
            push_overlaps(new_id)

    for f in p.relations:
        insert(f)

    deferred: list[tuple] = []
    while queue:
        entry = heapq.heappop(queue)
        length, _, i, j, a, b = entry
        if i not in basis or j not in basis:
            continue
        if length > degree_bound:
            deferred.append(entry)
            continue
        processed += 1
        s = s_polynomial(basis[i], basis[j], Overlap(OverlapKind.LEFT_RIGHT, a, b))
        insert(s)

    final = current()
    status = Status.COMPLETE
    div = _Divisor(final)
    for length, _, i, j, a, b in deferred:
        if i not in basis or j not in basis:
            continue
        s = s_polynomial(basis[i], basis[j], Overlap(OverlapKind.LEFT_RIGHT, a, b))
        if normal_form(s, div):
            status = Status.COMPLETE_UP_TO
            break
    final.sort(key=lambda g: order.key(g.lm()))
    return GroebnerResult(tuple(final), degree_bound, status, order, processed)


def is_groebner_up_to(basis: Sequence[NcPolynomial], degree_bound: int) -> bool:
    """Every ambiguity of length at most ``degree_bound`` resolves to zero."""
    gs = [g for g in basis if g]
    div = _Divisor(gs)
    for i, g in enumerate(gs):
        for j, h in enumerate(gs):
            u, v = g.lm(), h.lm()
            if u == v and i < j and len(u) <= degree_bound:
                if normal_form(g.monic() - h.monic(), div):
                    return False
            if not u or not v:
                continue
            for o in overlaps_of(u, v):
                if o.kind is OverlapKind.INCLUSION and i == j:
                    continue
                if len(o.word(u, v)) > degree_bound:
                    continue
                if normal_form(s_polynomial(g, h, o), div):
                    return False
    return True


def ht_generators(g: GroebnerResult) -> list[NcPolynomial]:
    return [f.ht() for f in g.basis]


def lm_obstructions(g: GroebnerResult) -> ObstructionSet:
    return reduce_obstructions((f.lm() for f in g.basis), g.order)


def pbw_obstructions(generators: GeneratorSet) -> frozenset[Word]:
    """``{X_j X_i : i < j}`` with indices taken in increasing precedence."""
    asc = generators.ascending()
    return frozenset((asc[j], asc[i]) for i in range(len(asc)) for j in range(i + 1, len(asc)))


def pbw_shape(g: GroebnerResult) -> bool:
    return lm_obstructions(g).words == pbw_obstructions(g.order.generators)
