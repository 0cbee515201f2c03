"""Ufnarovski graphs, chain graphs and the decision procedures built on them.

Conventions for degenerate obstruction sets:

* all obstructions single letters (``ell == 1``): one vertex, the empty
  word, with a loop for every surviving letter;
* empty obstruction set: the graph is built as if ``ell == 2``, i.e. the
  complete graph on the letters;
* the unit word as an obstruction (zero algebra): no vertices at all.

Each choice keeps paths of length ``p - (ell - 1)`` in bijection with normal
words of length ``p``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import NamedTuple

import networkx as nx

from .errors import NotNormalError
from .freealg import ONE, Word
from .monoideal import ObstructionSet, is_normal, normal_words


class Edge(NamedTuple):
    src: Word
    dst: Word
    letter: int


@dataclass(frozen=True)
class UfnarovskiGraph:
    omega: ObstructionSet
    ell: int
    vertices: tuple[Word, ...]
    edges: tuple[Edge, ...]
    convention: str | None = None

    @cached_property
    def index(self) -> dict[Word, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    def adjacency_matrix(self) -> list[list[int]]:
        idx = self.index
        m = [[0] * len(self.vertices) for _ in self.vertices]
        for e in self.edges:
            m[idx[e.src]][idx[e.dst]] += 1
        return m

    def successors(self, v: Word) -> list[Word]:
        return [e.dst for e in self.edges if e.src == v]

    @cached_property
    def nx_graph(self) -> nx.MultiDiGraph:
        g = nx.MultiDiGraph()
        g.add_nodes_from(self.vertices)
        for e in self.edges:
            g.add_edge(e.src, e.dst, letter=e.letter)
        return g

    @cached_property
    def components(self) -> list["_Component"]:
        return _components(self.nx_graph)

    def component_of(self, v: Word) -> "_Component":
        for c in self.components:
            if v in c.nodes:
                return c
        raise KeyError(v)


class _Component(NamedTuple):
    nodes: frozenset
    internal_edges: int

    @property
    def cyclic(self) -> bool:
        return self.internal_edges > 0

    @property
    def simple_cycle(self) -> bool:
        return self.internal_edges == len(self.nodes)


def _components(g: nx.MultiDiGraph) -> list[_Component]:
    out = []
    for nodes in nx.strongly_connected_components(g):
        nodes = frozenset(nodes)
        k = sum(1 for u, v in g.edges(nodes) if v in nodes)
        out.append(_Component(nodes, k))
    # deterministic order for callers that iterate
    out.sort(key=lambda c: min(c.nodes))
    return out


def build_ufnarovski(omega: ObstructionSet) -> UfnarovskiGraph:
    if omega.is_zero_algebra():
        return UfnarovskiGraph(omega, 0, (), (), "zero-algebra")
    convention = None
    ell = omega.max_degree
    if ell == 0:
        ell, convention = 2, "free-algebra"
    elif ell == 1:
        convention = "single-letter"
    vertices = tuple(normal_words(omega, ell - 1)[ell - 1])
    letters = omega.order.generators.ascending()
    aut = omega.automaton
    edges = []
    for v in vertices:
        s = aut.run(v)
        for c in letters:
            if not aut.dead[aut.delta[s][c]]:
                w = v + (c,)
                edges.append(Edge(v, w[1:], c))
    return UfnarovskiGraph(omega, ell, vertices, tuple(edges), convention)


class Growth(str, Enum):
    FINITE = "finite-dimensional"
    POLYNOMIAL = "polynomial"
    EXPONENTIAL = "exponential"


class GrowthClass(NamedTuple):
    tag: Growth
    degree: int | None = None

    @property
    def is_finite(self) -> bool:
        return self.tag is Growth.FINITE

    @property
    def gk_dimension(self) -> int | None:
        """GK dimension; ``None`` means infinite (exponential growth)."""
        if self.tag is Growth.FINITE:
            return 0
        return self.degree

    def __str__(self) -> str:
        if self.tag is Growth.POLYNOMIAL:
            return f"Polynomial({self.degree})"
        return "FiniteDimensional" if self.tag is Growth.FINITE else "Exponential"


def classify_growth(g: UfnarovskiGraph) -> GrowthClass:
    comps = g.components
    if any(c.internal_edges > len(c.nodes) for c in comps):
        return GrowthClass(Growth.EXPONENTIAL)
    if not any(c.cyclic for c in comps):
        return GrowthClass(Growth.FINITE)
    # longest chain of cyclic components in the condensation DAG
    cond = nx.condensation(nx.DiGraph(g.nx_graph))
    weight = {}
    for node, data in cond.nodes(data=True):
        members = frozenset(data["members"])
        weight[node] = 1 if g.component_of(next(iter(members))).cyclic else 0
    best: dict[int, int] = {}
    for node in reversed(list(nx.topological_sort(cond))):
        best[node] = weight[node] + max((best[s] for s in cond.successors(node)), default=0)
    return GrowthClass(Growth.POLYNOMIAL, max(best.values()))


class NoetherianVerdict(NamedTuple):
    left: bool
    right: bool
    weak: bool


def noetherian_test(g: UfnarovskiGraph) -> NoetherianVerdict:
    """Edges entering / leaving cycles.

    A strongly connected component that is more than one simple cycle has,
    on any of its cycles, both an entering and a leaving edge.
    """
    entering = leaving = both = False
    for comp in g.components:
        if not comp.cyclic:
            continue
        if not comp.simple_cycle:
            entering = leaving = both = True
            continue
        ins = any(e.dst in comp.nodes and e.src not in comp.nodes for e in g.edges)
        outs = any(e.src in comp.nodes and e.dst not in comp.nodes for e in g.edges)
        entering |= ins
        leaving |= outs
        both |= ins and outs
    return NoetherianVerdict(left=not entering, right=not leaving, weak=not both)


def cyclic_vertices(g: UfnarovskiGraph) -> set[Word]:
    return {v for c in g.components if c.cyclic for v in c.nodes}


def route(v: Word, ell: int) -> list[Word]:
    """Vertices visited when reading ``v`` through windows of length ``ell - 1``."""
    k = ell - 1
    return [v[j:j + k] for j in range(len(v) - k + 1)]


def is_cyclic_monomial(v: Word, g: UfnarovskiGraph) -> bool:
    v = tuple(v)
    if not v:
        raise ValueError("the unit word is never cyclic")
    if not is_normal(v, g.omega):
        raise NotNormalError(f"{v} contains an obstruction")
    k = g.ell - 1
    if len(v) <= k:
        return any(c[len(c) - len(v):] == v for c in cyclic_vertices(g))
    windows = route(v, g.ell)
    comp = g.component_of(windows[0])
    return comp.cyclic and all(w in comp.nodes for w in windows)


def semiprime_test(omega: ObstructionSet) -> bool:
    """Every normal word of length ``1..ell`` is cyclic."""
    g = build_ufnarovski(omega)
    if not g.vertices:
        return True
    levels = normal_words(omega, g.ell)
    return all(is_cyclic_monomial(v, g) for p in range(1, g.ell + 1) for v in levels[p])


def prime_test(omega: ObstructionSet) -> bool:
    """Short normal words are vertex suffixes, and every vertex reaches every
    vertex (itself included) along at least one edge."""
    g = build_ufnarovski(omega)
    if not g.vertices:
        return True
    k = g.ell - 1
    levels = normal_words(omega, max(k - 1, 0))
    for p in range(k):
        for v in levels[p]:
            if not any(u[len(u) - p:] == v for u in g.vertices):
                return False
    comps = g.components
    return len(comps) == 1 and comps[0].cyclic


# -- chain graph -----------------------------------------------------------

@dataclass(frozen=True)
class ChainGraph:
    omega: ObstructionSet
    vertices: tuple[Word, ...]
    edges: tuple[tuple[Word, Word], ...]

    @cached_property
    def adjacency(self) -> dict[Word, list[Word]]:
        adj: dict[Word, list[Word]] = {v: [] for v in self.vertices}
        for u, v in self.edges:
            adj[u].append(v)
        return adj


def _occurrence_count(w: Word, omega: ObstructionSet) -> tuple[int, bool]:
    """Number of obstruction occurrences in ``w`` and whether one is a suffix."""
    count = 0
    suffix = False
    for u in omega.words:
        k = len(u)
        for i in range(len(w) - k + 1):
            if w[i:i + k] == u:
                count += 1
                suffix |= i + k == len(w)
    return count, suffix


def build_chain_graph(omega: ObstructionSet) -> ChainGraph:
    """Vertices ``1``, the letters and all proper suffixes of obstructions.

    ``u -> v`` (both nonempty) exactly when ``uv`` contains a single
    occurrence of an obstruction and that occurrence ends ``uv``.
    """
    order = omega.order
    letters = [(c,) for c in order.generators.ascending()]
    if omega.is_zero_algebra():
        return ChainGraph(omega, (ONE, *letters), ())
    suffixes = {u[i:] for u in omega.words for i in range(1, len(u))}
    rest = order.sorted(set(letters) | suffixes)
    vertices = (ONE, *rest)
    edges = [(ONE, x) for x in letters]
    for u in rest:
        for v in rest:
            count, suffix = _occurrence_count(u + v, omega)
            if count == 1 and suffix:
                edges.append((u, v))
    return ChainGraph(omega, vertices, tuple(edges))


class ChainSet(NamedTuple):
    n: int
    chains: frozenset[Word]


def n_chains(cg: ChainGraph, n: int) -> ChainSet:
    """Words read along paths of ``n + 1`` edges starting at ``1``."""
    if n < -1:
        raise ValueError("chains are indexed from -1")
    frontier = {(ONE, ONE)}  # (current vertex, word read so far)
    for _ in range(n + 1):
        frontier = {(v, w + v) for u, w in frontier for v in cg.adjacency[u]}
    return ChainSet(n, frozenset(w for _, w in frontier))


class GlobalDimBound(NamedTuple):
    """``value`` bounds gl.dim from above; ``None`` means no bound was derived."""

    value: int | None

    def __str__(self) -> str:
        return f"Finite({self.value})" if self.value is not None else "Unbounded"


def chain_graph_has_reachable_cycle(cg: ChainGraph) -> bool:
    g = nx.DiGraph()
    g.add_nodes_from(cg.vertices)
    g.add_edges_from(cg.edges)
    reach = nx.descendants(g, ONE) | {ONE}
    return not nx.is_directed_acyclic_graph(g.subgraph(reach))


def global_dim_bound(cg: ChainGraph) -> GlobalDimBound:
    if chain_graph_has_reachable_cycle(cg):
        return GlobalDimBound(None)
    n = 0
    while n_chains(cg, n).chains:
        n += 1
    return GlobalDimBound(n)
