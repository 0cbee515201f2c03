import math
import random

import pytest

from gradelift.errors import NotNormalError
from gradelift.freealg import GeneratorSet, deglex
from gradelift.graphs import (
    Growth,
    GrowthClass,
    build_chain_graph,
    build_ufnarovski,
    classify_growth,
    cyclic_vertices,
    global_dim_bound,
    is_cyclic_monomial,
    n_chains,
    noetherian_test,
    prime_test,
    semiprime_test,
)
from gradelift.monoideal import hilbert_function, normal_words, quotient_dimension, reduce_obstructions
from oracles import random_obstruction_words, two_letter_order

ORDER = two_letter_order()
THREE = deglex(GeneratorSet(("X1", "X2", "X3")))
X, Y = (0,), (1,)
XX, XY, YX, YY = (0, 0), (0, 1), (1, 0), (1, 1)


def omega(*words, order=ORDER):
    return reduce_obstructions(words, order)


def edge_set(g):
    return {(e.src, e.dst) for e in g.edges}


def triangular():
    return omega((1, 0), (2, 0), (2, 1), order=THREE)


def path_counts(g, steps):
    m = g.adjacency_matrix()
    row = [1] * len(m)
    out = []
    for _ in range(steps + 1):
        out.append(sum(row))
        row = [sum(row[i] * m[i][j] for i in range(len(m))) for j in range(len(m))]
    return out


def random_family(seed, count=20, min_len=1):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, 3)
        order = deglex(GeneratorSet(tuple(f"X{i}" for i in range(1, n + 1))))
        out.append(reduce_obstructions(random_obstruction_words(rng, n, min_len=min_len), order))
    return out


# Ufnarovski graph

def test_graph_of_right_noetherian_example():
    g = build_ufnarovski(omega(XX, YX))
    assert g.ell == 2
    assert set(g.vertices) == {X, Y}
    assert edge_set(g) == {(X, Y), (Y, Y)}


def test_graph_without_edges():
    g = build_ufnarovski(omega(XX, XY, YX, YY))
    assert set(g.vertices) == {X, Y}
    assert g.edges == ()


def test_graph_length_three():
    om = omega((0, 1, 0))
    g = build_ufnarovski(om)
    assert set(g.vertices) == {XX, XY, YX, YY}
    expected = set()
    for v in g.vertices:
        for c in (0, 1):
            w = v + (c,)
            if w != (0, 1, 0):
                expected.add((v, w[1:]))
    assert edge_set(g) == expected
    assert (XY, YX) not in edge_set(g)


def test_single_letter_convention():
    g = build_ufnarovski(omega(X))
    assert g.ell == 1 and g.vertices == ((),)
    assert [(e.src, e.dst, e.letter) for e in g.edges] == [((), (), 1)]
    assert g.convention == "single-letter"
    assert classify_growth(g) == GrowthClass(Growth.POLYNOMIAL, 1)


def test_empty_obstructions_give_free_graph():
    g = build_ufnarovski(omega())
    assert g.ell == 2 and g.convention == "free-algebra"
    assert len(g.edges) == 4
    assert classify_growth(g).tag is Growth.EXPONENTIAL


def test_edge_soundness():
    for om in random_family(7):
        g = build_ufnarovski(om)
        words = normal_words(om, g.ell)[g.ell]
        defining = sorted(e.src + (e.letter,) for e in g.edges)
        assert defining == sorted(words)


def test_path_word_bijection():
    for om in random_family(8):
        g = build_ufnarovski(om)
        counts = hilbert_function(om, g.ell + 6).counts
        paths = path_counts(g, 7)
        for p in range(g.ell - 1, g.ell + 7):
            assert paths[p - (g.ell - 1)] == counts[p]


# growth

def test_growth_examples():
    assert classify_growth(build_ufnarovski(omega(XX, YX))) == GrowthClass(Growth.POLYNOMIAL, 1)
    assert classify_growth(build_ufnarovski(omega(YX))) == GrowthClass(Growth.POLYNOMIAL, 2)
    assert classify_growth(build_ufnarovski(omega(XX, XY, YX, YY))).is_finite
    assert str(classify_growth(build_ufnarovski(omega(YX)))) == "Polynomial(2)"


def test_finite_growth_iff_finite_dimension():
    for om in random_family(9, 40):
        finite = classify_growth(build_ufnarovski(om)).is_finite
        assert finite == quotient_dimension(om).is_finite


def test_growth_rate_agrees_with_counts():
    # GK degree d is the growth degree of the cumulative count
    # g(p) = counts[0] + ... + counts[p]: g(p)/p^d stays within a factor 2
    # on p in [20, 40] while g(p)/p^(d-1) strictly increases;
    # exponential growth beats a degree-4 polynomial on the same range
    for om in random_family(10, 40):
        cls = classify_growth(build_ufnarovski(om))
        counts = hilbert_function(om, 40).counts
        cum = [sum(counts[: p + 1]) for p in range(41)]
        if cls.tag is Growth.POLYNOMIAL:
            d = cls.degree
            ratios = [cum[p] / p ** d for p in range(20, 41)]
            assert max(ratios) <= 2 * min(ratios)
            assert cum[40] / 40 ** (d - 1) > cum[20] / 20 ** (d - 1)
        elif cls.tag is Growth.EXPONENTIAL:
            assert cum[40] > cum[20] * 2 ** 4 * 1.5
        else:
            assert counts[40] == 0


# Noetherianity

def test_noetherian_example():
    assert noetherian_test(build_ufnarovski(omega(XX, YX))) == (False, True, True)


def test_noetherian_acyclic():
    assert noetherian_test(build_ufnarovski(omega(XX, XY, YX, YY))) == (True, True, True)


def test_noetherian_loop_entered_and_left():
    order = deglex(GeneratorSet(("X", "Y", "Z")))
    forbidden = [(0, 0), (0, 2), (1, 0), (2, 0), (2, 1), (2, 2)]
    g = build_ufnarovski(omega(*forbidden, order=order))
    assert edge_set(g) == {(X, Y), (Y, Y), (Y, (2,))}
    assert noetherian_test(g) == (False, False, False)


def test_noetherian_free_algebra():
    assert noetherian_test(build_ufnarovski(omega())) == (False, False, False)


# cyclic monomials, semiprime, prime

def test_cyclic_vertices_and_monomials():
    g = build_ufnarovski(omega(XX, YX))
    assert cyclic_vertices(g) == {Y}
    assert is_cyclic_monomial(Y, g)
    assert not is_cyclic_monomial(X, g)
    assert is_cyclic_monomial((1, 1, 1), g)
    assert not is_cyclic_monomial((0, 1, 1), g)
    with pytest.raises(NotNormalError):
        is_cyclic_monomial(YX, g)


def test_semiprime_examples():
    assert not semiprime_test(omega(XX, YX))
    assert semiprime_test(omega(X, Y))
    assert semiprime_test(omega((0, 0, 0)))
    assert not semiprime_test(omega(YX))


def test_prime_examples():
    assert prime_test(omega((0, 0, 0, 0, 0)))
    assert not prime_test(omega(XX, YX))
    assert prime_test(omega(XX))


# chain graph

def test_chain_graph_triangular():
    cg = build_chain_graph(triangular())
    one = ()
    x1, x2, x3 = (0,), (1,), (2,)
    assert set(cg.edges) == {(one, x1), (one, x2), (one, x3), (x2, x1), (x3, x1), (x3, x2)}


def test_chain_graph_square():
    cg = build_chain_graph(omega(XX))
    assert set(cg.vertices) == {(), X, Y}
    assert set(cg.edges) == {((), X), ((), Y), (X, X)}


def test_chain_graph_empty():
    cg = build_chain_graph(omega())
    assert set(cg.edges) == {((), X), ((), Y)}
    assert n_chains(cg, 1).chains == frozenset()


def test_chains_examples():
    cg = build_chain_graph(triangular())
    assert n_chains(cg, -1).chains == {()}
    assert n_chains(cg, 0).chains == {(0,), (1,), (2,)}
    assert n_chains(cg, 1).chains == {(1, 0), (2, 0), (2, 1)}
    assert n_chains(cg, 2).chains == {(2, 1, 0)}
    assert n_chains(cg, 3).chains == frozenset()
    cg = build_chain_graph(omega(XX))
    assert n_chains(cg, 2).chains == {(0, 0, 0)}
    assert n_chains(cg, 3).chains == {(0, 0, 0, 0)}


def test_overlapping_chains():
    cg = build_chain_graph(omega((0, 0, 0)))
    assert n_chains(cg, 2).chains == {(0,) * 4}
    assert n_chains(cg, 3).chains == {(0,) * 6}


def test_one_chains_are_obstructions():
    for om in random_family(12, 30, min_len=2):
        assert n_chains(build_chain_graph(om), 1).chains == om.words


def test_global_dim_bound():
    assert global_dim_bound(build_chain_graph(triangular())).value == 3
    assert global_dim_bound(build_chain_graph(omega(XX))).value is None
    assert str(global_dim_bound(build_chain_graph(omega(XX)))) == "Unbounded"
    for n in range(1, 5):
        order = deglex(GeneratorSet(tuple(f"X{i}" for i in range(1, n + 1))))
        om = reduce_obstructions([(j, i) for i in range(n) for j in range(i + 1, n)], order)
        assert global_dim_bound(build_chain_graph(om)).value == n
