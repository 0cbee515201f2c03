import random

import pytest

from gradelift.groebner import Presentation, complete, lm_obstructions
from gradelift.monoideal import (
    INFINITE,
    Dimension,
    ObstructionSet,
    RationalSeries,
    hilbert_function,
    hilbert_series,
    is_normal,
    normal_words,
    quotient_dimension,
    reduce_obstructions,
)
from gradelift.freealg import GeneratorSet, deglex
from oracles import (
    brute_normal_words,
    closure_ideal_dims,
    random_obstruction_words,
    random_presentation_relations,
    two_letter_order,
)

ORDER = two_letter_order()
X, Y = (0,), (1,)
XX, XY, YX, YY = (0, 0), (0, 1), (1, 0), (1, 1)


def omega(*words, order=ORDER):
    return reduce_obstructions(words, order)


def random_family(seed=0, count=20):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, 3)
        order = deglex(GeneratorSet(tuple(f"X{i}" for i in range(1, n + 1))))
        out.append(reduce_obstructions(random_obstruction_words(rng, n), order))
    return out


def test_reduce_obstructions():
    assert omega(XX, (0, 0, 0)).words == {XX}
    assert omega(YX, XX).words == {YX, XX}
    empty = omega()
    assert empty.words == frozenset() and empty.max_degree == 0


def test_unreduced_set_rejected():
    with pytest.raises(ValueError):
        ObstructionSet(frozenset({XX, (0, 0, 1)}), ORDER)


def test_is_normal():
    om = omega(XX, YX)
    assert is_normal(XY, om)
    assert not is_normal(YX, om)
    assert is_normal((), om)
    assert not is_normal((1, 1, 0, 1), om)


def test_normal_words_examples():
    assert normal_words(omega(XX, YX), 3) == [[()], [X, Y], [XY, YY], [(0, 1, 1), (1, 1, 1)]]
    assert normal_words(omega(YX), 2) == [[()], [X, Y], [XX, XY, YY]]
    assert [len(level) for level in normal_words(omega(), 2)] == [1, 2, 4]


def test_normal_words_match_brute_force():
    for om in random_family(1):
        got = normal_words(om, 6)
        for p in range(7):
            assert got[p] == brute_normal_words(om.words, om.n, p, om.order)


def test_hilbert_function_examples():
    assert hilbert_function(omega(XX, YX), 6).counts == (1, 2, 2, 2, 2, 2, 2)
    assert list(hilbert_function(omega(YX), 8).counts) == [p + 1 for p in range(9)]
    assert list(hilbert_function(omega(), 6).counts) == [2 ** p for p in range(7)]


def test_quotient_dimension():
    assert quotient_dimension(omega(X, Y)) == Dimension(1)
    assert quotient_dimension(omega(XX, YX, YY)) == Dimension(4)
    assert quotient_dimension(omega(XX, YX)) == INFINITE
    assert str(quotient_dimension(omega(XX, YX, YY))) == "Finite(4)"


def test_finite_dimension_sums_counts():
    for om in random_family(2, 40):
        dim = quotient_dimension(om)
        counts = hilbert_function(om, 20).counts
        if dim.is_finite:
            assert counts[-1] == 0
            assert sum(counts) == dim.value


def test_hilbert_series_examples():
    s = hilbert_series(omega(YX))
    assert (s.numerator, s.denominator) == ((1,), (1, -2, 1))
    assert s.expand(25) == [p + 1 for p in range(26)]
    s = hilbert_series(omega())
    assert (s.numerator, s.denominator) == ((1,), (1, -2))
    s = hilbert_series(omega(XX, YX))
    assert str(s) == "(1 + t)/(1 - t)"
    assert s.expand(25) == [1] + [2] * 25


def test_hilbert_series_matches_enumeration():
    for om in random_family(3):
        s = hilbert_series(om)
        assert s.expand(25) == list(hilbert_function(om, 25).counts)
        assert s.denominator[0] == 1


def test_hilbert_series_of_finite_algebra_is_polynomial():
    s = hilbert_series(omega(XX, YX, YY))
    assert s == RationalSeries((1, 2, 1), (1,))


def test_single_letter_obstructions():
    om = omega(X)
    assert list(hilbert_function(om, 5).counts) == [1] * 6
    assert str(hilbert_series(om)) == "1/(1 - t)"


def test_fundamental_decomposition_counts():
    rng = random.Random(41)
    for _ in range(10):
        rels = random_presentation_relations(rng, ORDER)
        g = complete(Presentation.build(ORDER, rels), 6)
        counts = hilbert_function(lm_obstructions(g), 6).counts
        ideal = closure_ideal_dims(rels, 2, 6, ORDER)
        for p in range(7):
            assert counts[p] + ideal[p] == 2 ** p
