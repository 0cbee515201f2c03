from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gradelift.errors import ZeroPolynomialError
from gradelift.freealg import (
    GeneratorSet,
    NcPolynomial,
    Ordering,
    compare,
    concat,
    deglex,
    occurrences,
    poly_add,
    poly_mul,
)
from oracles import naive_occurrences

ORDER = deglex(GeneratorSet(("X", "Y")))
words = st.lists(st.integers(0, 1), max_size=6).map(tuple)
nonempty = st.lists(st.integers(0, 1), min_size=1, max_size=6).map(tuple)


def P(*terms):
    return NcPolynomial(ORDER, terms)


X, Y = (0,), (1,)
XY, YX, XX, YY = (0, 1), (1, 0), (0, 0), (1, 1)


def test_compare_examples():
    assert compare(ORDER, X, XY) is Ordering.LESS
    assert compare(ORDER, XY, YX) is Ordering.LESS
    assert compare(ORDER, YX, YX) is Ordering.EQUAL


def test_precedence_decoupled_from_declaration():
    order = deglex(GeneratorSet(("X", "Y"), (1, 0)))  # Y < X
    assert order.compare(X, Y) is Ordering.GREATER
    assert order.compare(XY, YX) is Ordering.GREATER


def test_generator_set_validation():
    with pytest.raises(ValueError):
        GeneratorSet(("X", "X"))
    with pytest.raises(ValueError):
        GeneratorSet(("X", "Y"), (0, 0))
    with pytest.raises(ValueError):
        GeneratorSet(())


def test_concat():
    assert concat(X, Y) == XY
    assert concat((), XY) == XY
    assert concat(XY, X) == (0, 1, 0)


def test_occurrences_examples():
    assert occurrences(X, (1, 0, 1)) == [(Y, Y)]
    assert occurrences(XX, (0, 0, 0)) == [((), X), (X, ())]
    assert occurrences(YY, (0, 1, 0)) == []


@given(nonempty, words)
def test_occurrences_match_naive_scan(u, w):
    assert occurrences(u, w) == naive_occurrences(u, w)


def test_poly_arithmetic_examples():
    f = P((XY, 1), (YX, -1))
    assert poly_add(f, -f).is_zero()
    assert poly_mul(f, NcPolynomial.constant(ORDER, 1)) == f
    g = poly_mul(P((X, 1), (Y, 1)), P((X, 1), (Y, -1)))
    assert g == P((XX, 1), (XY, -1), (YX, 1), (YY, -1))


def test_leading_data():
    assert P((XY, 1), (YX, -1)).lm() == YX
    assert P((YX, 3), (XY, -1)).lc() == 3
    weyl = P((YX, 1), (XY, -1), ((), -1))
    assert weyl.lm() == YX
    assert weyl.lt() == (Fraction(1), YX)


def test_head_terms():
    weyl = P((YX, 1), (XY, -1), ((), -1))
    assert weyl.ht() == P((YX, 1), (XY, -1))
    hom = P((XY, 2), (YY, 1))
    assert hom.ht() == hom
    assert P((X, 1), (YX, 1), (XY, 1)).ht() == P((YX, 1), (XY, 1))


def test_zero_polynomial_has_no_leading_data():
    z = NcPolynomial.zero(ORDER)
    for fn in (z.lm, z.lc, z.lt, z.ht):
        with pytest.raises(ZeroPolynomialError):
            fn()


@given(words, words, words)
def test_order_axioms(u, v, w):
    key = ORDER.key
    if key(u) < key(v):
        assert key(u + w) < key(v + w)
        assert key(w + u) < key(w + v)
    if u and v:
        assert key(u + v) > key(u) and key(u + v) > key(v)
    if u:
        assert key(()) < key(u)


polys = st.lists(st.tuples(words.filter(lambda w: len(w) <= 3), st.integers(-3, 3)), max_size=4).map(
    lambda ts: NcPolynomial(ORDER, ts)
)


@settings(max_examples=60)
@given(polys, polys, polys)
def test_ring_axioms(f, g, h):
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert (f + g) * h == f * h + g * h
    assert f + g == g + f


def test_noncommutative():
    x, y = P((X, 1)), P((Y, 1))
    assert x * y != y * x


@given(polys)
def test_lm_of_head_term(f):
    if f:
        assert f.ht().lm() == f.lm()
        assert f.ht().is_homogeneous()
        assert f.ht().degree() == f.degree()


def test_terms_strictly_descending():
    f = P((YY, 1), ((), 2), (XY, -1), (X, 5), (YX, 1))
    keys = [ORDER.key(t.word) for t in f.terms]
    assert keys == sorted(keys, reverse=True)
    assert len(set(keys)) == len(keys)
