from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superhopf.combinatorics import (
    DottedComposition,
    SuperPartition,
    dotted_compositions_of_degree,
    superpartitions_of_degree,
)
from superhopf.sqsym import M
from superhopf.superpoly import (
    EPS,
    DualNumber,
    NotQuasiSymmetric,
    SuperMonomial,
    SuperPolynomial,
    act,
    extract_M_expansion,
    mul,
    realize_M,
    realize_m,
    realize_m_literal,
    specialize_point,
)

x, th = SuperPolynomial.x, SuperPolynomial.theta


def test_mul_examples():
    assert mul(th(1, 2), th(1, 2)) == SuperPolynomial(2)
    assert mul(th(2, 2), th(1, 2)) == -mul(th(1, 2), th(2, 2))
    lhs = mul(x(1, 2) * th(2, 2), th(1, 2) * x(2, 2))
    rhs = -(th(1, 2) * th(2, 2) * x(1, 2) * x(2, 2))
    assert lhs == rhs
    with pytest.raises(ValueError):
        mul(x(1, 2), x(1, 3))


def test_realize_m_examples():
    assert realize_m(SuperPartition((0,), (1,)), 2) == th(1, 2) * x(2, 2) + th(2, 2) * x(1, 2)
    assert realize_m(SuperPartition((), (1,)), 3) == x(1, 3) + x(2, 3) + x(3, 3)
    expect = th(1, 2) * th(2, 2) * x(1, 2) - th(1, 2) * th(2, 2) * x(2, 2)
    assert realize_m(SuperPartition((1, 0), ()), 2) == expect
    with pytest.raises(ValueError):
        realize_m(SuperPartition((), (1, 1)), 1)


def test_realize_m_matches_literal_definition():
    for k in range(5):
        for lam in superpartitions_of_degree(k):
            for n in range(len(lam), 5):
                assert realize_m(lam, n) == realize_m_literal(lam, n), (lam, n)


def test_realize_m_is_symmetric():
    for k in range(5):
        for lam in superpartitions_of_degree(k):
            n = min(5, len(lam) + 1)
            p = realize_m(lam, n)
            for sigma in permutations(range(n)):
                assert act(sigma, p) == p


def test_realize_M_examples():
    assert realize_M(DottedComposition.of("0~", 1), 2) == th(1, 2) * x(2, 2)
    assert realize_M(DottedComposition.of(2), 3) == x(1, 3) * x(1, 3) + x(2, 3) * x(2, 3) + x(3, 3) * x(3, 3)
    assert realize_M(DottedComposition.of("1~", "1~"), 2) == th(1, 2) * th(2, 2) * x(1, 2) * x(2, 2)


def test_extract_M_expansion():
    alpha = DottedComposition.of("0~", 1)
    assert extract_M_expansion(realize_M(alpha, 3)) == M(alpha)
    assert extract_M_expansion(realize_m(SuperPartition((0,), (1,)), 3)) == M(["0~", 1]) + M([1, "0~"])
    with pytest.raises(NotQuasiSymmetric):
        extract_M_expansion(x(1, 2) - x(2, 2))


def test_act():
    assert act((1, 0), th(1, 2) * x(2, 2)) == th(2, 2) * x(1, 2)
    assert act((1, 0), th(1, 2) * th(2, 2)) == -(th(1, 2) * th(2, 2))
    p = th(1, 3) * x(2, 3) + x(3, 3)
    assert act((0, 1, 2), p) == p


def test_specialize_point():
    assert specialize_point(x(1, 2) * x(1, 2) * x(1, 2)) == DualNumber(1, 0)
    assert specialize_point(th(1, 2) * x(1, 2) * x(1, 2)) == EPS
    assert specialize_point(th(2, 2) * x(1, 2)) == DualNumber(0, 0)


def test_dual_numbers():
    a, b = DualNumber(2, 3), DualNumber(5, 7)
    assert a * b == DualNumber(10, 29)
    assert EPS * EPS == DualNumber(0, 0)
    assert str(DualNumber(1, -1)) == "1 - eps"


N_VARS = 4


@st.composite
def monomials(draw, parity=None):
    exps = tuple(draw(st.lists(st.integers(0, 2), min_size=N_VARS, max_size=N_VARS)))
    odd = sorted(draw(st.sets(st.integers(0, N_VARS - 1), max_size=3)))
    if parity is not None and len(odd) % 2 != parity:
        odd = odd[:-1] if odd else [0]
    return SuperMonomial(exps, tuple(odd))


def polys(parity=None):
    return st.lists(
        st.tuples(monomials(parity), st.integers(-3, 3)), max_size=4
    ).map(lambda items: SuperPolynomial(N_VARS, dict(((m, c) for m, c in items))))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 1), st.integers(0, 1), st.data())
def test_supercommutativity(pa, pb, data):
    p = data.draw(polys(pa))
    q = data.draw(polys(pb))
    assert mul(p, q) == mul(q, p).scale(-1 if pa * pb else 1)


@settings(max_examples=40, deadline=None)
@given(polys(), polys(), polys())
def test_associativity(p, q, r):
    assert mul(mul(p, q), r) == mul(p, mul(q, r))


@settings(max_examples=40, deadline=None)
@given(polys(1))
def test_odd_square_vanishes(p):
    assert not mul(p, p)


SHORT_COMPOSITIONS = [a for k in range(1, 5) for a in dotted_compositions_of_degree(k) if len(a) <= 3]


@settings(max_examples=40, deadline=None)
@given(st.lists(st.tuples(st.sampled_from(SHORT_COMPOSITIONS), st.integers(-4, 4)), max_size=5))
def test_extract_inverts_realize(items):
    f = M([]).scale(0)
    for alpha, c in items:
        f = f + M(alpha).scale(c)
    p = SuperPolynomial(3)
    for alpha, c in f.terms.items():
        p = p + realize_M(alpha, 3).scale(c)
    assert extract_M_expansion(p) == f
