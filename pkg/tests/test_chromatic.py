from math import factorial
from random import Random

import pytest

import oracles
from superhopf import chsa
from superhopf.chromatic import (
    CHROMATIC,
    CHROMATIC_ADMISSIBLE,
    Graph,
    GraphElement,
    GraphTooLarge,
    MultiWhiteComponent,
    _layout,
    admissible_basis,
    basis,
    canonical_component,
    canonicalize,
    coloring_sum,
    complete_black,
    complete_one_white,
    connected_coproduct_literal,
    connected_components_of_size,
    coproduct,
    from_json,
    from_raw,
    path,
    psi_coloring,
    psi_universal,
    restrict,
    white_center_star,
    zeta_ch,
)
from superhopf.linear import tensor
from superhopf.slambda import e, et, m, realize
from superhopf.sqsym import M
from superhopf.superpoly import EPS, DualNumber

B = from_raw(1)
W = from_raw(1, [0])
ONE = GraphElement.one()


def single(x: GraphElement) -> Graph:
    (g,) = x.terms
    return g


def test_canonicalize_and_product():
    b, w = single(B).components[0], single(W).components[0]
    assert canonicalize([w, w])[0] == 0
    assert canonicalize([w, b]) == (1, Graph((b, w)))
    assert not W * W
    assert B * B
    assert W * B == B * W
    bw = single(path("bw")).components[0]
    # two distinct odd components anticommute
    assert W * path("bw") == -(path("bw") * W)
    assert canonicalize([bw, w])[0] == -canonicalize([w, bw])[0]


def test_canonical_component_is_label_invariant():
    a = canonical_component(3, [0], [(0, 1), (1, 2)])
    b = canonical_component(3, [2], [(2, 1), (1, 0)])
    assert a == b
    assert a != canonical_component(3, [1], [(0, 1), (1, 2)])
    with pytest.raises(ValueError):
        canonical_component(3, [], [(0, 1)])
    with pytest.raises(GraphTooLarge):
        complete_black(11)


def test_from_raw_splits_components():
    assert from_raw(3, [2], [(0, 1)]) == path("bb") * W
    assert from_raw(2, [0, 1]) == W * W


def test_restrict():
    bb = single(path("bb"))
    assert restrict(bb, [0]) == B
    ww = single(path("ww"))
    assert restrict(ww, [0, 1]) == path("ww")
    assert not restrict(ww, [0]) * restrict(ww, [1])
    # the same subset with the edge removed is [o|o] = 0
    assert not restrict(single(path("wbw")), [1, 2])
    claw = single(white_center_star(3))
    assert restrict(claw, [0, 3]) == path("wb")
    assert restrict(claw, [0, 1, 2]) == B * B * B
    with pytest.raises(ValueError):
        restrict(claw, [7])


def test_zeta_ch():
    assert zeta_ch(B * B * B) == DualNumber(1, 0)
    assert zeta_ch(B * W) == EPS
    assert zeta_ch(path("bb")) == DualNumber(0, 0)


def test_coproduct_examples():
    bb, bw, ww, wwb = path("bb"), path("bw"), path("ww"), path("wwb")
    assert coproduct(bb) == tensor(bb, ONE) + 2 * tensor(B, B) + tensor(ONE, bb)
    assert coproduct(bw) == tensor(bw, ONE) + tensor(B, W) + tensor(W, B) + tensor(ONE, bw)
    assert coproduct(ww) == tensor(ww, ONE) + tensor(ONE, ww)
    assert coproduct(wwb) == tensor(wwb, ONE) + tensor(B, ww) + tensor(ww, B) + tensor(ONE, wwb)
    claw, bwb = white_center_star(3), path("bwb")
    expect = (
        tensor(claw, ONE)
        + tensor(ONE, claw)
        + 3 * tensor(B, bwb)
        + 3 * tensor(bwb, B)
        + 3 * tensor(bw, B * B)
        + 3 * tensor(B * B, bw)
        + tensor(W, B * B * B)
        + tensor(B * B * B, W)
    )
    assert coproduct(claw) == expect


@pytest.mark.parametrize("n", range(1, 6))
def test_simplified_coproduct_matches_literal(n):
    for c in connected_components_of_size(n):
        assert coproduct(GraphElement.basis(Graph((c,)))) == connected_coproduct_literal(c), c.render()


def test_connected_counts():
    # colored paths and triangles: 6 + 4 on three vertices
    assert [len(connected_components_of_size(n)) for n in range(1, 4)] == [2, 3, 10]


def test_psi_examples():
    assert psi_universal(B) == e(1)
    assert psi_universal(path("bb")) == 2 * e(2)
    assert psi_universal(W) == et(0)
    assert psi_universal(path("bw")) == et(1)
    assert not psi_universal(path("wwb"))
    claw = m((0,), (3,)) + 6 * m((0,), (1, 1, 1)) + 3 * m((0,), (2, 1))
    assert psi_universal(white_center_star(3)) == claw
    assert psi_coloring(white_center_star(3)) == claw


def test_literal_coloring_sum_on_wwb():
    assert coloring_sum(single(path("wwb"))) == m((1, 0), ())
    with pytest.raises(MultiWhiteComponent):
        psi_coloring(path("wwb"))


@pytest.mark.parametrize("n", range(6))
def test_complete_one_white(n):
    k = complete_one_white(n)
    assert psi_universal(k) == factorial(n) * et(n)
    assert psi_coloring(k) == factorial(n) * et(n)


@pytest.mark.parametrize("n", range(1, 4))
def test_complete_one_white_single_vertex_words(n):
    t = chsa.iterated_coproduct(CHROMATIC, complete_one_white(n), n + 1)
    b, w = single(B), single(W)
    for k in range(n + 1):
        word = (b,) * k + (w,) + (b,) * (n - k)
        assert t.coefficient(word) == factorial(n)


@pytest.mark.parametrize("k", range(1, 6))
def test_universal_matches_coloring_on_admissible(k):
    for g in admissible_basis(k):
        x = GraphElement.basis(g)
        assert psi_universal(x) == psi_coloring(x), str(g)


@pytest.mark.parametrize("k", range(1, 6))
def test_all_black_graphs_match_stanley(k):
    for g in basis(k):
        if g.n_white:
            continue
        n, _, edges = _layout(g)
        p = realize(psi_universal(GraphElement.basis(g)), n)
        got = {mono.exponents: c for mono, c in p.terms.items()}
        assert got == dict(oracles.stanley_chromatic(n, edges, n)), str(g)


def test_psi_is_multiplicative():
    rng = Random(7)
    pool = [g for k in range(1, 4) for g in admissible_basis(k)]
    for _ in range(40):
        a, b = GraphElement.basis(rng.choice(pool)), GraphElement.basis(rng.choice(pool))
        assert psi_universal(a * b) == psi_universal(a) * psi_universal(b)


def test_psi_preserves_grading():
    for k in range(1, 5):
        for g in admissible_basis(k):
            for lam in psi_universal(GraphElement.basis(g)).terms:
                assert lam.n_degree == k and lam.fermionic_degree == g.n_white


def test_admissible_instance_axioms():
    report = chsa.verify_hopf(CHROMATIC_ADMISSIBLE, 4)
    assert report.passed, report.to_text()
    assert report.cocommutative and report.commutative


def test_multi_white_path_image_is_not_symmetric():
    # recorded counterexample for the vanishing statement
    x = path("wbwb")
    assert chsa.psi_to_sqsym(CHROMATIC, x) == M(["1~", "0~", 1]) - M(["0~", "1~", 1])


def test_json_input():
    assert from_json('{"vertices": 2, "white": [1], "edges": [[0, 1]]}') == path("bw")
    assert from_json([{"vertices": 1, "white": [0]}, {"vertices": 2, "white": [1], "edges": [[0, 1]]}]) == W * path("bw")
    with pytest.raises(ValueError):
        from_json({"white": []})
    with pytest.raises(ValueError):
        from_json(3)
