from itertools import product

import pytest

from superhopf.combinatorics import (
    DottedComposition,
    RepeatedDotted,
    SuperPartition,
    aut_count,
    dotted_compositions_of_degree,
    sort_dotted,
    superpartitions_of_degree,
)


def brute_superpartitions(k):
    """All (strict decreasing >= 0; weak decreasing >= 1) pairs with n_degree k."""
    found = set()

    def seqs(max_len, max_val):
        for length in range(max_len + 1):
            yield from product(range(max_val + 1), repeat=length)

    for dotted in seqs(k, k):
        if list(dotted) != sorted(set(dotted), reverse=True):
            continue
        used = sum(dotted) + len(dotted)
        if used > k:
            continue
        for plain in seqs(k - used, k - used):
            if 0 in plain or list(plain) != sorted(plain, reverse=True):
                continue
            if sum(plain) == k - used:
                found.add(SuperPartition(dotted, plain))
    return found


def test_superpartitions_small():
    assert superpartitions_of_degree(0) == [SuperPartition()]
    assert set(superpartitions_of_degree(1)) == {SuperPartition((), (1,)), SuperPartition((0,), ())}
    three = superpartitions_of_degree(3)
    assert len(three) == 8
    assert SuperPartition((1, 0), ()) in three


@pytest.mark.parametrize("k", range(7))
def test_superpartitions_match_brute_force(k):
    got = superpartitions_of_degree(k)
    assert len(got) == len(set(got))
    assert set(got) == brute_superpartitions(k)
    assert all(lam.n_degree == k for lam in got)
    assert got == superpartitions_of_degree(k)


def test_dotted_compositions_small():
    assert dotted_compositions_of_degree(0) == [DottedComposition()]
    assert set(dotted_compositions_of_degree(1)) == {DottedComposition.of(1), DottedComposition.of("0~")}
    assert len(dotted_compositions_of_degree(4)) == 54


def count_by_first_entry(k):
    # first entry r (1..k) leaves k-r, dotted s (0..k-1) leaves k-s-1
    if k == 0:
        return 1
    return sum(count_by_first_entry(k - r) for r in range(1, k + 1)) + sum(
        count_by_first_entry(k - s - 1) for s in range(k)
    )


@pytest.mark.parametrize("k", range(1, 9))
def test_dotted_composition_counts(k):
    comps = dotted_compositions_of_degree(k)
    assert len(comps) == 2 * 3 ** (k - 1) == count_by_first_entry(k)
    assert len(set(comps)) == len(comps)
    assert all(a.n_degree == k for a in comps)


def test_sort_dotted():
    assert sort_dotted(DottedComposition.of("0~", 1)) == (SuperPartition((0,), (1,)), 1)
    assert sort_dotted(DottedComposition.of("1~", "2~")) == (SuperPartition((2, 1), ()), -1)
    with pytest.raises(RepeatedDotted):
        sort_dotted(DottedComposition.of("1~", "1~"))


def test_sort_dotted_sorted_input_has_plus_sign():
    for k in range(6):
        for lam in superpartitions_of_degree(k):
            assert sort_dotted(lam.to_composition()) == (lam, 1)


def test_aut_count():
    assert aut_count((1, 1, 1)) == 6
    assert aut_count((2, 1)) == 1
    assert aut_count((2, 2, 1)) == 2


def test_superpartition_validation_and_degrees():
    lam = SuperPartition((2, 1), (3, 1))
    assert (lam.total_degree, lam.fermionic_degree, lam.n_degree, lam.parity) == (7, 2, 9, 0)
    assert str(lam) == "(2,1;3,1)"
    assert lam.render() == "2~,1~,3,1"
    for bad in [((1, 1), ()), ((0, 1), ()), ((), (1, 2)), ((), (0,))]:
        with pytest.raises(ValueError):
            SuperPartition(*bad)


def test_dotted_composition_fields():
    alpha = DottedComposition.of("1~", "0~", 3)
    assert alpha.eta == (1, 1, 0)
    assert (alpha.total_degree, alpha.fermionic_degree, alpha.n_degree) == (4, 2, 6)
    assert str(alpha) == "[1~,0~,3]"
    assert DottedComposition.of("1~", "1~").n_degree == 4
    with pytest.raises(ValueError):
        DottedComposition.of(0)
