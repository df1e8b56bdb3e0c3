import pytest
from hypothesis import given

from heckeposet.compositions import (
    Composition,
    blocks,
    coarsenings,
    comp_of,
    complement,
    compositions_of,
    parse_composition,
    partitions_of,
    pi_pair,
    refinements,
    refines,
    reverse,
    set_of,
    sort_to_partition,
    z_stat,
)

from strategies import compositions

C = Composition


def test_set_of():
    assert set_of(C((1, 1, 2, 2, 1, 1, 1))) == {1, 2, 4, 6, 7, 8}
    assert set_of(C((3, 2, 4))) == {3, 5}
    assert set_of(C((5,))) == frozenset()


def test_comp_of():
    assert comp_of({2, 5}, 6) == (2, 3, 1)
    assert comp_of(set(), 4) == (4,)
    assert comp_of({1, 2, 3}, 4) == (1, 1, 1, 1)


@given(compositions())
def test_set_comp_roundtrip(alpha):
    assert comp_of(set_of(alpha), sum(alpha)) == alpha


def test_refines():
    alpha = C((2, 3, 1))
    for beta in [(2, 3, 1), (5, 1), (2, 4), (6,)]:
        assert refines(alpha, C(beta))
    assert not refines(C((5, 1)), alpha)
    assert set(coarsenings(alpha)) == {C(b) for b in [(2, 3, 1), (5, 1), (2, 4), (6,)]}
    with pytest.raises(ValueError):
        refines(C((1, 1)), C((3,)))


@given(compositions(max_size=6))
def test_coarsening_refinement_duality(alpha):
    for beta in coarsenings(alpha):
        assert alpha in set(refinements(beta))
    assert len(list(coarsenings(alpha))) == 2 ** (len(alpha) - 1)


def test_reverse_complement():
    assert reverse(C((3, 2, 4))) == (4, 2, 3)
    assert complement(C((3, 2, 4))) == (1, 1, 2, 2, 1, 1, 1)
    assert complement(C((4,))) == (1, 1, 1, 1)


@given(compositions())
def test_complement_involution(alpha):
    assert complement(complement(alpha)) == alpha
    assert reverse(reverse(alpha)) == alpha
    assert len(alpha) + len(complement(alpha)) == sum(alpha) + 1


def test_z_and_pi():
    assert z_stat(C((2, 3, 1))) == 6
    assert z_stat(C((1, 1, 1))) == 6
    assert z_stat(C((7,))) == 7
    alpha = C((2, 3, 1))
    assert pi_pair(alpha, alpha) == 6
    assert pi_pair(alpha, C((5, 1))) == 10
    assert pi_pair(alpha, C((2, 4))) == 24
    assert pi_pair(alpha, C((6,))) == 60
    assert blocks(alpha, C((5, 1))) == [(2, 3), (1,)]


def test_sort_to_partition():
    assert sort_to_partition(C((2, 3, 1))) == (3, 2, 1)
    assert sort_to_partition(C((4,))) == (4,)
    assert sort_to_partition(C((1, 3, 1, 3))) == (3, 3, 1, 1)


def test_enumeration_counts():
    assert list(compositions_of(0)) == [()]
    assert len(list(compositions_of(3))) == 4
    six = list(compositions_of(6))
    assert len(six) == 32 and C((2, 3, 1)) in six
    assert [len(list(partitions_of(n))) for n in range(1, 8)] == [1, 2, 3, 5, 7, 11, 15]


def test_parse_and_format():
    assert parse_composition("2,1,2") == (2, 1, 2)
    assert parse_composition("(2,1,2)") == (2, 1, 2)
    assert str(C((2, 1, 2))) == "(2,1,2)"
    with pytest.raises(ValueError):
        parse_composition("2,0,1")
