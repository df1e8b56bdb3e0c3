import pytest
from hypothesis import given

from heckeposet.compositions import Composition, complement, set_of
from heckeposet.permutations import (
    Permutation,
    all_permutations,
    des_left,
    des_right,
    f_map,
    interval,
    inversions,
    length,
    leq_left,
    leq_right,
    reverse_blocks,
    w0,
    w0_of,
)

from strategies import compositions, permutations

P = Permutation.parse


def test_length_and_inversions():
    assert length(Permutation.identity(4)) == 0
    assert length(w0(4)) == 6
    assert inversions(P("25134")) == {(2, 1), (5, 1), (5, 3), (5, 4)}


def test_descents():
    assert des_left(P("841539762")) == {2, 3, 6, 7}
    assert des_right(P("25134")) == {2}
    assert des_right(Permutation.identity(5)) == frozenset()
    assert des_right(w0(5)) == {1, 2, 3, 4}


@given(permutations())
def test_left_descents_are_right_descents_of_inverse(g):
    assert des_left(g) == des_right(g.inverse())
    assert length(g) == length(g.inverse()) == len(inversions(g))


def test_w0_of():
    alpha = Composition((3, 2, 4))
    # the longest element of the parabolic subgroup attached to alpha^c
    assert w0_of(complement(alpha)) == P("321549876")
    assert reverse_blocks(alpha) == P("321549876")
    assert w0_of(Composition((4,))) == Permutation.identity(4)
    assert w0_of(Composition((1, 1, 1, 1))) == w0(4)


@given(compositions(max_size=7))
def test_w0_of_descents(alpha):
    assert des_right(w0_of(alpha)) == set_of(alpha)
    assert w0_of(alpha) == reverse_blocks(complement(alpha))


def test_weak_orders():
    assert leq_right(P("25134"), P("52143"))
    assert leq_right(Permutation.identity(5), P("52143"))
    assert not leq_right(w0(3), Permutation.identity(3))
    assert leq_left(P("321549876"), P("841539762"))


def test_intervals():
    assert len(interval("right", Permutation.identity(3), w0(3)).elements) == 6
    s = P("2413")
    assert interval("left", s, s).elements == {s}
    got = interval("right", P("25134"), P("52143")).elements
    assert got == {P(w) for w in ["25134", "52134", "25143", "52143"]}
    with pytest.raises(ValueError):
        interval("right", w0(3), Permutation.identity(3))


@given(permutations(max_n=5), permutations(max_n=5))
def test_right_order_is_inversion_inclusion(a, b):
    if a.n == b.n:
        assert leq_right(a, b) == (inversions(a) <= inversions(b))


def test_f_map():
    n = 5
    top = w0(n)
    assert f_map(Permutation.identity(n)) == top
    assert f_map(top) == Permutation.identity(n)
    images = {f_map(g) for g in all_permutations(n)}
    assert len(images) == 120
    # f is a bijection but squares to conjugation by w0
    for g in all_permutations(n):
        assert f_map(f_map(g)) == top * g * top


def test_parse_format():
    assert str(P("25134")) == "25134"
    assert P("2,5,1,3,4") == P("25134")
    big = Permutation(range(10, 0, -1))
    assert Permutation.parse(str(big)) == big
    with pytest.raises(ValueError):
        P("1134")
