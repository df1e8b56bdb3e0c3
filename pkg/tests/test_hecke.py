import dataclasses
from collections import Counter

import numpy as np
from hypothesis import given

from heckeposet.compositions import Composition, comp_of
from heckeposet.hecke import (
    Kind,
    Move,
    characteristic,
    characteristic_of_poset_module,
    check_relations,
    composition_series_multiset,
    dual_left_interval_module,
    functor_F,
    interval_module,
    poset_module,
    poset_module_bar,
    restrict,
    twist,
)
from heckeposet.permutations import Permutation, des_right, f_map, interval, w0
from heckeposet.posets import LabeledPoset, all_posets_on, linear_extensions, sigma_R, split
from heckeposet.qsym import QsymElement, invol_psi, invol_rho

from strategies import permutations, posets

P = Permutation.parse
RUNNING = LabeledPoset.from_covers(5, [(5, 1), (1, 3), (1, 4), (2, 4)])
REMARK = LabeledPoset.from_covers(5, [(1, 2), (1, 5), (3, 4), (3, 2), (5, 4)])


def F(*pairs):
    return QsymElement("F", {Composition(a): c for a, c in pairs})


def test_running_pibar_table():
    m = poset_module(RUNNING)
    g = P("25134")
    assert m.act(1, g) == Move(Kind.SEND, P("52134"))
    assert m.act(2, g) == Move(Kind.NEG_SELF)
    assert m.act(3, g) == Move(Kind.ZERO)
    table = m.table_json(2)
    assert {"from": "25134", "to": "25134", "sign": -1} in table["rows"]


def test_running_pi_table():
    m = poset_module_bar(RUNNING)
    g = P("25134")
    assert m.act(2, g) == Move(Kind.SELF)
    assert m.act(1, g) == Move(Kind.SEND, P("52134"))


def test_small_modules():
    chain = poset_module(LabeledPoset.chain(4))
    assert chain.dimension == 1
    assert all(chain.act(i, chain.basis[0]).kind is Kind.ZERO for i in range(1, 4))
    assert characteristic(chain) == F(((4,), 1))
    anti = poset_module(LabeledPoset.antichain(4))
    assert anti.dimension == 24
    m = interval_module("right", "bar", Permutation.identity(2), w0(2))
    assert m.act(1, P("12")) == Move(Kind.SEND, P("21"))
    assert m.act(1, P("21")) == Move(Kind.NEG_SELF)
    assert interval_module("left", "plain", P("2413"), P("2413")).dimension == 1


def test_relations_exhaustive_on_4():
    for p in all_posets_on(4):
        assert check_relations(poset_module(p))
        assert check_relations(poset_module_bar(p))


def test_corrupted_table_fails():
    m = poset_module(RUNNING)
    action = dict(m.action)
    action[(2, P("25134"))] = Move(Kind.SEND, P("52134"))
    assert not check_relations(dataclasses.replace(m, action=action))
    action = dict(m.action)
    action[(1, P("25134"))] = Move(Kind.SEND, P("12345"))
    assert not check_relations(dataclasses.replace(m, action=action))


@given(permutations(max_n=5), permutations(max_n=5))
def test_interval_modules_satisfy_relations(a, b):
    if a.n != b.n:
        return
    for side in ("right", "left"):
        try:
            interval(side, a, b)
        except ValueError:
            continue
        for flavor in ("plain", "bar"):
            assert check_relations(interval_module(side, flavor, a, b))


def test_interval_module_is_poset_module():
    from heckeposet.posets import poset_from_interval

    s, r = P("25134"), P("52143")
    assert interval_module("right", "bar", s, r).same_action(poset_module(poset_from_interval(s, r)))


def test_remark_characteristic():
    m = poset_module(REMARK)
    assert m.dimension == 8
    want = F(
        ((3, 2), 1),
        ((3, 1, 1), 1),
        ((2, 2, 1), 2),
        ((2, 1, 2), 1),
        ((1, 3, 1), 1),
        ((1, 2, 2), 1),
        ((1, 2, 1, 1), 1),
    )
    assert characteristic(m) == want
    assert characteristic_of_poset_module(REMARK) == want


def test_characteristic_examples():
    assert characteristic_of_poset_module(LabeledPoset.antichain(2)) == F(((2,), 1), ((1, 1), 1))
    descents = Counter(comp_of(des_right(g), 5) for g in sigma_R(RUNNING))
    assert characteristic_of_poset_module(RUNNING).coeffs == descents
    assert composition_series_multiset(RUNNING) == descents
    assert composition_series_multiset(LabeledPoset.chain(3)) == Counter({Composition((3,)): 1})
    low, high = split(RUNNING, 1, 2)
    assert (len(linear_extensions(high)), len(linear_extensions(low))) == (3, 4)


@given(posets())
def test_matrix_and_descent_characteristics_agree(p):
    assert characteristic(poset_module(p)) == characteristic_of_poset_module(p)
    assert characteristic(poset_module_bar(p)) == invol_psi(characteristic_of_poset_module(p))


def test_restriction():
    pairs = restrict(RUNNING, 3)
    assert len(pairs) == 2
    assert all(q.n == 3 and rest.n == 2 for q, rest in pairs)
    (only,) = restrict(RUNNING, 0)
    assert only[0].n == 0 and only[1] == RUNNING
    (full,) = restrict(RUNNING, 5)
    assert full[0] == RUNNING and full[1].n == 0


def test_twists_on_running_example():
    kp = characteristic_of_poset_module(RUNNING)
    for which in ("phi", "theta", "chi"):
        assert twist(RUNNING, which).is_intertwiner()
    assert characteristic(twist(RUNNING, "phi").target) == invol_rho(kp)
    assert characteristic(twist(RUNNING, "theta").target) == invol_psi(kp)
    assert characteristic(twist(RUNNING, "chi").target) == kp
    chain = twist(LabeledPoset.chain(3), "theta").target
    assert chain.dimension == 1
    assert all(chain.act(i, chain.basis[0]).kind is Kind.ZERO for i in (1, 2))


def test_twist_intertwiner_detects_a_wrong_bijection():
    data = twist(RUNNING, "phi")
    d = data.bijection.shape[0]
    wrong = dataclasses.replace(data, bijection=np.roll(data.bijection, 1, axis=0))
    assert d > 1 and not wrong.is_intertwiner()


def test_functor_F():
    n = 4
    e = Permutation.identity(n)
    assert functor_F(e, e) == (w0(n), w0(n))


@given(permutations(min_n=2, max_n=4), permutations(min_n=2, max_n=4))
def test_functor_F_on_left_intervals(a, b):
    if a.n != b.n:
        return
    try:
        left = interval("left", a, b).elements
    except ValueError:
        return
    lo, hi = functor_F(a, b)
    assert {f_map(g) for g in left} == interval("right", lo, hi).elements
    assert characteristic(interval_module("left", "plain", a, b)) == characteristic(interval_module("right", "bar", lo, hi))
    dual = dual_left_interval_module(a, b).relabel({g: f_map(g) for g in left})
    assert dual.same_action(interval_module("right", "bar", lo, hi))
