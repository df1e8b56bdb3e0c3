"""0-Hecke modules with permutation bases.

Every module here has a basis of permutations on which each generator sends
a basis element to minus itself, itself, zero, or another basis element.
Tables are stored per generator; matrices are built only for checks.

Matrix convention: row ``b`` of the matrix for generator ``i`` holds the
image of basis element ``b``. For right modules this is the usual row-vector
action ``v . h = v A``. All 0-Hecke defining relations are palindromic, so
the same check applies to left modules.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from enum import Enum
from typing import Literal, NamedTuple

import numpy as np

from heckeposet.compositions import Composition, comp_of
from heckeposet.permutations import (
    Permutation,
    Side,
    des_left,
    des_right,
    interval,
    leq_left,
    length,
    w0,
)
from heckeposet.posets import (
    LabeledPoset,
    bar,
    linear_extensions,
    lower_subposets,
    split,
    standardize,
    star,
)
from heckeposet.qsym import QsymElement

Generator = Literal["pi", "pibar"]
Flavor = Literal["plain", "bar"]


class Kind(Enum):
    NEG_SELF = "neg_self"
    SELF = "self"
    ZERO = "zero"
    SEND = "send"


class Move(NamedTuple):
    kind: Kind
    target: Permutation | None = None


@dataclass(frozen=True)
class CombinatorialModule:
    """An H_n(0)-module given by an action table on a permutation basis.

    ``generator`` says which generators the table describes: ``"pibar"``
    (eigenvalues 0, -1) or ``"pi"`` (eigenvalues 0, 1).
    """

    side: Side
    generator: Generator
    n: int
    basis: tuple[Permutation, ...]
    action: Mapping[tuple[int, Permutation], Move] = field(repr=False)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def act(self, i: int, b: Permutation) -> Move:
        return self.action[(i, b)]

    def index(self) -> dict[Permutation, int]:
        return {b: k for k, b in enumerate(self.basis)}

    def matrix(self, i: int, generator: Generator = "pibar") -> np.ndarray:
        """Integer matrix of ``generator``_i (rows are images of basis elements)."""
        idx = self.index()
        d = len(self.basis)
        a = np.zeros((d, d), dtype=np.int64)
        for b, row in idx.items():
            mv = self.action[(i, b)]
            if mv.kind is Kind.NEG_SELF:
                a[row, row] = -1
            elif mv.kind is Kind.SELF:
                a[row, row] = 1
            elif mv.kind is Kind.SEND:
                if mv.target not in idx:
                    raise KeyError(f"{b} is sent outside the basis to {mv.target}")
                a[row, idx[mv.target]] += 1
        if generator == self.generator:
            return a
        eye = np.eye(d, dtype=np.int64)
        return a - eye if generator == "pibar" else a + eye

    def matrices(self, generator: Generator = "pibar") -> list[np.ndarray]:
        return [self.matrix(i, generator) for i in range(1, self.n)]

    def table_json(self, i: int) -> dict:
        """Action of generator ``i`` in the golden-file JSON layout."""
        rows = []
        for b in self.basis:
            mv = self.action[(i, b)]
            if mv.kind is Kind.ZERO:
                continue
            to = b if mv.target is None else mv.target
            sign = -1 if mv.kind is Kind.NEG_SELF else 1
            rows.append({"from": str(b), "to": str(to), "sign": sign})
        return {"side": self.side, "basis": [str(b) for b in self.basis], "gen": i, "rows": rows}

    def relabel(self, mapping: Mapping[Permutation, Permutation]) -> CombinatorialModule:
        action = {
            (i, mapping[b]): Move(mv.kind, None if mv.target is None else mapping[mv.target])
            for (i, b), mv in self.action.items()
        }
        basis = tuple(sorted(mapping[b] for b in self.basis))
        return CombinatorialModule(self.side, self.generator, self.n, basis, action)

    def same_action(self, other: CombinatorialModule) -> bool:
        return (
            self.side == other.side
            and self.generator == other.generator
            and set(self.basis) == set(other.basis)
            and dict(self.action) == dict(other.action)
        )


def _descent_module(
    side: Side,
    generator: Generator,
    n: int,
    basis: Iterable[Permutation],
) -> CombinatorialModule:
    elems = tuple(sorted(basis))
    members = set(elems)
    action: dict[tuple[int, Permutation], Move] = {}
    for g in elems:
        des = des_right(g) if side == "right" else des_left(g)
        for i in range(1, n):
            if i in des:
                action[(i, g)] = Move(Kind.NEG_SELF if generator == "pibar" else Kind.SELF)
                continue
            h = g.times_s(i) if side == "right" else g.s_times(i)
            action[(i, g)] = Move(Kind.SEND, h) if h in members else Move(Kind.ZERO)
    return CombinatorialModule(side, generator, n, elems, action)


def poset_module(poset: LabeledPoset) -> CombinatorialModule:
    """M_P: the right module on linear extensions with the pibar action."""
    return _descent_module("right", "pibar", poset.n, linear_extensions(poset))


def poset_module_bar(poset: LabeledPoset) -> CombinatorialModule:
    """The companion right module on linear extensions with the pi action."""
    return _descent_module("right", "pi", poset.n, linear_extensions(poset))


def interval_module(side: Side, flavor: Flavor, sigma: Permutation, rho: Permutation) -> CombinatorialModule:
    """Weak Bruhat interval module; ``flavor="bar"`` uses the pibar generators."""
    elems = interval(side, sigma, rho).elements
    return _descent_module(side, "pibar" if flavor == "bar" else "pi", sigma.n, elems)


def dual_left_interval_module(sigma: Permutation, rho: Permutation) -> CombinatorialModule:
    """Right module on the dual of the left interval module, basis labeled by gamma.

    gamma* . pibar_i is -gamma* if i is not a left descent, (s_i gamma)* if it
    is and s_i gamma stays in the interval, and 0 otherwise.
    """
    elems = tuple(sorted(interval("left", sigma, rho).elements))
    members = set(elems)
    action: dict[tuple[int, Permutation], Move] = {}
    for g in elems:
        des = des_left(g)
        for i in range(1, sigma.n):
            if i not in des:
                action[(i, g)] = Move(Kind.NEG_SELF)
            elif g.s_times(i) in members:
                action[(i, g)] = Move(Kind.SEND, g.s_times(i))
            else:
                action[(i, g)] = Move(Kind.ZERO)
    return CombinatorialModule("right", "pibar", sigma.n, elems, action)


def functor_F(sigma: Permutation, rho: Permutation) -> tuple[Permutation, Permutation]:
    """Endpoints of the right interval matching the image of the left interval module."""
    if not leq_left(sigma, rho):
        raise ValueError(f"{sigma} is not below {rho} in the left weak order")
    top = w0(sigma.n)
    return top * rho.inverse(), top * sigma.inverse()


def check_relations(module: CombinatorialModule) -> bool:
    """Quadratic, braid and far-commutation relations as matrix identities."""
    try:
        mats = module.matrices("pibar")
    except KeyError:
        return False
    return relations_hold(mats)


def relations_hold(mats: list[np.ndarray]) -> bool:
    for i, a in enumerate(mats):
        if not np.array_equal(a @ a, -a):
            return False
        if i + 1 < len(mats):
            b = mats[i + 1]
            if not np.array_equal(a @ b @ a, b @ a @ b):
                return False
        for b in mats[i + 2 :]:
            if not np.array_equal(a @ b, b @ a):
                return False
    return True


def characteristic(module: CombinatorialModule) -> QsymElement:
    """Sum of F over composition factors, read off the diagonal of each pibar_i.

    Valid for the triangular modules built here, where each non-diagonal move
    goes strictly up in weak order.
    """
    counts: Counter[Composition] = Counter()
    for b in module.basis:
        neg = set()
        for i in range(1, module.n):
            kind = module.action[(i, b)].kind
            if module.generator == "pibar" and kind is Kind.NEG_SELF:
                neg.add(i)
            if module.generator == "pi" and kind in (Kind.ZERO, Kind.SEND):
                neg.add(i)
        counts[comp_of(neg, module.n)] += 1
    return QsymElement("F", counts)


def characteristic_of_poset_module(poset: LabeledPoset) -> QsymElement:
    """K_P as a sum of F over right descent compositions of linear extensions."""
    counts = Counter(comp_of(des_right(e), poset.n) for e in linear_extensions(poset))
    return QsymElement("F", counts)


def composition_series_multiset(poset: LabeledPoset) -> Counter[Composition]:
    """Split at incomparable pairs until chains remain; collect their descent compositions."""
    pairs = poset.incomparable_pairs()
    if not pairs:
        (ext,) = linear_extensions(poset)
        return Counter([comp_of(des_right(ext), poset.n)])
    u, v = pairs[0]
    low, high = split(poset, u, v)
    return composition_series_multiset(low) + composition_series_multiset(high)


def restrict(poset: LabeledPoset, m: int) -> list[tuple[LabeledPoset, LabeledPoset]]:
    """Pairs (st(Q), st(P minus Q)) over lower subposets Q of size m."""
    everything = set(range(1, poset.n + 1))
    return [
        (standardize(poset, q), standardize(poset, everything - q))
        for q in lower_subposets(poset, m)
    ]


Twist = Literal["phi", "theta", "chi"]


@dataclass(frozen=True)
class TwistData:
    """A twisted module as pibar matrices, its claimed target, and the basis bijection.

    ``bijection`` satisfies ``twisted[i] @ bijection == bijection @ target[i]``
    when it is an intertwiner.
    """

    which: Twist
    twisted: list[np.ndarray]
    target: CombinatorialModule
    bijection: np.ndarray

    def is_intertwiner(self) -> bool:
        tgt = self.target.matrices("pibar")
        b = self.bijection
        return all(np.array_equal(a @ b, b @ t) for a, t in zip(self.twisted, tgt))


def twist_target(poset: LabeledPoset, which: Twist) -> CombinatorialModule:
    if which == "phi":
        return poset_module(star(bar(poset)))
    if which == "theta":
        return poset_module_bar(poset)
    if which == "chi":
        return poset_module_bar(bar(poset))
    raise ValueError(f"unknown twist {which!r}")


def twist_bijection(which: Twist, gamma: Permutation) -> tuple[int, Permutation]:
    """Image of a basis element (or dual basis element, for chi) with its sign."""
    top = w0(gamma.n)
    if which == "phi":
        return 1, top * gamma * top
    if which == "theta":
        return (-1) ** length(gamma), gamma
    if which == "chi":
        return 1, top * gamma
    raise ValueError(f"unknown twist {which!r}")


def twist(poset: LabeledPoset, which: Twist) -> TwistData:
    """Twist M_P by phi, theta or chi and pair it with its target module."""
    source = poset_module(poset)
    n = poset.n
    d = source.dimension
    eye = np.eye(d, dtype=np.int64)
    base = {i: source.matrix(i) for i in range(1, n)}
    if which == "phi":
        twisted = [base[n - i] for i in range(1, n)]
    elif which == "theta":
        twisted = [-(base[i] + eye) for i in range(1, n)]
    elif which == "chi":
        twisted = [base[i].T for i in range(1, n)]
    else:
        raise ValueError(f"unknown twist {which!r}")
    target = twist_target(poset, which)
    tidx = target.index()
    bij = np.zeros((d, d), dtype=np.int64)
    for row, g in enumerate(source.basis):
        sign, image = twist_bijection(which, g)
        bij[row, tidx[image]] = sign
    return TwistData(which, twisted, target, bij)
