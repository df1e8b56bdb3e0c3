"""Labeled posets on [n] and their linear extensions.

A poset stores its strict relation transitively closed, as one bitmask of
strict upper elements per label (bit ``j - 1`` set in ``up[i - 1]`` means
``i < j`` in the poset). Covers are recomputed on demand. A cover ``u < v``
with ``u > v`` as integers is a strict ("bold") edge; otherwise it is natural.
"""

from __future__ import annotations

import json
import os
from collections.abc import Iterable, Iterator
from functools import cache
from itertools import combinations
from pathlib import Path

from heckeposet.permutations import Permutation, inversions, leq_right


class LabeledPoset:
    __slots__ = ("n", "up", "_hash", "_covers")

    def __init__(self, n: int, relations: Iterable[tuple[int, int]] = ()) -> None:
        up = [0] * n
        for i, j in relations:
            if not (1 <= i <= n and 1 <= j <= n) or i == j:
                raise ValueError(f"bad relation {(i, j)} on [{n}]")
            up[i - 1] |= 1 << (j - 1)
        # Warshall closure on bitmasks
        for k in range(n):
            bit = 1 << k
            for i in range(n):
                if up[i] & bit:
                    up[i] |= up[k]
        for i in range(n):
            if up[i] >> i & 1:
                raise ValueError("relations contain a cycle")
        self.n = n
        self.up = tuple(up)
        self._hash = hash((n, self.up))
        self._covers: list[tuple[int, int]] | None = None

    @classmethod
    def from_covers(cls, n: int, covers: Iterable[tuple[int, int]]) -> LabeledPoset:
        return cls(n, covers)

    @classmethod
    def chain(cls, n: int) -> LabeledPoset:
        """The natural chain 1 < 2 < ... < n."""
        return cls(n, [(i, i + 1) for i in range(1, n)])

    @classmethod
    def antichain(cls, n: int) -> LabeledPoset:
        return cls(n)

    @classmethod
    def _from_masks(cls, n: int, up: tuple[int, ...]) -> LabeledPoset:
        self = cls.__new__(cls)
        self.n = n
        self.up = up
        self._hash = hash((n, up))
        self._covers = None
        return self

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LabeledPoset) and self.n == other.n and self.up == other.up

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"LabeledPoset({self.n}, covers={self.covers()})"

    def lt(self, i: int, j: int) -> bool:
        return bool(self.up[i - 1] >> (j - 1) & 1)

    def leq(self, i: int, j: int) -> bool:
        return i == j or self.lt(i, j)

    def comparable(self, i: int, j: int) -> bool:
        return i == j or self.lt(i, j) or self.lt(j, i)

    def relations(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(1, self.n + 1) for j in range(1, self.n + 1) if self.lt(i, j)]

    def covers(self) -> list[tuple[int, int]]:
        if self._covers is None:
            self._covers = self._compute_covers()
        return list(self._covers)

    def _compute_covers(self) -> list[tuple[int, int]]:
        out = []
        for i in range(1, self.n + 1):
            above = self.up[i - 1]
            # strip anything above another upper element
            reach = 0
            for j in range(1, self.n + 1):
                if above >> (j - 1) & 1:
                    reach |= self.up[j - 1]
            minimal = above & ~reach
            out.extend((i, j) for j in range(1, self.n + 1) if minimal >> (j - 1) & 1)
        return out

    def strict_covers(self) -> list[tuple[int, int]]:
        return [(u, v) for u, v in self.covers() if u > v]

    def incomparable_pairs(self) -> list[tuple[int, int]]:
        return [
            (i, j)
            for i in range(1, self.n + 1)
            for j in range(i + 1, self.n + 1)
            if not self.comparable(i, j)
        ]

    def down_mask(self, j: int) -> int:
        return sum(1 << (i - 1) for i in range(1, self.n + 1) if self.lt(i, j))

    def to_json(self) -> dict:
        return {"n": self.n, "covers": [list(c) for c in self.covers()]}

    @classmethod
    def from_json(cls, data: dict | str) -> LabeledPoset:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["n"]), [tuple(c) for c in data["covers"]])


def topological_order(poset: LabeledPoset) -> list[int]:
    """One linear extension, preferring smaller labels."""
    down = [poset.down_mask(j) for j in range(1, poset.n + 1)]
    placed = 0
    order: list[int] = []
    while len(order) < poset.n:
        j = next(j for j in range(poset.n) if not placed >> j & 1 and down[j] & ~placed == 0)
        order.append(j + 1)
        placed |= 1 << j
    return order


def linear_extensions(poset: LabeledPoset) -> list[Permutation]:
    """All linear extensions as words E_R listing elements bottom to top."""
    n = poset.n
    down = [poset.down_mask(j) for j in range(1, n + 1)]
    out: list[Permutation] = []
    word: list[int] = []

    def rec(placed: int) -> None:
        if len(word) == n:
            out.append(Permutation(word))
            return
        for j in range(n):
            if not placed >> j & 1 and down[j] & ~placed == 0:
                word.append(j + 1)
                rec(placed | 1 << j)
                word.pop()

    rec(0)
    return out


def sigma_R(poset: LabeledPoset) -> frozenset[Permutation]:
    return frozenset(linear_extensions(poset))


def sigma_L(poset: LabeledPoset) -> frozenset[Permutation]:
    return frozenset(e.inverse() for e in linear_extensions(poset))


def add_relation(poset: LabeledPoset, u: int, v: int) -> LabeledPoset:
    return LabeledPoset(poset.n, [*poset.relations(), (u, v)])


def split(poset: LabeledPoset, u: int, v: int) -> tuple[LabeledPoset, LabeledPoset]:
    """Return ``(P_(v,u), P_(u,v))``; ``P_(u,v)`` adds the relation u < v."""
    if poset.comparable(u, v):
        raise ValueError(f"{u} and {v} are comparable")
    return add_relation(poset, v, u), add_relation(poset, u, v)


def lower_subposets(poset: LabeledPoset, m: int) -> list[frozenset[int]]:
    """Downward-closed subsets of size ``m``."""
    down = [poset.down_mask(j) for j in range(1, poset.n + 1)]
    out = []
    for combo in combinations(range(1, poset.n + 1), m):
        mask = sum(1 << (c - 1) for c in combo)
        if all(down[c - 1] & ~mask == 0 for c in combo):
            out.append(frozenset(combo))
    return out


def standardize(poset: LabeledPoset, subset: Iterable[int]) -> LabeledPoset:
    """Induced subposet relabeled by 1..|subset| in increasing label order."""
    elems = sorted(subset)
    idx = {e: k for k, e in enumerate(elems, start=1)}
    rels = [(idx[i], idx[j]) for i in elems for j in elems if poset.lt(i, j)]
    return LabeledPoset(len(elems), rels)


def disjoint_union(p1: LabeledPoset, p2: LabeledPoset) -> LabeledPoset:
    m = p1.n
    rels = p1.relations() + [(i + m, j + m) for i, j in p2.relations()]
    return LabeledPoset(m + p2.n, rels)


def bar(poset: LabeledPoset) -> LabeledPoset:
    """Relabel i -> n + 1 - i."""
    n = poset.n
    return LabeledPoset(n, [(n + 1 - i, n + 1 - j) for i, j in poset.relations()])


def star(poset: LabeledPoset) -> LabeledPoset:
    """Reverse every relation."""
    return LabeledPoset(poset.n, [(j, i) for i, j in poset.relations()])


def is_regular(poset: LabeledPoset) -> bool:
    """No v <= w with u incomparable to both and u strictly between them as integers."""
    n = poset.n
    for v in range(1, n + 1):
        for w in range(1, n + 1):
            if v == w or not poset.lt(v, w):
                continue
            lo, hi = min(v, w), max(v, w)
            for u in range(lo + 1, hi):
                if not poset.comparable(u, v) and not poset.comparable(u, w):
                    return False
    return True


def poset_from_interval(sigma: Permutation, rho: Permutation) -> LabeledPoset:
    """The regular poset whose linear extensions form [sigma, rho]_R."""
    if not leq_right(sigma, rho):
        raise ValueError(f"{sigma} is not below {rho} in the right weak order")
    n = sigma.n
    inv_sigma = inversions(sigma)
    inv_rho = inversions(rho)
    rels = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i < j and (j, i) not in inv_rho:
                rels.append((i, j))
            elif i > j and (i, j) in inv_sigma:
                rels.append((i, j))
    return LabeledPoset(n, rels)


def _extend(poset_up: tuple[int, ...], n: int) -> Iterator[tuple[int, ...]]:
    """Add element n+1 in every way: choose a down-set D and up-set U with D < U."""
    full = (1 << n) - 1
    down = [0] * n
    for i in range(n):
        for j in range(n):
            if poset_up[i] >> j & 1:
                down[j] |= 1 << i
    ideals = [m for m in range(full + 1) if all(down[j] & ~m == 0 for j in range(n) if m >> j & 1)]
    filters = [m for m in range(full + 1) if all(poset_up[j] & ~m == 0 for j in range(n) if m >> j & 1)]
    new_bit = 1 << n
    for d in ideals:
        # every element of D must lie below every element of U
        common_up = full
        for j in range(n):
            if d >> j & 1:
                common_up &= poset_up[j]
        for u in filters:
            if u & d or u & ~common_up:
                continue
            ups = [poset_up[j] | (new_bit | u if d >> j & 1 else 0) for j in range(n)]
            yield (*ups, u)


def _cache_path() -> Path:
    env = os.environ.get("HECKEPOSET_CACHE")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "heckeposet" / "posets_5.json"


@cache
def all_posets_on(n: int) -> tuple[LabeledPoset, ...]:
    """Every labeled poset on [n] (1, 1, 3, 19, 219, 4231, ... of them).

    The n = 5 list is cached as JSON at ``$HECKEPOSET_CACHE`` when writable.
    """
    if n == 5:
        path = _cache_path()
        try:
            masks = json.loads(path.read_text())
            if len(masks) == 4231:
                return tuple(LabeledPoset._from_masks(5, tuple(m)) for m in masks)
        except (OSError, ValueError):
            pass
    level: list[tuple[int, ...]] = [()]
    for k in range(n):
        level = [ext for p in level for ext in _extend(p, k)]
    result = tuple(LabeledPoset._from_masks(n, up) for up in sorted(level))
    if n == 5:
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(json.dumps([list(p.up) for p in result]))
        except OSError:
            pass
    return result
