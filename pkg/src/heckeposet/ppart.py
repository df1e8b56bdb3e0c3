"""P-partitions, enriched and starred P-partitions, and the Psi expansion of K_P.

Enriched values live in the signed alphabet ordered -1 < 1 < -2 < 2 < ...
and are stored as nonzero ints. A starred P-partition marks the ambiguous
elements, those whose sign can be flipped without breaking the conditions.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from itertools import product as _cartesian

from heckeposet.compositions import Composition, comp_of, compositions_of
from heckeposet.permutations import des_right
from heckeposet.posets import LabeledPoset, linear_extensions, topological_order
from heckeposet.qsym import QsymElement

MAX_ENUMERATION_N = 9


def _key(v: int) -> tuple[int, int]:
    return (abs(v), 0 if v < 0 else 1)


def _cover_ok(x: int, y: int, fx: int, fy: int) -> bool:
    """Conditions on a cover x < y in the poset."""
    if _key(fx) > _key(fy):
        return False
    if abs(fx) == abs(fy):
        if x < y and fy < 0:
            return False
        if x > y and fx > 0:
            return False
    return True


def is_enriched(
    poset: LabeledPoset,
    values: tuple[int, ...],
    covers: list[tuple[int, int]] | None = None,
) -> bool:
    levels = {abs(v) for v in values}
    if 0 in levels or levels != set(range(1, len(levels) + 1)):
        return False
    if covers is None:
        covers = poset.covers()
    return all(_cover_ok(x, y, values[x - 1], values[y - 1]) for x, y in covers)


def _check_bound(n: int) -> None:
    if n > MAX_ENUMERATION_N:
        raise ValueError(f"enumeration is capped at n <= {MAX_ENUMERATION_N}, got {n}")


def enumerate_enriched(poset: LabeledPoset, beta: Iterable[int]) -> Iterator[tuple[int, ...]]:
    """Enriched P-partitions whose level sizes are exactly ``beta``."""
    beta = Composition(beta)
    n = poset.n
    _check_bound(n)
    if sum(beta) != n:
        raise ValueError("|beta| must equal the poset size")
    k = len(beta)
    if n == 0:
        yield ()
        return
    order = topological_order(poset)
    lower = defaultdict(list)
    for x, y in poset.covers():
        lower[y].append(x)
    values = [0] * n
    used = [0] * (k + 1)

    def rec(pos: int) -> Iterator[tuple[int, ...]]:
        if pos == n:
            yield tuple(values)
            return
        y = order[pos]
        for level in range(1, k + 1):
            if used[level] >= beta[level - 1]:
                continue
            for v in (-level, level):
                if all(_cover_ok(x, y, values[x - 1], v) for x in lower[y]):
                    values[y - 1] = v
                    used[level] += 1
                    yield from rec(pos + 1)
                    used[level] -= 1
                    values[y - 1] = 0

    yield from rec(0)


@dataclass(frozen=True)
class StarredPPartition:
    """``values`` holds signed levels; starred elements are stored positive."""

    values: tuple[int, ...]
    starred: frozenset[int]

    @property
    def k(self) -> int:
        return max((abs(v) for v in self.values), default=0)

    @property
    def amb(self) -> tuple[int, ...]:
        c = Counter(abs(self.values[x - 1]) for x in self.starred)
        return tuple(c[i] for i in range(1, self.k + 1))

    @property
    def wt(self) -> Composition:
        c = Counter(abs(v) for v in self.values)
        return Composition(c[i] for i in range(1, self.k + 1))

    @property
    def sign(self) -> int:
        negatives = sum(1 for x, v in enumerate(self.values, 1) if v < 0 and x not in self.starred)
        return (-1) ** negatives

    def symbols(self) -> list[str]:
        out = []
        for x, v in enumerate(self.values, 1):
            out.append(f"{abs(v)}*" if x in self.starred else str(v))
        return out

    def __str__(self) -> str:
        return " ".join(f"{x}->{s}" for x, s in enumerate(self.symbols(), 1))


def ambiguous_elements(poset: LabeledPoset, values: tuple[int, ...]) -> frozenset[int]:
    """Elements x for which flipping the sign of f(x) leaves f enriched.

    The flip keeps the level set and every cover not touching x, so only the
    covers incident to x are revalidated.
    """
    incident = defaultdict(list)
    for x, y in poset.covers():
        incident[x].append((x, y))
        incident[y].append((x, y))
    out = set()
    for x in range(1, poset.n + 1):
        flipped = list(values)
        flipped[x - 1] = -flipped[x - 1]
        if all(_cover_ok(a, b, flipped[a - 1], flipped[b - 1]) for a, b in incident[x]):
            out.add(x)
    return frozenset(out)


def star_of(poset: LabeledPoset, values: tuple[int, ...]) -> StarredPPartition:
    amb = ambiguous_elements(poset, values)
    norm = tuple(abs(v) if x in amb else v for x, v in enumerate(values, 1))
    return StarredPPartition(norm, amb)


def enumerate_starred(poset: LabeledPoset, beta: Iterable[int]) -> list[StarredPPartition]:
    """Starred P-partitions with weight ``beta`` and exactly one star per level."""
    beta = Composition(beta)
    if len(beta) > poset.n:
        return []
    want = (1,) * len(beta)
    found: set[StarredPPartition] = set()
    for values in enumerate_enriched(poset, beta):
        fs = star_of(poset, values)
        if fs.amb == want:
            found.add(fs)
    return sorted(found, key=lambda f: (f.values, sorted(f.starred)))


def kp_in_psi_via_starred(poset: LabeledPoset) -> dict[Composition, int]:
    """Coefficients of Psi_b / z_b in K_P, as signed counts of starred P-partitions."""
    _check_bound(poset.n)
    out: dict[Composition, int] = {}
    for beta in compositions_of(poset.n):
        total = sum(f.sign for f in enumerate_starred(poset, beta))
        if total:
            out[beta] = total
    return out


def kp_fundamental(poset: LabeledPoset) -> QsymElement:
    """K_P expanded in the fundamental basis by descents of linear extensions."""
    counts = Counter(comp_of(des_right(e), poset.n) for e in linear_extensions(poset))
    return QsymElement("F", counts)


Monomial = tuple[int, ...]


def kp_monomial_truncation(poset: LabeledPoset, max_vars: int) -> dict[Monomial, int]:
    """K_P(x_1, ..., x_m) summed directly over P-partitions into [m].

    Returns exponent vectors mapped to coefficients. Rules: i <= j in P forces
    f(i) <= f(j), strictly when i > j as integers.
    """
    if max_vars < 1:
        raise ValueError("max_vars must be at least 1")
    rels = poset.relations()
    poly: dict[Monomial, int] = defaultdict(int)
    for f in _cartesian(range(1, max_vars + 1), repeat=poset.n):
        ok = True
        for i, j in rels:
            a, b = f[i - 1], f[j - 1]
            if a > b or (i > j and a == b):
                ok = False
                break
        if ok:
            c = Counter(f)
            poly[tuple(c[v] for v in range(1, max_vars + 1))] += 1
    return dict(poly)
