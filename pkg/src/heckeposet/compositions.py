"""Compositions and partitions of n, with set/comp bijections and statistics."""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Iterator
from itertools import accumulate, combinations
from math import factorial, prod


class Composition(tuple):
    """An ordered tuple of positive integers.

    Compositions are hashable and compare as tuples, so they work directly
    as dictionary keys for quasisymmetric coefficients.
    """

    def __new__(cls, parts: Iterable[int] = ()) -> Composition:
        parts = tuple(int(p) for p in parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"composition parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @property
    def parts(self) -> tuple[int, ...]:
        return tuple(self)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def __repr__(self) -> str:
        return f"Composition({list(self)})"

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self)) + ")"


class Partition(Composition):
    """A weakly decreasing composition."""

    def __new__(cls, parts: Iterable[int] = ()) -> Partition:
        self = super().__new__(cls, parts)
        if any(a < b for a, b in zip(self, self[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {tuple(self)}")
        return self

    def __repr__(self) -> str:
        return f"Partition({list(self)})"


def parse_composition(text: str) -> Composition:
    """Parse ``"2,3,1"``; the empty string is the empty composition."""
    text = text.strip().strip("()")
    if not text:
        return Composition()
    return Composition(int(t) for t in text.split(","))


def set_of(alpha: Composition) -> frozenset[int]:
    """Partial sums of ``alpha`` excluding the total."""
    return frozenset(list(accumulate(alpha))[:-1])


def comp_of(subset: Iterable[int], n: int) -> Composition:
    """Successive differences of ``subset`` with 0 and ``n`` appended."""
    points = sorted(set(subset))
    if points and (points[0] < 1 or points[-1] > n - 1):
        raise ValueError(f"{points} is not a subset of [{n - 1}]")
    if n == 0:
        return Composition()
    cuts = [0, *points, n]
    return Composition(b - a for a, b in zip(cuts, cuts[1:]))


def refines(alpha: Composition, beta: Composition) -> bool:
    """True iff ``alpha`` is a refinement of ``beta``."""
    if sum(alpha) != sum(beta):
        raise ValueError("refinement compares compositions of the same size")
    return set_of(beta) <= set_of(alpha)


def reverse(alpha: Composition) -> Composition:
    return Composition(reversed(alpha))


def complement(alpha: Composition) -> Composition:
    n = sum(alpha)
    if n == 0:
        return Composition()
    return comp_of(set(range(1, n)) - set_of(alpha), n)


def z_stat(alpha: Composition) -> int:
    """prod over part values i of i^{m_i} m_i!."""
    return prod(i**m * factorial(m) for i, m in Counter(alpha).items())


def pi_stat(alpha: Composition) -> int:
    """Product of the partial sums of ``alpha``."""
    return prod(accumulate(alpha))


def blocks(alpha: Composition, beta: Composition) -> list[Composition]:
    """Split ``alpha`` into consecutive blocks summing to the parts of ``beta``."""
    out: list[Composition] = []
    pos = 0
    for b in beta:
        total = 0
        start = pos
        while total < b and pos < len(alpha):
            total += alpha[pos]
            pos += 1
        if total != b:
            raise ValueError(f"{beta} is not coarser than {alpha}")
        out.append(Composition(alpha[start:pos]))
    if pos != len(alpha):
        raise ValueError(f"{beta} is not coarser than {alpha}")
    return out


def pi_pair(alpha: Composition, beta: Composition) -> int:
    return prod(pi_stat(block) for block in blocks(alpha, beta))


def sort_to_partition(alpha: Composition) -> Partition:
    return Partition(sorted(alpha, reverse=True))


def compositions_of(n: int) -> Iterator[Composition]:
    """All compositions of ``n``, in lexicographic order on parts."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        yield Composition()
        return
    subsets = [frozenset(c) for k in range(n) for c in combinations(range(1, n), k)]
    yield from sorted(comp_of(s, n) for s in subsets)


def coarsenings(alpha: Composition) -> Iterator[Composition]:
    """Every beta with alpha refining beta."""
    n = sum(alpha)
    s = sorted(set_of(alpha))
    for k in range(len(s) + 1):
        for sub in combinations(s, k):
            yield comp_of(sub, n)


def refinements(alpha: Composition) -> Iterator[Composition]:
    """Every beta refining alpha."""
    n = sum(alpha)
    s = set_of(alpha)
    rest = sorted(set(range(1, n)) - s)
    for k in range(len(rest) + 1):
        for sub in combinations(rest, k):
            yield comp_of(s | set(sub), n)


def partitions_of(n: int) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""

    def rec(rem: int, cap: int) -> Iterator[tuple[int, ...]]:
        if rem == 0:
            yield ()
            return
        for first in range(min(rem, cap), 0, -1):
            for tail in rec(rem - first, first):
                yield (first, *tail)

    for parts in rec(n, n):
        yield Partition(parts)


def graded_key(alpha: Composition) -> tuple[int, tuple[int, ...]]:
    """Canonical ordering: by size, then lexicographic."""
    return (sum(alpha), tuple(alpha))
