"""The symmetric group S_n: descents, inversions, weak orders and intervals.

Permutations are one-line words on [n]. Products compose as functions,
``(s * r)(i) = s(r(i))``, so ``g.times_s(i)`` (right multiplication by s_i)
swaps positions i, i+1 and ``g.s_times(i)`` swaps the values i, i+1.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from itertools import permutations as _iter_perms
from typing import Literal

from heckeposet.compositions import Composition, complement

Side = Literal["left", "right"]


class Permutation(tuple):
    """A permutation in one-line notation, stored 1-indexed by value."""

    def __new__(cls, word: Iterable[int]) -> Permutation:
        word = tuple(int(w) for w in word)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise ValueError(f"not a permutation of 1..{len(word)}: {word}")
        return super().__new__(cls, word)

    @classmethod
    def parse(cls, text: str) -> Permutation:
        """Accept ``"25134"`` or ``"8,4,1,5,3,9,7,6,2"``."""
        text = text.strip()
        if "," in text:
            return cls(int(t) for t in text.split(","))
        return cls(int(c) for c in text)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(range(1, n + 1))

    @property
    def n(self) -> int:
        return len(self)

    @property
    def word(self) -> tuple[int, ...]:
        return tuple(self)

    def __call__(self, i: int) -> int:
        return self[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:  # type: ignore[override]
        return Permutation(self[o - 1] for o in other)

    def __repr__(self) -> str:
        return f"Permutation({self})"

    def __str__(self) -> str:
        if self.n <= 9:
            return "".join(map(str, self))
        return ",".join(map(str, self))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for pos, val in enumerate(self, start=1):
            inv[val - 1] = pos
        return Permutation(inv)

    def times_s(self, i: int) -> Permutation:
        w = list(self)
        w[i - 1], w[i] = w[i], w[i - 1]
        return Permutation(w)

    def s_times(self, i: int) -> Permutation:
        swap = {i: i + 1, i + 1: i}
        return Permutation(swap.get(v, v) for v in self)


def length(sigma: Permutation) -> int:
    n = sigma.n
    return sum(1 for a in range(n) for b in range(a + 1, n) if sigma[a] > sigma[b])


def inversions(sigma: Permutation) -> frozenset[tuple[int, int]]:
    """Value pairs ``(sigma(i), sigma(j))`` with i < j and sigma(i) > sigma(j)."""
    n = sigma.n
    return frozenset(
        (sigma[a], sigma[b]) for a in range(n) for b in range(a + 1, n) if sigma[a] > sigma[b]
    )


def coinversions(sigma: Permutation) -> frozenset[tuple[int, int]]:
    n = sigma.n
    return frozenset(
        (sigma[a], sigma[b]) for a in range(n) for b in range(a + 1, n) if sigma[a] < sigma[b]
    )


def des_right(sigma: Permutation) -> frozenset[int]:
    return frozenset(i for i in range(1, sigma.n) if sigma(i) > sigma(i + 1))


def des_left(sigma: Permutation) -> frozenset[int]:
    return des_right(sigma.inverse())


def w0(n: int) -> Permutation:
    return Permutation(range(n, 0, -1))


def reverse_blocks(beta: Composition) -> Permutation:
    """Reverse each block of consecutive positions of sizes beta_1, beta_2, ..."""
    word: list[int] = []
    start = 0
    for part in beta:
        word.extend(range(start + part, start, -1))
        start += part
    return Permutation(word)


def w0_of(alpha: Composition) -> Permutation:
    """Longest element of the parabolic subgroup generated by s_i, i in set(alpha).

    Its blocks are those of the complement of ``alpha``, so
    ``w0_of((1,1,2,2,1,1,1)) == 321549876``.
    """
    return reverse_blocks(complement(alpha))


def leq_right(sigma: Permutation, rho: Permutation) -> bool:
    return inversions(sigma) <= inversions(rho)


def leq_left(sigma: Permutation, rho: Permutation) -> bool:
    return leq_right(sigma.inverse(), rho.inverse())


def leq(side: Side, sigma: Permutation, rho: Permutation) -> bool:
    return leq_right(sigma, rho) if side == "right" else leq_left(sigma, rho)


def all_permutations(n: int) -> Iterator[Permutation]:
    for w in _iter_perms(range(1, n + 1)):
        yield Permutation(w)


@dataclass(frozen=True)
class WeakInterval:
    side: Side
    bottom: Permutation
    top: Permutation
    elements: frozenset[Permutation]

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, gamma: object) -> bool:
        return gamma in self.elements

    def sorted(self) -> list[Permutation]:
        return sorted(self.elements, key=lambda g: (length(g), g))


def _right_closure(sigma: Permutation, rho: Permutation) -> frozenset[Permutation]:
    top_inv = inversions(rho)
    seen = {sigma}
    queue = deque([sigma])
    while queue:
        g = queue.popleft()
        for i in range(1, g.n):
            if g(i) < g(i + 1) and (g(i + 1), g(i)) in top_inv:
                h = g.times_s(i)
                if h not in seen:
                    seen.add(h)
                    queue.append(h)
    return frozenset(seen)


def interval(side: Side, sigma: Permutation, rho: Permutation) -> WeakInterval:
    """Materialize the weak interval [sigma, rho] on ``side`` by cover BFS."""
    if sigma.n != rho.n:
        raise ValueError("endpoints live in different symmetric groups")
    if not leq(side, sigma, rho):
        raise ValueError(f"{sigma} is not below {rho} in the {side} weak order")
    if side == "right":
        elements = _right_closure(sigma, rho)
    else:
        elements = frozenset(g.inverse() for g in _right_closure(sigma.inverse(), rho.inverse()))
    return WeakInterval(side, sigma, rho, elements)


def f_map(gamma: Permutation) -> Permutation:
    """gamma -> w0 gamma^{-1}; carries left intervals onto right intervals."""
    return w0(gamma.n) * gamma.inverse()
