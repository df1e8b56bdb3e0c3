"""Border strips and border-strip tableaux on composition diagrams.

Cells are ``(row, column)`` with row 1 at the top. A tableau labels cells
with 1..l(beta), label i on beta_i cells, rows weakly increasing to the
right. The DIF flavor also needs the first column weakly increasing
downward; the ESF flavor needs every column weakly increasing downward.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from itertools import product as _cartesian
from typing import Literal

from heckeposet.compositions import Composition, compositions_of, sort_to_partition
from heckeposet.posets import LabeledPoset

Flavor = Literal["DIF", "ESF"]
Cell = tuple[int, int]


def height(cells: Iterable[Cell]) -> int:
    """Number of occupied rows minus one."""
    return len({r for r, _ in cells}) - 1


def _row_parts(cells: frozenset[Cell]) -> dict[int, list[int]]:
    rows: dict[int, list[int]] = {}
    for r, c in sorted(cells):
        rows.setdefault(r, []).append(c)
    return rows


def _contiguous(cols: list[int]) -> bool:
    return cols == list(range(cols[0], cols[0] + len(cols)))


def _is_dif_strip(cells: frozenset[Cell]) -> bool:
    rows = _row_parts(cells)
    if not all(_contiguous(cols) for cols in rows.values()):
        return False
    if len(rows) == 1:
        return True
    # several rows: consecutive rows, each a segment starting in column 1
    keys = sorted(rows)
    return keys == list(range(keys[0], keys[-1] + 1)) and all(cols[0] == 1 for cols in rows.values())


def _is_esf_strip(alpha: Composition, cells: frozenset[Cell]) -> bool:
    diagram = {(r, c) for r, part in enumerate(alpha, 1) for c in range(1, part + 1)}
    for (x, z) in cells:
        for (y, z2) in cells:
            if z2 == z and x < y and (x, z - 1) in cells:
                return False
    # connectivity, where same-column cells count as adjacent when nothing of
    # the diagram outside the strip lies between them
    start = next(iter(cells))
    seen = {start}
    stack = [start]
    while stack:
        r, c = stack.pop()
        for (r2, c2) in cells:
            if (r2, c2) in seen:
                continue
            linked = False
            if r2 == r and abs(c2 - c) == 1:
                linked = True
            elif c2 == c:
                lo, hi = sorted((r, r2))
                linked = all((m, c) not in diagram or (m, c) in cells for m in range(lo + 1, hi))
            if linked:
                seen.add((r2, c2))
                stack.append((r2, c2))
    return len(seen) == len(cells)


def is_border_strip(flavor: Flavor, alpha: Composition, cells: Iterable[Cell]) -> bool:
    cells = frozenset(cells)
    alpha = Composition(alpha)
    if not cells:
        return False
    if any(not (1 <= r <= len(alpha) and 1 <= c <= alpha[r - 1]) for r, c in cells):
        return False
    if flavor == "DIF":
        return _is_dif_strip(cells)
    if flavor == "ESF":
        return _is_esf_strip(alpha, cells)
    raise ValueError(f"unknown flavor {flavor!r}")


@dataclass(frozen=True)
class BorderStripTableau:
    shape: Composition
    flavor: Flavor
    type: Composition
    labels: tuple[tuple[Cell, int], ...]

    def strips(self) -> list[frozenset[Cell]]:
        out: list[set[Cell]] = [set() for _ in self.type]
        for cell, lab in self.labels:
            out[lab - 1].add(cell)
        return [frozenset(s) for s in out]

    @property
    def height(self) -> int:
        return sum(height(s) for s in self.strips())

    @property
    def sign(self) -> int:
        return (-1) ** self.height

    def rows(self) -> list[list[int]]:
        d = dict(self.labels)
        return [[d[(r, c)] for c in range(1, p + 1)] for r, p in enumerate(self.shape, 1)]

    def __str__(self) -> str:
        return "/".join(" ".join(map(str, row)) for row in self.rows())

    def to_json(self) -> dict:
        return {
            "shape": list(self.shape),
            "flavor": self.flavor,
            "type": list(self.type),
            "rows": self.rows(),
            "strips": [
                {"label": i, "cells": [list(c) for c in sorted(s)], "height": height(s)}
                for i, s in enumerate(self.strips(), 1)
            ],
        }


def _extensions(alpha: Composition, prefix: tuple[int, ...], size: int) -> Iterator[tuple[int, ...]]:
    """New row-prefix vectors adding exactly ``size`` cells."""
    ell = len(alpha)

    def rec(r: int, left: int, acc: list[int]) -> Iterator[tuple[int, ...]]:
        if r == ell:
            if left == 0:
                yield tuple(acc)
            return
        for add in range(0, min(left, alpha[r] - prefix[r]) + 1):
            acc.append(prefix[r] + add)
            yield from rec(r + 1, left - add, acc)
            acc.pop()

    yield from rec(0, size, [])


def _columns_ok(flavor: Flavor, alpha: Composition, old: tuple[int, ...], new: tuple[int, ...]) -> bool:
    """Cells added now carry the largest label so far; every cell above them in a
    constrained column must already be labeled."""
    for r in range(len(alpha)):
        for c in range(old[r] + 1, new[r] + 1):
            if flavor == "DIF" and c != 1:
                continue
            for above in range(r):
                if alpha[above] >= c and new[above] < c:
                    return False
    return True


def enumerate_bst(flavor: Flavor, alpha: Iterable[int], beta: Iterable[int]) -> list[BorderStripTableau]:
    """All border-strip tableaux of shape ``alpha`` and type ``beta``.

    Labels are peeled greedily 1, 2, ...; cells labeled at most i always
    form a prefix of each row, so the state is a vector of prefix lengths.
    """
    alpha, beta = Composition(alpha), Composition(beta)
    if sum(alpha) != sum(beta):
        raise ValueError("shape and type must have the same size")
    out: list[BorderStripTableau] = []
    labels: dict[Cell, int] = {}

    def rec(i: int, prefix: tuple[int, ...]) -> None:
        if i == len(beta):
            out.append(BorderStripTableau(alpha, flavor, beta, tuple(sorted(labels.items()))))
            return
        for new in _extensions(alpha, prefix, beta[i]):
            if not _columns_ok(flavor, alpha, prefix, new):
                continue
            cells = [(r + 1, c) for r in range(len(alpha)) for c in range(prefix[r] + 1, new[r] + 1)]
            if not is_border_strip(flavor, alpha, cells):
                continue
            for cell in cells:
                labels[cell] = i + 1
            rec(i + 1, new)
            for cell in cells:
                del labels[cell]

    rec(0, (0,) * len(alpha))
    return out


def d_coefficient(flavor: Flavor, alpha: Iterable[int], beta: Iterable[int]) -> int:
    return sum(t.sign for t in enumerate_bst(flavor, alpha, beta))


def expand_in_psi(flavor: Flavor, alpha: Iterable[int]) -> dict[Composition, int]:
    """Nonzero coefficients d of Psi_b / z_b."""
    alpha = Composition(alpha)
    out = {}
    for beta in compositions_of(sum(alpha)):
        d = d_coefficient(flavor, alpha, beta)
        if d:
            out[beta] = d
    return out


def uniform_sign_check(alpha: Iterable[int], s: int) -> tuple[int, int | None]:
    """Count DIF tableaux of type (s, ..., s) and their common sign.

    Raises if two tableaux differ in height parity. The sign is None when
    there are no tableaux.
    """
    alpha = Composition(alpha)
    n = sum(alpha)
    if s < 1 or n % s:
        raise ValueError(f"|alpha| = {n} is not a multiple of {s}")
    tabs = enumerate_bst("DIF", alpha, (s,) * (n // s))
    signs = {t.sign for t in tabs}
    if len(signs) > 1:
        raise AssertionError("border-strip tableaux of this type disagree in sign")
    return len(tabs), (signs.pop() if signs else None)


# Classical skew shapes -------------------------------------------------------


def skew_cells(lam: Iterable[int], mu: Iterable[int] = ()) -> list[Cell]:
    lam = list(lam)
    mu = list(mu) + [0] * (len(lam) - len(list(mu)))
    if len(mu) > len(lam) or any(m > l for m, l in zip(mu, lam)):
        raise ValueError("mu must be contained in lambda")
    return [(r, c) for r in range(1, len(lam) + 1) for c in range(mu[r - 1] + 1, lam[r - 1] + 1)]


def skew_poset(lam: Iterable[int], mu: Iterable[int] = ()) -> tuple[LabeledPoset, dict[Cell, int]]:
    """Label columns left to right, each from bottom to top.

    Rows are indexed from the top. i <= j when the cell of i lies in a weakly
    higher row and a weakly earlier column than the cell of j, which makes
    rows weak and columns strict in P-partitions.
    """
    cells = skew_cells(lam, mu)
    order = sorted(cells, key=lambda rc: (rc[1], -rc[0]))
    label = {cell: k for k, cell in enumerate(order, 1)}
    rels = [
        (label[a], label[b])
        for a in cells
        for b in cells
        if a != b and a[0] <= b[0] and a[1] <= b[1]
    ]
    return LabeledPoset(len(cells), rels), label


def _is_classical_strip(cells: set[Cell]) -> bool:
    if not cells:
        return False
    if any({(r, c + 1), (r + 1, c), (r + 1, c + 1)} <= cells for r, c in cells):
        return False
    start = next(iter(cells))
    seen = {start}
    stack = [start]
    while stack:
        r, c = stack.pop()
        for nb in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
            if nb in cells and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(cells)


def _classical_chi(lam: tuple[int, ...], mu: tuple[int, ...], beta: Composition) -> int:
    """Signed count of chains mu = nu_0 < ... < nu_k = lam of classical border strips."""
    ell = len(lam)

    def rec(i: int, nu: tuple[int, ...]) -> int:
        if i == len(beta):
            return 1 if nu == lam else 0
        total = 0
        ranges = [range(nu[r], lam[r] + 1) for r in range(ell)]
        for new in _cartesian(*ranges):
            if sum(new) - sum(nu) != beta[i]:
                continue
            if any(new[r] < new[r + 1] for r in range(ell - 1)):
                continue
            cells = {(r + 1, c) for r in range(ell) for c in range(nu[r] + 1, new[r] + 1)}
            if _is_classical_strip(cells):
                total += (-1) ** height(cells) * rec(i + 1, new)
        return total

    return rec(0, mu)


def skew_oracle(lam: Iterable[int], mu: Iterable[int] = ()) -> tuple[LabeledPoset, dict[Composition, int]]:
    """The skew poset with its classical border-strip coefficients chi(beta), beta ordered."""
    lam = tuple(lam)
    mu_t = tuple(mu) + (0,) * (len(lam) - len(tuple(mu)))
    poset, _ = skew_poset(lam, mu)
    n = sum(lam) - sum(mu_t)
    out = {}
    for beta in compositions_of(n):
        chi = _classical_chi(lam, mu_t, beta)
        if chi:
            out[beta] = chi
    return poset, out


def chi_is_symmetric(coeffs: dict[Composition, int], n: int) -> bool:
    """chi(beta) depends only on the sorted parts of beta."""
    by_shape: dict[Composition, set[int]] = {}
    for beta in compositions_of(n):
        by_shape.setdefault(sort_to_partition(beta), set()).add(coeffs.get(beta, 0))
    return all(len(v) == 1 for v in by_shape.values())
