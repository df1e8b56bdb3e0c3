"""Diagrams, canonical posets, and the tableaux behind the quasisymmetric Schur families.

Two coordinate systems are kept apart:

* ``Diagram`` cells are ``(column, row)`` with row 1 at the bottom.
* Composition diagram cells are ``(row, column)`` with row 1 at the top.
"""

from __future__ import annotations

from collections import defaultdict
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import cache
from itertools import permutations as _perms
from typing import Literal

from heckeposet.compositions import Composition, comp_of, complement, reverse, set_of
from heckeposet.permutations import Permutation, des_left, interval, leq_left, w0_of, f_map
from heckeposet.posets import LabeledPoset, bar, star

Cell = tuple[int, int]


class Diagram(frozenset):
    """A finite set of ``(column, row)`` cells with no empty rows or columns."""

    def __new__(cls, cells: Iterable[Cell]) -> Diagram:
        cells = frozenset((int(x), int(y)) for x, y in cells)
        if cells:
            cols = {x for x, _ in cells}
            rows = {y for _, y in cells}
            if cols != set(range(1, max(cols) + 1)) or rows != set(range(1, max(rows) + 1)):
                raise ValueError("diagram has an empty row or column")
        return super().__new__(cls, cells)

    @property
    def n(self) -> int:
        return len(self)

    def sorted_cells(self) -> list[Cell]:
        return sorted(self, key=lambda c: (c[1], c[0]))

    def labeling(self) -> dict[Cell, int]:
        """Row-major labels, left to right, starting with the uppermost row."""
        order = sorted(self, key=lambda c: (-c[1], c[0]))
        return {cell: k for k, cell in enumerate(order, start=1)}

    def to_json(self) -> dict:
        return {"cells": [list(c) for c in self.sorted_cells()]}

    @classmethod
    def from_json(cls, data: dict) -> Diagram:
        return cls(tuple(c) for c in data["cells"])


def canonical_poset(diagram: Diagram) -> LabeledPoset:
    """i <= j iff the cell of i is weakly left of and weakly below the cell of j."""
    labels = diagram.labeling()
    rels = [
        (labels[a], labels[b])
        for a in diagram
        for b in diagram
        if a != b and a[0] <= b[0] and a[1] <= b[1]
    ]
    return LabeledPoset(diagram.n, rels)


def _read_diagram_tableau(diagram: Diagram, filling: dict[Cell, int]) -> Permutation:
    """Rows right to left, lowermost row first."""
    cells = sorted(diagram, key=lambda c: (c[1], -c[0]))
    return Permutation(filling[c] for c in cells)


def diagram_extremes(diagram: Diagram) -> tuple[dict[Cell, int], dict[Cell, int], Permutation, Permutation]:
    """Source and sink standard tableaux on ``diagram`` and their reading words."""
    by_rows = sorted(diagram, key=lambda c: (c[1], c[0]))
    by_cols = sorted(diagram, key=lambda c: (c[0], c[1]))
    source = {c: k for k, c in enumerate(by_rows, start=1)}
    sink = {c: k for k, c in enumerate(by_cols, start=1)}
    return source, sink, _read_diagram_tableau(diagram, source), _read_diagram_tableau(diagram, sink)


@dataclass(frozen=True)
class BuildDSteps:
    rows: tuple[frozenset[int], ...]
    columns: tuple[frozenset[int], ...]
    diagram: Diagram


def build_D_steps(alpha: Composition, rho: Permutation) -> BuildDSteps:
    """Row sets R_j, column sets C_i, and the diagram D with cells where they meet."""
    alpha = Composition(alpha)
    n = sum(alpha)
    if rho.n != n:
        raise ValueError("rho must lie in S_n with n = |alpha|")
    if not leq_left(w0_of(alpha), rho):
        raise ValueError(f"w0({alpha}) is not below {rho} in the left weak order")
    z = [0, *sorted(set_of(complement(alpha))), n]
    rows = tuple(frozenset(rho(r) for r in range(z[j - 1] + 1, z[j] + 1)) for j in range(1, len(z)))
    k = [0, *sorted(des_left(rho)), n]
    cols = tuple(frozenset(range(k[i - 1] + 1, k[i] + 1)) for i in range(1, len(k)))
    cells = [
        (i, j)
        for j, r in enumerate(rows, start=1)
        for i, c in enumerate(cols, start=1)
        if r & c
    ]
    return BuildDSteps(rows, cols, Diagram(cells))


def build_D(alpha: Composition, rho: Permutation) -> Diagram:
    return build_D_steps(alpha, rho).diagram


# Composition tableaux -------------------------------------------------------

Kind = Literal["SIT", "SET", "SRCT"]


def composition_cells(alpha: Composition) -> list[Cell]:
    """Cells ``(row, column)`` of the composition diagram, row-major from the top."""
    return [(r, c) for r, part in enumerate(alpha, start=1) for c in range(1, part + 1)]


@dataclass(frozen=True)
class CompositionTableau:
    shape: Composition
    kind: Kind
    entries: tuple[tuple[Cell, int], ...]

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], kind: Kind) -> CompositionTableau:
        rows = [list(r) for r in rows]
        shape = Composition(len(r) for r in rows)
        entries = {(i, j): v for i, r in enumerate(rows, 1) for j, v in enumerate(r, 1)}
        return cls.make(shape, kind, entries)

    @classmethod
    def make(cls, shape: Composition, kind: Kind, entries: dict[Cell, int]) -> CompositionTableau:
        return cls(Composition(shape), kind, tuple(sorted(entries.items())))

    @property
    def n(self) -> int:
        return sum(self.shape)

    def as_dict(self) -> dict[Cell, int]:
        return dict(self.entries)

    def position(self) -> dict[int, Cell]:
        return {v: c for c, v in self.entries}

    def rows(self) -> list[list[int]]:
        d = self.as_dict()
        return [[d[(r, c)] for c in range(1, part + 1)] for r, part in enumerate(self.shape, 1)]

    def __str__(self) -> str:
        return "/".join(" ".join(map(str, row)) for row in self.rows())

    def column_word(self, c: int) -> list[int]:
        d = self.as_dict()
        return [d[(r, c)] for r in range(1, len(self.shape) + 1) if (r, c) in d]


def parse_tableau(text: str, kind: Kind = "SRCT") -> CompositionTableau:
    """Parse ``"3 2/6 5 4/7 1"``: rows separated by "/", entries by spaces or commas."""
    rows = [[int(v) for v in row.replace(",", " ").split()] for row in text.split("/")]
    return CompositionTableau.from_rows(rows, kind)


def read(tableau: CompositionTableau) -> Permutation:
    """Rows right to left, top row first."""
    return Permutation(v for row in tableau.rows() for v in reversed(row))


def sit_extremes(alpha: Composition) -> tuple[CompositionTableau, CompositionTableau]:
    alpha = Composition(alpha)
    cells = composition_cells(alpha)
    source = {c: k for k, c in enumerate(cells, 1)}
    sink: dict[Cell, int] = {}
    for r in range(1, len(alpha) + 1):
        sink[(r, 1)] = r
    nxt = len(alpha) + 1
    for r in range(len(alpha), 0, -1):
        for c in range(2, alpha[r - 1] + 1):
            sink[(r, c)] = nxt
            nxt += 1
    return (
        CompositionTableau.make(alpha, "SIT", source),
        CompositionTableau.make(alpha, "SIT", sink),
    )


def set_extremes(alpha: Composition) -> tuple[CompositionTableau, CompositionTableau]:
    alpha = Composition(alpha)
    cells = composition_cells(alpha)
    source = {c: k for k, c in enumerate(cells, 1)}
    by_cols = sorted(cells, key=lambda rc: (rc[1], rc[0]))
    sink = {c: k for k, c in enumerate(by_cols, 1)}
    return (
        CompositionTableau.make(alpha, "SET", source),
        CompositionTableau.make(alpha, "SET", sink),
    )


def _standard_fillings(alpha: Composition) -> Iterator[dict[Cell, int]]:
    cells = composition_cells(alpha)
    for word in _perms(range(1, len(cells) + 1)):
        yield dict(zip(cells, word))


def is_sit(alpha: Composition, t: dict[Cell, int]) -> bool:
    rows_ok = all(t[(r, c)] < t[(r, c + 1)] for r, c in t if (r, c + 1) in t)
    col_ok = all(t[(r, 1)] < t[(r + 1, 1)] for r in range(1, len(alpha)))
    return rows_ok and col_ok


def is_set(alpha: Composition, t: dict[Cell, int]) -> bool:
    rows_ok = all(t[(r, c)] < t[(r, c + 1)] for r, c in t if (r, c + 1) in t)
    cols_ok = all(
        t[(r, c)] < t[(r2, c)] for r, c in t for r2 in range(r + 1, len(alpha) + 1) if (r2, c) in t
    )
    return rows_ok and cols_ok


def sit_enumerate(alpha: Composition) -> list[CompositionTableau]:
    alpha = Composition(alpha)
    return [CompositionTableau.make(alpha, "SIT", t) for t in _standard_fillings(alpha) if is_sit(alpha, t)]


def set_enumerate(alpha: Composition) -> list[CompositionTableau]:
    alpha = Composition(alpha)
    return [CompositionTableau.make(alpha, "SET", t) for t in _standard_fillings(alpha) if is_set(alpha, t)]


def row_descents(tableau: CompositionTableau) -> frozenset[int]:
    """i such that i + 1 sits in a row strictly below i (used for SIT and SET)."""
    pos = tableau.position()
    return frozenset(i for i in range(1, tableau.n) if pos[i + 1][0] > pos[i][0])


# Standard reverse composition tableaux ---------------------------------------


def satisfies_triple(alpha: Composition, t: dict[Cell, int]) -> bool:
    for (i, k), v in t.items():
        for j in range(i + 1, len(alpha) + 1):
            below = t.get((j, k + 1))
            if below is not None and v > below:
                right = t.get((i, k + 1))
                if right is None or right < below:
                    return False
    return True


def is_srct(alpha: Composition, t: dict[Cell, int]) -> bool:
    rows_ok = all(t[(r, c)] > t[(r, c + 1)] for r, c in t if (r, c + 1) in t)
    col_ok = all(t[(r, 1)] < t[(r + 1, 1)] for r in range(1, len(alpha)))
    return rows_ok and col_ok and satisfies_triple(alpha, t)


@cache
def _srct_fillings(alpha: Composition) -> tuple[CompositionTableau, ...]:
    n = sum(alpha)
    ell = len(alpha)
    filled = [0] * ell
    t: dict[Cell, int] = {}
    out: list[CompositionTableau] = []

    def rec(value: int) -> None:
        if value == 0:
            if satisfies_triple(alpha, t):
                out.append(CompositionTableau.make(alpha, "SRCT", dict(t)))
            return
        for r in range(ell):
            if filled[r] == alpha[r]:
                continue
            if filled[r] == 0 and any(filled[s] == 0 for s in range(r + 1, ell)):
                # first column increases downward, and values go in decreasing
                continue
            cell = (r + 1, filled[r] + 1)
            t[cell] = value
            filled[r] += 1
            rec(value - 1)
            filled[r] -= 1
            del t[cell]

    rec(n)
    return tuple(sorted(out, key=lambda tab: tab.entries))


def srct_enumerate(alpha: Composition) -> list[CompositionTableau]:
    """All standard reverse composition tableaux of shape ``alpha``."""
    return list(_srct_fillings(Composition(alpha)))


def srct_descents(tau: CompositionTableau) -> frozenset[int]:
    """i is a descent when i + 1 sits weakly right of i."""
    pos = tau.position()
    return frozenset(i for i in range(1, tau.n) if pos[i + 1][1] >= pos[i][1])


def attacks(tau: CompositionTableau, i: int, j: int) -> bool:
    """For i < j: same column, or j in the next column and in a lower row."""
    pos = tau.position()
    (ri, ci), (rj, cj) = pos[i], pos[j]
    return ci == cj or (cj == ci + 1 and rj > ri)


def is_source(tau: CompositionTableau) -> bool:
    pos = tau.position()
    des = srct_descents(tau)
    for i in range(1, tau.n):
        if i not in des:
            (r, c), (r2, c2) = pos[i], pos[i + 1]
            if not (r2 == r and c2 == c - 1):
                return False
    return True


def is_sink(tau: CompositionTableau) -> bool:
    return all(attacks(tau, i, i + 1) for i in srct_descents(tau))


def standardized_column_word(word: list[int]) -> tuple[int, ...]:
    ranks = {v: k for k, v in enumerate(sorted(word), 1)}
    return tuple(ranks[v] for v in word)


def signature(tau: CompositionTableau) -> tuple[tuple[int, ...], ...]:
    return tuple(
        standardized_column_word(tau.column_word(c)) for c in range(1, max(tau.shape) + 1)
    )


@dataclass(frozen=True)
class SrctClass:
    signature: tuple[tuple[int, ...], ...]
    members: tuple[CompositionTableau, ...]

    @property
    def sources(self) -> list[CompositionTableau]:
        return [t for t in self.members if is_source(t)]

    @property
    def sinks(self) -> list[CompositionTableau]:
        return [t for t in self.members if is_sink(t)]

    @property
    def source(self) -> CompositionTableau:
        (s,) = self.sources
        return s

    @property
    def sink(self) -> CompositionTableau:
        (s,) = self.sinks
        return s


@cache
def _classes(alpha: Composition) -> tuple[SrctClass, ...]:
    groups: dict[tuple, list[CompositionTableau]] = defaultdict(list)
    for tau in _srct_fillings(alpha):
        groups[signature(tau)].append(tau)
    return tuple(SrctClass(sig, tuple(m)) for sig, m in sorted(groups.items()))


def classes(alpha: Composition) -> list[SrctClass]:
    return list(_classes(Composition(alpha)))


def class_of(tau: CompositionTableau) -> SrctClass:
    sig = signature(tau)
    for cls in _classes(tau.shape):
        if cls.signature == sig:
            return cls
    raise ValueError(f"{tau} is not a reverse composition tableau")


def sink_from(tau: CompositionTableau) -> CompositionTableau:
    """Greedy column-chain masking that produces the sink of tau's class."""
    alpha = tau.shape
    n = tau.n
    values = tau.as_dict()
    masked = {(len(alpha), 1)}
    placed = {(len(alpha), 1): n}
    for m in range(n - 1, 0, -1):
        live = {cell: v for cell, v in values.items() if cell not in masked}
        by_col: dict[int, list[tuple[Cell, int]]] = defaultdict(list)
        for cell, v in live.items():
            by_col[cell[1]].append((cell, v))
        col = min(by_col)
        cell, v = max(by_col[col], key=lambda cv: cv[1])
        while True:
            nxt = by_col.get(cell[1] + 1, [])
            if not any(w > v and c[0] > cell[0] for c, w in nxt):
                break
            cell, v = max(nxt, key=lambda cv: cv[1])
        masked.add(cell)
        placed[cell] = m
    return CompositionTableau.make(alpha, "SRCT", placed)


def strips(source: CompositionTableau) -> list[list[Cell]]:
    """Horizontal strips cut out by consecutive runs between descents of the source."""
    des = sorted(srct_descents(source))
    bounds = [0, *des, source.n]
    pos = source.position()
    return [
        sorted((pos[v] for v in range(bounds[j - 1] + 1, bounds[j] + 1)), key=lambda rc: rc[1])
        for j in range(1, len(bounds))
    ]


def read_tau(tau: CompositionTableau, source: CompositionTableau | None = None) -> Permutation:
    """Concatenate, strip by strip, the entries of tau read left to right."""
    if source is None:
        source = class_of(tau).source
    values = tau.as_dict()
    return Permutation(values[cell] for strip in strips(source) for cell in strip)


# Posets for the module families ---------------------------------------------


def dif_diagram(alpha: Composition) -> Diagram:
    alpha = Composition(alpha)
    ell = len(alpha)
    cells = [(1, i) for i in range(1, ell + 1)]
    for i in range(1, ell + 1):
        k = sum(alpha[j - 1] - 1 for j in range(i + 1, ell + 1))
        cells.extend((j + k, i) for j in range(2, alpha[i - 1] + 1))
    return Diagram(cells)


def esf_diagram(alpha: Composition) -> Diagram:
    return Diagram((c, r) for r, c in composition_cells(Composition(alpha)))


def poset_dual_immaculate(alpha: Composition) -> LabeledPoset:
    return canonical_poset(dif_diagram(alpha))


def poset_extended(alpha: Composition) -> LabeledPoset:
    return canonical_poset(esf_diagram(alpha))


def quasischur_data(alpha: Composition, cls: SrctClass) -> tuple[Composition, Permutation]:
    """The pair (comp(Des(source)^c), read of the sink) fed to build_D."""
    source = cls.source
    n = source.n
    base = comp_of(set(range(1, n)) - srct_descents(source), n)
    return base, read_tau(sink_from(source), source)


def poset_quasischur(alpha: Composition, cls: SrctClass) -> LabeledPoset:
    base, rho = quasischur_data(alpha, cls)
    return canonical_poset(build_D(base, rho))


Family = Literal["DIF", "ESF", "RDIF", "RESF", "QS", "YQS", "YRQS", "RQS"]


def twisted_posets(alpha: Composition, family: Family, cls: SrctClass | None = None) -> LabeledPoset:
    """Posets of the remaining families via the bar and star involutions.

    For YQS and RQS the class lives in SRCT(alpha reversed); for QS and YRQS
    it lives in SRCT(alpha).
    """
    alpha = Composition(alpha)
    if family == "DIF":
        return poset_dual_immaculate(alpha)
    if family == "ESF":
        return poset_extended(alpha)
    if family == "RDIF":
        return bar(poset_dual_immaculate(alpha))
    if family == "RESF":
        return bar(poset_extended(alpha))
    if cls is None:
        raise ValueError(f"{family} needs an SRCT class")
    if family == "QS":
        return poset_quasischur(alpha, cls)
    if family == "YQS":
        return star(bar(poset_quasischur(reverse(alpha), cls)))
    if family == "YRQS":
        return bar(poset_quasischur(alpha, cls))
    if family == "RQS":
        return star(poset_quasischur(reverse(alpha), cls))
    raise ValueError(f"unknown family {family!r}")


def family_interval(diagram: Diagram) -> frozenset[Permutation]:
    """f applied to the left interval between the extreme reading words."""
    _, _, lo, hi = diagram_extremes(diagram)
    return frozenset(f_map(g) for g in interval("left", lo, hi).elements)


def family_posets(alpha: Composition, family: Family) -> list[LabeledPoset]:
    """All posets whose modules sum to the family's module of shape alpha.

    DIF, ESF and their row-strict twins give a single poset; the quasisymmetric
    Schur families give one poset per SRCT class.
    """
    alpha = Composition(alpha)
    if family in ("DIF", "ESF", "RDIF", "RESF"):
        return [twisted_posets(alpha, family)]
    base = reverse(alpha) if family in ("YQS", "RQS") else alpha
    return [twisted_posets(alpha, family, cls) for cls in classes(base)]
