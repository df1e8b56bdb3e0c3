"""Exact quasisymmetric functions in the monomial, fundamental and power sum bases.

Coefficients are ``fractions.Fraction``. The power sum basis here is the
type-1 basis Psi, with ``Psi_a = z_a sum_{b coarser than a} M_b / pi(a, b)``.
"""

from __future__ import annotations

import json
from collections import defaultdict
from collections.abc import Iterable, Mapping
from fractions import Fraction
from functools import cache
from typing import Literal, Union

from heckeposet.compositions import (
    Composition,
    coarsenings,
    complement,
    compositions_of,
    graded_key,
    pi_pair,
    refinements,
    reverse,
    z_stat,
)

Basis = Literal["M", "F", "Psi"]
Scalar = Union[int, Fraction]
BASES: tuple[str, ...] = ("M", "F", "Psi")


def format_rational(q: Fraction) -> str:
    """``p/q`` with the denominator dropped when it is 1."""
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text)


class QsymElement:
    """A finite linear combination of basis elements indexed by compositions."""

    __slots__ = ("basis", "coeffs")

    def __init__(self, basis: Basis, coeffs: Mapping[Iterable[int], Scalar] | None = None) -> None:
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.basis: Basis = basis
        clean: dict[Composition, Fraction] = {}
        for comp, c in (coeffs or {}).items():
            c = Fraction(c)
            if c:
                key = Composition(comp)
                clean[key] = clean.get(key, Fraction(0)) + c
                if not clean[key]:
                    del clean[key]
        self.coeffs: dict[Composition, Fraction] = clean

    @classmethod
    def basis_element(cls, basis: Basis, alpha: Iterable[int]) -> QsymElement:
        return cls(basis, {Composition(alpha): 1})

    @classmethod
    def one(cls) -> QsymElement:
        return cls("M", {Composition(): 1})

    def terms(self) -> list[tuple[Composition, Fraction]]:
        return sorted(self.coeffs.items(), key=lambda kv: graded_key(kv[0]))

    def degrees(self) -> set[int]:
        return {sum(a) for a in self.coeffs}

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, alpha: Iterable[int]) -> Fraction:
        return self.coeffs.get(Composition(alpha), Fraction(0))

    def _check(self, other: QsymElement) -> None:
        if self.basis != other.basis:
            raise ValueError(f"basis mismatch: {self.basis} vs {other.basis}")

    def __add__(self, other: QsymElement) -> QsymElement:
        self._check(other)
        out = dict(self.coeffs)
        for a, c in other.coeffs.items():
            out[a] = out.get(a, Fraction(0)) + c
        return QsymElement(self.basis, out)

    def __neg__(self) -> QsymElement:
        return QsymElement(self.basis, {a: -c for a, c in self.coeffs.items()})

    def __sub__(self, other: QsymElement) -> QsymElement:
        return self + (-other)

    def scale(self, k: Scalar) -> QsymElement:
        return QsymElement(self.basis, {a: c * k for a, c in self.coeffs.items()})

    def __rmul__(self, k: Scalar) -> QsymElement:
        return self.scale(k)

    def __mul__(self, other: QsymElement | Scalar) -> QsymElement:
        if isinstance(other, QsymElement):
            return product(self, other)
        return self.scale(other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QsymElement):
            return NotImplemented
        if self.basis == other.basis:
            return self.coeffs == other.coeffs
        return to_monomial(self).coeffs == to_monomial(other).coeffs

    def __hash__(self) -> int:
        return hash((self.basis, frozenset(self.coeffs.items())))

    def __repr__(self) -> str:
        return f"QsymElement({self.basis!r}, {str(self)!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for a, c in self.terms():
            sym = f"{self.basis}_{a}"
            if c == 1:
                parts.append(sym)
            elif c == -1:
                parts.append(f"-{sym}")
            else:
                parts.append(f"{format_rational(c)} {sym}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> dict:
        return {
            "basis": self.basis,
            "terms": [{"comp": list(a), "coeff": format_rational(c)} for a, c in self.terms()],
        }

    @classmethod
    def from_json(cls, data: dict | str) -> QsymElement:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(data["basis"], {tuple(t["comp"]): Fraction(t["coeff"]) for t in data["terms"]})


@cache
def _psi_row(alpha: Composition) -> tuple[tuple[Composition, Fraction], ...]:
    z = z_stat(alpha)
    return tuple((beta, Fraction(z, pi_pair(alpha, beta))) for beta in coarsenings(alpha))


def psi_in_monomial(alpha: Iterable[int]) -> QsymElement:
    alpha = Composition(alpha)
    return QsymElement("M", dict(_psi_row(alpha)))


def fundamental_to_monomial(x: QsymElement) -> QsymElement:
    if x.basis != "F":
        raise ValueError("expected an F-basis element")
    out: dict[Composition, Fraction] = defaultdict(Fraction)
    for alpha, c in x.coeffs.items():
        for beta in refinements(alpha):
            out[beta] += c
    return QsymElement("M", out)


def monomial_to_fundamental(x: QsymElement) -> QsymElement:
    if x.basis != "M":
        raise ValueError("expected an M-basis element")
    out: dict[Composition, Fraction] = defaultdict(Fraction)
    for alpha, c in x.coeffs.items():
        for beta in refinements(alpha):
            out[beta] += c * (-1) ** (len(beta) - len(alpha))
    return QsymElement("F", out)


def to_monomial(x: QsymElement) -> QsymElement:
    if x.basis == "M":
        return x
    if x.basis == "F":
        return fundamental_to_monomial(x)
    out = QsymElement("M")
    for alpha, c in x.coeffs.items():
        out = out + psi_in_monomial(alpha).scale(c)
    return out


def to_fundamental(x: QsymElement) -> QsymElement:
    return x if x.basis == "F" else monomial_to_fundamental(to_monomial(x))


def expand_in_psi(x: QsymElement) -> QsymElement:
    """Solve the triangular Psi-to-M system, finest compositions first."""
    if x.basis == "Psi":
        return x
    if len(x.degrees()) > 1:
        raise ValueError("expand_in_psi needs a homogeneous element")
    residual = dict(to_monomial(x).coeffs)
    out: dict[Composition, Fraction] = {}
    if not residual:
        return QsymElement("Psi")
    (n,) = x.degrees()
    for alpha in sorted(compositions_of(n), key=lambda a: (-len(a), a)):
        c = residual.get(alpha, Fraction(0))
        if not c:
            continue
        row = _psi_row(alpha)
        diag = dict(row)[alpha]
        coeff = c / diag
        out[alpha] = coeff
        for beta, v in row:
            residual[beta] = residual.get(beta, Fraction(0)) - coeff * v
    leftover = {a: c for a, c in residual.items() if c}
    if leftover:
        raise ArithmeticError(f"triangular solve left a residual {leftover}")
    return QsymElement("Psi", out)


def convert(x: QsymElement, basis: Basis) -> QsymElement:
    if basis == "M":
        return to_monomial(x)
    if basis == "F":
        return to_fundamental(x)
    return expand_in_psi(x)


@cache
def _quasi_shuffle(a: Composition, b: Composition) -> tuple[tuple[Composition, int], ...]:
    if not a:
        return ((b, 1),)
    if not b:
        return ((a, 1),)
    acc: dict[Composition, int] = defaultdict(int)
    for tail, c in _quasi_shuffle(Composition(a[1:]), b):
        acc[Composition((a[0], *tail))] += c
    for tail, c in _quasi_shuffle(a, Composition(b[1:])):
        acc[Composition((b[0], *tail))] += c
    for tail, c in _quasi_shuffle(Composition(a[1:]), Composition(b[1:])):
        acc[Composition((a[0] + b[0], *tail))] += c
    return tuple(acc.items())


def product(x: QsymElement, y: QsymElement) -> QsymElement:
    """Quasi-shuffle product, computed in the M basis."""
    xm, ym = to_monomial(x), to_monomial(y)
    out: dict[Composition, Fraction] = defaultdict(Fraction)
    for a, ca in xm.coeffs.items():
        for b, cb in ym.coeffs.items():
            for g, k in _quasi_shuffle(a, b):
                out[g] += ca * cb * k
    return QsymElement("M", out)


Tensor = dict[tuple[Composition, Composition], Fraction]


def coproduct(x: QsymElement) -> Tensor:
    """Deconcatenation on the M basis, as a map (left, right) -> coefficient."""
    out: Tensor = defaultdict(Fraction)
    for a, c in to_monomial(x).coeffs.items():
        for k in range(len(a) + 1):
            out[(Composition(a[:k]), Composition(a[k:]))] += c
    return {key: c for key, c in out.items() if c}


def tensor(x: QsymElement, y: QsymElement) -> Tensor:
    """M-basis coefficients of x (tensor) y."""
    out: Tensor = defaultdict(Fraction)
    for a, ca in to_monomial(x).coeffs.items():
        for b, cb in to_monomial(y).coeffs.items():
            out[(a, b)] += ca * cb
    return {key: c for key, c in out.items() if c}


def counit(x: QsymElement) -> Fraction:
    return to_monomial(x)[()]


def invol_rho(x: QsymElement) -> QsymElement:
    """F_a -> F_{a reversed}."""
    return QsymElement("F", {reverse(a): c for a, c in to_fundamental(x).coeffs.items()})


def invol_psi(x: QsymElement) -> QsymElement:
    """F_a -> F_{a complement}."""
    return QsymElement("F", {complement(a): c for a, c in to_fundamental(x).coeffs.items()})


def power_sum_p(lam: Iterable[int]) -> QsymElement:
    """p_lambda as the product of M_(k) over the parts k of lambda."""
    out = QsymElement.one()
    for k in lam:
        out = product(out, QsymElement.basis_element("M", (k,)))
    return out


def psi_normalized(x: QsymElement) -> dict[Composition, Fraction]:
    """Coefficients of Psi_b / z_b, i.e. Psi-coefficients times z_b."""
    return {b: c * z_stat(b) for b, c in expand_in_psi(x).coeffs.items()}


def specialize(x: QsymElement, max_vars: int) -> dict[tuple[int, ...], Fraction]:
    """Evaluate at x_1, ..., x_m as a polynomial: exponent vector -> coefficient."""
    from itertools import combinations as _comb

    out: dict[tuple[int, ...], Fraction] = defaultdict(Fraction)
    for alpha, c in to_monomial(x).coeffs.items():
        for idx in _comb(range(max_vars), len(alpha)):
            exps = [0] * max_vars
            for pos, part in zip(idx, alpha):
                exps[pos] = part
            out[tuple(exps)] += c
    return {k: v for k, v in out.items() if v}
