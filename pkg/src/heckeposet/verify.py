"""Property suites that check the structural theorems at desk scale.

Each suite returns a ``SuiteResult``; the CLI ``verify`` command and the
acceptance tests both run them.
"""

from __future__ import annotations

import random
import time
from collections import Counter
from collections.abc import Callable, Iterator
from dataclasses import dataclass, field
from fractions import Fraction

from heckeposet import borderstrips as bs
from heckeposet.compositions import Composition, comp_of, compositions_of, partitions_of, sort_to_partition, z_stat
from heckeposet.hecke import (
    check_relations,
    characteristic,
    characteristic_of_poset_module,
    composition_series_multiset,
    dual_left_interval_module,
    functor_F,
    interval_module,
    poset_module,
    poset_module_bar,
    restrict,
    twist,
)
from heckeposet.permutations import (
    Permutation,
    all_permutations,
    f_map,
    interval,
    inversions,
    leq_right,
    length,
    w0,
)
from heckeposet.posets import (
    LabeledPoset,
    all_posets_on,
    disjoint_union,
    is_regular,
    poset_from_interval,
    sigma_R,
    split,
)
from heckeposet.ppart import kp_in_psi_via_starred
from heckeposet.qsym import (
    QsymElement,
    coproduct,
    expand_in_psi,
    invol_psi,
    invol_rho,
    power_sum_p,
    product,
    psi_in_monomial,
    psi_normalized,
    tensor,
    to_monomial,
)
from heckeposet.tableaux import (
    classes,
    poset_dual_immaculate,
    poset_extended,
    poset_quasischur,
    row_descents,
    set_enumerate,
    sit_enumerate,
    srct_descents,
    srct_enumerate,
)

SUITES = ("relations", "interval", "hopf", "twists", "liu-weselcouch", "borderstrips")


@dataclass
class SuiteResult:
    name: str
    bound: int
    checks: int = 0
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def expect(self, ok: bool, what: Callable[[], str]) -> None:
        self.checks += 1
        if not ok and len(self.failures) < 20:
            self.failures.append(what())

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "bound": self.bound,
            "passed": self.passed,
            "checks": self.checks,
            "failures": self.failures,
            "seconds": round(self.seconds, 3),
        }


def _timed(fn: Callable[..., SuiteResult]) -> Callable[..., SuiteResult]:
    def wrapper(*args, **kwargs) -> SuiteResult:
        start = time.perf_counter()
        result = fn(*args, **kwargs)
        result.seconds = time.perf_counter() - start
        return result

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def right_intervals(n: int) -> Iterator[tuple[Permutation, Permutation]]:
    perms = list(all_permutations(n))
    invs = {p: inversions(p) for p in perms}
    for s in perms:
        for r in perms:
            if invs[s] <= invs[r]:
                yield s, r


def _as_interval(elements: frozenset[Permutation]) -> tuple[Permutation, Permutation] | None:
    """Endpoints if ``elements`` is a right weak interval, else None."""
    lo = min(elements, key=length)
    hi = max(elements, key=length)
    if not leq_right(lo, hi):
        return None
    return (lo, hi) if interval("right", lo, hi).elements == elements else None


@_timed
def relations_suite(n: int = 4) -> SuiteResult:
    """0-Hecke relations for every poset module and every interval module."""
    res = SuiteResult("relations", n)
    for k in range(1, n + 1):
        for p in all_posets_on(k):
            res.expect(check_relations(poset_module(p)), lambda: f"M_P fails for {p!r}")
            res.expect(check_relations(poset_module_bar(p)), lambda: f"bar M_P fails for {p!r}")
    for s, r in right_intervals(n):
        for flavor in ("plain", "bar"):
            m = interval_module("right", flavor, s, r)
            res.expect(check_relations(m), lambda: f"right {flavor} [{s},{r}] fails")
        si, ri = s.inverse(), r.inverse()
        for flavor in ("plain", "bar"):
            m = interval_module("left", flavor, si, ri)
            res.expect(check_relations(m), lambda: f"left {flavor} [{si},{ri}] fails")
        res.expect(check_relations(dual_left_interval_module(si, ri)), lambda: f"dual [{si},{ri}] fails")
    return res


@_timed
def interval_suite(n: int = 4) -> SuiteResult:
    """Round trip between right intervals and regular posets; f on left intervals."""
    res = SuiteResult("interval", n)
    top = w0(n)
    for s, r in right_intervals(n):
        elems = interval("right", s, r).elements
        p = poset_from_interval(s, r)
        res.expect(sigma_R(p) == elems, lambda: f"Sigma_R(poset of [{s},{r}]) differs")
        res.expect(is_regular(p), lambda: f"poset of [{s},{r}] is not regular")
        same = interval_module("right", "bar", s, r).same_action(poset_module(p))
        res.expect(same, lambda: f"bar B_R[{s},{r}] differs from M_P")
        # f carries the left interval [s^-1, r^-1] onto the right interval F(s^-1, r^-1)
        lower, upper = s.inverse(), r.inverse()
        left_elems = interval("left", lower, upper).elements
        image = frozenset(f_map(g) for g in left_elems)
        want = interval("right", *functor_F(lower, upper)).elements
        res.expect(image == want and len(image) == len(left_elems), lambda: f"f fails on [{lower},{upper}]_L")
        ch_left = characteristic(interval_module("left", "plain", lower, upper))
        ch_right = characteristic(interval_module("right", "bar", *functor_F(lower, upper)))
        res.expect(ch_left == ch_right, lambda: f"ch not preserved by F on [{lower},{upper}]_L")
        dual = dual_left_interval_module(lower, upper).relabel({g: f_map(g) for g in left_elems})
        target = interval_module("right", "bar", *functor_F(lower, upper))
        res.expect(dual.same_action(target), lambda: f"F intertwiner fails on [{lower},{upper}]_L")
    seen: dict[frozenset[Permutation], LabeledPoset] = {}
    for p in all_posets_on(n):
        elems = sigma_R(p)
        res.expect(elems not in seen, lambda: f"{p!r} and {seen[elems]!r} share Sigma_R")
        seen[elems] = p
        res.expect(is_regular(p) == (_as_interval(elems) is not None), lambda: f"regularity mismatch {p!r}")
    for g in all_permutations(n):
        res.expect(f_map(f_map(g)) == top * g * top, lambda: f"f(f({g})) != w0 g w0")
    return res


@_timed
def hopf_suite(n: int = 4, pairs: int = 200, max_total: int = 7, seed: int = 0) -> SuiteResult:
    """Character-level product and coproduct identities for poset modules."""
    res = SuiteResult("hopf", n)
    rng = random.Random(seed)
    for _ in range(pairs):
        total = rng.randint(2, max_total)
        a = rng.randint(1, total - 1)
        p1 = rng.choice(all_posets_on(a)) if a <= 5 else _random_poset(a, rng)
        p2 = rng.choice(all_posets_on(total - a)) if total - a <= 5 else _random_poset(total - a, rng)
        lhs = characteristic_of_poset_module(disjoint_union(p1, p2))
        rhs = product(characteristic_of_poset_module(p1), characteristic_of_poset_module(p2))
        res.expect(lhs == rhs, lambda: f"product fails for {p1!r}, {p2!r}")
    for k in range(1, n + 1):
        for p in all_posets_on(k):
            delta = coproduct(characteristic_of_poset_module(p))
            acc: Counter = Counter()
            for m in range(k + 1):
                for q, rest in restrict(p, m):
                    for key, c in tensor(characteristic_of_poset_module(q), characteristic_of_poset_module(rest)).items():
                        acc[key] += c
            acc = Counter({key: c for key, c in acc.items() if c})
            res.expect(dict(acc) == delta, lambda: f"coproduct fails for {p!r}")
            series = composition_series_multiset(p)
            ch = characteristic_of_poset_module(p)
            res.expect(
                {a: Fraction(c) for a, c in series.items()} == ch.coeffs,
                lambda: f"composition series of {p!r} disagrees with K_P",
            )
            for u, v in p.incomparable_pairs():
                low, high = split(p, u, v)
                both = sigma_R(low) | sigma_R(high)
                res.expect(
                    not (sigma_R(low) & sigma_R(high)) and both == sigma_R(p),
                    lambda: f"split of {p!r} at {(u, v)} is not a partition",
                )
    return res


def _random_poset(n: int, rng: random.Random, density: float = 0.3) -> LabeledPoset:
    """A random labeled poset: random DAG on a random ordering of [n]."""
    order = list(range(1, n + 1))
    rng.shuffle(order)
    rels = [
        (order[i], order[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < density
    ]
    return LabeledPoset(n, rels)


@_timed
def twists_suite(n: int = 4) -> SuiteResult:
    """Intertwiners for the phi, theta, chi twists and their characteristics."""
    res = SuiteResult("twists", n)
    for k in range(1, n + 1):
        for p in all_posets_on(k):
            kp = characteristic_of_poset_module(p)
            for which in ("phi", "theta", "chi"):
                data = twist(p, which)
                res.expect(data.is_intertwiner(), lambda: f"{which} intertwiner fails for {p!r}")
            res.expect(characteristic(twist(p, "phi").target) == invol_rho(kp), lambda: f"ch(phi) for {p!r}")
            res.expect(characteristic(twist(p, "theta").target) == invol_psi(kp), lambda: f"ch(theta) for {p!r}")
            res.expect(characteristic(twist(p, "chi").target) == kp, lambda: f"ch(chi) for {p!r}")
    return res


@_timed
def liu_weselcouch_suite(n: int = 4, random_count: int = 100, seed: int = 0, p_bound: int = 7) -> SuiteResult:
    """Starred P-partition coefficients against the exact Psi solve; p_lambda identity."""
    res = SuiteResult("liu-weselcouch", n)

    def compare(p: LabeledPoset) -> None:
        starred = kp_in_psi_via_starred(p)
        solved = {b: int(c) for b, c in psi_normalized(characteristic_of_poset_module(p)).items()}
        res.expect(starred == solved, lambda: f"Psi coefficients differ for {p!r}")

    for k in range(1, n + 1):
        for p in all_posets_on(k):
            compare(p)
    rng = random.Random(seed)
    pool = all_posets_on(n + 1) if n + 1 <= 5 else None
    for _ in range(random_count):
        compare(rng.choice(pool) if pool else _random_poset(n + 1, rng))
    for m in range(1, p_bound + 1):
        for lam in partitions_of(m):
            expected = QsymElement("Psi", {a: 1 for a in compositions_of(m) if sort_to_partition(a) == lam})
            res.expect(expand_in_psi(power_sum_p(lam)) == expected, lambda: f"p_{lam} identity fails")
    return res


def _f_sum(comps: Iterator[Composition]) -> QsymElement:
    return QsymElement("F", Counter(comps))


@_timed
def borderstrips_suite(shape_n: int = 6) -> SuiteResult:
    """DIF/ESF/QS characters against tableau descents; border strips against both oracles."""
    res = SuiteResult("borderstrips", shape_n)
    for m in range(1, shape_n + 1):
        for alpha in compositions_of(m):
            dif = poset_dual_immaculate(alpha)
            esf = poset_extended(alpha)
            dif_ch = _f_sum(comp_of(row_descents(t), m) for t in sit_enumerate(alpha))
            esf_ch = _f_sum(comp_of(row_descents(t), m) for t in set_enumerate(alpha))
            qs_ch = _f_sum(comp_of(srct_descents(t), m) for t in srct_enumerate(alpha))
            res.expect(characteristic_of_poset_module(dif) == dif_ch, lambda: f"DIF character {alpha}")
            res.expect(characteristic_of_poset_module(esf) == esf_ch, lambda: f"ESF character {alpha}")
            qs = QsymElement("F")
            for cls in classes(alpha):
                qs = qs + characteristic_of_poset_module(poset_quasischur(alpha, cls))
            res.expect(qs == qs_ch, lambda: f"QS character {alpha}")
            for flavor, poset, ch in (("DIF", dif, dif_ch), ("ESF", esf, esf_ch)):
                strips = bs.expand_in_psi(flavor, alpha)
                solved = {b: int(c) for b, c in psi_normalized(ch).items()}
                starred = kp_in_psi_via_starred(poset)
                res.expect(strips == solved == starred, lambda: f"{flavor} d-vector {alpha}")
                rebuilt = QsymElement("M")
                for b, d in strips.items():
                    rebuilt = rebuilt + psi_in_monomial(b).scale(Fraction(d, z_stat(b)))
                res.expect(rebuilt == to_monomial(ch), lambda: f"{flavor} round trip {alpha}")
    return res


def run_suite(name: str, n: int = 4, shape_n: int = 6) -> list[SuiteResult]:
    runners: dict[str, Callable[[], SuiteResult]] = {
        "relations": lambda: relations_suite(n),
        "interval": lambda: interval_suite(n),
        "hopf": lambda: hopf_suite(n),
        "twists": lambda: twists_suite(n),
        "liu-weselcouch": lambda: liu_weselcouch_suite(n),
        "borderstrips": lambda: borderstrips_suite(shape_n),
    }
    if name == "all":
        return [runners[s]() for s in SUITES]
    if name not in runners:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
    return [runners[name]()]
