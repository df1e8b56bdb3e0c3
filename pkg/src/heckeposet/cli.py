"""Command-line entry point: ``heckeposet <subcommand> [options]``."""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from heckeposet import borderstrips as bs
from heckeposet.compositions import Composition, parse_composition, z_stat
from heckeposet.hecke import characteristic, characteristic_of_poset_module, poset_module
from heckeposet.permutations import Permutation, interval, length
from heckeposet.posets import LabeledPoset, is_regular, linear_extensions, poset_from_interval, sigma_L, sigma_R, topological_order
from heckeposet.ppart import MAX_ENUMERATION_N, kp_in_psi_via_starred
from heckeposet.qsym import QsymElement, convert, expand_in_psi, format_rational, parse_rational
from heckeposet.tableaux import (
    CompositionTableau,
    build_D_steps,
    class_of,
    classes,
    family_posets,
    parse_tableau,
    quasischur_data,
    read_tau,
    sink_from,
)
from heckeposet.verify import SUITES, run_suite

FAMILIES = {
    "dimm": "DIF",
    "ext": "ESF",
    "rdimm": "RDIF",
    "rext": "RESF",
    "qs": "QS",
    "yqs": "YQS",
    "yrqs": "YRQS",
    "rqs": "RQS",
}
ROUTES = ("auto", "strips", "starred", "solve")
HARD_CAP = MAX_ENUMERATION_N


class CliError(Exception):
    pass


@dataclass(frozen=True)
class CliConfig:
    subcommand: str
    fmt: str
    n: int
    route: str = "auto"

    def __post_init__(self) -> None:
        if self.n > HARD_CAP:
            raise CliError(f"bound {self.n} exceeds the hard cap {HARD_CAP}")


# -- input helpers ----------------------------------------------------------


def _alpha(text: str | None) -> Composition:
    if not text:
        raise CliError("--alpha is required")
    try:
        return parse_composition(text)
    except ValueError as exc:
        raise CliError(f"bad composition {text!r}: {exc}") from exc


def _perm(text: str | None, flag: str) -> Permutation:
    if not text:
        raise CliError(f"{flag} is required")
    try:
        return Permutation.parse(text)
    except ValueError as exc:
        raise CliError(f"bad permutation {text!r}: {exc}") from exc


def _load_poset(path: str) -> LabeledPoset:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
        return LabeledPoset.from_json(json.loads(text))
    except (OSError, KeyError, TypeError, ValueError) as exc:
        raise CliError(f"cannot read poset from {path}: {exc}") from exc


def _posets(args: argparse.Namespace) -> list[LabeledPoset]:
    """Posets named by --family/--alpha, --covers-file, or --sigma/--rho."""
    family = getattr(args, "family", None)
    if family == "poset" or (family is None and args.covers_file):
        if not args.covers_file:
            raise CliError("--family poset needs --covers-file")
        return [_load_poset(args.covers_file)]
    if family is None and getattr(args, "sigma", None):
        return [poset_from_interval(_perm(args.sigma, "--sigma"), _perm(args.rho, "--rho"))]
    if family not in FAMILIES:
        raise CliError(f"unknown family {family!r}; choose from {', '.join([*FAMILIES, 'poset'])}")
    alpha = _alpha(args.alpha)
    if sum(alpha) > HARD_CAP:
        raise CliError(f"|alpha| = {sum(alpha)} exceeds the hard cap {HARD_CAP}")
    posets = family_posets(alpha, FAMILIES[family])
    index = getattr(args, "class_index", None)
    if index is not None:
        if not 1 <= index <= len(posets):
            raise CliError(f"--class must lie in 1..{len(posets)}")
        posets = [posets[index - 1]]
    return posets


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _dump(data: object) -> str:
    return json.dumps(data, indent=2, sort_keys=False) + "\n"


# -- expand -----------------------------------------------------------------


def expansion(args: argparse.Namespace) -> QsymElement:
    """The requested family or poset characteristic, in the Psi basis."""
    route = args.route
    family = args.family
    if route == "strips" or (route == "auto" and family in ("dimm", "ext")):
        if family not in ("dimm", "ext"):
            raise CliError("the border-strip route covers only dimm and ext")
        alpha = _alpha(args.alpha)
        if sum(alpha) > HARD_CAP:
            raise CliError(f"|alpha| = {sum(alpha)} exceeds the hard cap {HARD_CAP}")
        d = bs.expand_in_psi(FAMILIES[family], alpha)
        return QsymElement("Psi", {b: Fraction(c, z_stat(b)) for b, c in d.items()})
    posets = _posets(args)
    total = QsymElement("Psi")
    for p in posets:
        if p.n > HARD_CAP:
            raise CliError(f"poset on {p.n} elements exceeds the hard cap {HARD_CAP}")
        if route == "starred":
            part = QsymElement("Psi", {b: Fraction(c, z_stat(b)) for b, c in kp_in_psi_via_starred(p).items()})
        else:
            part = expand_in_psi(characteristic_of_poset_module(p))
        total = total + part
    return total


def expansion_tsv(x: QsymElement) -> str:
    """Psi rows carry b, the Psi_b / z_b coefficient, and the Psi_b coefficient."""
    lines = []
    for comp, c in x.terms():
        if x.basis == "Psi":
            lines.append(f"{comp}\t{format_rational(c * z_stat(comp))}\t{format_rational(c)}")
        else:
            lines.append(f"{x.basis}_{comp}\t{format_rational(c)}")
    return "".join(line + "\n" for line in lines)


def read_expansion_tsv(text: str) -> QsymElement:
    """Inverse of ``expansion_tsv``."""
    basis = "Psi"
    coeffs: dict[Composition, Fraction] = {}
    for line in text.splitlines():
        if not line.strip():
            continue
        cols = line.split("\t")
        head = cols[0]
        if "_" in head:
            basis, head = head.split("_", 1)
            coeffs[parse_composition(head)] = parse_rational(cols[1])
        else:
            coeffs[parse_composition(head)] = parse_rational(cols[2])
    return QsymElement(basis, coeffs)


def cmd_expand(args: argparse.Namespace) -> int:
    x = expansion(args)
    if args.basis != "Psi":
        x = convert(x, args.basis)
    if args.format == "json":
        _emit(_dump(x.to_json()), args.out)
    elif args.format == "tsv":
        _emit(expansion_tsv(x), args.out)
    else:
        raise CliError("expand supports --format tsv or json")
    return 0


# -- hasse ------------------------------------------------------------------


def longest_path_ranks(poset: LabeledPoset) -> dict[int, int]:
    rank: dict[int, int] = {}
    for j in topological_order(poset):
        below = [rank[i] for i, k in poset.covers() if k == j]
        rank[j] = 1 + max(below) if below else 0
    return rank


def hasse_dot(poset: LabeledPoset, name: str = "P") -> str:
    """Hasse diagram with bottom-to-top layout; strict covers drawn bold."""
    ranks = longest_path_ranks(poset)
    strict = set(poset.strict_covers())
    out = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=circle];"]
    for r in sorted(set(ranks.values())):
        members = " ".join(f"{j};" for j in sorted(j for j in ranks if ranks[j] == r))
        out.append(f"  {{ rank=same; {members} }}")
    for i, j in sorted(poset.covers()):
        width = 2 if (i, j) in strict else 1
        out.append(f"  {i} -> {j} [dir=none, penwidth={width}];")
    out.append("}")
    return "\n".join(out) + "\n"


def cmd_hasse(args: argparse.Namespace) -> int:
    if args.format not in ("dot", None):
        raise CliError("hasse emits --format dot only")
    posets = _posets(args)
    names = ["P"] if len(posets) == 1 else [f"P{k}" for k in range(1, len(posets) + 1)]
    _emit("".join(hasse_dot(p, nm) for p, nm in zip(posets, names)), args.out)
    return 0


# -- poset ------------------------------------------------------------------


def _perm_key(p: Permutation) -> tuple[int, tuple[int, ...]]:
    return length(p), tuple(p)


def poset_report(poset: LabeledPoset) -> dict:
    right = sorted(sigma_R(poset), key=_perm_key)
    return {
        "n": poset.n,
        "covers": [list(c) for c in poset.covers()],
        "strict_covers": [list(c) for c in poset.strict_covers()],
        "regular": is_regular(poset),
        "linear_extensions": len(linear_extensions(poset)),
        "sigma_R": [str(p) for p in right],
        "sigma_L": [str(p) for p in sorted(sigma_L(poset), key=_perm_key)],
        "characteristic": characteristic(poset_module(poset)).to_json(),
    }


def cmd_poset(args: argparse.Namespace) -> int:
    reports = [poset_report(p) for p in _posets(args)]
    data = reports[0] if len(reports) == 1 else reports
    if args.format == "json":
        _emit(_dump(data), args.out)
    elif args.format == "tsv":
        rows = reports if isinstance(data, list) else [data]
        text = "".join(
            f"{k}\t{json.dumps(v, separators=(',', ':')) if not isinstance(v, (int, str)) else v}\n"
            for r in rows
            for k, v in r.items()
        )
        _emit(text, args.out)
    else:
        _emit("".join(hasse_dot(p) for p in _posets(args)), args.out)
    return 0


# -- interval ---------------------------------------------------------------


def cmd_interval(args: argparse.Namespace) -> int:
    sigma, rho = _perm(args.sigma, "--sigma"), _perm(args.rho, "--rho")
    try:
        iv = interval(args.side, sigma, rho)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    elems = sorted(iv.elements, key=_perm_key)
    if args.format == "tsv":
        _emit("".join(f"{p}\n" for p in elems), args.out)
        return 0
    data: dict = {"side": args.side, "bottom": str(sigma), "top": str(rho), "elements": [str(p) for p in elems]}
    if args.side == "right":
        data["poset"] = poset_from_interval(sigma, rho).to_json()
    if args.format == "dot":
        if args.side != "right":
            raise CliError("only right intervals carry a poset diagram")
        _emit(hasse_dot(poset_from_interval(sigma, rho)), args.out)
    else:
        _emit(_dump(data), args.out)
    return 0


# -- sink-tableau -----------------------------------------------------------


def _tableau_record(t: CompositionTableau, source: CompositionTableau) -> dict:
    return {"tableau": str(t), "read": str(read_tau(t, source))}


def cmd_sink_tableau(args: argparse.Namespace) -> int:
    if args.tableau:
        try:
            tau = parse_tableau(args.tableau)
        except ValueError as exc:
            raise CliError(f"bad SRCT {args.tableau!r}: {exc}") from exc
        source = class_of(tau).source
        sink = sink_from(tau)
        records = [{"input": _tableau_record(tau, source), "sink": _tableau_record(sink, source)}]
    else:
        alpha = _alpha(args.alpha)
        records = []
        for cls in classes(alpha):
            base, _ = quasischur_data(alpha, cls)
            records.append(
                {
                    "source": _tableau_record(cls.source, cls.source),
                    "sink": _tableau_record(sink_from(cls.source), cls.source),
                    "size": len(cls.members),
                    "base": str(base),
                }
            )
    if args.format == "tsv":
        lines = []
        for r in records:
            cols = [f"{k}={v['tableau']}|{v['read']}" if isinstance(v, dict) else f"{k}={v}" for k, v in r.items()]
            lines.append("\t".join(cols))
        _emit("".join(line + "\n" for line in lines), args.out)
    else:
        _emit(_dump(records), args.out)
    return 0


# -- build-d ----------------------------------------------------------------


def cmd_build_d(args: argparse.Namespace) -> int:
    alpha, rho = _alpha(args.alpha), _perm(args.rho, "--rho")
    try:
        steps = build_D_steps(alpha, rho)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    data = {
        "alpha": str(alpha),
        "rho": str(rho),
        "rows": [sorted(r) for r in steps.rows],
        "columns": [sorted(c) for c in steps.columns],
        "cells": steps.diagram.to_json()["cells"],
    }
    if args.format == "tsv":
        lines = [f"R_{j}\t{','.join(map(str, r))}" for j, r in enumerate(data["rows"], 1)]
        lines += [f"C_{i}\t{','.join(map(str, c))}" for i, c in enumerate(data["columns"], 1)]
        lines += [f"cell\t{x},{y}" for x, y in data["cells"]]
        _emit("".join(line + "\n" for line in lines), args.out)
    else:
        _emit(_dump(data), args.out)
    return 0


# -- verify -----------------------------------------------------------------


def _run_one(job: tuple[str, int, int]) -> list[dict]:
    name, n, shape_n = job
    return [r.to_json() for r in run_suite(name, n, shape_n)]


def cmd_verify(args: argparse.Namespace) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    if args.suite not in (*SUITES, "all"):
        raise CliError(f"unknown suite {args.suite!r}")
    jobs = [(name, args.n, args.shape_n) for name in names]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = [r for batch in pool.map(_run_one, jobs) for r in batch]
    else:
        results = [r for job in jobs for r in _run_one(job)]
    if not args.timings:
        for r in results:
            r.pop("seconds")
    report = {"n": args.n, "shape_n": args.shape_n, "passed": all(r["passed"] for r in results), "suites": results}
    _emit(_dump(report), args.out)
    if not report["passed"]:
        for r in results:
            for f in r["failures"]:
                print(f"{r['suite']}: {f}", file=sys.stderr)
    return 0 if report["passed"] else 1


# -- parser -----------------------------------------------------------------


def _add_shape_args(p: argparse.ArgumentParser, families: Sequence[str]) -> None:
    p.add_argument("--family", choices=families)
    p.add_argument("--alpha", help="composition such as 2,1,2")
    p.add_argument("--covers-file", help='JSON poset {"n": .., "covers": [[i, j], ..]}; "-" for stdin')
    p.add_argument("--class", dest="class_index", type=int, help="1-based SRCT class for the QS families")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="heckeposet", description="0-Hecke poset modules and Psi expansions.")
    sub = parser.add_subparsers(dest="command", required=True)
    families = [*FAMILIES, "poset"]

    p = sub.add_parser("expand", help="expand a family or poset characteristic")
    _add_shape_args(p, families)
    p.add_argument("--basis", choices=("Psi", "F", "M"), default="Psi")
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.add_argument("--route", choices=ROUTES, default="auto", help="which oracle computes Psi coefficients")
    p.add_argument("--out")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("hasse", help="emit a Hasse diagram in DOT")
    _add_shape_args(p, families)
    p.add_argument("--sigma")
    p.add_argument("--rho")
    p.add_argument("--format", choices=("dot",), default="dot")
    p.add_argument("--out")
    p.set_defaults(func=cmd_hasse)

    p = sub.add_parser("poset", help="build and inspect a poset")
    _add_shape_args(p, families)
    p.add_argument("--sigma")
    p.add_argument("--rho")
    p.add_argument("--format", choices=("json", "tsv", "dot"), default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_poset)

    p = sub.add_parser("interval", help="list a weak Bruhat interval")
    p.add_argument("--side", choices=("right", "left"), default="right")
    p.add_argument("--sigma", required=True)
    p.add_argument("--rho", required=True)
    p.add_argument("--format", choices=("json", "tsv", "dot"), default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_interval)

    p = sub.add_parser("sink-tableau", help="sink of an SRCT's class, or all classes of a shape")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--tableau", help="SRCT rows top to bottom, e.g. '3 2/6 5 4'")
    group.add_argument("--alpha")
    p.add_argument("--format", choices=("json", "tsv"), default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_sink_tableau)

    p = sub.add_parser("build-d", help="run the diagram construction for (alpha, rho)")
    p.add_argument("--alpha", required=True)
    p.add_argument("--rho", required=True)
    p.add_argument("--format", choices=("json", "tsv"), default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_build_d)

    p = sub.add_parser("verify", help="run the verification suites")
    p.add_argument("--suite", default="all", choices=(*SUITES, "all"))
    p.add_argument("--n", type=int, default=4, help="poset and permutation size bound")
    p.add_argument("--shape-n", type=int, default=6, help="composition size bound for the family checks")
    p.add_argument("--jobs", type=int, default=1, help="run suites in parallel processes")
    p.add_argument("--timings", action="store_true", help="include wall-clock seconds in the report")
    p.add_argument("--format", choices=("json",), default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        bound = max(getattr(args, "n", 0) or 0, getattr(args, "shape_n", 0) or 0)
        CliConfig(args.command, args.format, bound, getattr(args, "route", "auto"))
        return args.func(args)
    except CliError as exc:
        print(f"heckeposet: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
