"""Command-line front end: bound reports, enumerations, certificate runs.

Exit codes: 0 success, 1 a checked mathematical statement failed (negative
certificate slack, refuted inequality), 2 usage or parameter-range error.
All rationals are serialized as exact "p/q" strings; decimal renderings are
always marked as approximations.  Output for identical inputs is
byte-identical, and class caches are written exclusive-create-then-rename.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import random
import sys
from fractions import Fraction
from typing import Optional

from . import bounds, certificate, relations
from .combinat import EpsilonMode, decimal_string, x_ratio
from .hypergraph import (
    Hypergraph,
    enumerate_all,
    has_no_empty_set,
    read_hgr,
    write_hgr,
)

CACHE_ENV = "TURANKIT_CACHE"
DEFAULT_CACHE_DIR = ".hgr-cache"


def _frac(value) -> str:
    return str(Fraction(value))


def _approx(value) -> str:
    return f"~{decimal_string(Fraction(value))}"


def _emit(payload: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2))
    else:
        for key, value in payload.items():
            print(f"{key} = {value}")


def _mode(args) -> EpsilonMode:
    return EpsilonMode(args.mode)


def _cache_dir(args) -> str:
    if getattr(args, "cache_dir", None):
        return args.cache_dir
    return os.environ.get(CACHE_ENV, DEFAULT_CACHE_DIR)


def _cache_path(directory: str, k: int, n: int, tag: str) -> str:
    return os.path.join(directory, f"k{k}-n{n}-{tag}.hgr")


def _bound_payload(report: bounds.BoundReport) -> dict:
    return {
        "k": report.k,
        "g": report.g,
        "r": report.r,
        "n": report.n,
        "mode": report.mode.value,
        "thresholdOk": report.threshold_ok,
        "finiteFactor": _frac(report.finite_factor),
        "asymptotic": _frac(report.asymptotic),
        "finiteBound": _frac(report.finite_bound),
        "finiteBoundApprox": _approx(report.finite_bound),
        "deCaen": _frac(report.de_caen) if report.de_caen is not None else None,
        "lowerBound": _frac(report.lower_bound) if report.lower_bound is not None else None,
    }


def _cmd_bound(args) -> int:
    report = bounds.upper_bound(args.k, args.g, args.r, args.n, _mode(args))
    _emit(_bound_payload(report), args.format)
    return 0


def _cmd_table(args) -> int:
    mode = _mode(args)
    rows = []
    for g in range(args.k, args.r):
        rep = bounds.upper_bound(args.k, g, args.r, args.n, mode)
        rows.append(
            {
                "g": g,
                "finiteBound": _frac(rep.finite_bound),
                "asymptotic": _frac(rep.asymptotic),
                "deCaen": _frac(rep.de_caen) if rep.de_caen is not None else "",
                "lowerBound": _frac(rep.lower_bound) if rep.lower_bound is not None else "",
            }
        )
    buffer = io.StringIO()
    writer = csv.DictWriter(
        buffer, fieldnames=["g", "finiteBound", "asymptotic", "deCaen", "lowerBound"]
    )
    writer.writeheader()
    writer.writerows(rows)
    sys.stdout.write(buffer.getvalue())
    return 0


def _cmd_lower(args) -> int:
    k, g, r = args.k, args.g, args.r
    if not (2 <= k <= g < r):
        raise ValueError(f"lower: need 2 <= k <= g < r, got ({k}, {g}, {r})")
    l = (r - 1) // (k - 1)
    part = bounds.partite_lower_bound(k, g, l)
    payload = {
        "k": k,
        "g": g,
        "r": r,
        "groups": l,
        "direct": _frac(part.direct),
        "directApprox": _approx(part.direct),
        "inclusionExclusion": _frac(part.formula),
        "formulaAgrees": part.direct == part.formula,
        "sandwich": None,
    }
    if (r - 1) % (k - 1) == 0:
        sand = bounds.sandwich_table(k, r)
        payload["sandwich"] = {
            "multinomialLower": _frac(sand.multinomial_lower),
            "product": _frac(sand.product),
            "expLimitApprox": sand.exp_limit_approx,
            "orderingOk": sand.ordering_ok,
        }
    _emit(payload, args.format)
    return 0


def _parse_filter(value: Optional[str]):
    """Filter string `no-empty-M`: keep classes where every M-subset spans
    an edge.  Returns (tag, predicate)."""
    if value is None:
        return "none", None
    parts = value.split("-")
    if len(parts) == 3 and parts[0] == "no" and parts[1] == "empty" and parts[2].isdigit():
        size = int(parts[2])
        return value, lambda G: has_no_empty_set(G, size)
    raise ValueError(f"unknown filter {value!r}; expected no-empty-<size>")


def _cmd_enumerate(args) -> int:
    tag, predicate = _parse_filter(args.filter)
    classes = enumerate_all(args.n, args.k, predicate)
    directory = _cache_dir(args)
    os.makedirs(directory, exist_ok=True)
    path = _cache_path(directory, args.k, args.n, tag)
    write_hgr(path, args.k, args.n, classes, tag)
    _emit(
        {
            "k": args.k,
            "n": args.n,
            "filter": tag,
            "count": len(classes),
            "cache": path,
        },
        args.format,
    )
    return 0


def _load_or_build_e5free(directory: str) -> tuple[Hypergraph, ...]:
    path = _cache_path(directory, 3, 6, "no-empty-5")
    if os.path.exists(path):
        k, n, tag, classes = read_hgr(path)
        if (k, n, tag) == (3, 6, "no-empty-5"):
            return classes
    classes = certificate.e5free_six_classes()
    os.makedirs(directory, exist_ok=True)
    write_hgr(path, 3, 6, classes, "no-empty-5")
    return classes


def _cmd_certificate(args) -> int:
    classes = _load_or_build_e5free(_cache_dir(args))
    report = certificate.verify_certificate(classes)
    payload = {
        "k": report.k,
        "n": report.n,
        "graphCount": report.graph_count,
        "minSlack": _frac(report.min_slack),
        "tightGraphs": [f"{code:x}" for code in report.tight_graphs],
        "verdict": report.verdict,
    }
    _emit(payload, args.format)
    return 0 if report.passed else 1


def _cmd_solve(args) -> int:
    eps = Fraction(args.eps)
    sys_ = bounds.build_system(args.k, args.r)
    tables = bounds.recurrences(sys_, eps)
    delta = bounds.solve_delta(args.k, args.g, args.r, eps)
    payload = {
        "k": args.k,
        "r": args.r,
        "g": args.g,
        "eps": _frac(eps),
        "delta": [_frac(d) for d in delta],
        "theta": [_frac(t) for t in tables.theta],
        "phi": [_frac(p) for p in tables.phi],
        "zeta": [_frac(z) for z in tables.zeta],
        "determinant": _frac(tables.determinant),
    }
    _emit(payload, args.format)
    return 0


def _verify_lemma_suite() -> tuple[int, list, list]:
    """Three-term inequality over all 3-graph classes on 4 and 5 vertices,
    on a dyadic x grid plus the bound-relevant x values."""
    xs = {Fraction(j, 8) for j in range(1, 17)}
    for r in range(5, 9):
        for m in (3, 4):
            xs.add(x_ratio(3, m, r))
    checks = 0
    failures = []
    for n in (4, 5):
        for G in enumerate_all(n, 3):
            for m in range(3, n):
                for x in sorted(xs):
                    res = relations.check_three_term_inequality(G, m, x)
                    checks += 1
                    if not res.holds:
                        failures.append(
                            {"graph": f"{G.edges:x}", "n": n, "m": m, "x": _frac(x)}
                        )
    return checks, failures, []


def _verify_claims_suite() -> tuple[int, list, list]:
    """Local-statistics moment identities on all 5-vertex classes plus a
    fixed sample of random 6-vertex hosts."""
    checks = 0
    failures = []
    hosts = list(enumerate_all(5, 3))
    rng = random.Random(271828)
    hosts += [Hypergraph(6, 3, rng.getrandbits(20)) for _ in range(100)]
    for G in hosts:
        for m in (3, 4):
            if m >= G.n:
                continue
            checks += 1
            if not relations.check_square_intermediate(G, m):
                failures.append({"graph": f"{G.edges:x}", "n": G.n, "m": m})
    return checks, failures, []


def _verify_rows_suite() -> tuple[int, list, list]:
    """Relaxed rows and the telescoping identity on fixed 6-vertex hosts."""
    checks = 0
    failures = []
    warnings = []
    rng = random.Random(314159)
    hosts = [
        Hypergraph.complete(6, 3),
        Hypergraph.empty(6, 3),
    ] + [Hypergraph(6, 3, rng.getrandbits(20)) for _ in range(60)]
    r = 5
    for G in hosts:
        rows = relations.check_relaxed_rows(G, r, EpsilonMode.CORRECTED)
        checks += 1
        if any(row > 0 for row in rows):
            failures.append({"graph": f"{G.edges:x}", "kind": "corrected-row-positive"})
        literal_rows = relations.check_relaxed_rows(G, r, EpsilonMode.LITERAL)
        for m, row in zip(range(3, r), literal_rows):
            if row > 0:
                warnings.append(
                    {
                        "graph": f"{G.edges:x}",
                        "m": m,
                        "row": _frac(row),
                        "kind": "literal-row-positive",
                    }
                )
        for g in (3, 4):
            for mode in (EpsilonMode.CORRECTED, EpsilonMode.LITERAL):
                lhs, rhs = relations.telescoped_combination(G, g, r, mode)
                checks += 1
                if lhs != rhs:
                    failures.append(
                        {"graph": f"{G.edges:x}", "g": g, "kind": "telescoping-mismatch"}
                    )
    return checks, failures, warnings


def _cmd_verify(args) -> int:
    suites = {
        "lemma": _verify_lemma_suite,
        "claims": _verify_claims_suite,
        "rows": _verify_rows_suite,
    }
    checks, failures, warnings = suites[args.suite]()
    payload = {
        "suite": args.suite,
        "checks": checks,
        "failures": len(failures),
        "counterexamples": failures[:10],
        "warnings": warnings[:10],
        "verdict": "pass" if not failures else "fail",
    }
    _emit(payload, args.format)
    return 0 if not failures else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="turankit",
        description="Exact clique-density bounds and certificates for uniform hypergraphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p, default="json", choices=("json", "text")):
        p.add_argument("--format", choices=choices, default=default)

    p = sub.add_parser("bound", help="finite-n upper bound report")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=[m.value for m in EpsilonMode], default="literal")
    add_format(p)
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("table", help="CSV of bounds over g for fixed (k, r, n)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=[m.value for m in EpsilonMode], default="literal")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("lower", help="partite lower bound and sandwich values")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    add_format(p)
    p.set_defaults(func=_cmd_lower)

    p = sub.add_parser("enumerate", help="enumerate classes and write an HGR1 cache")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--filter", default=None, help="no-empty-<size>")
    p.add_argument("--cache-dir", default=None)
    add_format(p)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("certificate", help="run the 3/8 certificate check")
    p.add_argument("--cache-dir", default=None)
    add_format(p)
    p.set_defaults(func=_cmd_certificate)

    p = sub.add_parser("verify", help="run a relation-verification suite")
    p.add_argument("--suite", choices=["lemma", "claims", "rows"], required=True)
    add_format(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("solve", help="multiplier vector and recurrence tables")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--eps", default="0", help="rational, e.g. 1/100")
    add_format(p)
    p.set_defaults(func=_cmd_solve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
