"""Command-line front end.

Exit codes: 0 all checks pass, 1 a mathematical mismatch, 2 a usage or
parameter error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .applications import ab_ratio_check, griesmer_bound
from .codes import (
    BudgetExceeded,
    CodeSpec,
    PredictionError,
    WeightDistribution,
    compare,
    enumerate_code,
    predict_cwe,
    predict_wd,
)
from .defining_sets import DefiningSetError, Kind, construct, default_d
from .dual import dual_distance_upto_3, generator_matrix, pless_check
from .gf import FieldError, is_prime
from .srg import (
    GRAPH_BUDGET,
    build_graph,
    build_omega,
    predict_srg_params,
    printed_srg_params,
    verify_srg,
)

OK, MISMATCH, USAGE = 0, 1, 2
GRID = [(3, 2), (3, 3), (5, 2), (5, 3), (7, 2)]


class UsageError(Exception):
    pass


def resolve_kind(kind: str, punctured: bool) -> Kind:
    return Kind(f"punctured-{kind}" if punctured else kind)


def _dump(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _write(out: str | None, doc) -> None:
    if out:
        Path(out).parent.mkdir(parents=True, exist_ok=True)
        Path(out).write_text(_dump(doc), encoding="utf-8")


def build_set(p: int, m: int, d: int | None, kind: Kind, lam: int):
    if not is_prime(p) or p == 2:
        raise UsageError(f"p must be an odd prime, got {p}")
    if d is None:
        d = default_d(kind, p)
    if kind.base is Kind.DLAMBDA and lam % p == 0:
        raise UsageError("dlambda needs --lambda in 1..p-1")
    if kind.base is not Kind.DLAMBDA:
        lam = 0
    if kind in (Kind.PUNCTURED_D0, Kind.PUNCTURED_DSTAR) and d % (p - 1):
        raise UsageError(f"(p-1) does not divide d for scalar puncture: p={p}, d={d}")
    if kind is Kind.PUNCTURED_DLAMBDA and d % 2:
        raise UsageError(f"sign puncture requires even d, got d={d}")
    try:
        return construct(p, m, d, kind, lam)
    except (DefiningSetError, FieldError) as e:
        raise UsageError(str(e)) from e


def analyze_point(p: int, m: int, d: int | None, kind: Kind, lam: int = 0) -> dict:
    """Enumerate one code and check it against every closed form."""
    s = build_set(p, m, d, kind, lam)
    if m < 2:
        raise UsageError("theorems require m >= 2")
    spec = CodeSpec(s)
    try:
        cwe, wd = enumerate_code(spec)
    except BudgetExceeded as e:
        raise UsageError(str(e)) from e
    pred_wd = predict_wd(kind, p, m, s.lam)
    diffs = [compare(wd, pred_wd)]
    pred_cwe = None
    if not kind.punctured:
        pred_cwe = predict_cwe(kind, p, m, s.lam)
        diffs.append(compare(cwe, pred_cwe))
    pless = pless_check(wd, p)
    g = generator_matrix(spec)
    dd = dual_distance_upto_3(g)
    dmin = wd.min_distance
    doc = {
        "point": {"p": p, "m": m, "d": s.d, "kind": kind.value, "lambda": s.lam},
        "parameters": [wd.n, wd.k, dmin],
        "weight_distribution": wd.to_json(),
        "cwe": cwe.to_json(),
        "predicted": {
            "weight_distribution": pred_wd.to_json(),
            "cwe": pred_cwe.to_json() if pred_cwe else None,
        },
        "diff": [x.to_json() for x in diffs],
        "pless": pless.to_json(),
        "projectivity": {"dual_distance": dd if dd < 4 else ">=4", "projective": dd >= 3},
        "ab_ratio": ab_ratio_check(wd, p).to_json(),
        "griesmer": griesmer_bound(wd.n, wd.k, dmin, p).to_json(),
        "summary": f"[{wd.n},{wd.k},{dmin}] {wd.render()}",
    }
    doc["match"] = all(x.ok for x in diffs) and pless.ok
    return doc


def srg_point(p: int, m: int, d: int | None, family: str) -> dict:
    kind = resolve_kind(family, True)
    s = build_set(p, m, d, kind, 0)
    spec = CodeSpec(s)
    source = f"{kind.value} p={p} m={m} d={s.d}"
    n, k = spec.n, spec.k
    w_hi, w_lo = (x for x, _ in sorted(predict_wd(kind, p, m).counts.items(), reverse=True) if x)
    report = predict_srg_params(n, k, w_lo, w_hi, p, source)
    printed = printed_srg_params(family, p, m)
    if printed != report.params:
        report.notes["paper-K-discrepancy" if printed[1] != report.K else "printed-discrepancy"] = {
            "printed": list(printed),
            "computed": list(report.params),
        }
    if p ** k <= GRAPH_BUDGET:
        g = generator_matrix(spec)
        verified = verify_srg(build_graph(build_omega(g), p, k), source)
        report.verified = bool(verified.verified and verified.params == report.params)
        report.notes["enumerated"] = list(verified.params)
    else:
        report.notes["unbuilt"] = f"N = {p ** k} exceeds the graph budget {GRAPH_BUDGET}"
    return report.to_json()


# -- commands --

def cmd_construct(args) -> int:
    kind = resolve_kind(args.kind, args.punctured)
    s = build_set(args.p, args.m, args.d, kind, args.lam)
    _write(args.out, s.to_json())
    print(f"{s.label} size={len(s)}")
    return OK


def cmd_analyze(args) -> int:
    kind = resolve_kind(args.kind, args.punctured)
    doc = analyze_point(args.p, args.m, args.d, kind, args.lam)
    status = OK if doc["match"] else MISMATCH
    if args.expect:
        try:
            expected = WeightDistribution.from_json(json.loads(Path(args.expect).read_text()))
        except (OSError, ValueError, KeyError) as e:
            raise UsageError(f"cannot read expected weights: {e}") from e
        golden = compare(WeightDistribution.from_json(doc["weight_distribution"]), expected)
        doc["golden"] = golden.to_json()
        if not golden.ok:
            status = MISMATCH
    _write(args.out, doc)
    print(doc["summary"], "match" if status == OK else "MISMATCH")
    return status


def cmd_srg(args) -> int:
    doc = srg_point(args.p, args.m, args.d, args.kind)
    _write(args.out, doc)
    print(json.dumps(doc, sort_keys=True))
    return MISMATCH if doc["verified"] is False or not doc["feasible"] else OK


def default_grid() -> list[dict]:
    rows = []
    for p, m in GRID:
        for d in range(1, 2 * (p - 1) + 1):
            for kind in ("d0", "dstar"):
                rows.append({"p": p, "m": m, "d": d, "kind": kind, "lambda": 0, "punctured": False})
                if d % (p - 1) == 0:
                    rows.append({"p": p, "m": m, "d": d, "kind": kind, "lambda": 0, "punctured": True})
            for lam in range(1, p):
                rows.append({"p": p, "m": m, "d": d, "kind": "dlambda", "lambda": lam, "punctured": False})
                if d % 2 == 0:
                    rows.append({"p": p, "m": m, "d": d, "kind": "dlambda", "lambda": lam, "punctured": True})
    return rows


def _point_name(row: dict) -> str:
    tag = "p" if row.get("punctured") else "u"
    return f"p{row['p']}_m{row['m']}_d{row['d']}_{row['kind']}_{tag}_l{row.get('lambda', 0)}"


def _run_row(row: dict) -> tuple[dict, dict | None, str]:
    if row["m"] < 2:
        return row, None, "theorems require m >= 2"
    try:
        kind = resolve_kind(row["kind"], bool(row.get("punctured", False)))
        return row, analyze_point(row["p"], row["m"], row.get("d"), kind, row.get("lambda", 0)), ""
    except (UsageError, PredictionError, ValueError) as e:
        return row, None, str(e)


def run_grid(rows: list[dict], out: Path, jobs: int = 1) -> int:
    out.mkdir(parents=True, exist_ok=True)
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as ex:
            results = list(ex.map(_run_row, rows))
    else:
        results = [_run_row(r) for r in rows]
    status = OK
    with open(out / "summary.csv", "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["p", "m", "d", "kind", "lambda", "n", "k", "weights", "match"])
        for row, doc, reason in results:
            kind = ("punctured-" if row.get("punctured") else "") + row["kind"]
            if doc is None:
                w.writerow([row["p"], row["m"], row.get("d", ""), kind, row.get("lambda", 0), "", "", "", f"skipped: {reason}"])
                continue
            (out / f"{_point_name(row)}.json").write_text(_dump(doc), encoding="utf-8")
            wd = doc["weight_distribution"]
            weights = " ".join(f"{k}:{v}" for k, v in wd["weights"].items())
            w.writerow([row["p"], row["m"], doc["point"]["d"], kind, doc["point"]["lambda"], wd["n"], wd["k"], weights, doc["match"]])
            if not doc["match"]:
                status = MISMATCH
    return status


def cmd_grid(args) -> int:
    if args.config:
        try:
            rows = json.loads(Path(args.config).read_text(encoding="utf-8"))
        except (OSError, ValueError) as e:
            raise UsageError(f"cannot read config: {e}") from e
        if not isinstance(rows, list) or not rows:
            raise UsageError("config must be a non-empty JSON array of parameter objects")
    else:
        rows = default_grid()
    status = run_grid(rows, Path(args.out), args.jobs)
    print(f"{len(rows)} points written to {args.out}", "all match" if status == OK else "MISMATCH")
    return status


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="twoweight", description="Two-weight trace codes from defining sets")
    sub = parser.add_subparsers(dest="command", required=True)

    def code_args(sp, kinds=("d0", "dstar", "dlambda"), with_lambda=True, with_punct=True):
        sp.add_argument("--p", type=int, required=True)
        sp.add_argument("--m", type=int, required=True)
        sp.add_argument("--d", type=int, default=None, help="exponent d (default: smallest valid)")
        sp.add_argument("--kind", choices=kinds, required=True)
        if with_lambda:
            sp.add_argument("--lambda", dest="lam", type=int, default=0)
        if with_punct:
            sp.add_argument("--punctured", action="store_true")
        sp.add_argument("--out", default=None, help="output JSON path")

    sp = sub.add_parser("construct", help="build a defining set")
    code_args(sp)
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("analyze", help="enumerate a code and compare with the closed forms")
    code_args(sp)
    sp.add_argument("--expect", default=None, help="golden weight-distribution JSON")
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("srg", help="strongly regular graph from a punctured code")
    code_args(sp, kinds=("d0", "dstar"), with_lambda=False, with_punct=False)
    sp.set_defaults(func=cmd_srg)

    sp = sub.add_parser("grid", help="analyze every point of a parameter grid")
    sp.add_argument("--config", default=None, help="JSON array of parameter objects (default: built-in grid)")
    sp.add_argument("--out", required=True, help="output directory")
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_grid)
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return USAGE if e.code else OK
    try:
        return args.func(args)
    except (UsageError, PredictionError) as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
