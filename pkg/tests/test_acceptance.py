"""Exit criteria: one PASS/FAIL line per criterion.

Run alone with ``pytest tests/test_acceptance.py``; the lines are repeated in
the terminal summary.
"""

import random
import time
from collections import defaultdict

import pytest

from twoweight.applications import (
    MINIMALITY_BUDGET,
    ab_ratio_check,
    griesmer_bound,
    minimality_scan,
    predicted_ratio,
)
from twoweight.cli import srg_point
from twoweight.codes import CodeSpec, compare, enumerate_code, predict_cwe, predict_wd
from twoweight.counts import CaseData, CountQuery, count_A, count_bruteforce, count_closed_form
from twoweight.defining_sets import Kind, construct
from twoweight.dual import dual_distance_upto_3, generator_matrix, pless_check
from twoweight.gf import (
    build_field,
    gauss_sum_bruteforce,
    gauss_sum_closed_form,
    quadratic_sum,
    quadratic_sum_closed_form,
)
from twoweight.srg import build_graph, build_omega, predict_srg_params, printed_srg_params, verify_srg

GRID = [(3, 2), (3, 3), (5, 2), (5, 3), (7, 2)]
TOL = 1e-9


def grid_points():
    for p, m in GRID:
        for d in range(1, 2 * (p - 1) + 1):
            yield p, m, d, Kind.D0, 0
            yield p, m, d, Kind.DSTAR, 0
            for lam in range(1, p):
                yield p, m, d, Kind.DLAMBDA, lam
                if d % 2 == 0:
                    yield p, m, d, Kind.PUNCTURED_DLAMBDA, lam
            if d % (p - 1) == 0:
                yield p, m, d, Kind.PUNCTURED_D0, 0
                yield p, m, d, Kind.PUNCTURED_DSTAR, 0


@pytest.fixture(scope="module")
def grid():
    start = time.perf_counter()
    rows = []
    for p, m, d, kind, lam in grid_points():
        spec = CodeSpec(construct(p, m, d, kind, lam))
        cwe, wd = enumerate_code(spec)
        ok = compare(wd, predict_wd(kind, p, m, lam)).ok
        if not kind.punctured:
            ok = ok and compare(cwe, predict_cwe(kind, p, m, lam)).ok
        rows.append({"p": p, "m": m, "d": d, "kind": kind, "lam": lam, "spec": spec, "wd": wd, "ok": ok})
    return rows, time.perf_counter() - start


def _run(codes):
    start = time.perf_counter()
    out = [enumerate_code(CodeSpec(construct(3, 2, 2, kind, lam)))[1] for kind, lam in codes]
    return out, time.perf_counter() - start


def test_c1_example_unpunctured(criterion):
    wds, elapsed = _run([(Kind.D0, 0), (Kind.DSTAR, 0), (Kind.DLAMBDA, 1)])
    got = [((wd.n, wd.k, wd.min_distance), wd.counts) for wd in wds]
    want = [
        ((24, 4, 12), {0: 1, 12: 24, 18: 56}),
        ((16, 4, 6), {0: 1, 6: 16, 12: 64}),
        ((24, 4, 12), {0: 1, 12: 24, 18: 56}),
    ]
    criterion("1 example (3,2,2,1) unpunctured", got == want and elapsed < 1.0, f"{elapsed:.3f}s")


def test_c2_example_punctured(criterion):
    wds, elapsed = _run([(Kind.PUNCTURED_D0, 0), (Kind.PUNCTURED_DSTAR, 0), (Kind.PUNCTURED_DLAMBDA, 1)])
    got = [((wd.n, wd.k, wd.min_distance), wd.counts) for wd in wds]
    want = [
        ((12, 4, 6), {0: 1, 6: 24, 9: 56}),
        ((8, 4, 3), {0: 1, 3: 16, 6: 64}),
        ((12, 4, 6), {0: 1, 6: 24, 9: 56}),
    ]
    slack = tuple(griesmer_bound(wd.n, wd.k, wd.min_distance, 3).slack for wd in wds)
    ok = got == want and slack == (2, 2, 2) and elapsed < 1.0
    criterion("2 example (3,2,2,1) punctured + Griesmer slack", ok, f"slack={slack} {elapsed:.3f}s")


def test_c3_closed_form_grid(grid, criterion):
    rows, elapsed = grid
    bad = [(r["p"], r["m"], r["d"], r["kind"].value, r["lam"]) for r in rows if not r["ok"]]
    criterion("3 closed-form grid (weights + CWE)", not bad and elapsed < 300, f"{len(rows)} codes, {elapsed:.1f}s, bad={bad[:3]}")


def test_c4_counting_formulas(criterion):
    mismatches = 0
    checked = 0
    plan = [(3, 2, None), (5, 2, None), (3, 3, 200)]
    for p, m, sample in plan:
        f = build_field(p, m)
        pairs = [(a, b) for a in range(f.q) for b in range(f.q) if (a, b) != (0, 0)]
        if sample:
            pairs = random.Random(1234).sample(pairs, sample)
        d = p - 1
        for a, b in pairs:
            case = CaseData.of(f, a, b)
            for lam in range(p):
                for lam1 in range(p):
                    for star in ((False, True) if lam == 0 else (False,)):
                        checked += 1
                        brute = count_bruteforce(f, d, CountQuery(lam, lam1, a, b, star))
                        mismatches += brute != count_closed_form(p, m, lam, lam1, case, star)
        for t in range(p):
            scan, closed = count_A(f, t)
            checked += 1
            mismatches += scan != closed
    criterion("4 counting formulas", mismatches == 0, f"{checked} counts")


def test_c5_gauss_sums(criterion):
    worst = 0.0
    for p in (3, 5, 7):
        for m in (1, 2, 3):
            worst = max(worst, abs(gauss_sum_bruteforce(build_field(p, m)) - gauss_sum_closed_form(p, m)))
    worst_q = 0.0
    for p, m in [(3, 1), (5, 1), (7, 1), (11, 1), (13, 1), (17, 1), (19, 1), (23, 1), (3, 2), (5, 2), (3, 3)]:
        f = build_field(p, m)
        for a2 in range(1, f.q):
            for a1 in range(f.q):
                for a0 in range(f.q):
                    diff = abs(quadratic_sum(f, a2, a1, a0) - quadratic_sum_closed_form(f, a2, a1, a0))
                    worst_q = max(worst_q, diff)
    ok = worst < TOL and worst_q < TOL
    criterion("5 Gauss sums and quadratic sums", ok, f"max err {worst:.1e} / {worst_q:.1e}")


def test_c6_projectivity_and_pless(grid, criterion):
    rows, _ = grid
    dd = {}
    for r in rows:
        if r["kind"] in (Kind.PUNCTURED_D0, Kind.PUNCTURED_DSTAR):
            dd[(r["p"], r["m"], r["d"], r["kind"].value)] = dual_distance_upto_3(generator_matrix(r["spec"]))
    pless_bad = [r for r in rows if not pless_check(r["wd"], r["p"]).ok]
    ok = set(dd.values()) == {3} and not pless_bad
    criterion("6 projectivity + Pless moments", ok, f"{len(dd)} punctured codes, {len(rows)} distributions")


def test_c7_srg(criterion):
    start = time.perf_counter()
    verified = {}
    notes_ok = True
    for kind, family in [(Kind.PUNCTURED_D0, "d0"), (Kind.PUNCTURED_DSTAR, "dstar")]:
        spec = CodeSpec(construct(3, 2, 2, kind))
        rep = verify_srg(build_graph(build_omega(generator_matrix(spec)), 3, 4))
        verified[family] = rep.params if rep.verified else None
        wd = predict_wd(kind, 3, 2)
        pred = predict_srg_params(wd.n, wd.k, *wd.nonzero_weights(), 3)
        printed = printed_srg_params(family, 3, 2)
        if family == "dstar":
            notes_ok &= printed[1] != pred.K and pred.params == rep.params
    elapsed = time.perf_counter() - start

    feasible = True
    for p, m in GRID:
        for kind in (Kind.PUNCTURED_D0, Kind.PUNCTURED_DSTAR):
            wd = predict_wd(kind, p, m)
            feasible &= predict_srg_params(wd.n, wd.k, *wd.nonzero_weights(), p).feasible()

    note = "paper-K-discrepancy" in srg_point(3, 2, 2, "dstar")["notes"]
    ok = (
        verified == {"d0": (81, 24, 9, 6), "dstar": (81, 16, 7, 2)}
        and feasible
        and notes_ok
        and note
        and elapsed < 5
    )
    criterion("7 strongly regular graphs", ok, f"{verified} {elapsed:.2f}s")


def test_c8_minimality(grid, criterion):
    rows, _ = grid
    ratio_bad, scanned, minimal_bad = [], 0, []
    seen = set()
    for r in rows:
        p, m, kind = r["p"], r["m"], r["kind"]
        rep = ab_ratio_check(r["wd"], p)
        if m >= 3 and rep.ratio != predicted_ratio(kind, p, m):
            ratio_bad.append((p, m, kind.value))
        key = (p, m, kind, r["lam"])
        if rep.passed and p ** (2 * m) <= MINIMALITY_BUDGET and key not in seen:
            seen.add(key)
            scanned += 1
            if not minimality_scan(r["spec"]).all_minimal:
                minimal_bad.append(key)
    mandatory = {(3, 3, k) for k in (Kind.D0, Kind.DSTAR, Kind.DLAMBDA)}
    covered = {(p, m, k) for p, m, k, _ in seen}
    ok = not ratio_bad and not minimal_bad and mandatory <= covered
    criterion("8 minimal codewords", ok, f"{scanned} scans, ratio_bad={ratio_bad}, minimal_bad={minimal_bad}")


def test_c9_d_invariance(grid, criterion):
    rows, _ = grid
    by_key = defaultdict(set)
    for r in rows:
        by_key[(r["p"], r["m"], r["kind"], r["lam"])].add(tuple(sorted(r["wd"].counts.items())))
    varying = [k for k, v in by_key.items() if len(v) != 1]
    criterion("9 d-invariance", not varying, f"{len(by_key)} (p,m,kind,lambda) groups")
