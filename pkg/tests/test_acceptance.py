"""Acceptance checks, one test per criterion.

Each test times itself against its budget and prints a single PASS line;
run with -s (or look at the -v report) to see one line per criterion.
"""

import math
import time
from itertools import combinations_with_replacement

from gridcover.cli import main
from gridcover.grid import GridSpec
from gridcover.lower import lower_3d, lower_any_dim, lower_min_h, lower_relaxed
from gridcover.report import bounds_range, render_text, sweep_table
from gridcover.solver import solve_restricted
from gridcover.spiral import pure_spiral, pure_spiral_count, saving_spiral_3d
from gridcover.upper import (
    literature_bounds,
    shell_depth,
    shell_depth_by_scan,
    upper_3d,
    upper_3d_by_summation,
)
from gridcover.verify import verify_path


def _passed(number: int, detail: str, started: float, budget: float | None) -> None:
    elapsed = time.perf_counter() - started
    if budget is not None:
        assert elapsed < budget, f"criterion {number} overran {budget}s: {elapsed:.1f}s"
    print(f"PASS criterion {number}: {detail} ({elapsed:.2f}s)")


def test_criterion_1_worked_examples():
    started = time.perf_counter()
    br = bounds_range(GridSpec((10, 13, 15)))
    assert br.lower_relaxed.value == 147 and br.upper.value == 253
    assert "147 <= h <= 253" in render_text(br)
    assert bounds_range(GridSpec((10, 21, 174))).headline() == "378 <= h <= 419"
    tall = bounds_range(GridSpec((10, 16, 18, 48)))
    assert tall.headline() == "4257 <= h <= 5759"
    assert tall.upper.base3d == 575
    assert upper_3d(5, 6, 9).value == 59 and upper_3d(5, 6, 9).savings == 1
    assert upper_3d(11, 12, 13).value == 251 and upper_3d(11, 12, 13).savings == 13
    _passed(1, "worked examples reproduce", started, 1.0)


def test_criterion_2_terminal_families():
    started = time.perf_counter()
    expected = {
        (3, 3, 27): 17,
        (3, 3, 28): 17,
        (3, 3, 100): 17,
        (3, 4, 56): 23,
        (3, 4, 57): 23,
        (3, 4, 100): 23,
        (2, 2, 2, 10): 15,
        (2, 2, 2, 11): 15,
        (2, 2, 2, 40): 15,
    }
    for dims, value in expected.items():
        br = bounds_range(GridSpec(dims))
        assert br.exact == value, (dims, br.exact)
        assert br.lower.value == br.upper.value == value
    for dims in [(3, 3, 26), (3, 4, 55), (2, 2, 2, 9)]:
        assert bounds_range(GridSpec(dims)).exact is None, dims
    _passed(2, "terminal families pinch to exact values", started, 1.0)


def test_criterion_3_upper_routes_agree():
    started = time.perf_counter()
    checked = shells = 0
    for dims in combinations_with_replacement(range(2, 41), 3):
        n1, n2, n3 = dims
        bound = upper_3d(n1, n2, n3)
        checked += 1
        delta = n3 - n2
        if n1 < 2 * delta + 3:
            assert bound.savings == 1
            assert bound.value == 2 * n1 * n2 - 1
        elif n1 == 2 * delta + 3:
            assert bound.savings == 2
            assert bound.value == 2 * n1 * n2 - 2
        else:
            shells += 1
            assert bound.savings >= 2
            count, _ = upper_3d_by_summation(n1, n2, n3)
            assert count == bound.value, dims
            assert shell_depth(n1, n2, n3) == shell_depth_by_scan(n1, n2, n3), dims
    assert checked == 10660 and shells > 0
    _passed(3, f"closed form matches summation on {checked} boxes", started, 30.0)


def test_criterion_4_lower_closed_forms_match_scan():
    started = time.perf_counter()
    checked = 0
    for k in (3, 4, 5):
        for dims in combinations_with_replacement(range(2, 13), k):
            spec = GridSpec(dims)
            parity = lower_any_dim(spec)
            relaxed = lower_relaxed(spec)
            assert parity.value == lower_min_h(spec), dims
            assert relaxed.value == lower_min_h(spec, relaxed=True), dims
            assert relaxed.value <= parity.value, dims
            checked += 1
    assert checked == 286 + 1001 + 3003
    _passed(4, f"lower closed forms match scans on {checked} grids", started, 60.0)


def test_criterion_5_independent_lower_routes():
    started = time.perf_counter()
    for dims in combinations_with_replacement(range(2, 13), 3):
        assert lower_3d(*dims) == lower_any_dim(GridSpec(dims)).value, dims
    for n in range(2, 13):
        assert lower_any_dim(GridSpec((n, n, n))).value == n * n + n + 1
    assert literature_bounds(GridSpec((2, 2, 2))).exact == 6
    assert literature_bounds(GridSpec((3, 3, 3))).exact == 13
    _passed(5, "independent lower-bound routes agree", started, 5.0)


def test_criterion_6_pure_spirals_verified():
    started = time.perf_counter()
    checked = 0
    for k in (1, 2, 3, 4):
        for dims in combinations_with_replacement(range(2, 7), k):
            spec = GridSpec(dims)
            path = pure_spiral(spec)
            report = verify_path(path)
            assert report.valid, (dims, report.violations[:3])
            assert report.segment_count == pure_spiral_count(spec), dims
            assert report.euclidean_length == spec.point_count - 1, dims
            checked += 1
    _passed(6, f"{checked} plain spirals verified", started, 60.0)


def test_criterion_7_saving_spirals_match_upper():
    started = time.perf_counter()
    cases = list(combinations_with_replacement(range(2, 9), 3)) + [(11, 12, 13)]
    for dims in cases:
        path = saving_spiral_3d(*dims)
        report = verify_path(path)
        assert report.valid, (dims, report.violations[:3])
        assert report.segment_count == upper_3d(*dims).value, dims
        assert report.euclidean_length == math.prod(dims) - 1, dims
    _passed(7, f"{len(cases)} saving spirals verified at the bound", started, 120.0)


def test_criterion_8_exhaustive_solver_brackets():
    started = time.perf_counter()
    specs = [(n,) for n in range(2, 13)]
    specs += [d for d in combinations_with_replacement(range(2, 7), 2) if math.prod(d) <= 12]
    specs += [d for d in combinations_with_replacement(range(2, 4), 3) if math.prod(d) <= 12]
    frozen = {(2, 2): 3, (3, 3): 5, (2, 2, 2): 7, (2, 2, 3): 7}
    discrepancies = []
    for dims in specs:
        spec = GridSpec(dims)
        result = solve_restricted(spec)
        assert verify_path(result.witness).valid, dims
        br = bounds_range(spec)
        assert result.optimal_count <= br.upper.value, dims
        if dims in frozen:
            assert result.optimal_count == frozen[dims], dims
        if br.best_lower is not None and result.optimal_count < br.best_lower:
            discrepancies.append((dims, result.optimal_count, br.best_lower))
    assert discrepancies == [], f"optimum below lower bound: {discrepancies}"
    _passed(
        8,
        f"{len(specs)} exhaustive optima inside bounds, no discrepancies",
        started,
        600.0,
    )


def test_criterion_9_determinism(tmp_path):
    started = time.perf_counter()
    assert sweep_table(3, 2, 6) == sweep_table(3, 2, 6)
    outputs = []
    for name in ("a.csv", "b.csv"):
        target = tmp_path / name
        assert main(["sweep", "--k", "4", "--min", "2", "--max", "4",
                     "--out", str(target)]) == 0
        outputs.append(target.read_bytes())
    assert outputs[0] == outputs[1]
    paths = []
    for name in ("a.json", "b.json"):
        target = tmp_path / name
        assert main(["spiral", "--dims", "10,13,15", "--mode", "saving",
                     "--out", str(target)]) == 0
        paths.append(target.read_bytes())
    assert paths[0] == paths[1]
    _passed(9, "repeated runs are byte-identical", started, None)
