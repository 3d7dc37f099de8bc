"""Exact checks for covering paths.

All geometry here is integer arithmetic: no floats are involved in any
accept/reject decision, so verification is exact at every grid size.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .grid import CoveringPath, Point, Segment


def collinear(u: Point, v: Point) -> bool:
    """Whether two direction vectors span at most one dimension."""
    k = len(u)
    return all(
        u[i] * v[j] == u[j] * v[i] for i in range(k) for j in range(i + 1, k)
    )


def segments_intersect(a: Point, b: Point, c: Point, d: Point) -> bool:
    """Whether the closed segments ``ab`` and ``cd`` share any point.

    Endpoints must be distinct within each segment.  Works in any dimension:
    the segments are parametrized as ``a + t*u`` and ``c + s*v`` and the linear
    system is solved over the integers via one nonzero 2x2 minor, with the
    remaining coordinates checked for consistency.
    """
    u = tuple(q - p for p, q in zip(a, b))
    v = tuple(q - p for p, q in zip(c, d))
    w = tuple(q - p for p, q in zip(a, c))
    k = len(u)
    for i in range(k):
        for j in range(i + 1, k):
            den = v[i] * u[j] - u[i] * v[j]
            if den == 0:
                continue
            tn = v[i] * w[j] - w[i] * v[j]
            sn = u[i] * w[j] - w[i] * u[j]
            if any(tn * u[m] - sn * v[m] != den * w[m] for m in range(k)):
                return False  # support lines are skew
            if den < 0:
                den, tn, sn = -den, -tn, -sn
            return 0 <= tn <= den and 0 <= sn <= den
    # Parallel directions: a common support line is required.
    if not collinear(u, w):
        return False
    length_sq = sum(x * x for x in u)
    tc = sum((q - p) * x for p, q, x in zip(a, c, u))
    td = sum((q - p) * x for p, q, x in zip(a, d, u))
    return max(tc, td) >= 0 and min(tc, td) <= length_sq


def path_length(path: CoveringPath) -> int | float:
    """Total euclidean length, exact (int) when every segment length is."""
    squares = [
        sum((q - p) ** 2 for p, q in zip(s.a, s.b)) for s in path.segments()
    ]
    roots = [math.isqrt(x) for x in squares]
    if all(r * r == x for r, x in zip(roots, squares)):
        return sum(roots)
    return float(sum(math.sqrt(x) for x in squares))


@dataclass(frozen=True)
class VerificationReport:
    valid: bool
    segment_count: int
    covered_points: int
    euclidean_length: int | float
    violations: tuple[str, ...]


def _boxes_disjoint(s: Segment, t: Segment) -> bool:
    for i in range(len(s.a)):
        if max(s.a[i], s.b[i]) < min(t.a[i], t.b[i]):
            return True
        if max(t.a[i], t.b[i]) < min(s.a[i], s.b[i]):
            return True
    return False


def verify_path(path: CoveringPath) -> VerificationReport:
    """Check a path against every rule of the constrained covering problem.

    Rules: stay inside the grid's bounding box, cover every grid point, visit
    no point twice, make a proper turn at every vertex, and never touch a
    non-consecutive segment.  Each violation is reported as a string starting
    with one of the tags ``out-of-box``, ``coverage-miss``, ``revisit``,
    ``collinear-consecutive``, ``crossing``.
    """
    spec = path.spec
    violations: list[str] = []
    segs = path.segments()

    # Vertices inside the box suffice: the box is convex, so every point of a
    # segment between in-box vertices is in the box as well.
    for v in path.vertices:
        if not spec.contains(v):
            violations.append(f"out-of-box: vertex {v} is outside the grid")

    coverage: dict[Point, list[int]] = {}
    if segs:
        for idx, seg in enumerate(segs):
            for p in seg.lattice_points():
                coverage.setdefault(p, []).append(idx)
    elif path.vertices:
        coverage[path.vertices[0]] = []

    for p in spec.points():
        if p not in coverage:
            violations.append(f"coverage-miss: {p} is never covered")

    for p, idxs in coverage.items():
        if len(idxs) <= 1:
            continue
        if len(idxs) == 2 and idxs[1] == idxs[0] + 1 and p == path.vertices[idxs[1]]:
            continue  # the shared turn vertex of two consecutive segments
        violations.append(f"revisit: {p} is covered more than once")

    for i in range(len(segs) - 1):
        u = tuple(q - p for p, q in zip(segs[i].a, segs[i].b))
        v = tuple(q - p for p, q in zip(segs[i + 1].a, segs[i + 1].b))
        if collinear(u, v):
            violations.append(
                f"collinear-consecutive: segments {i} and {i + 1} do not turn"
            )

    for i in range(len(segs)):
        for j in range(i + 2, len(segs)):
            if _boxes_disjoint(segs[i], segs[j]):
                continue
            if segments_intersect(segs[i].a, segs[i].b, segs[j].a, segs[j].b):
                violations.append(f"crossing: segments {i} and {j} touch")

    covered = sum(1 for p in coverage if spec.contains(p))
    return VerificationReport(
        valid=not violations,
        segment_count=len(segs),
        covered_points=covered,
        euclidean_length=path_length(path),
        violations=tuple(violations),
    )
