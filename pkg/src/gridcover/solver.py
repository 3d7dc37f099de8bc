"""Exhaustive minimum-segment search on tiny grids.

The search model restricts turning points to lattice points; segments may run
in any straight direction and stop at any lattice point.  Within that model
the returned count is exactly optimal.  Point sets are bitmasks and all
pairwise segment intersections are precomputed, so the inner loop is table
lookups; iterative deepening on the segment count keeps memory flat.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations, product

from .errors import OversizedSpecError, SearchBudgetExceeded
from .grid import CoveringPath, GridSpec, Point, Segment
from .spiral import pure_spiral_count
from .verify import segments_intersect

_MAX_POINTS = 12


@dataclass(frozen=True)
class SolveResult:
    optimal_count: int
    witness: CoveringPath
    nodes_explored: int
    model: str = "lattice-turn restricted"


def _symmetry_images(dims: tuple[int, ...], points: list[Point]) -> list[list[int]]:
    """Index maps of every box symmetry: axis permutations among equal sides
    composed with per-axis reflections."""
    index = {p: i for i, p in enumerate(points)}
    k = len(dims)
    images = []
    for perm in permutations(range(k)):
        if tuple(dims[a] for a in perm) != dims:
            continue
        for flips in product((False, True), repeat=k):
            img = []
            for p in points:
                q = tuple(p[perm[t]] for t in range(k))
                q = tuple(
                    dims[t] - 1 - q[t] if flips[t] else q[t] for t in range(k)
                )
                img.append(index[q])
            images.append(img)
    return images


def _primitive(a: Point, b: Point) -> Point:
    d = tuple(q - p for p, q in zip(a, b))
    g = math.gcd(*(abs(x) for x in d))
    return tuple(x // g for x in d)


def solve_restricted(spec: GridSpec, max_segments: int | None = None) -> SolveResult:
    """Minimum covering-path segment count over lattice-turn polylines.

    Deterministic: the count is the exhaustively proven optimum and the
    witness is the first solution in a fixed exploration order.  Grids with
    more than 12 points are refused; if ``max_segments`` is given and no
    solution exists within it, ``SearchBudgetExceeded`` is raised.
    """
    if spec.point_count > _MAX_POINTS:
        raise OversizedSpecError(
            f"{spec.point_count} points exceed the search cap of {_MAX_POINTS}"
        )
    if max_segments is not None and max_segments < 1:
        raise ValueError("max_segments must be at least 1")
    eff, axis_map = spec.normalized()
    if spec.point_count == 1:
        witness = CoveringPath(spec, ((0,) * spec.k,))
        return SolveResult(optimal_count=0, witness=witness, nodes_explored=0)

    points: list[Point] = sorted(product(*(range(n) for n in eff)))
    n = len(points)
    full = (1 << n) - 1

    cover = [[0] * n for _ in range(n)]
    prim: list[list[Point | None]] = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            seg = Segment(points[i], points[j])
            mask = 0
            for p in seg.lattice_points():
                mask |= 1 << points.index(p)
            cover[i][j] = mask
            prim[i][j] = _primitive(points[i], points[j])

    # Unordered segment ids and their pairwise-intersection table.
    sid = {}
    pairs = []
    for i in range(n):
        for j in range(i + 1, n):
            sid[(i, j)] = len(pairs)
            pairs.append((i, j))
    m = len(pairs)
    meets = [[False] * m for _ in range(m)]
    for a in range(m):
        i, j = pairs[a]
        for b in range(a, m):
            p, q = pairs[b]
            hit = segments_intersect(points[i], points[j], points[p], points[q])
            meets[a][b] = meets[b][a] = hit

    def seg_id(i: int, j: int) -> int:
        return sid[(i, j)] if i < j else sid[(j, i)]

    images = _symmetry_images(eff, points)
    first_moves = []
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            orbit_min = min((points[g[i]], points[g[j]]) for g in images)
            if (points[i], points[j]) == orbit_min:
                first_moves.append((i, j))
    first_moves.sort(key=lambda ij: (points[ij[0]], points[ij[1]]))

    max_line = max(eff)
    floor = -(-(n - 1) // (max_line - 1))
    cap = max_segments if max_segments is not None else max(
        pure_spiral_count(spec), floor
    )

    nodes = 0
    moves: list[tuple[int, int]] = []

    def extend(covered: int, limit: int) -> bool:
        nonlocal nodes
        nodes += 1
        if covered == full:
            return True
        if limit == 0:
            return False
        remaining = n - covered.bit_count()
        if remaining > limit * (max_line - 1):
            return False
        last_i, last_j = moves[-1]
        last_dir = prim[last_i][last_j]
        neg_last = tuple(-x for x in last_dir)
        here = last_j
        own = 1 << here
        candidates = []
        for f in range(n):
            if f == here:
                continue
            d = prim[here][f]
            if d == last_dir or d == neg_last:
                continue
            mask = cover[here][f]
            if mask & covered != own:
                continue
            new_id = seg_id(here, f)
            row = meets[new_id]
            if any(row[seg_id(i, j)] for i, j in moves[:-1]):
                continue
            candidates.append((-(mask & ~covered).bit_count(), f, mask))
        candidates.sort()
        for _, f, mask in candidates:
            moves.append((here, f))
            if extend(covered | mask, limit - 1):
                return True
            moves.pop()
        return False

    for limit in range(floor, cap + 1):
        for i, j in first_moves:
            moves.append((i, j))
            if extend(cover[i][j], limit - 1):
                verts = [points[i]] + [points[b] for _, b in moves]
                witness = CoveringPath(
                    spec, tuple(spec.embed(v, axis_map) for v in verts)
                )
                return SolveResult(
                    optimal_count=limit, witness=witness, nodes_explored=nodes
                )
            moves.pop()
    raise SearchBudgetExceeded(
        f"no covering path with at most {cap} segments for {spec.dims}"
    )