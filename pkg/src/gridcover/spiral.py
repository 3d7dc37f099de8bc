"""Covering-path constructions: plain spirals and the saving variant.

The plain spiral handles any dimension by slicing along the smallest side and
spiralling each slice, alternating orientation so slice exits line up with the
next entry.  The saving variant improves the three-dimensional count by
visiting slices in a lo/hi ping-pong order: the straight connectors between
far-apart slices then run across the not-yet-visited slices and pre-cover one
cell in each, so later slices can drop a growing head and tail of their spiral
walk, eventually shedding whole turns.
"""

from __future__ import annotations

from .errors import ConstructionError, NotApplicableError, UnsupportedSpecError
from .grid import CoveringPath, GridSpec, Point
from .upper import upper_3d
from .verify import verify_path


def spiral_cells(rows: int, cols: int) -> list[tuple[int, int]]:
    """Inward spiral visiting order of a rows x cols matrix, starting at
    (0, 0) and running along the first row."""
    top, bottom, left, right = 0, rows - 1, 0, cols - 1
    cells: list[tuple[int, int]] = []
    while top <= bottom and left <= right:
        for c in range(left, right + 1):
            cells.append((top, c))
        for r in range(top + 1, bottom + 1):
            cells.append((r, right))
        if top < bottom:
            for c in range(right - 1, left - 1, -1):
                cells.append((bottom, c))
        if left < right:
            for r in range(bottom - 1, top, -1):
                cells.append((r, left))
        top, bottom, left, right = top + 1, bottom - 1, left + 1, right - 1
    return cells


def _turning_points(cells: list) -> list:
    """Endpoints plus every cell where the unit-step walk changes direction."""
    if len(cells) <= 1:
        return list(cells)
    verts = [cells[0]]
    for prev, cur, nxt in zip(cells, cells[1:], cells[2:]):
        before = tuple(c - p for p, c in zip(prev, cur))
        after = tuple(n - c for c, n in zip(cur, nxt))
        if before != after:
            verts.append(cur)
    verts.append(cells[-1])
    return verts


def _pure_vertices(dims: tuple[int, ...]) -> list[Point]:
    # dims sorted ascending, every entry >= 2
    if len(dims) == 0:
        return [()]
    if len(dims) == 1:
        return [(0,), (dims[0] - 1,)]
    if len(dims) == 2:
        return _turning_points(spiral_cells(dims[0], dims[1]))
    sub = _pure_vertices(dims[1:])
    verts: list[Point] = []
    for x in range(dims[0]):
        layer = sub if x % 2 == 0 else sub[::-1]
        verts.extend((x,) + v for v in layer)
    return verts


def pure_spiral_count(spec: GridSpec) -> int:
    """Segment count of the plain spiral: product of all effective sides but
    the largest, doubled, minus one (1 for a line, 0 for a point)."""
    eff, _ = spec.normalized()
    if len(eff) == 0:
        return 0
    if len(eff) == 1:
        return 1
    count = 2
    for n in eff[:-1]:
        count *= n
    return count - 1


def pure_spiral(spec: GridSpec) -> CoveringPath:
    """Plain plane-by-plane spiral covering path for any grid."""
    eff, axis_map = spec.normalized()
    raw = _pure_vertices(eff)
    return CoveringPath(spec, tuple(spec.embed(v, axis_map) for v in raw))


def _saving_vertices(n1: int, n2: int, n3: int) -> list[Point]:
    omega = spiral_cells(n2, n3)
    total = len(omega)
    verts: list[Point] = []
    for i in range(n1):
        # Ping-pong slice order: 0, n1-1, 1, n1-2, ...  The connector from the
        # previous slice's exit crosses every slice strictly between the two,
        # covering one cell there; by the time a slice is visited, the cells
        # already covered that way are exactly a head of i//2 and a tail of
        # (i-1)//2 entries of the spiral order (for i >= 1), so the slice walks
        # only the remaining window.  Entry and exit line up automatically.
        x = i // 2 if i % 2 == 0 else n1 - 1 - i // 2
        head = (i - 1) // 2 if i >= 1 else 0
        tail = i // 2
        window = omega[head : total - tail]
        if i % 2 == 1:
            window = window[::-1]
        verts.extend((x,) + cell for cell in _turning_points(window))
    return verts


def saving_spiral_3d(n1: int, n2: int, n3: int) -> CoveringPath:
    """Three-dimensional spiral with the ping-pong slice schedule.

    The segment count always equals the value of :func:`upper_3d`; when that
    bound offers no savings the plain spiral is returned unchanged.  The
    result is verified before being handed back; a count mismatch or an
    invalid path raises ConstructionError rather than returning quietly.
    """
    if not 2 <= n1 <= n2 <= n3:
        raise UnsupportedSpecError(
            f"need sorted sides with smallest >= 2, got ({n1}, {n2}, {n3})"
        )
    bound = upper_3d(n1, n2, n3)
    spec = GridSpec((n1, n2, n3))
    if bound.savings == 1:
        path = pure_spiral(spec)
    else:
        path = CoveringPath(spec, tuple(_saving_vertices(n1, n2, n3)))
    if path.segment_count != bound.value:
        raise ConstructionError(
            f"built {path.segment_count} segments for ({n1}, {n2}, {n3}), "
            f"expected {bound.value}"
        )
    report = verify_path(path)
    if not report.valid:
        raise ConstructionError(
            f"saving spiral for ({n1}, {n2}, {n3}) failed verification: "
            + "; ".join(report.violations[:3])
        )
    return path


def saving_spiral(spec: GridSpec) -> CoveringPath:
    """Saving spiral for any grid whose effective dimension is exactly 3."""
    eff, axis_map = spec.normalized()
    if len(eff) != 3:
        raise NotApplicableError(
            f"saving construction needs exactly 3 effective dimensions, "
            f"got {eff}"
        )
    raw = saving_spiral_3d(*eff)
    return CoveringPath(spec, tuple(spec.embed(v, axis_map) for v in raw.vertices))
