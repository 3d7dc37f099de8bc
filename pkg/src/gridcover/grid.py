"""Grid shapes, segments, and covering paths on integer lattices."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from itertools import product
from typing import Iterator

Point = tuple[int, ...]

_MAX_POINTS = 2**63 - 1


@dataclass(frozen=True)
class GridSpec:
    """An axis-aligned lattice grid with ``dims[i]`` points along axis ``i``."""

    dims: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.dims:
            raise ValueError("grid needs at least one axis")
        for n in self.dims:
            if not isinstance(n, int) or n < 1:
                raise ValueError(f"axis sizes must be positive integers, got {n!r}")
        if math.prod(self.dims) > _MAX_POINTS:
            raise ValueError("grid holds more points than the supported range")

    @property
    def k(self) -> int:
        return len(self.dims)

    @property
    def point_count(self) -> int:
        return math.prod(self.dims)

    def contains(self, point: Point) -> bool:
        return len(point) == self.k and all(
            0 <= x < n for x, n in zip(point, self.dims)
        )

    def points(self) -> Iterator[Point]:
        """All lattice points, last axis varying fastest."""
        return product(*(range(n) for n in self.dims))

    def normalized(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Effective shape and its embedding.

        Axes of size 1 carry no choices and are dropped; the rest are sorted
        ascending.  Returns ``(effective_dims, axis_map)`` where ``axis_map[j]``
        is the original axis holding effective axis ``j``.  A single-point grid
        normalizes to ``((), ())``.
        """
        keep = sorted((n, i) for i, n in enumerate(self.dims) if n > 1)
        return tuple(n for n, _ in keep), tuple(i for _, i in keep)

    def embed(self, point: tuple[int, ...], axis_map: tuple[int, ...]) -> Point:
        """Lift a point of the normalized grid back into this grid."""
        full = [0] * self.k
        for coord, axis in zip(point, axis_map):
            full[axis] = coord
        return tuple(full)


@dataclass(frozen=True)
class Segment:
    """A closed straight segment between two distinct lattice points."""

    a: Point
    b: Point

    def __post_init__(self) -> None:
        if len(self.a) != len(self.b):
            raise ValueError("endpoints differ in arity")
        if self.a == self.b:
            raise ValueError("degenerate segment")

    @property
    def point_count(self) -> int:
        """Number of lattice points on the closed segment."""
        return math.gcd(*(abs(p - q) for p, q in zip(self.a, self.b))) + 1

    def lattice_points(self) -> Iterator[Point]:
        g = self.point_count - 1
        step = tuple((q - p) // g for p, q in zip(self.a, self.b))
        for t in range(g + 1):
            yield tuple(p + t * s for p, s in zip(self.a, step))


@dataclass(frozen=True)
class CoveringPath:
    """A polyline, given by its turn vertices, intended to cover a grid."""

    spec: GridSpec
    vertices: tuple[Point, ...]

    def __post_init__(self) -> None:
        for v in self.vertices:
            if len(v) != self.spec.k:
                raise ValueError(f"vertex {v!r} has the wrong arity")
        for u, v in zip(self.vertices, self.vertices[1:]):
            if u == v:
                raise ValueError(f"repeated vertex {u!r}")

    @property
    def segment_count(self) -> int:
        return max(len(self.vertices) - 1, 0)

    def segments(self) -> list[Segment]:
        return [Segment(u, v) for u, v in zip(self.vertices, self.vertices[1:])]


def path_to_json(path: CoveringPath) -> str:
    payload = {
        "dims": list(path.spec.dims),
        "vertices": [list(v) for v in path.vertices],
    }
    return json.dumps(payload, indent=2) + "\n"


def path_from_json(text: str) -> CoveringPath:
    payload = json.loads(text)
    try:
        dims = tuple(int(n) for n in payload["dims"])
        vertices = tuple(tuple(int(x) for x in v) for v in payload["vertices"])
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed path document: {exc}") from exc
    return CoveringPath(GridSpec(dims), vertices)
