"""Lower bounds from a segment-capacity counting model.

The model charges the first segment and each later pair of consecutive
segments with the most grid points they could possibly cover; any covering
path must therefore be long enough for the total charge to reach the grid's
point count.  Given sorted sides n1 <= ... <= nk, the pair charge depends on
the two largest sides s = nk + n(k-1): the parity-matched form uses the exact
integer charge per pair, the relaxed form smooths the even case down to the
odd one, which is the variant quoted in worked examples.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NotApplicableError
from .grid import GridSpec


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class LowerBound:
    """A capacity-model bound with its trace.

    parity is the evenness of the sum of the two largest sides;
    per_segment_capacity is the floor charge per extra segment pair.
    """

    value: int
    parity: str
    per_segment_capacity: int
    relaxed: bool


def _effective(spec: GridSpec) -> tuple[int, ...]:
    eff, _ = spec.normalized()
    if len(eff) < 3:
        raise NotApplicableError(
            f"capacity bounds need at least 3 effective dimensions, got {eff}"
        )
    return eff


def _base_points(dims: tuple[int, ...]) -> tuple[int, int]:
    # Points charged to the first 2*S+1 segments: one long side, the slack of
    # each small side squared, and S full runs of the longest side.
    head = dims[:-2]
    slack = sum(n - 1 for n in head)
    base = dims[-1] + sum((n - 1) ** 2 for n in head) + (dims[-1] - 1) * slack
    return base, slack


def capacity(spec: GridSpec, h: int, relaxed: bool = False) -> int:
    """Point budget the counting model grants h segments.

    Keeps the literal floor charge per pair; for an odd side sum the exact
    variant floors half a point lower than the charge the closed forms
    divide by, so inverting this function can overshoot the bound there.
    """
    dims = _effective(spec)
    base, slack = _base_points(dims)
    if h < 2 * slack + 1:
        raise NotApplicableError(
            f"capacity model needs h >= {2 * slack + 1}, got {h}"
        )
    s = dims[-1] + dims[-2]
    per_pair = (s - 1) // 2 if relaxed else s // 2 - 1
    return base + (h - 2 * slack - 1) * per_pair


def lower_min_h(spec: GridSpec, relaxed: bool = False) -> int:
    """Smallest h whose charged capacity reaches the point count, by scan.

    Independent oracle for the closed forms, so the per-pair charge must be
    the one those forms divide by: (s-2)/2 for an even side sum s in the
    parity-matched variant and (s-1)/2 otherwise.  The relaxed charge is a
    half-integer for even s, so the comparison runs on doubled integers.
    """
    dims = _effective(spec)
    base, slack = _base_points(dims)
    s = dims[-1] + dims[-2]
    doubled_pair = (s - 1) if relaxed else 2 * ((s - 1) // 2)
    target = 2 * math.prod(dims)
    h = 2 * slack + 1
    while 2 * base + (h - 2 * slack - 1) * doubled_pair < target:
        h += 1
    return h


def _closed_form(dims: tuple[int, ...], relaxed: bool) -> LowerBound:
    k = len(dims)
    nk, nk1 = dims[-1], dims[-2]
    head = dims[:-2]
    points = math.prod(dims)
    sq = sum(n * n for n in head)
    lin = sum(head)
    s = nk + nk1
    parity = "even" if s % 2 == 0 else "odd"
    if parity == "even" and not relaxed:
        numerator = 2 * (points - sq + lin - nk + nk1 * (lin - k + 2))
        value = ceil_div(numerator, s - 2) + 1
    else:
        numerator = 2 * (
            points - sq + 2 * lin - nk + nk1 * (lin - k + 2) - k + 2
        )
        value = ceil_div(numerator, s - 1) + 1
    per_pair = (s - 1) // 2 if relaxed else s // 2 - 1
    return LowerBound(
        value=value, parity=parity, per_segment_capacity=per_pair, relaxed=relaxed
    )


def lower_any_dim(spec: GridSpec) -> LowerBound:
    """Parity-matched closed form of the capacity bound."""
    return _closed_form(_effective(spec), relaxed=False)


def lower_relaxed(spec: GridSpec) -> LowerBound:
    """Relaxed closed form: the odd-parity expression applied regardless of
    parity.  Never exceeds :func:`lower_any_dim`."""
    return _closed_form(_effective(spec), relaxed=True)


def lower_3d(n1: int, n2: int, n3: int) -> int:
    """Three-dimensional specialization, written out independently so the
    general closed form has something to be checked against."""
    if not 2 <= n1 <= n2 <= n3:
        raise NotApplicableError(f"need sorted sides >= 2, got ({n1}, {n2}, {n3})")
    if (n3 + n2) % 2 == 0:
        num = 2 * (n1 * n2 * n3 - n1 * n1 + n1 * n2 + n1 - n2 - n3)
        return ceil_div(num, n3 + n2 - 2) + 1
    num = 2 * (n1 * n2 * n3 - n1 * n1 + n1 * n2 + 2 * n1 - n2 - n3 - 1)
    return ceil_div(num, n3 + n2 - 1) + 1


def cubic_lower(n: int) -> int:
    """Capacity bound for an n x n x n grid: n**2 + n + 1."""
    if n < 2:
        raise NotApplicableError(f"need side >= 2, got {n}")
    return n * n + n + 1
