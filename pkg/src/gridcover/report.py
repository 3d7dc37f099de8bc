"""Bounds reports: assembling, rendering and serializing [lower, upper] ranges.

The headline interval quotes the relaxed lower bound, the variant used in
worked examples; the parity-matched bound can be slightly stronger for even
side sums and is listed in the trace, with the best of the two deciding
exactness.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterator

from .errors import UnsupportedSpecError
from .grid import GridSpec
from .lower import LowerBound, lower_any_dim
from .lower import lower_relaxed as relaxed_lower
from .upper import LiteratureBounds, UpperBound, literature_bounds, upper_any_dim

CSV_HEADER = "dims,h_l_eq9,h_l_eq12,h_u,c,jmax,exact"


@dataclass(frozen=True)
class BoundsRange:
    dims: tuple[int, ...]
    effective_dims: tuple[int, ...]
    upper: UpperBound
    lower: LowerBound | None
    lower_relaxed: LowerBound | None
    exact: int | None
    literature: LiteratureBounds | None
    notes: tuple[str, ...]

    @property
    def best_lower(self) -> int | None:
        if self.lower is not None:
            return self.lower.value
        return self.exact

    def headline(self) -> str:
        if self.exact is not None and self.lower is None:
            return f"h = {self.exact}"
        if self.lower_relaxed is not None:
            return f"{self.lower_relaxed.value} <= h <= {self.upper.value}"
        return f"h <= {self.upper.value}"


def bounds_range(spec: GridSpec) -> BoundsRange:
    eff, _ = spec.normalized()
    upper = upper_any_dim(spec)
    notes: list[str] = []
    low: LowerBound | None = None
    low_relaxed: LowerBound | None = None
    exact: int | None = None
    if len(eff) <= 1:
        exact = upper.value
        notes.append("degenerate grid: covered by a single straight stroke or none")
    elif len(eff) == 2:
        notes.append("no lower bound in source method for 2 effective dimensions")
    else:
        low = lower_any_dim(spec)
        low_relaxed = relaxed_lower(spec)
        if low.value == upper.value:
            exact = upper.value
    lit: LiteratureBounds | None = None
    if len(spec.dims) >= 3 and len(set(spec.dims)) == 1:
        lit = literature_bounds(spec)
    return BoundsRange(
        dims=spec.dims,
        effective_dims=eff,
        upper=upper,
        lower=low,
        lower_relaxed=low_relaxed,
        exact=exact,
        literature=lit,
        notes=tuple(notes),
    )


def render_text(br: BoundsRange) -> str:
    dims_s = "x".join(map(str, br.dims))
    eff_s = "x".join(map(str, br.effective_dims)) if br.effective_dims else "point"
    lines = [
        f"grid {dims_s} (effective {eff_s}, {math.prod(br.dims)} points)",
        br.headline(),
    ]
    u = br.upper
    trace = [f"method {u.method}"]
    if u.savings is not None:
        trace.append(f"savings c={u.savings}")
    if u.shell_depth is not None:
        trace.append(f"shell depth jmax={u.shell_depth}")
    if u.branch is not None:
        trace.append(f"branch {u.branch}")
    if u.residual_term is not None:
        trace.append(f"residual {u.residual_term}")
    if u.method == "lift" and u.base3d is not None:
        trace.append(f"3d block t={u.base3d}")
    lines.append(f"upper bound {u.value} ({', '.join(trace)})")
    if br.lower is not None and br.lower_relaxed is not None:
        lines.append(
            f"lower bound {br.lower.value} (parity form, {br.lower.parity} "
            f"side sum, per-pair capacity {br.lower.per_segment_capacity})"
        )
        lines.append(
            f"lower bound {br.lower_relaxed.value} (relaxed form, per-pair "
            f"capacity {br.lower_relaxed.per_segment_capacity})"
        )
        lines.append(f"best lower bound {br.best_lower}")
    if br.exact is not None:
        lines.append(f"exact: h = {br.exact}")
    for note in br.notes:
        lines.append(f"note: {note}")
    if br.literature is not None:
        ex = (
            f", exact {br.literature.exact}"
            if br.literature.exact is not None
            else ""
        )
        lines.append(
            "published values (unconstrained model, not comparable): "
            f"cubic upper {br.literature.cubic_upper}{ex}"
        )
    return "\n".join(lines) + "\n"


def to_payload(br: BoundsRange) -> dict:
    def upper_dict(u: UpperBound) -> dict:
        return {
            "value": u.value,
            "method": u.method,
            "savings": u.savings,
            "shell_depth": u.shell_depth,
            "branch": u.branch,
            "residual_term": u.residual_term,
            "base3d": u.base3d,
        }

    def lower_dict(l: LowerBound | None) -> dict | None:
        if l is None:
            return None
        return {
            "value": l.value,
            "parity": l.parity,
            "per_segment_capacity": l.per_segment_capacity,
            "relaxed": l.relaxed,
        }

    lit = None
    if br.literature is not None:
        lit = {
            "cubic_upper": br.literature.cubic_upper,
            "exact": br.literature.exact,
        }
    return {
        "dims": list(br.dims),
        "effective_dims": list(br.effective_dims),
        "headline": br.headline(),
        "upper": upper_dict(br.upper),
        "lower": lower_dict(br.lower),
        "lower_relaxed": lower_dict(br.lower_relaxed),
        "exact": br.exact,
        "literature": lit,
        "notes": list(br.notes),
    }


def from_payload(payload: dict) -> BoundsRange:
    upper = UpperBound(**payload["upper"])
    low = payload["lower"] and LowerBound(**payload["lower"])
    low_rel = payload["lower_relaxed"] and LowerBound(**payload["lower_relaxed"])
    lit = payload["literature"] and LiteratureBounds(**payload["literature"])
    return BoundsRange(
        dims=tuple(payload["dims"]),
        effective_dims=tuple(payload["effective_dims"]),
        upper=upper,
        lower=low or None,
        lower_relaxed=low_rel or None,
        exact=payload["exact"],
        literature=lit or None,
        notes=tuple(payload["notes"]),
    )


def render_json(br: BoundsRange) -> str:
    return json.dumps(to_payload(br), indent=2) + "\n"


def csv_row(br: BoundsRange, include_lower: bool = True) -> str:
    dims_s = "x".join(map(str, br.dims))
    low9 = low12 = exact = ""
    if include_lower:
        if br.lower is not None:
            low9 = str(br.lower.value)
        if br.lower_relaxed is not None:
            low12 = str(br.lower_relaxed.value)
        if br.exact is not None:
            exact = str(br.exact)
    c = str(br.upper.savings) if br.upper.savings is not None else ""
    jm = str(br.upper.shell_depth) if br.upper.shell_depth is not None else ""
    return ",".join([dims_s, low9, low12, str(br.upper.value), c, jm, exact])


def render_csv(br: BoundsRange) -> str:
    return CSV_HEADER + "\n" + csv_row(br) + "\n"


def sweep_rows(k: int, lo: int, hi: int) -> Iterator[BoundsRange]:
    """Bounds for every sorted k-tuple with sides in [lo, hi], in
    lexicographic order."""
    if not 3 <= k <= 5:
        raise UnsupportedSpecError(f"sweep dimension must be 3..5, got {k}")
    if not 2 <= lo <= hi:
        raise UnsupportedSpecError(f"need 2 <= min <= max, got {lo}..{hi}")
    for dims in combinations_with_replacement(range(lo, hi + 1), k):
        yield bounds_range(GridSpec(dims))


def sweep_table(k: int, lo: int, hi: int) -> str:
    """Complete CSV sweep.  Lower-bound and exactness columns are filled for
    side ranges within 12 (the oracle-checked range) and left blank beyond."""
    include_lower = hi <= 12
    lines = [CSV_HEADER]
    for br in sweep_rows(k, lo, hi):
        lines.append(csv_row(br, include_lower=include_lower))
    return "\n".join(lines) + "\n"
