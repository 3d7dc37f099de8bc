"""Covering-path bounds and constructions for k-dimensional lattice grids.

Computes upper and lower bounds on the minimum number of connected straight
segments that pass through every point of an n1 x ... x nk grid while staying
inside the bounding box, visiting each point once and never touching an
earlier segment; builds spiral paths realizing the upper bounds, verifies
paths with exact integer geometry, and solves tiny grids exhaustively.
"""

from .errors import (
    ConstructionError,
    GridCoverError,
    NotApplicableError,
    OversizedSpecError,
    RenderError,
    SearchBudgetExceeded,
    UnsupportedSpecError,
)
from .grid import (
    CoveringPath,
    GridSpec,
    Point,
    Segment,
    path_from_json,
    path_to_json,
)
from .lower import (
    LowerBound,
    capacity,
    cubic_lower,
    lower_3d,
    lower_any_dim,
    lower_min_h,
    lower_relaxed,
)
from .report import (
    CSV_HEADER,
    BoundsRange,
    bounds_range,
    render_csv,
    render_json,
    render_text,
    sweep_rows,
    sweep_table,
)
from .solver import SolveResult, solve_restricted
from .spiral import (
    pure_spiral,
    pure_spiral_count,
    saving_spiral,
    saving_spiral_3d,
    spiral_cells,
)
from .svg import render_path_svg
from .upper import (
    LiteratureBounds,
    UpperBound,
    literature_bounds,
    shell_depth,
    shell_depth_by_scan,
    upper_3d,
    upper_3d_by_summation,
    upper_any_dim,
    upper_planar,
)
from .verify import (
    VerificationReport,
    collinear,
    path_length,
    segments_intersect,
    verify_path,
)

__version__ = "0.1.0"

__all__ = [
    "BoundsRange",
    "CSV_HEADER",
    "ConstructionError",
    "CoveringPath",
    "GridCoverError",
    "GridSpec",
    "LiteratureBounds",
    "LowerBound",
    "NotApplicableError",
    "OversizedSpecError",
    "Point",
    "RenderError",
    "SearchBudgetExceeded",
    "Segment",
    "SolveResult",
    "UnsupportedSpecError",
    "UpperBound",
    "VerificationReport",
    "bounds_range",
    "capacity",
    "collinear",
    "cubic_lower",
    "literature_bounds",
    "lower_3d",
    "lower_any_dim",
    "lower_min_h",
    "lower_relaxed",
    "path_from_json",
    "path_length",
    "path_to_json",
    "pure_spiral",
    "pure_spiral_count",
    "render_csv",
    "render_json",
    "render_path_svg",
    "render_text",
    "saving_spiral",
    "saving_spiral_3d",
    "segments_intersect",
    "shell_depth",
    "shell_depth_by_scan",
    "solve_restricted",
    "spiral_cells",
    "sweep_rows",
    "sweep_table",
    "upper_3d",
    "upper_3d_by_summation",
    "upper_any_dim",
    "upper_planar",
    "verify_path",
]
