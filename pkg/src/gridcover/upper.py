"""Upper bounds on covering-path segment counts, via spiral constructions.

Conventions: grids are given by their sorted side counts n1 <= n2 <= n3 (three
dimensions) and bounds for higher dimensions are lifted from the best
three-dimensional bound of the last three sides.  Everything is exact integer
arithmetic; square roots go through ``math.isqrt``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .errors import NotApplicableError, UnsupportedSpecError
from .grid import GridSpec


@dataclass(frozen=True)
class UpperBound:
    """A constructive bound plus the trace of how it was derived.

    method is one of ``trivial`` (0- or 1-dimensional), ``planar``, ``direct``
    (plain spiral count minus a small constant), ``shell_form`` (shrinking
    shell accounting) or ``lift`` (three-dimensional block times the leading
    sides).  ``savings`` is the reduction below twice the product of the two
    smallest sides; ``residual_term`` is the contribution of the partial
    outermost shell group; ``base3d`` is the three-dimensional value a lifted
    bound builds on.
    """

    value: int
    method: str
    savings: int | None = None
    shell_depth: int | None = None
    branch: str | None = None
    residual_term: int | None = None
    base3d: int | None = None


def _check_sorted3(n1: int, n2: int, n3: int) -> None:
    if not 2 <= n1 <= n2 <= n3:
        raise UnsupportedSpecError(
            f"need sorted sides with smallest >= 2, got ({n1}, {n2}, {n3})"
        )


def _check_shell_domain(n1: int, n2: int, n3: int) -> None:
    _check_sorted3(n1, n2, n3)
    if n1 < 2 * (n3 - n2) + 4:
        raise NotApplicableError(
            f"shell accounting needs n1 >= 2*(n3-n2)+4, got ({n1}, {n2}, {n3})"
        )


def upper_planar(n1: int, n2: int) -> UpperBound:
    """Segment count of the flat spiral: twice the smaller side, minus one."""
    if not 2 <= n1 <= n2:
        raise UnsupportedSpecError(f"need 2 <= n1 <= n2, got ({n1}, {n2})")
    return UpperBound(value=2 * n1 - 1, method="planar")


def shell_depth(n1: int, n2: int, n3: int) -> int:
    """Deepest level of shortened spiral shells that still fits.

    This is the largest j >= 0 with n1 >= 2*(j+1)*(n3-n2+j+2), evaluated in
    closed form with an integer square root.  Must agree with
    :func:`shell_depth_by_scan` everywhere (property-tested).
    """
    _check_shell_domain(n1, n2, n3)
    delta = n3 - n2
    return (math.isqrt((delta + 1) ** 2 + 2 * n1) - delta - 3) // 2


def shell_depth_by_scan(n1: int, n2: int, n3: int) -> int:
    """Same quantity as :func:`shell_depth`, by scanning the inequality."""
    _check_shell_domain(n1, n2, n3)
    delta = n3 - n2
    j = 0
    while n1 >= 2 * (j + 2) * (delta + j + 3):
        j += 1
    return j


def upper_3d_by_summation(n1: int, n2: int, n3: int) -> tuple[int, int]:
    """Term-by-term count of the shell construction.

    Sums the cost of each full shell level plus the residual partial group.
    Returns ``(segment count, residual term)``.  Serves as the independent
    route against which the closed forms of :func:`upper_3d` are checked.
    """
    _check_shell_domain(n1, n2, n3)
    delta = n3 - n2
    jm = shell_depth(n1, n2, n3)
    total = n1 - 1
    for j in range(jm + 1):
        total += (2 * n2 - 2 * j - 1) * (2 * delta + 2 * (j + 1))
        total += 2 * (j + 1) * (2 * n2 - 2 * (j + 1))
    # Residual planes beyond the last full shell level: the first
    # 2*delta+2*(jm+2) of them cost 2*n2-2*jm-3 lines each, the rest one less.
    r = n1 - 2 * (jm + 1) * (delta + jm + 2)
    threshold = 2 * delta + 2 * (jm + 2)
    if r <= threshold:
        residual = r * (2 * n2 - 2 * jm - 3)
    else:
        residual = threshold * (2 * n2 - 2 * jm - 3)
        residual += (r - threshold) * (2 * n2 - 2 * jm - 4)
    return total + residual, residual


def _shell_form(n1: int, n2: int, n3: int, jm: int) -> tuple[int, str]:
    delta = n3 - n2
    if n1 <= 2 * (jm * jm + (delta + 4) * jm + 2 * delta + 4):
        branch = "first"
        cubic = 4 * jm**3 + 35 * jm
        rest = (
            (2 * delta + 7) * jm**2
            + (6 * delta - 2 * n1) * jm
            + 4 * delta
            + 2 * n1 * (n2 - 1)
            + 5
        )
    else:
        branch = "second"
        cubic = 4 * jm**3 + 59 * jm
        rest = (
            (2 * delta + 9) * jm**2
            + (8 * delta - 2 * n1) * jm
            + 8 * delta
            + n1 * (2 * n2 - 3)
            + 13
        )
    if cubic % 3:
        raise ArithmeticError(f"cubic term {cubic} not divisible by 3")
    return cubic // 3 + rest, branch


def upper_3d(n1: int, n2: int, n3: int) -> UpperBound:
    """Best spiral-based upper bound for an n1 x n2 x n3 grid.

    Below the shell threshold the plain plane-by-plane spiral (or its
    one-segment improvement) is the answer; from 2*(n3-n2)+4 on, the shrinking
    shell closed form applies and is cross-checked against the summation
    route on every call.
    """
    _check_sorted3(n1, n2, n3)
    delta = n3 - n2
    if n1 < 2 * delta + 3:
        return UpperBound(value=2 * n1 * n2 - 1, method="direct", savings=1)
    if n1 == 2 * delta + 3:
        return UpperBound(value=2 * n1 * n2 - 2, method="direct", savings=2)
    jm = shell_depth(n1, n2, n3)
    value, branch = _shell_form(n1, n2, n3, jm)
    summed, residual = upper_3d_by_summation(n1, n2, n3)
    if value != summed:
        raise ArithmeticError(
            f"closed form {value} disagrees with summation {summed} "
            f"on ({n1}, {n2}, {n3})"
        )
    return UpperBound(
        value=value,
        method="shell_form",
        savings=2 * n1 * n2 - value,
        shell_depth=jm,
        branch=branch,
        residual_term=residual,
    )


def upper_any_dim(spec: GridSpec) -> UpperBound:
    """Upper bound for any grid, after collapsing size-1 axes and sorting.

    Three or more effective dimensions use the three-dimensional bound t of
    the last three sides, lifted to (t+1) * (product of leading sides) - 1.
    """
    eff, _ = spec.normalized()
    if len(eff) == 0:
        return UpperBound(value=0, method="trivial")
    if len(eff) == 1:
        return UpperBound(value=1, method="trivial")
    if len(eff) == 2:
        return upper_planar(*eff)
    block = upper_3d(*eff[-3:])
    if len(eff) == 3:
        return replace(block, base3d=block.value)
    value = (block.value + 1) * math.prod(eff[:-3]) - 1
    return replace(block, value=value, method="lift", base3d=block.value)


@dataclass(frozen=True)
class LiteratureBounds:
    """Published values for the unconstrained n x ... x n problem.

    These allow leaving the box, revisiting points and touching earlier
    segments, so they are reported separately and never compared with the
    in-box bounds of this package.
    """

    cubic_upper: int
    exact: int | None


def literature_bounds(spec: GridSpec) -> LiteratureBounds:
    dims = spec.dims
    if len(dims) < 3 or len(set(dims)) != 1:
        raise NotApplicableError(
            f"published values cover equal-sided grids of dimension >= 3, "
            f"got {dims}"
        )
    n, k = dims[0], len(dims)
    per_block = (
        3 * n * n // 2
        - (n - 1) // 4
        + (n + 1) // 4
        - (n + 2) // 4
        + n // 4
        + n
        - 1
    )
    cubic_upper = per_block * n ** (k - 3) - 1
    exact = None
    if n == 2:
        exact = 3 * 2 ** (k - 2)
    elif n == 3:
        exact = (3**k - 1) // 2
    return LiteratureBounds(cubic_upper=cubic_upper, exact=exact)
