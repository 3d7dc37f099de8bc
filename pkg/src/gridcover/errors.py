"""Exception hierarchy shared across the package."""


class GridCoverError(Exception):
    """Base class for all errors raised by this package."""


class UnsupportedSpecError(GridCoverError):
    """A grid shape outside the domain of the requested computation."""


class NotApplicableError(GridCoverError):
    """A formula or construction that does not apply to the given grid."""


class ConstructionError(GridCoverError):
    """A generated path failed an internal consistency check."""


class OversizedSpecError(GridCoverError):
    """A grid too large for exhaustive search."""


class SearchBudgetExceeded(GridCoverError):
    """Exhaustive search gave up before reaching a conclusion."""


class RenderError(GridCoverError):
    """A drawing request that cannot be honoured."""
