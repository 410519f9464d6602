"""Error types shared across the package."""


class NetsortError(Exception):
    """Base class for all netsort-specific errors."""


class UnsupportedSize(NetsortError):
    """A sorter or network was requested for a size outside its contract."""


class TooLargeForExhaustive(NetsortError):
    """Exhaustive zero-one verification was requested for n > 24."""


class FallbackToBaseCase(NetsortError):
    """Signal: too few items to draw a splitter sample; sort directly."""


class CorrectnessFailure(NetsortError):
    """A measured sorter produced wrong output.  Carries the seed used."""

    def __init__(self, message, seed=None):
        super().__init__(message)
        self.seed = seed


class ConfigurationError(NetsortError):
    """Invalid run configuration (bad sizes, cache bound not exceeded, ...)."""


class EmptySample(NetsortError):
    """Statistics requested over an empty sample set."""


class IncompleteGrid(NetsortError):
    """A report needs a full sorter x size grid and cells are missing."""
