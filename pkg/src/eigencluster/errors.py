"""Exception types shared across the package."""


class ClusteringError(Exception):
    """Base class for domain errors raised by this package."""


class EmptySpectrumError(ClusteringError):
    """An operation that needs at least one point received none."""


class DuplicatePointError(ClusteringError):
    """Coincident points reached a stage that requires distinct points."""

    def __init__(self, message, index=None, existing=None):
        super().__init__(message)
        self.index = index
        self.existing = existing


class NonRealSpectrumError(ClusteringError):
    """A real-axis-only algorithm received a point with nonzero imaginary part."""


class CollinearInputError(ClusteringError):
    """An in-circle query was made with collinear defining points."""


class LabelDomainError(ClusteringError):
    """A clustering does not cover the point set it was paired with."""
