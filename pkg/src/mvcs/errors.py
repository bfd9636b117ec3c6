"""Exception hierarchy for data and validation failures.

Every error raised by the library on bad data derives from :class:`MvcsError`,
so callers (notably the CLI) can distinguish data problems from programming
errors.
"""


class MvcsError(Exception):
    """Base class for all data/validation errors raised by this package."""


class MissingFileError(MvcsError):
    """A manifest, view, or labels file does not exist."""


class MalformedManifestError(MvcsError):
    """The manifest JSON or a referenced file does not match the schema."""


class RowCountMismatchError(MvcsError):
    """Views (or the labels file) disagree on the number of instances."""


class NonFiniteValueError(MvcsError):
    """A view contains NaN or infinity."""


class EmptyDatasetError(MvcsError):
    """An operation received a dataset with no views."""


class BracketFailureError(MvcsError):
    """Bandwidth bracketing hit its doubling cap without reaching unimodality."""


class KTooLargeError(MvcsError):
    """Requested neighbor count k is not smaller than the instance count."""


class ShapeMismatchError(MvcsError):
    """Two neighbor tables do not share the same shape."""


class SingleViewError(MvcsError):
    """An operation that needs at least two views received fewer."""


class MTooLargeError(MvcsError):
    """Invalid probe count for the Hopkins statistic."""


class DerangementImpossibleError(MvcsError):
    """Class labels cannot be reassigned so that every instance changes class."""


class MissingLabelsError(MvcsError):
    """An operation that needs class labels received a dataset without them."""
