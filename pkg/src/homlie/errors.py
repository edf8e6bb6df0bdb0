"""Exception hierarchy shared by the library and the command line."""


class HomLieError(Exception):
    """Base class for every error raised by :mod:`homlie`."""


class DimensionMismatch(HomLieError, ValueError):
    pass


class PreconditionError(HomLieError, ValueError):
    """An input does not satisfy the hypotheses of the requested operation."""


class CapExceeded(PreconditionError):
    """The relation enumeration would exceed the configured size cap."""


class ConstructionError(HomLieError):
    """An internal consistency audit failed.

    This signals a bug in a construction (for instance an induced bracket
    that is not well defined on a quotient), never bad user input.
    """


class ParseError(HomLieError, ValueError):
    pass
