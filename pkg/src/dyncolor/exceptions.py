"""Exception hierarchy shared by every dyncolor module."""


class DyncolorError(Exception):
    """Base class for all errors raised by dyncolor."""


class PreconditionError(DyncolorError, ValueError):
    """An operation was called on an input outside its contract."""


class CycleInput(PreconditionError):
    """Degree-two suppression was asked to suppress a cycle."""


class NotApplicable(DyncolorError):
    """A structural reduction does not apply to the given graph."""


class NotColorable(DyncolorError):
    """The graph admits no coloring of the requested kind (e.g. C5 with 4 colors)."""


class InternalError(DyncolorError):
    """An invariant guaranteed by the underlying lemmas failed to hold.

    Carries the reduction trace collected up to the failure, if any.
    """

    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = trace


class TheoremViolation(InternalError):
    """A structure theorem produced no verdict; the input broke its hypotheses."""


class DegeneracyViolation(DyncolorError):
    """A graph reached by the degeneracy recursion has minimum degree above k."""

    def __init__(self, message, witness):
        super().__init__(message)
        self.witness = witness


class SolverTimeout(DyncolorError):
    """The exact solver exceeded its time limit."""


class ParseError(DyncolorError, ValueError):
    """Malformed serialized graph or coloring."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
