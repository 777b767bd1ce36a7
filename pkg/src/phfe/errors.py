"""Semantic exception hierarchy for the phfe package."""


class PhfeError(Exception):
    """Base class for every error raised by this package."""


class EmptyInputError(PhfeError, ValueError):
    """No membership pairs were supplied, or all of them carry zero probability."""


class OutOfRangeError(PhfeError, ValueError):
    """A membership value or probability lies outside its admissible interval."""


class ProbabilitySumError(PhfeError, ValueError):
    """Probabilities of an element do not sum to one within tolerance."""


class TermOutOfRangeError(PhfeError, ValueError):
    """A linguistic term index lies outside the scale 0..2*tau."""


class DegenerateWeightsError(PhfeError, ArithmeticError):
    """Every cell of the decision matrix has entropy one; weights are undefined."""


class ZeroDenominatorError(PhfeError, ArithmeticError):
    """An alternative has zero distance to both ideal solutions."""


class ParseError(PhfeError, ValueError):
    """Malformed JSON input for an element, element list, or decision matrix."""


class UnknownMeasureError(PhfeError, ValueError):
    """A measure or configuration id was not recognised."""
