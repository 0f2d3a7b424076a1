"""Exception hierarchy for the greyopt toolkit.

Every failure mode raised by the library derives from :class:`GreyOptError`
so callers can catch toolkit errors with a single except clause while still
being able to discriminate the precise condition.
"""

from __future__ import annotations


class GreyOptError(Exception):
    """Base class for all greyopt errors."""


class InvariantViolation(GreyOptError, ValueError):
    """A domain value violates its structural invariant (e.g. lower > upper)."""


class PositionOutOfRange(GreyOptError, ValueError):
    """A whitening position (t, theta, rho, beta, delta) lies outside [0, 1]."""


class LengthMismatch(GreyOptError, ValueError):
    """Paired sequences have different lengths."""


class DimensionMismatch(GreyOptError, ValueError):
    """Matrix/vector dimensions are inconsistent with the target model."""


class DegenerateColumn(GreyOptError, ValueError):
    """Interval normalization has zero spread (all entries one point)."""


class MalformedProblem(GreyOptError, ValueError):
    """An LP instance has inconsistent row lengths or unknown relations."""


class DegenerateAssessment(GreyOptError):
    """Pleased-degree assessment outside its valid domain.

    Raised when the ideal, critical or positioned program is infeasible or
    unbounded, when any of the three optimal values is <= 0, or when the
    program is not maximize-sense.
    """

    advisory = "adjust the whitening positions (theta / rho, beta, delta) or the target floor"


class InfeasibleSample(GreyOptError, ValueError):
    """A user-supplied sample point violates the whitened constraints."""


class EmptyRegion(GreyOptError):
    """The whitened admissible region contains no feasible point."""


class DegenerateObjective(GreyOptError):
    """An objective has zero total deviation across all sample points."""


class AllZeroPreferences(GreyOptError, ValueError):
    """Preference coefficients are all zero; weights cannot be renormalized."""


class UnboundedObjective(GreyOptError):
    """A single-objective whitened program is unbounded."""


class InfeasibleModel(GreyOptError):
    """The whitened constraint system is infeasible."""


class ZeroWidth(GreyOptError, ValueError):
    """Whitening-weight membership requested for a zero-width objective."""


class InfeasibleMaxMin(GreyOptError):
    """The max-min satisfaction program is infeasible even at level 0."""


class IndexOutOfRange(GreyOptError, IndexError):
    """Asset index outside the portfolio."""


class RiskWeightOutOfRange(GreyOptError, ValueError):
    """Risk-weight interval not contained in [0, 1]."""


class EmptyFrontier(GreyOptError):
    """No epsilon subproblem produced a feasible point."""


class ParseError(GreyOptError, ValueError):
    """A model document does not parse; message carries field diagnostics."""


class UnknownHandle(GreyOptError, KeyError):
    """No stored model under the requested handle."""


class SessionClosed(GreyOptError):
    """Step requested on a session that is pleased or abandoned."""


class ParameterError(GreyOptError, ValueError):
    """Invalid parameters for a report or endpoint."""
