class PickemException(Exception):
    """Global exception"""


class MalformedLineError(PickemException):
    """Money line values outside the accepted range"""


class InconsistentLinesError(PickemException):
    """Books disagree on the favorite or on Pick 'em status"""


class SettlementError(PickemException):
    """Pick or winner is not a participant of the match"""


class MissingPickError(PickemException):
    """A scheduled match has no pick"""


class EmptyInputError(PickemException):
    """Operation requires at least one element"""


class EmptyCurveError(EmptyInputError):
    """Winnings curve has no points"""


class ConvergenceError(PickemException):
    def __init__(self, what: str, residual: float, iterations: int):
        super().__init__(
            f"{what} did not converge after {iterations} iterations"
            f" (residual {residual:.3e})"
        )
        self.residual = residual
        self.iterations = iterations


class ZeroLeagueAverageError(PickemException):
    """League average of a stat is zero, adjustment is undefined"""


class MissingRepresentationError(PickemException):
    """Team has no representation as of the requested date"""


class SchemaMismatchError(PickemException):
    """Feature vector does not match the trained schema"""


class ExternalPicksError(PickemException):
    """Invalid row in an external picks file"""


class MismatchedMatchesError(PickemException):
    """Ledger and lines do not cover the same matches"""


class ConfigError(PickemException):
    """Invalid season configuration"""


class IngestError(PickemException):
    """Input file cannot be read at all"""


class ZeroPossessionsError(PickemException):
    """Possession estimate of a game row is not positive"""


class MissingClassError(PickemException):
    """A class has no training rows"""


class ReportWriteError(PickemException):
    """Report destination cannot be written"""
