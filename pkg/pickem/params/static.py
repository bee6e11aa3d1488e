from enum import Enum, auto
from fractions import Fraction

STAKE = 100

PICKEM_LINE = 110
PICKEM_SENTINEL = (PICKEM_LINE, -PICKEM_LINE)
PICKEM_PAYOUT = Fraction(STAKE * STAKE, PICKEM_LINE)

MIN_LINE = 100

EFFICIENCY_POSSESSIONS = 100

FIXED_POINT_TOLERANCE = 1e-9
FIXED_POINT_MAX_ITERATIONS = 1000

ACCURACY_DIGITS = 4
MONEY_DIGITS = 2
RATE_DIGITS = 2


class AutoName(Enum):
    def _generate_next_value_(name, start, count, last_values):  # noqa: WPS120
        return name.lower()


class BetCategory(AutoName):
    FAV_CORRECT = auto()
    DOG_CORRECT = auto()
    PICKEM_CORRECT = auto()
    INCORRECT = auto()


class Venue(AutoName):
    HOME = auto()
    AWAY = auto()
    NEUTRAL = auto()


class Side(AutoName):
    HOME = auto()
    AWAY = auto()


class RepresentationKind(AutoName):
    BASIC = auto()
    OPP = auto()
    ADJ = auto()
    SRS = auto()
    EFF = auto()


class RecencyScheme(AutoName):
    LINEAR = auto()
    EXPONENTIAL = auto()


class SeasonPhase(AutoName):
    REGULAR = auto()
    POST = auto()
    COMBINED = auto()


class SkipUnit(AutoName):
    DAYS = auto()
    WEEKS = auto()


class PredictorKind(AutoName):
    KP = auto()
    NB = auto()
    SRS = auto()
    HOME = auto()
    EXTERNAL = auto()


class ReportFormat(AutoName):
    TEXT = auto()
    CSV = auto()


class Command(AutoName):
    INGEST = auto()
    BASELINE = auto()
    BACKTEST = auto()
    REPORT = auto()
    ALL = auto()
