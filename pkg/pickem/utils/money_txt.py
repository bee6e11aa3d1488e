from decimal import ROUND_HALF_UP, Decimal, localcontext
from fractions import Fraction
from typing import Optional

from pickem.params.static import ACCURACY_DIGITS, MONEY_DIGITS, RATE_DIGITS

EXACT_PRECISION = 50
MISSING = "-"


def get_money_txt(value: Fraction, sign: bool = False) -> str:
    txt = _round_half_up(value, MONEY_DIGITS)

    if sign and not txt.startswith("-"):
        return f"+{txt}"

    return txt


def get_accuracy_txt(value: Optional[Fraction]) -> str:
    if value is None:
        return MISSING
    return _round_half_up(value, ACCURACY_DIGITS)


def get_rate_txt(value: Fraction) -> str:
    # trailing zeros dropped, one decimal kept: 0.40 -> 0.4, 0.00 -> 0.0
    txt = _round_half_up(value, RATE_DIGITS).rstrip("0")
    if txt.endswith("."):
        txt += "0"
    return f"({txt})"


def get_count_rate_txt(count: int, rate: Fraction) -> str:
    return f"{count} {get_rate_txt(rate)}"


def _round_half_up(value: Fraction, digits: int) -> str:
    value = Fraction(value)

    with localcontext() as ctx:
        ctx.prec = EXACT_PRECISION
        exact = Decimal(value.numerator) / Decimal(value.denominator)
        rounded = exact.quantize(Decimal(1).scaleb(-digits), rounding=ROUND_HALF_UP)

    if rounded.is_zero():
        rounded = abs(rounded)

    return f"{rounded:.{digits}f}"
