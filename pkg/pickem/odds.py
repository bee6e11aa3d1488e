"""Money-line arithmetic.

Pay-outs are exact fractions per 100 staked: a favorite line of F pays
10000/F, an underdog line of D pays D, a Pick 'em pays 10000/110 either way.
"""
from fractions import Fraction
from typing import Sequence

from pickem.exceptions import (
    EmptyInputError,
    InconsistentLinesError,
    MalformedLineError,
    SettlementError,
)
from pickem.models.money_line import BetOutcome, MoneyLine, RawQuote
from pickem.params.static import (
    MIN_LINE,
    PICKEM_PAYOUT,
    PICKEM_SENTINEL,
    STAKE,
    BetCategory,
)


def canonicalize(quote: RawQuote) -> MoneyLine:
    if quote.is_pickem or (quote.fav_line, quote.dog_line) == PICKEM_SENTINEL:
        return MoneyLine(
            fav_team=quote.fav_team,
            dog_team=quote.dog_team,
            fav_payout=PICKEM_PAYOUT,
            dog_payout=PICKEM_PAYOUT,
            is_pickem=True,
        )

    if quote.fav_line < MIN_LINE:
        raise MalformedLineError(
            f"book {quote.book_id}: favorite line {quote.fav_line} is below {MIN_LINE}"
        )

    if quote.dog_line < MIN_LINE:
        raise MalformedLineError(
            f"book {quote.book_id}: underdog line {quote.dog_line} is below {MIN_LINE}"
            " and is not a Pick 'em"
        )

    return MoneyLine(
        fav_team=quote.fav_team,
        dog_team=quote.dog_team,
        fav_payout=Fraction(STAKE * STAKE, quote.fav_line),
        dog_payout=Fraction(quote.dog_line),
    )


def conservative_merge(lines: Sequence[MoneyLine]) -> MoneyLine:
    """Pay no more than any single book would, whichever side is bet."""
    if not lines:
        raise EmptyInputError("no money lines to merge")

    first = lines[0]
    for line in lines[1:]:
        if line.teams != first.teams:
            raise InconsistentLinesError(
                f"books disagree on the favorite: {first.fav_team} vs {line.fav_team}"
            )
        if line.is_pickem != first.is_pickem:
            raise InconsistentLinesError(
                f"books disagree on Pick 'em status for {first.fav_team}"
                f" vs {first.dog_team}"
            )

    return MoneyLine(
        fav_team=first.fav_team,
        dog_team=first.dog_team,
        fav_payout=min(line.fav_payout for line in lines),
        dog_payout=min(line.dog_payout for line in lines),
        is_pickem=first.is_pickem,
    )


def settle(line: MoneyLine, pick: str, winner: str) -> BetOutcome:
    for team, role in ((pick, "pick"), (winner, "winner")):
        if not line.has_team(team):
            raise SettlementError(
                f"{role} {team} is not part of {line.fav_team} vs {line.dog_team}"
            )

    if pick != winner:
        return BetOutcome(category=BetCategory.INCORRECT, delta=-STAKE)

    if line.is_pickem:
        return BetOutcome(category=BetCategory.PICKEM_CORRECT, delta=PICKEM_PAYOUT)

    if pick == line.fav_team:
        return BetOutcome(category=BetCategory.FAV_CORRECT, delta=line.fav_payout)

    return BetOutcome(category=BetCategory.DOG_CORRECT, delta=line.dog_payout)


def pickem_swing() -> Fraction:
    """Difference between winning and losing one Pick 'em bet."""
    return STAKE + PICKEM_PAYOUT


def scale_to_stake(delta: Fraction, stake: Fraction) -> Fraction:
    return delta * Fraction(stake) / STAKE
