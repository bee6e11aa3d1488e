from fractions import Fraction
from typing import Optional

from pydantic import root_validator

from pickem.models.base import FrozenModel, fraction_field
from pickem.params.static import PICKEM_PAYOUT, STAKE, BetCategory


class RawQuote(FrozenModel):
    book_id: str
    fav_team: str
    dog_team: str
    fav_line: int
    dog_line: int
    is_pickem: Optional[bool]


class MoneyLine(FrozenModel):
    fav_team: str
    dog_team: str
    fav_payout: Fraction
    dog_payout: Fraction
    is_pickem: bool = False

    _fractions = fraction_field("fav_payout", "dog_payout")

    @root_validator(skip_on_failure=True)
    def check_payouts(cls, values):  # noqa: N805
        fav_payout, dog_payout = values["fav_payout"], values["dog_payout"]

        if values["fav_team"] == values["dog_team"]:
            raise ValueError("favorite and underdog must differ")

        if fav_payout <= 0 or dog_payout <= 0:
            raise ValueError("pay-outs must be positive")

        if values["is_pickem"]:
            if not fav_payout == dog_payout == PICKEM_PAYOUT:
                raise ValueError("Pick 'em must pay 10000/110 on both sides")
        elif fav_payout > dog_payout:
            raise ValueError("favorite pays more than underdog")

        return values

    @property
    def teams(self):
        return self.fav_team, self.dog_team

    def has_team(self, team: str) -> bool:
        return team in self.teams


class BetOutcome(FrozenModel):
    category: BetCategory
    delta: Fraction

    _fractions = fraction_field("delta")

    @root_validator(skip_on_failure=True)
    def check_delta(cls, values):  # noqa: N805
        category, delta = values["category"], values["delta"]

        if category == BetCategory.INCORRECT and delta != -STAKE:
            raise ValueError("incorrect bet must lose the stake")

        if category == BetCategory.PICKEM_CORRECT and delta != PICKEM_PAYOUT:
            raise ValueError("correct Pick 'em must pay 10000/110")

        return values

    @property
    def is_correct(self) -> bool:
        return self.category != BetCategory.INCORRECT
