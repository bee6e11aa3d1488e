from typing import Optional

from pydantic import confloat, validator

from pickem.models.base import FrozenModel


class Prediction(FrozenModel):
    match_id: str
    pick: str
    win_probability: Optional[confloat(ge=0.5, le=1)]


class KPParams(FrozenModel):
    pyth_exponent: confloat(gt=0) = 11.5
    home_advantage: confloat(ge=1) = 1.014


class SRSParams(FrozenModel):
    home_bonus: float = 0

    @validator("home_bonus")
    def bonus_non_negative(cls, bonus):  # noqa: N805
        if bonus < 0:
            raise ValueError("home bonus cannot be negative")
        return bonus
