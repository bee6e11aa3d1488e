from fractions import Fraction

from pydantic import BaseModel, validator


class FrozenModel(BaseModel):
    class Config:
        allow_mutation = False
        arbitrary_types_allowed = True


def fraction_field(*fields):
    return validator(*fields, pre=True, allow_reuse=True)(_to_fraction)


def _to_fraction(cls, value):  # noqa: N805
    if isinstance(value, Fraction):
        return value
    return Fraction(value)
