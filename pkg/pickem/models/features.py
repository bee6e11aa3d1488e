from datetime import date
from typing import Dict, List

import numpy as np
from pydantic import root_validator

from pickem.models.base import FrozenModel
from pickem.params.static import RecencyScheme, RepresentationKind


class RecencyWeights(FrozenModel):
    scheme: RecencyScheme = RecencyScheme.EXPONENTIAL
    parameter: float = 0.95

    @root_validator(skip_on_failure=True)
    def check_parameter(cls, values):  # noqa: N805
        scheme, parameter = values["scheme"], values["parameter"]

        if scheme == RecencyScheme.EXPONENTIAL and not 0 < parameter <= 1:
            raise ValueError("exponential decay must be in (0, 1]")

        if scheme == RecencyScheme.LINEAR and parameter < 0:
            raise ValueError("linear step cannot be negative")

        return values

    def weights(self, n_games: int) -> np.ndarray:
        """Oldest first; the most recent game weighs the most."""
        age = np.arange(n_games - 1, -1, -1, dtype=float)

        if self.scheme == RecencyScheme.EXPONENTIAL:
            return np.power(self.parameter, age)

        return 1 + self.parameter * (n_games - 1 - age)


UNIFORM = RecencyWeights(scheme=RecencyScheme.EXPONENTIAL, parameter=1)


class TeamRepresentation(FrozenModel):
    team: str
    as_of_date: date
    kind: RepresentationKind
    features: Dict[str, float]

    def vector(self, names: List[str]) -> List[float]:
        return [self.features[n] for n in names]
