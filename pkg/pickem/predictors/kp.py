"""Pythagorean win expectation combined head to head with log5."""
from datetime import date
from typing import List, Sequence

from pickem.features.adjusted import ADJ_DE, ADJ_OE
from pickem.models.features import TeamRepresentation
from pickem.models.match import Fixture
from pickem.models.prediction import KPParams, Prediction
from pickem.params.static import RepresentationKind
from pickem.predictors.base import PredictorBase, pick_by_probability


def pythagorean_wpct(adj_oe: float, adj_de: float, exponent: float) -> float:
    if adj_oe <= 0 or adj_de <= 0:
        raise ValueError(f"efficiencies must be positive, got {adj_oe}, {adj_de}")

    # oe^x / (oe^x + de^x), written so that large exponents cannot overflow
    return 1 / (1 + (adj_de / adj_oe) ** exponent)


def log5(p_a: float, p_b: float) -> float:
    for p in (p_a, p_b):
        if not 0 < p < 1:
            raise ValueError(f"log5 needs probabilities strictly in (0, 1), got {p}")

    a_wins = p_a * (1 - p_b)
    b_wins = p_b * (1 - p_a)

    return a_wins / (a_wins + b_wins)


def kp_predict(
    fixture: Fixture,
    home: TeamRepresentation,
    away: TeamRepresentation,
    params: KPParams,
) -> Prediction:
    home_oe, home_de = home.features[ADJ_OE], home.features[ADJ_DE]
    if not fixture.neutral:
        home_oe *= params.home_advantage
        home_de /= params.home_advantage

    p_home = log5(
        pythagorean_wpct(home_oe, home_de, params.pyth_exponent),
        pythagorean_wpct(
            away.features[ADJ_OE], away.features[ADJ_DE], params.pyth_exponent
        ),
    )

    return pick_by_probability(fixture, p_home)


class KPPredictor(PredictorBase):
    def predict_day(self, day: date, fixtures: Sequence[Fixture]) -> List[Prediction]:
        builder = self._ctx.builder
        params = self._ctx.config.kp

        return [
            kp_predict(
                f,
                builder.representation(f.home_team, RepresentationKind.EFF, day),
                builder.representation(f.away_team, RepresentationKind.EFF, day),
                params,
            )
            for f in fixtures
        ]
