from datetime import date
from typing import List, Sequence

from pickem.features.srs import RATING
from pickem.models.match import Fixture
from pickem.models.prediction import Prediction
from pickem.params.static import RepresentationKind
from pickem.predictors.base import PredictorBase, pick_by_score


def srs_predict(
    fixture: Fixture, home_rating: float, away_rating: float, home_bonus: float = 0
) -> Prediction:
    if not fixture.neutral:
        home_rating += home_bonus

    return pick_by_score(fixture, home_rating, away_rating)


class SRSPredictor(PredictorBase):
    def predict_day(self, day: date, fixtures: Sequence[Fixture]) -> List[Prediction]:
        builder = self._ctx.builder

        def rating(team):
            rep = builder.representation(team, RepresentationKind.SRS, day)
            return rep.features[RATING]

        return [
            srs_predict(
                f,
                rating(f.home_team),
                rating(f.away_team),
                self._ctx.config.srs.home_bonus,
            )
            for f in fixtures
        ]
