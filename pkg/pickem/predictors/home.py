from datetime import date
from typing import List, Sequence

from pickem.models.match import Fixture
from pickem.models.prediction import Prediction
from pickem.predictors.base import PredictorBase, tie_break


class HomePredictor(PredictorBase):
    """Home-court rule of thumb."""

    def predict_day(self, day: date, fixtures: Sequence[Fixture]) -> List[Prediction]:
        return [Prediction(match_id=f.match_id, pick=tie_break(f)) for f in fixtures]
