import logging
from abc import ABC, abstractmethod
from datetime import date
from itertools import groupby
from types import MappingProxyType
from typing import Callable, Dict, List, Mapping, NamedTuple, Sequence

from pickem.features.builder import RepresentationBuilder
from pickem.models.match import Fixture
from pickem.models.prediction import Prediction
from pickem.models.season_config import PredictorSpec, SeasonConfig


class PredictorContext(NamedTuple):
    builder: RepresentationBuilder
    config: SeasonConfig
    normalize_team: Callable[[str], str] = str
    # whole schedule, for inputs that may mention matches outside the run
    season_fixtures: Mapping[str, Fixture] = MappingProxyType({})


class PredictorBase(ABC):
    def __init__(self, spec: PredictorSpec, context: PredictorContext):
        self._log = logging.getLogger(self.__class__.__name__)

        self.name = spec.name
        self._spec = spec
        self._ctx = context

    @abstractmethod
    def predict_day(self, day: date, fixtures: Sequence[Fixture]) -> List[Prediction]:
        """Predict one betting day using only what was known before `day`."""

    def predict_all(self, fixtures: Sequence[Fixture]) -> Dict[str, Prediction]:
        predictions = {}

        by_day = sorted(fixtures, key=lambda f: f.date)
        for day, day_fixtures in groupby(by_day, key=lambda f: f.date):
            for prediction in self.predict_day(day, list(day_fixtures)):
                predictions[prediction.match_id] = prediction

        self._log.info(f"{self.name}: {len(predictions)} predictions")

        return predictions


def tie_break(fixture: Fixture) -> str:
    """Home team, or the alphabetically first team at a neutral site."""
    if fixture.neutral:
        return min(fixture.teams)
    return fixture.home_team


def pick_by_probability(
    fixture: Fixture, p_home: float, report_probability: bool = True
) -> Prediction:
    if p_home > 0.5:
        pick, probability = fixture.home_team, p_home
    elif p_home < 0.5:
        pick, probability = fixture.away_team, 1 - p_home
    else:
        pick, probability = tie_break(fixture), 0.5

    return Prediction(
        match_id=fixture.match_id,
        pick=pick,
        win_probability=probability if report_probability else None,
    )


def pick_by_score(
    fixture: Fixture, home_score: float, away_score: float
) -> Prediction:
    if home_score > away_score:
        pick = fixture.home_team
    elif away_score > home_score:
        pick = fixture.away_team
    else:
        pick = tie_break(fixture)

    return Prediction(match_id=fixture.match_id, pick=pick)
