"""Picks produced elsewhere (for example a neural network or random forest)."""
from datetime import date
from pathlib import Path
from typing import Callable, Dict, List, Mapping, Sequence

import pandas as pd
from pydantic import ValidationError

from pickem.exceptions import ExternalPicksError
from pickem.models.match import Fixture
from pickem.models.prediction import Prediction
from pickem.predictors.base import PredictorBase

COLUMNS = ("match_id", "pick_team")
PROBABILITY = "probability"

# first data row of a CSV with a header
FIRST_ROW = 2


def load_external_picks(
    path: Path,
    fixtures: Mapping[str, Fixture],
    normalize_team: Callable[[str], str] = str,
) -> Dict[str, Prediction]:
    try:
        table = pd.read_csv(path, dtype=str, keep_default_na=False)
    except pd.errors.EmptyDataError:
        return {}
    except OSError as e:
        raise ExternalPicksError(f"{path}: {e}") from e

    table.columns = [c.strip() for c in table.columns]
    missing = [c for c in COLUMNS if c not in table.columns]
    if missing:
        raise ExternalPicksError(f"{path}: missing columns {', '.join(missing)}")

    picks = {}
    for row_n, row in enumerate(table.itertuples(index=False), FIRST_ROW):
        row = row._asdict()
        match_id = row["match_id"].strip()

        def fail(reason):
            raise ExternalPicksError(f"{path}, row {row_n}: {reason}")

        if match_id not in fixtures:
            fail(f"unknown match {match_id}")
        if match_id in picks:
            fail(f"duplicate pick for match {match_id}")

        fixture = fixtures[match_id]
        pick = normalize_team(row["pick_team"].strip())
        if not fixture.has_team(pick):
            fail(
                f"{pick} does not play in {fixture.away_team} at {fixture.home_team}"
            )

        probability = row.get(PROBABILITY, "").strip() or None
        try:
            picks[match_id] = Prediction(
                match_id=match_id, pick=pick, win_probability=probability
            )
        except ValidationError:
            fail(f"probability {probability} is not in [0.5, 1]")

    return picks


class ExternalPredictor(PredictorBase):
    def __init__(self, spec, context):
        super().__init__(spec, context)

        self._picks: Dict[str, Prediction] = {}

    def predict_all(self, fixtures: Sequence[Fixture]) -> Dict[str, Prediction]:
        run_fixtures = {f.match_id: f for f in fixtures}
        picks = load_external_picks(
            self._spec.picks_file,
            {**self._ctx.season_fixtures, **run_fixtures},
            self._ctx.normalize_team,
        )
        self._picks = {k: p for k, p in picks.items() if k in run_fixtures}

        self._log.info(
            f"{self.name}: {len(self._picks)} picks from {self._spec.picks_file},"
            f" {len(picks) - len(self._picks)} outside this run ignored"
        )

        return super().predict_all(fixtures)

    def predict_day(self, day: date, fixtures: Sequence[Fixture]) -> List[Prediction]:
        return [self._picks[f.match_id] for f in fixtures if f.match_id in self._picks]
