from datetime import date
from math import isfinite
from typing import Dict, Optional

from pydantic import root_validator, validator

from pickem.models.base import FrozenModel
from pickem.models.money_line import MoneyLine
from pickem.params.static import Venue


class Fixture(FrozenModel):
    """What a predictor is allowed to know about a match."""

    match_id: str
    date: date
    home_team: str
    away_team: str
    neutral: bool = False

    @root_validator(skip_on_failure=True)
    def check_teams(cls, values):  # noqa: N805
        if values["home_team"] == values["away_team"]:
            raise ValueError("a team cannot play itself")
        return values

    @property
    def teams(self):
        return self.home_team, self.away_team

    def has_team(self, team: str) -> bool:
        return team in self.teams

    def to_fixture(self) -> "Fixture":
        return Fixture(
            match_id=self.match_id,
            date=self.date,
            home_team=self.home_team,
            away_team=self.away_team,
            neutral=self.neutral,
        )


class ScheduledMatch(Fixture):
    """A played schedule row, before any money line is attached."""

    winner: str
    home_score: Optional[int]
    away_score: Optional[int]

    @root_validator(skip_on_failure=True)
    def check_result(cls, values):  # noqa: N805
        teams = {values["home_team"], values["away_team"]}

        if values["winner"] not in teams:
            raise ValueError(f"winner {values['winner']} did not play this match")

        home_score, away_score = values.get("home_score"), values.get("away_score")
        if home_score is not None and away_score is not None:
            if home_score == away_score:
                raise ValueError("tied matches are not supported")

            score_winner = (
                values["home_team"] if home_score > away_score else values["away_team"]
            )
            if score_winner != values["winner"]:
                raise ValueError("winner does not have the higher score")

        return values

    @property
    def key(self):
        return self.date, self.home_team, self.away_team


class MatchRecord(ScheduledMatch):
    line: MoneyLine

    @root_validator(skip_on_failure=True)
    def check_line(cls, values):  # noqa: N805
        if set(values["line"].teams) != {values["home_team"], values["away_team"]}:
            raise ValueError("money line teams differ from the match teams")
        return values


class GameLogRow(FrozenModel):
    date: date
    team: str
    opponent: str
    venue: Venue
    stats: Dict[str, float]
    points_for: int
    points_against: int

    @validator("stats")
    def stats_non_negative(cls, stats):  # noqa: N805
        not_finite = sorted(name for name, stat in stats.items() if not isfinite(stat))
        if not_finite:
            raise ValueError(f"stats must be finite: {not_finite}")
        negative = sorted(name for name, stat in stats.items() if stat < 0)
        if negative:
            raise ValueError(f"negative stats: {negative}")
        return stats

    @validator("points_for", "points_against")
    def points_non_negative(cls, points):  # noqa: N805
        if points < 0:
            raise ValueError("points cannot be negative")
        return points

    @property
    def key(self):
        return self.date, self.team, self.opponent


class Game(FrozenModel):
    """Both team-rows of one played game, oriented home/away."""

    home: GameLogRow
    away: GameLogRow

    @property
    def date(self) -> date:
        return self.home.date

    @property
    def neutral(self) -> bool:
        return self.home.venue == Venue.NEUTRAL

    @property
    def home_won(self) -> Optional[bool]:
        if self.home.points_for == self.away.points_for:
            return None
        return self.home.points_for > self.away.points_for

    def rows(self):
        return self.home, self.away

    def mirror(self, row: GameLogRow) -> GameLogRow:
        return self.away if row.team == self.home.team else self.home
