from types import MappingProxyType
from typing import Dict, List

from pydantic import BaseModel, validator

POINTS = "points"


class SportSchema(BaseModel):
    name: str
    stats: List[str]
    possessions: Dict[str, float]
    normalization_target: float = 65

    class Config:
        allow_mutation = False

    @validator("possessions")
    def possessions_use_known_stats(cls, possessions, values):  # noqa: N805
        unknown = set(possessions) - set(values.get("stats", []))
        if unknown:
            raise ValueError(f"possession formula uses unknown stats {sorted(unknown)}")
        return possessions

    @validator("normalization_target")
    def target_positive(cls, target):  # noqa: N805
        if target <= 0:
            raise ValueError("normalization target must be positive")
        return target

    def estimate_possessions(self, stats: Dict[str, float]) -> float:
        return sum(coef * stats[stat] for stat, coef in self.possessions.items())


BASKETBALL = SportSchema(
    name="basketball",
    stats=[
        "fgm",
        "fga",
        "fg3m",
        "fg3a",
        "ftm",
        "fta",
        "oreb",
        "dreb",
        "ast",
        "stl",
        "blk",
        "to",
        "pf",
    ],
    possessions={"fga": 1, "oreb": -1, "to": 1, "fta": 0.475},
)

FOOTBALL = SportSchema(
    name="football",
    stats=[
        "first_downs",
        "rush_att",
        "rush_yds",
        "pass_cmp",
        "pass_att",
        "pass_yds",
        "sacks",
        "penalties",
        "penalty_yds",
        "turnovers",
        "drives",
    ],
    possessions={"drives": 1},
)

SCHEMAS = MappingProxyType({s.name: s for s in (BASKETBALL, FOOTBALL)})
