from typing import Dict

from pickem.exceptions import ZeroPossessionsError
from pickem.models.match import GameLogRow
from pickem.params.schemas import POINTS, SportSchema


def normalize_per_possessions(
    row: GameLogRow, schema: SportSchema, target: float
) -> Dict[str, float]:
    """Scale every counting stat (and points) to `target` possessions."""
    possessions = schema.estimate_possessions(row.stats)

    if possessions <= 0:
        raise ZeroPossessionsError(
            f"{row.team} on {row.date}: estimated {possessions} possessions"
        )

    scale = target / possessions

    normalized = {stat: row.stats[stat] * scale for stat in schema.stats}
    normalized[POINTS] = row.points_for * scale

    return normalized
