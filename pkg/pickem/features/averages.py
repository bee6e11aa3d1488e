from datetime import date
from typing import Dict, List, Mapping, Sequence

import numpy as np

from pickem.exceptions import EmptyInputError
from pickem.features.games import team_rows
from pickem.features.possessions import normalize_per_possessions
from pickem.models.features import RecencyWeights, TeamRepresentation
from pickem.models.match import Game
from pickem.params.schemas import SportSchema
from pickem.params.static import RepresentationKind

ALLOWED_SUFFIX = "_allowed"


def weighted_average(
    rows: Sequence[Mapping[str, float]], weights: RecencyWeights
) -> Dict[str, float]:
    """Recency-weighted mean per stat; `rows` are oldest first."""
    if not rows:
        raise EmptyInputError("weighted average of no rows")

    names = list(rows[0])
    matrix = np.array([[row[n] for n in names] for row in rows], dtype=float)

    averaged = np.average(matrix, axis=0, weights=weights.weights(len(rows)))

    return {n: float(v) for n, v in zip(names, averaged)}


def game_vectors(
    games: Sequence[Game], schema: SportSchema, target: float
) -> Dict[str, List[Dict[str, float]]]:
    """Per team and game: own stats plus the stats allowed to the opponent."""
    vectors = {}

    for team, rows in team_rows(games).items():
        vectors[team] = []
        for own, opponent in rows:
            vector = normalize_per_possessions(own, schema, target)
            allowed = normalize_per_possessions(opponent, schema, target)
            vector.update({f"{k}{ALLOWED_SUFFIX}": v for k, v in allowed.items()})
            vectors[team].append(vector)

    return vectors


def basic_averages(
    games: Sequence[Game],
    as_of: date,
    schema: SportSchema,
    target: float,
    weights: RecencyWeights,
) -> Dict[str, TeamRepresentation]:
    return {
        team: TeamRepresentation(
            team=team,
            as_of_date=as_of,
            kind=RepresentationKind.BASIC,
            features=weighted_average(vectors, weights),
        )
        for team, vectors in game_vectors(games, schema, target).items()
    }


def opponents_average(
    team: str,
    games: Sequence[Game],
    basic: Mapping[str, TeamRepresentation],
    weights: RecencyWeights,
) -> TeamRepresentation:
    """Recency-weighted mean of the current basic averages of faced opponents."""
    return _opponents_average(team, team_rows(games).get(team), basic, weights)


def opponents_averages(
    games: Sequence[Game],
    basic: Mapping[str, TeamRepresentation],
    weights: RecencyWeights,
) -> Dict[str, TeamRepresentation]:
    schedules = team_rows(games)

    return {
        team: _opponents_average(team, schedules.get(team), basic, weights)
        for team in basic
    }


def _opponents_average(team, schedule, basic, weights) -> TeamRepresentation:
    if not schedule:
        raise EmptyInputError(f"{team} has not played yet")

    opponents = [basic[opponent.team].features for _, opponent in schedule]
    as_of = basic[team].as_of_date

    return TeamRepresentation(
        team=team,
        as_of_date=as_of,
        kind=RepresentationKind.OPP,
        features=weighted_average(opponents, weights),
    )
