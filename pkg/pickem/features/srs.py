import logging
from datetime import date
from typing import Dict, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from pickem.exceptions import ConvergenceError
from pickem.features.adjusted import build_schedule
from pickem.features.games import team_rows
from pickem.models.features import RecencyWeights, TeamRepresentation
from pickem.models.match import Game
from pickem.params.static import (
    FIXED_POINT_MAX_ITERATIONS,
    FIXED_POINT_TOLERANCE,
    RepresentationKind,
)

logger = logging.getLogger(__name__)

RATING = "rating"
SOS = "sos"


def srs_weighted(
    games: Sequence[Game],
    as_of: date,
    weights: RecencyWeights,
    tolerance: float = FIXED_POINT_TOLERANCE,
    max_iterations: int = FIXED_POINT_MAX_ITERATIONS,
) -> Dict[str, TeamRepresentation]:
    """Simple rating system with recency-weighted averaging.

    rating = weighted mean margin + weighted mean opponent rating, zero mean
    within every connected part of the schedule. Half steps keep two-sided
    (bipartite) schedules from oscillating.
    """
    schedules = team_rows(games)
    if not schedules:
        return {}

    schedule = build_schedule(
        {t: [opp.team for _, opp in rows] for t, rows in schedules.items()}, weights
    )
    n_teams = len(schedule.teams)

    margins = np.array(
        [
            own.points_for - own.points_against
            for team in schedule.teams
            for own, _ in schedules[team]
        ],
        dtype=float,
    )
    margin = np.bincount(
        schedule.team_idx, weights=schedule.weight * margins, minlength=n_teams
    )

    opponents = csr_matrix(
        (schedule.weight, (schedule.team_idx, schedule.opp_idx)),
        shape=(n_teams, n_teams),
    )
    n_components, labels = connected_components(opponents, directed=False)
    component_size = np.bincount(labels, minlength=n_components)

    def recenter(ratings):
        means = np.bincount(labels, weights=ratings, minlength=n_components)
        return ratings - (means / component_size)[labels]

    ratings = np.zeros(n_teams)
    residual = float("inf")
    for iteration in range(1, max_iterations + 1):
        updated = recenter(0.5 * (ratings + margin + opponents @ ratings))
        residual = float(np.max(np.abs(updated - ratings)))
        ratings = updated

        if residual < tolerance:
            logger.debug(f"SRS converged in {iteration} iterations")
            break
    else:
        raise ConvergenceError("SRS", residual, max_iterations)

    sos = ratings - margin

    return {
        team: TeamRepresentation(
            team=team,
            as_of_date=as_of,
            kind=RepresentationKind.SRS,
            features={RATING: float(ratings[i]), SOS: float(sos[i])},
        )
        for i, team in enumerate(schedule.teams)
    }
