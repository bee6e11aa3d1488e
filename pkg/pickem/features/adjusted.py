"""Opponent-adjusted statistics.

Every offensive stat of a game is scaled by the league average of the mirror
stat over the opponent's adjusted mirror stat (what the opponent usually
allows), then recency-averaged per team; defense works the same way against
the opponent's adjusted offense. Offense and defense are updated in turn until
the largest change drops below the tolerance. After each pass both sides are
rescaled so that their league means stay at the raw league means.
"""
import logging
from datetime import date
from typing import Dict, List, NamedTuple, Optional, Sequence

import numpy as np

from pickem.exceptions import ConvergenceError, ZeroLeagueAverageError
from pickem.features.averages import ALLOWED_SUFFIX, game_vectors
from pickem.features.games import team_rows
from pickem.models.features import RecencyWeights, TeamRepresentation
from pickem.models.match import Game
from pickem.params.schemas import POINTS, SportSchema
from pickem.params.static import (
    EFFICIENCY_POSSESSIONS,
    FIXED_POINT_MAX_ITERATIONS,
    FIXED_POINT_TOLERANCE,
    RepresentationKind,
)

logger = logging.getLogger(__name__)

ADJ_OE = "adj_oe"
ADJ_DE = "adj_de"


class MirrorSchedule(NamedTuple):
    """Flattened team-games, one entry per (team, game)."""

    teams: List[str]
    team_idx: np.ndarray
    opp_idx: np.ndarray
    weight: np.ndarray
    games_per_team: np.ndarray


class MirrorSolution(NamedTuple):
    offense: np.ndarray
    defense: np.ndarray
    iterations: int


def build_schedule(
    opponents: Dict[str, List[str]], weights: RecencyWeights
) -> MirrorSchedule:
    teams = sorted(opponents)
    index = {t: i for i, t in enumerate(teams)}

    team_idx, opp_idx, weight = [], [], []
    for team in teams:
        team_weights = weights.weights(len(opponents[team]))
        team_weights = team_weights / team_weights.sum()

        for opp, w in zip(opponents[team], team_weights):
            team_idx.append(index[team])
            opp_idx.append(index[opp])
            weight.append(w)

    return MirrorSchedule(
        teams=teams,
        team_idx=np.array(team_idx, dtype=int),
        opp_idx=np.array(opp_idx, dtype=int),
        weight=np.array(weight, dtype=float),
        games_per_team=np.array([len(opponents[t]) for t in teams], dtype=float),
    )


def solve_mirror(
    schedule: MirrorSchedule,
    offense: np.ndarray,
    defense: np.ndarray,
    name: str = "stat",
    tolerance: float = FIXED_POINT_TOLERANCE,
    max_iterations: int = FIXED_POINT_MAX_ITERATIONS,
) -> MirrorSolution:
    """Fixed point for one stat; `offense`/`defense` are per team-game values."""
    n_teams = len(schedule.teams)

    def team_average(per_game):
        return np.bincount(
            schedule.team_idx, weights=schedule.weight * per_game, minlength=n_teams
        )

    def league_mean(per_team):
        return float(np.average(per_team, weights=schedule.games_per_team))

    adj_off = team_average(offense)
    adj_def = team_average(defense)

    league_off = league_mean(adj_off)
    league_def = league_mean(adj_def)

    if league_off == 0 or league_def == 0:
        raise ZeroLeagueAverageError(f"league average of {name} is zero")

    residual = float("inf")
    for iteration in range(1, max_iterations + 1):
        new_off = team_average(
            offense * _mirror_factor(league_def, adj_def[schedule.opp_idx])
        )
        new_off *= league_off / league_mean(new_off)

        new_def = team_average(
            defense * _mirror_factor(league_off, new_off[schedule.opp_idx])
        )
        new_def *= league_def / league_mean(new_def)

        residual = max(
            float(np.max(np.abs(new_off - adj_off))),
            float(np.max(np.abs(new_def - adj_def))),
        )
        adj_off, adj_def = new_off, new_def

        if residual < tolerance:
            return MirrorSolution(
                offense=adj_off, defense=adj_def, iterations=iteration
            )

    raise ConvergenceError(f"adjustment of {name}", residual, max_iterations)


def _mirror_factor(league: float, opponent: np.ndarray) -> np.ndarray:
    # an opponent with a zero mirror stat leaves the game unadjusted
    safe = np.where(opponent > 0, opponent, league)
    return league / safe


def adjusted_averages(
    games: Sequence[Game],
    as_of: date,
    schema: SportSchema,
    target: float,
    weights: RecencyWeights,
    stats: Optional[Sequence[str]] = None,
    tolerance: float = FIXED_POINT_TOLERANCE,
    max_iterations: int = FIXED_POINT_MAX_ITERATIONS,
) -> Dict[str, TeamRepresentation]:
    vectors = game_vectors(games, schema, target)
    if not vectors:
        return {}

    schedule = build_schedule(_opponents(games), weights)
    stats = list(stats or [*schema.stats, POINTS])

    features = {team: {} for team in schedule.teams}
    for stat in stats:
        offense = _flatten(vectors, schedule, stat)
        defense = _flatten(vectors, schedule, f"{stat}{ALLOWED_SUFFIX}")

        solution = solve_mirror(
            schedule, offense, defense, stat, tolerance, max_iterations
        )
        logger.debug(f"{stat} adjusted in {solution.iterations} iterations")

        for i, team in enumerate(schedule.teams):
            features[team][stat] = float(solution.offense[i])
            features[team][f"{stat}{ALLOWED_SUFFIX}"] = float(solution.defense[i])

    return _representations(features, as_of, RepresentationKind.ADJ)


def adjusted_efficiencies(
    games: Sequence[Game],
    as_of: date,
    schema: SportSchema,
    weights: RecencyWeights,
    tolerance: float = FIXED_POINT_TOLERANCE,
    max_iterations: int = FIXED_POINT_MAX_ITERATIONS,
) -> Dict[str, TeamRepresentation]:
    """Points scored and allowed per 100 possessions, opponent-adjusted."""
    adjusted = adjusted_averages(
        games,
        as_of,
        schema,
        EFFICIENCY_POSSESSIONS,
        weights,
        stats=[POINTS],
        tolerance=tolerance,
        max_iterations=max_iterations,
    )

    return _representations(
        {
            team: {
                ADJ_OE: rep.features[POINTS],
                ADJ_DE: rep.features[f"{POINTS}{ALLOWED_SUFFIX}"],
            }
            for team, rep in adjusted.items()
        },
        as_of,
        RepresentationKind.EFF,
    )


def _opponents(games: Sequence[Game]) -> Dict[str, List[str]]:
    return {
        team: [opponent.team for _, opponent in rows]
        for team, rows in team_rows(games).items()
    }


def _flatten(vectors, schedule: MirrorSchedule, name: str) -> np.ndarray:
    return np.array(
        [vector[name] for team in schedule.teams for vector in vectors[team]],
        dtype=float,
    )


def _representations(features, as_of, kind) -> Dict[str, TeamRepresentation]:
    return {
        team: TeamRepresentation(team=team, as_of_date=as_of, kind=kind, features=f)
        for team, f in features.items()
    }
