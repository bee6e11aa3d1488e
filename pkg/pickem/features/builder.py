import logging
from datetime import date
from typing import Dict, Sequence, Tuple

from pickem.exceptions import MissingRepresentationError
from pickem.features.adjusted import adjusted_averages, adjusted_efficiencies
from pickem.features.averages import basic_averages, opponents_averages
from pickem.features.games import GameIndex
from pickem.features.srs import srs_weighted
from pickem.models.features import TeamRepresentation
from pickem.models.match import Game
from pickem.models.season_config import FeatureConfig
from pickem.params.static import RepresentationKind

Snapshot = Dict[str, TeamRepresentation]


class RepresentationBuilder(object):
    """Team representations as of a date, built only from earlier games."""

    def __init__(self, games: Sequence[Game], config: FeatureConfig):
        self._log = logging.getLogger(self.__class__.__name__)

        self._games = GameIndex(games)
        self._config = config
        self._cache: Dict[Tuple[RepresentationKind, date], Snapshot] = {}

    def games_before(self, as_of: date):
        return self._games.before(as_of)

    def snapshot(self, kind: RepresentationKind, as_of: date) -> Snapshot:
        key = (kind, as_of)
        if key not in self._cache:
            self._cache[key] = self._build(kind, as_of)
        return self._cache[key]

    def representation(
        self, team: str, kind: RepresentationKind, as_of: date
    ) -> TeamRepresentation:
        try:
            return self.snapshot(kind, as_of)[team]
        except KeyError:
            raise MissingRepresentationError(
                f"{team} has no {kind.value} representation before {as_of}"
            )

    def _build(self, kind: RepresentationKind, as_of: date) -> Snapshot:
        games = self.games_before(as_of)
        cfg = self._config

        self._log.debug(f"Building {kind.value} as of {as_of} from {len(games)} games")

        if kind == RepresentationKind.BASIC:
            return basic_averages(games, as_of, cfg.sport, cfg.target, cfg.weights)

        if kind == RepresentationKind.OPP:
            basic = self.snapshot(RepresentationKind.BASIC, as_of)
            return opponents_averages(games, basic, cfg.weights)

        if kind == RepresentationKind.ADJ:
            return adjusted_averages(
                games,
                as_of,
                cfg.sport,
                cfg.target,
                cfg.weights,
                stats=cfg.adjusted_stats or None,
                tolerance=cfg.tolerance,
                max_iterations=cfg.max_iterations,
            )

        if kind == RepresentationKind.SRS:
            return srs_weighted(
                games, as_of, cfg.weights, cfg.tolerance, cfg.max_iterations
            )

        return adjusted_efficiencies(
            games, as_of, cfg.sport, cfg.weights, cfg.tolerance, cfg.max_iterations
        )
