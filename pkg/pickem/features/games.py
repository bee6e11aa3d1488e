import logging
from bisect import bisect_left
from collections import defaultdict
from datetime import date
from typing import Dict, List, NamedTuple, Sequence, Tuple

from pickem.models.match import Game, GameLogRow
from pickem.params.static import Venue

logger = logging.getLogger(__name__)

_MIRROR_VENUE = {
    Venue.HOME: Venue.AWAY,
    Venue.AWAY: Venue.HOME,
    Venue.NEUTRAL: Venue.NEUTRAL,
}


class PairingResult(NamedTuple):
    games: List[Game]
    rejected: List[Tuple[GameLogRow, str]]


def pair_games(rows: Sequence[GameLogRow]) -> PairingResult:
    """Join the two team-rows of every game.

    At neutral sites the alphabetically first team is taken as "home".
    """
    by_key = {}
    duplicates = []
    for row in rows:
        if row.key in by_key:
            duplicates.append((row, "duplicate team-game row"))
            continue
        by_key[row.key] = row

    games = []
    rejected = list(duplicates)
    seen = set()

    for key, row in by_key.items():
        if key in seen:
            continue

        mirror = by_key.get((row.date, row.opponent, row.team))
        if mirror is None:
            rejected.append((row, "opponent row missing"))
            continue

        seen.update({key, mirror.key})

        problem = _pairing_problem(row, mirror)
        if problem:
            rejected.extend([(row, problem), (mirror, problem)])
            continue

        games.append(_orient(row, mirror))

    if rejected:
        logger.warning(f"Rejected {len(rejected)} game log rows while pairing games")

    games.sort(key=lambda g: (g.date, g.home.team))

    return PairingResult(games=games, rejected=rejected)


def _pairing_problem(row: GameLogRow, mirror: GameLogRow):
    if _MIRROR_VENUE[row.venue] != mirror.venue:
        return f"venues {row.venue.value}/{mirror.venue.value} do not mirror"

    if (row.points_for, row.points_against) != (
        mirror.points_against,
        mirror.points_for,
    ):
        return "points do not mirror"

    return None


def _orient(row: GameLogRow, mirror: GameLogRow) -> Game:
    if row.venue == Venue.HOME:
        return Game(home=row, away=mirror)

    if row.venue == Venue.AWAY:
        return Game(home=mirror, away=row)

    home, away = sorted((row, mirror), key=lambda r: r.team)
    return Game(home=home, away=away)


class GameIndex(object):
    """Chronological games with fast "strictly before" slicing."""

    def __init__(self, games: Sequence[Game]):
        self._games = sorted(games, key=lambda g: (g.date, g.home.team))
        self._dates = [g.date for g in self._games]

    def __len__(self):
        return len(self._games)

    def __iter__(self):
        return iter(self._games)

    def before(self, as_of: date) -> List[Game]:
        return self._games[: bisect_left(self._dates, as_of)]


def team_rows(games: Sequence[Game]) -> Dict[str, List[Tuple[GameLogRow, GameLogRow]]]:
    """Per team, chronological (own row, opponent row) pairs."""
    schedule = defaultdict(list)

    for game in games:
        for row in game.rows():
            schedule[row.team].append((row, game.mirror(row)))

    return dict(schedule)
