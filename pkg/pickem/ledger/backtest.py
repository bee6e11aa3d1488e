import logging
from fractions import Fraction
from itertools import groupby
from typing import List, Mapping, Sequence, Tuple

from pickem.exceptions import MissingPickError
from pickem.models.ledger import CurvePoint, LedgerEntry, WinningsCurve
from pickem.models.match import MatchRecord
from pickem.models.money_line import BetOutcome
from pickem.odds import scale_to_stake, settle
from pickem.params.static import STAKE

logger = logging.getLogger(__name__)


def run_backtest(
    matches: Sequence[MatchRecord],
    picks: Mapping[str, str],
    stake: Fraction = STAKE,
) -> Tuple[List[LedgerEntry], WinningsCurve]:
    """Bet `stake` on every match and tally winnings per day.

    Matches of one day keep their input order; every entry of a day carries
    the day-end cumulative.
    """
    missing = [m.match_id for m in matches if m.match_id not in picks]
    if missing:
        raise MissingPickError(f"no pick for {len(missing)} matches: {missing[:5]}")

    entries = []
    points = []
    cumulative = Fraction(0)

    by_day = sorted(matches, key=lambda m: m.date)

    for day, day_group in groupby(by_day, key=lambda m: m.date):
        day_matches = list(day_group)
        outcomes = [settle(m.line, picks[m.match_id], m.winner) for m in day_matches]

        cumulative += sum(_stake_delta(o, stake) for o in outcomes)

        for match, outcome in zip(day_matches, outcomes):
            entries.append(
                LedgerEntry(
                    match_id=match.match_id,
                    date=day,
                    pick=picks[match.match_id],
                    outcome=outcome,
                    cumulative=cumulative,
                )
            )

        points.append(CurvePoint(date=day, cumulative=cumulative))

    logger.debug(f"Settled {len(entries)} bets over {len(points)} days")

    return entries, WinningsCurve(points=points)


def _stake_delta(outcome: BetOutcome, stake: Fraction) -> Fraction:
    return scale_to_stake(outcome.delta, stake)
