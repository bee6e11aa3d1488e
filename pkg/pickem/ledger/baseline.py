import logging
from fractions import Fraction
from typing import Sequence

from pickem.models.ledger import BaselineReport
from pickem.models.match import MatchRecord
from pickem.odds import scale_to_stake, settle
from pickem.params.static import PICKEM_PAYOUT, STAKE

logger = logging.getLogger(__name__)


def vegas_baseline(
    matches: Sequence[MatchRecord], stake: Fraction = STAKE
) -> BaselineReport:
    """Always back the book's favorite; Pick 'ems span best/expected/worst.

    Best case wins every Pick 'em, worst case loses every one, expected is
    the midpoint of both (pay-out and accuracy alike).
    """
    pickems = [m for m in matches if m.line.is_pickem]
    favored = [m for m in matches if not m.line.is_pickem]

    payout_without_pickems = sum(
        (settle(m.line, m.line.fav_team, m.winner).delta for m in favored),
        Fraction(0),
    )
    n_correct_favorites = sum(1 for m in favored if m.winner == m.line.fav_team)

    n_matches = len(matches)
    n_pickems = len(pickems)

    best_payout = payout_without_pickems + n_pickems * PICKEM_PAYOUT
    worst_payout = payout_without_pickems - n_pickems * STAKE

    best_acc = _ratio(n_correct_favorites + n_pickems, n_matches)
    worst_acc = _ratio(n_correct_favorites, n_matches)

    logger.debug(
        f"Vegas baseline: {n_matches} matches, {n_pickems} Pick 'ems,"
        f" {n_correct_favorites} favorites won"
    )

    return BaselineReport(
        n_matches=n_matches,
        n_pickems=n_pickems,
        n_correct_favorites=n_correct_favorites,
        acc_without_pickems=_ratio(n_correct_favorites, len(favored)),
        payout_without_pickems=scale_to_stake(payout_without_pickems, stake),
        best_acc=best_acc,
        best_payout=scale_to_stake(best_payout, stake),
        expected_acc=_midpoint(best_acc, worst_acc),
        expected_payout=scale_to_stake((best_payout + worst_payout) / 2, stake),
        worst_acc=worst_acc,
        worst_payout=scale_to_stake(worst_payout, stake),
    )


def _ratio(numerator: int, denominator: int):
    if not denominator:
        return None
    return Fraction(numerator, denominator)


def _midpoint(best, worst):
    if best is None or worst is None:
        return None
    return (best + worst) / 2
