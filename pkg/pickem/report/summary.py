from fractions import Fraction
from itertools import groupby
from typing import Sequence

from pickem.models.ledger import CurvePoint, LedgerEntry, WinningsCurve
from pickem.models.report import PhaseSummary, SeasonSplit, SeasonSummary
from pickem.odds import scale_to_stake
from pickem.params.static import STAKE, SeasonPhase


def summarize(
    predictor: str,
    entries: Sequence[LedgerEntry],
    split: SeasonSplit,
    stake: Fraction = STAKE,
) -> SeasonSummary:
    """Accuracy and pay-out per season phase; combined is their sum."""
    phases = {
        phase: _phase_summary(
            phase, [e for e in entries if split.phase_of(e.date) == phase], stake
        )
        for phase in (SeasonPhase.REGULAR, SeasonPhase.POST)
    }
    phases[SeasonPhase.COMBINED] = (
        phases[SeasonPhase.REGULAR] + phases[SeasonPhase.POST]
    )

    return SeasonSummary(predictor=predictor, phases=phases)


def _phase_summary(phase, entries, stake) -> PhaseSummary:
    return PhaseSummary(
        phase=phase,
        n_matches=len(entries),
        n_correct=sum(1 for e in entries if e.outcome.is_correct),
        payout=sum(
            (scale_to_stake(e.outcome.delta, stake) for e in entries), Fraction(0)
        ),
    )


def phase_curve(
    entries: Sequence[LedgerEntry],
    split: SeasonSplit,
    phase: SeasonPhase,
    stake: Fraction = STAKE,
) -> WinningsCurve:
    """Winnings curve of one phase, starting from zero at its first day."""
    phase_entries = sorted(
        (e for e in entries if split.covers(e.date, phase)), key=lambda e: e.date
    )

    points = []
    cumulative = Fraction(0)
    for day, day_entries in groupby(phase_entries, key=lambda e: e.date):
        cumulative += sum(
            (scale_to_stake(e.outcome.delta, stake) for e in day_entries), Fraction(0)
        )
        points.append(CurvePoint(date=day, cumulative=cumulative))

    return WinningsCurve(points=points)
