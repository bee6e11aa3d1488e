from datetime import date
from fractions import Fraction
from typing import List, Optional

from pydantic import root_validator

from pickem.models.base import FrozenModel, fraction_field
from pickem.models.money_line import BetOutcome


class LedgerEntry(FrozenModel):
    match_id: str
    date: date
    pick: str
    outcome: BetOutcome
    cumulative: Fraction

    _fractions = fraction_field("cumulative")


class CurvePoint(FrozenModel):
    date: date
    cumulative: Fraction

    _fractions = fraction_field("cumulative")


class WinningsCurve(FrozenModel):
    points: List[CurvePoint] = []

    @root_validator(skip_on_failure=True)
    def check_dates(cls, values):  # noqa: N805
        dates = [p.date for p in values["points"]]
        if any(later <= earlier for earlier, later in zip(dates, dates[1:])):
            raise ValueError("curve dates must be strictly increasing")
        return values

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, idx):
        return self.points[idx]

    @property
    def final(self) -> Fraction:
        if not self.points:
            return Fraction(0)
        return self.points[-1].cumulative

    @property
    def values(self) -> List[Fraction]:
        return [p.cumulative for p in self.points]


class TroughToPeak(FrozenModel):
    trough: CurvePoint
    peak: CurvePoint
    gain: Fraction

    _fractions = fraction_field("gain")


class PeakBeforeEnd(FrozenModel):
    peak: CurvePoint
    forfeited: Fraction

    _fractions = fraction_field("forfeited")


class BacktestResult(FrozenModel):
    predictor: str
    entries: List[LedgerEntry]
    curve: WinningsCurve

    @property
    def n_matches(self) -> int:
        return len(self.entries)

    @property
    def n_correct(self) -> int:
        return sum(1 for e in self.entries if e.outcome.is_correct)

    @property
    def payout(self) -> Fraction:
        return self.curve.final

    @property
    def accuracy(self) -> Optional[Fraction]:
        if not self.entries:
            return None
        return Fraction(self.n_correct, self.n_matches)


class BaselineReport(FrozenModel):
    n_matches: int
    n_pickems: int
    n_correct_favorites: int
    acc_without_pickems: Optional[Fraction]
    payout_without_pickems: Fraction
    best_acc: Optional[Fraction]
    best_payout: Fraction
    expected_acc: Optional[Fraction]
    expected_payout: Fraction
    worst_acc: Optional[Fraction]
    worst_payout: Fraction

    _fractions = fraction_field(
        "payout_without_pickems", "best_payout", "expected_payout", "worst_payout"
    )
