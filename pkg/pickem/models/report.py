from datetime import date
from fractions import Fraction
from typing import Dict, List, Optional

from pydantic import validator

from pickem.models.base import FrozenModel, fraction_field
from pickem.params.static import SeasonPhase


class SeasonSplit(FrozenModel):
    """Post-season starts on `boundary`; no boundary means a single phase."""

    boundary: Optional[date]

    def phase_of(self, day: date) -> SeasonPhase:
        if self.boundary is not None and day >= self.boundary:
            return SeasonPhase.POST
        return SeasonPhase.REGULAR

    @property
    def phases(self) -> List[SeasonPhase]:
        return [SeasonPhase.REGULAR, SeasonPhase.POST, SeasonPhase.COMBINED]

    @property
    def is_split(self) -> bool:
        return self.boundary is not None

    def covers(self, day: date, phase: SeasonPhase) -> bool:
        return phase == SeasonPhase.COMBINED or self.phase_of(day) == phase


class CategorizationRow(FrozenModel):
    predictor: str
    correct_favs: int = 0
    correct_dogs: int = 0
    correct_pickems: int = 0
    pickem_total: int = 0

    @property
    def total_correct(self) -> int:
        return self.correct_favs + self.correct_dogs + self.correct_pickems

    @property
    def pickem_rate(self) -> Fraction:
        if not self.pickem_total:
            return Fraction(0)
        return Fraction(self.correct_pickems, self.pickem_total)


class CategorizationTable(FrozenModel):
    phase: SeasonPhase = SeasonPhase.COMBINED
    rows: List[CategorizationRow] = []

    def __iter__(self):
        return iter(self.rows)

    def row(self, predictor: str) -> CategorizationRow:
        return next(r for r in self.rows if r.predictor == predictor)


class PhaseSummary(FrozenModel):
    phase: SeasonPhase
    n_matches: int = 0
    n_correct: int = 0
    payout: Fraction = Fraction(0)

    _fractions = fraction_field("payout")

    @validator("n_correct")
    def correct_within_total(cls, n_correct, values):  # noqa: N805
        if n_correct > values.get("n_matches", 0):
            raise ValueError("more correct picks than matches")
        return n_correct

    @property
    def accuracy(self) -> Optional[Fraction]:
        if not self.n_matches:
            return None
        return Fraction(self.n_correct, self.n_matches)

    def __add__(self, other: "PhaseSummary") -> "PhaseSummary":
        return PhaseSummary(
            phase=SeasonPhase.COMBINED,
            n_matches=self.n_matches + other.n_matches,
            n_correct=self.n_correct + other.n_correct,
            payout=self.payout + other.payout,
        )


class SeasonSummary(FrozenModel):
    predictor: str
    phases: Dict[SeasonPhase, PhaseSummary]

    def __getitem__(self, phase: SeasonPhase) -> PhaseSummary:
        return self.phases[phase]
