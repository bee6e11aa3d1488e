from typing import Mapping, Sequence

from pickem.exceptions import MismatchedMatchesError
from pickem.models.ledger import BacktestResult, LedgerEntry
from pickem.models.match import MatchRecord
from pickem.models.money_line import MoneyLine
from pickem.models.report import CategorizationRow, CategorizationTable, SeasonSplit
from pickem.params.static import BetCategory, SeasonPhase

CATEGORY_FIELDS = {
    BetCategory.FAV_CORRECT: "correct_favs",
    BetCategory.DOG_CORRECT: "correct_dogs",
    BetCategory.PICKEM_CORRECT: "correct_pickems",
}


def categorize(
    predictor: str, entries: Sequence[LedgerEntry], lines: Mapping[str, MoneyLine]
) -> CategorizationRow:
    """Correct picks split into favorites, underdogs and Pick 'ems."""
    entry_ids = {e.match_id for e in entries}
    if entry_ids != set(lines) or len(entry_ids) != len(entries):
        raise MismatchedMatchesError(
            f"{predictor}: {len(entries)} ledger entries vs {len(lines)} lines,"
            f" {len(entry_ids ^ set(lines))} matches differ"
        )

    counts = {field: 0 for field in CATEGORY_FIELDS.values()}
    for entry in entries:
        field = CATEGORY_FIELDS.get(entry.outcome.category)
        if field is not None:
            counts[field] += 1

    return CategorizationRow(
        predictor=predictor,
        pickem_total=sum(1 for line in lines.values() if line.is_pickem),
        **counts,
    )


def categorize_by_phase(
    results: Sequence[BacktestResult],
    matches: Sequence[MatchRecord],
    split: SeasonSplit,
) -> Mapping[SeasonPhase, CategorizationTable]:
    tables = {}
    for phase in split.phases:
        lines = {m.match_id: m.line for m in matches if split.covers(m.date, phase)}

        tables[phase] = CategorizationTable(
            phase=phase,
            rows=[
                categorize(
                    result.predictor,
                    [e for e in result.entries if split.covers(e.date, phase)],
                    lines,
                )
                for result in results
            ],
        )

    return tables
