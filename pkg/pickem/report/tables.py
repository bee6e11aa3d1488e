from typing import Mapping, Sequence

import pandas as pd

from pickem.ledger.curve import peak_before_end, trough_to_peak
from pickem.models.ledger import BacktestResult, BaselineReport, WinningsCurve
from pickem.models.report import CategorizationTable, SeasonSummary
from pickem.params.static import SeasonPhase
from pickem.utils.money_txt import (
    get_accuracy_txt,
    get_count_rate_txt,
    get_money_txt,
)

ANALYTICS_COLUMNS = [
    "predictor",
    "trough_date",
    "trough",
    "peak_date",
    "peak",
    "gain",
    "season_peak_date",
    "season_peak",
    "forfeited",
    "final",
]


def baseline_frame(baselines: Mapping[SeasonPhase, BaselineReport]) -> pd.DataFrame:
    return pd.DataFrame(
        [
            {
                "phase": phase.value,
                "matches": b.n_matches,
                "pickems": b.n_pickems,
                "acc_no_pickems": get_accuracy_txt(b.acc_without_pickems),
                "payout_no_pickems": get_money_txt(b.payout_without_pickems),
                "best_acc": get_accuracy_txt(b.best_acc),
                "best_payout": get_money_txt(b.best_payout),
                "expected_acc": get_accuracy_txt(b.expected_acc),
                "expected_payout": get_money_txt(b.expected_payout),
                "worst_acc": get_accuracy_txt(b.worst_acc),
                "worst_payout": get_money_txt(b.worst_payout),
            }
            for phase, b in baselines.items()
        ]
    )


def categorization_frame(
    tables: Mapping[SeasonPhase, CategorizationTable]
) -> pd.DataFrame:
    return pd.DataFrame(
        [
            {
                "phase": phase.value,
                "predictor": row.predictor,
                "favorites": row.correct_favs,
                "underdogs": row.correct_dogs,
                "pickems": get_count_rate_txt(row.correct_pickems, row.pickem_rate),
                "pickem_total": row.pickem_total,
                "correct": row.total_correct,
            }
            for phase, table in tables.items()
            for row in table
        ]
    )


def summary_frame(summaries: Sequence[SeasonSummary]) -> pd.DataFrame:
    return pd.DataFrame(
        [
            {
                "predictor": summary.predictor,
                "phase": phase.value,
                "matches": s.n_matches,
                "correct": s.n_correct,
                "accuracy": get_accuracy_txt(s.accuracy),
                "payout": get_money_txt(s.payout),
                "per_match": (
                    get_money_txt(s.payout / s.n_matches) if s.n_matches else "-"
                ),
            }
            for summary in summaries
            for phase, s in summary.phases.items()
        ]
    )


def analytics_frame(results: Sequence[BacktestResult]) -> pd.DataFrame:
    """Trough-to-peak and peak-before-end of every non-empty season curve."""
    rows = []
    for result in results:
        if not result.curve.points:
            continue

        ttp = trough_to_peak(result.curve)
        pbe = peak_before_end(result.curve)

        rows.append(
            {
                "predictor": result.predictor,
                "trough_date": ttp.trough.date.isoformat(),
                "trough": get_money_txt(ttp.trough.cumulative),
                "peak_date": ttp.peak.date.isoformat(),
                "peak": get_money_txt(ttp.peak.cumulative),
                "gain": get_money_txt(ttp.gain),
                "season_peak_date": pbe.peak.date.isoformat(),
                "season_peak": get_money_txt(pbe.peak.cumulative),
                "forfeited": get_money_txt(pbe.forfeited),
                "final": get_money_txt(result.curve.final),
            }
        )

    return pd.DataFrame(rows, columns=ANALYTICS_COLUMNS)


def curve_frame(curve: WinningsCurve) -> pd.DataFrame:
    return pd.DataFrame(
        [
            {"date": p.date.isoformat(), "cumulative": get_money_txt(p.cumulative)}
            for p in curve
        ],
        columns=["date", "cumulative"],
    )


def frame_txt(title: str, frame: pd.DataFrame) -> str:
    body = frame.to_string(index=False) if len(frame) else "(no rows)"
    return f"{title}\n\n{body}\n"
