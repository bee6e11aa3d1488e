import logging
from contextlib import contextmanager
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Collection, Dict, List, Mapping, Sequence, Tuple

import pandas as pd

from pickem.exceptions import EmptyInputError, ReportWriteError
from pickem.models.join_report import JoinReport
from pickem.models.ledger import BacktestResult, BaselineReport
from pickem.models.match import MatchRecord
from pickem.models.report import SeasonSplit
from pickem.params.static import STAKE, ReportFormat, SeasonPhase
from pickem.report.categorize import categorize_by_phase
from pickem.report.summary import phase_curve, summarize
from pickem.report.tables import (
    analytics_frame,
    baseline_frame,
    categorization_frame,
    curve_frame,
    frame_txt,
    summary_frame,
)

logger = logging.getLogger(__name__)

CURVES_DIR = "curves"
JOIN_REPORT_FILE = "join_report.txt"
RUN_CONFIG_FILE = "run_config.txt"

ALL_FORMATS = (ReportFormat.TEXT, ReportFormat.CSV)

Tables = Dict[str, Tuple[str, pd.DataFrame]]


def emit_baseline(
    output_dir: Path,
    baselines: Mapping[SeasonPhase, BaselineReport],
    formats: Collection[ReportFormat] = ALL_FORMATS,
) -> List[Path]:
    tables = {"baseline": ("Vegas baseline", baseline_frame(baselines))}

    with _writing(output_dir):
        return _write_tables(output_dir, tables, formats)


def emit_reports(
    output_dir: Path,
    results: Sequence[BacktestResult],
    baselines: Mapping[SeasonPhase, BaselineReport],
    matches: Sequence[MatchRecord],
    split: SeasonSplit,
    formats: Collection[ReportFormat] = ALL_FORMATS,
    stake: Fraction = STAKE,
) -> List[Path]:
    """Write baseline, categorization and summary tables plus curve files.

    Output is a function of the inputs only, reruns are byte-identical.
    """
    if not results:
        raise EmptyInputError("no backtests to report")

    tables = {
        "baseline": ("Vegas baseline", baseline_frame(baselines)),
        "categorization": (
            "Correct predictions by money-line category",
            categorization_frame(categorize_by_phase(results, matches, split)),
        ),
        "summary": (
            "Accuracy and pay-out",
            summary_frame(
                [summarize(r.predictor, r.entries, split, stake) for r in results]
            ),
        ),
        "analytics": ("Winnings curve analytics", analytics_frame(results)),
    }

    curve_phases = split.phases if split.is_split else [SeasonPhase.COMBINED]

    with _writing(output_dir):
        written = _write_tables(output_dir, tables, formats)

        (output_dir / CURVES_DIR).mkdir(exist_ok=True)
        for result in results:
            for phase in curve_phases:
                curve = phase_curve(result.entries, split, phase, stake)
                path = output_dir / CURVES_DIR / f"{result.predictor}_{phase.value}.csv"
                written.append(_write_csv(path, curve_frame(curve)))

    logger.info(f"Wrote {len(written)} report files to {output_dir}")

    return written


def emit_join_report(output_dir: Path, report: JoinReport) -> Path:
    lines = ["Join report", "", report.summary_txt(), ""]
    lines.extend(str(row) for row in report.rejected)

    with _writing(output_dir):
        return _write_text(output_dir / JOIN_REPORT_FILE, "\n".join(lines) + "\n")


def emit_run_config(output_dir: Path, settings: Mapping[str, object]) -> Path:
    lines = [f"{key} = {_setting_txt(value)}" for key, value in settings.items()]

    with _writing(output_dir):
        return _write_text(output_dir / RUN_CONFIG_FILE, "\n".join(lines) + "\n")


def _setting_txt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, Enum):
        return str(value.value)
    if isinstance(value, (list, tuple)):
        return ", ".join(_setting_txt(v) for v in value)
    return str(value)


@contextmanager
def _writing(output_dir: Path):
    try:
        output_dir.mkdir(parents=True, exist_ok=True)
        yield
    except OSError as e:
        raise ReportWriteError(f"cannot write reports to {output_dir}: {e}") from e


def _write_tables(
    output_dir: Path, tables: Tables, formats: Collection[ReportFormat]
) -> List[Path]:
    written = []
    for name, (title, frame) in tables.items():
        if ReportFormat.TEXT in formats:
            path = output_dir / f"{name}.txt"
            written.append(_write_text(path, frame_txt(title, frame)))
        if ReportFormat.CSV in formats:
            written.append(_write_csv(output_dir / f"{name}.csv", frame))
    return written


def _write_text(path: Path, text: str) -> Path:
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)
    return path


def _write_csv(path: Path, frame: pd.DataFrame) -> Path:
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        frame.to_csv(f, index=False, lineterminator="\n")
    return path
