"""Delimited-text readers for schedules, money lines and game logs.

A file that cannot be read, or lacks a required column, raises IngestError.
Bad rows are collected as RejectedRow entries and reading goes on.
"""
import logging
from datetime import date
from pathlib import Path
from typing import Callable, Dict, Generic, Iterator, List, NamedTuple, Tuple, TypeVar

import pandas as pd
from pydantic import ValidationError, parse_obj_as

from pickem.exceptions import IngestError
from pickem.models.join_report import RejectedRow
from pickem.models.match import GameLogRow, ScheduledMatch
from pickem.models.money_line import RawQuote
from pickem.params.schemas import SportSchema

logger = logging.getLogger(__name__)

SCHEDULE = "schedule"
LINES = "lines"
GAME_LOG = "game_log"

SCHEDULE_COLUMNS = ("match_id", "date", "home_team", "away_team")
LINE_COLUMNS = (
    "date",
    "home_team",
    "away_team",
    "fav_team",
    "dog_team",
    "fav_line",
    "dog_line",
)
GAME_LOG_COLUMNS = (
    "date",
    "team",
    "opponent",
    "venue",
    "points_for",
    "points_against",
)

# header is line 1
FIRST_ROW = 2

_TRUE = frozenset(("1", "true", "yes", "y"))
_FALSE = frozenset(("", "0", "false", "no", "n"))

T = TypeVar("T")
MatchKey = Tuple[date, str, str]
Normalizer = Callable[[str], str]


class ReadResult(Generic[T]):
    def __init__(self):
        self.records: List[Tuple[int, T]] = []
        self.rejected: List[RejectedRow] = []


class Quote(NamedTuple):
    key: MatchKey
    quote: RawQuote


def read_table(path: Path, required: Tuple[str, ...], source: str) -> pd.DataFrame:
    try:
        table = pd.read_csv(path, dtype=str, keep_default_na=False)
    except pd.errors.EmptyDataError:
        table = pd.DataFrame(columns=list(required))
    except (OSError, pd.errors.ParserError) as e:
        raise IngestError(f"cannot read {source} file {path}: {e}") from e

    table.columns = [str(c).strip() for c in table.columns]

    missing = [c for c in required if c not in table.columns]
    if missing:
        raise IngestError(f"{source} file {path} lacks columns: {', '.join(missing)}")

    return table


def iter_rows(table: pd.DataFrame) -> Iterator[Tuple[int, Dict[str, str]]]:
    for row_n, record in enumerate(table.to_dict("records"), FIRST_ROW):
        yield row_n, {k: str(v).strip() for k, v in record.items()}


def rejection_reason(error: ValueError) -> str:
    if isinstance(error, ValidationError):
        return "; ".join(
            f"{'.'.join(str(loc) for loc in err['loc'])}: {err['msg']}"
            for err in error.errors()
        )
    return str(error)


def parse_bool(value: str) -> bool:
    lowered = value.casefold()
    if lowered in _TRUE:
        return True
    if lowered in _FALSE:
        return False
    raise ValueError(f"not a yes/no value: {value!r}")


def _blank_to_none(value: str):
    return value or None


def _optional_bool(value: str):
    return parse_bool(value) if value else None


def _score_winner(home: str, away: str, home_score, away_score) -> str:
    if home_score is None or away_score is None:
        raise ValueError("no winner and no final score")

    if int(home_score) == int(away_score):
        raise ValueError("tied matches are not supported")

    return home if int(home_score) > int(away_score) else away


def read_schedule(
    path: Path, normalize: Normalizer = str
) -> ReadResult[ScheduledMatch]:
    result = ReadResult()

    for row_n, row in iter_rows(read_table(path, SCHEDULE_COLUMNS, SCHEDULE)):
        try:
            home = normalize(row["home_team"])
            away = normalize(row["away_team"])
            home_score = _blank_to_none(row.get("home_score", ""))
            away_score = _blank_to_none(row.get("away_score", ""))

            winner = row.get("winner", "")
            if winner:
                winner = normalize(winner)
            else:
                winner = _score_winner(home, away, home_score, away_score)

            match = ScheduledMatch(
                match_id=row["match_id"],
                date=row["date"],
                home_team=home,
                away_team=away,
                neutral=parse_bool(row.get("neutral", "")),
                winner=winner,
                home_score=home_score,
                away_score=away_score,
            )
        except ValueError as e:
            result.rejected.append(
                RejectedRow(source=SCHEDULE, row=row_n, reason=rejection_reason(e))
            )
            continue

        result.records.append((row_n, match))

    _log_result(SCHEDULE, path, result)

    return result


def read_lines(path: Path, normalize: Normalizer = str) -> ReadResult[Quote]:
    result = ReadResult()

    for row_n, row in iter_rows(read_table(path, LINE_COLUMNS, LINES)):
        try:
            home = normalize(row["home_team"])
            away = normalize(row["away_team"])
            quote = RawQuote(
                book_id=row.get("book_id") or f"row{row_n}",
                fav_team=normalize(row["fav_team"]),
                dog_team=normalize(row["dog_team"]),
                fav_line=row["fav_line"],
                dog_line=row["dog_line"],
                is_pickem=_optional_bool(row.get("is_pickem", "")),
            )

            if {quote.fav_team, quote.dog_team} != {home, away}:
                raise ValueError(
                    f"quoted teams {quote.fav_team}/{quote.dog_team}"
                    f" are not {home}/{away}"
                )

            key = (parse_obj_as(date, row["date"]), home, away)
        except ValueError as e:
            result.rejected.append(
                RejectedRow(source=LINES, row=row_n, reason=rejection_reason(e))
            )
            continue

        result.records.append((row_n, Quote(key=key, quote=quote)))

    _log_result(LINES, path, result)

    return result


def read_game_log(
    path: Path, schema: SportSchema, normalize: Normalizer = str
) -> ReadResult[GameLogRow]:
    required = (*GAME_LOG_COLUMNS, *schema.stats)
    result = ReadResult()

    for row_n, row in iter_rows(read_table(path, required, GAME_LOG)):
        try:
            game_row = GameLogRow(
                date=row["date"],
                team=normalize(row["team"]),
                opponent=normalize(row["opponent"]),
                venue=row["venue"].casefold(),
                stats={stat: float(row[stat]) for stat in schema.stats},
                points_for=row["points_for"],
                points_against=row["points_against"],
            )
        except ValueError as e:
            result.rejected.append(
                RejectedRow(source=GAME_LOG, row=row_n, reason=rejection_reason(e))
            )
            continue

        result.records.append((row_n, game_row))

    _log_result(GAME_LOG, path, result)

    return result


def _log_result(source: str, path: Path, result: ReadResult):
    logger.info(f"Read {len(result.records)} {source} rows from {path}")

    if result.rejected:
        logger.warning(f"Rejected {len(result.rejected)} {source} rows")
