import logging
from collections import defaultdict
from datetime import date, timedelta
from typing import Dict, List, NamedTuple, Sequence, Tuple

from pickem.exceptions import InconsistentLinesError, MalformedLineError
from pickem.features.games import pair_games
from pickem.ingest.readers import (
    GAME_LOG,
    LINES,
    SCHEDULE,
    MatchKey,
    Normalizer,
    Quote,
    read_game_log,
    read_lines,
    read_schedule,
)
from pickem.models.join_report import JoinReport, RejectedRow
from pickem.models.match import Game, MatchRecord, ScheduledMatch
from pickem.models.money_line import MoneyLine
from pickem.models.season_config import SeasonConfig
from pickem.odds import canonicalize, conservative_merge
from pickem.params.static import SkipUnit

logger = logging.getLogger(__name__)


class IngestResult(NamedTuple):
    matches: List[MatchRecord]
    games: List[Game]
    report: JoinReport
    # every valid schedule row, quoted or not, before the skip rule
    scheduled: List[ScheduledMatch]


def ingest_and_join(config: SeasonConfig, normalize: Normalizer = str) -> IngestResult:
    """Read the season files and attach one merged money line to every match."""
    data = config.data

    schedule = read_schedule(data.schedule, normalize)
    quotes = read_lines(data.lines, normalize)
    game_log = read_game_log(data.game_log, config.features.sport, normalize)

    rejected = [*schedule.rejected, *quotes.rejected, *game_log.rejected]

    scheduled, duplicates = unique_matches(schedule.records)
    rejected.extend(duplicates)

    lines, bad_quotes = merge_quotes(quotes.records)
    rejected.extend(bad_quotes)

    matches = [
        MatchRecord(**match.dict(), line=lines[match.key])
        for match in scheduled
        if match.key in lines
    ]
    schedule_keys = {m.key for m in scheduled}
    unplayed_quotes = sum(1 for key in lines if key not in schedule_keys)

    kept = apply_skip(matches, scheduled, config.skip, config.skip_unit)

    games, bad_games = pair_game_log(game_log.records)
    rejected.extend(bad_games)

    report = JoinReport(
        schedule_rows=len(scheduled),
        matched=len(matches),
        unquoted=len(scheduled) - len(matches),
        skipped=len(matches) - len(kept),
        unplayed_quotes=unplayed_quotes,
        rejected=sorted(rejected, key=lambda r: (r.source, r.row)),
    )

    logger.info(f"Join: {report.summary_txt()}")
    for row in report.rejected:
        logger.debug(f"Rejected {row}")

    return IngestResult(
        matches=kept, games=games, report=report, scheduled=scheduled
    )


def unique_matches(
    records: Sequence[Tuple[int, ScheduledMatch]]
) -> Tuple[List[ScheduledMatch], List[RejectedRow]]:
    """First row wins for a repeated match id or (date, home, away) key."""
    seen_ids, seen_keys = set(), set()
    matches, rejected = [], []

    for row_n, match in records:
        if match.match_id in seen_ids or match.key in seen_keys:
            rejected.append(
                RejectedRow(
                    source=SCHEDULE,
                    row=row_n,
                    reason=f"duplicate match {match.match_id}",
                )
            )
            continue

        seen_ids.add(match.match_id)
        seen_keys.add(match.key)
        matches.append(match)

    return matches, rejected


def merge_quotes(
    records: Sequence[Tuple[int, Quote]]
) -> Tuple[Dict[MatchKey, MoneyLine], List[RejectedRow]]:
    by_key = defaultdict(list)
    rejected = []

    for row_n, quote in records:
        try:
            line = canonicalize(quote.quote)
        except MalformedLineError as e:
            rejected.append(RejectedRow(source=LINES, row=row_n, reason=str(e)))
            continue
        by_key[quote.key].append((row_n, line))

    merged = {}
    for key, rows in by_key.items():
        try:
            merged[key] = conservative_merge([line for _, line in rows])
        except InconsistentLinesError as e:
            rejected.extend(
                RejectedRow(source=LINES, row=row_n, reason=str(e)) for row_n, _ in rows
            )

    return merged, rejected


def apply_skip(
    matches: Sequence[MatchRecord],
    schedule: Sequence[ScheduledMatch],
    skip: int,
    unit: SkipUnit,
) -> List[MatchRecord]:
    """Drop matches of the season's opening days or weeks.

    Days are counted as distinct days of play, weeks as calendar weeks from
    the first scheduled day.
    """
    if not skip or not schedule:
        return list(matches)

    play_days = sorted({m.date for m in schedule})

    if unit == SkipUnit.DAYS:
        first_kept = play_days[skip] if skip < len(play_days) else date.max
    else:
        first_kept = play_days[0] + timedelta(weeks=skip)

    kept = [m for m in matches if m.date >= first_kept]

    logger.info(f"Skip rule ({skip} {unit.value}) excluded {len(matches) - len(kept)}")

    return kept


def pair_game_log(records) -> Tuple[List[Game], List[RejectedRow]]:
    row_numbers = {id(row): row_n for row_n, row in records}

    pairing = pair_games([row for _, row in records])

    rejected = [
        RejectedRow(source=GAME_LOG, row=row_numbers[id(row)], reason=reason)
        for row, reason in pairing.rejected
    ]

    return pairing.games, rejected
