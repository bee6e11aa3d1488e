import logging
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Mapping, Optional, Sequence

from pydantic import BaseModel

from pickem.exceptions import ConfigError, PickemException
from pickem.features.builder import RepresentationBuilder
from pickem.ingest.join import IngestResult, ingest_and_join
from pickem.ingest.readers import Normalizer
from pickem.ledger.backtest import run_backtest
from pickem.ledger.baseline import vegas_baseline
from pickem.models.ledger import BacktestResult, BaselineReport
from pickem.models.match import Game, MatchRecord, ScheduledMatch
from pickem.models.report import SeasonSplit
from pickem.models.season_config import PredictorSpec, SeasonConfig
from pickem.params.static import Command, ReportFormat, SeasonPhase
from pickem.predictors.base import PredictorContext
from pickem.predictors.registry import create_predictor
from pickem.report.emit import (
    ALL_FORMATS,
    emit_baseline,
    emit_join_report,
    emit_reports,
    emit_run_config,
)
from pickem.report.summary import summarize
from pickem.report.tables import baseline_frame, frame_txt, summary_frame


class RunFlags(BaseModel):
    command: Command = Command.ALL
    output_dir: Path = Path("reports")
    phase: SeasonPhase = SeasonPhase.COMBINED
    predictors: List[str] = []
    formats: List[ReportFormat] = list(ALL_FORMATS)


class Pipeline(object):
    """Ingest, predict walk-forward, backtest and report one season."""

    def __init__(
        self,
        config: SeasonConfig,
        flags: RunFlags,
        normalize: Normalizer = str,
        settings_dump: Optional[Mapping[str, object]] = None,
    ):
        self._log = logging.getLogger(self.__class__.__name__)

        self._config = config
        self._flags = flags
        self._normalize = normalize
        self._settings_dump = settings_dump or {}

        self.split = SeasonSplit(boundary=config.phase_boundary)
        self.stake = Fraction(str(config.stake))

        self.results: List[BacktestResult] = []
        self.rejected_predictors: List[str] = []

    def run(self) -> int:
        command = self._flags.command
        output_dir = self._flags.output_dir

        ingest = ingest_and_join(self._config, self._normalize)

        if command in {Command.INGEST, Command.ALL}:
            emit_join_report(output_dir, ingest.report)
        if command == Command.ALL:
            emit_run_config(output_dir, self._settings_dump)

        if command == Command.INGEST:
            print(ingest.report.summary_txt())
            for row in ingest.report.rejected:
                print(row)
            return 1 if ingest.report.rejected else 0

        if ingest.report.rejected:
            n_rejected = len(ingest.report.rejected)
            self._log.warning(f"{n_rejected} input rows rejected, see the join report")

        matches = self.phase_matches(ingest)
        if not matches:
            self._log.error("No usable matches left after ingestion")
            return 1

        baselines = self.baselines(matches)

        if command == Command.BASELINE:
            emit_baseline(output_dir, baselines, self._flags.formats)
            print(frame_txt("Vegas baseline", baseline_frame(baselines)))
            return 1 if ingest.report.rejected else 0

        self.backtest(matches, ingest.games, ingest.scheduled)

        if command == Command.BACKTEST:
            summaries = [
                summarize(r.predictor, r.entries, self.split, self.stake)
                for r in self.results
            ]
            print(frame_txt("Accuracy and pay-out", summary_frame(summaries)))
        elif self.results:
            emit_reports(
                output_dir,
                self.results,
                baselines,
                matches,
                self.split,
                self._flags.formats,
                self.stake,
            )
        else:
            emit_baseline(output_dir, baselines, self._flags.formats)

        return 1 if self.rejected_predictors or ingest.report.rejected else 0

    def phase_matches(self, ingest: IngestResult) -> List[MatchRecord]:
        return [
            m for m in ingest.matches if self.split.covers(m.date, self._flags.phase)
        ]

    def baselines(
        self, matches: Sequence[MatchRecord]
    ) -> Dict[SeasonPhase, BaselineReport]:
        return {
            phase: vegas_baseline(
                [m for m in matches if self.split.covers(m.date, phase)], self.stake
            )
            for phase in self.split.phases
        }

    def predictor_specs(self) -> List[PredictorSpec]:
        specs = self._config.predictors
        if not self._flags.predictors:
            return list(specs)

        known = {s.name: s for s in specs}
        unknown = [name for name in self._flags.predictors if name not in known]
        if unknown:
            raise ConfigError(f"predictors not configured: {', '.join(unknown)}")

        return [known[name] for name in self._flags.predictors]

    def backtest(
        self,
        matches: Sequence[MatchRecord],
        games: Sequence[Game],
        scheduled: Sequence[ScheduledMatch] = (),
    ):
        builder = RepresentationBuilder(games, self._config.features)
        context = PredictorContext(
            builder,
            self._config,
            self._normalize,
            {m.match_id: m.to_fixture() for m in scheduled},
        )
        fixtures = [m.to_fixture() for m in matches]

        for spec in self.predictor_specs():
            predictor = create_predictor(spec, context)

            try:
                predictions = predictor.predict_all(fixtures)
                entries, curve = run_backtest(
                    matches,
                    {match_id: p.pick for match_id, p in predictions.items()},
                    self.stake,
                )
            except PickemException as e:
                self._log.error(f"Predictor {spec.name} rejected: {e}")
                self.rejected_predictors.append(spec.name)
                continue

            result = BacktestResult(predictor=spec.name, entries=entries, curve=curve)
            self.results.append(result)

            self._log.info(
                f"{spec.name}: {result.n_correct}/{result.n_matches} correct,"
                f" pay-out {float(result.payout):.2f}"
            )


def run_pipeline(
    config: SeasonConfig,
    flags: RunFlags,
    normalize: Normalizer = str,
    settings_dump: Optional[Mapping[str, object]] = None,
) -> int:
    return Pipeline(config, flags, normalize, settings_dump).run()
