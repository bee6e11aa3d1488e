import argparse
import logging
from pathlib import Path
from typing import List, Optional

from pickem.exceptions import PickemException
from pickem.ingest.team_names import TeamNames
from pickem.main.init_config import init_season_config
from pickem.main.pipeline import RunFlags, run_pipeline
from pickem.params.static import Command, ReportFormat, SeasonPhase
from pickem.settings import Settings
from pickem.version import __app_name__, __version__


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=__app_name__,
        description="Backtest money-line picks of a sports season.",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    parser.add_argument(
        "-c",
        "--config",
        type=Path,
        help="season configuration file (INI), default ./pickem.ini",
    )
    parser.add_argument(
        "-o",
        "--output",
        type=Path,
        default=Path("reports"),
        help="report directory (default: %(default)s)",
    )
    parser.add_argument(
        "--phase",
        choices=[p.value for p in SeasonPhase],
        default=SeasonPhase.COMBINED.value,
        help="restrict the run to one season phase (default: %(default)s)",
    )
    parser.add_argument(
        "-p",
        "--predictor",
        action="append",
        default=[],
        dest="predictors",
        help="run only this predictor, may be repeated",
    )
    parser.add_argument(
        "--format",
        choices=[f.value for f in ReportFormat],
        action="append",
        dest="formats",
        help="report file format, may be repeated (default: all)",
    )
    parser.add_argument(
        "-v", "--verbose", action="store_true", help="log at debug level"
    )
    parser.add_argument(
        "command",
        choices=[c.value for c in Command],
        help="ingest: validate inputs; baseline: Vegas baseline;"
        " backtest: print predictor results; report: write all tables;"
        " all: everything plus join report and effective settings",
    )

    return parser


def parse_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    return build_parser().parse_args(argv)


def run_cli(args: argparse.Namespace) -> int:
    log = logging.getLogger("CLI")

    settings = Settings()

    try:
        config = init_season_config(settings)

        team_names = TeamNames()
        if config.data.team_names is not None:
            team_names = TeamNames.from_csv(config.data.team_names)
            log.info(f"Loaded {len(team_names)} team name aliases")

        formats = [ReportFormat(f) for f in args.formats or []] or list(ReportFormat)

        flags = RunFlags(
            command=Command(args.command),
            output_dir=args.output,
            phase=SeasonPhase(args.phase),
            predictors=args.predictors,
            formats=formats,
        )

        return run_pipeline(config, flags, team_names, settings.get_all())
    except PickemException as e:
        log.error(e)
        return 1
