from pathlib import Path

import pytest

from pickem.exceptions import ConfigError
from pickem.ingest.readers import GAME_LOG_COLUMNS, LINE_COLUMNS
from pickem.main.pipeline import Pipeline, RunFlags, run_pipeline
from pickem.models.season_config import DataFiles, PredictorSpec, SeasonConfig
from pickem.params.schemas import BASKETBALL
from pickem.params.static import Command, PredictorKind, SeasonPhase
from pickem.report.emit import CURVES_DIR, JOIN_REPORT_FILE, RUN_CONFIG_FILE
from tests.factories import day, feature_config, game, random_season

TEAMS = ("Army", "Navy", "Duke", "Yale")

HOME = PredictorSpec(name="home", kind=PredictorKind.HOME)
KP = PredictorSpec(name="kp", kind=PredictorKind.KP)
NB = PredictorSpec(name="nb", kind=PredictorKind.NB)


def write_csv(path: Path, header, rows) -> Path:
    lines = [",".join(header), *(",".join(str(v) for v in r) for r in rows)]
    path.write_text("\n".join(lines) + "\n")
    return path


def game_log_rows(games):
    for g in games:
        for own in g.rows():
            stats = [own.stats[s] for s in BASKETBALL.stats]
            yield (
                own.date,
                own.team,
                own.opponent,
                own.venue.value,
                own.points_for,
                own.points_against,
                *stats,
            )


def teams(g):
    return g.home.team, g.away.team


def write_season(data_dir: Path, games, log_games=None):
    """Schedule and lines follow `games`; the game log may differ."""
    data_dir.mkdir(parents=True, exist_ok=True)
    schedule = [
        (f"g{n}", g.date, *teams(g), g.home.points_for, g.away.points_for)
        for n, g in enumerate(games)
    ]
    lines = [(g.date, *teams(g), *teams(g), 150, 130) for g in games]

    return DataFiles(
        schedule=write_csv(
            data_dir / "schedule.csv",
            ("match_id", "date", "home_team", "away_team", "home_score", "away_score"),
            schedule,
        ),
        lines=write_csv(data_dir / "lines.csv", LINE_COLUMNS, lines),
        game_log=write_csv(
            data_dir / "game_log.csv",
            (*GAME_LOG_COLUMNS, *BASKETBALL.stats),
            game_log_rows(log_games or games),
        ),
    )


def season_config(data, predictors, skip=1, boundary=None):
    return SeasonConfig(
        sport="ncaab",
        phase_boundary=boundary,
        skip=skip,
        data=data,
        features=feature_config(),
        predictors=predictors,
    )


def run(config, output_dir, command=Command.ALL, **flags):
    pipeline = Pipeline(
        config, RunFlags(command=command, output_dir=output_dir, **flags)
    )
    return pipeline, pipeline.run()


@pytest.fixture
def season():
    return random_season(TEAMS, 12, seed=8)


def files_under(root: Path):
    files = (p for p in root.rglob("*") if p.is_file())
    return sorted(p.relative_to(root).as_posix() for p in files)


def test_baseline_only(tmp_path, season, capsys):
    config = season_config(write_season(tmp_path / "data", season), [KP])

    _, status = run(config, tmp_path / "out", Command.BASELINE)

    assert status == 0
    assert files_under(tmp_path / "out") == ["baseline.csv", "baseline.txt"]
    assert "Vegas baseline" in capsys.readouterr().out


def test_report_with_external_picks(tmp_path, season):
    picks = write_csv(
        tmp_path / "dogs.csv",
        ("match_id", "pick_team"),
        [(f"g{n}", g.away.team) for n, g in enumerate(season)],
    )
    dogs = PredictorSpec(name="dogs", kind=PredictorKind.EXTERNAL, picks_file=picks)
    config = season_config(write_season(tmp_path / "data", season), [KP, dogs])

    pipeline, status = run(config, tmp_path / "out", Command.REPORT)

    assert status == 0
    assert [r.predictor for r in pipeline.results] == ["kp", "dogs"]
    assert pipeline.results[0].n_matches == len(season) - 2
    curves = sorted(p.name for p in (tmp_path / "out" / CURVES_DIR).iterdir())
    assert curves == ["dogs_combined.csv", "kp_combined.csv"]
    assert not (tmp_path / "out" / JOIN_REPORT_FILE).exists()


def test_all_writes_join_report_and_settings(tmp_path, season):
    config = season_config(write_season(tmp_path / "data", season), [HOME])
    pipeline = Pipeline(
        config,
        RunFlags(command=Command.ALL, output_dir=tmp_path / "out"),
        settings_dump={"season/skip": 1, "predictors/enabled": ["home"]},
    )

    assert pipeline.run() == 0

    join_report = (tmp_path / "out" / JOIN_REPORT_FILE).read_text()
    assert f"schedule rows: {len(season)}, matched: {len(season)}" in join_report
    assert "skipped: 2" in join_report
    run_config = (tmp_path / "out" / RUN_CONFIG_FILE).read_text()
    assert run_config == "season/skip = 1\npredictors/enabled = home\n"


def test_rerun_is_byte_identical(tmp_path, season):
    config = season_config(write_season(tmp_path / "data", season), [HOME, KP])

    run(config, tmp_path / "first")
    run(config, tmp_path / "second")

    first, second = tmp_path / "first", tmp_path / "second"
    assert files_under(first) == files_under(second)
    for name in files_under(first):
        assert (first / name).read_bytes() == (second / name).read_bytes()


def test_rejected_predictor(tmp_path, season):
    picks = write_csv(tmp_path / "few.csv", ("match_id", "pick_team"), [("g5", "x")])
    few = PredictorSpec(name="few", kind=PredictorKind.EXTERNAL, picks_file=picks)
    config = season_config(write_season(tmp_path / "data", season), [few, HOME])

    pipeline, status = run(config, tmp_path / "out", Command.REPORT)

    assert status == 1
    assert pipeline.rejected_predictors == ["few"]
    assert [r.predictor for r in pipeline.results] == ["home"]
    assert (tmp_path / "out" / CURVES_DIR / "home_combined.csv").exists()


def test_unknown_predictor_flag(tmp_path, season):
    config = season_config(write_season(tmp_path / "data", season), [HOME])

    with pytest.raises(ConfigError):
        run(config, tmp_path / "out", Command.BACKTEST, predictors=["kp"])


def test_backtest_prints_summary(tmp_path, season, capsys):
    config = season_config(write_season(tmp_path / "data", season), [HOME, KP])

    _, status = run(config, tmp_path / "out", Command.BACKTEST, predictors=["home"])

    assert status == 0
    out = capsys.readouterr().out
    assert "Accuracy and pay-out" in out
    assert "kp" not in out
    assert not (tmp_path / "out").exists()


def test_phase_flag(tmp_path, season):
    config = season_config(
        write_season(tmp_path / "data", season), [HOME], boundary=day(10)
    )

    pipeline, _ = run(config, tmp_path / "out", Command.REPORT, phase=SeasonPhase.POST)

    (result,) = pipeline.results
    assert result.n_matches == 4
    assert all(e.date >= day(10) for e in result.entries)


def test_ingest_reports_rejected_rows(tmp_path, season, capsys):
    data = write_season(tmp_path / "data", season)
    with open(data.lines, "a") as f:
        f.write(f"{day(0)},Army,Navy,Army,Navy,50,40\n")
    config = season_config(data, [HOME])

    _, status = run(config, tmp_path / "out", Command.INGEST)

    assert status == 1
    assert "lines, row" in capsys.readouterr().out
    assert files_under(tmp_path / "out") == [JOIN_REPORT_FILE]


def test_no_usable_matches(tmp_path, season):
    config = season_config(write_season(tmp_path / "data", season), [HOME], skip=50)

    _, status = run(config, tmp_path / "out", Command.REPORT)

    assert status == 1


def blowout(g):
    return game((g.date - day(0)).days, g.home.team, g.away.team, 150, 20)


def test_nb_never_sees_future_games(tmp_path, season):
    corrupted = [g if g.date < day(9) else blowout(g) for g in season]

    clean = season_config(write_season(tmp_path / "clean", season), [NB], skip=7)
    dirty = season_config(
        write_season(tmp_path / "dirty", season, corrupted), [NB], skip=7
    )

    clean_run, _ = run(clean, tmp_path / "out_clean", Command.BACKTEST)
    dirty_run, _ = run(dirty, tmp_path / "out_dirty", Command.BACKTEST)

    (clean_nb,) = clean_run.results
    (dirty_nb,) = dirty_run.results
    before = [(e.match_id, e.pick) for e in clean_nb.entries if e.date <= day(9)]
    assert before
    assert before == [
        (e.match_id, e.pick) for e in dirty_nb.entries if e.date <= day(9)
    ]


def test_run_pipeline_exit_status(tmp_path, season):
    config = season_config(write_season(tmp_path / "data", season), [HOME])
    flags = RunFlags(command=Command.REPORT, output_dir=tmp_path / "out")

    assert run_pipeline(config, flags) == 0
    assert (tmp_path / "out" / "summary.txt").exists()


@pytest.mark.parametrize("command", [Command.ALL, Command.BASELINE, Command.BACKTEST])
def test_rejected_input_rows_set_exit_status(tmp_path, season, command):
    data = write_season(tmp_path / "data", season)
    with open(data.schedule, "a") as f:
        f.write(f"tie,{day(30)},Army,Navy,70,70\n")
    config = season_config(data, [HOME])

    pipeline, status = run(config, tmp_path / "out", command)

    assert status == 1
    assert not pipeline.rejected_predictors
    if command == Command.ALL:
        assert [r.predictor for r in pipeline.results] == ["home"]
        join_report = (tmp_path / "out" / JOIN_REPORT_FILE).read_text()
        assert "tied matches are not supported" in join_report
