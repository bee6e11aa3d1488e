import logging

import pytest

from pickem.exceptions import ConfigError
from pickem.main.cli import parse_args
from pickem.main.init_config import init_season_config
from pickem.params.schemas import BASKETBALL
from pickem.params.static import PredictorKind, RecencyScheme, SkipUnit
from pickem.settings import load_settings

DATA_FILES = ("schedule.csv", "lines.csv", "game_log.csv")


def settings_file(tmp_path, text, data_files=DATA_FILES):
    for name in data_files:
        (tmp_path / name).write_text("")
    path = tmp_path / "pickem.ini"
    path.write_text(text)
    return load_settings(path)


def test_defaults(tmp_path):
    settings = settings_file(tmp_path, "")

    assert settings.get("season/skip") == 0
    assert settings.get("season/skip_unit") == SkipUnit.DAYS
    assert settings.get("predictors/enabled") == ["home", "kp", "srs", "nb"]
    assert settings.get("data/schedule") == tmp_path / "schedule.csv"
    assert settings.get("data/team_names") is None
    assert settings.get("logging/log_level") == logging.INFO


def test_values_from_file(tmp_path):
    settings = settings_file(
        tmp_path,
        "[season]\n"
        "skip = 3\n"
        "skip_unit = Weeks\n"
        "stake = 10\n"
        "[features]\n"
        "recency_scheme = linear\n"
        "[predictors]\n"
        "enabled = kp, nb\n"
        "[data]\n"
        "schedule = season/schedule.csv\n"
        "[logging]\n"
        "log_level = debug\n",
    )

    assert settings.get("season/skip") == 3
    assert settings.get("season/skip_unit") == SkipUnit.WEEKS
    assert settings.get("season/stake") == 10
    assert settings.get("features/recency_scheme") == RecencyScheme.LINEAR
    assert settings.get("predictors/enabled") == ["kp", "nb"]
    assert settings.get("data/schedule") == tmp_path / "season" / "schedule.csv"
    assert settings.get("logging/log_level") == logging.DEBUG


def test_invalid_enum_falls_back(tmp_path):
    settings = settings_file(tmp_path, "[season]\nskip_unit = fortnights\n")

    assert settings.get("season/skip_unit") == SkipUnit.DAYS


def test_season_config(tmp_path):
    settings = settings_file(
        tmp_path,
        "[season]\n"
        "phase_boundary = 2016-03-15\n"
        "[predictors]\n"
        "enabled = home, srs\n"
        "external = ann\n"
        "[schema]\n"
        "possessions = fga:1, to:1\n"
        "[kp]\n"
        "pyth_exponent = 10.25\n",
    )

    config = init_season_config(settings)

    assert str(config.phase_boundary) == "2016-03-15"
    assert config.features.sport.stats == BASKETBALL.stats
    assert config.features.sport.possessions == {"fga": 1, "to": 1}
    assert config.kp.pyth_exponent == 10.25
    assert [(s.name, s.kind) for s in config.predictors] == [
        ("home", PredictorKind.HOME),
        ("srs", PredictorKind.SRS),
        ("ann", PredictorKind.EXTERNAL),
    ]
    assert config.predictors[-1].picks_file == tmp_path / "ann.csv"


def test_empty_external_picks_dir(tmp_path):
    settings = settings_file(
        tmp_path, "[data]\nexternal_picks_dir =\n[predictors]\nexternal = ann\n"
    )

    config = init_season_config(settings)

    assert config.predictors[-1].picks_file == tmp_path / "ann.csv"


@pytest.mark.parametrize(
    "text",
    [
        "[season]\nsport = curling\n",
        "[season]\nskip = -1\n",
        "[season]\nstake = 0\n",
        "[predictors]\nenabled = home, home\n",
        "[predictors]\nenabled = oracle\n",
        "[schema]\npossessions = fga\n",
        "[kp]\nhome_advantage = 0.9\n",
    ],
)
def test_season_config_invalid(tmp_path, text):
    with pytest.raises(ConfigError):
        init_season_config(settings_file(tmp_path, text))


def test_season_config_missing_data_file(tmp_path):
    settings = settings_file(tmp_path, "", data_files=DATA_FILES[:2])

    with pytest.raises(ConfigError, match="game_log"):
        init_season_config(settings)


def test_parse_args():
    args = parse_args(["-p", "kp", "-p", "nb", "--format", "csv", "report"])

    assert args.command == "report"
    assert args.predictors == ["kp", "nb"]
    assert args.formats == ["csv"]
    assert args.phase == "combined"
    assert args.config is None


def test_parse_args_unknown_command():
    with pytest.raises(SystemExit):
        parse_args(["plot"])
