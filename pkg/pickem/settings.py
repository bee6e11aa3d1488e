import logging
from contextlib import suppress
from enum import Enum
from pathlib import Path
from typing import Optional

from PyQt5.QtCore import QSettings

from pickem.params.static import (
    FIXED_POINT_MAX_ITERATIONS,
    FIXED_POINT_TOLERANCE,
    STAKE,
    RecencyScheme,
    RepresentationKind,
    SkipUnit,
)

SETTINGS = None

DEFAULT_SETTINGS_FILE = "pickem.ini"


class SettingList(list):
    """Comma-separated INI value."""


class EnumList(SettingList):
    def __init__(self, enum_type, items=()):
        super().__init__(items)
        self.enum_type = enum_type


class OptionalPath(str):
    """Path setting that may be left empty."""


_default_settings = {
    "season/sport": "basketball",
    "season/phase_boundary": "",
    "season/skip": 0,
    "season/skip_unit": SkipUnit.DAYS,
    "season/stake": float(STAKE),
    "data/schedule": Path("schedule.csv"),
    "data/lines": Path("lines.csv"),
    "data/game_log": Path("game_log.csv"),
    "data/team_names": OptionalPath(),
    "data/external_picks_dir": Path("."),
    "schema/stats": SettingList(),
    "schema/possessions": SettingList(),
    "schema/normalization_target": 0.0,
    "features/recency_scheme": RecencyScheme.EXPONENTIAL,
    "features/recency_parameter": 0.95,
    "features/tolerance": FIXED_POINT_TOLERANCE,
    "features/max_iterations": FIXED_POINT_MAX_ITERATIONS,
    "features/adjusted_stats": SettingList(),
    "predictors/enabled": SettingList(["home", "kp", "srs", "nb"]),
    "predictors/external": SettingList(),
    "kp/pyth_exponent": 11.5,
    "kp/home_advantage": 1.014,
    "nb/kernel": True,
    "nb/representations": EnumList(
        RepresentationKind, [RepresentationKind.BASIC, RepresentationKind.OPP]
    ),
    "nb/stats": SettingList(),
    "srs/home_bonus": 0.0,
    "logging/log_level": logging.INFO,
    "logging/log_file": OptionalPath(),
    "logging/log_limit": False,
    "logging/log_limit_size": 10,
    "logging/log_limit_backups": 1,
}


class _Settings(object):
    def __init__(self, settings_path: Optional[Path] = None):
        self.path = Path(settings_path or DEFAULT_SETTINGS_FILE).absolute()

        self.settings = QSettings(str(self.path), QSettings.IniFormat)

        logging.getLogger("Settings").debug(f"Settings path: {self.path}")

    def get(self, setting):
        default = _default_settings[setting]
        setting_type = type(default)

        if issubclass(setting_type, Enum):
            return self._parse_enum(setting_type, setting)

        if isinstance(default, EnumList):
            return self._parse_enum_list(default.enum_type, setting)

        if issubclass(setting_type, SettingList):
            return self._parse_list(setting)

        if issubclass(setting_type, (Path, OptionalPath)):
            return self._parse_path(setting)

        if setting == "logging/log_level":
            return self._parse_log_level(setting)

        return self.settings.value(setting, default, type=setting_type)

    def get_all(self):
        return {k: self.get(k) for k in _default_settings}

    @property
    def filename(self):
        return self.settings.fileName()

    @property
    def base_dir(self) -> Path:
        return self.path.parent

    def _parse_enum(self, setting_type, setting):
        setting_value = self.settings.value(setting)

        if isinstance(setting_value, str):
            with suppress(ValueError):
                return setting_type(setting_value.strip().lower())

        return _default_settings[setting]

    def _parse_enum_list(self, enum_type, setting):
        if not self.settings.contains(setting):
            return list(_default_settings[setting])

        return [enum_type(item.lower()) for item in self._parse_list(setting)]

    def _parse_list(self, setting):
        setting_value = self.settings.value(setting)

        if setting_value is None:
            return list(_default_settings[setting])

        # QSettings splits unquoted comma-separated INI values itself
        if isinstance(setting_value, str):
            setting_value = setting_value.split(",")

        return [item.strip() for item in setting_value if item.strip()]

    def _parse_path(self, setting):
        setting_value = self.settings.value(setting)

        if setting_value is None:
            setting_value = _default_settings[setting]

        if isinstance(setting_value, list):
            setting_value = ",".join(setting_value)

        setting_value = str(setting_value).strip()
        if not setting_value:
            return None

        path = Path(setting_value).expanduser()
        if not path.is_absolute():
            path = self.base_dir / path

        return path

    def _parse_log_level(self, setting):
        setting_value = self.settings.value(setting)

        if isinstance(setting_value, str):
            if setting_value.strip().isdigit():
                return int(setting_value)

            level = logging.getLevelName(setting_value.strip().upper())
            if isinstance(level, int):
                return level

        return _default_settings[setting]


def Settings():
    global SETTINGS  # noqa: WPS420

    if not SETTINGS:
        SETTINGS = _Settings()  # noqa: WPS442

    return SETTINGS


def load_settings(settings_path: Optional[Path]):
    global SETTINGS  # noqa: WPS420

    SETTINGS = _Settings(settings_path)  # noqa: WPS442

    return SETTINGS
