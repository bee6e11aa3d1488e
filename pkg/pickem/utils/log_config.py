import sys
from logging.config import dictConfig
from pathlib import Path
from typing import Optional


def config_log(
    log_level: int,
    log_path: Optional[Path] = None,
    max_log_size: Optional[int] = None,
    max_log_backups: Optional[int] = None,
):
    config = {
        "version": 1,
        "disable_existing_loggers": False,
        "formatters": {
            "pickem_formatter": {
                "format": "%(asctime)s | %(name)s |"  # noqa: WPS323
                " %(levelname)s | %(message)s"
            }
        },
        "handlers": {
            "console_stderr": {
                "class": "logging.StreamHandler",
                "level": "DEBUG",
                "formatter": "pickem_formatter",
                "stream": sys.__stderr__,  # noqa: WPS609
            },
        },
        "root": {
            "level": log_level,
            "handlers": ["console_stderr"],
        },
    }

    if log_path is not None:
        config["handlers"]["file"] = {
            "class": "logging.FileHandler",
            "level": "DEBUG",
            "formatter": "pickem_formatter",
            "filename": str(log_path),
            "encoding": "utf8",
        }
        config["root"]["handlers"].append("file")

        if max_log_size is not None and max_log_backups is not None:
            config["handlers"]["file"]["class"] = "logging.handlers.RotatingFileHandler"
            config["handlers"]["file"]["maxBytes"] = max_log_size
            config["handlers"]["file"]["backupCount"] = max_log_backups

    dictConfig(config)
