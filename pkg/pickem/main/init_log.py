import logging

from pickem.settings import Settings
from pickem.utils import log_config


def init_log(verbose: bool = False):
    settings = Settings()

    if settings.get("logging/log_limit"):
        max_log_size = max(settings.get("logging/log_limit_size"), 1) * 1024 * 1024
        max_log_backups = max(settings.get("logging/log_limit_backups"), 1)
    else:
        max_log_size = None
        max_log_backups = None

    log_level = settings.get("logging/log_level")
    if verbose:
        log_level = min(log_level, logging.DEBUG)

    log_config.config_log(
        log_level=log_level,
        log_path=settings.get("logging/log_file"),
        max_log_size=max_log_size,
        max_log_backups=max_log_backups,
    )
