import logging
import platform
import sys

import numpy
import pandas
import pydantic
import scipy
from PyQt5.QtCore import QT_VERSION_STR

from pickem.version import __display_name__, __version__


def log_environment():
    log = logging.getLogger("ENV")

    log.info(f"{__display_name__} v.{__version__} starting")

    if log.getEffectiveLevel() != logging.DEBUG:
        return

    env_log = [
        "Environment info",
        "========",
        f"OS: {platform.platform()}",
        f"Python: {platform.python_version()}",
        f"numpy: {numpy.__version__}",
        f"scipy: {scipy.__version__}",
        f"pandas: {pandas.__version__}",
        f"pydantic: {pydantic.VERSION}",
        f"Qt: {QT_VERSION_STR}",
        f"sys.argv: {sys.argv}",
        "========",
    ]

    for e in env_log:
        log.debug(e)
