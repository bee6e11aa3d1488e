__app_name__ = "pickem"
__display_name__ = "Pickem"
__author_name__ = "pickem developers"
__version__ = "0.1.0"
__version_date__ = "2026-10-19"
