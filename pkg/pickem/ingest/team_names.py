import logging
from pathlib import Path
from typing import Dict, Optional

import pandas as pd

from pickem.exceptions import IngestError


def _name_key(name: str) -> str:
    return " ".join(name.split()).casefold()


class TeamNames(object):
    """Alias table mapping every spelling of a team to one canonical name.

    Lookups ignore case and repeated whitespace; unknown names pass through
    with their whitespace collapsed.
    """

    def __init__(self, aliases: Optional[Dict[str, str]] = None):
        self._log = logging.getLogger(self.__class__.__name__)

        self._canonical = {}
        for alias, canonical in (aliases or {}).items():
            canonical = " ".join(canonical.split())
            self._canonical[_name_key(alias)] = canonical
            self._canonical[_name_key(canonical)] = canonical

    @classmethod
    def from_csv(cls, path: Path) -> "TeamNames":
        try:
            table = pd.read_csv(path, dtype=str, keep_default_na=False)
        except (OSError, pd.errors.ParserError) as e:
            raise IngestError(f"cannot read team names from {path}: {e}") from e

        missing = {"alias", "canonical"} - set(table.columns)
        if missing:
            raise IngestError(f"{path}: missing columns {', '.join(sorted(missing))}")

        return cls(dict(zip(table["alias"], table["canonical"])))

    def __len__(self):
        return len(self._canonical)

    def __call__(self, name: str) -> str:
        return self.normalize(name)

    def normalize(self, name: str) -> str:
        collapsed = " ".join(name.split())
        return self._canonical.get(_name_key(collapsed), collapsed)
