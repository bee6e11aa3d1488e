from typing import List

from pydantic import root_validator

from pickem.models.base import FrozenModel


class RejectedRow(FrozenModel):
    source: str
    row: int
    reason: str

    def __str__(self):
        return f"{self.source}, row {self.row}: {self.reason}"


class JoinReport(FrozenModel):
    """Accounting of one ingestion.

    `schedule_rows` counts valid schedule rows only; invalid ones are listed in
    `rejected`. `skipped` counts quoted matches dropped by the skip rule.
    """

    schedule_rows: int = 0
    matched: int = 0
    unquoted: int = 0
    skipped: int = 0
    unplayed_quotes: int = 0
    rejected: List[RejectedRow] = []

    @root_validator(skip_on_failure=True)
    def check_conservation(cls, values):  # noqa: N805
        if values["matched"] + values["unquoted"] != values["schedule_rows"]:
            raise ValueError("matched and unquoted must partition the schedule")
        if values["skipped"] > values["matched"]:
            raise ValueError("cannot skip more matches than were matched")
        return values

    @property
    def usable(self) -> int:
        return self.matched - self.skipped

    def summary_txt(self) -> str:
        return (
            f"schedule rows: {self.schedule_rows}, matched: {self.matched},"
            f" unquoted: {self.unquoted}, skipped: {self.skipped},"
            f" unplayed quotes: {self.unplayed_quotes},"
            f" rejected rows: {len(self.rejected)}"
        )
