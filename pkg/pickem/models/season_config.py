from datetime import date
from pathlib import Path
from typing import List, Optional

from pydantic import BaseModel, FilePath, validator

from pickem.models.features import RecencyWeights
from pickem.models.prediction import KPParams, SRSParams
from pickem.params.schemas import SportSchema
from pickem.params.static import (
    FIXED_POINT_MAX_ITERATIONS,
    FIXED_POINT_TOLERANCE,
    STAKE,
    PredictorKind,
    RepresentationKind,
    SkipUnit,
)


class FeatureConfig(BaseModel):
    sport: SportSchema
    weights: RecencyWeights = RecencyWeights()
    tolerance: float = FIXED_POINT_TOLERANCE
    max_iterations: int = FIXED_POINT_MAX_ITERATIONS
    adjusted_stats: List[str] = []

    @property
    def target(self) -> float:
        return self.sport.normalization_target


class NBConfig(BaseModel):
    kernel: bool = True
    representations: List[RepresentationKind] = [
        RepresentationKind.BASIC,
        RepresentationKind.OPP,
    ]
    stats: List[str] = []


class PredictorSpec(BaseModel):
    name: str
    kind: PredictorKind
    picks_file: Optional[Path]

    @validator("picks_file", always=True)
    def external_needs_file(cls, picks_file, values):  # noqa: N805
        if values.get("kind") == PredictorKind.EXTERNAL and picks_file is None:
            raise ValueError(f"external predictor {values.get('name')} needs a file")
        return picks_file


class DataFiles(BaseModel):
    schedule: FilePath
    lines: FilePath
    game_log: FilePath
    team_names: Optional[FilePath]


class SeasonConfig(BaseModel):
    sport: str
    phase_boundary: Optional[date]
    skip: int = 0
    skip_unit: SkipUnit = SkipUnit.DAYS
    stake: float = STAKE
    data: DataFiles
    features: FeatureConfig
    predictors: List[PredictorSpec] = []
    kp: KPParams = KPParams()
    nb: NBConfig = NBConfig()
    srs: SRSParams = SRSParams()

    @validator("skip")
    def skip_non_negative(cls, skip):  # noqa: N805
        if skip < 0:
            raise ValueError("skip rule cannot be negative")
        return skip

    @validator("stake")
    def stake_positive(cls, stake):  # noqa: N805
        if stake <= 0:
            raise ValueError("stake must be positive")
        return stake
