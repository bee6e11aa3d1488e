from typing import Dict, List

from pickem.exceptions import ConfigError
from pickem.models.features import RecencyWeights
from pickem.models.prediction import KPParams, SRSParams
from pickem.models.season_config import (
    DataFiles,
    FeatureConfig,
    NBConfig,
    PredictorSpec,
    SeasonConfig,
)
from pickem.params.schemas import SCHEMAS, SportSchema
from pickem.params.static import PredictorKind
from pickem.settings import _Settings

EXTERNAL_PICKS_SUFFIX = ".csv"


def init_season_config(settings: _Settings) -> SeasonConfig:
    try:
        sport = _sport_schema(settings)

        return SeasonConfig(
            sport=sport.name,
            phase_boundary=settings.get("season/phase_boundary") or None,
            skip=settings.get("season/skip"),
            skip_unit=settings.get("season/skip_unit"),
            stake=settings.get("season/stake"),
            data=DataFiles(
                schedule=settings.get("data/schedule"),
                lines=settings.get("data/lines"),
                game_log=settings.get("data/game_log"),
                team_names=settings.get("data/team_names"),
            ),
            features=FeatureConfig(
                sport=sport,
                weights=RecencyWeights(
                    scheme=settings.get("features/recency_scheme"),
                    parameter=settings.get("features/recency_parameter"),
                ),
                tolerance=settings.get("features/tolerance"),
                max_iterations=settings.get("features/max_iterations"),
                adjusted_stats=settings.get("features/adjusted_stats"),
            ),
            predictors=_predictor_specs(settings),
            kp=KPParams(
                pyth_exponent=settings.get("kp/pyth_exponent"),
                home_advantage=settings.get("kp/home_advantage"),
            ),
            nb=NBConfig(
                kernel=settings.get("nb/kernel"),
                representations=settings.get("nb/representations"),
                stats=settings.get("nb/stats"),
            ),
            srs=SRSParams(home_bonus=settings.get("srs/home_bonus")),
        )
    except ValueError as e:
        raise ConfigError(f"{settings.filename}: {e}") from e


def _sport_schema(settings: _Settings) -> SportSchema:
    name = settings.get("season/sport").strip().lower()
    if name not in SCHEMAS:
        raise ConfigError(
            f"unknown sport {name!r}, expected one of {', '.join(sorted(SCHEMAS))}"
        )

    schema = SCHEMAS[name]
    stats = settings.get("schema/stats") or schema.stats
    possessions = _possessions(settings.get("schema/possessions")) or schema.possessions
    target = settings.get("schema/normalization_target") or schema.normalization_target

    return SportSchema(
        name=name, stats=stats, possessions=possessions, normalization_target=target
    )


def _possessions(items: List[str]) -> Dict[str, float]:
    """`stat:coefficient` pairs."""
    possessions = {}
    for item in items:
        stat, sep, coef = item.partition(":")
        if not sep:
            raise ValueError(f"possession term {item!r} is not stat:coefficient")
        possessions[stat.strip()] = float(coef)
    return possessions


def _predictor_specs(settings: _Settings) -> List[PredictorSpec]:
    specs = []
    for name in settings.get("predictors/enabled"):
        kind = PredictorKind(name.lower())
        if kind == PredictorKind.EXTERNAL:
            raise ValueError("external predictors are listed under predictors/external")
        specs.append(PredictorSpec(name=kind.value, kind=kind))

    # an empty value means the config file directory
    picks_dir = settings.get("data/external_picks_dir") or settings.base_dir
    for name in settings.get("predictors/external"):
        specs.append(
            PredictorSpec(
                name=name,
                kind=PredictorKind.EXTERNAL,
                picks_file=picks_dir / f"{name}{EXTERNAL_PICKS_SUFFIX}",
            )
        )

    names = [s.name for s in specs]
    duplicates = sorted({n for n in names if names.count(n) > 1})
    if duplicates:
        raise ValueError(f"predictor names used twice: {', '.join(duplicates)}")

    return specs
