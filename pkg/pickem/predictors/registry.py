from types import MappingProxyType
from typing import Type

from pickem.models.season_config import PredictorSpec
from pickem.params.static import PredictorKind
from pickem.predictors.base import PredictorBase, PredictorContext
from pickem.predictors.external import ExternalPredictor
from pickem.predictors.home import HomePredictor
from pickem.predictors.kp import KPPredictor
from pickem.predictors.naive_bayes import NBPredictor
from pickem.predictors.srs import SRSPredictor

PREDICTOR_MAP = MappingProxyType(
    {
        PredictorKind.KP: KPPredictor,
        PredictorKind.NB: NBPredictor,
        PredictorKind.SRS: SRSPredictor,
        PredictorKind.HOME: HomePredictor,
        PredictorKind.EXTERNAL: ExternalPredictor,
    }
)


def create_predictor(spec: PredictorSpec, context: PredictorContext) -> PredictorBase:
    predictor_cls: Type[PredictorBase] = PREDICTOR_MAP[spec.kind]
    return predictor_cls(spec, context)
