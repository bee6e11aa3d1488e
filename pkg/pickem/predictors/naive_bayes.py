"""Naive Bayes over team representations.

Each feature gets a per-class density: one Gaussian, or (kernel mode) an
equal-weight mixture of Gaussians centred on every training value of that
class. Posteriors are accumulated in the log domain.
"""
from dataclasses import dataclass
from datetime import date
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np
from scipy.special import logsumexp
from scipy.stats import norm

from pickem.exceptions import (
    MissingClassError,
    MissingRepresentationError,
    SchemaMismatchError,
)
from pickem.features.averages import ALLOWED_SUFFIX
from pickem.models.match import Fixture, Game
from pickem.models.prediction import Prediction
from pickem.params.static import Side
from pickem.predictors.base import PredictorBase, pick_by_probability

BANDWIDTH_FLOOR = 1e-6
FLAT_BANDWIDTH = 1.0


@dataclass(frozen=True)
class NBModel:
    labels: Tuple[str, ...]
    feature_names: Tuple[str, ...]
    log_priors: np.ndarray
    kernel: bool
    # gaussian: (n_labels, n_features) each
    means: Optional[np.ndarray] = None
    stds: Optional[np.ndarray] = None
    # kernel: one (n_rows, n_features) array per label, shared bandwidths
    centers: Optional[Tuple[np.ndarray, ...]] = None
    bandwidths: Optional[np.ndarray] = None

    @property
    def priors(self) -> np.ndarray:
        return np.exp(self.log_priors)


def nb_train(
    X,
    y: Sequence[str],
    feature_names: Sequence[str],
    kernel: bool = True,
    labels: Optional[Sequence[str]] = None,
) -> NBModel:
    X = np.asarray(X, dtype=float)
    y = np.asarray(y)

    if X.ndim != 2 or X.shape[1] != len(feature_names) or len(X) != len(y):
        raise SchemaMismatchError(
            f"training rows {X.shape} do not match {len(feature_names)} features"
            f" and {len(y)} labels"
        )

    labels = tuple(labels) if labels is not None else tuple(sorted(set(y)))
    if not labels:
        raise MissingClassError("no training rows")

    counts = np.array([np.sum(y == label) for label in labels], dtype=float)
    absent = [label for label, n in zip(labels, counts) if n == 0]
    if absent:
        raise MissingClassError(f"no training rows for class {', '.join(absent)}")

    feature_range = np.ptp(X, axis=0)
    log_priors = np.log(counts / counts.sum())
    by_label = tuple(X[y == label] for label in labels)

    common = dict(
        labels=labels,
        feature_names=tuple(feature_names),
        log_priors=log_priors,
        kernel=kernel,
    )

    if kernel:
        n_distinct = np.array([len(np.unique(col)) for col in X.T], dtype=float)
        bandwidths = _floored(feature_range / n_distinct, feature_range)
        return NBModel(centers=by_label, bandwidths=bandwidths, **common)

    means = np.array([rows.mean(axis=0) for rows in by_label])
    stds = np.array([_floored(rows.std(axis=0), feature_range) for rows in by_label])
    return NBModel(means=means, stds=stds, **common)


def _floored(spread: np.ndarray, feature_range: np.ndarray) -> np.ndarray:
    floor = np.where(feature_range > 0, BANDWIDTH_FLOOR * feature_range, FLAT_BANDWIDTH)
    return np.maximum(spread, floor)


def nb_log_posterior(model: NBModel, x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if x.shape != (len(model.feature_names),):
        raise SchemaMismatchError(
            f"expected {len(model.feature_names)} features, got {x.shape}"
        )

    if model.kernel:
        log_likelihood = np.array(
            [
                np.sum(
                    logsumexp(norm.logpdf(x, loc=rows, scale=model.bandwidths), axis=0)
                    - np.log(len(rows))
                )
                for rows in model.centers
            ]
        )
    else:
        log_likelihood = norm.logpdf(x, loc=model.means, scale=model.stds).sum(axis=1)

    joint = model.log_priors + log_likelihood
    return joint - logsumexp(joint)


def nb_posterior(model: NBModel, x) -> Dict[str, float]:
    posterior = np.exp(nb_log_posterior(model, x))
    return {label: float(p) for label, p in zip(model.labels, posterior)}


def nb_predict(
    model: NBModel, fixture: Fixture, features: Mapping[str, float]
) -> Prediction:
    """Labels are sides: "home" or "away"."""
    if set(features) != set(model.feature_names):
        missing = sorted(set(model.feature_names) - set(features))
        extra = sorted(set(features) - set(model.feature_names))
        raise SchemaMismatchError(f"features missing {missing}, unexpected {extra}")

    posterior = nb_posterior(model, [features[n] for n in model.feature_names])

    return pick_by_probability(fixture, posterior[Side.HOME.value])


class NBPredictor(PredictorBase):
    """Retrained every betting day on all completed games before that day."""

    LABELS = (Side.AWAY.value, Side.HOME.value)

    def __init__(self, spec, context):
        super().__init__(spec, context)

        self._nb = context.config.nb
        self._examples: Dict[Tuple[date, str, str], Optional[Dict[str, float]]] = {}

    def predict_day(self, day: date, fixtures: Sequence[Fixture]) -> List[Prediction]:
        model = self.train(day)

        return [
            nb_predict(model, f, self.features(f.home_team, f.away_team, day))
            for f in fixtures
        ]

    def train(self, day: date) -> NBModel:
        rows, labels = [], []
        for game in self._ctx.builder.games_before(day):
            if game.home_won is None:
                continue

            example = self._example(game)
            if example is None:
                continue

            rows.append(example)
            labels.append(Side.HOME.value if game.home_won else Side.AWAY.value)

        if not rows:
            raise MissingClassError(f"no training games before {day}")

        names = sorted(rows[0])
        self._log.debug(f"Training on {len(rows)} games before {day}")

        return nb_train(
            [[row[n] for n in names] for row in rows],
            labels,
            names,
            kernel=self._nb.kernel,
            labels=self.LABELS,
        )

    def features(self, home: str, away: str, as_of: date) -> Dict[str, float]:
        features = {}
        for side, team in ((Side.HOME, home), (Side.AWAY, away)):
            for kind in self._nb.representations:
                rep = self._ctx.builder.representation(team, kind, as_of)
                for name, value in rep.features.items():
                    if self._selected(name):
                        features[f"{side.value}.{kind.value}.{name}"] = value
        return features

    def _selected(self, name: str) -> bool:
        if not self._nb.stats:
            return True
        base = name[: -len(ALLOWED_SUFFIX)] if name.endswith(ALLOWED_SUFFIX) else name
        return base in self._nb.stats

    def _example(self, game: Game) -> Optional[Dict[str, float]]:
        key = (game.date, game.home.team, game.away.team)
        if key not in self._examples:
            try:
                self._examples[key] = self.features(
                    game.home.team, game.away.team, game.date
                )
            except MissingRepresentationError:
                # first games of a team have nothing before them
                self._examples[key] = None
        return self._examples[key]
