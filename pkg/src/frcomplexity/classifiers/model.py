"""Trained-model container: fitting, prediction and JSON serialization."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from ..errors import LoadError, ValidationError
from . import baseline, logistic, naive_bayes, tree
from .normalizer import Normalizer

MODEL_SCHEMA_VERSION = 1
LABEL_COUNT = 8
KINDS = ("baseline", "decision_tree", "random_forest", "logistic_regression", "naive_bayes")
SHORT_NAMES = {"baseline": "baseline", "dt": "decision_tree", "rf": "random_forest",
               "lr": "logistic_regression", "nb": "naive_bayes"}

DEFAULT_HYPERPARAMETERS = {
    "baseline": {},
    "naive_bayes": {"alpha": 1.0},
    "logistic_regression": {"l2_strength": 1.0, "epochs": logistic.EPOCHS,
                            "learning_rate": logistic.LEARNING_RATE},
    "decision_tree": {"criterion": "gini", "max_depth": None},
    "random_forest": {"n_trees": 100, "criterion": "gini", "max_depth": None},
}


def resolve_kind(name: str) -> str:
    kind = SHORT_NAMES.get(name, name)
    if kind not in KINDS:
        raise ValidationError(f"unknown model kind {name!r}")
    return kind


@dataclass
class TrainedModel:
    kind: str
    hyperparameters: dict
    normalizer: Normalizer | None
    parameters: dict
    feature_names: tuple
    label_count: int = LABEL_COUNT
    schema_version: int = MODEL_SCHEMA_VERSION
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def _matrix(self, X) -> np.ndarray:
        if len(X) and hasattr(X[0], "values") and isinstance(X[0].values, dict):
            X = [[v.values[name] for name in self.feature_names] for v in X]
        X = np.asarray(X, dtype=float)
        if X.ndim == 1:
            X = X[None, :]
        if X.shape[1] != len(self.feature_names):
            raise ValidationError(f"expected {len(self.feature_names)} features, got {X.shape[1]}")
        return X

    def _trees(self):
        if "trees" not in self._cache:
            if self.kind == "decision_tree":
                self._cache["trees"] = [tree.Tree.from_dict(self.parameters["tree"])]
            else:
                self._cache["trees"] = [tree.Tree.from_dict(t) for t in self.parameters["trees"]]
        return self._cache["trees"]

    def predict(self, X) -> np.ndarray:
        """Integer level for each row (rows may be FeatureVectors)."""
        X = self._matrix(X)
        if self.kind == "baseline":
            return baseline.predict_scores(X[:, self.feature_names.index("KM_score")])
        Z = self.normalizer.transform(X)
        if self.kind == "naive_bayes":
            return naive_bayes.predict_naive_bayes(self.parameters, Z)
        if self.kind == "logistic_regression":
            return logistic.predict_logistic(self.parameters, Z)
        if self.kind == "decision_tree":
            return self._trees()[0].predict(Z)
        return tree.predict_forest(self._trees(), Z, self.label_count)

    def scores(self, X) -> np.ndarray:
        """Per-class scores for the linear models (log posteriors / logits)."""
        Z = self.normalizer.transform(self._matrix(X))
        if self.kind == "naive_bayes":
            return naive_bayes.nb_log_scores(self.parameters, Z)
        if self.kind == "logistic_regression":
            return logistic.lr_scores(self.parameters, Z)
        raise ValidationError(f"{self.kind} has no class scores")

    def to_dict(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "kind": self.kind,
            "label_count": self.label_count,
            "feature_names": list(self.feature_names),
            "hyperparameters": self.hyperparameters,
            "normalizer": self.normalizer.to_dict() if self.normalizer else None,
            "parameters": self.parameters,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, sort_keys=True,
                          separators=(",", ":")) + "\n"

    @classmethod
    def from_dict(cls, d) -> "TrainedModel":
        try:
            if d["schema_version"] != MODEL_SCHEMA_VERSION:
                raise LoadError(f"unsupported model schema version {d['schema_version']}")
            kind = resolve_kind(d["kind"])
            norm = Normalizer.from_dict(d["normalizer"]) if d["normalizer"] else None
            return cls(kind, d["hyperparameters"], norm, d["parameters"],
                       tuple(d["feature_names"]), int(d["label_count"]))
        except (KeyError, TypeError) as exc:
            raise LoadError(f"malformed model document: {exc}") from exc

    @classmethod
    def from_json(cls, text: str) -> "TrainedModel":
        try:
            return cls.from_dict(json.loads(text))
        except json.JSONDecodeError as exc:
            raise LoadError(f"model file is not valid JSON: {exc}") from exc

    def save(self, path) -> None:
        Path(path).write_text(self.to_json(), encoding="utf-8")

    @classmethod
    def load(cls, path) -> "TrainedModel":
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as exc:
            raise LoadError(f"cannot read model {path}: {exc}") from exc
        return cls.from_json(text)


def _plain(params: dict) -> dict:
    return {k: (v.tolist() if isinstance(v, np.ndarray) else v) for k, v in params.items()}


def fit_model(kind: str, X, y, feature_names, hyperparameters=None, seed: int = 42,
              label_count: int = LABEL_COUNT) -> TrainedModel:
    """Fit the normalizer and the classifier on raw feature rows."""
    kind = resolve_kind(kind)
    hp = dict(DEFAULT_HYPERPARAMETERS[kind])
    hp.update(hyperparameters or {})
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=int)
    feature_names = tuple(feature_names)
    if X.ndim != 2 or X.shape[0] == 0 or X.shape[1] != len(feature_names):
        raise ValidationError("training matrix must be n x len(feature_names), n > 0")
    if y.shape != (X.shape[0],) or y.min() < 0 or y.max() >= label_count:
        raise ValidationError(f"labels must be integers in [0, {label_count - 1}]")
    if kind == "baseline":
        if "KM_score" not in feature_names:
            raise ValidationError("baseline needs a KM_score feature")
        return TrainedModel(kind, {}, None, {"thresholds": baseline.threshold_table()},
                            feature_names, label_count)
    norm = Normalizer.fit(X)
    Z = norm.transform(X)
    if kind == "naive_bayes":
        params = _plain(naive_bayes.fit_naive_bayes(Z, y, hp["alpha"], label_count))
    elif kind == "logistic_regression":
        params = _plain(logistic.fit_logistic(Z, y, hp["l2_strength"], label_count,
                                              hp["epochs"], hp["learning_rate"], seed))
    elif kind == "decision_tree":
        params = {"tree": tree.build_tree(Z, y, label_count, hp["criterion"],
                                          hp["max_depth"]).to_dict()}
    else:
        hp["seed"] = seed
        trees = tree.build_forest(Z, y, label_count, hp["n_trees"], hp["criterion"],
                                  hp["max_depth"], seed)
        params = {"trees": [t.to_dict() for t in trees]}
    return TrainedModel(kind, hp, norm, params, feature_names, label_count)
