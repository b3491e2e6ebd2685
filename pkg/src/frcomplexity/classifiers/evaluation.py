"""Accuracy / RMSE reports and the grouped blind test."""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field

import numpy as np

from ..errors import ValidationError


@dataclass
class EvaluationReport:
    accuracy: float
    rmse: float
    per_document: list = field(default_factory=list)  # (id, true, predicted)
    correlation_to_expected: float | None = None

    def to_dict(self) -> dict:
        d = asdict(self)
        d["per_document"] = [{"id": i, "true": t, "predicted": p} for i, t, p in self.per_document]
        return d


@dataclass
class BlindTestReport:
    groups: list            # [{"group", "expected_min", "expected_max", "midpoint", "mean_prediction", "n"}]
    correlation: float
    degenerate: bool

    def to_dict(self) -> dict:
        return asdict(self)


def accuracy_rmse(y_true, y_pred) -> tuple[float, float]:
    t = np.asarray(y_true, dtype=int)
    p = np.asarray(y_pred, dtype=int)
    if t.size == 0:
        raise ValidationError("cannot score an empty set")
    acc = float(np.mean(t == p))
    rmse = math.sqrt(float(np.mean((p - t) ** 2)))
    return acc, rmse


def evaluate(model, X, y, ids=None) -> EvaluationReport:
    y = [int(v) for v in y]
    if not y:
        raise ValidationError("test set is empty")
    ids = list(ids) if ids is not None else [str(i) for i in range(len(y))]
    pred = [int(v) for v in model.predict(X)]
    acc, rmse = accuracy_rmse(y, pred)
    return EvaluationReport(acc, rmse, list(zip(ids, y, pred)))


def pearson(x, y) -> tuple[float, bool]:
    """Pearson r; zero variance on either side gives (0.0, True)."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape or x.size < 2:
        raise ValidationError("pearson needs two equal-length sequences of length >= 2")
    dx = x - x.mean()
    dy = y - y.mean()
    sxx = float(dx @ dx)
    syy = float(dy @ dy)
    if sxx == 0.0 or syy == 0.0:
        return 0.0, True
    return float(dx @ dy) / math.sqrt(sxx * syy), False


def blind_test(model, groups) -> BlindTestReport:
    """``groups``: iterable of (name, (expected_min, expected_max), X rows)."""
    groups = list(groups)
    if len(groups) < 2:
        raise ValidationError("blind test needs at least two groups")
    rows = []
    for name, (lo, hi), X in groups:
        if len(X) == 0:
            raise ValidationError(f"blind-test group {name!r} has no documents")
        pred = model.predict(X)
        rows.append({"group": name, "expected_min": float(lo), "expected_max": float(hi),
                     "midpoint": (float(lo) + float(hi)) / 2,
                     "mean_prediction": float(np.mean(pred)), "n": int(len(pred))})
    r, degenerate = pearson([g["mean_prediction"] for g in rows], [g["midpoint"] for g in rows])
    return BlindTestReport(rows, r, degenerate)
