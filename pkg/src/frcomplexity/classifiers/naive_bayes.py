"""Multinomial naive Bayes over non-negative (fractional) feature values."""
from __future__ import annotations

import numpy as np

from ..errors import TrainingError, ValidationError


def _check(X, y=None):
    X = np.asarray(X, dtype=float)
    if X.ndim != 2:
        raise ValidationError("expected a 2-D feature matrix")
    if np.any(X < 0):
        raise ValidationError("multinomial naive Bayes needs non-negative features")
    if y is not None:
        y = np.asarray(y, dtype=int)
        if y.shape != (X.shape[0],):
            raise ValidationError("labels do not match rows")
    return X, y


def fit_naive_bayes(X, y, alpha: float = 1.0, n_classes: int | None = None) -> dict:
    """Return ``{"log_prior": (k,), "log_theta": (k, d)}`` as numpy arrays."""
    X, y = _check(X, y)
    if not alpha > 0:
        raise ValidationError("alpha must be > 0")
    k = int(y.max()) + 1 if n_classes is None else n_classes
    d = X.shape[1]
    counts = np.bincount(y, minlength=k)
    if len(counts) > k or np.any(counts == 0):
        empty = [c for c in range(k) if c >= len(counts) or counts[c] == 0]
        raise TrainingError(f"no training examples for class(es) {empty}")
    sums = np.zeros((k, d))
    np.add.at(sums, y, X)
    log_theta = np.log(sums + alpha) - np.log(sums.sum(axis=1, keepdims=True) + alpha * d)
    log_prior = np.log(counts / counts.sum())
    return {"log_prior": log_prior, "log_theta": log_theta}


def nb_log_scores(params, X) -> np.ndarray:
    """Unnormalized log posteriors, one column per class."""
    X, _ = _check(X)
    theta = np.asarray(params["log_theta"], dtype=float)
    return np.asarray(params["log_prior"], dtype=float) + X @ theta.T


def predict_naive_bayes(params, X) -> np.ndarray:
    return np.argmax(nb_log_scores(params, X), axis=1)
