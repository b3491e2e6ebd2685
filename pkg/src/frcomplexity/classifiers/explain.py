"""Per-model explanations: strong coefficients, extreme likelihoods, importances."""
from __future__ import annotations

import math

import numpy as np

from . import baseline, tree

STRONG_COEFFICIENT = 0.1


def _decile_bounds(values):
    flat = np.sort(np.asarray(values, dtype=float).ravel())
    n = flat.size
    lo = flat[max(1, math.ceil(0.1 * n)) - 1]
    hi = flat[max(1, math.ceil(0.9 * n)) - 1]
    return lo, hi


def explain(model) -> dict:
    names = list(model.feature_names)
    out = {"kind": model.kind}
    if model.kind == "baseline":
        out["thresholds"] = baseline.threshold_table()
        return out
    p = model.parameters
    if model.kind == "logistic_regression":
        W = np.asarray(p["weights"])
        classes = []
        for c in range(W.shape[1]):
            w = W[:, c]
            classes.append({
                "label": c,
                "bias": float(p["bias"][c]),
                "strong_positive": [{"feature": names[j], "weight": float(w[j])}
                                    for j in np.argsort(-w, kind="stable") if w[j] > STRONG_COEFFICIENT],
                "strong_negative": [{"feature": names[j], "weight": float(w[j])}
                                    for j in np.argsort(w, kind="stable") if w[j] < -STRONG_COEFFICIENT],
            })
        out["threshold"] = STRONG_COEFFICIENT
        out["classes"] = classes
    elif model.kind == "naive_bayes":
        theta = np.asarray(p["log_theta"])
        lo, hi = _decile_bounds(theta)
        out["low_cutoff"], out["high_cutoff"] = float(lo), float(hi)
        out["classes"] = [{
            "label": c,
            "log_prior": float(p["log_prior"][c]),
            "high": [names[j] for j in range(len(names)) if theta[c, j] >= hi],
            "low": [names[j] for j in range(len(names)) if theta[c, j] <= lo],
            "log_probabilities": dict(zip(names, theta[c].tolist())),
        } for c in range(theta.shape[0])]
    else:
        trees = model._trees()
        if model.kind == "decision_tree":
            imp = trees[0].importances(len(names))
        else:
            imp = tree.forest_importances(trees, len(names))
        out["importances"] = {names[j]: float(imp[j]) for j in np.argsort(-imp, kind="stable")
                              if imp[j] > 0}
        out["features_used"] = int(np.count_nonzero(imp))
    return out
