"""Stratified k-fold grid search with in-fold normalization."""
from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass, field

import numpy as np

from ..errors import ValidationError
from . import tree
from .evaluation import accuracy_rmse
from .model import LABEL_COUNT, fit_model, resolve_kind
from .normalizer import Normalizer

DEPTHS = tuple(range(3, 13)) + (None,)
DEFAULT_GRIDS = {
    "baseline": [{}],
    "naive_bayes": [{"alpha": a} for a in (0.01, 0.1, 0.5, 1.0, 2.0)],
    "logistic_regression": [{"l2_strength": s} for s in (0.01, 0.1, 1.0, 10.0, 100.0)],
    "decision_tree": [{"max_depth": d, "criterion": c}
                      for c in tree.CRITERIA for d in DEPTHS],
    "random_forest": [{"n_trees": n, "max_depth": d, "criterion": c}
                      for n in (100, 300, 500, 1244) for c in tree.CRITERIA for d in DEPTHS],
}


@dataclass
class SearchResult:
    kind: str
    best: dict
    table: list = field(default_factory=list)   # one row per configuration
    folds: int = 0

    @property
    def best_row(self) -> dict:
        return next(r for r in self.table if r["params"] == self.best)

    def to_dict(self) -> dict:
        return {"kind": self.kind, "best": self.best, "folds": self.folds,
                "best_accuracy": self.best_row["accuracy"],
                "best_rmse": self.best_row["rmse"], "table": self.table}


def stratified_folds(y, k: int, seed: int = 42) -> list[np.ndarray]:
    """Test-index arrays of k stratified folds.

    Each class is shuffled and dealt round-robin, continuing from where the
    previous class stopped so fold sizes stay balanced.
    """
    y = np.asarray(y, dtype=int)
    if k < 2:
        raise ValidationError("need at least 2 folds")
    counts = np.bincount(y)
    smallest = int(counts[counts > 0].min())
    if smallest < k:
        if smallest < 2:
            raise ValidationError("every class needs at least 2 members for cross-validation")
        warnings.warn(f"smallest class has {smallest} members; using {smallest} folds")
        k = smallest
    rng = np.random.default_rng(seed)
    folds = [[] for _ in range(k)]
    offset = 0
    for c in np.flatnonzero(counts):
        members = rng.permutation(np.flatnonzero(y == c))
        for j, idx in enumerate(members):
            folds[(offset + j) % k].append(int(idx))
        offset = (offset + len(members)) % k
    return [np.sort(np.asarray(f, dtype=int)) for f in folds]


def _fold_predictions(kind, grid, Xtr, ytr, Xte, seed, n_classes, feature_names):
    """Predictions on the validation fold for every grid entry."""
    if kind in ("decision_tree", "random_forest"):
        norm = Normalizer.fit(Xtr)
        Ztr, Zte = norm.transform(Xtr), norm.transform(Xte)
        out = []
        fitted = {}
        for params in grid:
            crit = params.get("criterion", "gini")
            if crit not in fitted:
                if kind == "decision_tree":
                    fitted[crit] = [tree.build_tree(Ztr, ytr, n_classes, crit)]
                else:
                    n_max = max(p["n_trees"] for p in grid if p.get("criterion", "gini") == crit)
                    fitted[crit] = tree.build_forest(Ztr, ytr, n_classes, n_max, crit,
                                                     None, seed)
            trees = fitted[crit]
            if kind == "decision_tree":
                out.append(trees[0].predict(Zte, params.get("max_depth")))
            else:
                out.append(tree.predict_forest(trees, Zte, n_classes, params.get("max_depth"),
                                               params["n_trees"]))
        return out
    return [fit_model(kind, Xtr, ytr, feature_names, params, seed, n_classes).predict(Xte)
            for params in grid]


def grid_search_cv(X, y, kind: str, grid=None, k_folds: int = 5, seed: int = 42,
                   feature_names=None, n_classes: int = LABEL_COUNT) -> SearchResult:
    kind = resolve_kind(kind)
    grid = DEFAULT_GRIDS[kind] if grid is None else list(grid)
    if not grid:
        raise ValidationError("empty hyperparameter grid")
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=int)
    if feature_names is None:
        feature_names = tuple(f"f{i}" for i in range(X.shape[1]))
    folds = stratified_folds(y, k_folds, seed)
    accs = np.zeros((len(grid), len(folds)))
    rmses = np.zeros_like(accs)
    everything = np.arange(len(y))
    for f, test_idx in enumerate(folds):
        train_idx = np.setdiff1d(everything, test_idx)
        preds = _fold_predictions(kind, grid, X[train_idx], y[train_idx], X[test_idx],
                                  seed, n_classes, feature_names)
        for g, p in enumerate(preds):
            accs[g, f], rmses[g, f] = accuracy_rmse(y[test_idx], p)
    table = [{"params": dict(params), "accuracy": float(accs[g].mean()),
              "rmse": float(rmses[g].mean()), "fold_accuracy": accs[g].tolist(),
              "fold_rmse": rmses[g].tolist()} for g, params in enumerate(grid)]
    # highest accuracy, then lowest RMSE, then grid order
    best = min(range(len(grid)), key=lambda g: (-table[g]["accuracy"], table[g]["rmse"], g))
    return SearchResult(kind, dict(grid[best]), table, len(folds))


def grid_product(**axes) -> list[dict]:
    keys = list(axes)
    return [dict(zip(keys, combo)) for combo in itertools.product(*(axes[k] for k in keys))]
