"""CART decision trees (gini / entropy) and bootstrap random forests.

Every node draws its random feature subset from a generator seeded by
(seed, tree index, path from the root). A tree grown with a depth limit is
therefore exactly the unlimited tree cut at that depth, and a forest of n
trees is exactly the first n trees of a larger forest with the same seed.
Cross-validation relies on this to score many depths and forest sizes from
a single fit.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..errors import ValidationError

CRITERIA = ("gini", "entropy")
_GAIN_EPS = 1e-12


@dataclass
class Tree:
    feature: np.ndarray    # -1 for leaves
    threshold: np.ndarray
    left: np.ndarray
    right: np.ndarray
    counts: np.ndarray     # (nodes, k) training class counts
    decrease: np.ndarray   # n_node * impurity decrease at split nodes
    depth: np.ndarray

    @property
    def n_nodes(self) -> int:
        return len(self.feature)

    @property
    def max_depth(self) -> int:
        return int(self.depth.max()) if self.n_nodes else 0

    def to_dict(self) -> dict:
        return {
            "feature": self.feature.tolist(),
            "threshold": self.threshold.tolist(),
            "left": self.left.tolist(),
            "right": self.right.tolist(),
            "counts": self.counts.tolist(),
            "decrease": self.decrease.tolist(),
            "depth": self.depth.tolist(),
        }

    @classmethod
    def from_dict(cls, d) -> "Tree":
        return cls(
            feature=np.asarray(d["feature"], dtype=int),
            threshold=np.asarray(d["threshold"], dtype=float),
            left=np.asarray(d["left"], dtype=int),
            right=np.asarray(d["right"], dtype=int),
            counts=np.asarray(d["counts"], dtype=float).reshape(len(d["feature"]), -1),
            decrease=np.asarray(d["decrease"], dtype=float),
            depth=np.asarray(d["depth"], dtype=int),
        )

    def apply(self, X, max_depth=None) -> np.ndarray:
        """Node reached by each row, stopping at ``max_depth`` if given."""
        X = np.asarray(X, dtype=float)
        node = np.zeros(X.shape[0], dtype=int)
        limit = math.inf if max_depth is None else max_depth
        rows = np.arange(X.shape[0])
        while True:
            f = self.feature[node]
            active = (f >= 0) & (self.depth[node] < limit)
            if not active.any():
                return node
            r, nd = rows[active], node[active]
            go_left = X[r, self.feature[nd]] <= self.threshold[nd]
            node[active] = np.where(go_left, self.left[nd], self.right[nd])

    def predict(self, X, max_depth=None) -> np.ndarray:
        # argmax picks the lowest label on ties
        return np.argmax(self.counts[self.apply(X, max_depth)], axis=1)

    def importances(self, n_features: int, max_depth=None) -> np.ndarray:
        imp = np.zeros(n_features)
        limit = math.inf if max_depth is None else max_depth
        for i in range(self.n_nodes):
            if self.feature[i] >= 0 and self.depth[i] < limit:
                imp[self.feature[i]] += self.decrease[i]
        total = imp.sum()
        return imp / total if total > 0 else imp


def _n_features(max_features, d) -> int:
    if max_features is None:
        return d
    if max_features == "sqrt":
        return max(1, int(math.isqrt(d)))
    m = int(max_features)
    if not 1 <= m <= d:
        raise ValidationError(f"max_features must be in [1, {d}]")
    return m


def _xlogx(c):
    c = np.asarray(c, dtype=float)
    return np.where(c > 0, c * np.log2(np.where(c > 0, c, 1.0)), 0.0)


def _best_split(Xn, yn_onehot, criterion):
    """(column, threshold, impurity decrease) of the best split, or None.

    Children are scored through n * weighted child impurity, which for
    integer class counts c is  n - sum(c^2)/n_child  (gini) or
    n_child*log2(n_child) - sum(c*log2 c)  (entropy), summed over both sides.
    """
    n = Xn.shape[0]
    order = np.argsort(Xn, axis=0, kind="stable")
    vals = np.take_along_axis(Xn, order, axis=0)
    left = np.cumsum(yn_onehot[order], axis=0)[:-1]       # (n-1, m, k)
    total = yn_onehot.sum(axis=0)
    right = total - left
    nl = np.arange(1, n, dtype=float)[:, None]
    nr = n - nl
    if criterion == "gini":
        parent = 1.0 - float(total @ total) / (n * n)
        child = n - (left * left).sum(axis=-1) / nl - (right * right).sum(axis=-1) / nr
    else:
        parent = (float(_xlogx(n)) - float(_xlogx(total).sum())) / n
        child = (_xlogx(nl) - _xlogx(left).sum(axis=-1)) + (_xlogx(nr) - _xlogx(right).sum(axis=-1))
    gain = parent - child / n
    gain[vals[:-1] >= vals[1:]] = -np.inf
    flat = gain.T.ravel()            # feature-major: first column wins ties
    best = int(np.argmax(flat))
    g = flat[best]
    if not np.isfinite(g) or g < -_GAIN_EPS:
        return None
    col, pos = divmod(best, n - 1)
    lo, hi = vals[pos, col], vals[pos + 1, col]
    thr = (lo + hi) / 2.0
    if not lo <= thr < hi:
        thr = lo
    return col, float(thr), max(float(g), 0.0)


def build_tree(X, y, n_classes: int, criterion: str = "gini", max_depth=None,
               max_features=None, seed: int = 0, tree_index: int = 0) -> Tree:
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=int)
    if criterion not in CRITERIA:
        raise ValidationError(f"criterion must be one of {CRITERIA}")
    if X.ndim != 2 or y.shape != (X.shape[0],):
        raise ValidationError("expected n x d features and n labels")
    if max_depth is not None and max_depth < 0:
        raise ValidationError("max_depth must be >= 0")
    n, d = X.shape
    m = _n_features(max_features, d)
    onehot = np.eye(n_classes, dtype=np.int64)[y]
    nodes = {"feature": [], "threshold": [], "left": [], "right": [],
             "counts": [], "decrease": [], "depth": []}

    def new_node(idx, depth):
        nodes["feature"].append(-1)
        nodes["threshold"].append(0.0)
        nodes["left"].append(-1)
        nodes["right"].append(-1)
        nodes["counts"].append(np.bincount(y[idx], minlength=n_classes))
        nodes["decrease"].append(0.0)
        nodes["depth"].append(depth)
        return len(nodes["feature"]) - 1

    root = new_node(np.arange(n), 0)
    stack = [(root, np.arange(n), ())]
    while stack:
        nid, idx, path = stack.pop()
        depth = len(path)
        counts = nodes["counts"][nid]
        if (max_depth is not None and depth >= max_depth) or len(idx) < 2 \
                or counts.max() == len(idx):
            continue
        if m < d:
            rng = np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(tree_index, 1) + path))
            feats = np.sort(rng.choice(d, size=m, replace=False))
        else:
            feats = np.arange(d)
        found = _best_split(X[idx][:, feats], onehot[idx], criterion)
        if found is None:
            continue
        col, thr, gain = found
        f = int(feats[col])
        mask = X[idx, f] <= thr
        left_idx, right_idx = idx[mask], idx[~mask]
        nodes["feature"][nid] = f
        nodes["threshold"][nid] = thr
        nodes["decrease"][nid] = gain * len(idx)
        li = new_node(left_idx, depth + 1)
        ri = new_node(right_idx, depth + 1)
        nodes["left"][nid], nodes["right"][nid] = li, ri
        stack.append((ri, right_idx, path + (1,)))
        stack.append((li, left_idx, path + (0,)))

    return Tree(
        feature=np.asarray(nodes["feature"], dtype=int),
        threshold=np.asarray(nodes["threshold"], dtype=float),
        left=np.asarray(nodes["left"], dtype=int),
        right=np.asarray(nodes["right"], dtype=int),
        counts=np.asarray(nodes["counts"], dtype=float).reshape(-1, n_classes),
        decrease=np.asarray(nodes["decrease"], dtype=float),
        depth=np.asarray(nodes["depth"], dtype=int),
    )


def build_forest(X, y, n_classes: int, n_trees: int = 100, criterion: str = "gini",
                 max_depth=None, seed: int = 42, max_features="sqrt",
                 bootstrap: bool = True) -> list[Tree]:
    if n_trees < 1:
        raise ValidationError("n_trees must be >= 1")
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=int)
    n = X.shape[0]
    trees = []
    for t in range(n_trees):
        if bootstrap:
            rng = np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(t,)))
            rows = rng.integers(0, n, size=n)
        else:
            rows = np.arange(n)
        trees.append(build_tree(X[rows], y[rows], n_classes, criterion, max_depth,
                                max_features, seed=seed, tree_index=t))
    return trees


def forest_votes(trees, X, n_classes: int, max_depth=None, n_trees=None) -> np.ndarray:
    X = np.asarray(X, dtype=float)
    votes = np.zeros((X.shape[0], n_classes), dtype=int)
    rows = np.arange(X.shape[0])
    for tree in trees[:n_trees]:
        votes[rows, tree.predict(X, max_depth)] += 1
    return votes


def predict_forest(trees, X, n_classes: int, max_depth=None, n_trees=None) -> np.ndarray:
    return np.argmax(forest_votes(trees, X, n_classes, max_depth, n_trees), axis=1)


def forest_importances(trees, n_features: int, max_depth=None) -> np.ndarray:
    imp = np.mean([t.importances(n_features, max_depth) for t in trees], axis=0)
    total = imp.sum()
    return imp / total if total > 0 else imp
