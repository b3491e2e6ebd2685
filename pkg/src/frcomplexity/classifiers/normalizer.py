"""Min-max scaling fitted on training rows, clamped to [0, 1]."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import ValidationError


@dataclass(frozen=True)
class Normalizer:
    mins: tuple
    maxs: tuple

    @classmethod
    def fit(cls, X) -> "Normalizer":
        X = np.asarray(X, dtype=float)
        if X.ndim != 2 or X.shape[0] == 0:
            raise ValidationError("normalizer needs a non-empty 2-D matrix")
        return cls(tuple(X.min(axis=0).tolist()), tuple(X.max(axis=0).tolist()))

    def transform(self, X) -> np.ndarray:
        X = np.asarray(X, dtype=float)
        lo = np.asarray(self.mins)
        hi = np.asarray(self.maxs)
        span = hi - lo
        safe = np.where(span > 0, span, 1.0)
        out = np.where(span > 0, (X - lo) / safe, 0.0)
        return np.clip(out, 0.0, 1.0)

    def to_dict(self) -> dict:
        return {"mins": list(self.mins), "maxs": list(self.maxs)}

    @classmethod
    def from_dict(cls, d) -> "Normalizer":
        return cls(tuple(float(v) for v in d["mins"]), tuple(float(v) for v in d["maxs"]))
