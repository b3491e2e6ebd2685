"""Readability-formula baseline: Kandel-Moles score bands mapped to levels."""
from __future__ import annotations

import numpy as np

# (lower bound, label, description); a score falls in the first band whose
# lower bound it reaches. Scores above 100 are clamped to 100.
KM_BANDS = (
    (90.0, 0, "Very easy"),
    (80.0, 1, "Easy"),
    (70.0, 2, "Fairly easy"),
    (60.0, 3, "Standard"),
    (50.0, 4, "Fairly difficult"),
    (30.0, 5, "Difficult"),
    (0.0, 6, "Very difficult"),
)
BELOW_ZERO_LABEL = 7


def baseline_label(km_score: float) -> int:
    score = min(float(km_score), 100.0)
    for lower, label, _ in KM_BANDS:
        if score >= lower:
            return label
    return BELOW_ZERO_LABEL


def baseline_predict(vec) -> int:
    """Level for a feature vector (anything indexable by ``"KM_score"``)."""
    return baseline_label(vec["KM_score"])


def predict_scores(km_scores) -> np.ndarray:
    return np.array([baseline_label(s) for s in np.asarray(km_scores, dtype=float)], dtype=int)


def threshold_table() -> list[dict]:
    rows = []
    upper = 100.0
    for lower, label, desc in KM_BANDS:
        rows.append({"label": label, "min": lower, "max": upper, "description": desc})
        upper = lower
    rows.append({"label": BELOW_ZERO_LABEL, "min": None, "max": 0.0,
                 "description": "Below zero"})
    return rows
