"""One-vs-rest L2 logistic regression trained by full-batch gradient descent."""
from __future__ import annotations

import numpy as np

from ..errors import TrainingError, ValidationError

LEARNING_RATE = 0.1
EPOCHS = 5000
TOLERANCE = 1e-8


def _sigmoid(z):
    return 0.5 * (1.0 + np.tanh(0.5 * z))


def loss_and_grad(W, b, X, Y, strength: float):
    """Summed one-vs-rest loss and its gradient.

    Per class: mean binary cross-entropy + strength / (2n) * ||w||^2.
    The bias is not penalized.
    """
    n = X.shape[0]
    Z = X @ W + b
    P = _sigmoid(Z)
    # log(1 + e^z) - y z, computed stably
    bce = np.logaddexp(0.0, Z) - Y * Z
    loss = bce.sum() / n + strength / (2 * n) * np.sum(W * W)
    R = (P - Y) / n
    return loss, X.T @ R + strength / n * W, R.sum(axis=0)


def fit_logistic(X, y, strength: float = 1.0, n_classes: int | None = None,
                 epochs: int = EPOCHS, learning_rate: float = LEARNING_RATE,
                 seed: int = 42, tol: float = TOLERANCE) -> dict:
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=int)
    if X.ndim != 2 or y.shape != (X.shape[0],) or X.shape[0] == 0:
        raise ValidationError("expected n x d features and n labels, n > 0")
    if strength < 0:
        raise ValidationError("l2 strength must be >= 0")
    k = int(y.max()) + 1 if n_classes is None else n_classes
    n, d = X.shape
    Y = np.eye(k)[y]
    rng = np.random.default_rng(seed)
    W = rng.normal(0.0, 0.01, size=(d, k))
    b = np.zeros(k)
    shrink = 1.0 + learning_rate * strength / n
    prev = np.inf
    for epoch in range(epochs):
        with np.errstate(invalid="ignore", over="ignore"):
            loss, _, gb = loss_and_grad(W, b, X, Y, strength)
        if not np.isfinite(loss):
            raise TrainingError(f"non-finite loss at epoch {epoch} "
                                f"(strength={strength}, lr={learning_rate})")
        if abs(prev - loss) < tol:
            break
        prev = loss
        R = (_sigmoid(X @ W + b) - Y) / n
        # proximal step for the L2 term keeps large strengths stable
        W = (W - learning_rate * (X.T @ R)) / shrink
        b = b - learning_rate * gb
    return {"weights": W, "bias": b, "epochs_run": epoch + 1}


def lr_scores(params, X) -> np.ndarray:
    return np.asarray(X, dtype=float) @ np.asarray(params["weights"]) + np.asarray(params["bias"])


def predict_logistic(params, X) -> np.ndarray:
    return np.argmax(lr_scores(params, X), axis=1)
