"""Lexical diversity: TTR, MSTTR, MATTR and MTLD over case-folded word forms."""
from __future__ import annotations

from collections import Counter
from typing import Sequence

MSTTR_SEGMENT = 50
MATTR_WINDOW = 100
MTLD_THRESHOLD = 0.720


def diversity_stream(doc) -> list[str]:
    """Case-folded word forms of a document; numbers are left out."""
    return [t.lower for s in doc.sentences for t in s.tokens if t.kind == "word"]


def ttr(tokens: Sequence[str]) -> float:
    if not tokens:
        return 0.0
    return len(set(tokens)) / len(tokens)


def msttr(tokens: Sequence[str], segment: int = MSTTR_SEGMENT) -> float:
    n = len(tokens)
    if n < segment:
        return ttr(tokens)
    scores = [len(set(tokens[i:i + segment])) / segment
              for i in range(0, n - segment + 1, segment)]
    return sum(scores) / len(scores)


def mattr(tokens: Sequence[str], window: int = MATTR_WINDOW) -> float:
    n = len(tokens)
    if n < window:
        return ttr(tokens)
    counts = Counter(tokens[:window])
    scores = [len(counts) / window]
    for i in range(window, n):
        out = tokens[i - window]
        counts[out] -= 1
        if not counts[out]:
            del counts[out]
        counts[tokens[i]] += 1
        scores.append(len(counts) / window)
    return sum(scores) / len(scores)


def _mtld_pass(tokens: Sequence[str], threshold: float) -> float:
    factors = 0.0
    types: set = set()
    count = 0
    for tok in tokens:
        types.add(tok)
        count += 1
        if len(types) / count < threshold:
            factors += 1
            types = set()
            count = 0
    if count:
        factors += (1 - len(types) / count) / (1 - threshold)
    if factors == 0:
        return float(len(tokens))
    return len(tokens) / factors


def mtld(tokens: Sequence[str], threshold: float = MTLD_THRESHOLD) -> float:
    """Bidirectional MTLD with a fractional trailing factor."""
    if not tokens:
        return 0.0
    tokens = list(tokens)
    forward = _mtld_pass(tokens, threshold)
    backward = _mtld_pass(tokens[::-1], threshold)
    return (forward + backward) / 2
