"""Sentence, clause and T-unit ratios."""
from __future__ import annotations

import math

LONG_SENTENCE = 30


def _ratio(a, b) -> float:
    return a / b if b else 0.0


def nearest_rank(values, pct: float):
    """Nearest-rank percentile of a non-empty sequence."""
    ordered = sorted(values)
    rank = max(1, math.ceil(pct / 100 * len(ordered)))
    return ordered[rank - 1]


def unit_counts(doc) -> dict[str, int]:
    sents = doc.sentences
    return {
        "W": sum(s.n_words for s in sents),
        "S": len(sents),
        "C": sum(len(s.clauses) for s in sents),
        "DC": sum(1 for s in sents for c in s.clauses if c.dependent),
        "TU": sum(len(s.t_units) for s in sents),
        "CTU": sum(1 for s in sents for u in s.t_units if u.complex),
        "CP": doc.coordinate_phrase_count,
    }


def syntactic_metrics(doc) -> dict[str, float]:
    n = unit_counts(doc)
    w, s, c, tu = n["W"], n["S"], n["C"], n["TU"]
    lengths = [sent.n_words for sent in doc.sentences]
    return {
        "MLS": _ratio(w, s),
        "MLC": _ratio(w, c),
        "DC/C": _ratio(n["DC"], c),
        "MLT": _ratio(w, tu),
        "TU/S": _ratio(tu, s),
        "CTU/TU": _ratio(n["CTU"], tu),
        "C/TU": _ratio(c, tu),
        "CP/C": _ratio(n["CP"], c),
        "CP/TU": _ratio(n["CP"], tu),
        "C/S": _ratio(c, s),
        "NWS90": float(nearest_rank(lengths, 90)) if lengths else 0.0,
        "PS30": _ratio(100.0 * sum(1 for x in lengths if x > LONG_SENTENCE), s),
    }
