"""Kandel-Moles, Flesch reading ease and BINGUI punctuation density."""
from __future__ import annotations

from ..segmentation import count_syllables

KM_INTERCEPT, KM_MLS, KM_MNS = 207.0, 1.015, 0.736
FK_INTERCEPT, FK_MLS, FK_SPW = 206.835, 1.015, 84.6
# MNS is expressed in syllables per this many words
MNS_BASIS = 100.0
BINGUI_MARKS = frozenset({",", ";", ":", "(", ")"})


def kandel_moles(mls: float, mns: float) -> float:
    return KM_INTERCEPT - KM_MLS * mls - KM_MNS * mns


def flesch_ease(mls: float, syllables_per_word: float) -> float:
    return FK_INTERCEPT - FK_MLS * mls - FK_SPW * syllables_per_word


def syllables_per_word(doc) -> float:
    # letter words only: digits have no defined syllable count
    words = [t.lower for s in doc.sentences for t in s.tokens if t.kind == "word"]
    if not words:
        return 0.0
    return sum(count_syllables(w) for w in words) / len(words)


def readability_metrics(doc) -> dict[str, float]:
    n_sent = len(doc.sentences)
    n_words = sum(s.n_words for s in doc.sentences)
    mls = n_words / n_sent if n_sent else 0.0
    spw = syllables_per_word(doc)
    marks = sum(1 for s in doc.sentences for t in s.tokens
                if t.kind == "punctuation" and t.surface in BINGUI_MARKS)
    return {
        "FK_ease": flesch_ease(mls, spw),
        "KM_score": kandel_moles(mls, spw * MNS_BASIS),
        "BINGUI": marks / n_sent if n_sent else 0.0,
    }
