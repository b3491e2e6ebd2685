"""Vocabulary metrics: share of difficult words, unigram score, word length."""
from __future__ import annotations

from ..lexicon import Lexicon, unigram_logprob


def vocabulary_metrics(doc, lexicon: Lexicon) -> dict[str, float]:
    words = [t for s in doc.sentences for t in s.tokens if t.is_word]
    letters = [t for t in words if t.kind == "word"]
    out = {"PA": 0.0, "Unigram": 0.0, "NLM": 0.0, "wordLength": 0.0}
    if letters:
        hard = sum(1 for t in letters if t.lower not in lexicon.simple_words)
        out["PA"] = 100.0 * hard / len(letters)
        out["Unigram"] = unigram_logprob(lexicon, [t.lemma for t in letters])
    if words:
        out["NLM"] = sum(t.char_len for t in words) / len(words)
        out["wordLength"] = sum(len(t.surface) for t in words) / len(words)
    return out
