"""Word resources: simple-word list and lemma/frequency/POS lexicon."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path
from types import MappingProxyType
from typing import Iterable, Mapping

from .errors import LoadError, ParseError, ValidationError

POS_TAGS = (
    "noun", "verb", "adjective", "adverb", "pronoun",
    "preposition", "conjunction", "determiner", "other",
)
# Tie-break order when two readings of a form have the same frequency.
POS_PRIORITY = {pos: i for i, pos in enumerate(
    ("verb", "noun", "adjective", "adverb", "pronoun", "preposition",
     "conjunction", "determiner", "other"))}

ELISION_MAP = MappingProxyType({
    "l'": "le", "d'": "de", "j'": "je", "n'": "ne", "s'": "se", "c'": "ce",
    "qu'": "que", "m'": "me", "t'": "te", "jusqu'": "jusque",
    "lorsqu'": "lorsque", "puisqu'": "puisque",
})

UNIGRAM_ALPHA = 0.01
FREQ_BASIS = 1e6

_HEADER = ("form", "lemma", "freq_per_million", "pos")


@dataclass(frozen=True)
class LexEntry:
    lemma: str
    freq_per_million: float
    pos: str


@dataclass(frozen=True)
class Lexicon:
    simple_words: frozenset
    entries: Mapping[str, LexEntry]
    total_tokens_basis: float = FREQ_BASIS
    lemma_freq: Mapping[str, float] = field(default_factory=dict, repr=False)

    def __len__(self):
        return len(self.entries)

    def lookup(self, word):
        return lookup(self, word)


def normalize_form(word: str) -> str:
    return word.replace("’", "'").replace("ʼ", "'").lower()


def build_lexicon(simple_words: Iterable[str], entries: Mapping[str, LexEntry]) -> Lexicon:
    """Assemble a lexicon from in-memory data (used by tests and loaders)."""
    simple = frozenset(normalize_form(w) for w in simple_words)
    if not simple:
        raise ValidationError("simple-word list is empty")
    table = {normalize_form(k): v for k, v in entries.items()}
    lemma_freq: dict[str, float] = {}
    for entry in table.values():
        if entry.freq_per_million < 0:
            raise ValidationError(f"negative frequency for lemma {entry.lemma!r}")
        key = normalize_form(entry.lemma)
        lemma_freq[key] = lemma_freq.get(key, 0.0) + entry.freq_per_million
    return Lexicon(
        simple_words=simple,
        entries=MappingProxyType(table),
        lemma_freq=MappingProxyType(lemma_freq),
    )


def _read_lines(path):
    p = Path(path)
    try:
        with open(p, encoding="utf-8-sig") as fh:
            return fh.read().splitlines()
    except FileNotFoundError as exc:
        raise LoadError(f"no such file: {p}") from exc
    except (OSError, UnicodeDecodeError) as exc:
        raise LoadError(f"cannot read {p}: {exc}") from exc


def load_simple_words(path) -> frozenset:
    words = set()
    for line in _read_lines(path):
        line = line.split("#", 1)[0].strip()
        if line:
            words.add(normalize_form(line))
    if not words:
        raise ValidationError(f"simple-word list {path} is empty")
    return frozenset(words)


def load_frequency_lexicon(path) -> dict[str, LexEntry]:
    lines = _read_lines(path)
    if not lines or tuple(c.strip() for c in lines[0].split("\t")) != _HEADER:
        raise ParseError("expected header " + "\\t".join(_HEADER), path, 1)
    entries: dict[str, LexEntry] = {}
    for lineno, raw in enumerate(lines[1:], start=2):
        if not raw.strip() or raw.startswith("#"):
            continue
        cols = raw.split("\t")
        if len(cols) != 4:
            raise ParseError(f"expected 4 tab-separated columns, got {len(cols)}", path, lineno)
        form, lemma, freq_s, pos = (c.strip() for c in cols)
        if not form or not lemma:
            raise ParseError("empty form or lemma", path, lineno)
        try:
            freq = float(freq_s)
        except ValueError:
            raise ParseError(f"frequency {freq_s!r} is not a number", path, lineno) from None
        if not math.isfinite(freq) or freq < 0:
            raise ParseError(f"frequency must be finite and >= 0, got {freq_s}", path, lineno)
        if pos not in POS_TAGS:
            raise ParseError(f"unknown POS {pos!r}", path, lineno)
        key = normalize_form(form)
        new = LexEntry(lemma=lemma, freq_per_million=freq, pos=pos)
        old = entries.get(key)
        if old is None or _better(new, old):
            entries[key] = new
    return entries


def _better(new: LexEntry, old: LexEntry) -> bool:
    if new.freq_per_million != old.freq_per_million:
        return new.freq_per_million > old.freq_per_million
    return POS_PRIORITY[new.pos] < POS_PRIORITY[old.pos]


def load_lexicon(simple_list_path, freq_lexicon_path) -> Lexicon:
    simple = load_simple_words(simple_list_path)
    entries = load_frequency_lexicon(freq_lexicon_path)
    return build_lexicon(simple, entries)


def lookup(lexicon: Lexicon, word: str):
    """Case-folded lookup; elided clitics resolve to their full form."""
    key = normalize_form(word)
    if key in ELISION_MAP:
        return lexicon.entries.get(ELISION_MAP[key])
    return lexicon.entries.get(key)


def lemma_of(lexicon: Lexicon, word: str) -> str:
    entry = lookup(lexicon, word)
    if entry is not None:
        return entry.lemma
    key = normalize_form(word)
    return ELISION_MAP.get(key, key)


def unigram_logprob(lexicon: Lexicon, lemmas, alpha: float = UNIGRAM_ALPHA) -> float:
    """Mean add-alpha smoothed log-probability of ``lemmas``.

    Frequencies are per million; a lemma's frequency is the sum over its
    forms. Out-of-vocabulary lemmas count as frequency 0.
    """
    lemmas = list(lemmas)
    if not lemmas:
        raise ValidationError("unigram_logprob needs at least one lemma")
    vocab = len(lexicon.entries)
    denom = math.log(lexicon.total_tokens_basis + alpha * vocab)
    total = 0.0
    for lemma in lemmas:
        freq = lexicon.lemma_freq.get(normalize_form(lemma), 0.0)
        total += math.log(freq + alpha) - denom
    return total / len(lemmas)
