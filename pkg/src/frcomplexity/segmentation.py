"""Tokenization, sentence splitting, POS tagging and clause / T-unit segmentation
for French text.

The pipeline is rule based: finite verbs are found through the lexicon and a
verb-form table, and clause boundaries are opened at subordinators, relative
markers and coordinators listed in a declarative rules file.
"""
from __future__ import annotations

import functools
import re
import unicodedata
from dataclasses import dataclass, field, replace
from importlib import resources
from pathlib import Path
from typing import Mapping, Sequence

from .errors import LoadError, ParseError, ValidationError
from .lexicon import ELISION_MAP, POS_TAGS, Lexicon, lookup, normalize_form

WORD, NUMBER, PUNCT = "word", "number", "punctuation"

FINITE_TENSES = ("present", "imperfect", "future", "conditional", "simple_past")
TENSES = FINITE_TENSES + ("infinitive", "participle", "present_participle")

TERMINATORS = frozenset({".", "!", "?", "…", "..."})
CLOSERS = frozenset({"»", '"', "”", ")", "]", "’", "'"})
# punctuation after which a juxtaposed clause may start
CLAUSE_PUNCT = frozenset({",", ";", ":", "—", "–", "-", "(", ")"})

SUBJECT_PRONOUNS = frozenset({
    "je", "j'", "tu", "il", "elle", "on", "nous", "vous", "ils", "elles",
})
INVERSION_CLITICS = frozenset({
    "t", "il", "elle", "on", "ce", "je", "tu", "nous", "vous", "ils",
    "elles", "moi", "toi", "le", "la", "les", "lui", "leur", "y", "en",
})
# tokens allowed between an auxiliary and its participle
AUX_GAP = frozenset({
    "ne", "n'", "pas", "plus", "jamais", "point", "guère", "rien", "bien",
    "déjà", "toujours", "encore", "tout", "tous", "souvent", "vraiment",
    "aussi", "peut-être", "presque", "enfin", "trop", "beaucoup", "longtemps",
    "été",
})
# elided prefixes split off by the tokenizer
ELIDED_PREFIXES = frozenset(ELISION_MAP) | {"quelqu'", "presqu'"}

_TOKEN_RE = re.compile(
    r"(?P<number>\d+(?:[.,]\d+)*(?:ème|ère|er|re|e|es)?(?![^\W\d_]))"
    r"|(?P<word>[^\W\d_]+(?:['’ʼ][^\W\d_]+|-[^\W\d_]+)*['’ʼ]?)"
    r"|(?P<punct>\.\.\.|[^\w\s]|_)"
)


@dataclass
class Token:
    surface: str
    lower: str
    kind: str
    char_len: int
    lemma: str = ""
    pos: str = "other"
    tense: str | None = None

    @property
    def is_word(self) -> bool:
        """True for words and numbers: everything counted in word totals."""
        return self.kind != PUNCT

    @property
    def finite(self) -> bool:
        return self.pos == "verb" and self.tense in FINITE_TENSES


@dataclass(frozen=True)
class Clause:
    start: int
    end: int
    dependent: bool
    finite_verb_index: int | None = None

    @property
    def token_span(self) -> tuple[int, int]:
        return (self.start, self.end)


@dataclass(frozen=True)
class TUnit:
    clause_indices: tuple[int, ...]

    @property
    def complex(self) -> bool:
        return len(self.clause_indices) > 1


@dataclass
class Sentence:
    tokens: list[Token]
    clauses: list[Clause] = field(default_factory=list)
    t_units: list[TUnit] = field(default_factory=list)
    coordinate_phrases: int = 0

    @property
    def word_tokens(self) -> list[Token]:
        return [t for t in self.tokens if t.is_word]

    @property
    def n_words(self) -> int:
        return sum(1 for t in self.tokens if t.is_word)

    @property
    def is_question(self) -> bool:
        for tok in reversed(self.tokens):
            if tok.kind != PUNCT:
                return False
            if tok.surface == "?":
                return True
        return False

    def clause_words(self, clause: Clause) -> int:
        return sum(1 for t in self.tokens[clause.start:clause.end] if t.is_word)


@dataclass
class AnalyzedDocument:
    sentences: list[Sentence]
    source_id: str = ""

    @property
    def word_tokens(self) -> list[Token]:
        return [t for s in self.sentences for t in s.tokens if t.is_word]

    @property
    def tokens(self) -> list[Token]:
        return [t for s in self.sentences for t in s.tokens]

    @property
    def coordinate_phrase_count(self) -> int:
        return sum(s.coordinate_phrases for s in self.sentences)


# ---------------------------------------------------------------------------
# rules
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SegmentationRules:
    abbreviations: frozenset
    subordinators: tuple[tuple[str, ...], ...]
    relatives: tuple[tuple[str, ...], ...]
    coordinators: frozenset
    suffix_pos: tuple[tuple[str, str], ...]
    clitics: frozenset = frozenset()
    auxiliaries: frozenset = frozenset({"avoir", "être"})
    tense_suffix: tuple[tuple[str, str], ...] = ()
    verb_forms: Mapping[str, tuple[str, tuple[str, ...]]] = field(default_factory=dict)

    @functools.cached_property
    def markers(self) -> tuple[tuple[tuple[str, ...], str], ...]:
        """(token sequence, kind) sorted longest first."""
        out = [(seq, "coordinator") for seq in sorted((c,) for c in self.coordinators)]
        out += [(seq, "subordinator") for seq in self.subordinators]
        out += [(seq, "relative") for seq in self.relatives if seq not in self.subordinators]
        out.sort(key=lambda item: -len(item[0]))
        return tuple(out)


_SECTIONS = ("ABBREVIATIONS", "SUBORDINATORS", "RELATIVES", "COORDINATORS",
             "SUFFIX_POS", "CLITICS", "AUXILIARIES", "TENSE_SUFFIX", "VERB_FORMS")
_REQUIRED = _SECTIONS[:5]


def _marker_key(word: str) -> str:
    key = normalize_form(word)
    return ELISION_MAP.get(key, key)


def _marker_seq(text: str) -> tuple[str, ...]:
    return tuple(_marker_key(t.surface) for t in tokenize(text) if t.kind != PUNCT)


def load_rules(path) -> SegmentationRules:
    path = Path(path)
    sections: dict[str, list[tuple[int, str, Path]]] = {}
    _read_rules_file(path, sections, None, seen=set())
    missing = [s for s in _REQUIRED if s not in sections]
    if missing:
        raise ParseError(f"missing section(s): {', '.join(missing)}", path)

    def plain(name):
        return [line for _, line, _ in sections.get(name, [])]

    def pairs(name, allowed=None, width=2):
        out = []
        for lineno, line, src in sections.get(name, []):
            cols = line.split("\t")
            if len(cols) != width:
                raise ParseError(f"[{name}] expects {width} tab-separated columns", src, lineno)
            if allowed is not None and cols[1] not in allowed:
                raise ParseError(f"[{name}] unknown value {cols[1]!r}", src, lineno)
            out.append(tuple(c.strip() for c in cols))
        return out

    verb_forms = {}
    for form, lemma, tenses in pairs("VERB_FORMS", width=3):
        tl = tuple(tenses.split("|"))
        bad = [t for t in tl if t not in TENSES]
        if bad:
            raise ParseError(f"[VERB_FORMS] unknown tense {bad[0]!r} for {form!r}", path)
        verb_forms[normalize_form(form)] = (lemma, tl)

    def by_length(items):
        # longest suffix first, file order among equals
        return tuple(sorted(items, key=lambda p: -len(p[0])))

    return SegmentationRules(
        abbreviations=frozenset(normalize_form(a).rstrip(".") for a in plain("ABBREVIATIONS")),
        subordinators=tuple(_marker_seq(s) for s in plain("SUBORDINATORS")),
        relatives=tuple(_marker_seq(s) for s in plain("RELATIVES")),
        coordinators=frozenset(_marker_key(c) for c in plain("COORDINATORS")),
        suffix_pos=by_length(pairs("SUFFIX_POS", allowed=POS_TAGS)),
        clitics=frozenset(normalize_form(c) for c in plain("CLITICS")),
        auxiliaries=frozenset(plain("AUXILIARIES")) or frozenset({"avoir", "être"}),
        tense_suffix=by_length(pairs("TENSE_SUFFIX", allowed=TENSES)),
        verb_forms=verb_forms,
    )


def _read_rules_file(path: Path, sections, current, seen):
    if path in seen:
        raise ParseError("recursive @include", path)
    seen.add(path)
    try:
        text = path.read_text(encoding="utf-8-sig")
    except OSError as exc:
        raise LoadError(f"cannot read rules file {path}: {exc}") from exc
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip() if not raw.lstrip().startswith("#") else ""
        if not line.strip():
            continue
        stripped = line.strip()
        if stripped.startswith("[") and stripped.endswith("]"):
            current = stripped[1:-1].strip().upper()
            if current not in _SECTIONS:
                raise ParseError(f"unknown section [{current}]", path, lineno)
            sections.setdefault(current, [])
            continue
        if current is None:
            raise ParseError("entry outside of any section", path, lineno)
        if stripped.startswith("@include "):
            target = path.parent / stripped[len("@include "):].strip()
            _read_rules_file(target, sections, current, seen)
            continue
        sections[current].append((lineno, stripped if "\t" not in line else line.strip(" "), path))


@functools.lru_cache(maxsize=None)
def default_rules() -> SegmentationRules:
    with resources.as_file(resources.files("frcomplexity.resources") / "segmentation_fr.rules") as p:
        return load_rules(p)


# ---------------------------------------------------------------------------
# tokenization and sentences
# ---------------------------------------------------------------------------

def _make_token(surface: str, kind: str) -> Token:
    if kind == PUNCT:
        n = 0
    elif kind == NUMBER:
        n = sum(ch.isalnum() for ch in surface)
    else:
        n = sum(ch.isalpha() for ch in surface)
    return Token(surface=surface, lower=normalize_form(surface), kind=kind,
                 char_len=n, lemma=normalize_form(surface))


def _split_elision(surface: str) -> list[str]:
    parts = []
    rest = surface
    while True:
        m = re.search(r"['’ʼ]", rest)
        if not m or m.end() == len(rest):
            break
        prefix = rest[:m.end()]
        if normalize_form(prefix) not in ELIDED_PREFIXES:
            break
        parts.append(prefix)
        rest = rest[m.end():]
    parts.append(rest)
    return parts


def tokenize(text: str) -> list[Token]:
    """Split raw text into word, number and punctuation tokens."""
    text = unicodedata.normalize("NFC", text)
    tokens = []
    for m in _TOKEN_RE.finditer(text):
        if m.lastgroup == "word":
            if not any(ch.isalpha() for ch in m.group()):
                # word characters that are not letters (e.g. superscripts)
                tokens.extend(_make_token(ch, PUNCT) for ch in m.group())
                continue
            for piece in _split_elision(m.group()):
                tokens.append(_make_token(piece, WORD))
        elif m.lastgroup == "number":
            tokens.append(_make_token(m.group(), NUMBER))
        else:
            tokens.append(_make_token(m.group(), PUNCT))
    return tokens


def split_sentences(tokens: Sequence[Token], rules: SegmentationRules | None = None) -> list[Sentence]:
    rules = rules or default_rules()
    sentences: list[Sentence] = []
    current: list[Token] = []
    i, n = 0, len(tokens)
    while i < n:
        tok = tokens[i]
        current.append(tok)
        i += 1
        if tok.kind != PUNCT or tok.surface not in TERMINATORS:
            continue
        if tok.surface == "." and len(current) >= 2:
            prev = current[-2]
            if prev.kind == WORD and prev.lower in rules.abbreviations:
                continue
        while i < n and tokens[i].kind == PUNCT and (
                tokens[i].surface in TERMINATORS or tokens[i].surface in CLOSERS):
            current.append(tokens[i])
            i += 1
        if any(t.is_word for t in current):
            sentences.append(Sentence(current))
            current = []
    if current:
        if any(t.is_word for t in current) or not sentences:
            sentences.append(Sentence(current))
        else:
            sentences[-1].tokens.extend(current)
    return sentences


# ---------------------------------------------------------------------------
# syllables
# ---------------------------------------------------------------------------

VOWELS = frozenset("aeiouyéèêàâîôûùëïüœæÿ")


def count_syllables(word: str) -> int:
    """French syllable estimate: vowel groups, minus a silent final "e"."""
    w = normalize_form(word)
    if not any(ch.isalpha() for ch in w):
        raise ValidationError(f"not a word: {word!r}")
    groups = []
    in_group = False
    for ch in w:
        if ch in VOWELS:
            if in_group:
                groups[-1] += ch
            else:
                groups.append(ch)
                in_group = True
        else:
            in_group = False
    count = len(groups)
    if count >= 2 and w.endswith("e") and groups[-1] == "e":
        count -= 1
    return max(count, 1)


# ---------------------------------------------------------------------------
# POS tagging
# ---------------------------------------------------------------------------

def _suffix_pos(lower: str, rules: SegmentationRules):
    for suffix, pos in rules.suffix_pos:
        if lower.endswith(suffix) and len(lower) > len(suffix) + 1:
            return pos
    return None


def _guess_tense(lower: str, rules: SegmentationRules) -> tuple[str, ...]:
    for suffix, tense in rules.tense_suffix:
        if lower.endswith(suffix):
            return (tense,)
    return ("present",)


def _prev_index(tokens, i, skip):
    j = i - 1
    while j >= 0 and tokens[j].lower in skip:
        j -= 1
    return j


def tag_pos(tokens: Sequence[Token], lexicon: Lexicon,
            rules: SegmentationRules | None = None) -> list[Token]:
    """Return copies of ``tokens`` with lemma, POS and verb tense filled in."""
    rules = rules or default_rules()
    out: list[Token] = []
    options: list[tuple[str, ...] | None] = []
    for i, tok in enumerate(tokens):
        if tok.kind != WORD:
            out.append(replace(tok, lemma=tok.lower, pos="other", tense=None))
            options.append(None)
            continue
        entry = lookup(lexicon, tok.lower)
        lemma, pos = tok.lower, None
        if entry is not None:
            lemma, pos = entry.lemma, entry.pos
        elif tok.lower in ELISION_MAP:
            lemma = ELISION_MAP[tok.lower]
        elif "-" in tok.lower:
            head, *rest = tok.lower.split("-")
            head_entry = lookup(lexicon, head)
            if head_entry and head_entry.pos == "verb" and all(r in INVERSION_CLITICS for r in rest):
                lemma, pos = head_entry.lemma, "verb"
        if pos is None:
            pos = _suffix_pos(tok.lower, rules)
        if pos is None:
            sentence_start = i == 0 or tokens[i - 1].surface in TERMINATORS
            pos = "noun" if tok.surface[:1].isupper() and not sentence_start else "other"
        out.append(replace(tok, lemma=lemma, pos=pos, tense=None))
        options.append(None)

    skip = rules.clitics - SUBJECT_PRONOUNS
    for i, tok in enumerate(out):
        if tok.kind != WORD:
            continue
        # "s'il" is the conditional "si"
        if tok.lower == "s'" and i + 1 < len(out) and out[i + 1].lower in ("il", "ils"):
            out[i] = replace(tok, lemma="si", pos="conjunction")
            continue
        vf = rules.verb_forms.get(tok.lower)
        if vf is None and "-" in tok.lower and tok.pos == "verb":
            vf = rules.verb_forms.get(tok.lower.split("-")[0])
        if tok.pos != "verb" and vf is not None:
            j = _prev_index(out, i, skip)
            if j >= 0 and out[j].lower in SUBJECT_PRONOUNS:
                out[i] = tok = replace(tok, pos="verb", lemma=vf[0])
        if tok.pos == "verb":
            if vf is not None and vf[0] == tok.lemma:
                options[i] = vf[1]
            elif vf is not None and tok.lemma == tok.lower:
                out[i] = tok = replace(tok, lemma=vf[0])
                options[i] = vf[1]
            else:
                options[i] = _guess_tense(tok.lower, rules)

    for i, tok in enumerate(out):
        opts = options[i]
        if opts is None:
            continue
        out[i] = replace(tok, tense=_resolve_tense(out, i, opts, rules))
    return out


def _resolve_tense(tokens, i, opts, rules) -> str:
    if "participle" in opts and len(opts) > 1 or opts == ("participle",):
        j = _prev_index(tokens, i, AUX_GAP | rules.clitics)
        if tokens[i - 1].lower == "été" and i >= 1:
            j = i - 1
        if j >= 0 and tokens[j].pos == "verb" and tokens[j].lemma in rules.auxiliaries and j != i:
            return "participle"
    for tense in FINITE_TENSES:
        if tense in opts:
            return tense
    return opts[0]


# ---------------------------------------------------------------------------
# clauses, T-units, coordinate phrases
# ---------------------------------------------------------------------------

def _find_markers(sentence: Sentence, rules: SegmentationRules) -> list[tuple[int, int, str]]:
    """(position, length, kind) of clause markers in the sentence."""
    toks = sentence.tokens
    keys = [_marker_key(t.lower) if t.kind == WORD else None for t in toks]
    question = sentence.is_question
    found = []
    i = 0
    first_word = next((k for k, t in enumerate(toks) if t.kind == WORD), None)
    while i < len(toks):
        if keys[i] is None:
            i += 1
            continue
        if toks[i].lower == "s'" and toks[i].lemma == "si":
            keys_here = ("si",)
        else:
            keys_here = None
        match = None
        for seq, kind in rules.markers:
            if keys_here is not None:
                if seq == keys_here:
                    match = (seq, kind)
                    break
                continue
            if tuple(keys[i:i + len(seq)]) == seq:
                match = (seq, kind)
                break
        if match is None:
            i += 1
            continue
        seq, kind = match
        if i == first_word and (kind == "coordinator" or question):
            i += len(seq)
            continue
        found.append((i, len(seq), kind))
        i += len(seq)
    return found


def _finite_positions(tokens, start, end):
    return [k for k in range(start, end) if tokens[k].finite]


def _split_point(tokens, prev_fv, fv, clitics):
    for k in range(fv - 1, prev_fv, -1):
        if tokens[k].kind == PUNCT and tokens[k].surface in CLAUSE_PUNCT:
            return k + 1
    k = fv
    while k - 1 > prev_fv and tokens[k - 1].lower in clitics:
        k -= 1
    return k


def segment_clauses(sentence: Sentence, rules: SegmentationRules | None = None) -> Sentence:
    """Fill ``sentence.clauses``: one clause per finite verb."""
    rules = rules or default_rules()
    toks = sentence.tokens
    n = len(toks)
    markers = _find_markers(sentence, rules)
    # segments: [start, end, kind]
    cuts = [(pos, kind) for pos, _, kind in markers if pos > 0]
    segs = []
    first_kind = "lead"
    if markers and markers[0][0] == 0 and markers[0][2] != "coordinator":
        first_kind = "dependent"
    starts = [(0, first_kind)] + [(p, "dependent" if k != "coordinator" else "coordinate")
                                  for p, k in cuts]
    for idx, (s, kind) in enumerate(starts):
        e = starts[idx + 1][0] if idx + 1 < len(starts) else n
        if e > s:
            segs.append([s, e, kind])

    # one finite verb per segment: split juxtaposed / resumed clauses
    split = []
    clitics = rules.clitics
    for s, e, kind in segs:
        fvs = _finite_positions(toks, s, e)
        cur_start, cur_kind = s, kind
        for a, b in zip(fvs, fvs[1:]):
            cut = _split_point(toks, a, b, clitics)
            split.append([cur_start, cut, cur_kind])
            cur_start, cur_kind = cut, "resumption"
        split.append([cur_start, e, cur_kind])

    # merge verbless pieces into a neighbour
    merged: list[list] = []
    pending_start = None
    for s, e, kind in split:
        has_fv = bool(_finite_positions(toks, s, e))
        if not has_fv:
            if merged:
                merged[-1][1] = e
            elif pending_start is None:
                pending_start = s
            continue
        if pending_start is not None:
            s, pending_start = pending_start, None
        merged.append([s, e, kind])
    if not merged:
        sentence.clauses = [Clause(0, n, dependent=False)] if n else []
        return sentence
    if pending_start is not None:
        merged[-1][1] = n

    clauses = []
    for s, e, kind in merged:
        fv = _finite_positions(toks, s, e)
        clauses.append(Clause(s, e, dependent=(kind == "dependent"),
                              finite_verb_index=fv[0] if fv else None))
    sentence.clauses = clauses
    return sentence


def segment_t_units(sentence: Sentence) -> Sentence:
    """Group clauses: each independent clause opens a T-unit."""
    units: list[list[int]] = []
    pending: list[int] = []
    for idx, clause in enumerate(sentence.clauses):
        if not clause.dependent:
            units.append(pending + [idx])
            pending = []
        elif units:
            units[-1].append(idx)
        else:
            pending.append(idx)
    if pending:
        units.append(pending)
    sentence.t_units = [TUnit(tuple(u)) for u in units]
    return sentence


def count_coordinate_phrases(sentence: Sentence, rules: SegmentationRules | None = None) -> int:
    """Coordinators joining non-clausal constituents.

    A coordinator links two clauses only when a finite verb occurs both
    between it and the previous coordinator (or sentence start) and between
    it and the next coordinator (or sentence end); otherwise it joins
    phrases. Sentence-initial coordinators are ignored.
    """
    rules = rules or default_rules()
    toks = sentence.tokens
    coords = [k for k, t in enumerate(toks)
              if t.kind == WORD and _marker_key(t.lower) in rules.coordinators]
    first_word = next((k for k, t in enumerate(toks) if t.kind == WORD), None)
    count = 0
    for idx, pos in enumerate(coords):
        if pos == first_word:
            continue
        left = coords[idx - 1] + 1 if idx > 0 else 0
        right = coords[idx + 1] if idx + 1 < len(coords) else len(toks)
        if not (_finite_positions(toks, left, pos) and _finite_positions(toks, pos + 1, right)):
            count += 1
    return count


def analyze(text: str, lexicon: Lexicon, rules: SegmentationRules | None = None,
            source_id: str = "") -> AnalyzedDocument:
    """Full parse of one document."""
    rules = rules or default_rules()
    tokens = tag_pos(tokenize(text), lexicon, rules)
    sentences = split_sentences(tokens, rules)
    for sent in sentences:
        segment_clauses(sent, rules)
        segment_t_units(sent)
        sent.coordinate_phrases = count_coordinate_phrases(sent, rules)
    return AnalyzedDocument(sentences=sentences, source_id=source_id)
