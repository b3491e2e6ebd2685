"""Rule-based Biber-style feature counts.

Rules come from a tab-separated file, one ``name<TAB>expression`` per line.
An expression is one or more alternatives separated by `` || ``; each
alternative is a sequence of elements:

    [cond & cond ...]     one token satisfying every condition
    [cond ...]?           optional token
    {m,n}                 gap of m to n arbitrary tokens

Conditions:

    key=v1|v2             token attribute equals one of the values
    key!=v1|v2            token attribute equals none of the values
    len>=N / len<N        letter count bounds
    @start                token is the first word of its sentence
    @question / !@question   the sentence does / does not end with "?"

Keys are surface, lower, lemma, pos, tense, kind, suffix and prefix
(suffix/prefix test ``lower`` with endswith/startswith).

Matching starts at every word or number token and never crosses a sentence
boundary. A token anchors at most one match, so each feature value is
``matches / words`` and stays within [0, 1].
"""
from __future__ import annotations

import functools
import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from ..errors import ConfigurationError, LoadError

BIBER_FEATURES = (
    "pastVerbs", "presVerbs", "placeAdverbials", "timeAdverbials",
    "1persProns", "2persProns", "3persProns", "impersProns", "demonstrProns",
    "indefProns", "doAsProVerb", "whQuestions", "nominalizations", "Nouns",
    "beAsMain", "WHclauses", "piedPiping", "sncRelatives", "causative",
    "conditional",
    "otherSubord", "preposn", "attrAdj", "ADV", "conjuncts", "downtoners",
    "amplifiers", "generalEmphatics", "publicVerbs", "privateVerbs",
    "suasiveVerbs", "seemappear", "possibModals", "necessModals",
    "predicModals", "contractions", "thatDeletion", "strandedPrep",
    "syntNegn", "analNegn",
)

_KEYS = frozenset({"surface", "lower", "lemma", "pos", "tense", "kind", "suffix", "prefix"})
_ELEMENT_RE = re.compile(r"\[([^\]]*)\](\?)?|\{(\d+),(\d+)\}|(\S+)")


@dataclass(frozen=True)
class Cond:
    key: str
    values: tuple
    negate: bool = False

    def test(self, tok, sentence_info) -> bool:
        if self.key == "@start":
            return (tok is sentence_info["first"]) != self.negate
        if self.key == "@question":
            return sentence_info["question"] != self.negate
        if self.key == "len":
            return (tok.char_len >= self.values[0]) != self.negate
        if self.key == "suffix":
            hit = any(tok.lower.endswith(v) for v in self.values)
        elif self.key == "prefix":
            hit = any(tok.lower.startswith(v) for v in self.values)
        else:
            val = getattr(tok, self.key)
            if self.key == "lemma":
                val = val.lower()
            hit = (val or "") in self.values
        return hit != self.negate


@dataclass(frozen=True)
class Element:
    conds: tuple = ()
    optional: bool = False
    gap: tuple | None = None  # (min, max) for gap elements


@dataclass(frozen=True)
class BiberRule:
    name: str
    alternatives: tuple  # tuple of tuple[Element]
    source: str = ""


def _parse_cond(text: str, where: str) -> Cond:
    text = text.strip()
    if text in ("@start", "!@start", "@question", "!@question"):
        return Cond(text.lstrip("!"), (), text.startswith("!"))
    m = re.fullmatch(r"len(>=|<)(\d+)", text)
    if m:
        return Cond("len", (int(m.group(2)),), m.group(1) == "<")
    m = re.fullmatch(r"(\w+)(!?=)(.+)", text)
    if not m or m.group(1) not in _KEYS:
        raise ConfigurationError(f"{where}: bad condition {text!r}")
    values = tuple(v.strip() for v in m.group(3).split("|"))
    if m.group(1) in ("lower", "suffix", "prefix", "lemma"):
        values = tuple(v.replace("’", "'").lower() for v in values)
    return Cond(m.group(1), values, m.group(2) == "!=")


def parse_expression(expr: str, where: str = "rule") -> tuple:
    alternatives = []
    for alt in expr.split(" || "):
        elements = []
        for m in _ELEMENT_RE.finditer(alt):
            if m.group(5):
                raise ConfigurationError(f"{where}: unexpected {m.group(5)!r}")
            if m.group(3) is not None:
                lo, hi = int(m.group(3)), int(m.group(4))
                if lo > hi:
                    raise ConfigurationError(f"{where}: empty gap {{{lo},{hi}}}")
                elements.append(Element(gap=(lo, hi)))
                continue
            body = m.group(1).strip()
            conds = tuple(_parse_cond(c, where) for c in body.split("&")) if body else ()
            elements.append(Element(conds=conds, optional=bool(m.group(2))))
        if not elements or elements[0].gap is not None or elements[0].optional:
            raise ConfigurationError(f"{where}: an alternative must start with a required token")
        alternatives.append(tuple(elements))
    return tuple(alternatives)


def parse_rules(text: str, source: str = "<string>") -> tuple[BiberRule, ...]:
    rules = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip() or raw.lstrip().startswith("#"):
            continue
        where = f"{source}:{lineno}"
        if "\t" not in raw:
            raise ConfigurationError(f"{where}: expected name<TAB>expression")
        name, expr = (p.strip() for p in raw.split("\t", 1))
        if name not in BIBER_FEATURES:
            raise ConfigurationError(f"{where}: unknown feature {name!r}")
        if name in rules:
            raise ConfigurationError(f"{where}: duplicate rule for {name!r}")
        rules[name] = BiberRule(name, parse_expression(expr, where), expr)
    missing = [n for n in BIBER_FEATURES if n not in rules]
    if missing:
        raise ConfigurationError(f"{source}: no rule for {', '.join(missing)}")
    return tuple(rules[n] for n in BIBER_FEATURES)


def load_biber_rules(path) -> tuple[BiberRule, ...]:
    try:
        text = Path(path).read_text(encoding="utf-8-sig")
    except OSError as exc:
        raise LoadError(f"cannot read Biber rules {path}: {exc}") from exc
    return parse_rules(text, str(path))


@functools.lru_cache(maxsize=None)
def default_biber_rules() -> tuple[BiberRule, ...]:
    ref = resources.files("frcomplexity.resources") / "biber_fr.tsv"
    return parse_rules(ref.read_text(encoding="utf-8"), "biber_fr.tsv")


def _match(elements, k, tokens, pos, info) -> bool:
    if k == len(elements):
        return True
    el = elements[k]
    if el.gap is not None:
        lo, hi = el.gap
        return any(_match(elements, k + 1, tokens, pos + g, info)
                   for g in range(lo, hi + 1) if pos + g <= len(tokens))
    if pos < len(tokens) and all(c.test(tokens[pos], info) for c in el.conds):
        if _match(elements, k + 1, tokens, pos + 1, info):
            return True
    return el.optional and _match(elements, k + 1, tokens, pos, info)


def count_matches(rule: BiberRule, sentence) -> int:
    tokens = sentence.tokens
    first = next((t for t in tokens if t.is_word), None)
    info = {"first": first, "question": sentence.is_question}
    n = 0
    for i, tok in enumerate(tokens):
        if not tok.is_word:
            continue
        if any(_match(alt, 0, tokens, i, info) for alt in rule.alternatives):
            n += 1
    return n


def biber_features(doc, rules=None) -> dict[str, float]:
    rules = default_biber_rules() if rules is None else rules
    words = sum(s.n_words for s in doc.sentences)
    out = {}
    for rule in rules:
        if not words:
            out[rule.name] = 0.0
            continue
        out[rule.name] = sum(count_matches(rule, s) for s in doc.sentences) / words
    return out
