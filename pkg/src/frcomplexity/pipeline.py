"""Bundle of the three rule/word resources and text-to-vector helpers."""
from __future__ import annotations

import functools
from dataclasses import dataclass
from importlib import resources

from .lexicon import Lexicon, load_lexicon
from .metrics.biber import default_biber_rules, load_biber_rules
from .metrics.features import FeatureVector, compute_feature_vector
from .segmentation import SegmentationRules, analyze, default_rules, load_rules


@dataclass(frozen=True)
class Resources:
    lexicon: Lexicon
    segmentation: SegmentationRules
    biber: tuple

    def analyze(self, text: str, source_id: str = ""):
        return analyze(text, self.lexicon, self.segmentation, source_id)

    def featurize(self, text: str, source_id: str = "") -> FeatureVector:
        return compute_feature_vector(self.analyze(text, source_id), self.lexicon, self.biber)


def _packaged(name):
    return resources.files("frcomplexity.resources") / name


@functools.lru_cache(maxsize=None)
def default_lexicon() -> Lexicon:
    with resources.as_file(_packaged("simple_words_fr.txt")) as simple, \
            resources.as_file(_packaged("lexicon_fr.tsv")) as freq:
        return load_lexicon(simple, freq)


def load_resources(lexicon=None, simple_words=None, seg_rules=None, biber_rules=None) -> Resources:
    """Load resources, falling back to the packaged French defaults."""
    if lexicon is None and simple_words is None:
        lex = default_lexicon()
    else:
        with resources.as_file(_packaged("simple_words_fr.txt")) as s0, \
                resources.as_file(_packaged("lexicon_fr.tsv")) as l0:
            lex = load_lexicon(simple_words or s0, lexicon or l0)
    seg = load_rules(seg_rules) if seg_rules else default_rules()
    bib = load_biber_rules(biber_rules) if biber_rules else default_biber_rules()
    return Resources(lex, seg, bib)
