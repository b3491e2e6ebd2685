"""Fixed-schema feature vector assembled from every metric family."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .biber import BIBER_FEATURES, biber_features
from .diversity import diversity_stream, mattr, msttr, mtld, ttr
from .readability import readability_metrics
from .syntactic import syntactic_metrics
from .vocabulary import vocabulary_metrics

SCHEMA_VERSION = "1"

DIVERSITY = ("TTR", "MSTTR", "MATTR", "MTLD")
VOCABULARY = ("PA", "Unigram", "NLM", "wordLength")
SYNTACTIC = ("MLS", "MLC", "DC/C", "MLT", "TU/S", "CTU/TU", "C/TU", "CP/C",
             "CP/TU", "C/S", "NWS90", "PS30")
READABILITY = ("FK_ease", "KM_score", "BINGUI")
SCHEMA = DIVERSITY + VOCABULARY + SYNTACTIC + READABILITY + BIBER_FEATURES


@dataclass
class FeatureVector:
    values: dict = field(default_factory=dict)
    document_id: str = ""
    schema_version: str = SCHEMA_VERSION

    def __getitem__(self, name):
        return self.values[name]

    def as_list(self) -> list[float]:
        return [self.values[k] for k in SCHEMA]


def compute_feature_vector(doc, lexicon, biber_rules=None) -> FeatureVector:
    stream = diversity_stream(doc)
    values = {
        "TTR": ttr(stream),
        "MSTTR": msttr(stream),
        "MATTR": mattr(stream),
        "MTLD": mtld(stream),
    }
    values.update(vocabulary_metrics(doc, lexicon))
    values.update(syntactic_metrics(doc))
    values.update(readability_metrics(doc))
    values.update(biber_features(doc, biber_rules))
    ordered = {k: float(values[k]) for k in SCHEMA}
    bad = [k for k, v in ordered.items() if not math.isfinite(v)]
    if bad:
        raise ArithmeticError(f"non-finite metric(s): {', '.join(bad)}")
    return FeatureVector(ordered, doc.source_id)
