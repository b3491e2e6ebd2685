from .biber import BIBER_FEATURES, BiberRule, biber_features, default_biber_rules, load_biber_rules
from .diversity import mattr, msttr, mtld, ttr
from .features import SCHEMA, SCHEMA_VERSION, FeatureVector, compute_feature_vector
from .readability import flesch_ease, kandel_moles, readability_metrics
from .syntactic import syntactic_metrics
from .vocabulary import vocabulary_metrics

__all__ = [
    "BIBER_FEATURES", "BiberRule", "biber_features", "default_biber_rules",
    "load_biber_rules", "mattr", "msttr", "mtld", "ttr", "SCHEMA",
    "SCHEMA_VERSION", "FeatureVector", "compute_feature_vector", "flesch_ease",
    "kandel_moles", "readability_metrics", "syntactic_metrics",
    "vocabulary_metrics",
]
