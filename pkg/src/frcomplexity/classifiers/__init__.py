from .baseline import baseline_label, baseline_predict, threshold_table
from .evaluation import BlindTestReport, EvaluationReport, blind_test, evaluate, pearson
from .explain import explain
from .model import KINDS, LABEL_COUNT, TrainedModel, fit_model, resolve_kind
from .normalizer import Normalizer
from .search import DEFAULT_GRIDS, SearchResult, grid_search_cv, stratified_folds

__all__ = [
    "baseline_label", "baseline_predict", "threshold_table", "BlindTestReport",
    "EvaluationReport", "blind_test", "evaluate", "pearson", "explain", "KINDS",
    "LABEL_COUNT", "TrainedModel", "fit_model", "resolve_kind", "Normalizer",
    "DEFAULT_GRIDS", "SearchResult", "grid_search_cv", "stratified_folds",
]
