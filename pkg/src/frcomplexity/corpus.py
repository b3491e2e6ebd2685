"""Labeled corpora from CSV manifests, feature matrices and per-level summaries."""
from __future__ import annotations

import csv
import hashlib
import io
import time
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import LoadError, ValidationError
from .metrics.features import SCHEMA
from .metrics.syntactic import nearest_rank

CLASS_NAMES = ("story", "recipe", "news", "wikipedia", "novel", "dictation", "insurance", "legal")
MANIFEST_COLUMNS = ("path", "label", "id")
BLIND_COLUMNS = ("path", "group", "expected_min", "expected_max", "id")
DISTRIBUTION_COLUMNS = ("level", "min", "q1", "median", "q3", "max", "mean")


@dataclass(frozen=True)
class Document:
    id: str
    text: str
    label: int | None = None


@dataclass
class LabeledCorpus:
    documents: list
    manifest_path: str = ""
    content_hash: str = ""
    class_names: tuple = CLASS_NAMES

    def __len__(self):
        return len(self.documents)

    @property
    def labels(self) -> list[int]:
        return [d.label for d in self.documents]

    @property
    def ids(self) -> list[str]:
        return [d.id for d in self.documents]


@dataclass
class BlindGroup:
    name: str
    expected_min: float
    expected_max: float
    documents: list = field(default_factory=list)

    @property
    def midpoint(self) -> float:
        return (self.expected_min + self.expected_max) / 2


@dataclass
class FeatureMatrix:
    ids: list
    X: np.ndarray
    labels: np.ndarray
    vectors: list
    timings: list = field(default_factory=list, compare=False)
    feature_names: tuple = SCHEMA


def _read_manifest(path, columns):
    path = Path(path)
    try:
        raw = path.read_bytes()
    except OSError as exc:
        raise LoadError(f"cannot read manifest {path}: {exc}") from exc
    try:
        text = raw.decode("utf-8-sig")
    except UnicodeDecodeError as exc:
        raise LoadError(f"{path}: manifest is not UTF-8: {exc}") from exc
    reader = csv.DictReader(io.StringIO(text))
    header = tuple(h.strip() for h in (reader.fieldnames or ()))
    missing = [c for c in columns if c not in header]
    if missing:
        raise LoadError(f"{path}:1: manifest header lacks {', '.join(missing)}")
    rows = []
    for lineno, row in enumerate(reader, start=2):
        rows.append((lineno, {k.strip(): (v or "").strip() for k, v in row.items() if k}))
    return path, raw, rows


def _read_text(base: Path, rel: str, where: str) -> tuple[str, bytes]:
    p = Path(rel)
    if not p.is_absolute():
        p = base / p
    try:
        data = p.read_bytes()
    except OSError as exc:
        raise LoadError(f"{where}: cannot read document {p}: {exc}") from exc
    try:
        text = data.decode("utf-8-sig")
    except UnicodeDecodeError as exc:
        raise LoadError(f"{where}: {p} is not UTF-8: {exc}") from exc
    if not text.strip():
        raise ValidationError(f"{where}: document {p} is empty")
    return text, data


def load_corpus(manifest_path) -> LabeledCorpus:
    path, raw, rows = _read_manifest(manifest_path, MANIFEST_COLUMNS)
    digest = hashlib.sha256(raw)
    docs, seen = [], set()
    for lineno, row in rows:
        where = f"{path}:{lineno}"
        try:
            label = int(row["label"])
        except ValueError:
            raise ValidationError(f"{where}: label {row['label']!r} is not an integer") from None
        if not 0 <= label < len(CLASS_NAMES):
            raise ValidationError(f"{where}: label {label} outside 0..{len(CLASS_NAMES) - 1}")
        doc_id = row["id"] or row["path"]
        if doc_id in seen:
            raise LoadError(f"{where}: duplicate id {doc_id!r}")
        seen.add(doc_id)
        text, data = _read_text(path.parent, row["path"], where)
        digest.update(hashlib.sha256(data).digest())
        docs.append(Document(doc_id, text, label))
    return LabeledCorpus(docs, str(path), digest.hexdigest())


def load_blind_manifest(manifest_path) -> list[BlindGroup]:
    """Groups in order of first appearance in the manifest."""
    path, _, rows = _read_manifest(manifest_path, BLIND_COLUMNS)
    groups: dict[str, BlindGroup] = {}
    seen = set()
    for lineno, row in rows:
        where = f"{path}:{lineno}"
        try:
            lo, hi = float(row["expected_min"]), float(row["expected_max"])
        except ValueError:
            raise ValidationError(f"{where}: expected_min/expected_max must be numbers") from None
        if lo > hi:
            raise ValidationError(f"{where}: expected_min exceeds expected_max")
        doc_id = row["id"] or row["path"]
        if doc_id in seen:
            raise LoadError(f"{where}: duplicate id {doc_id!r}")
        seen.add(doc_id)
        name = row["group"]
        group = groups.setdefault(name, BlindGroup(name, lo, hi))
        if (group.expected_min, group.expected_max) != (lo, hi):
            raise ValidationError(f"{where}: group {name!r} has inconsistent expected range")
        text, _ = _read_text(path.parent, row["path"], where)
        group.documents.append(Document(doc_id, text))
    return list(groups.values())


def featurize_documents(documents, resources) -> FeatureMatrix:
    ids, vectors, timings = [], [], []
    for doc in documents:
        start = time.perf_counter()
        vectors.append(resources.featurize(doc.text, doc.id))
        timings.append(time.perf_counter() - start)
        ids.append(doc.id)
    X = np.array([v.as_list() for v in vectors], dtype=float).reshape(len(vectors), len(SCHEMA))
    labels = np.array([d.label if d.label is not None else -1 for d in documents], dtype=int)
    return FeatureMatrix(ids, X, labels, vectors, timings)


def featurize_corpus(corpus: LabeledCorpus, resources) -> FeatureMatrix:
    return featurize_documents(corpus.documents, resources)


def export_distributions(X, labels, metric_name: str, feature_names=SCHEMA,
                         n_levels: int = len(CLASS_NAMES)) -> list[dict]:
    """One summary row per level; levels without documents get None values."""
    feature_names = tuple(feature_names)
    if metric_name not in feature_names:
        raise ValidationError(f"unknown metric {metric_name!r}")
    col = np.asarray(X, dtype=float).reshape(-1, len(feature_names))[:, feature_names.index(metric_name)]
    labels = np.asarray(labels, dtype=int)
    rows = []
    for level in range(n_levels):
        vals = sorted(col[labels == level].tolist())
        if not vals:
            rows.append({"level": level, **{k: None for k in DISTRIBUTION_COLUMNS[1:]}})
            continue
        rows.append({
            "level": level,
            "min": vals[0],
            "q1": nearest_rank(vals, 25),
            "median": nearest_rank(vals, 50),
            "q3": nearest_rank(vals, 75),
            "max": vals[-1],
            "mean": sum(vals) / len(vals),
        })
    return rows


def distributions_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(DISTRIBUTION_COLUMNS)
    for row in rows:
        writer.writerow(["" if row[c] is None else repr(row[c]) if isinstance(row[c], float)
                         else row[c] for c in DISTRIBUTION_COLUMNS])
    return buf.getvalue()
