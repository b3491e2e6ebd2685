"""Command-line interface.

Exit codes: 0 success, 1 data error, 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import warnings
from pathlib import Path

from .classifiers import (TrainedModel, blind_test, evaluate, explain, fit_model,
                          grid_search_cv, resolve_kind)
from .corpus import (distributions_csv, export_distributions, featurize_corpus,
                     featurize_documents, load_blind_manifest, load_corpus)
from .errors import FrComplexityError
from .metrics.features import SCHEMA, SCHEMA_VERSION
from .pipeline import load_resources

EXIT_OK, EXIT_DATA, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _dumps(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, indent=2, sort_keys=False) + "\n"


def _emit(args, text: str) -> None:
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _resources(args):
    return load_resources(args.lexicon, args.simple_words, args.seg_rules, args.biber_rules)


def _fmt(v: float) -> str:
    return repr(float(v))


def cmd_analyze(args) -> int:
    res = _resources(args)
    rows, errors = [], []
    for name in args.files:
        try:
            text = Path(name).read_text(encoding="utf-8-sig")
        except (OSError, UnicodeDecodeError) as exc:
            errors.append(f"{name}: {exc}")
            continue
        rows.append(res.featurize(text, name))
    if args.json:
        out = _dumps({"schema_version": SCHEMA_VERSION,
                      "documents": [{"id": v.document_id, "values": v.values} for v in rows]})
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(("document",) + SCHEMA)
        for v in rows:
            writer.writerow([v.document_id] + [_fmt(x) for x in v.as_list()])
        out = buf.getvalue()
    _emit(args, out)
    for err in errors:
        print(f"error: {err}", file=sys.stderr)
    return EXIT_DATA if errors else EXIT_OK


def _search_report(result) -> dict:
    return result.to_dict()


def cmd_train(args) -> int:
    if not args.out:
        raise UsageError("train needs --out for the model file")
    kind = resolve_kind(args.model)
    if args.hyperparameters and args.folds is not None:
        raise UsageError("--hyperparameters and --folds are mutually exclusive")
    res = _resources(args)
    corpus = load_corpus(args.manifest)
    fm = featurize_corpus(corpus, res)
    report = {"kind": kind, "manifest_hash": corpus.content_hash, "documents": len(corpus),
              "seed": args.seed}
    if args.hyperparameters:
        try:
            params = json.loads(args.hyperparameters)
        except json.JSONDecodeError as exc:
            raise UsageError(f"--hyperparameters is not JSON: {exc}") from None
    else:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            result = grid_search_cv(fm.X, fm.labels, kind, k_folds=args.folds or 5,
                                    seed=args.seed, feature_names=SCHEMA)
        params = result.best
        report["cross_validation"] = _search_report(result)
        report["warnings"] = [str(w.message) for w in caught]
    model = fit_model(kind, fm.X, fm.labels, SCHEMA, params, seed=args.seed)
    model.save(args.out)
    report["hyperparameters"] = model.hyperparameters
    if args.json:
        text = _dumps(report)
    else:
        lines = [f"model: {kind} -> {args.out}", f"hyperparameters: {json.dumps(model.hyperparameters)}"]
        if "cross_validation" in report:
            cv = report["cross_validation"]
            lines.append(f"cv ({cv['folds']} folds): accuracy={cv['best_accuracy']:.4f} "
                         f"rmse={cv['best_rmse']:.4f}")
        text = "\n".join(lines) + "\n"
    if args.report:
        Path(args.report).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_evaluate(args) -> int:
    model = TrainedModel.load(args.model)
    res = _resources(args)
    corpus = load_corpus(args.manifest)
    fm = featurize_corpus(corpus, res)
    rep = evaluate(model, fm.X, fm.labels, fm.ids)
    if args.json:
        text = _dumps(rep.to_dict())
    else:
        text = f"accuracy={rep.accuracy:.4f} rmse={rep.rmse:.4f} documents={len(rep.per_document)}\n"
        text += "".join(f"{i}\t{t}\t{p}\n" for i, t, p in rep.per_document)
    _emit(args, text)
    return EXIT_OK


def cmd_explain(args) -> int:
    model = TrainedModel.load(args.model)
    exp = explain(model)
    if args.json:
        text = _dumps(exp)
    else:
        lines = [f"kind: {exp['kind']}"]
        if "thresholds" in exp:
            lines += [f"  level {r['label']}: {r['min']} .. {r['max']} ({r['description']})"
                      for r in exp["thresholds"]]
        elif exp["kind"] == "logistic_regression":
            for c in exp["classes"]:
                pos = ", ".join(f"{e['feature']} ({e['weight']:+.3f})" for e in c["strong_positive"])
                neg = ", ".join(f"{e['feature']} ({e['weight']:+.3f})" for e in c["strong_negative"])
                lines.append(f"  level {c['label']}: + {pos or '-'} | - {neg or '-'}")
        elif exp["kind"] == "naive_bayes":
            for c in exp["classes"]:
                lines.append(f"  level {c['label']}: high {', '.join(c['high']) or '-'}"
                             f" | low {', '.join(c['low']) or '-'}")
        else:
            lines.append(f"  features used: {exp['features_used']}")
            lines += [f"  {k}\t{v:.4f}" for k, v in exp["importances"].items()]
        text = "\n".join(lines) + "\n"
    _emit(args, text)
    return EXIT_OK


def cmd_blind(args) -> int:
    model = TrainedModel.load(args.model)
    res = _resources(args)
    groups = load_blind_manifest(args.manifest)
    data = [(g.name, (g.expected_min, g.expected_max), featurize_documents(g.documents, res).X)
            for g in groups]
    rep = blind_test(model, data)
    if args.json:
        text = _dumps(rep.to_dict())
    else:
        text = "".join(f"{g['group']}\texpected {g['midpoint']:g}\tmean {g['mean_prediction']:.3f}\n"
                       for g in rep.groups)
        text += f"pearson={rep.correlation:.4f}" + (" (degenerate)" if rep.degenerate else "") + "\n"
    _emit(args, text)
    return EXIT_OK


def cmd_distributions(args) -> int:
    if args.metric not in SCHEMA:
        raise UsageError(f"unknown metric {args.metric!r}")
    res = _resources(args)
    corpus = load_corpus(args.manifest)
    fm = featurize_corpus(corpus, res)
    rows = export_distributions(fm.X, fm.labels, args.metric)
    text = _dumps({"metric": args.metric, "levels": rows}) if args.json else distributions_csv(rows)
    _emit(args, text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--lexicon", help="frequency lexicon TSV (form, lemma, freq_per_million, pos)")
    shared.add_argument("--simple-words", help="simple-word list, one word per line")
    shared.add_argument("--seg-rules", help="segmentation rules file")
    shared.add_argument("--biber-rules", help="Biber feature rules file")
    shared.add_argument("--seed", type=int, default=42)
    shared.add_argument("--json", action="store_true", help="machine-readable JSON output")
    shared.add_argument("--out", help="write the main output to this file")
    shared.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="frcomplexity",
                                     description="Measure and classify the complexity of French documents.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[shared], help="feature vectors for text files")
    p.add_argument("files", nargs="*")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("train", parents=[shared], help="grid-search and fit a model")
    p.add_argument("--manifest", required=True)
    p.add_argument("--model", required=True, choices=["baseline", "dt", "rf", "lr", "nb"])
    p.add_argument("--folds", type=int)
    p.add_argument("--hyperparameters", help="JSON object; skips the grid search")
    p.add_argument("--report", help="write the training report here instead of stdout")
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("evaluate", parents=[shared], help="accuracy and RMSE on a labeled manifest")
    p.add_argument("--model", required=True)
    p.add_argument("--manifest", required=True)
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("explain", parents=[shared], help="coefficients / importances of a model")
    p.add_argument("--model", required=True)
    p.set_defaults(func=cmd_explain)

    p = sub.add_parser("blind", parents=[shared], help="grouped blind test with Pearson correlation")
    p.add_argument("--model", required=True)
    p.add_argument("--manifest", required=True)
    p.set_defaults(func=cmd_blind)

    p = sub.add_parser("distributions", parents=[shared], help="per-level summary of one metric")
    p.add_argument("--manifest", required=True)
    p.add_argument("--metric", required=True)
    p.set_defaults(func=cmd_distributions)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "folds", None) is not None and args.folds < 2:
        parser.error("--folds must be at least 2")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FrComplexityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
