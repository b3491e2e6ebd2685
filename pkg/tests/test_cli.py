import json
from importlib import resources

import jsonschema
import pytest

from frcomplexity.cli import main
from frcomplexity.metrics import SCHEMA


def schema(name):
    path = resources.files("frcomplexity.resources") / "schemas" / f"{name}.schema.json"
    return json.loads(path.read_text(encoding="utf-8"))


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def small_manifest(tmp_path, demo_manifest):
    # two documents per level keeps training fast
    lines = demo_manifest.read_text().splitlines()
    keep = [lines[0]] + [l for l in lines[1:] if l.split(",")[0].rsplit("_", 1)[1] in ("1.txt", "2.txt")]
    rows = [lines[0]] + [f"{demo_manifest.parent / l.split(',')[0]},{l.split(',', 1)[1]}" for l in keep[1:]]
    m = tmp_path / "small.csv"
    m.write_text("\n".join(rows) + "\n")
    return m


def test_analyze_one_file(tmp_path, capsys):
    f = tmp_path / "doc.txt"
    f.write_text("Le chat dort. Il fait beau.", encoding="utf-8")
    code, out, _ = run(capsys, "analyze", f)
    assert code == 0
    header, row = out.splitlines()
    assert header.split(",") == ["document", *SCHEMA]
    assert len(row.split(",")) == 64


def test_analyze_json_schema(tmp_path, capsys):
    f = tmp_path / "doc.txt"
    f.write_text("Le chat dort.", encoding="utf-8")
    code, out, _ = run(capsys, "analyze", "--json", f)
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, schema("analyze"))
    assert list(doc["documents"][0]["values"]) == list(SCHEMA)


def test_analyze_no_files(capsys):
    code, out, _ = run(capsys, "analyze")
    assert code == 0 and out.splitlines() == [",".join(("document",) + SCHEMA)]


def test_analyze_missing_file_still_writes_good_rows(tmp_path, capsys):
    f = tmp_path / "doc.txt"
    f.write_text("Le chat dort.", encoding="utf-8")
    code, out, err = run(capsys, "analyze", f, tmp_path / "missing.txt")
    assert code == 1
    assert len(out.splitlines()) == 2 and "missing.txt" in err


def test_usage_errors(capsys, small_manifest):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["train", "--manifest", str(small_manifest), "--model", "nb", "--folds", "1"])
    assert exc.value.code == 2
    code, _, err = run(capsys, "train", "--manifest", small_manifest, "--model", "nb")
    assert code == 2 and "--out" in err
    code, _, _ = run(capsys, "distributions", "--manifest", small_manifest, "--metric", "nope")
    assert code == 2


def test_data_error_exit_code(tmp_path, capsys):
    code, _, err = run(capsys, "evaluate", "--model", tmp_path / "none.json",
                       "--manifest", tmp_path / "none.csv")
    assert code == 1 and err.startswith("error:")


def test_train_evaluate_explain_blind(tmp_path, capsys, small_manifest, blind_manifest):
    model = tmp_path / "nb.json"
    code, out, _ = run(capsys, "train", "--manifest", small_manifest, "--model", "nb",
                       "--folds", 2, "--json", "--out", model)
    assert code == 0
    report = json.loads(out)
    jsonschema.validate(report, schema("train_report"))
    jsonschema.validate(json.loads(model.read_text()), schema("model"))

    code, out, _ = run(capsys, "evaluate", "--model", model, "--manifest", small_manifest, "--json")
    assert code == 0
    rep = json.loads(out)
    jsonschema.validate(rep, schema("evaluation_report"))
    assert len(rep["per_document"]) == 16

    code, out, _ = run(capsys, "explain", "--model", model, "--json")
    jsonschema.validate(json.loads(out), schema("explanation"))

    code, out, _ = run(capsys, "blind", "--model", model, "--manifest", blind_manifest, "--json")
    assert code == 0
    rep = json.loads(out)
    jsonschema.validate(rep, schema("blind_report"))
    assert len(rep["groups"]) == 4


def test_evaluate_all_correct(tmp_path, capsys, small_manifest):
    model = tmp_path / "dt.json"
    run(capsys, "train", "--manifest", small_manifest, "--model", "dt",
        "--hyperparameters", '{"max_depth": null}', "--out", model)
    code, out, _ = run(capsys, "evaluate", "--model", model, "--manifest", small_manifest)
    assert code == 0 and out.startswith("accuracy=1.0000 rmse=0.0000")


def test_explain_lr(tmp_path, capsys, small_manifest):
    model = tmp_path / "lr.json"
    run(capsys, "train", "--manifest", small_manifest, "--model", "lr",
        "--hyperparameters", '{"l2_strength": 0.1, "epochs": 300}', "--out", model)
    code, out, _ = run(capsys, "explain", "--model", model, "--json")
    exp = json.loads(out)
    assert exp["kind"] == "logistic_regression" and len(exp["classes"]) == 8
    code, out, _ = run(capsys, "explain", "--model", model)
    assert out.startswith("kind: logistic_regression")


def test_explain_baseline_text(tmp_path, capsys, small_manifest):
    model = tmp_path / "b.json"
    run(capsys, "train", "--manifest", small_manifest, "--model", "baseline",
        "--hyperparameters", "{}", "--out", model)
    code, out, _ = run(capsys, "explain", "--model", model)
    assert code == 0 and "Very easy" in out


def test_distributions(tmp_path, capsys, small_manifest):
    code, out, _ = run(capsys, "distributions", "--manifest", small_manifest, "--metric", "KM_score")
    assert code == 0 and out.splitlines()[0] == "level,min,q1,median,q3,max,mean"
    code, out, _ = run(capsys, "distributions", "--manifest", small_manifest, "--metric", "BINGUI",
                       "--json")
    jsonschema.validate(json.loads(out), schema("distributions"))


def test_train_and_evaluate_are_deterministic(tmp_path, capsys, small_manifest):
    outputs = []
    for run_id in ("a", "b"):
        model = tmp_path / f"rf_{run_id}.json"
        report = tmp_path / f"train_{run_id}.json"
        evaluation = tmp_path / f"eval_{run_id}.json"
        assert main(["train", "--manifest", str(small_manifest), "--model", "rf",
                     "--hyperparameters", '{"n_trees": 25}', "--out", str(model), "--json",
                     "--report", str(report)]) == 0
        assert main(["evaluate", "--model", str(model), "--manifest", str(small_manifest), "--json",
                     "--out", str(evaluation)]) == 0
        outputs.append((model.read_bytes(), report.read_bytes(), evaluation.read_bytes()))
    assert outputs[0] == outputs[1]
