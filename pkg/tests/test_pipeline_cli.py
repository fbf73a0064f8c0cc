import json
from pathlib import Path

import numpy as np
import pytest

from alt_tsc import pipeline
from alt_tsc.cli import EXIT_CODES, main
from alt_tsc.pipeline import RunConfig, config_from_ini, parse_triplets, strip_timings

PRESETS = ["basicmotions", "coffee", "epilepsy", "epilepsy2", "forda", "fordb",
           "gunpoint1", "gunpoint2", "gunpoint3", "gunpoint4", "powercons"]


def _error(capsys):
    return json.loads(capsys.readouterr().err.strip().splitlines()[-1])


def test_parse_triplets():
    assert parse_triplets("(3,2,1), (99, 50, 1)") == [(3, 2, 1), (99, 50, 1)]
    with pytest.raises(ValueError):
        parse_triplets("(3,2)")


def test_presets_ship_and_parse():
    assert pipeline.preset_names() == PRESETS
    for name in PRESETS:
        cfg, extra = pipeline.load_preset(name)
        assert cfg.triplets and cfg.methods and 0 < cfg.learn_ratio < 1
        assert {"dataset", "reported"} <= set(extra)
    assert pipeline.load_preset("forda")[0].long_running
    assert not pipeline.load_preset("coffee")[0].long_running


def test_config_rejects_unknown_key():
    with pytest.raises(ValueError, match="bogus"):
        config_from_ini("[run]\ntrain = a.ts\ntest = b.ts\nbogus = 1\n")


def test_list_presets(capsys):
    assert main(["list-presets"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert [ln.split()[0] for ln in lines] == PRESETS
    assert main(["run", "--list-presets"]) == 0
    assert len(capsys.readouterr().out.strip().splitlines()) == 11


def test_transform_coffee_and_warm_cache(data_root, tmp_path, capsys):
    cache = tmp_path / "cache"
    args = ["transform", "--preset", "coffee", "--cache-dir", str(cache)]
    assert main(args + ["--out", str(tmp_path / "a")]) == 0
    assert main(args + ["--out", str(tmp_path / "b")]) == 0
    for f in ("train_features.csv", "test_features.csv"):
        a = (tmp_path / "a" / f).read_text()
        assert a == (tmp_path / "b" / f).read_text()
        header = a.splitlines()[0].split(",")
        assert header == ["label", "g0_ch0_class0_p5-mean", "g0_ch0_class1_p5-mean"]
    ra = json.loads((tmp_path / "a" / "transform_report.json").read_text())
    rb = json.loads((tmp_path / "b" / "transform_report.json").read_text())
    assert ra["cache_hits"] == 0 and rb["cache_hits"] == 1
    assert ra["bank_hashes"] == rb["bank_hashes"]
    assert len((tmp_path / "a" / "test_features.csv").read_text().splitlines()) == 29


def test_eval_on_transform_output(data_root, tmp_path, capsys):
    assert main(["transform", "--preset", "coffee", "--out", str(tmp_path / "f")]) == 0
    assert main(["eval", "--features", str(tmp_path / "f"), "--out", str(tmp_path / "r.json")]) == 0
    rep = json.loads((tmp_path / "r.json").read_text())
    assert rep["n_test"] == 28 and 0 <= rep["test_accuracy"] <= 1


def test_r_larger_than_h_fails_before_work(data_root, tmp_path, capsys, monkeypatch):
    def boom(*a, **k):
        raise AssertionError("bank built despite invalid config")
    monkeypatch.setattr(pipeline, "build_bank", boom, raising=False)
    monkeypatch.setattr(pipeline.BankCache, "get_or_build", boom)
    code = main(["run", "--preset", "coffee", "--triplets", "(301,2,1)", "--out", str(tmp_path / "r.json")])
    assert code == EXIT_CODES["config"] == 2
    err = _error(capsys)
    assert err["error"] == "config" and "exceeds" in err["message"]
    assert not (tmp_path / "r.json").exists()


def test_missing_file_is_io_error(tmp_path, capsys):
    code = main(["run", "--train", str(tmp_path / "nope.ts"), "--test", str(tmp_path / "nope.ts"),
                 "--triplets", "(3,2,1)", "--methods", "mean-mean"])
    assert code == EXIT_CODES["io"]
    assert _error(capsys)["error"] == "io"


def test_bad_method_is_config_or_data_error(data_root, capsys):
    code = main(["run", "--preset", "coffee", "--methods", "p5-skew"])
    assert code != 0
    assert _error(capsys)["error"] in {"config", "data"}


def test_config_file_with_flag_override(data_root, tmp_path, capsys):
    cfg = tmp_path / "mine.cfg"
    cfg.write_text(pipeline.preset_text("coffee").replace("p5-mean", "mean-mean"))
    out = tmp_path / "r.json"
    assert main(["run", "--config", str(cfg), "--seed", "3", "--classifier", "knn", "--out", str(out)]) == 0
    rep = json.loads(out.read_text())
    assert rep["methods"] == ["mean-mean"] and rep["seed"] == 3
    assert rep["run_config"]["seed"] == 3 and rep["run_config"]["classifier"] == "knn"


def test_seed_variation_same_schema(data_root, tmp_path, capsys):
    reports = []
    for seed in (1, 2):
        out = tmp_path / f"r{seed}.json"
        assert main(["run", "--preset", "basicmotions", "--seed", str(seed), "--out", str(out)]) == 0
        reports.append(json.loads(out.read_text()))
    a, b = reports
    assert set(a) == set(b)
    assert a["learn_indices"] != b["learn_indices"]
    for key in ("test_accuracy", "validation_accuracy", "best_config", "bank_hashes", "run_config",
                "transform_time", "classification_time", "tuning_time"):
        assert key in a


def test_report_is_reproducible(data_root):
    cfg, _ = pipeline.load_preset("coffee")
    a = pipeline.dumps_report(strip_timings(pipeline.run(cfg)))
    b = pipeline.dumps_report(strip_timings(pipeline.run(cfg)))
    assert a == b


def test_csv_dataset_route(data_root, tmp_path):
    from alt_tsc.dataset import export_csv, load_ts
    tr = load_ts(data_root / "Coffee" / "Coffee_TRAIN.ts")
    te = load_ts(data_root / "Coffee" / "Coffee_TEST.ts")
    (tmp_path / "tr.csv").write_text(export_csv(tr))
    (tmp_path / "te.csv").write_text(export_csv(te))
    cfg = RunConfig(name="coffee-csv", train=str(tmp_path / "tr.csv"), test=str(tmp_path / "te.csv"),
                    learn_ratio=0.25, triplets=[(3, 2, 1)], methods=["p5-mean"], classifier="knn")
    ref, _ = pipeline.load_preset("coffee")
    ref.classifier = "knn"
    a, b = pipeline.transform(cfg), pipeline.transform(ref)
    np.testing.assert_array_equal(a.train_X, b.train_X)
    np.testing.assert_array_equal(a.test_X, b.test_X)
