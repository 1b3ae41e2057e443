"""End-to-end tests for the command-line interface."""

from pathlib import Path

import numpy as np
import pytest

from ukrstylo.cli import main

GOLD = Path(__file__).parent / "fixtures" / "gold" / "gold.conllu"
EXPECTED = Path(__file__).parent / "fixtures" / "gold" / "expected_features.csv"


def run(argv):
    return main([str(a) for a in argv])


# ------------------------------------------------------------------- extract

def test_extract_matches_committed_oracle(tmp_path, capsys):
    assert run(["extract", "--input", GOLD, "--output", tmp_path]) == 0
    assert (tmp_path / "features.csv").read_bytes() == EXPECTED.read_bytes()
    assert (tmp_path / "catalog.tsv").exists()
    out = capsys.readouterr().out
    assert "10 documents x 104 metrics" in out


def test_extract_rerun_is_byte_identical(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    run(["extract", "--input", GOLD, "--output", a])
    run(["extract", "--input", GOLD, "--output", b])
    assert (a / "features.csv").read_bytes() == (b / "features.csv").read_bytes()
    assert (a / "catalog.tsv").read_bytes() == (b / "catalog.tsv").read_bytes()


def test_extract_group_selection(tmp_path):
    run(["extract", "--input", GOLD, "--output", tmp_path, "--groups", "pos"])
    header = (tmp_path / "features.csv").read_text().splitlines()[0]
    cols = header.split(",")[1:]
    assert len(cols) == 12
    assert all(c.startswith("POS_") for c in cols)


def test_extract_jobs_invariant(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    run(["extract", "--input", GOLD, "--output", a, "--jobs", "1"])
    run(["extract", "--input", GOLD, "--output", b, "--jobs", "4"])
    assert (a / "features.csv").read_bytes() == (b / "features.csv").read_bytes()


def test_extract_trace_output(tmp_path):
    run(["extract", "--input", GOLD, "--output", tmp_path,
         "--trace", "L_ADV_POS"])
    lines = (tmp_path / "trace_L_ADV_POS.tsv").read_text().splitlines()
    assert lines[0] == "metric_id\tdoc_id\tsent_id\ttoken_index\tform"
    forms = [ln.split("\t")[4] for ln in lines[1:]
             if ln.split("\t")[1] == "paper_adv"]
    assert forms == ["Потрібно", "відверто"]


def test_extract_accepts_directory_input(tmp_path):
    run(["extract", "--input", GOLD.parent, "--output", tmp_path])
    body = (tmp_path / "features.csv").read_text().splitlines()
    assert len(body) == 11  # header + 10 documents


# ----------------------------------------------------------- catalog / trace

def test_catalog_to_file_and_stdout(tmp_path, capsys):
    out = tmp_path / "catalog.tsv"
    assert run(["catalog", "--output", out]) == 0
    text = out.read_text()
    assert text.splitlines()[0] == "# group lexical: declared 56, actual 55"
    assert run(["catalog"]) == 0
    assert capsys.readouterr().out == text


def test_trace_resolves_alias(tmp_path):
    out = tmp_path / "t.tsv"
    assert run(["trace", "--input", GOLD, "--metric", "L_INANIM_NOUNS",
                "--output", out]) == 0
    body = out.read_text().splitlines()[1:]
    assert body and all(ln.startswith("L_INANIM_NOUN\t") for ln in body)


# -------------------------------------------------------- classify / explain

@pytest.fixture(scope="module")
def ml_csvs(tmp_path_factory):
    tmp = tmp_path_factory.mktemp("mlcsv")
    rng = np.random.default_rng(0)
    n, d, k = 90, 8, 3
    centers = rng.normal(0, 2.5, size=(k, d))
    y = np.repeat(np.arange(k), n // k)
    X = np.clip(np.abs(centers[y] + rng.normal(0, 0.6, size=(n, d))) / 10,
                0.0, 1.0)
    feat, lab = tmp / "features.csv", tmp / "labels.csv"
    with feat.open("w", newline="") as f:
        f.write("doc_id," + ",".join(f"m{j}" for j in range(d)) + "\r\n")
        for i in range(n):
            f.write(f"d{i:03d}," + ",".join("%.17g" % v for v in X[i]) + "\r\n")
    with lab.open("w", newline="") as f:
        f.write("doc_id,label\r\n")
        for i in range(n):
            f.write(f"d{i:03d},c{y[i]}\r\n")
    return feat, lab


def test_classify_writes_report_and_figure(tmp_path, ml_csvs):
    feat, lab = ml_csvs
    report = tmp_path / "run" / "report.tsv"
    assert run(["classify", "--features", feat, "--labels", lab,
                "--seed", "1", "--report", report]) == 0
    rows = dict(ln.split("\t") for ln in report.read_text().splitlines()[1:])
    assert float(rows["macro_f1"]) > 0.9
    assert rows["classes"] == "c0,c1,c2"
    assert (rows["train_size"], rows["validation_size"], rows["test_size"]) \
        == ("60", "12", "18")
    png = report.with_suffix(".png")
    assert png.stat().st_size > 0 and png.read_bytes()[:4] == b"\x89PNG"


def test_explain_writes_attribution_and_figures(tmp_path, ml_csvs):
    feat, lab = ml_csvs
    report = tmp_path / "attribution.tsv"
    assert run(["explain", "--features", feat, "--labels", lab, "--seed", "1",
                "--permutations", "20", "--report", report]) == 0
    lines = report.read_text().splitlines()
    assert lines[0] == "class\tmetric_id\tshapley_mean\tclass_mean\tdescription"
    assert {ln.split("\t")[0] for ln in lines[1:]} == {"c0", "c1", "c2"}
    for name in ("c0", "c1", "c2"):
        png = tmp_path / f"attribution_{name}.png"
        assert png.read_bytes()[:4] == b"\x89PNG"


# --------------------------------------------------------------------- config

def test_config_fills_flags_and_explicit_flags_win(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text(f"# comment line\ninput = {GOLD}\ngroups = pos\njobs = 2\n")
    a, b = tmp_path / "a", tmp_path / "b"
    run(["extract", "--config", cfg, "--output", a])
    assert len((a / "features.csv").read_text().splitlines()[0].split(",")) == 13
    run(["extract", "--config", cfg, "--output", b, "--groups", "syntax"])
    assert len((b / "features.csv").read_text().splitlines()[0].split(",")) == 14


def test_config_rejects_unknown_key(tmp_path):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("no_such_flag = 1\n")
    with pytest.raises(SystemExit):
        run(["extract", "--config", cfg, "--input", GOLD,
             "--output", tmp_path])


# --------------------------------------------------------------------- errors

def test_missing_input_flag_exits():
    with pytest.raises(SystemExit):
        run(["extract", "--output", "/tmp/never"])


def test_nonexistent_input_exits():
    with pytest.raises(SystemExit):
        run(["extract", "--input", "/no/such/file.conllu",
             "--output", "/tmp/never"])


def test_unknown_metric_reports_error(tmp_path, capsys):
    assert run(["trace", "--input", GOLD, "--metric", "NOT_A_METRIC"]) == 1
    assert "error:" in capsys.readouterr().err
