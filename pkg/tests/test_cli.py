import csv
import json
import subprocess
import sys
from pathlib import Path

import pytest

from surveykw.cli import main

DATA = Path(__file__).parent / "data"
SURVEY = str(DATA / "survey_four.csv")
GOLD = str(DATA / "survey_four_gold.csv")


def run_cli(*argv):
    return subprocess.run([sys.executable, "-m", "surveykw", *argv],
                          capture_output=True, text=True)


def read_rows(path):
    with open(path, encoding="utf-8", newline="") as fh:
        return list(csv.reader(fh))


OUTPUT_FILES = ("keywords_per_response.csv", "keywords_summary.csv",
                "manifest.json")


def output_bytes(out_dir):
    return {name: (Path(out_dir) / name).read_bytes()
            for name in OUTPUT_FILES}


class TestExtract:
    def test_happy_path(self, tmp_path):
        out = tmp_path / "out"
        proc = run_cli("extract", "--input", SURVEY, "--text-col",
                       "Response", "--min-single-occur", "1",
                       "--out-dir", str(out))
        assert proc.returncode == 0, proc.stderr
        assert "4 responses" in proc.stdout
        rows = read_rows(out / "keywords_per_response.csv")
        assert rows[0] == ["response_id", "response_text", "keyword",
                           "adjectives"]
        r2 = {row[2]: row[3] for row in rows if row[0] == "2"}
        assert r2 == {"study": "", "training": "internal",
                      "training centre": "internal", "centre": ""}
        summary = read_rows(out / "keywords_summary.csv")
        assert summary[0] == ["keyword", "response_frequency",
                              "adjective_frequencies"]

    def test_manifest_contents(self, tmp_path):
        out = tmp_path / "out"
        proc = run_cli("extract", "--input", SURVEY, "--text-col",
                       "Response", "--out-dir", str(out),
                       "--target-word", "pride")
        assert proc.returncode == 0, proc.stderr
        manifest = json.loads((out / "manifest.json").read_text())
        assert manifest["tool"] == "surveykw"
        assert manifest["subcommand"] == "extract"
        assert len(manifest["input_sha256"]) == 64
        assert manifest["config"]["target_word"] == "pride"
        assert manifest["config"]["min_single_occur"] == 3
        assert manifest["n_responses"] == 4
        # nothing volatile may leak into the manifest
        assert set(manifest) == {"tool", "version", "subcommand", "input",
                                 "input_sha256", "n_responses",
                                 "n_keyword_types", "acronyms_sha256",
                                 "config"}

    def test_reruns_are_byte_identical(self, tmp_path):
        # same command twice into the same directory: every output file,
        # manifest included, must come out identical
        out = tmp_path / "out"
        outs = []
        for _ in range(2):
            proc = run_cli("extract", "--input", SURVEY, "--text-col",
                           "Response", "--min-single-occur", "1",
                           "--out-dir", str(out))
            assert proc.returncode == 0, proc.stderr
            outs.append(output_bytes(out))
        assert outs[0] == outs[1]

    def test_worker_count_does_not_change_outputs(self, tmp_path):
        out = tmp_path / "out"
        outs = []
        for workers in ("1", "8"):
            proc = run_cli("extract", "--input", SURVEY, "--text-col",
                           "Response", "--min-single-occur", "1",
                           "--workers", workers, "--out-dir", str(out))
            assert proc.returncode == 0, proc.stderr
            outs.append(output_bytes(out))
        assert outs[0] == outs[1]

    def test_exclusions_flow_through(self, tmp_path):
        out = tmp_path / "out"
        acronyms = tmp_path / "acr.txt"
        acronyms.write_text("training\n", encoding="utf-8")
        proc = run_cli("extract", "--input", SURVEY, "--text-col",
                       "Response", "--min-single-occur", "1",
                       "--acronyms", str(acronyms), "--out-dir", str(out))
        assert proc.returncode == 0, proc.stderr
        keywords = {row[0] for row in
                    read_rows(out / "keywords_summary.csv")[1:]}
        assert "training" not in keywords
        assert "training centre" not in keywords
        assert "centre" in keywords


class TestBaseline:
    def test_top_k_and_empty_adjectives(self, tmp_path):
        out = tmp_path / "out"
        proc = run_cli("baseline-tfidf", "--input", SURVEY, "--text-col",
                       "Response", "--top-k", "2", "--out-dir", str(out))
        assert proc.returncode == 0, proc.stderr
        rows = read_rows(out / "keywords_per_response.csv")[1:]
        per_response = {}
        for rid, _, keyword, adjectives in rows:
            assert adjectives == ""
            if keyword:
                per_response.setdefault(rid, []).append(keyword)
        assert set(per_response) == {"0", "1", "2", "3"}
        assert all(len(kws) <= 2 for kws in per_response.values())
        assert all(" " not in kw for kws in per_response.values()
                   for kw in kws)

    def test_reruns_are_byte_identical(self, tmp_path):
        out = tmp_path / "out"
        outs = []
        for _ in range(2):
            proc = run_cli("baseline-tfidf", "--input", SURVEY,
                           "--text-col", "Response", "--out-dir", str(out))
            assert proc.returncode == 0, proc.stderr
            outs.append(output_bytes(out))
        assert outs[0] == outs[1]


class TestEvaluate:
    def extract_then_evaluate(self, tmp_path, *extra):
        out = tmp_path / "out"
        proc = run_cli("extract", "--input", SURVEY, "--text-col",
                       "Response", "--min-single-occur", "1",
                       "--out-dir", str(out))
        assert proc.returncode == 0, proc.stderr
        report = tmp_path / "report.json"
        proc = run_cli("evaluate", "--system",
                       str(out / "keywords_per_response.csv"),
                       "--gold", GOLD, "--report", str(report), *extra)
        return proc, report

    def test_full_round(self, tmp_path):
        proc, report_path = self.extract_then_evaluate(tmp_path)
        assert proc.returncode == 0, proc.stderr
        report = json.loads(report_path.read_text())
        assert report["n_responses"] == 4
        assert report["coverage_pct"] == 100.0
        # every gold keyword is found, so recall is perfect
        assert report["recall"] == 1.0
        assert report["correct_types"] == 7
        # every keyword appears in exactly one response here, so ranking
        # correlation is undefined
        assert report["spearman_rho"] is None
        assert "constant" in report["spearman_note"]
        assert "precision" in proc.stdout

    def test_jaccard_csv_written(self, tmp_path):
        proc, _ = self.extract_then_evaluate(
            tmp_path, "--jaccard-csv", str(tmp_path / "jaccard.csv"))
        assert proc.returncode == 0, proc.stderr
        rows = read_rows(tmp_path / "jaccard.csv")
        assert rows[0] == ["response_id", "jaccard"]
        assert [r[0] for r in rows[1:]] == ["0", "1", "2", "3"]

    def test_disjoint_ids_exit_one(self, tmp_path):
        out = tmp_path / "out"
        run_cli("extract", "--input", SURVEY, "--text-col", "Response",
                "--out-dir", str(out))
        gold = tmp_path / "gold.csv"
        gold.write_text("response_id,keyword\n90,fibre\n", encoding="utf-8")
        proc = run_cli("evaluate", "--system",
                       str(out / "keywords_per_response.csv"),
                       "--gold", str(gold),
                       "--report", str(tmp_path / "r.json"))
        assert proc.returncode == 1
        assert "share no response ids" in proc.stderr


class TestConfigFile:
    def test_config_equivalent_to_flags(self, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text(
            f"input = {SURVEY}\n"
            "text_column = Response\n"
            "min_single_occur = 1\n"
            f"output_dir = {tmp_path / 'via_cfg'}\n",
            encoding="utf-8")
        proc = run_cli("extract", "--config", str(cfg))
        assert proc.returncode == 0, proc.stderr
        proc = run_cli("extract", "--input", SURVEY, "--text-col",
                       "Response", "--min-single-occur", "1",
                       "--out-dir", str(tmp_path / "via_flags"))
        assert proc.returncode == 0, proc.stderr
        a = output_bytes(tmp_path / "via_cfg")
        b = output_bytes(tmp_path / "via_flags")
        # the two manifests record different output_dir values; the data
        # files must match byte for byte
        assert a["keywords_per_response.csv"] == b["keywords_per_response.csv"]
        assert a["keywords_summary.csv"] == b["keywords_summary.csv"]

    def test_flag_overrides_config(self, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text(
            f"input = {SURVEY}\n"
            "text_column = Response\n"
            "min_single_occur = 1\n",
            encoding="utf-8")
        out = tmp_path / "out"
        proc = run_cli("extract", "--config", str(cfg),
                       "--min-single-occur", "3", "--out-dir", str(out))
        assert proc.returncode == 0, proc.stderr
        manifest = json.loads((out / "manifest.json").read_text())
        assert manifest["config"]["min_single_occur"] == 3
        keywords = {row[0] for row in
                    read_rows(out / "keywords_summary.csv")[1:]}
        # singles with one occurrence are gone under the default floor
        assert keywords == {"work satisfaction", "training centre",
                            "investor return"}


class TestExitCodes:
    def test_missing_input_flag(self):
        proc = run_cli("extract")
        assert proc.returncode == 1
        assert "missing required --input" in proc.stderr

    def test_missing_input_file(self, tmp_path):
        proc = run_cli("extract", "--input", str(tmp_path / "nope.csv"))
        assert proc.returncode == 1
        assert "not found" in proc.stderr

    def test_bad_flag_value_shows_usage(self):
        proc = run_cli("extract", "--workers", "zero")
        assert proc.returncode == 1
        assert "usage" in proc.stderr.lower()

    def test_unknown_subcommand(self):
        proc = run_cli("transmogrify")
        assert proc.returncode == 1

    @pytest.mark.parametrize("flags", [
        ("baseline-tfidf", "--input", SURVEY, "--text-col", "Response",
         "--top-k", "0"),
        ("extract", "--input", SURVEY, "--text-col", "Response",
         "--min-single-occur", "0"),
        ("extract", "--input", SURVEY, "--text-col", "Response",
         "--workers", "0"),
    ])
    def test_invalid_settings(self, flags, tmp_path):
        proc = run_cli(*flags, "--out-dir", str(tmp_path / "out"))
        assert proc.returncode == 1

    def test_version_flag(self):
        proc = run_cli("--version")
        assert proc.returncode == 0
        assert proc.stdout.startswith("surveykw ")

    def test_in_process_main_maps_input_errors(self, tmp_path, capsys):
        assert main(["extract"]) == 1
        assert main(["extract", "--input", str(tmp_path / "gone.csv")]) == 1
        capsys.readouterr()
