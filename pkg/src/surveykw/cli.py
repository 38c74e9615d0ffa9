"""Command line front end.

Three subcommands share one flag set: `extract` runs the noun-run pipeline,
`baseline-tfidf` the unigram baseline, `evaluate` scores a keywords file
against a gold standard. Exit codes: 0 on success, 1 for bad input or bad
arguments, 2 when an internal invariant breaks.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import __version__
from .corpus_io import (
    InputError,
    InternalError,
    RunConfig,
    load_config_file,
    load_exclusions,
    load_responses,
    load_stopwords,
    merge_config,
    read_gold_file,
    read_keywords_file,
    write_keywords_per_response,
    write_keywords_summary,
)
from .eval_metrics import (
    GoldStandard,
    evaluate,
    write_jaccard_csv,
    write_report,
)
from .keyword_extraction import extract_corpus, keyword_string
from .linguistic_prep import (
    analyze,
    clean_text,
    load_lemma_resources,
    load_tagger_resources,
)
from .tfidf_baseline import build_model, extract_topk, summarize_topk

_CONFIG_KEYS = ("text_column", "target_word", "org_name", "acronym_path",
                "min_single_occur", "no_limit_strength", "emit_full_runs",
                "tfidf_top_k", "output_dir")
_IO_KEYS = ("input", "gold", "system", "report", "jaccard_csv", "workers")


class _Parser(argparse.ArgumentParser):
    """Argument errors are input errors, so they exit 1, not 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(1)


def _add_shared_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--config", type=Path,
                     help="flat key = value settings file; flags win")
    sub.add_argument("--input", help="responses CSV or TSV")
    sub.add_argument("--text-col", dest="text_column",
                     help="column name, or 0-based index for headerless "
                          "files (default 0)")
    sub.add_argument("--acronyms", dest="acronym_path",
                     help="file of words to exclude, one per line")
    sub.add_argument("--target-word", help="survey prompt word to exclude")
    sub.add_argument("--org-name", help="organisation name to exclude")
    sub.add_argument("--min-single-occur", type=int,
                     help="corpus occurrences a single-word keyword needs")
    sub.add_argument("--no-limit-strength", type=int,
                     help="word count at which the occurrence floor stops "
                          "applying")
    sub.add_argument("--emit-full-runs",
                     action=argparse.BooleanOptionalAction, default=None,
                     help="also emit full noun runs of three or more words")
    sub.add_argument("--top-k", dest="tfidf_top_k", type=int,
                     help="keywords per response for the baseline")
    sub.add_argument("--out-dir", dest="output_dir",
                     help="directory for output files")
    sub.add_argument("--gold", help="gold standard CSV "
                                    "(response_id,keyword)")
    sub.add_argument("--system", help="keywords_per_response.csv to score")
    sub.add_argument("--report", help="where to write the report JSON")
    sub.add_argument("--jaccard-csv", dest="jaccard_csv",
                     help="optional per-response Jaccard CSV")
    sub.add_argument("--workers", type=int,
                     help="processes for the tagging pass (default 1)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="surveykw",
                     description="Keyword extraction for open-ended survey "
                                 "responses")
    parser.add_argument("--version", action="version",
                        version=f"surveykw {__version__}")
    subs = parser.add_subparsers(dest="command", required=True)
    for name, func, blurb in (
            ("extract", run_extract,
             "extract noun-run keywords from responses"),
            ("baseline-tfidf", run_baseline,
             "extract top-k tf-idf unigrams from responses"),
            ("evaluate", run_evaluate,
             "score a keywords file against a gold standard")):
        sub = subs.add_parser(name, help=blurb, description=blurb)
        _add_shared_flags(sub)
        sub.set_defaults(func=func)
    return parser


def _resolve(args: argparse.Namespace) -> tuple[RunConfig, dict]:
    """Layer defaults, config file, then explicit flags."""
    file_values = load_config_file(args.config) if args.config else {}
    cli_values = {key: getattr(args, key, None)
                  for key in _CONFIG_KEYS + _IO_KEYS}
    if cli_values.get("text_column") is not None:
        raw = cli_values["text_column"]
        cli_values["text_column"] = int(raw) if raw.lstrip("-").isdigit() \
            else raw
    if cli_values.get("acronym_path") is not None:
        cli_values["acronym_path"] = Path(cli_values["acronym_path"])
    if cli_values.get("output_dir") is not None:
        cli_values["output_dir"] = Path(cli_values["output_dir"])

    cfg = merge_config(
        {k: v for k, v in file_values.items() if k in _CONFIG_KEYS},
        {k: v for k, v in cli_values.items() if k in _CONFIG_KEYS})
    io = {k: None for k in _IO_KEYS}
    io.update({k: v for k, v in file_values.items() if k in _IO_KEYS})
    io.update({k: v for k, v in cli_values.items()
               if k in _IO_KEYS and v is not None})
    if io["workers"] is None:
        io["workers"] = 1
    if io["workers"] < 1:
        raise InputError("workers must be >= 1")
    return cfg, io


def _require(io: dict, key: str, flag: str) -> str:
    if not io.get(key):
        raise InputError(f"missing required {flag}")
    return io[key]


# Worker processes tag independently; resources load once per process.
_WORKER = None


def _init_worker():
    global _WORKER
    _WORKER = (load_tagger_resources(), load_lemma_resources())


def _analyze_in_worker(text: str):
    return analyze(text, _WORKER[0], _WORKER[1])


def _analyze_all(texts: list[str], workers: int, tagger, lemmas) -> list:
    if workers <= 1 or len(texts) < 2:
        return [analyze(t, tagger, lemmas) for t in texts]
    chunk = max(1, len(texts) // (workers * 4))
    with ProcessPoolExecutor(max_workers=workers,
                             initializer=_init_worker) as pool:
        return list(pool.map(_analyze_in_worker, texts, chunksize=chunk))


def _sha256(path: str | Path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def _write_manifest(out_dir: Path, subcommand: str, input_path: str,
                    cfg: RunConfig, n_responses: int,
                    n_keyword_types: int) -> None:
    # no timestamps, hostnames, or worker counts: repeated runs must
    # produce identical bytes
    manifest = {
        "tool": "surveykw",
        "version": __version__,
        "subcommand": subcommand,
        "input": str(input_path),
        "input_sha256": _sha256(input_path),
        "n_responses": n_responses,
        "n_keyword_types": n_keyword_types,
        "acronyms_sha256": _sha256(cfg.acronym_path)
        if cfg.acronym_path else None,
        "config": {
            "text_column": cfg.text_column,
            "target_word": cfg.target_word,
            "org_name": cfg.org_name,
            "acronym_path": str(cfg.acronym_path)
            if cfg.acronym_path else None,
            "min_single_occur": cfg.min_single_occur,
            "no_limit_strength": cfg.no_limit_strength,
            "emit_full_runs": cfg.emit_full_runs,
            "tfidf_top_k": cfg.tfidf_top_k,
            "output_dir": str(cfg.output_dir),
        },
    }
    with open(out_dir / "manifest.json", "w", encoding="utf-8") as fh:
        json.dump(manifest, fh, indent=2)
        fh.write("\n")


def _prepare_corpus(cfg: RunConfig, io: dict):
    input_path = _require(io, "input", "--input")
    responses = load_responses(input_path, cfg.text_column)
    exclusions = load_exclusions(cfg.acronym_path, cfg.target_word,
                                 cfg.org_name)
    tagger = load_tagger_resources()
    lemmas = load_lemma_resources()
    for resp in responses:
        resp.clean_text = clean_text(resp.raw_text)
    token_lists = _analyze_all([r.clean_text for r in responses],
                               io["workers"], tagger, lemmas)
    return input_path, responses, exclusions, tagger, lemmas, token_lists


def _write_outputs(cfg: RunConfig, subcommand: str, input_path: str,
                   responses, results, summary) -> Path:
    out_dir = Path(cfg.output_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    texts = {r.id: r.raw_text for r in responses}
    a_rows = []
    for resp in results:
        if not resp.entries:
            a_rows.append((resp.response_id, texts[resp.response_id], "",
                           []))
        for kw, adjectives in resp.entries:
            a_rows.append((resp.response_id, texts[resp.response_id],
                           keyword_string(kw.words), adjectives))
    write_keywords_per_response(out_dir / "keywords_per_response.csv",
                                a_rows)
    write_keywords_summary(
        out_dir / "keywords_summary.csv",
        [(keyword_string(kw.words), freq, adj)
         for kw, freq, adj in summary.rows])
    _write_manifest(out_dir, subcommand, input_path, cfg,
                    n_responses=len(responses),
                    n_keyword_types=len(summary.rows))
    return out_dir


def run_extract(args: argparse.Namespace) -> int:
    cfg, io = _resolve(args)
    input_path, responses, exclusions, tagger, lemmas, token_lists = \
        _prepare_corpus(cfg, io)
    results, summary = extract_corpus(responses, tagger, lemmas, cfg,
                                      exclusions, token_lists=token_lists)
    out_dir = _write_outputs(cfg, "extract", input_path, responses, results,
                             summary)
    covered = sum(1 for r in results if r.entries)
    pct = 100.0 * covered / len(results) if results else 0.0
    print(f"extract: {len(responses)} responses, {len(summary.rows)} "
          f"keyword types, coverage {pct:.1f}%")
    print(f"wrote {out_dir / 'keywords_per_response.csv'}")
    print(f"wrote {out_dir / 'keywords_summary.csv'}")
    return 0


def run_baseline(args: argparse.Namespace) -> int:
    cfg, io = _resolve(args)
    input_path, responses, exclusions, tagger, lemmas, token_lists = \
        _prepare_corpus(cfg, io)
    stopwords = load_stopwords()
    model = build_model(responses, tagger, lemmas, stopwords, exclusions,
                        token_lists=token_lists)
    results = extract_topk(model, cfg.tfidf_top_k)
    summary = summarize_topk(results)
    out_dir = _write_outputs(cfg, "baseline-tfidf", input_path, responses,
                             results, summary)
    covered = sum(1 for r in results if r.entries)
    pct = 100.0 * covered / len(results) if results else 0.0
    print(f"baseline-tfidf: {len(responses)} responses, top {cfg.tfidf_top_k}"
          f" terms each, coverage {pct:.1f}%")
    print(f"wrote {out_dir / 'keywords_per_response.csv'}")
    print(f"wrote {out_dir / 'keywords_summary.csv'}")
    return 0


def _fmt(value: float | None) -> str:
    return "n/a" if value is None else f"{value:.4f}"


def run_evaluate(args: argparse.Namespace) -> int:
    cfg, io = _resolve(args)
    system = read_keywords_file(_require(io, "system", "--system"))
    gold = GoldStandard(read_gold_file(_require(io, "gold", "--gold")))
    if not set(system) & set(gold.per_response):
        raise InputError("system and gold files share no response ids")

    report, jaccard = evaluate(system, gold)
    report_path = Path(io["report"]) if io["report"] else \
        Path(cfg.output_dir) / "report.json"
    report_path.parent.mkdir(parents=True, exist_ok=True)
    write_report(report, report_path)
    if io["jaccard_csv"]:
        jpath = Path(io["jaccard_csv"])
        jpath.parent.mkdir(parents=True, exist_ok=True)
        write_jaccard_csv(jpath, jaccard)

    print(f"evaluate: {report.n_responses} responses, "
          f"{report.n_system_types} system vs {report.n_gold_types} gold "
          "keyword types")
    print(f"coverage {report.coverage_pct:.1f}%, correct types "
          f"{report.correct_types}")
    print(f"precision {report.precision:.4f}, recall {report.recall:.4f}, "
          f"f1 {report.f1:.4f}")
    if report.spearman_rho is None:
        print(f"spearman n/a ({report.spearman_note})")
    else:
        print(f"spearman rho {report.spearman_rho:.4f} "
              f"(p {report.spearman_p:.4f}, n {report.spearman_n})")
    print(f"jaccard mean {report.jaccard_mean:.4f} "
          f"(min {report.jaccard_min:.4f}, max {report.jaccard_max:.4f}, "
          f"std {report.jaccard_std:.4f})")
    print(f"wrote {report_path}")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else 1
        return code
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001 - last-resort mapping to exit 2
        print(f"internal error: {type(exc).__name__}: {exc}",
              file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
