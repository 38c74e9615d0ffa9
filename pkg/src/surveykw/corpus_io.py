"""Survey corpus loading, run configuration, and the on-disk file formats.

Inputs are CSV (RFC-4180) or TSV, UTF-8 with optional BOM. All writers emit
canonically sorted rows with '\n' line endings so repeated runs are
byte-identical.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field, fields, replace
from pathlib import Path

__all__ = [
    "InputError",
    "InternalError",
    "SurveyResponse",
    "ExclusionList",
    "RunConfig",
    "load_responses",
    "load_exclusions",
    "load_config_file",
    "load_stopwords",
    "read_keywords_file",
    "write_keywords_per_response",
    "write_keywords_summary",
    "read_gold_file",
]

DATA_DIR = Path(__file__).parent / "data"


class InputError(Exception):
    """Bad user input: missing files, malformed rows, invalid settings."""


class InternalError(Exception):
    """A pipeline invariant failed; indicates a bug, not bad input."""


@dataclass
class SurveyResponse:
    id: int
    raw_text: str
    clean_text: str = ""


@dataclass(frozen=True)
class ExclusionList:
    entries: frozenset[str] = frozenset()

    def __contains__(self, word: str) -> bool:
        return word.lower() in self.entries


@dataclass(frozen=True)
class RunConfig:
    text_column: str | int = 0
    target_word: str | None = None
    org_name: str | None = None
    acronym_path: Path | None = None
    min_single_occur: int = 3
    no_limit_strength: int = 2
    emit_full_runs: bool = False
    tfidf_top_k: int = 3
    output_dir: Path = Path("out")

    def __post_init__(self) -> None:
        if self.min_single_occur < 1:
            raise InputError("min_single_occur must be >= 1")
        if self.no_limit_strength < 2:
            raise InputError("no_limit_strength must be >= 2")
        if self.tfidf_top_k < 1:
            raise InputError("tfidf_top_k must be >= 1")


def load_responses(path: str | Path,
                   text_column: str | int) -> list[SurveyResponse]:
    """Read one response per data row, preserving cell text verbatim."""
    path = Path(path)
    if not path.is_file():
        raise InputError(f"responses file not found: {path}")
    delimiter = "\t" if path.suffix.lower() == ".tsv" else ","
    responses: list[SurveyResponse] = []
    with open(path, encoding="utf-8-sig", newline="") as fh:
        reader = csv.reader(fh, delimiter=delimiter, strict=True)
        try:
            if isinstance(text_column, str):
                header = next(reader, None)
                if header is None:
                    return []
                try:
                    col = header.index(text_column)
                except ValueError:
                    raise InputError(
                        f"column {text_column!r} not in header {header}"
                    ) from None
            else:
                col = text_column
            for row in reader:
                if not row:
                    continue
                if col >= len(row):
                    raise InputError(
                        f"row {reader.line_num}: no column {col} "
                        f"({len(row)} cells)")
                responses.append(
                    SurveyResponse(id=len(responses), raw_text=row[col]))
        except csv.Error as exc:
            raise InputError(
                f"malformed row {reader.line_num} in {path}: {exc}") from exc
    return responses


def load_exclusions(acronym_path: str | Path | None = None,
                    target_word: str | None = None,
                    org_name: str | None = None) -> ExclusionList:
    entries: set[str] = set()
    if acronym_path is not None:
        path = Path(acronym_path)
        if not path.is_file():
            raise InputError(f"acronym file not found: {path}")
        for line in path.read_text(encoding="utf-8-sig").splitlines():
            line = line.strip()
            if line and not line.startswith("#"):
                entries.add(line.lower())
    for word in (target_word, org_name):
        if word:
            entries.add(word.strip().lower())
    return ExclusionList(entries=frozenset(entries))


def load_stopwords(path: str | Path | None = None) -> frozenset[str]:
    p = Path(path) if path else DATA_DIR / "stopwords.txt"
    return frozenset(w.strip() for w in p.read_text(encoding="utf-8").split()
                     if w.strip())


_BOOL_VALUES = {"true": True, "yes": True, "1": True,
                "false": False, "no": False, "0": False}

# RunConfig fields plus per-invocation settings the CLI also accepts
_CONFIG_FIELDS = {f.name for f in fields(RunConfig)} | {
    "input", "gold", "system", "report", "jaccard_csv", "workers"}


def _parse_config_value(key: str, value: str):
    if key in ("min_single_occur", "no_limit_strength", "tfidf_top_k",
               "workers"):
        try:
            return int(value)
        except ValueError:
            raise InputError(f"config {key}: expected integer, got "
                             f"{value!r}") from None
    if key == "emit_full_runs":
        try:
            return _BOOL_VALUES[value.lower()]
        except KeyError:
            raise InputError(f"config {key}: expected true/false, got "
                             f"{value!r}") from None
    if key in ("acronym_path", "output_dir"):
        return Path(value)
    if key == "text_column":
        return int(value) if value.lstrip("-").isdigit() else value
    return value


def load_config_file(path: str | Path) -> dict:
    """Parse flat `key = value` lines into RunConfig field values."""
    path = Path(path)
    if not path.is_file():
        raise InputError(f"config file not found: {path}")
    values: dict = {}
    for lineno, line in enumerate(
            path.read_text(encoding="utf-8-sig").splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise InputError(f"config line {lineno}: expected key = value, "
                             f"got {line!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if key not in _CONFIG_FIELDS:
            raise InputError(f"config line {lineno}: unknown key {key!r}")
        values[key] = _parse_config_value(key, value)
    return values


def merge_config(file_values: dict, cli_values: dict) -> RunConfig:
    """Defaults, then config-file values, then explicit CLI flags."""
    merged = dict(file_values)
    merged.update({k: v for k, v in cli_values.items() if v is not None})
    return replace(RunConfig(), **merged)


# ---------------------------------------------------------------------------
# Output file formats
# ---------------------------------------------------------------------------
#
# File A, keywords_per_response.csv: response_id, response_text, keyword,
# adjectives (';'-joined). A response without keywords keeps one row with an
# empty keyword cell so the response set is recoverable from the file.
#
# File B, keywords_summary.csv: keyword, response_frequency,
# adjective_frequencies ('adjective:count' pairs, ';'-joined).


def write_keywords_per_response(path: str | Path,
                                rows: list[tuple[int, str, str, list[str]]]
                                ) -> None:
    """Rows are (response_id, response_text, keyword, adjectives)."""
    ordered = sorted(rows, key=lambda r: (r[0], r[2]))
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["response_id", "response_text", "keyword",
                         "adjectives"])
        for rid, text, keyword, adjectives in ordered:
            writer.writerow([rid, text, keyword, ";".join(adjectives)])


def write_keywords_summary(path: str | Path,
                           rows: list[tuple[str, int, dict[str, int]]]
                           ) -> None:
    """Rows are (keyword, response_frequency, adjective -> count)."""
    ordered = sorted(rows, key=lambda r: (-r[1], r[0]))
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["keyword", "response_frequency",
                         "adjective_frequencies"])
        for keyword, freq, adj_freq in ordered:
            pairs = sorted(adj_freq.items(), key=lambda kv: (-kv[1], kv[0]))
            cell = ";".join(f"{adj}:{count}" for adj, count in pairs)
            writer.writerow([keyword, freq, cell])


def read_keywords_file(path: str | Path) -> dict[int, set[str]]:
    """Read file A back into response_id -> keyword set.

    Placeholder rows (empty keyword cell) register the response with an
    empty set, so coverage keeps its denominator.
    """
    path = Path(path)
    if not path.is_file():
        raise InputError(f"keywords file not found: {path}")
    sets: dict[int, set[str]] = {}
    with open(path, encoding="utf-8-sig", newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or header[:1] != ["response_id"]:
            raise InputError(f"{path}: expected a keywords_per_response "
                             "header")
        for row in reader:
            if not row:
                continue
            if len(row) < 3:
                raise InputError(f"{path} row {reader.line_num}: expected "
                                 f"4 columns, got {len(row)}")
            try:
                rid = int(row[0])
            except ValueError:
                raise InputError(f"{path} row {reader.line_num}: bad "
                                 f"response_id {row[0]!r}") from None
            sets.setdefault(rid, set())
            if row[2]:
                sets[rid].add(row[2])
    return sets


def read_gold_file(path: str | Path) -> dict[int, set[str]]:
    """Read a gold CSV (response_id, keyword) into response_id -> set."""
    path = Path(path)
    if not path.is_file():
        raise InputError(f"gold file not found: {path}")
    sets: dict[int, set[str]] = {}
    with open(path, encoding="utf-8-sig", newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None:
            return sets
        if [h.strip().lower() for h in header[:2]] != ["response_id",
                                                       "keyword"]:
            raise InputError(f"{path}: expected header response_id,keyword")
        for row in reader:
            if not row:
                continue
            try:
                rid = int(row[0])
            except ValueError:
                raise InputError(f"{path} row {reader.line_num}: bad "
                                 f"response_id {row[0]!r}") from None
            sets.setdefault(rid, set())
            if len(row) > 1 and row[1]:
                sets[rid].add(row[1])
    return sets
