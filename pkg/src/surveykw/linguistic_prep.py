"""Deterministic text preparation: cleaning, tokenizing, tagging, lemmas.

The tagger is a lexicon plus ordered suffix rules over the Penn tagset; the
lemmatizer follows the detachment-rule scheme (exceptions first, then
ordered suffix rewrites validated against a per-class lemma dictionary).
Both read their data files from surveykw/data, so behavior is fully
inspectable and has no model dependency.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

__all__ = [
    "PENN_TAGS",
    "Token",
    "TaggerResources",
    "LemmaResources",
    "clean_text",
    "tokenize",
    "pos_tag",
    "lemmatize",
    "load_tagger_resources",
    "load_lemma_resources",
    "analyze",
]

DATA_DIR = Path(__file__).parent / "data"

PENN_TAGS = frozenset([
    "CC", "CD", "DT", "EX", "FW", "IN", "JJ", "JJR", "JJS", "LS", "MD",
    "NN", "NNP", "NNPS", "NNS", "PDT", "POS", "PRP", "PRP$", "RB", "RBR",
    "RBS", "RP", "SYM", "TO", "UH", "VB", "VBD", "VBG", "VBN", "VBP",
    "VBZ", "WDT", "WP", "WP$", "WRB",
    ".", ",", ":", "''", "``", "-LRB-", "-RRB-", "$", "#",
])

# kept whole during tokenization; lexicon entries supply their tags
ABBREVIATIONS = frozenset([
    "e.g.", "i.e.", "etc.", "vs.", "mr.", "mrs.", "ms.", "dr.", "prof.",
    "inc.", "ltd.", "co.", "corp.", "dept.", "approx.", "a.m.", "p.m.",
    "u.s.", "u.k.", "ph.d.",
])

_PUNCT_CHARS = set(".,:;!?()[]{}\"'`+=*/\\^|~<>@&%$#£€•–—‘’“”…")

_BULLET_RE = re.compile(r"^\s*(?:[-*•]+|\d+[.)])(?=\s)\s*")
_WS_RE = re.compile(r"\s+")
_NUMERIC_RE = re.compile(r"^\d[\d.,/:%-]*$")

# ordered; first match wins. The catch-all keeps tagging total.
DEFAULT_SUFFIX_RULES: tuple[tuple[str, str], ...] = (
    (r"^\d[\d.,/:%-]*$", "CD"),
    (r"ing$", "VBG"),
    (r"ed$", "VBD"),
    (r"(ous|ful|able|ible|ive|ic|al)$", "JJ"),
    (r"ly$", "RB"),
    (r"(ness|ment|tion|ity)$", "NN"),
    (r"(?<=[^s])s$", "NNS"),
    (r".", "NN"),
)

_SENTENCE_END_TAGS = {".", ":"}


@dataclass(frozen=True)
class Token:
    surface: str
    pos: str
    lemma: str
    index: int


@dataclass(frozen=True)
class TaggerResources:
    lexicon: dict[str, str]
    suffix_rules: tuple[tuple[str, str], ...] = DEFAULT_SUFFIX_RULES

    def __post_init__(self) -> None:
        compiled = tuple((re.compile(p, re.IGNORECASE), tag)
                         for p, tag in self.suffix_rules)
        object.__setattr__(self, "_compiled", compiled)


@dataclass(frozen=True)
class LemmaResources:
    detachment_rules: dict[str, tuple[tuple[str, str], ...]]
    exceptions: dict[str, dict[str, str]]
    lemma_dictionary: dict[str, frozenset[str]]


def clean_text(raw: str) -> str:
    """Strip list markup and collapse the response onto one line."""
    lines = raw.replace("\r\n", "\n").replace("\r", "\n").split("\n")
    stripped = [_BULLET_RE.sub("", line) for line in lines]
    return _WS_RE.sub(" ", " ".join(stripped)).strip()


def _split_chunk(chunk: str) -> list[str]:
    if chunk.lower() in ABBREVIATIONS:
        return [chunk]
    # peel leading punctuation one run of identical characters at a time
    for i, ch in enumerate(chunk):
        if ch not in _PUNCT_CHARS:
            break
    else:
        return [chunk] if len(set(chunk)) == 1 else _explode_punct(chunk)
    lead = chunk[:i]
    rest = chunk[i:]
    # peel trailing punctuation, but never split an abbreviation apart
    j = len(rest)
    while (j > 0 and rest[j - 1] in _PUNCT_CHARS
           and rest[:j].lower() not in ABBREVIATIONS):
        j -= 1
    core, tail = rest[:j], rest[j:]
    out: list[str] = []
    out.extend(_group_runs(lead))
    if core:
        out.append(core)
    out.extend(_group_runs(tail))
    return out


def _group_runs(punct: str) -> list[str]:
    runs: list[str] = []
    for ch in punct:
        if runs and runs[-1][0] == ch:
            runs[-1] += ch
        else:
            runs.append(ch)
    return runs


def _explode_punct(chunk: str) -> list[str]:
    return _group_runs(chunk)


def tokenize(text: str) -> list[str]:
    """Whitespace split, then detach edge punctuation into its own tokens."""
    tokens: list[str] = []
    for chunk in text.split():
        tokens.extend(_split_chunk(chunk))
    return tokens


def _rule_tag(token: str, resources: TaggerResources,
              sentence_initial: bool) -> str:
    compiled = resources._compiled  # type: ignore[attr-defined]
    for pattern, tag in compiled[:-1]:
        if pattern.search(token):
            return tag
    if not any(ch.isalnum() for ch in token):
        return "SYM"
    if not sentence_initial and token[:1].isupper():
        return "NNP"
    return compiled[-1][1]


def pos_tag(tokens: list[str],
            resources: TaggerResources) -> list[tuple[str, str]]:
    """Tag every token: lexicon (exact, then lowercase), then suffix rules."""
    tagged: list[tuple[str, str]] = []
    sentence_initial = True
    for token in tokens:
        tag = resources.lexicon.get(token)
        if tag is None:
            tag = resources.lexicon.get(token.lower())
        if tag is None:
            tag = _rule_tag(token, resources, sentence_initial)
        tagged.append((token, tag))
        sentence_initial = tag in _SENTENCE_END_TAGS
    return tagged


def _pos_class(pos: str) -> str:
    if pos.startswith("NN"):
        return "noun"
    if pos.startswith("VB"):
        return "verb"
    if pos.startswith("JJ"):
        return "adj"
    return "other"


def lemmatize(surface: str, pos: str, resources: LemmaResources) -> str:
    """Dictionary form of one token, lowercased."""
    word = surface.lower()
    cls = _pos_class(pos)
    if cls == "other":
        return word
    exception = resources.exceptions.get(cls, {}).get(word)
    if exception is not None:
        return exception
    dictionary = resources.lemma_dictionary.get(cls, frozenset())
    if word in dictionary:
        return word
    candidates: list[str] = []
    for suffix, repl in resources.detachment_rules.get(cls, ()):
        if not word.endswith(suffix):
            continue
        if suffix == "s" and word.endswith("ss"):
            continue
        candidate = word[: len(word) - len(suffix)] + repl
        if not candidate:
            continue
        if candidate in dictionary:
            return candidate
        candidates.append(candidate)
    if candidates:
        return candidates[0]
    return word


def load_tagger_resources(lexicon_path: Path | None = None) -> TaggerResources:
    path = lexicon_path or DATA_DIR / "lexicon.tsv"
    lexicon: dict[str, str] = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.rstrip("\n")
            if not line:
                continue
            word, tag = line.split("\t")
            lexicon[word] = tag
    return TaggerResources(lexicon=lexicon)


def load_lemma_resources(data_dir: Path | None = None) -> LemmaResources:
    base = data_dir or DATA_DIR
    rules: dict[str, list[tuple[str, str]]] = {}
    with open(base / "detachment_rules.tsv", encoding="utf-8") as fh:
        for line in fh:
            line = line.rstrip("\n")
            if not line:
                continue
            cls, suffix, repl = (line.split("\t") + [""])[:3]
            rules.setdefault(cls, []).append((suffix, repl))
    exceptions: dict[str, dict[str, str]] = {}
    for cls, name in (("noun", "noun.exc"), ("verb", "verb.exc"),
                      ("adj", "adj.exc")):
        table: dict[str, str] = {}
        with open(base / name, encoding="utf-8") as fh:
            for line in fh:
                parts = line.split()
                if len(parts) >= 2:
                    table[parts[0]] = parts[1]
        exceptions[cls] = table
    dictionary: dict[str, frozenset[str]] = {}
    for cls, name in (("noun", "lemmas_noun.txt"), ("verb", "lemmas_verb.txt"),
                      ("adj", "lemmas_adj.txt")):
        with open(base / name, encoding="utf-8") as fh:
            dictionary[cls] = frozenset(w.strip() for w in fh if w.strip())
    return LemmaResources(
        detachment_rules={c: tuple(r) for c, r in rules.items()},
        exceptions=exceptions,
        lemma_dictionary=dictionary,
    )


def analyze(text: str, tagger: TaggerResources,
            lemmas: LemmaResources) -> list[Token]:
    """Clean, tokenize, tag, and lemmatize one response text."""
    tagged = pos_tag(tokenize(clean_text(text)), tagger)
    return [Token(surface=s, pos=t, lemma=lemmatize(s, t, lemmas), index=i)
            for i, (s, t) in enumerate(tagged)]
