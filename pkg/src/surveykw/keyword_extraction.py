"""Noun-run keyword extraction over tagged survey responses.

Candidates are taken from maximal runs of noun-tagged tokens: every single
noun, every adjacent pair, and (optionally) the full run when it spans three
or more tokens. A candidate survives when it is multi-word or occurs often
enough across the whole corpus, and contains no excluded word. Keywords are
sequences of lemmas, not surface forms.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .corpus_io import ExclusionList, InternalError, RunConfig, SurveyResponse
from .linguistic_prep import (
    LemmaResources,
    TaggerResources,
    Token,
    analyze,
    clean_text,
)

__all__ = [
    "Keyword",
    "ResponseKeywords",
    "CorpusKeywordSummary",
    "Occurrence",
    "extract_candidates",
    "filter_candidates",
    "attach_adjectives",
    "extract_corpus",
    "keyword_string",
]

_ADJECTIVE_TAGS = frozenset({"JJ", "JJR", "JJS"})


@dataclass(frozen=True)
class Keyword:
    words: tuple[str, ...]
    occurrences: int = field(default=0, compare=False)

    @property
    def strength(self) -> int:
        return len(self.words)


@dataclass
class ResponseKeywords:
    response_id: int
    # (keyword, attached adjective lemmas as a sorted multiset)
    entries: list[tuple[Keyword, list[str]]] = field(default_factory=list)


@dataclass
class CorpusKeywordSummary:
    # (keyword, response_frequency, adjective -> responses with that pairing)
    rows: list[tuple[Keyword, int, dict[str, int]]] = field(
        default_factory=list)


# A candidate occurrence: the lemma sequence plus its token span, kept so
# adjective attachment can look at what precedes the first token.
Occurrence = tuple[tuple[str, ...], tuple[int, int]]


def keyword_string(words: tuple[str, ...]) -> str:
    return " ".join(words)


def _noun_runs(tokens: Sequence[Token]) -> Iterator[tuple[int, int]]:
    start = None
    for i, tok in enumerate(tokens):
        if tok.pos.startswith("N"):
            if start is None:
                start = i
        elif start is not None:
            yield start, i
            start = None
    if start is not None:
        yield start, len(tokens)


def extract_candidates(tokens: Sequence[Token],
                       emit_full_runs: bool = False) -> list[Occurrence]:
    """All candidate occurrences in one response, in text order."""
    out: list[Occurrence] = []
    for start, end in _noun_runs(tokens):
        lemmas = tuple(tokens[i].lemma for i in range(start, end))
        n = end - start
        for i in range(n):
            out.append(((lemmas[i],), (start + i, start + i + 1)))
        for i in range(n - 1):
            out.append((lemmas[i:i + 2], (start + i, start + i + 2)))
        if emit_full_runs and n >= 3:
            out.append((lemmas, (start, end)))
    return out


def filter_candidates(counts: Counter,
                      cfg: RunConfig,
                      exclusions: ExclusionList) -> set[tuple[str, ...]]:
    """Decide which candidate word sequences become keywords."""
    kept: set[tuple[str, ...]] = set()
    for words, occur in counts.items():
        if len(words) < cfg.no_limit_strength and \
                occur < cfg.min_single_occur:
            continue
        if any(w in exclusions for w in words):
            continue
        kept.add(words)
    return kept


def attach_adjectives(tokens: Sequence[Token],
                      span: tuple[int, int]) -> list[str]:
    """Lemmas of the maximal adjective run just before the span."""
    adjectives: list[str] = []
    i = span[0] - 1
    while i >= 0 and tokens[i].pos in _ADJECTIVE_TAGS:
        adjectives.append(tokens[i].lemma)
        i -= 1
    adjectives.reverse()
    return adjectives


def _check_kept(counts: Counter, kept: set[tuple[str, ...]],
                cfg: RunConfig, exclusions: ExclusionList) -> None:
    for words in kept:
        ok = len(words) >= cfg.no_limit_strength or \
            counts[words] >= cfg.min_single_occur
        if not ok or any(w in exclusions for w in words):
            raise InternalError(f"filter violation for {words!r}")


def extract_corpus(responses: list[SurveyResponse],
                   tagger: TaggerResources,
                   lemmas: LemmaResources,
                   cfg: RunConfig,
                   exclusions: ExclusionList,
                   token_lists: Sequence[list[Token]] | None = None,
                   ) -> tuple[list[ResponseKeywords], CorpusKeywordSummary]:
    """Run the two-pass pipeline over the whole corpus.

    Pass one tags every response and pools occurrence counts; pass two
    applies the corpus-wide filter to each response. ``token_lists`` may
    carry precomputed analyses (same order as ``responses``); otherwise
    each response is analysed here.
    """
    if token_lists is None:
        token_lists = []
        for resp in responses:
            resp.clean_text = clean_text(resp.raw_text)
            token_lists.append(analyze(resp.clean_text, tagger, lemmas))
    elif len(token_lists) != len(responses):
        raise InternalError("token_lists does not match responses")
    else:
        for resp in responses:
            if not resp.clean_text:
                resp.clean_text = clean_text(resp.raw_text)

    per_response_occurrences: list[list[Occurrence]] = [
        extract_candidates(toks, cfg.emit_full_runs) for toks in token_lists]
    counts: Counter = Counter()
    for occurrences in per_response_occurrences:
        counts.update(words for words, _ in occurrences)

    kept = filter_candidates(counts, cfg, exclusions)
    _check_kept(counts, kept, cfg, exclusions)

    results: list[ResponseKeywords] = []
    freq: Counter = Counter()
    adj_freq: dict[tuple[str, ...], Counter] = {}
    for resp, tokens, occurrences in zip(responses, token_lists,
                                         per_response_occurrences):
        adjectives: dict[tuple[str, ...], list[str]] = {}
        for words, span in occurrences:
            if words not in kept:
                continue
            adjectives.setdefault(words, []).extend(
                attach_adjectives(tokens, span))
        entries = [(Keyword(words, occurrences=counts[words]),
                    sorted(adjectives[words]))
                   for words in sorted(adjectives)]
        results.append(ResponseKeywords(response_id=resp.id, entries=entries))
        for keyword, adj in entries:
            freq[keyword.words] += 1
            adj_freq.setdefault(keyword.words, Counter()).update(set(adj))

    rows = [(Keyword(words, occurrences=counts[words]), freq[words],
             dict(adj_freq[words]))
            for words in sorted(freq, key=lambda w: (-freq[w], w))]
    return results, CorpusKeywordSummary(rows=rows)
