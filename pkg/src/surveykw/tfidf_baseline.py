"""Unigram tf-idf baseline over the same tagged responses.

Candidate terms are lemmas of alphabetic tokens, minus stopwords and
excluded words. Each response gets its top-k terms by tf * ln(n/df),
ties broken by term spelling, so a term present in every response
scores zero and sinks to the bottom.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

from .corpus_io import ExclusionList, InternalError, SurveyResponse
from .keyword_extraction import (
    CorpusKeywordSummary,
    Keyword,
    ResponseKeywords,
)
from .linguistic_prep import (
    LemmaResources,
    TaggerResources,
    Token,
    analyze,
    clean_text,
)

__all__ = ["TfIdfModel", "build_model", "score", "extract_topk",
           "summarize_topk"]


@dataclass
class TfIdfModel:
    n_docs: int
    document_frequency: dict[str, int] = field(default_factory=dict)
    # (response_id, term) -> raw count in that response
    per_response_tf: dict[tuple[int, str], int] = field(default_factory=dict)
    response_ids: tuple[int, ...] = ()


def _candidate_terms(tokens: Sequence[Token],
                     stopwords: frozenset[str],
                     exclusions: ExclusionList) -> list[str]:
    terms = []
    for tok in tokens:
        if not tok.surface.isalpha():
            continue
        if tok.surface.lower() in stopwords:
            continue
        if tok.surface in exclusions or tok.lemma in exclusions:
            continue
        terms.append(tok.lemma)
    return terms


def build_model(responses: list[SurveyResponse],
                tagger: TaggerResources,
                lemmas: LemmaResources,
                stopwords: frozenset[str],
                exclusions: ExclusionList,
                token_lists: Sequence[list[Token]] | None = None,
                ) -> TfIdfModel:
    if token_lists is None:
        token_lists = []
        for resp in responses:
            resp.clean_text = clean_text(resp.raw_text)
            token_lists.append(analyze(resp.clean_text, tagger, lemmas))
    elif len(token_lists) != len(responses):
        raise InternalError("token_lists does not match responses")

    model = TfIdfModel(n_docs=len(responses),
                       response_ids=tuple(r.id for r in responses))
    for resp, tokens in zip(responses, token_lists):
        counts = Counter(_candidate_terms(tokens, stopwords, exclusions))
        for term, tf in counts.items():
            model.per_response_tf[(resp.id, term)] = tf
            model.document_frequency[term] = \
                model.document_frequency.get(term, 0) + 1
    return model


def score(model: TfIdfModel, response_id: int, term: str) -> float:
    """tf * ln(n_docs / df); the term must occur in the response."""
    key = (response_id, term)
    if key not in model.per_response_tf:
        raise KeyError(f"term {term!r} not in response {response_id}")
    tf = model.per_response_tf[key]
    df = model.document_frequency[term]
    return tf * math.log(model.n_docs / df)


def extract_topk(model: TfIdfModel, top_k: int) -> list[ResponseKeywords]:
    """Top-k terms per response, score descending then term ascending."""
    terms_by_response: dict[int, list[str]] = {rid: []
                                               for rid in model.response_ids}
    for rid, term in model.per_response_tf:
        terms_by_response[rid].append(term)
    results = []
    for rid in model.response_ids:
        ranked = sorted(terms_by_response[rid],
                        key=lambda t: (-score(model, rid, t), t))
        entries = [(Keyword((term,),
                            occurrences=model.per_response_tf[(rid, term)]),
                    [])
                   for term in ranked[:top_k]]
        results.append(ResponseKeywords(response_id=rid, entries=entries))
    return results


def summarize_topk(results: list[ResponseKeywords]) -> CorpusKeywordSummary:
    freq: Counter = Counter()
    for resp in results:
        freq.update(kw.words for kw, _ in resp.entries)
    rows = [(Keyword(words), freq[words], {})
            for words in sorted(freq, key=lambda w: (-freq[w], w))]
    return CorpusKeywordSummary(rows=rows)
