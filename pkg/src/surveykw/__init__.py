"""Keyword extraction and evaluation for free-text survey responses.

The package turns open-ended survey answers into keywords in four stages:
light text cleanup, part-of-speech tagging with a bundled lexicon,
dictionary-backed lemmatization, and a noun-run extractor with a
corpus-frequency filter. A unigram tf-idf extractor provides a baseline,
and the evaluation module scores either against a human gold standard
using stemmed whole-string matching.
"""

from .corpus_io import (
    ExclusionList,
    InputError,
    InternalError,
    RunConfig,
    SurveyResponse,
    load_exclusions,
    load_responses,
    load_stopwords,
)
from .eval_metrics import (
    EvalReport,
    GoldStandard,
    StemmedKeyword,
    evaluate,
    stem_keyword,
)
from .keyword_extraction import (
    CorpusKeywordSummary,
    Keyword,
    ResponseKeywords,
    extract_corpus,
    keyword_string,
)
from .linguistic_prep import (
    Token,
    analyze,
    clean_text,
    load_lemma_resources,
    load_tagger_resources,
)
from .porter import porter_stem
from .tfidf_baseline import TfIdfModel, build_model, extract_topk

__version__ = "0.1.0"

__all__ = [
    "CorpusKeywordSummary",
    "EvalReport",
    "ExclusionList",
    "GoldStandard",
    "InputError",
    "InternalError",
    "Keyword",
    "ResponseKeywords",
    "RunConfig",
    "StemmedKeyword",
    "SurveyResponse",
    "TfIdfModel",
    "Token",
    "analyze",
    "build_model",
    "clean_text",
    "evaluate",
    "extract_corpus",
    "extract_topk",
    "keyword_string",
    "load_exclusions",
    "load_lemma_resources",
    "load_responses",
    "load_stopwords",
    "load_tagger_resources",
    "porter_stem",
    "stem_keyword",
    "__version__",
]
