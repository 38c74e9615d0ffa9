"""Run the noun-run extractor and the tf-idf baseline on the same corpus.

The baseline picks the k most distinctive unigrams per response, so it
never produces multi-word keywords and never looks at part of speech.
Comparing the two side by side shows what the linguistic pipeline buys.

    python3 demos/compare_with_baseline.py
"""

from surveykw import (
    ExclusionList,
    RunConfig,
    SurveyResponse,
    build_model,
    extract_corpus,
    extract_topk,
    keyword_string,
    load_lemma_resources,
    load_stopwords,
    load_tagger_resources,
)

ANSWERS = [
    "Good pay and a good pension scheme",
    "The pay is fair and the team spirit is great",
    "Excellent training opportunities, great team",
    "Training courses and flexible working hours",
    "I enjoy the customer contact and my team",
    "Nothing beats free coffee",
]


def main() -> None:
    tagger = load_tagger_resources()
    lemmas = load_lemma_resources()
    stopwords = load_stopwords()

    def fresh_responses():
        return [SurveyResponse(id=i, raw_text=t)
                for i, t in enumerate(ANSWERS)]

    pipeline_results, _ = extract_corpus(
        fresh_responses(), tagger, lemmas,
        RunConfig(min_single_occur=2), ExclusionList())

    model = build_model(fresh_responses(), tagger, lemmas, stopwords,
                        ExclusionList())
    baseline_results = extract_topk(model, top_k=3)

    print(f"{'response':<42} {'noun-run pipeline':<28} tf-idf top 3")
    print("-" * 100)
    for text, pipe, base in zip(ANSWERS, pipeline_results,
                                baseline_results):
        pipe_kws = ", ".join(keyword_string(kw.words)
                             for kw, _ in pipe.entries) or "-"
        base_kws = ", ".join(keyword_string(kw.words)
                             for kw, _ in base.entries) or "-"
        print(f"{text:<42} {pipe_kws:<28} {base_kws}")

    print("\nNote how 'pension scheme' and 'team spirit' survive as pairs")
    print("in the pipeline even though each occurs once, while single")
    print("words need min_single_occur corpus hits.")


if __name__ == "__main__":
    main()
