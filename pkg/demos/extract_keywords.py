"""Walk a handful of survey answers through the extraction pipeline.

Shows the intermediate stages (cleanup, tags, lemmas) and the final
keywords with their attached adjectives. Run from the repository root:

    python3 demos/extract_keywords.py
"""

from surveykw import (
    ExclusionList,
    RunConfig,
    SurveyResponse,
    analyze,
    clean_text,
    extract_corpus,
    keyword_string,
    load_lemma_resources,
    load_tagger_resources,
)

ANSWERS = [
    "- Great colleagues and a good working atmosphere!",
    "You can further your studies, have an internal training centre",
    "Flexible hours, decent pay +good training opportunities",
    "The training budget. Supportive managers who value learning.",
]


def main() -> None:
    tagger = load_tagger_resources()
    lemmas = load_lemma_resources()

    print("=== stage by stage ===")
    for text in ANSWERS:
        cleaned = clean_text(text)
        tokens = analyze(cleaned, tagger, lemmas)
        print(f"\nraw:    {text!r}")
        print(f"clean:  {cleaned!r}")
        print("tokens: " + " ".join(f"{t.surface}/{t.pos}" for t in tokens))
        print("lemmas: " + " ".join(t.lemma for t in tokens))

    # min_single_occur=1 keeps every candidate; raise it to demand that a
    # single-word keyword recurs across the corpus before it counts
    responses = [SurveyResponse(id=i, raw_text=t)
                 for i, t in enumerate(ANSWERS)]
    results, summary = extract_corpus(
        responses, tagger, lemmas,
        RunConfig(min_single_occur=1), ExclusionList())

    print("\n=== keywords per response ===")
    for resp in results:
        print(f"\nresponse {resp.response_id}: "
              f"{responses[resp.response_id].raw_text!r}")
        for kw, adjectives in resp.entries:
            suffix = f"  [adjectives: {', '.join(adjectives)}]" \
                if adjectives else ""
            print(f"  {keyword_string(kw.words)} "
                  f"(seen {kw.occurrences}x in corpus){suffix}")

    print("\n=== corpus summary ===")
    for kw, freq, adj in summary.rows:
        adj_note = "" if not adj else \
            "  " + ";".join(f"{a}:{c}" for a, c in sorted(adj.items()))
        print(f"  {freq}x  {keyword_string(kw.words)}{adj_note}")


if __name__ == "__main__":
    main()
