"""Score extracted keywords against a small hand-made gold standard.

Matching is done on whole stemmed strings, so "training centres" in the
gold standard still matches an extracted "training centre", but a bare
"training" does not.

    python3 demos/score_against_gold.py
"""

from surveykw import (
    ExclusionList,
    GoldStandard,
    RunConfig,
    SurveyResponse,
    evaluate,
    extract_corpus,
    keyword_string,
    load_lemma_resources,
    load_tagger_resources,
    stem_keyword,
)

ANSWERS = [
    "Good pay and the pension scheme",
    "An internal training centre and constant learning",
    "Great team, great managers",
    "The company cars",
]

GOLD = {
    0: {"pay", "pension scheme"},
    1: {"training centres", "learning"},
    2: {"team", "manager"},
    3: {"company car"},
}


def main() -> None:
    tagger = load_tagger_resources()
    lemmas = load_lemma_resources()
    responses = [SurveyResponse(id=i, raw_text=t)
                 for i, t in enumerate(ANSWERS)]
    results, _ = extract_corpus(responses, tagger, lemmas,
                                RunConfig(min_single_occur=1),
                                ExclusionList())
    system = {r.response_id: {keyword_string(kw.words)
                              for kw, _ in r.entries}
              for r in results}

    print("stemmed matching examples:")
    for original in ("training centres", "training centre", "training"):
        print(f"  {original!r} -> {stem_keyword(original).stemmed!r}")

    report, jaccard = evaluate(system, GoldStandard(GOLD))

    print("\nper-response overlap (Jaccard):")
    for rid, value in jaccard:
        print(f"  response {rid}: {value:.2f}  "
              f"system={sorted(system[rid])} gold={sorted(GOLD[rid])}")

    print(f"\ncoverage:      {report.coverage_pct:.1f}%")
    print(f"correct types: {report.correct_types} of "
          f"{report.n_gold_types} gold types")
    print(f"precision:     {report.precision:.3f}")
    print(f"recall:        {report.recall:.3f}")
    print(f"f1:            {report.f1:.3f}")
    if report.spearman_rho is not None:
        print(f"spearman rho:  {report.spearman_rho:.3f} "
              f"(p {report.spearman_p:.3f})")
    else:
        print(f"spearman:      n/a ({report.spearman_note})")


if __name__ == "__main__":
    main()
