import json
import math
import random

import pytest

from oracles import (
    reference_coverage,
    reference_correct_types,
    reference_jaccard,
    reference_macro_prf,
    reference_porter,
    reference_spearman,
)
from surveykw.corpus_io import InputError
from surveykw.eval_metrics import (
    EvalReport,
    GoldStandard,
    coverage,
    evaluate,
    jaccard_distribution,
    macro_prf,
    normalize_sets,
    spearman,
    stem_keyword,
    type_level_correct,
    write_jaccard_csv,
    write_report,
)


class TestNormalization:
    def test_whole_string_stemming(self):
        assert stem_keyword("training centres").stemmed == "train centr"
        assert stem_keyword("pay").stemmed == "pai"
        assert stem_keyword("training centre").original == "training centre"

    def test_plural_and_singular_align(self):
        sys_sets, gold_sets = normalize_sets(
            {0: {"training centre"}}, {0: {"training centres"}})
        assert sys_sets[0] == gold_sets[0] == frozenset({"train centr"})

    def test_partial_strings_stay_distinct(self):
        sys_sets, gold_sets = normalize_sets({0: {"training"}},
                                             {0: {"training centre"}})
        assert sys_sets[0] != gold_sets[0]

    def test_union_id_space(self):
        sys_sets, gold_sets = normalize_sets({0: {"pay"}}, {2: {"team"}})
        assert set(sys_sets) == set(gold_sets) == {0, 1, 2} - {1}
        assert sys_sets[2] == frozenset()
        assert gold_sets[0] == frozenset()

    def test_duplicates_collapse(self):
        sys_sets, _ = normalize_sets({0: {"pays", "pay"}}, {0: set()})
        assert sys_sets[0] == frozenset({"pai"})


class TestCoverage:
    def test_three_of_four(self):
        sets = {0: frozenset({"a"}), 1: frozenset(), 2: frozenset({"b"}),
                3: frozenset({"c"})}
        assert coverage(sets) == 75.0

    def test_empty_is_an_error(self):
        with pytest.raises(InputError):
            coverage({})


class TestMacroPrf:
    def test_single_response_ratios(self):
        # 231 shared types out of 700 system and 550 gold
        shared = {f"c{i}" for i in range(231)}
        system = {0: shared | {f"s{i}" for i in range(469)}}
        gold = {0: shared | {f"g{i}" for i in range(319)}}
        sys_sets, gold_sets = normalize_sets(system, gold)
        p, r, f1 = macro_prf(sys_sets, gold_sets)
        assert p == pytest.approx(0.33)
        assert r == pytest.approx(0.42)
        assert f1 == pytest.approx(0.3696, abs=5e-4)

    def test_means_skip_empty_sides(self):
        sys_sets = {0: frozenset({"a", "b"}), 1: frozenset()}
        gold_sets = {0: frozenset({"a"}), 1: frozenset({"c", "d"})}
        p, r, f1 = macro_prf(sys_sets, gold_sets)
        assert p == 0.5          # only response 0 has system keywords
        assert r == 0.5          # mean of 1.0 and 0.0
        assert f1 == 0.5

    def test_zero_overlap_gives_zero_f1(self):
        p, r, f1 = macro_prf({0: frozenset({"a"})}, {0: frozenset({"b"})})
        assert (p, r, f1) == (0.0, 0.0, 0.0)

    def test_no_system_keywords_anywhere(self):
        with pytest.raises(InputError, match="precision undefined"):
            macro_prf({0: frozenset()}, {0: frozenset({"a"})})

    def test_no_gold_keywords_anywhere(self):
        with pytest.raises(InputError, match="recall undefined"):
            macro_prf({0: frozenset({"a"})}, {0: frozenset()})

    def test_agrees_with_brute_force(self):
        rng = random.Random(77)
        pool = [f"k{i}" for i in range(12)]
        for trial in range(50):
            ids = range(rng.randint(1, 15))
            sys_sets = {i: frozenset(rng.sample(pool, rng.randint(0, 6)))
                        for i in ids}
            gold_sets = {i: frozenset(rng.sample(pool, rng.randint(0, 4)))
                         for i in ids}
            if not any(sys_sets.values()) or not any(gold_sets.values()):
                continue
            got = macro_prf(sys_sets, gold_sets)
            want = reference_macro_prf(sys_sets, gold_sets)
            assert got == pytest.approx(want, abs=1e-12)


class TestSpearman:
    def test_identical_rankings_exact_one(self):
        freq = {"a": 5, "b": 4, "c": 3, "d": 2, "e": 1}
        rho, p, n = spearman(freq, dict(freq))
        assert rho == 1.0
        assert p == 0.0
        assert n == 5

    def test_reversed_rankings_exact_minus_one(self):
        a = {"a": 1, "b": 2, "c": 3, "d": 4}
        b = {"a": 4, "b": 3, "c": 2, "d": 1}
        rho, p, _ = spearman(a, b)
        assert rho == -1.0
        assert p == 0.0

    def test_partial_agreement(self):
        a = {"a": 1, "b": 2, "c": 3, "d": 4, "e": 5}
        b = {"a": 2, "b": 1, "c": 4, "d": 3, "e": 5}
        rho, p, n = spearman(a, b)
        assert rho == pytest.approx(0.8, abs=1e-12)
        assert p == pytest.approx(0.104, abs=0.01)
        assert n == 5

    def test_only_shared_keys_count(self):
        a = {"a": 1, "b": 2, "c": 3, "x": 9}
        b = {"a": 1, "b": 2, "c": 3, "y": 9}
        rho, _, n = spearman(a, b)
        assert n == 3
        assert rho == 1.0

    def test_insufficient_overlap(self):
        with pytest.raises(InputError, match="insufficient overlap"):
            spearman({"a": 1, "b": 2}, {"a": 1, "b": 2})

    def test_constant_side(self):
        with pytest.raises(InputError, match="constant"):
            spearman({"a": 2, "b": 2, "c": 2}, {"a": 1, "b": 2, "c": 3})

    def test_matches_scipy_with_and_without_ties(self):
        rng = random.Random(78)
        for trial in range(60):
            n = rng.randint(3, 40)
            keys = [f"k{i}" for i in range(n)]
            a = {k: rng.randint(1, 8) for k in keys}
            b = {k: rng.randint(1, 8) for k in keys}
            if len(set(a.values())) == 1 or len(set(b.values())) == 1:
                continue
            want_rho, want_p, want_n = reference_spearman(a, b)
            rho, p, got_n = spearman(a, b)
            assert got_n == want_n
            assert rho == pytest.approx(want_rho, abs=1e-9)
            assert p == pytest.approx(want_p, abs=1e-9)


class TestJaccard:
    def test_worked_example(self):
        sys_sets = {0: frozenset({"a", "b"}), 1: frozenset({"x"})}
        gold_sets = {0: frozenset({"b", "c"}), 1: frozenset({"x"})}
        values, j_min, j_max, j_mean, j_std = jaccard_distribution(
            sys_sets, gold_sets)
        assert values == [(0, pytest.approx(1 / 3)), (1, 1.0)]
        assert j_min == pytest.approx(1 / 3)
        assert j_max == 1.0
        assert j_mean == pytest.approx((1 / 3 + 1.0) / 2)

    def test_empty_gold_responses_skipped(self):
        sys_sets = {0: frozenset({"a"}), 1: frozenset({"b"})}
        gold_sets = {0: frozenset({"a"}), 1: frozenset()}
        values, *_ = jaccard_distribution(sys_sets, gold_sets)
        assert [rid for rid, _ in values] == [0]

    def test_all_gold_empty_is_an_error(self):
        with pytest.raises(InputError, match="Jaccard undefined"):
            jaccard_distribution({0: frozenset({"a"})}, {0: frozenset()})

    def test_agrees_with_brute_force(self):
        rng = random.Random(79)
        pool = [f"k{i}" for i in range(10)]
        for trial in range(50):
            ids = range(rng.randint(1, 12))
            sys_sets = {i: frozenset(rng.sample(pool, rng.randint(0, 5)))
                        for i in ids}
            gold_sets = {i: frozenset(rng.sample(pool, rng.randint(0, 5)))
                         for i in ids}
            if not any(gold_sets.values()):
                continue
            values, j_min, j_max, j_mean, j_std = jaccard_distribution(
                sys_sets, gold_sets)
            want = reference_jaccard(sys_sets, gold_sets)
            assert [v for _, v in values] == pytest.approx(want[0],
                                                           abs=1e-12)
            assert (j_min, j_max, j_mean, j_std) == pytest.approx(
                want[1:], abs=1e-12)


VOCAB = ["training centre", "work satisfaction", "pay", "team", "career",
         "new technologies", "manager", "learning", "investor returns",
         "benefit", "culture", "fibre"]


def random_eval_case(rng, max_responses=30, max_keywords=10):
    n = rng.randint(1, max_responses)
    system = {}
    gold = {}
    for rid in range(n):
        system[rid] = set(rng.sample(VOCAB,
                                     rng.randint(0, min(max_keywords, 6))))
        gold[rid] = set(rng.sample(VOCAB, rng.randint(0, 4)))
    # keep both sides expressible
    system[0] |= {rng.choice(VOCAB)}
    gold[0] |= {rng.choice(VOCAB)}
    return system, gold


def aligned_stemmed(system, gold):
    def stem(kw):
        return " ".join(reference_porter(w) for w in kw.split())
    ids = sorted(set(system) | set(gold))
    sys_sets = {i: frozenset(stem(k) for k in system.get(i, set()))
                for i in ids}
    gold_sets = {i: frozenset(stem(k) for k in gold.get(i, set()))
                 for i in ids}
    return sys_sets, gold_sets


class TestEvaluateEndToEnd:
    def test_matches_all_oracles_on_random_corpora(self):
        rng = random.Random(80)
        for trial in range(40):
            system, gold = random_eval_case(rng)
            report, jaccard = evaluate(system, GoldStandard(gold))
            sys_sets, gold_sets = aligned_stemmed(system, gold)

            assert report.coverage_pct == pytest.approx(
                reference_coverage(sys_sets), abs=1e-12)
            sys_types = frozenset().union(*sys_sets.values())
            gold_types = frozenset().union(*gold_sets.values())
            assert report.correct_types == reference_correct_types(
                sys_types, gold_types)
            assert report.n_system_types == len(sys_types)
            assert report.n_gold_types == len(gold_types)
            assert report.n_responses == len(sys_sets)

            want_prf = reference_macro_prf(sys_sets, gold_sets)
            got_prf = (report.precision, report.recall, report.f1)
            assert got_prf == pytest.approx(want_prf, abs=1e-12)

            want_j = reference_jaccard(sys_sets, gold_sets)
            assert [v for _, v in jaccard] == pytest.approx(want_j[0],
                                                            abs=1e-12)
            assert (report.jaccard_min, report.jaccard_max,
                    report.jaccard_mean, report.jaccard_std) == \
                pytest.approx(want_j[1:], abs=1e-12)

            sys_freq = {t: sum(1 for s in sys_sets.values() if t in s)
                        for t in sys_types}
            gold_freq = {t: sum(1 for g in gold_sets.values() if t in g)
                         for t in gold_types}
            want_rho, want_p, want_n = reference_spearman(sys_freq,
                                                          gold_freq)
            if math.isnan(want_rho):
                assert report.spearman_rho is None
                assert report.spearman_note is not None
            else:
                assert report.spearman_n == want_n
                assert report.spearman_rho == pytest.approx(want_rho,
                                                            abs=1e-9)
                assert report.spearman_p == pytest.approx(want_p, abs=1e-9)

    def test_spearman_note_when_overlap_too_small(self):
        report, _ = evaluate({0: {"pay"}, 1: {"team"}},
                             GoldStandard({0: {"pay"}, 1: {"team"}}))
        assert report.spearman_rho is None
        assert report.spearman_p is None
        assert "insufficient overlap" in report.spearman_note


class TestReportFiles:
    def make_report(self):
        system = {0: {"training centre", "pay"}, 1: {"team"}, 2: set()}
        gold = GoldStandard({0: {"training centres"}, 1: {"team", "pay"},
                             2: {"culture"}})
        return evaluate(system, gold)

    def test_report_json_round_trips(self, tmp_path):
        report, jaccard = self.make_report()
        path = tmp_path / "report.json"
        payload = write_report(report, path)
        parsed = json.loads(path.read_text(encoding="utf-8"))
        assert parsed == payload
        assert parsed["n_responses"] == 3
        assert parsed["coverage_pct"] == round(report.coverage_pct, 4)
        assert parsed["f1"] == round(report.f1, 4)
        assert set(parsed) == {
            "n_responses", "n_system_types", "n_gold_types", "coverage_pct",
            "correct_types", "precision", "recall", "f1", "spearman_rho",
            "spearman_p", "spearman_n", "spearman_note", "jaccard_min",
            "jaccard_max", "jaccard_mean", "jaccard_std"}

    def test_null_spearman_serialized_with_reason(self, tmp_path):
        report, _ = self.make_report()
        path = tmp_path / "report.json"
        write_report(report, path)
        parsed = json.loads(path.read_text(encoding="utf-8"))
        assert parsed["spearman_rho"] is None
        assert isinstance(parsed["spearman_note"], str)

    def test_jaccard_csv(self, tmp_path):
        _, jaccard = self.make_report()
        path = tmp_path / "jaccard.csv"
        write_jaccard_csv(path, jaccard)
        lines = path.read_text(encoding="utf-8").splitlines()
        assert lines[0] == "response_id,jaccard"
        assert len(lines) == 4
        assert lines[1].startswith("0,")


def test_report_dataclass_field_types():
    report = EvalReport(
        n_responses=1, n_system_types=1, n_gold_types=1, coverage_pct=100.0,
        correct_types=1, precision=1.0, recall=1.0, f1=1.0,
        spearman_rho=None, spearman_p=None, spearman_n=0,
        spearman_note="insufficient overlap", jaccard_min=1.0,
        jaccard_max=1.0, jaccard_mean=1.0, jaccard_std=0.0)
    assert report.f1 == 1.0
