"""Scoring extracted keywords against a human gold standard.

Keywords only count as hits when the whole stemmed string matches, so
"training centres" and "training centre" agree while "training" alone does
not. Per-response scores are averaged over the responses that can express
them: precision over responses with system keywords, recall over responses
with gold keywords, Jaccard over responses with gold keywords.
"""

from __future__ import annotations

import csv
import json
import math
import statistics
from dataclasses import dataclass
from pathlib import Path

from .corpus_io import InputError
from .porter import porter_stem

__all__ = [
    "StemmedKeyword",
    "GoldStandard",
    "EvalReport",
    "stem_keyword",
    "normalize_sets",
    "coverage",
    "type_level_correct",
    "macro_prf",
    "spearman",
    "jaccard_distribution",
    "evaluate",
    "write_report",
    "write_jaccard_csv",
]


@dataclass(frozen=True)
class StemmedKeyword:
    original: str
    stemmed: str


def stem_keyword(original: str) -> StemmedKeyword:
    stemmed = " ".join(porter_stem(w) for w in original.split())
    return StemmedKeyword(original=original, stemmed=stemmed)


@dataclass
class GoldStandard:
    per_response: dict[int, set[str]]

    @property
    def all_types(self) -> frozenset[str]:
        types = set()
        for keywords in self.per_response.values():
            types.update(stem_keyword(kw).stemmed for kw in keywords)
        return frozenset(types)


@dataclass
class EvalReport:
    n_responses: int
    n_system_types: int
    n_gold_types: int
    coverage_pct: float
    correct_types: int
    precision: float
    recall: float
    f1: float
    spearman_rho: float | None
    spearman_p: float | None
    spearman_n: int
    spearman_note: str | None
    jaccard_min: float
    jaccard_max: float
    jaccard_mean: float
    jaccard_std: float


def normalize_sets(system: dict[int, set[str]],
                   gold: dict[int, set[str]],
                   ) -> tuple[dict[int, frozenset[str]],
                              dict[int, frozenset[str]]]:
    """Stem both sides and align them on the union of response ids."""
    ids = sorted(set(system) | set(gold))
    sys_sets = {}
    gold_sets = {}
    for rid in ids:
        sys_sets[rid] = frozenset(stem_keyword(kw).stemmed
                                  for kw in system.get(rid, set()))
        gold_sets[rid] = frozenset(stem_keyword(kw).stemmed
                                   for kw in gold.get(rid, set()))
    return sys_sets, gold_sets


def coverage(system_sets: dict[int, frozenset[str]]) -> float:
    if not system_sets:
        raise InputError("coverage needs at least one response")
    hit = sum(1 for kws in system_sets.values() if kws)
    return 100.0 * hit / len(system_sets)


def type_level_correct(system_types: frozenset[str],
                       gold_types: frozenset[str]) -> int:
    return len(system_types & gold_types)


def macro_prf(system_sets: dict[int, frozenset[str]],
              gold_sets: dict[int, frozenset[str]],
              ) -> tuple[float, float, float]:
    precisions = []
    recalls = []
    for rid in sorted(set(system_sets) | set(gold_sets)):
        s = system_sets.get(rid, frozenset())
        g = gold_sets.get(rid, frozenset())
        if s:
            precisions.append(len(s & g) / len(s))
        if g:
            recalls.append(len(s & g) / len(g))
    if not precisions:
        raise InputError("precision undefined: no response has system "
                         "keywords")
    if not recalls:
        raise InputError("recall undefined: no response has gold keywords")
    p = statistics.fmean(precisions)
    r = statistics.fmean(recalls)
    f1 = 2 * p * r / (p + r) if p + r > 0 else 0.0
    return p, r, f1


# --- Student-t tail probability ------------------------------------------
#
# Two-sided p for a t statistic with df degrees of freedom equals the
# regularized incomplete beta I_x(df/2, 1/2) at x = df / (df + t^2). The
# continued fraction below is the standard Lentz evaluation.

def _beta_cont_frac(a: float, b: float, x: float) -> float:
    tiny = 1e-300
    qab, qap, qam = a + b, a + 1.0, a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < tiny:
        d = tiny
    d = 1.0 / d
    h = d
    for m in range(1, 300):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < tiny:
            d = tiny
        c = 1.0 + aa / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < tiny:
            d = tiny
        c = 1.0 + aa / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < 3e-16:
            break
    return h


def _betainc_reg(a: float, b: float, x: float) -> float:
    if x <= 0.0:
        return 0.0
    if x >= 1.0:
        return 1.0
    ln_front = (math.lgamma(a + b) - math.lgamma(a) - math.lgamma(b)
                + a * math.log(x) + b * math.log1p(-x))
    front = math.exp(ln_front)
    if x < (a + 1.0) / (a + b + 2.0):
        return front * _beta_cont_frac(a, b, x) / a
    return 1.0 - front * _beta_cont_frac(b, a, 1.0 - x) / b


def _t_two_sided_p(t: float, df: int) -> float:
    return _betainc_reg(df / 2.0, 0.5, df / (df + t * t))


def _tied_ranks(values: list[float]) -> list[float]:
    order = sorted(range(len(values)), key=lambda i: values[i])
    ranks = [0.0] * len(values)
    i = 0
    while i < len(order):
        j = i
        while j + 1 < len(order) and \
                values[order[j + 1]] == values[order[i]]:
            j += 1
        avg = (i + j) / 2.0 + 1.0
        for k in range(i, j + 1):
            ranks[order[k]] = avg
        i = j + 1
    return ranks


def spearman(system_freq: dict[str, float],
             gold_freq: dict[str, float]) -> tuple[float, float, int]:
    """Rank correlation over the keys both rankings share.

    Returns (rho, two-sided p, n). Tie-free inputs go through the exact
    rank-difference formula, ties through the Pearson correlation of
    tie-averaged ranks.
    """
    keys = sorted(set(system_freq) & set(gold_freq))
    n = len(keys)
    if n < 3:
        raise InputError(f"insufficient overlap for rank correlation "
                         f"({n} shared keys, need 3)")
    xs = [system_freq[k] for k in keys]
    ys = [gold_freq[k] for k in keys]
    if len(set(xs)) == 1 or len(set(ys)) == 1:
        raise InputError("rank correlation undefined: constant frequencies "
                         "on one side")

    if len(set(xs)) == n and len(set(ys)) == n:
        rank_x = _tied_ranks(xs)
        rank_y = _tied_ranks(ys)
        d_sq = sum(int(rx - ry) ** 2 for rx, ry in zip(rank_x, rank_y))
        rho = 1.0 - 6.0 * d_sq / (n * (n * n - 1))
    else:
        rank_x = _tied_ranks(xs)
        rank_y = _tied_ranks(ys)
        mx = statistics.fmean(rank_x)
        my = statistics.fmean(rank_y)
        cov = sum((a - mx) * (b - my) for a, b in zip(rank_x, rank_y))
        var_x = sum((a - mx) ** 2 for a in rank_x)
        var_y = sum((b - my) ** 2 for b in rank_y)
        rho = cov / math.sqrt(var_x * var_y)

    if 1.0 - rho * rho <= 0.0:
        return rho, 0.0, n
    t = rho * math.sqrt((n - 2) / (1.0 - rho * rho))
    return rho, _t_two_sided_p(t, n - 2), n


def jaccard_distribution(system_sets: dict[int, frozenset[str]],
                         gold_sets: dict[int, frozenset[str]],
                         ) -> tuple[list[tuple[int, float]],
                                    float, float, float, float]:
    """Per-response overlap, skipping responses without gold keywords."""
    values = []
    for rid in sorted(set(system_sets) | set(gold_sets)):
        g = gold_sets.get(rid, frozenset())
        if not g:
            continue
        s = system_sets.get(rid, frozenset())
        values.append((rid, len(s & g) / len(s | g)))
    if not values:
        raise InputError("Jaccard undefined: no response has gold keywords")
    plain = [v for _, v in values]
    return (values, min(plain), max(plain), statistics.fmean(plain),
            statistics.pstdev(plain))


def evaluate(system: dict[int, set[str]],
             gold: GoldStandard) -> tuple[EvalReport,
                                          list[tuple[int, float]]]:
    sys_sets, gold_sets = normalize_sets(system, gold.per_response)
    if not sys_sets:
        raise InputError("nothing to evaluate: no responses on either side")

    sys_types = frozenset().union(*sys_sets.values()) if sys_sets else \
        frozenset()
    gold_types = frozenset().union(*gold_sets.values()) if gold_sets else \
        frozenset()
    precision, recall, f1 = macro_prf(sys_sets, gold_sets)

    sys_freq = {t: sum(1 for s in sys_sets.values() if t in s)
                for t in sys_types}
    gold_freq = {t: sum(1 for g in gold_sets.values() if t in g)
                 for t in gold_types}
    try:
        rho, p_value, n = spearman(sys_freq, gold_freq)
        note = None
    except InputError as exc:
        rho, p_value = None, None
        n = len(set(sys_freq) & set(gold_freq))
        note = str(exc)

    jaccard, j_min, j_max, j_mean, j_std = jaccard_distribution(sys_sets,
                                                                gold_sets)
    report = EvalReport(
        n_responses=len(sys_sets),
        n_system_types=len(sys_types),
        n_gold_types=len(gold_types),
        coverage_pct=coverage(sys_sets),
        correct_types=type_level_correct(sys_types, gold_types),
        precision=precision,
        recall=recall,
        f1=f1,
        spearman_rho=rho,
        spearman_p=p_value,
        spearman_n=n,
        spearman_note=note,
        jaccard_min=j_min,
        jaccard_max=j_max,
        jaccard_mean=j_mean,
        jaccard_std=j_std,
    )
    return report, jaccard


def _round4(value: float | None) -> float | None:
    return None if value is None else round(value, 4)


def write_report(report: EvalReport, path: str | Path) -> dict:
    """Write the report as JSON with fixed keys and 4-decimal rounding."""
    payload = {
        "n_responses": report.n_responses,
        "n_system_types": report.n_system_types,
        "n_gold_types": report.n_gold_types,
        "coverage_pct": _round4(report.coverage_pct),
        "correct_types": report.correct_types,
        "precision": _round4(report.precision),
        "recall": _round4(report.recall),
        "f1": _round4(report.f1),
        "spearman_rho": _round4(report.spearman_rho),
        "spearman_p": _round4(report.spearman_p),
        "spearman_n": report.spearman_n,
        "spearman_note": report.spearman_note,
        "jaccard_min": _round4(report.jaccard_min),
        "jaccard_max": _round4(report.jaccard_max),
        "jaccard_mean": _round4(report.jaccard_mean),
        "jaccard_std": _round4(report.jaccard_std),
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2)
        fh.write("\n")
    return payload


def write_jaccard_csv(path: str | Path,
                      jaccard: list[tuple[int, float]]) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["response_id", "jaccard"])
        for rid, value in sorted(jaccard):
            writer.writerow([rid, round(value, 4)])
