"""Stemmer tests: hand-checked anchors, frozen fixture, reference parity."""

from __future__ import annotations

import random
import string
import time
from pathlib import Path

import pytest

from surveykw.porter import porter_stem

from oracles import reference_porter

FIXTURE = Path(__file__).parent / "data" / "porter_reference.tsv"

# worked examples verified by hand against the published rule tables;
# these anchor both the package stemmer and the test-side reference
ANCHORS = [
    ("caresses", "caress"), ("ponies", "poni"), ("ties", "ti"),
    ("caress", "caress"), ("cats", "cat"), ("feed", "feed"),
    ("agreed", "agre"), ("plastered", "plaster"), ("bled", "bled"),
    ("motoring", "motor"), ("sing", "sing"), ("conflated", "conflat"),
    ("troubled", "troubl"), ("sized", "size"), ("hopping", "hop"),
    ("tanned", "tan"), ("falling", "fall"), ("hissing", "hiss"),
    ("fizzed", "fizz"), ("failing", "fail"), ("filing", "file"),
    ("happy", "happi"), ("sky", "sky"), ("relational", "relat"),
    ("conditional", "condit"), ("rational", "ration"),
    ("valenci", "valenc"), ("digitizer", "digit"), ("operator", "oper"),
    ("feudalism", "feudal"), ("decisiveness", "decis"),
    ("hopefulness", "hope"), ("callousness", "callous"),
    ("formaliti", "formal"), ("sensitiviti", "sensit"),
    ("sensibiliti", "sensibl"), ("triplicate", "triplic"),
    ("formative", "form"), ("formalize", "formal"),
    ("electriciti", "electr"), ("hopeful", "hope"),
    ("goodness", "good"), ("revival", "reviv"),
    ("allowance", "allow"), ("inference", "infer"),
    ("airliner", "airlin"), ("gyroscopic", "gyroscop"),
    ("adjustable", "adjust"), ("defensible", "defens"),
    ("irritant", "irrit"), ("replacement", "replac"),
    ("adjustment", "adjust"), ("dependent", "depend"),
    ("adoption", "adopt"), ("homologou", "homolog"),
    ("communism", "commun"), ("activate", "activ"),
    ("angulariti", "angular"), ("homologous", "homolog"),
    ("effective", "effect"), ("bowdlerize", "bowdler"),
    ("probate", "probat"), ("rate", "rate"), ("cease", "ceas"),
    ("controll", "control"), ("roll", "roll"), ("trees", "tree"),
    ("by", "by"), ("a", "a"), ("meetings", "meet"),
    ("training", "train"), ("studies", "studi"),
    ("happiness", "happi"), ("enjoy", "enjoi"), ("cry", "cry"),
    ("archaeology", "archaeolog"),
]


@pytest.mark.parametrize("word,expected", ANCHORS)
def test_anchor_pairs(word, expected):
    assert porter_stem(word) == expected


@pytest.mark.parametrize("word,expected", ANCHORS)
def test_reference_matches_anchors(word, expected):
    assert reference_porter(word) == expected


def load_fixture():
    pairs = []
    with open(FIXTURE, encoding="utf-8") as fh:
        for line in fh:
            word, stem = line.rstrip("\n").split("\t")
            pairs.append((word, stem))
    return pairs


def test_fixture_size():
    assert len(load_fixture()) >= 1000


def test_fixture_full_match_under_one_second():
    pairs = load_fixture()
    start = time.perf_counter()
    mismatches = [(w, porter_stem(w), s) for w, s in pairs
                  if porter_stem(w) != s]
    elapsed = time.perf_counter() - start
    assert mismatches == []
    assert elapsed < 1.0


def test_short_words_unchanged():
    for word in ["a", "i", "by", "is", "ox"]:
        assert porter_stem(word) == word


def test_non_alphabetic_passthrough():
    for word in ["we've", "e.g.", "100", "fibre-optic", ""]:
        assert porter_stem(word) == word


def test_deterministic_on_random_strings():
    rng = random.Random(4821)
    for _ in range(500):
        word = "".join(rng.choice(string.ascii_lowercase)
                       for _ in range(rng.randint(1, 14)))
        first = porter_stem(word)
        assert porter_stem(word) == first
        assert reference_porter(word) == first


def test_restemming_is_not_relied_on():
    # The algorithm is not idempotent on every output ("agreed" -> "agre"
    # -> "agr"), so matching must always compare once-stemmed forms. This
    # records the counterexample to keep the contract visible.
    assert porter_stem("agreed") == "agre"
    assert porter_stem("agre") == "agr"
