#!/usr/bin/env python3
"""Freeze the stemmer reference fixture at tests/data/porter_reference.tsv.

Pairs are produced by the reference transcription in tests/oracles.py, which
is anchored by hand-checked pairs in tests/test_porter.py. The package
implementation is required to match every frozen pair exactly.
"""

from __future__ import annotations

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "tests"))

from oracles import reference_porter  # noqa: E402

# suffixes chosen to exercise steps 2-5, attached to real bases; the
# algorithm is defined on arbitrary strings, so derived nonwords are valid
DERIVATIONAL_SUFFIXES = [
    "ization", "ational", "fulness", "iveness", "ousness", "icate",
    "ative", "alize", "iciti", "ical", "aliti", "iviti", "biliti",
    "ement", "ance", "ence", "able", "ible", "ment", "ent", "ion",
    "ism", "ate", "iti", "ous", "ive", "ize", "er", "ed", "ing", "s",
    "es", "ies", "eed", "ly", "alli", "entli", "ousli", "logi", "bli",
]

BASES = [
    "act", "adapt", "author", "capital", "center", "civil", "class",
    "color", "commun", "connect", "creat", "critic", "cultur", "decor",
    "digit", "direct", "divers", "econom", "educat", "electr", "emot",
    "equal", "estim", "ethic", "evalu", "fanat", "final", "form",
    "formal", "general", "global", "grammat", "hospit", "ideal",
    "institut", "intern", "invest", "item", "justif", "legal", "liber",
    "local", "magnet", "margin", "maxim", "medic", "memor", "minim",
    "mobil", "modern", "moral", "motiv", "nation", "natur", "normal",
    "operat", "optim", "organ", "person", "polar", "popular", "predict",
    "product", "profession", "qualif", "ration", "real", "region",
    "relat", "revolut", "sensit", "sensibl", "social", "special",
    "stabil", "standard", "structur", "sum", "technolog",
    "tradit", "valid", "verbal", "vital", "vocal",
]


def word_list() -> list[str]:
    words: set[str] = set()
    lexicon = ROOT / "src" / "surveykw" / "data" / "lexicon.tsv"
    for line in lexicon.read_text(encoding="utf-8").splitlines():
        word = line.split("\t")[0]
        if word.isalpha() and word.isascii() and word == word.lower():
            words.add(word)
    for base in BASES:
        if not (base.isalpha() and base.isascii()):
            continue
        for suffix in DERIVATIONAL_SUFFIXES:
            words.add(base + suffix)
    return sorted(words)


def main() -> None:
    out = ROOT / "tests" / "data" / "porter_reference.tsv"
    words = word_list()
    with open(out, "w", encoding="utf-8") as fh:
        for word in words:
            fh.write(f"{word}\t{reference_porter(word)}\n")
    print(f"{len(words)} pairs -> {out}")


if __name__ == "__main__":
    main()
