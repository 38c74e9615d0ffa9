"""Classic Porter suffix-stripping stemmer.

Transcribed from the 1980 algorithm with the three adjustments found in the
author's reference implementations: words of length <= 2 are returned
unchanged, step 2 rewrites -bli to -ble (not -abli to -able), and step 2
includes a -logi to -log rule. The evaluation layer uses these stems for
exact keyword matching, so the exact output shape matters more than
linguistic purity; tests/data/porter_reference.tsv freezes it.
"""

from __future__ import annotations

__all__ = ["porter_stem"]


class _Buffer:
    """Word under edit. k is the index of the last live character."""

    def __init__(self, word: str) -> None:
        self.b = word
        self.k = len(word) - 1
        self.j = 0

    def cons(self, i: int) -> bool:
        ch = self.b[i]
        if ch in "aeiou":
            return False
        if ch == "y":
            return i == 0 or not self.cons(i - 1)
        return True

    def m(self) -> int:
        # consonant-sequence count of b[0..j]
        i = 0
        n = 0
        while i <= self.j and self.cons(i):
            i += 1
        while True:
            while True:
                if i > self.j:
                    return n
                if self.cons(i):
                    break
                i += 1
            n += 1
            while i <= self.j and self.cons(i):
                i += 1

    def vowel_in_stem(self) -> bool:
        return any(not self.cons(i) for i in range(self.j + 1))

    def double_cons(self, j: int) -> bool:
        return j > 0 and self.b[j] == self.b[j - 1] and self.cons(j)

    def cvc(self, i: int) -> bool:
        if i < 2 or not self.cons(i) or self.cons(i - 1) or not self.cons(i - 2):
            return False
        return self.b[i] not in "wxy"

    def ends(self, s: str) -> bool:
        length = len(s)
        if length > self.k + 1:
            return False
        if self.b[self.k - length + 1 : self.k + 1] != s:
            return False
        self.j = self.k - length
        return True

    def set_to(self, s: str) -> None:
        self.b = self.b[: self.j + 1] + s
        self.k = len(self.b) - 1

    def replace_m0(self, s: str) -> None:
        if self.m() > 0:
            self.set_to(s)


def _step1ab(w: _Buffer) -> None:
    if w.b[w.k] == "s":
        if w.ends("sses"):
            w.k -= 2
        elif w.ends("ies"):
            w.set_to("i")
        elif w.b[w.k - 1] != "s":
            w.k -= 1
    if w.ends("eed"):
        if w.m() > 0:
            w.k -= 1
    elif (w.ends("ed") or w.ends("ing")) and w.vowel_in_stem():
        w.k = w.j
        if w.ends("at"):
            w.set_to("ate")
        elif w.ends("bl"):
            w.set_to("ble")
        elif w.ends("iz"):
            w.set_to("ize")
        elif w.double_cons(w.k):
            if w.b[w.k - 1] not in "lsz":
                w.k -= 1
        elif w.m() == 1 and w.cvc(w.k):
            w.set_to("e")


def _step1c(w: _Buffer) -> None:
    if w.ends("y") and w.vowel_in_stem():
        w.b = w.b[: w.k] + "i"


def _step2(w: _Buffer) -> None:
    ch = w.b[w.k - 1]
    if ch == "a":
        if w.ends("ational"):
            w.replace_m0("ate")
        elif w.ends("tional"):
            w.replace_m0("tion")
    elif ch == "c":
        if w.ends("enci"):
            w.replace_m0("ence")
        elif w.ends("anci"):
            w.replace_m0("ance")
    elif ch == "e":
        if w.ends("izer"):
            w.replace_m0("ize")
    elif ch == "l":
        if w.ends("bli"):
            w.replace_m0("ble")
        elif w.ends("alli"):
            w.replace_m0("al")
        elif w.ends("entli"):
            w.replace_m0("ent")
        elif w.ends("eli"):
            w.replace_m0("e")
        elif w.ends("ousli"):
            w.replace_m0("ous")
    elif ch == "o":
        if w.ends("ization"):
            w.replace_m0("ize")
        elif w.ends("ation"):
            w.replace_m0("ate")
        elif w.ends("ator"):
            w.replace_m0("ate")
    elif ch == "s":
        if w.ends("alism"):
            w.replace_m0("al")
        elif w.ends("iveness"):
            w.replace_m0("ive")
        elif w.ends("fulness"):
            w.replace_m0("ful")
        elif w.ends("ousness"):
            w.replace_m0("ous")
    elif ch == "t":
        if w.ends("aliti"):
            w.replace_m0("al")
        elif w.ends("iviti"):
            w.replace_m0("ive")
        elif w.ends("biliti"):
            w.replace_m0("ble")
    elif ch == "g":
        if w.ends("logi"):
            w.replace_m0("log")


def _step3(w: _Buffer) -> None:
    ch = w.b[w.k]
    if ch == "e":
        if w.ends("icate"):
            w.replace_m0("ic")
        elif w.ends("ative"):
            w.replace_m0("")
        elif w.ends("alize"):
            w.replace_m0("al")
    elif ch == "i":
        if w.ends("iciti"):
            w.replace_m0("ic")
    elif ch == "l":
        if w.ends("ical"):
            w.replace_m0("ic")
        elif w.ends("ful"):
            w.replace_m0("")
    elif ch == "s":
        if w.ends("ness"):
            w.replace_m0("")


def _step4(w: _Buffer) -> None:
    ch = w.b[w.k - 1]
    if ch == "a":
        if not w.ends("al"):
            return
    elif ch == "c":
        if not w.ends("ance") and not w.ends("ence"):
            return
    elif ch == "e":
        if not w.ends("er"):
            return
    elif ch == "i":
        if not w.ends("ic"):
            return
    elif ch == "l":
        if not w.ends("able") and not w.ends("ible"):
            return
    elif ch == "n":
        if not (w.ends("ant") or w.ends("ement") or w.ends("ment")
                or w.ends("ent")):
            return
    elif ch == "o":
        if w.ends("ion") and w.b[w.j] in "st":
            pass
        elif w.ends("ou"):
            pass
        else:
            return
    elif ch == "s":
        if not w.ends("ism"):
            return
    elif ch == "t":
        if not w.ends("ate") and not w.ends("iti"):
            return
    elif ch == "u":
        if not w.ends("ous"):
            return
    elif ch == "v":
        if not w.ends("ive"):
            return
    elif ch == "z":
        if not w.ends("ize"):
            return
    else:
        return
    if w.m() > 1:
        w.k = w.j


def _step5(w: _Buffer) -> None:
    w.j = w.k
    if w.b[w.k] == "e":
        a = w.m()
        if a > 1 or (a == 1 and not w.cvc(w.k - 1)):
            w.k -= 1
    if w.b[w.k] == "l" and w.double_cons(w.k) and w.m() > 1:
        w.k -= 1


def porter_stem(word: str) -> str:
    """Stem one lowercase word; non-alphabetic input passes through."""
    if not word.isalpha():
        return word
    w = word.lower()
    if len(w) <= 2:
        return w
    buf = _Buffer(w)
    _step1ab(buf)
    _step1c(buf)
    _step2(buf)
    _step3(buf)
    _step4(buf)
    _step5(buf)
    return buf.b[: buf.k + 1]
