"""Exhaustive enumeration of the reduced words R(w).

A reduced word is stored as a ``bytes`` object whose entries are the 1-based
generator indices, e.g. ``bytes((1, 2, 4, 3, 2))`` for the word 12432.  Bytes
behave as immutable sequences of small ints, compare lexicographically, and
keep the largest desk-scale word sets (292,864 words of length 15 for the
longest element of S_6) compact.

Enumeration uses the right-descent recursion: R(e) = {empty} and otherwise
R(w) is the union over right descents i of R(w s_i) with the letter i
appended.  Words ending in different letters come from different descents,
so no duplicates can arise; the result is sorted, and sortedness plus strict
increase is asserted afterwards.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import WordCapExceeded
from .permutation import Permutation

Word = bytes

# The longest element of S_7 has about 1.1e9 reduced words; anything past a
# couple million is out of desk scale, so the default cap skips those.
DEFAULT_WORD_CAP = 2_000_000


def evaluate(word: Sequence[int], n: int) -> Permutation:
    """The product s_{i_1} s_{i_2} ... s_{i_k}, multiplied left to right.

    >>> evaluate(bytes((1, 2, 4, 3, 2)), 5).window
    (2, 5, 3, 1, 4)
    """
    win = list(range(1, n + 1))
    for a in word:
        if not 1 <= a <= n - 1:
            raise ValueError(f"letter {a} out of range 1..{n - 1}")
        win[a - 1], win[a] = win[a], win[a - 1]
    return Permutation(tuple(win))


def is_reduced(word: Sequence[int], n: int) -> bool:
    """True iff the word's product has length equal to the word's length."""
    return evaluate(word, n).length() == len(word)


@dataclass(frozen=True)
class WordSet:
    """The complete R(target), sorted lexicographically and duplicate-free."""

    target: Permutation
    words: tuple[Word, ...]

    def __len__(self) -> int:
        return len(self.words)

    def index(self) -> dict[Word, int]:
        return {u: k for k, u in enumerate(self.words)}


def count_words(w: Permutation, cap: int | None = None) -> int:
    """|R(w)| via the memoized descent recursion; never materializes words.

    With ``cap`` set, a result above the cap raises WordCapExceeded so that
    callers can skip the permutation before paying for enumeration.
    """
    memo: dict[tuple[int, ...], int] = {}

    def rec(win: tuple[int, ...]) -> int:
        got = memo.get(win)
        if got is not None:
            return got
        total = 0
        lst = list(win)
        for i in range(len(win) - 1):
            if win[i] > win[i + 1]:
                lst[i], lst[i + 1] = lst[i + 1], lst[i]
                total += rec(tuple(lst))
                lst[i], lst[i + 1] = lst[i + 1], lst[i]
        memo[win] = total if total else 1
        return memo[win]

    total = rec(w.window)
    if cap is not None and total > cap:
        raise WordCapExceeded(w.window, total, cap)
    return total


def _expand(win: list[int], suffix: Word, out: list[Word]) -> None:
    # Depth-first over right descents in increasing index order, building each
    # word from its last letter backwards.
    found = False
    for i in range(len(win) - 1):
        if win[i] > win[i + 1]:
            found = True
            win[i], win[i + 1] = win[i + 1], win[i]
            _expand(win, bytes((i + 1,)) + suffix, out)
            win[i], win[i + 1] = win[i + 1], win[i]
    if not found:
        out.append(suffix)


def enumerate_words(w: Permutation, cap: int | None = DEFAULT_WORD_CAP) -> WordSet:
    """Enumerate all of R(w), sorted lexicographically.

    >>> [word_text(u) for u in enumerate_words(evaluate(b"\\x01\\x02", 3)).words]
    ['12']
    """
    expected = count_words(w, cap=cap)
    out: list[Word] = []
    _expand(list(w.window), b"", out)
    out.sort()
    if len(out) != expected:
        # The counting recursion and the depth-first expansion are independent
        # routes; disagreement means one of them is broken.
        raise AssertionError(
            f"enumeration produced {len(out)} words but the count recursion "
            f"says {expected} for {list(w.window)}"
        )
    assert all(out[k] < out[k + 1] for k in range(len(out) - 1)), "duplicate words"
    return WordSet(target=w, words=tuple(out))


def word_text(word: Sequence[int]) -> str:
    """Digit-string form for letters up to 9, comma-separated otherwise.

    The empty word prints as "e".
    """
    if len(word) == 0:
        return "e"
    if max(word) <= 9:
        return "".join(str(a) for a in word)
    return ",".join(str(a) for a in word)


def parse_word(text: str) -> Word:
    """Inverse of word_text: accepts "", "e", "12432", or "10,9,10"."""
    s = text.strip()
    if s in ("", "e"):
        return b""
    if "," in s or " " in s:
        parts = s.replace(",", " ").split()
        letters = [int(p) for p in parts]
    else:
        if not s.isdigit():
            raise ValueError(f"cannot parse word {text!r}")
        letters = [int(ch) for ch in s]
    if any(a < 1 for a in letters):
        raise ValueError(f"letters must be positive in {text!r}")
    return bytes(letters)
