"""Permutations of S_n in one-line (window) notation.

Everything here is 1-based, matching the usual combinatorial conventions:
the window of w lists the values w(1)..w(n), and the simple transposition
s_i swaps the entries in window positions i and i+1 for 1 <= i <= n-1.

>>> w = from_window([2, 5, 3, 1, 4])
>>> w.length()
5
>>> sorted(w.right_descents())
[2, 3]
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

# The workloads built on top of this module are factorial in n, so a large
# group is almost certainly a configuration mistake rather than a real
# request.  Raise this deliberately if you know what you are doing.
MAX_N = 10


@dataclass(frozen=True)
class Permutation:
    """An element of S_n stored as the window (w(1), ..., w(n))."""

    window: tuple[int, ...]

    def __post_init__(self):
        win = tuple(self.window)
        object.__setattr__(self, "window", win)
        n = len(win)
        if n == 0:
            raise ValueError("empty window")
        if n > MAX_N:
            raise ValueError(f"n={n} exceeds the configured maximum {MAX_N}")
        if sorted(win) != list(range(1, n + 1)):
            raise ValueError(f"window {list(win)} is not a bijection on 1..{n}")

    @property
    def n(self) -> int:
        return len(self.window)

    def __call__(self, i: int) -> int:
        """The value w(i), 1-based."""
        return self.window[i - 1]

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.window, 1))

    def length(self) -> int:
        """Number of inversions, which equals the length of every reduced word.

        >>> from_window([3, 2, 1]).length()
        3
        """
        w = self.window
        n = len(w)
        return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])

    def inversion_value_pairs(self) -> list[tuple[int, int]]:
        """The inversions of w as value pairs (w(i), w(j)) with i < j, w(i) > w(j)."""
        w = self.window
        n = len(w)
        return [(w[i], w[j]) for i in range(n) for j in range(i + 1, n) if w[i] > w[j]]

    def right_descents(self) -> set[int]:
        """{i : w(i) > w(i+1)}; empty exactly for the identity."""
        w = self.window
        return {i for i in range(1, len(w)) if w[i - 1] > w[i]}

    def multiply_right(self, i: int) -> "Permutation":
        """w * s_i: swap window positions i and i+1. Length changes by exactly 1."""
        w = self.window
        if not 1 <= i <= len(w) - 1:
            raise ValueError(f"generator index {i} out of range 1..{len(w) - 1}")
        win = list(w)
        win[i - 1], win[i] = win[i], win[i - 1]
        return Permutation(tuple(win))

    def inverse(self) -> "Permutation":
        """The group inverse; reverses every reduced word of w."""
        inv = [0] * len(self.window)
        for i, v in enumerate(self.window, 1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def complement(self) -> "Permutation":
        """Conjugate by the longest element: i -> n+1 - w(n+1-i).

        This is the reverse complement of the window.  It preserves length and
        applies the letter substitution i -> n-i to every reduced word of w,
        which is how it enters the symmetry arguments downstream.
        """
        w = self.window
        n = len(w)
        return Permutation(tuple(n + 1 - w[n - 1 - k] for k in range(n)))

    def is_321_avoiding(self) -> bool:
        """True iff no i < j < k has w(i) > w(j) > w(k).

        A 321 pattern exists iff some middle position j has a larger value
        somewhere to its left and a smaller one somewhere to its right, so a
        prefix-max / suffix-min sweep suffices.

        >>> from_window([2, 4, 1, 5, 6, 3]).is_321_avoiding()
        True
        >>> from_window([2, 5, 3, 1, 4]).is_321_avoiding()
        False
        """
        w = self.window
        n = len(w)
        if n < 3:
            return True
        suffix_min = [0] * n
        m = w[-1]
        for j in range(n - 1, -1, -1):
            m = min(m, w[j])
            suffix_min[j] = m
        prefix_max = w[0]
        for j in range(1, n - 1):
            if prefix_max > w[j] > suffix_min[j + 1]:
                return False
            prefix_max = max(prefix_max, w[j])
        return True

    def inversions_pairwise_share_letter(self) -> bool:
        """True iff every two inversions of w, read as value pairs, intersect.

        Vacuously true with at most one inversion.  This is the window-level
        test for a permutation having a single braid class.
        """
        inv = self.inversion_value_pairs()
        for x in range(len(inv)):
            ax, bx = inv[x]
            for y in range(x + 1, len(inv)):
                ay, by = inv[y]
                if ax != ay and ax != by and bx != ay and bx != by:
                    return False
        return True

    def __str__(self) -> str:
        return window_text(self)


def identity(n: int) -> Permutation:
    """The identity of S_n.

    >>> identity(3).window
    (1, 2, 3)
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    return Permutation(tuple(range(1, n + 1)))


def from_window(values: Sequence[int]) -> Permutation:
    """Build a permutation from its window, validating the bijection."""
    return Permutation(tuple(values))


def longest_element(n: int) -> Permutation:
    """The order-reversing permutation [n, n-1, ..., 1]."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return Permutation(tuple(range(n, 0, -1)))


def all_permutations(n: int) -> Iterator[Permutation]:
    """All of S_n in lexicographic window order."""
    from itertools import permutations as _perms

    if n < 1:
        raise ValueError("n must be at least 1")
    for win in _perms(range(1, n + 1)):
        yield Permutation(win)


def parse_window(text: str) -> Permutation:
    """Parse "[25314]" (single digits, n <= 9) or "2 5 3 1 4" / "2,5,3,1,4".

    >>> parse_window("[25314]").window
    (2, 5, 3, 1, 4)
    """
    s = text.strip()
    if not s:
        raise ValueError("empty window text")
    if s.startswith("[") and s.endswith("]"):
        body = s[1:-1].strip()
        if "," in body or " " in body:
            return from_window(_split_ints(body))
        if not body.isdigit():
            raise ValueError(f"cannot parse window {text!r}")
        return from_window([int(ch) for ch in body])
    return from_window(_split_ints(s))


def _split_ints(body: str) -> list[int]:
    parts = body.replace(",", " ").split()
    if not parts:
        raise ValueError("empty window text")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ValueError(f"cannot parse window entry in {body!r}") from None


def window_text(w: Permutation) -> str:
    """Compact bracketed form for n <= 9, space-separated otherwise."""
    if w.n <= 9:
        return "[" + "".join(str(v) for v in w.window) + "]"
    return " ".join(str(v) for v in w.window)
