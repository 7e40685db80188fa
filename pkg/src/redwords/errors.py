"""Exceptions shared across the package."""

from __future__ import annotations


class WordCapExceeded(RuntimeError):
    """The word set is too large to enumerate, which is an outcome, not a bug.

    The scan harness catches this to mark a permutation as skipped; callers
    that cannot tolerate a skip should treat it as fatal.
    """

    def __init__(self, window: tuple[int, ...], count: int, cap: int):
        self.window = window
        self.count = count
        self.cap = cap
        super().__init__(
            f"permutation {list(window)} has {count} reduced words, "
            f"which exceeds the cap of {cap}"
        )


class InvariantViolation(RuntimeError):
    """A statement that is proved in general failed on a concrete instance.

    This always indicates an implementation bug (or a wrong theorem), never
    bad user input, so it is kept distinct from ValueError.
    """
