"""Greedy construction of lexicographically least power-avoiding words.

Extend the word one position at a time with the smallest letter that does
not complete a forbidden repetition.  No backtracking is ever needed: a
letter that does not yet occur in the word cannot complete a repetition
ending at the new position, so some candidate below ``max letter + 2``
always succeeds.
"""

from __future__ import annotations

from .detect import AvoidanceMode, LceIndex
from .words import Exponent


class GreedyState:
    """Generation state: the clean word so far plus its repetition index."""

    def __init__(self, exponent: Exponent, mode: AvoidanceMode = AvoidanceMode.THRESHOLD) -> None:
        self.exponent = exponent
        self.mode = mode
        self._idx = LceIndex()
        self._max_letter = -1

    def __len__(self) -> int:
        return len(self._idx)

    @property
    def word(self) -> list[int]:
        return self._idx.to_list()

    @property
    def max_letter(self) -> int:
        return self._max_letter

    def _clean_after(self, letter: int) -> bool:
        idx = self._idx
        idx.append(letter)
        if self.mode is AvoidanceMode.THRESHOLD:
            hit = idx.threshold_hit(self.exponent.p, self.exponent.q)
        else:
            hit = idx.exact_hit(self.exponent.p, self.exponent.q)
        idx.pop()
        return hit is None

    def next_letter(self) -> int:
        """Least letter whose appending leaves the word free of forbidden suffixes."""
        for candidate in range(self._max_letter + 2):
            if self._clean_after(candidate):
                return candidate
        raise RuntimeError(
            "no candidate letter admissible below the fresh-letter bound; "
            "the repetition detector is inconsistent"
        )

    def step(self) -> int:
        """Append the next letter and return it."""
        letter = self.next_letter()
        self._idx.append(letter)
        if letter > self._max_letter:
            self._max_letter = letter
        return letter

    def extend_to(self, length: int) -> None:
        while len(self._idx) < length:
            self.step()


def generate(exponent: Exponent, mode: AvoidanceMode, length: int) -> list[int]:
    """Length-``length`` prefix of the greedy word for the given discipline."""
    if length < 0:
        raise ValueError(f"length must be non-negative, got {length}")
    state = GreedyState(exponent, mode)
    state.extend_to(length)
    return state.word
