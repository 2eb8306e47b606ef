"""Forbidden-repetition detection.

Two avoidance disciplines share one rational exponent p/q:

* ``THRESHOLD`` forbids every factor whose exponent (length over least
  period) is at least p/q.
* ``EXACT`` forbids only factors that are exact p/q-powers, i.e. of length
  p*t with period q*t.  Squares of odd period, for instance, survive
  exact-3/2 avoidance.

``forbidden_suffix`` looks for a forbidden factor ending at the last
position.  That is the only place a new one can appear when the preceding
prefix is clean, which is what makes letter-by-letter generation cheap.

``LceIndex`` accelerates the per-position period scan with double-modulus
rolling hashes over append-only arrays.  Hash inequality is exact, and every
hash match that is about to become a verdict is confirmed by direct letter
comparison, so a collision can never produce a wrong answer.
"""

from __future__ import annotations

from enum import Enum
from typing import Iterable

import numpy as np

from .words import Exponent, Occurrence, Word

_M1 = (1 << 31) - 1
_M2 = (1 << 31) - 19
_B1 = 1_000_003
_B2 = 1_000_033


class AvoidanceMode(Enum):
    THRESHOLD = "threshold"
    EXACT = "exact"


class LceIndex:
    """Append-only word with fast backward substring-equality queries.

    Letters are stored as int64; hashes use two 31-bit moduli so that all
    intermediate products stay below 2**62.  ``pop`` supports tentative
    appends (try a letter, test, retract).
    """

    __slots__ = ("_n", "_cap", "_let", "_h1", "_h2", "_p1", "_p2")

    def __init__(self, letters: Iterable[int] = ()) -> None:
        self._n = 0
        self._cap = 64
        self._let = np.zeros(self._cap, dtype=np.int64)
        self._h1 = np.zeros(self._cap + 1, dtype=np.int64)
        self._h2 = np.zeros(self._cap + 1, dtype=np.int64)
        self._p1 = np.zeros(self._cap + 1, dtype=np.int64)
        self._p2 = np.zeros(self._cap + 1, dtype=np.int64)
        self._p1[0] = 1
        self._p2[0] = 1
        for v in letters:
            self.append(v)

    def __len__(self) -> int:
        return self._n

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self._n:
            raise IndexError(i)
        return int(self._let[i])

    def to_list(self) -> list[int]:
        return [int(v) for v in self._let[: self._n]]

    def _grow(self) -> None:
        new_cap = self._cap * 2
        for name in ("_let", "_h1", "_h2", "_p1", "_p2"):
            old = getattr(self, name)
            extra = new_cap - self._cap
            setattr(self, name, np.concatenate([old, np.zeros(extra, dtype=np.int64)]))
        self._cap = new_cap

    def append(self, letter: int) -> None:
        if letter < 0:
            raise ValueError(f"letters are natural numbers, got {letter}")
        if letter >= (1 << 31):
            # int64 storage plus the hash arithmetic cap letter magnitude
            raise OverflowError(f"letter {letter} exceeds the supported width")
        n = self._n
        if n + 2 > self._cap:
            self._grow()
        self._let[n] = letter
        x = letter + 1
        self._h1[n + 1] = (int(self._h1[n]) * _B1 + x) % _M1
        self._h2[n + 1] = (int(self._h2[n]) * _B2 + x) % _M2
        self._p1[n + 1] = (int(self._p1[n]) * _B1) % _M1
        self._p2[n + 1] = (int(self._p2[n]) * _B2) % _M2
        self._n = n + 1

    def pop(self) -> int:
        if self._n == 0:
            raise IndexError("pop from empty index")
        self._n -= 1
        return int(self._let[self._n])

    def extend(self, letters: Iterable[int]) -> None:
        for v in letters:
            self.append(v)

    def _equal_ranges(self, a1: int, a2: int, length: int) -> bool:
        return bool(np.array_equal(self._let[a1 : a1 + length], self._let[a2 : a2 + length]))

    def _hash_equal(self, a1: int, a2: int, length: int) -> bool:
        h1, p1 = self._h1, self._p1
        if (int(h1[a1 + length]) - int(h1[a1]) * int(p1[length])) % _M1 != (
            int(h1[a2 + length]) - int(h1[a2]) * int(p1[length])
        ) % _M1:
            return False
        h2, p2 = self._h2, self._p2
        return (int(h2[a1 + length]) - int(h2[a1]) * int(p2[length])) % _M2 == (
            int(h2[a2 + length]) - int(h2[a2]) * int(p2[length])
        ) % _M2

    def _hash_candidates(self, periods: np.ndarray, needs: np.ndarray, end: int) -> np.ndarray:
        """Indices k where the needs[k] letters ending at end-1 hash-match the
        needs[k] letters ending at end-1-periods[k].  Unconfirmed."""
        h1 = self._h1
        a1 = end - needs
        a2 = a1 - periods
        b2 = end - periods
        pw = self._p1[needs]
        lhs = (int(h1[end]) - h1[a1] * pw) % _M1
        rhs = (h1[b2] - h1[a2] * pw) % _M1
        cand = np.flatnonzero(lhs == rhs)
        if cand.size == 0:
            return cand
        h2 = self._h2
        pw2 = self._p2[needs[cand]]
        lhs2 = (int(h2[end]) - h2[a1[cand]] * pw2) % _M2
        rhs2 = (h2[b2[cand]] - h2[a2[cand]] * pw2) % _M2
        return cand[lhs2 == rhs2]

    def threshold_hit(self, p: int, q: int, end: int | None = None) -> tuple[int, int] | None:
        """Smallest period P whose minimal >= p/q-power ends at position end-1.

        Returns (P, matched) where `matched` letters beyond the period block
        were verified equal, or None if the suffix is clean.
        """
        n = self._n if end is None else end
        if not 0 <= n <= self._n:
            raise ValueError(f"end {n} out of range for length {self._n}")
        pmax = (n * q) // p
        if pmax < 1:
            return None
        periods = np.arange(1, pmax + 1)
        needs = (periods * (p - q) + q - 1) // q
        for k in self._hash_candidates(periods, needs, n):
            period, need = int(periods[k]), int(needs[k])
            if self._equal_ranges(n - need, n - need - period, need):
                return period, need
        return None

    def exact_hit(self, p: int, q: int, end: int | None = None) -> tuple[int, int] | None:
        """Smallest t such that an exact p/q-power of length p*t ends at end-1.

        Returns (t, q*t) or None.
        """
        n = self._n if end is None else end
        if not 0 <= n <= self._n:
            raise ValueError(f"end {n} out of range for length {self._n}")
        tmax = n // p
        if tmax < 1:
            return None
        ts = np.arange(1, tmax + 1)
        periods = q * ts
        needs = (p - q) * ts
        for k in self._hash_candidates(periods, needs, n):
            t, period, need = int(ts[k]), int(periods[k]), int(needs[k])
            if self._equal_ranges(n - need, n - need - period, need):
                return t, period
        return None

    def lce_backward(self, i: int, j: int) -> int:
        """Largest L such that the L letters ending at i equal those ending at j."""
        n = self._n
        if not (0 <= i < n and 0 <= j < n):
            raise ValueError(f"indices ({i}, {j}) out of range for length {n}")
        if self._let[i] != self._let[j]:
            return 0
        lo, hi = 1, min(i, j) + 1
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if self._hash_equal(i - mid + 1, j - mid + 1, mid):
                lo = mid
            else:
                hi = mid - 1
        if self._equal_ranges(i - lo + 1, j - lo + 1, lo):
            return lo
        # hash collision: fall back to the direct scan
        length = 0
        bound = min(i, j) + 1
        let = self._let
        while length < bound and let[i - length] == let[j - length]:
            length += 1
        return length


def _forbidden_suffix_indexed(
    idx: LceIndex, exponent: Exponent, mode: AvoidanceMode, end: int
) -> Occurrence | None:
    if mode is AvoidanceMode.THRESHOLD:
        hit = idx.threshold_hit(exponent.p, exponent.q, end)
        if hit is None:
            return None
        period, _ = hit
        run = idx.lce_backward(end - 1, end - 1 - period)
        return Occurrence(end - period - run, period, period + run)
    hit = idx.exact_hit(exponent.p, exponent.q, end)
    if hit is None:
        return None
    t, period = hit
    length = exponent.p * t
    return Occurrence(end - length, period, length)


def _forbidden_suffix_direct(
    word: Word, exponent: Exponent, mode: AvoidanceMode, end: int
) -> Occurrence | None:
    n = end
    p, q = exponent.p, exponent.q
    if mode is AvoidanceMode.THRESHOLD:
        for period in range(1, (n * q) // p + 1):
            run = 0
            while run < n - period and word[n - 1 - run] == word[n - 1 - period - run]:
                run += 1
            length = period + run
            if length * q >= period * p:
                return Occurrence(n - length, period, length)
        return None
    for t in range(1, n // p + 1):
        period, length = q * t, p * t
        start = n - length
        if all(word[start + i] == word[start + i + period] for i in range(length - period)):
            return Occurrence(start, period, length)
    return None


def forbidden_suffix(
    word: Word | LceIndex,
    exponent: Exponent,
    mode: AvoidanceMode = AvoidanceMode.THRESHOLD,
    end: int | None = None,
) -> Occurrence | None:
    """Witness of a forbidden factor ending at position ``end - 1``, or None.

    ``end`` defaults to the full length.  Among witnesses the one with the
    smallest period is returned, extended to the longest length for that
    period in threshold mode (exact powers have their length pinned to p*t).
    """
    n = len(word) if end is None else end
    if not 0 <= n <= len(word):
        raise ValueError(f"end {n} out of range for word of length {len(word)}")
    if n == 0:
        return None
    if isinstance(word, LceIndex):
        return _forbidden_suffix_indexed(word, exponent, mode, n)
    return _forbidden_suffix_direct(word, exponent, mode, n)


def contains_forbidden(
    word: Word | LceIndex,
    exponent: Exponent,
    mode: AvoidanceMode = AvoidanceMode.THRESHOLD,
) -> Occurrence | None:
    """First forbidden factor in end-position order over the whole word."""
    idx = word if isinstance(word, LceIndex) else LceIndex(word)
    for end in range(1, len(idx) + 1):
        occ = _forbidden_suffix_indexed(idx, exponent, mode, end)
        if occ is not None:
            return occ
    return None
