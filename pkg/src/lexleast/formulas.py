"""Closed-form term evaluators for the two canonical avoidance sequences.

``w32`` is the lexicographically least word over the naturals avoiding every
factor of exponent >= 3/2; ``x32`` is the variant avoiding exact 3/2-powers
only.  Both follow a short periodic template with two free slots per block,
and the letters in the free slots reduce to the helper sequence ``b`` whose
value is read off the base-6 digits of the index.  All evaluators run in
O(log n) per term with plain iteration, no call-stack recursion.
"""

from __future__ import annotations

from dataclasses import dataclass


def w32_term(n: int) -> int:
    """Letter n of w32 via the period-10 template.

    Residues 0, 3, 6 hold 0; residues 1, 5, 8 hold 1; residues 2, 7 hold 2.
    Residue 4 alternates 3, 4 with the parity of the block index, and
    residue 9 holds the helper value b(block index).
    """
    if n < 0:
        raise ValueError(f"index must be non-negative, got {n}")
    block, r = divmod(n, 10)
    if r in (0, 3, 6):
        return 0
    if r in (1, 5, 8):
        return 1
    if r in (2, 7):
        return 2
    if r == 4:
        return 3 + block % 2
    return b_rec(block)


def b_rec(n: int) -> int:
    """Helper sequence b by its base-6 recurrence.

    b(6m) = b(6m+3) = 3, b(6m+1) = b(6m+4) = 4, b(6m+2) = 5 or 6 with the
    parity of m, and b(6m+5) = b(m) + 2.
    """
    if n < 0:
        raise ValueError(f"index must be non-negative, got {n}")
    add = 0
    while True:
        m, r = divmod(n, 6)
        if r in (0, 3):
            return 3 + add
        if r in (1, 4):
            return 4 + add
        if r == 2:
            return (5 if m % 2 == 0 else 6) + add
        add += 2
        n = m


def b_closed(n: int) -> int:
    """Helper sequence b read from the base-6 suffix of n.

    With t trailing 5-digits (the representation is padded with leading
    zeros), the digit before the 5-run decides: 0 or 3 give 2t+3, 1 or 4
    give 2t+4, and a 2 gives 2t+5 or 2t+6 with the parity of the digit
    before it.
    """
    if n < 0:
        raise ValueError(f"index must be non-negative, got {n}")
    t = 0
    d, r = divmod(n, 6)
    while r == 5:
        t += 1
        d, r = divmod(d, 6)
    if r in (0, 3):
        return 2 * t + 3
    if r in (1, 4):
        return 2 * t + 4
    # r == 2: the next digit (0 when exhausted) fixes the parity family
    return 2 * t + 5 if (d % 6) % 2 == 0 else 2 * t + 6


def c_term(s: int) -> int:
    """Auxiliary offset sequence c by recurrence: c(0)=0, c(6m)=6c(m)+5,
    c at residues 1, 3, 5 is 2 and at residues 2, 4 is 5."""
    if s < 0:
        raise ValueError(f"index must be non-negative, got {s}")
    if s == 0:
        return 0
    levels = 0
    while s % 6 == 0:
        levels += 1
        s //= 6
    value = 2 if s % 2 == 1 else 5
    for _ in range(levels):
        value = 6 * value + 5
    return value


def d_term(s: int) -> int:
    """Auxiliary stride sequence d by recurrence: d(0)=0, d(6m)=6d(m),
    d at residues 1, 5 is 3 and at residues 2, 3, 4 is 6."""
    if s < 0:
        raise ValueError(f"index must be non-negative, got {s}")
    if s == 0:
        return 0
    levels = 0
    while s % 6 == 0:
        levels += 1
        s //= 6
    value = 3 if s % 6 in (1, 5) else 6
    return value * 6**levels


def _trailing_zeros_base6(s: int) -> tuple[int, int]:
    """(t, last nonzero base-6 digit) for s >= 1."""
    t = 0
    while s % 6 == 0:
        t += 1
        s //= 6
    return t, s % 6


def c_closed(s: int) -> int:
    """Closed form of c for s >= 1: 6^(t+1) - 1 when the last nonzero base-6
    digit is even, else 3 * 6^t - 1, with t the number of trailing zeros."""
    if s < 1:
        raise ValueError(f"closed form defined for s >= 1, got {s}")
    t, digit = _trailing_zeros_base6(s)
    return 6 ** (t + 1) - 1 if digit % 2 == 0 else 3 * 6**t - 1


def d_closed(s: int) -> int:
    """Closed form of d for s >= 1: 6^(t+1) when the last nonzero base-6
    digit is 2, 3, or 4, else 3 * 6^t."""
    if s < 1:
        raise ValueError(f"closed form defined for s >= 1, got {s}")
    t, digit = _trailing_zeros_base6(s)
    return 6 ** (t + 1) if digit in (2, 3, 4) else 3 * 6**t


def f_term(n: int) -> int:
    """Letter n of x32 via the period-12 template.

    Residues 0, 1, 4, 7, 8 hold 0; residues 2, 3, 6, 9, 10 hold 1.
    Residue 5 alternates 2, 3 with the parity of the block index.  Residue
    11 holds 2 or 3 for block index 0 or 1 mod 3, and otherwise recurses as
    f(2 * block + 1) + 2; it always equals b(block) - 1.
    """
    if n < 0:
        raise ValueError(f"index must be non-negative, got {n}")
    add = 0
    while True:
        block, r = divmod(n, 12)
        if r in (0, 1, 4, 7, 8):
            return add
        if r in (2, 3, 6, 9, 10):
            return 1 + add
        if r == 5:
            return (2 if block % 2 == 0 else 3) + add
        # r == 11
        if block % 3 == 0:
            return 2 + add
        if block % 3 == 1:
            return 3 + add
        add += 2
        n = 2 * block + 1


def x32_term(n: int) -> int:
    """Alias of ``f_term``: letter n of the exact-avoidance word x32."""
    return f_term(n)


def ruler_term(n: int) -> int:
    """Letter n of the lexicographically least square-free word: the 2-adic
    valuation of n + 1."""
    if n < 0:
        raise ValueError(f"index must be non-negative, got {n}")
    m = n + 1
    return (m & -m).bit_length() - 1


@dataclass(frozen=True)
class EllCase:
    """Shape of a decrement at a b-slot: the parity of the original letter
    b(n), the target letter m >= 5, and whether m is exactly b(n) - 1."""

    b_odd: bool
    m: int
    is_pred: bool = False

    def __post_init__(self) -> None:
        if self.m < 5:
            raise ValueError(f"decrement targets below 5 have fixed short witnesses, got m={self.m}")
        if self.is_pred and self.b_odd == (self.m % 2 == 1):
            raise ValueError("m = b(n) - 1 requires opposite parities")

    @classmethod
    def from_value(cls, b_value: int, m: int) -> "EllCase":
        if not 5 <= m < b_value:
            raise ValueError(f"need 5 <= m < b value, got m={m}, b={b_value}")
        return cls(b_value % 2 == 1, m, m == b_value - 1)


def ell_m(case: EllCase) -> int:
    """Block length of the repetition created by decrementing a b-slot to m.

    The witness is an xyx with |x| = |y| equal to this value; it is always a
    multiple of 10 (of 30, in fact).
    """
    m = case.m
    if m % 2 == 0:
        exp = m // 2 - 3
        assert exp >= 0
        return 30 * 6**exp
    exp = (m + 1) // 2 - 3
    assert exp >= 0
    if case.b_odd:
        return 60 * 6**exp
    return 30 * 6**exp if case.is_pred else 60 * 6**exp


def w32_prefix(length: int) -> list[int]:
    return [w32_term(i) for i in range(length)]


def x32_prefix(length: int) -> list[int]:
    return [f_term(i) for i in range(length)]


def ruler_prefix(length: int) -> list[int]:
    return [ruler_term(i) for i in range(length)]
