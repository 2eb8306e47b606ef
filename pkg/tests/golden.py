"""Reference prefixes used across the test suite.

W32_100 and X32_144 are the canonical opening segments of the two least
3/2-power-avoiding words (threshold and exact discipline); SQUAREFREE_32 is
the opening of the least square-free word, whose n-th letter is the 2-adic
valuation of n + 1.
"""

W32_100 = [
    0, 1, 2, 0, 3, 1, 0, 2, 1, 3,
    0, 1, 2, 0, 4, 1, 0, 2, 1, 4,
    0, 1, 2, 0, 3, 1, 0, 2, 1, 5,
    0, 1, 2, 0, 4, 1, 0, 2, 1, 3,
    0, 1, 2, 0, 3, 1, 0, 2, 1, 4,
    0, 1, 2, 0, 4, 1, 0, 2, 1, 5,
    0, 1, 2, 0, 3, 1, 0, 2, 1, 3,
    0, 1, 2, 0, 4, 1, 0, 2, 1, 4,
    0, 1, 2, 0, 3, 1, 0, 2, 1, 6,
    0, 1, 2, 0, 4, 1, 0, 2, 1, 3,
]

X32_144 = [
    0, 0, 1, 1, 0, 2, 1, 0, 0, 1, 1, 2,
    0, 0, 1, 1, 0, 3, 1, 0, 0, 1, 1, 3,
    0, 0, 1, 1, 0, 2, 1, 0, 0, 1, 1, 4,
    0, 0, 1, 1, 0, 3, 1, 0, 0, 1, 1, 2,
    0, 0, 1, 1, 0, 2, 1, 0, 0, 1, 1, 3,
    0, 0, 1, 1, 0, 3, 1, 0, 0, 1, 1, 4,
    0, 0, 1, 1, 0, 2, 1, 0, 0, 1, 1, 2,
    0, 0, 1, 1, 0, 3, 1, 0, 0, 1, 1, 3,
    0, 0, 1, 1, 0, 2, 1, 0, 0, 1, 1, 5,
    0, 0, 1, 1, 0, 3, 1, 0, 0, 1, 1, 2,
    0, 0, 1, 1, 0, 2, 1, 0, 0, 1, 1, 3,
    0, 0, 1, 1, 0, 3, 1, 0, 0, 1, 1, 5,
]

SQUAREFREE_32 = [int(ch) for ch in "01020103010201040102010301020105"]
