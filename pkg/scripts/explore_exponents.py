#!/usr/bin/env python3
"""Greedy experiments across exponents.

Prints the opening of the least avoiding word and its letter usage for a
grid of exponents in both disciplines.  Nothing here is a proven statement;
the interesting open direction is whether thresholds like 5/2 keep the
alphabet finite, and this gives a quick empirical look.
"""

import argparse
from collections import Counter

from lexleast.detect import AvoidanceMode
from lexleast.greedy import generate
from lexleast.words import Exponent

DEFAULT_EXPONENTS = ("4/3", "3/2", "5/3", "2/1", "5/2", "3/1")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--length", type=int, default=2_000)
    parser.add_argument("--exponents", nargs="*", default=DEFAULT_EXPONENTS, metavar="P/Q")
    args = parser.parse_args()

    for text in args.exponents:
        exponent = Exponent.parse(text)
        for mode in AvoidanceMode:
            word = generate(exponent, mode, args.length)
            usage = Counter(word)
            head = " ".join(str(v) for v in word[:30])
            print(f"{exponent} {mode.value:9s} letters<= {max(word):3d}  "
                  f"distinct {len(usage):3d}  head {head}")
        print()


if __name__ == "__main__":
    main()
