#!/usr/bin/env python3
"""Show how truncating expansions refine as the term budget grows.

Each row recomputes the same expression with a doubled budget; the printed
bound shrinks while every previously listed term is reproduced unchanged.
"""
import argparse
from fractions import Fraction

from hyperlog import (Precision, format_value, from_const, from_monomial,
                      ser_add, ser_log, ser_mul_inverse, ser_pow, X)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--steps", type=int, default=3,
                        help="number of doublings starting from budget 2")
    args = parser.parse_args()

    xp1 = ser_add(from_monomial(X), from_const(1))
    rows = [
        ("1/(x+1)", lambda p: ser_mul_inverse(xp1, p)),
        ("log(x+1)", lambda p: ser_log(xp1, p)),
        ("(x+1)^(1/2)", lambda p: ser_pow(xp1, Fraction(1, 2), p)),
    ]
    for label, calc in rows:
        print(label + ":")
        budget = 2
        for _ in range(args.steps):
            print("  @%-2d  %s" % (budget, format_value(calc(Precision(budget)))))
            budget *= 2
        print()


if __name__ == "__main__":
    main()
