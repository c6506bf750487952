#!/usr/bin/env python3
"""Print the composition table of the logarithm hierarchy.

For each level beta, composing l[gamma] on the right with l[w^beta] shifts the
index by ordinal addition while gamma stays below w^(beta+1); at the first
fixed point w^(beta+1) the result collapses to l[w^(beta+1)] - 1 instead.
"""
import argparse

from hyperlog import (Precision, compose_hyperlog_omega, format_value,
                      from_monomial, hyperlog, omega_pow, ord_add, ordinal,
                      parse_ordinal)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--beta-max", type=int, default=2,
                        help="largest finite level exponent to tabulate")
    parser.add_argument("--prec", type=int, default=8,
                        help="term budget for truncating expansions")
    args = parser.parse_args()
    prec = Precision(args.prec)

    samples = ["1", "2", "w", "w+1", "w*2", "w^2", "w^2+w+3"]
    for beta_n in range(args.beta_max + 1):
        beta = ordinal(beta_n)
        mu = omega_pow(ord_add(beta, ordinal(1)))
        print("level w^%d:" % beta_n)
        for text in samples:
            gamma = parse_ordinal(text)
            if gamma >= mu:
                continue
            got = compose_hyperlog_omega(from_monomial(hyperlog(gamma)),
                                         beta, prec)
            print("  l[%s] o l[w^%d] = %s" % (gamma, beta_n,
                                              format_value(got)))
        shifted = compose_hyperlog_omega(from_monomial(hyperlog(mu)),
                                         beta, prec)
        print("  l[%s] o l[w^%d] = %s   (fixed-point shift)"
              % (mu, beta_n, format_value(shifted)))
        print()


if __name__ == "__main__":
    main()
