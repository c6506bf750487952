#!/usr/bin/env python3
"""Exercise the distinguished antiderivative across logarithm levels.

The derivative of l[alpha] is the product of l[beta]^-1 over beta < alpha;
integrating that product must return l[alpha] exactly, at every level,
including the transfinite ones.  The second half round-trips derive/integrate
on a few hand-picked series.
"""
import argparse

from hyperlog import (OMEGA, Precision, derive, eq_to_bound, format_value,
                      from_monomial, hyperlog, hyperlog_deriv, integrate,
                      omega_pow, ord_add, ordinal, parse_ordinal, ser_add,
                      ser_mul, X)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--prec", type=int, default=6,
                        help="term budget for truncating expansions")
    args = parser.parse_args()
    prec = Precision(args.prec)

    for text in ("1", "2", "w", "w+1", "w*2", "w^2"):
        alpha = parse_ordinal(text)
        got = integrate(from_monomial(hyperlog_deriv(alpha)), prec)
        print("int(D(l[%s])) = %s" % (alpha, format_value(got)))
    print()

    l1 = from_monomial(hyperlog(ordinal(1)))
    lw = from_monomial(hyperlog(OMEGA))
    for label, f in (("l[1]", l1),
                     ("x*l[1]", ser_mul(from_monomial(X), l1)),
                     ("l[w] + l[1]", ser_add(lw, l1))):
        anti = integrate(f, prec)
        ok = eq_to_bound(derive(anti, prec), f)
        print("int(%s) = %s" % (label, format_value(anti)))
        print("  derivative matches input up to the bound: %s" % ok)


if __name__ == "__main__":
    main()
