"""Truncation-bounded exact series over the logarithmic monomial group.

A Series is a finite descending list of (monomial, coefficient) terms plus an
optional bound monomial.  Semantics: the represented value is the listed sum
plus a remainder every monomial of which is strictly below the bound.  Listed
monomials are at or above the bound, so every listed coefficient is exact.
Without a bound the series is the listed sum, exactly.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key

from .errors import (IndeterminateDominant, IndeterminateSign,
                     IndeterminateSplit, IrrationalConstantPower, NonMonicLog,
                     NotPositive, ZeroSeries)
from .monomial import (LT, EQ, GT, MONE, Monomial, mono_compare, mono_max,
                       mono_mul, mono_pow)

NEG, ZEROSIGN, POS = -1, 0, 1


@dataclass(frozen=True)
class Series:
    terms: tuple = ()  # ((Monomial, Fraction), ...) strictly descending
    bound: Monomial | None = None

    def __repr__(self):
        if not self.terms and self.bound is None:
            return "Series(0)"
        body = " + ".join("%s*%r" % (c, m) for m, c in self.terms)
        if self.bound is not None:
            body += " + O(%r)" % (self.bound,)
        return "Series(%s)" % body


@dataclass(frozen=True)
class Precision:
    budget: int = 8

    def __post_init__(self):
        if self.budget < 1:
            raise ValueError("precision budget must be >= 1")


DEFAULT_PRECISION = Precision(8)

S_ZERO = Series()
S_ONE = Series(((MONE, Fraction(1)),))


def make_series(terms, bound: Monomial | None = None) -> Series:
    """Canonicalize: merge duplicates, drop zeros and sub-bound terms, sort."""
    acc = {}
    for m, c in terms:
        acc[m] = acc.get(m, Fraction(0)) + Fraction(c)
    kept = [(m, c) for m, c in acc.items() if c != 0]
    if bound is not None:
        kept = [(m, c) for m, c in kept if mono_compare(m, bound) != LT]
    kept.sort(key=cmp_to_key(lambda a, b: mono_compare(a[0], b[0])), reverse=True)
    return Series(tuple(kept), bound)


def from_const(c) -> Series:
    c = Fraction(c)
    return Series(((MONE, c),)) if c != 0 else S_ZERO


def from_monomial(m: Monomial, c=1) -> Series:
    c = Fraction(c)
    return Series(((m, c),)) if c != 0 else S_ZERO


def is_exact_zero(a: Series) -> bool:
    return not a.terms and a.bound is None


def _join_bounds(a: Monomial | None, b: Monomial | None) -> Monomial | None:
    if a is None:
        return b
    if b is None:
        return a
    return mono_max(a, b)


def with_bound(a: Series, bound: Monomial | None) -> Series:
    """Weaken a by an extra bound monomial."""
    if bound is None:
        return a
    return make_series(a.terms, _join_bounds(a.bound, bound))


def ser_add(a: Series, b: Series) -> Series:
    return make_series(a.terms + b.terms, _join_bounds(a.bound, b.bound))


def ser_neg(a: Series) -> Series:
    return Series(tuple((m, -c) for m, c in a.terms), a.bound)


def ser_sub(a: Series, b: Series) -> Series:
    return ser_add(a, ser_neg(b))


def ser_scale(a: Series, c) -> Series:
    c = Fraction(c)
    if c == 0:
        return S_ZERO
    return Series(tuple((m, k * c) for m, k in a.terms), a.bound)


def ser_mul_mono(a: Series, m: Monomial, c=1) -> Series:
    """Multiply by an exact monomial term c*m."""
    c = Fraction(c)
    if c == 0:
        return S_ZERO
    terms = tuple((mono_mul(tm, m), tc * c) for tm, tc in a.terms)
    bound = mono_mul(a.bound, m) if a.bound is not None else None
    return Series(terms, bound)


def ser_mul(a: Series, b: Series) -> Series:
    if is_exact_zero(a) or is_exact_zero(b):
        return S_ZERO
    bound = None
    if b.bound is not None and a.terms:
        bound = _join_bounds(bound, mono_mul(a.terms[0][0], b.bound))
    if a.bound is not None and b.terms:
        bound = _join_bounds(bound, mono_mul(b.terms[0][0], a.bound))
    if a.bound is not None and b.bound is not None:
        bound = _join_bounds(bound, mono_mul(a.bound, b.bound))
    cross = []
    for ma, ca in a.terms:
        # terms descend, so each row of products descends: stop below the bound
        if bound is not None and b.terms and \
                mono_compare(mono_mul(ma, b.terms[0][0]), bound) == LT:
            break
        for mb, cb in b.terms:
            m = mono_mul(ma, mb)
            if bound is not None and mono_compare(m, bound) == LT:
                break
            cross.append((m, ca * cb))
    return make_series(cross, bound)


def ser_dominant(a: Series):
    """The exact leading (monomial, coefficient) pair."""
    if a.terms:
        return a.terms[0]
    if a.bound is not None:
        raise IndeterminateDominant("dominant term hidden below the bound")
    raise ZeroSeries("the zero series has no dominant term")


def ser_compare_zero(a: Series) -> int:
    """Sign of a: NEG, ZEROSIGN or POS."""
    if a.terms:
        return POS if a.terms[0][1] > 0 else NEG
    if a.bound is None:
        return ZEROSIGN
    raise IndeterminateSign("sign hidden below the bound")


def ser_lt(a: Series, b: Series) -> bool:
    return ser_compare_zero(ser_sub(a, b)) == NEG


def eq_exact(a: Series, b: Series) -> bool:
    """Exact equality: both unbounded with identical terms."""
    return a.bound is None and b.bound is None and a.terms == b.terms


def eq_to_bound(a: Series, b: Series) -> bool:
    """Equality of all content at or above the weaker of the two bounds."""
    if a.bound is None and b.bound is None:
        return a.terms == b.terms
    return not ser_sub(a, b).terms


def _split_dominant(a: Series):
    """Write a as c*m*(1 + eps) with eps strictly below 1; return (m, c, eps)."""
    m, c = ser_dominant(a)
    rest = Series(a.terms[1:], a.bound)
    eps = ser_mul_mono(rest, mono_pow(m, -1), Fraction(1) / c)
    return m, c, eps


def _dominant_monomial_or_bound(t: Series) -> Monomial | None:
    if t.terms:
        return t.terms[0][0]
    return t.bound


def ser_mul_inverse(a: Series, prec: Precision = DEFAULT_PRECISION) -> Series:
    """Multiplicative inverse by the geometric expansion of the tail."""
    m, c, eps = _split_dominant(a)
    acc = S_ONE
    t = S_ONE
    trunc = None
    if not is_exact_zero(eps):
        # eps is infinitesimal, so everything below its budget-th power is
        # truncated at the end; pruning early keeps the cross products small
        pre = None
        if eps.terms and prec.budget > 1:
            pre = mono_pow(eps.terms[0][0], prec.budget - 1)
        for _ in range(1, prec.budget):
            t = with_bound(ser_neg(ser_mul(t, eps)), pre)
            if is_exact_zero(t):
                break
            acc = ser_add(acc, t)
        else:
            trunc = _dominant_monomial_or_bound(t)
    out = ser_mul_mono(acc, mono_pow(m, -1), Fraction(1) / c)
    if trunc is not None:
        out = with_bound(out, mono_mul(trunc, mono_pow(m, -1)))
    return out


def log_monomial(m: Monomial, prec: Precision = DEFAULT_PRECISION) -> Series:
    """The logarithm of a monomial: sum of r_b * l[b+1] over the support.

    Emitted in descending monomial order (ascending level); infinite interval
    pieces are truncated with a bound.
    """
    from .monomial import hyperlog
    from .ordinal import ONE, ord_add, ord_compare, GT as OGT

    terms = []
    budget = prec.budget
    for lo, hi, e in m.pieces:
        beta = lo
        while ord_compare(hi, beta) == OGT:
            if budget == 0:
                return make_series(terms, terms[-1][0] if terms else None)
            terms.append((hyperlog(ord_add(beta, ONE)), e))
            budget -= 1
            beta = ord_add(beta, ONE)
    return make_series(terms)


def _check_positive_leading(a: Series):
    m, c = ser_dominant(a)
    if c < 0:
        raise NotPositive("leading coefficient %s is negative" % c)
    return m, c


def ser_log(a: Series, prec: Precision = DEFAULT_PRECISION) -> Series:
    """Logarithm of a positive series with leading coefficient 1."""
    m, c = _check_positive_leading(a)
    if c != 1:
        raise NonMonicLog("leading coefficient %s is not 1" % c)
    _, _, eps = _split_dominant(a)
    out = log_monomial(m, prec)
    if not is_exact_zero(eps):
        acc = S_ZERO
        t = S_ONE
        trunc = None
        pre = mono_pow(eps.terms[0][0], prec.budget) if eps.terms else None
        for n in range(1, prec.budget + 1):
            t = with_bound(ser_mul(t, eps), pre)
            if is_exact_zero(t):
                break
            acc = ser_add(acc, ser_scale(t, Fraction((-1) ** (n - 1), n)))
        else:
            trunc = _dominant_monomial_or_bound(t)
        out = ser_add(out, acc)
        if trunc is not None:
            out = with_bound(out, trunc)
    return out


def rational_pow(c: Fraction, t: Fraction) -> Fraction | None:
    """c**t when it is rational, else None; c must be positive."""
    if c <= 0:
        raise ValueError("base must be positive")
    c = Fraction(c)
    t = Fraction(t)
    if t == 0 or c == 1:
        return Fraction(1)
    if t < 0:
        c, t = 1 / c, -t
    num, den = c.numerator, c.denominator

    def int_root(n: int, k: int):
        if k == 1:
            return n
        r = round(n ** (1.0 / k))
        for cand in (r - 1, r, r + 1):
            if cand >= 0 and cand**k == n:
                return cand
        return None

    rn = int_root(num, t.denominator)
    rd = int_root(den, t.denominator)
    if rn is None or rd is None:
        return None
    return Fraction(rn**t.numerator, rd**t.numerator)


def ser_pow(a: Series, t, prec: Precision = DEFAULT_PRECISION) -> Series:
    """Rational power of a positive series via the binomial expansion."""
    t = Fraction(t)
    m, c = _check_positive_leading(a)
    ct = rational_pow(c, t)
    if ct is None:
        raise IrrationalConstantPower("%s**%s is irrational" % (c, t))
    _, _, eps = _split_dominant(a)
    acc = S_ONE
    if not is_exact_zero(eps):
        p = S_ONE
        coeff = Fraction(1)
        trunc = None
        pre = None
        terminating = t.denominator == 1 and 0 <= t <= prec.budget
        if eps.terms and not terminating:
            pre = mono_pow(eps.terms[0][0], prec.budget)
        for n in range(1, prec.budget + 1):
            coeff = coeff * (t - (n - 1)) / n
            if coeff == 0:
                break
            p = with_bound(ser_mul(p, eps), pre)
            if is_exact_zero(p):
                break
            acc = ser_add(acc, ser_scale(p, coeff))
        else:
            trunc = _dominant_monomial_or_bound(p)
        if trunc is not None:
            acc = with_bound(acc, trunc)
    return ser_mul_mono(acc, mono_pow(m, t), ct)


def ser_exp_small(h: Series, prec: Precision = DEFAULT_PRECISION) -> Series:
    """exp of an infinitesimal series: sum of h^n / n!."""
    if is_exact_zero(h):
        return S_ONE
    if h.terms and mono_compare(h.terms[0][0], MONE) != LT:
        raise ValueError("exp needs an infinitesimal argument")
    acc = S_ONE
    t = S_ONE
    trunc = None
    pre = mono_pow(h.terms[0][0], prec.budget) if h.terms else None
    for n in range(1, prec.budget + 1):
        t = with_bound(ser_scale(ser_mul(t, h), Fraction(1, n)), pre)
        if is_exact_zero(t):
            break
        acc = ser_add(acc, t)
    else:
        trunc = _dominant_monomial_or_bound(t)
    if trunc is not None:
        acc = with_bound(acc, trunc)
    return acc


def ser_parts(a: Series):
    """Split into (purely infinite part, constant, infinitesimal part)."""
    if a.bound is not None and mono_compare(a.bound, MONE) != LT:
        raise IndeterminateSplit("bound at or above 1 hides the constant part")
    big, const, small = [], Fraction(0), []
    for m, c in a.terms:
        cmp = mono_compare(m, MONE)
        if cmp == GT:
            big.append((m, c))
        elif cmp == EQ:
            const = c
        else:
            small.append((m, c))
    return make_series(big), const, make_series(small, a.bound)
