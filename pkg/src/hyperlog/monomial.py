"""The ordered group of logarithmic monomials with piecewise-constant exponents.

A monomial is a formal product of level-indexed logarithms l[b]^r where the
exponent, as a function of the ordinal level b, is constant on finitely many
half-open ordinal intervals and zero elsewhere.  Infinite-support values such
as the exact derivative monomials of the hyperlogarithms are first-class.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import IdentityMonomial
from .ordinal import (EQ, GT, LT, ONE, ZERO, Ordinal, ord_add, ord_compare)


@dataclass(frozen=True)
class Monomial:
    # ((lo: Ordinal, hi: Ordinal, exponent: Fraction), ...) sorted by lo,
    # pairwise disjoint, no zero exponents, adjacent equal pieces merged.
    pieces: tuple = ()

    # Equal monomials are interned to a single instance so that the hot
    # comparison and cache paths can short-circuit on object identity.
    _interned = {}

    def __new__(cls, pieces=()):
        self = cls._interned.get(pieces)
        if self is None:
            self = object.__new__(cls)
            cls._interned[pieces] = self
        return self

    def __repr__(self):
        if not self.pieces:
            return "Monomial(1)"
        body = ", ".join("[%s,%s)->%s" % (lo, hi, e) for lo, hi, e in self.pieces)
        return "Monomial(%s)" % body

    def __hash__(self):
        # hashing is hot; cache the recursive tuple hash per instance
        try:
            return self._hash
        except AttributeError:
            object.__setattr__(self, "_hash", hash(self.pieces))
            return self._hash


MONE = Monomial()  # the identity monomial


def make_monomial(pieces) -> Monomial:
    """Canonicalize: drop zeros, sort, check disjointness, merge neighbors."""
    kept = [(lo, hi, Fraction(e)) for lo, hi, e in pieces if e != 0]
    for lo, hi, _ in kept:
        if ord_compare(lo, hi) != LT:
            raise ValueError("empty interval [%s,%s)" % (lo, hi))
    kept.sort(key=lambda p: p[0].key)
    merged = []
    for lo, hi, e in kept:
        if merged:
            plo, phi, pe = merged[-1]
            if ord_compare(lo, phi) == LT:
                raise ValueError("overlapping intervals at %s" % lo)
            if lo == phi and e == pe:
                merged[-1] = (plo, hi, e)
                continue
        merged.append((lo, hi, e))
    return Monomial(tuple(merged))


@lru_cache(maxsize=None)
def exponent_at(m: Monomial, beta: Ordinal) -> Fraction:
    """The exponent of l[beta] in m."""
    for lo, hi, e in m.pieces:
        if ord_compare(lo, beta) != GT and ord_compare(beta, hi) == LT:
            return e
    return Fraction(0)


@lru_cache(maxsize=None)
def _merged_values(a: Monomial, b: Monomial):
    """(lo, hi, exp_a, exp_b) tuples over the joint breakpoint refinement."""
    zero = Fraction(0)
    events = []
    for which, m in enumerate((a, b)):
        for lo, hi, e in m.pieces:
            events.append((lo, which, e))
            events.append((hi, which, zero))
    events.sort(key=lambda p: p[0].key)
    out = []
    cur = [zero, zero]
    prev = None
    for point, which, e in events:
        if prev is not None and prev != point and (cur[0] or cur[1]):
            out.append((prev, point, cur[0], cur[1]))
        cur[which] = e
        prev = point
    return tuple(out)


@lru_cache(maxsize=None)
def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    """Group product: pointwise sum of exponent maps."""
    if not a.pieces:
        return b
    if not b.pieces:
        return a
    pieces = []
    for lo, hi, ea, eb in _merged_values(a, b):
        pieces.append((lo, hi, ea + eb))
    return make_monomial(pieces)


def mono_pow(a: Monomial, t) -> Monomial:
    """Every exponent scaled by the rational t; t = 0 gives the identity."""
    t = Fraction(t)
    if t == 0:
        return MONE
    return make_monomial([(lo, hi, e * t) for lo, hi, e in a.pieces])


@lru_cache(maxsize=None)
def mono_compare(a: Monomial, b: Monomial) -> int:
    """Lexicographic order: the lowest level where the exponents differ decides."""
    if a is b:
        return EQ
    pa, pb = a.pieces, b.pieces
    i = j = 0
    ca = cb = None  # current (possibly clipped) piece of each side
    while True:
        if ca is None:
            if i < len(pa):
                ca = pa[i]
                i += 1
            else:
                if cb is None and j >= len(pb):
                    return EQ
                eb = cb[2] if cb is not None else pb[j][2]
                return LT if eb > 0 else GT
        if cb is None:
            if j < len(pb):
                cb = pb[j]
                j += 1
            else:
                return GT if ca[2] > 0 else LT
        alo, ahi, ea = ca
        blo, bhi, eb = cb
        ka, kb = alo.key, blo.key
        if ka < kb:
            # a alone is supported on [alo, min(ahi, blo))
            return GT if ea > 0 else LT
        if kb < ka:
            return LT if eb > 0 else GT
        if ea != eb:
            return GT if ea > eb else LT
        # equal exponents from the common start; clip to the shorter piece
        kah, kbh = ahi.key, bhi.key
        if kah == kbh:
            ca = cb = None
        elif kah < kbh:
            ca, cb = None, (ahi, bhi, eb)
        else:
            ca, cb = (bhi, ahi, ea), None


def mono_max(a: Monomial, b: Monomial) -> Monomial:
    return b if mono_compare(a, b) == LT else a


def mono_min_support(a: Monomial) -> Ordinal:
    """The least level in the support."""
    if not a.pieces:
        raise IdentityMonomial("the identity monomial has empty support")
    return a.pieces[0][0]


def mono_split(a: Monomial, beta: Ordinal):
    """Factor a into (support below beta, support at or above beta)."""
    low, high = [], []
    for lo, hi, e in a.pieces:
        if ord_compare(hi, beta) != GT:
            low.append((lo, hi, e))
        elif ord_compare(lo, beta) != LT:
            high.append((lo, hi, e))
        else:
            low.append((lo, beta, e))
            high.append((beta, hi, e))
    return make_monomial(low), make_monomial(high)


def hyperlog(alpha: Ordinal) -> Monomial:
    """The level-alpha logarithm l[alpha] as a monomial."""
    return Monomial(((alpha, ord_add(alpha, ONE), Fraction(1)),))


def hyperlog_deriv(alpha: Ordinal) -> Monomial:
    """The exact derivative of l[alpha]: the product of l[b]^-1 for b < alpha."""
    if alpha == ZERO:
        return MONE
    return Monomial(((ZERO, alpha, Fraction(-1)),))


def hyperlog_dagger(alpha: Ordinal) -> Monomial:
    """The logarithmic derivative of l[alpha]: product of l[b]^-1 for b <= alpha."""
    return Monomial(((ZERO, ord_add(alpha, ONE), Fraction(-1)),))


def mono_shift(a: Monomial, gamma: Ordinal) -> Monomial:
    """Reindex every level b to gamma + b; an order-preserving embedding."""
    return make_monomial(
        [(ord_add(gamma, lo), ord_add(gamma, hi), e) for lo, hi, e in a.pieces]
    )


X = hyperlog(ZERO)
