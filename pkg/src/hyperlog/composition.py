"""Composition of exact series with hyperlogarithms and with infinite series.

Right composition with a level-omega^b logarithm acts by a shift on the low
part of each monomial and by the exponential of the negated modified
derivation on the high part.  Composition with a general series above the
rationals splits every monomial at the first limit level, turns the low part
into a product of iterated logarithms, and lifts the high part through the
three-step shift inverse followed by a Taylor deformation.  Compositional
inversion peels a scaling term and a monomial factor, then finishes with a
tangent-to-identity fixed-point iteration.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .calculus import derive, derive_monomial, integrate
from .errors import (HNotSmaller, IrrationalConstantPower, NotGreaterThanR,
                     NotInvertible, SupportBelowOmega, ZeroSeries)
from .monomial import (MONE, Monomial, X, exponent_at, hyperlog,
                       hyperlog_deriv, make_monomial, mono_compare,
                       mono_min_support, mono_mul, mono_pow, mono_shift,
                       mono_split)
from .ordinal import (LT, OMEGA, ONE, Ordinal, ZERO, lambda_coeff,
                      monomial_cnf_list, omega_pow, ord_add, ord_compare,
                      ordinal, ordinal_to_int)
from .series import (DEFAULT_PRECISION, Precision, S_ONE, S_ZERO, Series,
                     _join_bounds, from_const, from_monomial, is_exact_zero,
                     make_series,
                     rational_pow, ser_add, ser_dominant, ser_log, ser_mul,
                     ser_mul_mono, ser_neg, ser_pow, ser_scale, ser_sub,
                     with_bound)

X_SERIES = from_monomial(X)


@dataclass(frozen=True)
class Logarithmicity:
    value: Ordinal | None = None  # None marks the infinite case

    @property
    def is_infinite(self):
        return self.value is None


def logarithmicity(g: Series) -> Logarithmicity:
    """Least support level of the dominant monomial; infinite when it is 1."""
    if is_exact_zero(g):
        raise ZeroSeries("logarithmicity of the zero series is undefined")
    m, _ = ser_dominant(g)
    if m == MONE:
        return Logarithmicity(None)
    return Logarithmicity(mono_min_support(m))


def _dominant_monomial_or_bound(t: Series) -> Monomial | None:
    if t.terms:
        return t.terms[0][0]
    return t.bound


def _operator_sum(seed: Series, step, prec: Precision) -> Series:
    """Sum seed, step(seed), step(step(seed)), ... with truncation bound.

    Consecutive terms have strictly decreasing dominant monomials for every
    operator used here, so the dominant of the last emitted term is a sound
    strict bound for everything omitted.
    """
    acc = seed
    t = seed
    for _ in range(1, prec.budget):
        t = step(t)
        if is_exact_zero(t):
            return acc
        acc = ser_add(acc, t)
        if not t.terms:
            return with_bound(acc, t.bound)
    return with_bound(acc, _dominant_monomial_or_bound(t))


def _mod_derive_high(t: Series, mu: Ordinal, prec: Precision) -> Series:
    """Modified derivation on series supported at or above mu.

    On that subspace the operator has infinitesimal support, so content hidden
    below the input bound stays hidden below the same bound.
    """
    inv = mono_pow(hyperlog_deriv(mu), -1)
    terms = []
    bound = t.bound
    for m, c in t.terms:
        d = derive_monomial(m, prec)
        terms.extend((mono_mul(dm, inv), dc * c) for dm, dc in d.terms)
        if d.bound is not None:
            bound = _join_bounds(bound, mono_mul(d.bound, inv))
    return make_series(terms, bound)


def _exp_neg_mod_derive(m: Monomial, mu: Ordinal, prec: Precision) -> Series:
    """Apply the exponential of the negated modified derivation to a monomial."""
    counter = [0]

    def step(t):
        counter[0] += 1
        return ser_scale(_mod_derive_high(t, mu, prec), Fraction(-1, counter[0]))

    return _operator_sum(from_monomial(m), step, prec)


def compose_hyperlog_omega(f: Series, beta: Ordinal,
                           prec: Precision = DEFAULT_PRECISION) -> Series:
    """Right-compose f with the level-omega^beta logarithm."""
    mu = omega_pow(ord_add(beta, ONE))
    shift = omega_pow(beta)
    out = S_ZERO
    for m, c in f.terms:
        low, high = mono_split(m, mu)
        part = from_monomial(mono_shift(low, shift), c)
        if high != MONE:
            part = ser_mul(part, _exp_neg_mod_derive(high, mu, prec))
        out = ser_add(out, part)
    if f.bound is not None:
        blow, bhigh = mono_split(f.bound, mu)
        out = with_bound(out, mono_mul(mono_shift(blow, shift), bhigh))
    return out


def compose_hyperlog(f: Series, gamma: Ordinal,
                     prec: Precision = DEFAULT_PRECISION) -> Series:
    """Right-compose f with the level-gamma logarithm via the normal form."""
    for beta in reversed(monomial_cnf_list(gamma)):
        f = compose_hyperlog_omega(f, beta, prec)
    return f


def _check_above_rationals(g: Series):
    m, c = ser_dominant(g)
    if mono_compare(m, MONE) != 1 or c < 0:
        raise NotGreaterThanR("composition argument must exceed every constant")


class LogTower:
    """Memoized iterated logarithms of a fixed series above the rationals."""

    def __init__(self, g: Series, prec: Precision = DEFAULT_PRECISION):
        _check_above_rationals(g)
        self.prec = prec
        self.levels = [g]
        self.lam = logarithmicity(g).value  # finite since the dominant exceeds 1
        self._pows = {}
        self._monos = {}
        self._doms = {}

    def log(self, n: int) -> Series:
        while len(self.levels) <= n:
            self.levels.append(ser_log(self.levels[-1], self.prec))
        return self.levels[n]

    def log_pow(self, n: int, r) -> Series:
        key = (n, r)
        if key not in self._pows:
            self._pows[key] = ser_pow(self.log(n), r, self.prec)
        return self._pows[key]


def log_iter(g: Series, n: int, prec: Precision = DEFAULT_PRECISION) -> Series:
    """The n-fold logarithm of g."""
    return LogTower(g, prec).log(n)


def _compose_monomial_tower(m: Monomial, tower: LogTower,
                            prec: Precision) -> Series:
    """Compose a monomial with support below the first limit level."""
    if m == MONE:
        return S_ONE
    if m in tower._monos:
        return tower._monos[m]
    result = S_ONE
    lam = tower.lam
    for lo, hi, r in m.pieces:
        if ord_compare(hi, OMEGA) == 1:
            raise ValueError("monomial support reaches beyond the finite levels")
        start = ordinal_to_int(lo)
        if hi != OMEGA:
            stop = ordinal_to_int(hi)
            for n in range(start, stop):
                result = ser_mul(result, tower.log_pow(n, r))
            continue
        # infinite tail: explicit factors, then the exact remainder monomial
        cut = start + prec.budget
        for n in range(start, cut):
            result = ser_mul(result, tower.log_pow(n, r))
        tail = make_monomial([(ord_add(lam, ordinal(cut)),
                               ord_add(lam, OMEGA), r)])
        eps = ser_sub(tower.log(cut), from_monomial(hyperlog(ord_add(lam, ordinal(cut)))))
        if is_exact_zero(eps):
            factor = from_monomial(tail)
        else:
            dm = _dominant_monomial_or_bound(eps)
            factor = Series(((tail, Fraction(1)),),
                            mono_mul(tail, mono_mul(dm, X)))
        result = ser_mul(result, factor)
    tower._monos[m] = result
    return result


def compose_monomial(m: Monomial, g: Series,
                     prec: Precision = DEFAULT_PRECISION) -> Series:
    """Compose a finite-level monomial with a series above the rationals."""
    return _compose_monomial_tower(m, LogTower(g, prec), prec)


def up3(f: Series, prec: Precision = DEFAULT_PRECISION) -> Series:
    """Invert three right-compositions with the first-level logarithm.

    Requires every term's support to start at or above the first limit level.
    """
    for m, _ in f.terms:
        if m != MONE and ord_compare(mono_min_support(m), OMEGA) == LT:
            raise SupportBelowOmega("support below the first limit level: %r" % m)

    def step(t):
        return ser_sub(t, compose_hyperlog(t, ordinal(3), prec))

    return _operator_sum(f, step, prec)


def _taylor_deform_tower(phi: Series, tower: LogTower,
                         prec: Precision) -> Series:
    """Taylor-deform phi around the exact logarithm at the tower's level."""
    level = ord_add(tower.lam, ordinal(3))
    eps = ser_sub(tower.log(3), from_monomial(hyperlog(level)))
    if is_exact_zero(eps):
        return compose_hyperlog(phi, level, prec)
    acc = compose_hyperlog(phi, level, prec)
    dn = phi
    epow = S_ONE
    last = acc
    for n in range(1, prec.budget):
        dn = derive(dn, prec)
        epow = ser_mul(epow, eps)
        t = ser_scale(ser_mul(compose_hyperlog(dn, level, prec), epow),
                      Fraction(1, _factorial(n)))
        if is_exact_zero(t):
            return acc
        acc = ser_add(acc, t)
        last = t
        if not t.terms:
            return with_bound(acc, t.bound)
    return with_bound(acc, _dominant_monomial_or_bound(last))


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def taylor_deform(phi: Series, g: Series,
                  prec: Precision = DEFAULT_PRECISION) -> Series:
    """Compose phi with the third iterated logarithm of g, by deformation."""
    return _taylor_deform_tower(phi, LogTower(g, prec), prec)


def _compose_big_tower(f: Series, tower: LogTower, prec: Precision) -> Series:
    """Compose a series supported at or above the first limit level with g."""
    return _taylor_deform_tower(up3(f, prec), tower, prec)


def _dominant_image(m: Monomial, tower: LogTower) -> Monomial:
    """Dominant monomial of the composition of m with the tower's base.

    The dominant of a product is the product of the dominants, so this is
    exact and much cheaper than composing.
    """
    if m in tower._doms:
        return tower._doms[m]
    out = MONE
    lam = tower.lam
    for lo, hi, r in m.pieces:
        start = ordinal_to_int(lo)
        if hi == OMEGA:
            cut = start + tower.prec.budget
            stop = cut
            out = mono_mul(out, make_monomial([(ord_add(lam, ordinal(cut)),
                                                ord_add(lam, OMEGA), r)]))
        else:
            stop = ordinal_to_int(hi)
        for n in range(start, stop):
            out = mono_mul(out, mono_pow(ser_dominant(tower.log(n))[0], r))
    tower._doms[m] = out
    return out


def compose(f: Series, g: Series,
            prec: Precision = DEFAULT_PRECISION) -> Series:
    """Full composition f after g for g above the rationals."""
    _check_above_rationals(g)
    if g == X_SERIES:
        return f
    return _compose_tower(f, LogTower(g, prec), prec)


def _compose_tower(f: Series, tower: LogTower, prec: Precision) -> Series:
    groups = {}
    for m, c in f.terms:
        low, high = mono_split(m, OMEGA)
        groups.setdefault(low, []).append((high, c))
    out = S_ZERO
    for low, high_terms in groups.items():
        big = make_series(high_terms)
        if len(big.terms) == 1 and big.terms[0][0] == MONE:
            bigval = from_const(big.terms[0][1])
        else:
            bigval = _compose_big_tower(big, tower, prec)
        lowval = _compose_monomial_tower(low, tower, prec)
        out = ser_add(out, ser_mul(bigval, lowval))
    if f.bound is not None:
        image = _compose_tower(from_monomial(f.bound), tower, prec)
        out = with_bound(out, _dominant_monomial_or_bound(image))
    return out


def taylor_compose(f: Series, g: Series, h: Series,
                   prec: Precision = DEFAULT_PRECISION) -> Series:
    """Compose f with g + h through the Taylor sum around g; needs h below g."""
    if is_exact_zero(h):
        return compose(f, g, prec)
    mg, _ = ser_dominant(g)
    if h.terms:
        if mono_compare(h.terms[0][0], mg) != LT:
            raise HNotSmaller("increment is not strictly below the base")
    elif h.bound is not None and mono_compare(h.bound, mg) == 1:
        raise HNotSmaller("increment bound is not below the base")
    tower = LogTower(g, prec)
    acc = _compose_tower(f, tower, prec)
    dn = f
    hpow = S_ONE
    last = acc
    pre = None
    for n in range(1, prec.budget):
        dn = derive(dn, prec)
        if is_exact_zero(dn):
            return acc
        hpow = ser_mul(hpow, h)
        pruned = False
        if pre is not None and len(dn.terms) > 8 and hpow.terms:
            # drop derivative terms whose whole contribution falls below the
            # predicted final bound; the bound attached to t covers them
            floor = mono_mul(pre, mono_pow(hpow.terms[0][0], -1))
            kept = tuple((m, c) for m, c in dn.terms
                         if mono_compare(_dominant_image(m, tower), floor) != LT)
            pruned = len(kept) < len(dn.terms)
            dn = Series(kept, dn.bound)
            if not kept and dn.bound is None:
                return with_bound(acc, pre)
        t = ser_scale(ser_mul(_compose_tower(dn, tower, prec), hpow),
                      Fraction(1, _factorial(n)))
        if pruned or (pre is not None and len(t.terms) > 8):
            t = with_bound(t, pre)
        if is_exact_zero(t):
            return acc
        if pre is None and t.terms and acc.terms:
            # geometric decay of the correction dominants predicts where the
            # final truncation lands
            ratio = mono_mul(t.terms[0][0], mono_pow(acc.terms[0][0], -1))
            pre = mono_mul(acc.terms[0][0], mono_pow(ratio, prec.budget))
        acc = ser_add(acc, t)
        last = t
        if not t.terms:
            return with_bound(acc, t.bound)
    return with_bound(acc, _dominant_monomial_or_bound(last))


def _taylor_at_identity(w: Series, e: Series, prec: Precision) -> Series:
    """Evaluate w at x + e for e strictly below x, by the Taylor sum."""
    acc = w
    dn = w
    epow = S_ONE
    last = w
    for n in range(1, prec.budget):
        dn = derive(dn, prec)
        if is_exact_zero(dn):
            return acc
        epow = ser_mul(epow, e)
        if is_exact_zero(epow):
            return acc
        t = ser_scale(ser_mul(dn, epow), Fraction(1, _factorial(n)))
        acc = ser_add(acc, t)
        last = t
        if not t.terms:
            return with_bound(acc, t.bound)
    return with_bound(acc, _dominant_monomial_or_bound(last))


def invert(g: Series, prec: Precision = DEFAULT_PRECISION) -> Series:
    """Compositional inverse of g; needs logarithmicity zero."""
    _check_above_rationals(g)
    lam = logarithmicity(g)
    if lam.is_infinite or lam.value != ZERO:
        raise NotInvertible("logarithmicity must be zero, got %s" % (lam.value,))
    m0, a = ser_dominant(g)
    b = exponent_at(m0, ZERO)
    s = rational_pow(a, Fraction(-1) / b) if a != 1 else Fraction(1)
    if s is None:
        raise IrrationalConstantPower("leading coefficient %s has no rational root" % a)
    t = Fraction(1) / b
    g1 = ser_pow(ser_scale(g, Fraction(1) / a), Fraction(1) / b, prec)

    # peel the non-x factor of the leading monomial
    m1 = mono_mul(ser_dominant(g1)[0], mono_pow(X, -1))
    if m1 != MONE:
        q = from_monomial(mono_mul(X, mono_pow(m1, -1)))
        G = compose(g1, q, prec)
    else:
        q = None
        G = g1

    # G is x + w with w strictly below x; solve H = x - w(H) by iteration
    w = ser_sub(G, X_SERIES)
    e = S_ZERO
    delta = None
    for _ in range(prec.budget):
        e_new = ser_neg(_taylor_at_identity(w, e, prec))
        delta = ser_sub(e_new, e)
        e = e_new
        if is_exact_zero(delta):
            delta = None
            break
    H = ser_add(X_SERIES, e)
    if delta is not None:
        H = with_bound(H, _dominant_monomial_or_bound(delta))
    out = compose(q, H, prec) if q is not None else H
    if s != 1 or t != 1:
        out = compose(out, from_monomial(mono_pow(X, t), s), prec)
    return out


def recursion_check(gamma: Ordinal, g: Series,
                    prec: Precision = DEFAULT_PRECISION) -> Series:
    """Independent evaluation of the level-gamma composition via integration."""
    inner = ser_mul(compose(from_monomial(hyperlog_deriv(gamma)), g, prec),
                    derive(g, prec))
    lam = logarithmicity(g)
    shift = lambda_coeff(lam.value, gamma) if not lam.is_infinite else 0
    return ser_sub(integrate(inner, prec), from_const(shift))
