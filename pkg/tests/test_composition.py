"""Composition with hyperlogarithms and with general series arguments."""
import random
from fractions import Fraction

import pytest

from hyperlog import (HNotSmaller, IrrationalConstantPower, Logarithmicity,
                      MONE, NotGreaterThanR, NotInvertible, OMEGA, ONE,
                      Precision, SupportBelowOmega, X, ZERO, compose,
                      compose_hyperlog, compose_hyperlog_omega, derive,
                      eq_exact, eq_to_bound, from_const, from_monomial,
                      hyperlog, hyperlog_deriv, invert, log_iter,
                      logarithmicity, make_monomial, mono_mul, mono_pow,
                      omega_pow, ord_add, ordinal, parse_ordinal,
                      recursion_check, ser_add, ser_log, ser_mul,
                      ser_mul_inverse, ser_scale, ser_sub, taylor_compose,
                      taylor_deform)
from hyperlog.composition import up3
from hyperlog.series import S_ONE, S_ZERO

from conftest import rand_composable, rand_series

X_SER = from_monomial(X)
L1 = from_monomial(hyperlog(ordinal(1)))
L2 = from_monomial(hyperlog(ordinal(2)))
LW = from_monomial(hyperlog(OMEGA))


# --- composition with hyperlogarithms -------------------------------------------

def test_hyperlog_composition_is_ordinal_addition():
    # l[gamma] o l[w^b] = l[w^b + gamma], exactly
    for beta, gamma in ((ZERO, ordinal(3)), (ONE, OMEGA),
                        (ONE, ord_add(OMEGA, ordinal(2))),
                        (ordinal(2), parse_ordinal("w^2+w*2+1"))):
        got = compose_hyperlog_omega(from_monomial(hyperlog(gamma)), beta)
        want = from_monomial(hyperlog(ord_add(omega_pow(beta), gamma)))
        assert eq_exact(got, want), (beta, gamma)


def test_hyperlog_fixed_point_shift():
    # l[w^(b+1)] o l[w^b] = l[w^(b+1)] - 1, a terminating expansion
    for beta in (ZERO, ONE, ordinal(2)):
        mu = omega_pow(ord_add(beta, ONE))
        got = compose_hyperlog_omega(from_monomial(hyperlog(mu)), beta)
        assert eq_exact(got, ser_sub(from_monomial(hyperlog(mu)), S_ONE)), beta


def test_hyperlog_composition_folds_normal_form():
    # composing with l[2] = two steps of l[1]
    got = compose_hyperlog(LW, ordinal(2))
    assert eq_exact(got, ser_sub(LW, from_const(2)))


def test_compose_matches_hyperlog_path():
    assert eq_exact(compose(LW, L1), ser_sub(LW, S_ONE))
    got = compose(LW, L2, Precision(6))
    assert eq_to_bound(got, ser_sub(LW, from_const(2)))


# --- logarithmicity ---------------------------------------------------------------

def test_logarithmicity_values():
    assert logarithmicity(X_SER).value == ZERO
    assert logarithmicity(LW).value == OMEGA
    assert logarithmicity(ser_add(L1, from_const(5))).value == ordinal(1)
    assert logarithmicity(from_const(3)).is_infinite
    assert logarithmicity(from_monomial(mono_pow(X, -1))).value == ZERO


def test_compose_requires_unbounded_argument():
    with pytest.raises(NotGreaterThanR):
        compose(X_SER, from_monomial(mono_pow(X, -1)))
    with pytest.raises(NotGreaterThanR):
        compose(X_SER, from_monomial(X, -1))


# --- the three-step shift inverse -----------------------------------------------

def test_up3_shifts_omega_levels():
    # the inverse of three logarithm steps sends l[w] to l[w] + 3
    got = up3(LW, Precision(6))
    assert eq_exact(got, ser_add(LW, from_const(3)))


def test_up3_rejects_finite_support():
    with pytest.raises(SupportBelowOmega):
        up3(X_SER)


# --- composition with general arguments -------------------------------------------

def test_compose_with_identity_and_constants():
    f = rand_series(random.Random(3))
    assert compose(f, X_SER) is f
    assert eq_exact(compose(from_const(7), L1), from_const(7))


def test_compose_monomial_towers():
    # x o l[1] = l[1]; x^2 o (x+1) = x^2 + 2x + 1
    assert eq_exact(compose(X_SER, L1), L1)
    sq = from_monomial(mono_pow(X, 2))
    got = compose(sq, ser_add(X_SER, S_ONE), Precision(6))
    assert eq_exact(got, ser_add(ser_add(sq, from_monomial(X, 2)), S_ONE))


def test_compose_infinite_piece_exactly():
    # the derivative monomial of l[w] composed with l[1] picks up a factor x
    d = from_monomial(hyperlog_deriv(OMEGA))
    got = compose(d, L1, Precision(6))
    want = from_monomial(mono_mul(hyperlog_deriv(OMEGA), X))
    assert eq_exact(got, want)
    assert eq_exact(compose(d, X_SER), d)


def test_chain_rule_samples(rng):
    prec = Precision(5)
    for _ in range(20):
        f = rand_series(rng, max_terms=2, max_level=3)
        g = rand_composable(rng)
        lhs = derive(compose(f, g, prec), prec)
        rhs = ser_mul(compose(derive(f, prec), g, prec), derive(g, prec))
        assert eq_to_bound(lhs, rhs)


def test_log_commutes_with_composition(rng):
    prec = Precision(5)
    for _ in range(15):
        g = rand_composable(rng)
        f = ser_add(from_monomial(X), rand_series(rng, max_terms=2, max_level=3))
        if f.terms[0][0] != X or f.terms[0][1] != 1:
            continue
        lhs = ser_log(compose(f, g, prec), prec)
        rhs = compose(ser_log(f, prec), g, prec)
        assert eq_to_bound(lhs, rhs)


def test_composition_associative(rng):
    prec = Precision(4)
    for _ in range(10):
        f = rand_series(rng, max_terms=2, max_level=2)
        g = rand_composable(rng, min_level=0, max_level=1)
        h = rand_composable(rng, min_level=0, max_level=1)
        lhs = compose(compose(f, g, prec), h, prec)
        rhs = compose(f, compose(g, h, prec), prec)
        assert eq_to_bound(lhs, rhs)


# --- Taylor composition -------------------------------------------------------------

def test_taylor_square_is_exact():
    sq = from_monomial(mono_pow(X, 2))
    got = taylor_compose(sq, X_SER, S_ONE, Precision(6))
    assert eq_exact(got, ser_add(ser_add(sq, from_monomial(X, 2)), S_ONE))


def test_taylor_zero_increment_is_composition():
    f = rand_series(random.Random(5), max_terms=2, max_level=3)
    assert eq_to_bound(taylor_compose(f, L1, S_ZERO, Precision(5)),
                       compose(f, L1, Precision(5)))


def test_taylor_increment_must_be_smaller():
    with pytest.raises(HNotSmaller):
        taylor_compose(X_SER, L1, X_SER)


def test_taylor_matches_composition(rng):
    prec = Precision(4)
    for k in range(8):
        f = rand_series(rng, max_terms=2, max_level=3)
        g = rand_composable(rng)
        if k % 4 == 0:
            h = ser_scale(ser_mul_inverse(g, prec), Fraction(1, 2))
        else:
            h = from_const(Fraction(rng.randint(1, 3), 2))
        lhs = taylor_compose(f, g, h, prec)
        rhs = compose(f, ser_add(g, h), prec)
        assert eq_to_bound(lhs, rhs)


# --- inversion ------------------------------------------------------------------------

def test_invert_identity_and_affine():
    assert eq_exact(invert(X_SER), X_SER)
    g = ser_add(X_SER, S_ONE)
    h = invert(g, Precision(6))
    assert eq_exact(h, ser_sub(X_SER, S_ONE))


def test_invert_catalan_pattern():
    # x + 1/x inverts to a series whose coefficients follow the Catalan numbers
    g = ser_add(X_SER, from_monomial(mono_pow(X, -1)))
    h = invert(g, Precision(6))
    coeffs = {exp: c for (m, c) in h.terms
              for exp in [m.pieces[0][2] if m.pieces else Fraction(0)]}
    assert coeffs[Fraction(1)] == 1
    assert coeffs[Fraction(-1)] == -1
    assert coeffs[Fraction(-3)] == -1
    assert coeffs[Fraction(-5)] == -2
    assert eq_to_bound(compose(g, h, Precision(6)), X_SER)
    assert eq_to_bound(compose(h, g, Precision(6)), X_SER)


def test_invert_scaling():
    # a*x^b inverts to a^(-1/b) * x^(1/b)
    g = from_monomial(mono_pow(X, 2), 4)
    h = invert(g, Precision(6))
    assert eq_exact(h, from_monomial(mono_pow(X, Fraction(1, 2)),
                                     Fraction(1, 2)))
    with pytest.raises(IrrationalConstantPower):
        invert(from_monomial(mono_pow(X, 2), 3))


def test_invert_requires_logarithmicity_zero():
    with pytest.raises(NotInvertible):
        invert(L1)


def test_invert_round_trips(rng):
    from conftest import rand_invertible
    prec = Precision(5)
    for _ in range(10):
        g = rand_invertible(rng)
        h = invert(g, prec)
        assert eq_to_bound(compose(g, h, prec), X_SER), g
        assert eq_to_bound(compose(h, g, prec), X_SER), g


# --- the integral recursion -------------------------------------------------------------

def test_recursion_matches_direct_composition():
    cases = [(OMEGA, X_SER), (OMEGA, L1),
             (OMEGA, ser_add(X_SER, S_ONE)),
             (omega_pow(ordinal(2)), L1)]
    for gamma, g in cases:
        lhs = recursion_check(gamma, g, Precision(6))
        rhs = compose(from_monomial(hyperlog(gamma)), g, Precision(6))
        assert eq_to_bound(lhs, rhs), (gamma, g)


def test_iterated_log_tower():
    g = ser_add(L1, from_const(1))
    assert log_iter(g, 0) is g
    first = log_iter(g, 1, Precision(5))
    assert first.terms[0][0] == hyperlog(ordinal(2))
