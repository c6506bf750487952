"""Shared strategies and seeded random generators for the test suite."""
import random
import sys
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

import pytest
from hypothesis import strategies as st

from hyperlog import (Precision, hyperlog, make_monomial, make_series,
                      mono_pow, omega_pow, ord_add, ordinal, from_monomial,
                      from_const, ser_add, ser_scale, X, ZERO, ONE, OMEGA)


# --- ordinals ----------------------------------------------------------------

def small_ordinals(max_coeff=4):
    """Hypothesis strategy for ordinals below w^w with small coefficients."""
    coeffs = st.lists(st.integers(min_value=0, max_value=max_coeff),
                      min_size=0, max_size=4)

    def build(cs):
        total = ZERO
        for power, n in enumerate(reversed(cs)):
            term = omega_pow(ordinal(power))
            for _ in range(n):
                total = ord_add(total, term)
        return total

    return coeffs.map(build)


def rand_ordinal(rng, max_power=2, max_coeff=3):
    """A random ordinal below w^(max_power+1)."""
    total = ZERO
    for power in range(max_power, -1, -1):
        n = rng.randint(0, max_coeff)
        term = omega_pow(ordinal(power))
        for _ in range(n):
            total = ord_add(total, term)
    return total


# --- fractions, monomials, series --------------------------------------------

def rand_fraction(rng, zero_ok=False):
    num = rng.randint(-4, 4)
    while num == 0 and not zero_ok:
        num = rng.randint(-4, 4)
    return Fraction(num, rng.randint(1, 3))


def rand_finite_monomial(rng, max_level=4, max_pieces=2):
    """A monomial supported on finitely many finite levels."""
    pieces = []
    level = rng.randint(0, max_level - 1)
    for _ in range(rng.randint(0, max_pieces)):
        width = rng.randint(1, 2)
        if level + width > max_level + 2:
            break
        pieces.append((ordinal(level), ordinal(level + width),
                       rand_fraction(rng)))
        level += width + rng.randint(0, 1)
    return make_monomial(pieces)


def rand_series(rng, max_terms=3, max_level=4):
    """A finite-level series: a short sum of random monomial terms."""
    out = from_const(0)
    for _ in range(rng.randint(1, max_terms)):
        out = ser_add(out, from_monomial(rand_finite_monomial(rng, max_level),
                                         rand_fraction(rng)))
    return out


def rand_composable(rng, min_level=0, max_level=2, tail_terms=2):
    """A series g above the rationals whose iterated logs stay monic.

    Shape: the level-m logarithm plus strictly smaller terms, so every
    iterated log has leading coefficient 1.
    """
    m = rng.randint(min_level, max_level)
    lead = hyperlog(ordinal(m))
    g = from_monomial(lead)
    for _ in range(rng.randint(0, tail_terms)):
        small = rng.choice([
            make_monomial([]),                              # a constant term
            mono_pow(lead, Fraction(-rng.randint(1, 2))),   # below 1
            mono_pow(hyperlog(ordinal(m + 1)),
                     Fraction(rng.randint(1, 2))),          # between lead and 1
        ])
        if small == lead:
            continue
        g = ser_add(g, from_monomial(small, rand_fraction(rng)))
    return g


def rand_invertible(rng, tail_terms=2):
    """A series a*x^b + smaller with rational-peelable leading term.

    Tails touching the logarithm levels are only generated in the monic
    degree-one case: undoing any other scaling would need an irrational
    constant inside an iterated logarithm.
    """
    a = Fraction(rng.choice([1, 1, 4, Fraction(1, 9)]))
    b = rng.choice([1, 1, 1, 2])
    lead = mono_pow(X, b)
    g = from_monomial(lead, a)
    smalls = [make_monomial([]), mono_pow(X, b - rng.randint(1, 2))]
    if a == 1 and b == 1:
        smalls.append(make_monomial([(ZERO, ordinal(1), Fraction(b)),
                                     (ordinal(1), ordinal(2),
                                      Fraction(-rng.randint(1, 2)))]))
    for _ in range(rng.randint(0, tail_terms)):
        small = rng.choice(smalls)
        if small == lead:
            continue
        g = ser_add(g, from_monomial(small, rand_fraction(rng)))
    return g


@pytest.fixture
def rng():
    return random.Random(20260823)
