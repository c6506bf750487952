"""Exact ordinal arithmetic below epsilon_0 in Cantor normal form.

An ordinal is stored as a tuple of (exponent, coefficient) pairs with strictly
decreasing exponents and coefficients >= 1; the empty tuple is 0.  The form is
canonical, so structural equality is ordinal equality.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

LT, EQ, GT = -1, 0, 1


@dataclass(frozen=True)
class Ordinal:
    terms: tuple = ()  # ((exponent: Ordinal, coefficient: int), ...)

    # Equal ordinals are interned to a single instance so that the hot
    # comparison and cache paths can short-circuit on object identity.
    _interned = {}

    def __new__(cls, terms=()):
        self = cls._interned.get(terms)
        if self is None:
            self = object.__new__(cls)
            cls._interned[terms] = self
        return self

    def __lt__(self, other):
        return ord_compare(self, other) == LT

    def __le__(self, other):
        return ord_compare(self, other) != GT

    def __gt__(self, other):
        return ord_compare(self, other) == GT

    def __ge__(self, other):
        return ord_compare(self, other) != LT

    def __add__(self, other):
        return ord_add(self, other if isinstance(other, Ordinal) else ordinal(other))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return "Ordinal(%s)" % format_ordinal(self)

    def __str__(self):
        return format_ordinal(self)

    def __hash__(self):
        # hashing is hot; cache the recursive tuple hash per instance
        try:
            return self._hash
        except AttributeError:
            object.__setattr__(self, "_hash", hash(self.terms))
            return self._hash

    @property
    def key(self):
        """A plain tuple whose lexicographic order matches the ordinal order.

        Normal forms compare by leading exponent, then coefficient, then the
        remainder, with a missing term losing; that is exactly tuple order on
        ((exponent.key, coefficient), ...).
        """
        try:
            return self._key
        except AttributeError:
            object.__setattr__(
                self, "_key", tuple((e.key, c) for e, c in self.terms))
            return self._key


ZERO = Ordinal()
ONE = Ordinal(((ZERO, 1),))


def ordinal(n: int) -> Ordinal:
    """The finite ordinal n."""
    if n < 0:
        raise ValueError("ordinals are non-negative")
    if n == 0:
        return ZERO
    return Ordinal(((ZERO, n),))


@lru_cache(maxsize=None)
def ord_compare(a: Ordinal, b: Ordinal) -> int:
    """Total order on ordinals: LT, EQ or GT."""
    if a is b:
        return EQ
    for (ea, ca), (eb, cb) in zip(a.terms, b.terms):
        c = ord_compare(ea, eb)
        if c != EQ:
            return c
        if ca != cb:
            return LT if ca < cb else GT
    if len(a.terms) != len(b.terms):
        return LT if len(a.terms) < len(b.terms) else GT
    return EQ


def ord_max(a: Ordinal, b: Ordinal) -> Ordinal:
    return b if ord_compare(a, b) == LT else a


def ord_add(a: Ordinal, b: Ordinal) -> Ordinal:
    """Ordinal sum.

    Terms of a strictly below b's leading exponent are absorbed; a term of a
    equal to b's leading exponent merges coefficients; the rest concatenates.
    """
    if not b.terms:
        return a
    if not a.terms:
        return b
    lead = b.terms[0][0]
    keep = []
    tail = b.terms
    for exp, coeff in a.terms:
        c = ord_compare(exp, lead)
        if c == GT:
            keep.append((exp, coeff))
        elif c == EQ:
            tail = ((lead, coeff + b.terms[0][1]),) + b.terms[1:]
            break
        else:
            break
    return Ordinal(tuple(keep) + tuple(tail))


def omega_pow(b: Ordinal) -> Ordinal:
    """omega raised to b; omega_pow(0) is 1."""
    return Ordinal(((b, 1),))


OMEGA = omega_pow(ONE)


def monomial_cnf_list(gamma: Ordinal) -> list:
    """Exponents of gamma's normal form with coefficients expanded to repeats."""
    out = []
    for exp, coeff in gamma.terms:
        out.extend([exp] * coeff)
    return out


def is_successor(a: Ordinal) -> bool:
    return bool(a.terms) and a.terms[-1][0] == ZERO


def is_limit(a: Ordinal) -> bool:
    return bool(a.terms) and a.terms[-1][0] != ZERO


def predecessor(a: Ordinal) -> Ordinal:
    """The ordinal directly below a successor ordinal."""
    if not is_successor(a):
        raise ValueError("not a successor ordinal: %s" % a)
    exp, coeff = a.terms[-1]
    if coeff > 1:
        return Ordinal(a.terms[:-1] + ((exp, coeff - 1),))
    return Ordinal(a.terms[:-1])


def lambda_coeff(lam: Ordinal, nu: Ordinal) -> int:
    """Coefficient n_i of lam's normal form when nu is the power just above it.

    Returns n_i if nu equals omega^(b_i + 1) for a term omega^(b_i)*n_i of lam,
    and 0 for every other nu.
    """
    if len(nu.terms) != 1 or nu.terms[0][1] != 1:
        return 0
    exp = nu.terms[0][0]
    if not is_successor(exp):
        return 0
    beta = predecessor(exp)
    for e, c in lam.terms:
        if e == beta:
            return c
    return 0


def ordinal_to_int(a: Ordinal) -> int:
    """The natural number equal to a; fails on infinite ordinals."""
    if not a.terms:
        return 0
    if len(a.terms) == 1 and a.terms[0][0] == ZERO:
        return a.terms[0][1]
    raise ValueError("not a finite ordinal: %s" % a)


# --- text form: sums of w^e*n, e.g. "w^w*2+w*3+5" ---------------------------

def format_ordinal(a: Ordinal) -> str:
    if not a.terms:
        return "0"
    parts = []
    for exp, coeff in a.terms:
        if exp == ZERO:
            parts.append(str(coeff))
            continue
        if exp == ONE:
            body = "w"
        else:
            inner = format_ordinal(exp)
            body = "w^(%s)" % inner if ("+" in inner or "*" in inner) else "w^" + inner
        parts.append(body if coeff == 1 else "%s*%d" % (body, coeff))
    return "+".join(parts)


_ORD_TOKEN = re.compile(r"\s*(\d+|w|\^|\*|\+|\(|\))")


class _OrdParser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.tokens = []
        pos = 0
        while pos < len(text):
            m = _ORD_TOKEN.match(text, pos)
            if not m:
                raise SyntaxError("bad ordinal at column %d: %r" % (pos + 1, text))
            self.tokens.append((m.group(1), m.start(1)))
            pos = m.end()

    def peek(self):
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def take(self, tok=None):
        if self.pos >= len(self.tokens):
            raise SyntaxError("unexpected end of ordinal: %r" % self.text)
        got, col = self.tokens[self.pos]
        if tok is not None and got != tok:
            raise SyntaxError("expected %r at column %d in %r" % (tok, col + 1, self.text))
        self.pos += 1
        return got

    def parse_sum(self) -> Ordinal:
        total = self.parse_item()
        while self.peek() == "+":
            self.take("+")
            total = ord_add(total, self.parse_item())
        return total

    def parse_item(self) -> Ordinal:
        tok = self.peek()
        if tok == "w":
            base = self.parse_power()
            if self.peek() == "*":
                self.take("*")
                n = int(self.take())
                acc = ZERO
                for _ in range(n):
                    acc = ord_add(acc, base)
                return acc
            return base
        if tok is not None and tok.isdigit():
            return ordinal(int(self.take()))
        raise SyntaxError("expected ordinal term in %r" % self.text)

    def parse_power(self) -> Ordinal:
        self.take("w")
        if self.peek() != "^":
            return OMEGA
        self.take("^")
        tok = self.peek()
        if tok == "(":
            self.take("(")
            exp = self.parse_sum()
            self.take(")")
        elif tok == "w":
            exp = self.parse_power()
        elif tok is not None and tok.isdigit():
            exp = ordinal(int(self.take()))
        else:
            raise SyntaxError("expected exponent after ^ in %r" % self.text)
        return omega_pow(exp)


def parse_ordinal(text: str) -> Ordinal:
    """Parse the w^e*n sum grammar; non-canonical orderings are renormalized."""
    parser = _OrdParser(text)
    value = parser.parse_sum()
    if parser.pos != len(parser.tokens):
        tok, col = parser.tokens[parser.pos]
        raise SyntaxError("trailing %r at column %d in %r" % (tok, col + 1, text))
    return value
