"""Expression parser, evaluator, REPL and command line front end.

Grammar: rationals, the atoms x and l[<ordinal>], prod(l[a..b]) interval
monomials, O(e) truncation bounds, operators + - * / ^ with standard
precedence, and the function forms D, int, log, comp, inv, taylor, lambda,
dagger, each accepting an optional @N precision suffix.
"""
from __future__ import annotations

import argparse
import re
import sys
from dataclasses import dataclass
from fractions import Fraction

from .calculus import dagger as ser_dagger
from .calculus import derive, integrate
from .composition import (Logarithmicity, compose, invert, logarithmicity,
                          taylor_compose)
from .errors import DomainError
from .monomial import MONE, hyperlog, make_monomial
from .ordinal import OMEGA, ONE, Ordinal, ZERO, omega_pow, ord_add, ordinal
from .render import format_value
from .series import (DEFAULT_PRECISION, Precision, S_ZERO, Series, from_const,
                     from_monomial, is_exact_zero, rational_pow, ser_add,
                     ser_log, ser_mul, ser_mul_inverse, ser_neg, ser_pow,
                     ser_sub, with_bound)

_TOKEN = re.compile(r"[ \t]*(\d+|[A-Za-z_]+|\.\.|[-+*/^()\[\],@])")


class CliSyntaxError(SyntaxError):
    pass


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise CliSyntaxError("unexpected character %r at col %d"
                                 % (text[pos], pos + 1))
        tokens.append((m.group(1), m.start(1) + 1))
        pos = m.end()
    return tokens


# --- abstract syntax ---------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Atom:
    monomial: object  # Monomial


@dataclass(frozen=True)
class BigO:
    arg: object


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple
    prec: int | None = None


FUNCTIONS = {"D": 1, "int": 1, "log": 1, "comp": 2, "inv": 1,
             "taylor": 3, "lambda": 1, "dagger": 1}


class Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def error(self, msg):
        col = self.tokens[self.pos][1] if self.pos < len(self.tokens) \
            else len(self.text) + 1
        raise CliSyntaxError("%s at col %d" % (msg, col))

    def peek(self):
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def take(self, tok=None):
        if self.pos >= len(self.tokens):
            raise CliSyntaxError("unexpected end of input at col %d"
                                 % (len(self.text) + 1))
        got, _ = self.tokens[self.pos]
        if tok is not None and got != tok:
            self.error("expected %r, found %r" % (tok, got))
        self.pos += 1
        return got

    def parse(self):
        node = self.expr()
        if self.pos != len(self.tokens):
            self.error("trailing input %r" % self.peek())
        return node

    def expr(self):
        node = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.power()
        while self.peek() in ("*", "/"):
            op = self.take()
            node = BinOp(op, node, self.power())
        return node

    def power(self):
        node = self.unary()
        while self.peek() == "^":
            self.take("^")
            node = BinOp("^", node, self.unary())
        return node

    def unary(self):
        # unary minus binds looser than ^, so -x^2 means -(x^2)
        if self.peek() == "-":
            self.take("-")
            return Neg(self.power())
        return self.atom()

    def atom(self):
        tok = self.peek()
        if tok is None:
            raise CliSyntaxError("unexpected end of input at col %d"
                                 % (len(self.text) + 1))
        if tok.isdigit():
            return Num(Fraction(int(self.take())))
        if tok == "(":
            self.take("(")
            node = self.expr()
            self.take(")")
            return node
        if tok == "x":
            self.take()
            return Atom(hyperlog(ZERO))
        if tok == "l":
            self.take()
            self.take("[")
            level = self.ordinal_sum()
            self.take("]")
            return Atom(hyperlog(level))
        if tok == "prod":
            self.take()
            self.take("(")
            self.take("l")
            self.take("[")
            lo = self.ordinal_sum()
            self.take("..")
            hi = self.ordinal_sum()
            self.take("]")
            self.take(")")
            return Atom(make_monomial([(lo, hi, Fraction(1))]))
        if tok == "O":
            self.take()
            self.take("(")
            node = self.expr()
            self.take(")")
            return BigO(node)
        if tok in FUNCTIONS:
            name = self.take()
            prec = None
            if self.peek() == "@":
                self.take("@")
                digits = self.take()
                if not digits.isdigit():
                    self.error("expected precision after @")
                prec = int(digits)
            self.take("(")
            args = [self.expr()]
            while self.peek() == ",":
                self.take(",")
                args.append(self.expr())
            self.take(")")
            if len(args) != FUNCTIONS[name]:
                self.error("%s takes %d argument(s), got %d"
                           % (name, FUNCTIONS[name], len(args)))
            return Call(name, tuple(args), prec)
        self.error("unexpected token %r" % tok)

    # ordinal sub-grammar: sums of w^e*n and naturals
    def ordinal_sum(self) -> Ordinal:
        total = self.ordinal_item()
        while self.peek() == "+":
            self.take("+")
            total = ord_add(total, self.ordinal_item())
        return total

    def ordinal_item(self) -> Ordinal:
        tok = self.peek()
        if tok is not None and tok.isdigit():
            return ordinal(int(self.take()))
        if tok == "w":
            base = self.ordinal_power()
            if self.peek() == "*":
                self.take("*")
                digits = self.take()
                if not digits.isdigit():
                    self.error("expected a coefficient after *")
                total = ZERO
                for _ in range(int(digits)):
                    total = ord_add(total, base)
                return total
            return base
        self.error("expected an ordinal")

    def ordinal_power(self) -> Ordinal:
        self.take("w")
        if self.peek() != "^":
            return OMEGA
        self.take("^")
        tok = self.peek()
        if tok == "(":
            self.take("(")
            exp = self.ordinal_sum()
            self.take(")")
        elif tok == "w":
            exp = self.ordinal_power()
        elif tok is not None and tok.isdigit():
            exp = ordinal(int(self.take()))
        else:
            self.error("expected an exponent after ^")
        return omega_pow(exp)


def parse(text: str):
    """Parse an expression into its syntax tree."""
    return Parser(text).parse()


# --- evaluation --------------------------------------------------------------

def _as_series(v) -> Series:
    if isinstance(v, Series):
        return v
    raise DomainError("expected a series value, got %r" % (v,))


def _as_const(v) -> Fraction:
    v = _as_series(v)
    if is_exact_zero(v):
        return Fraction(0)
    if v.bound is None and len(v.terms) == 1 and v.terms[0][0] == MONE:
        return v.terms[0][1]
    raise DomainError("exponent must be an exact rational constant")


def evaluate(node, prec: Precision = DEFAULT_PRECISION):
    """Evaluate a syntax tree to a Series or Logarithmicity."""
    if isinstance(node, Num):
        return from_const(node.value)
    if isinstance(node, Atom):
        return from_monomial(node.monomial)
    if isinstance(node, Neg):
        return ser_neg(_as_series(evaluate(node.arg, prec)))
    if isinstance(node, BigO):
        v = _as_series(evaluate(node.arg, prec))
        if not v.terms:
            raise DomainError("O(...) needs a value with a visible dominant term")
        return with_bound(S_ZERO, v.terms[0][0])
    if isinstance(node, BinOp):
        left = _as_series(evaluate(node.left, prec))
        if node.op == "^":
            t = _as_const(evaluate(node.right, prec))
            const = _as_const_or_none(left)
            if const is not None:
                return from_const(_const_pow(const, t))
            return ser_pow(left, t, prec)
        right = _as_series(evaluate(node.right, prec))
        if node.op == "+":
            return ser_add(left, right)
        if node.op == "-":
            return ser_sub(left, right)
        if node.op == "*":
            return ser_mul(left, right)
        if node.op == "/":
            return ser_mul(left, ser_mul_inverse(right, prec))
        raise AssertionError(node.op)
    if isinstance(node, Call):
        local = Precision(node.prec) if node.prec is not None else prec
        args = [evaluate(a, prec) for a in node.args]
        if node.name == "D":
            return derive(_as_series(args[0]), local)
        if node.name == "int":
            return integrate(_as_series(args[0]), local)
        if node.name == "log":
            return ser_log(_as_series(args[0]), local)
        if node.name == "dagger":
            return ser_dagger(_as_series(args[0]), local)
        if node.name == "inv":
            return invert(_as_series(args[0]), local)
        if node.name == "lambda":
            return logarithmicity(_as_series(args[0]))
        if node.name == "comp":
            return compose(_as_series(args[0]), _as_series(args[1]), local)
        if node.name == "taylor":
            return taylor_compose(_as_series(args[0]), _as_series(args[1]),
                                  _as_series(args[2]), local)
        raise AssertionError(node.name)
    raise AssertionError(node)


def _as_const_or_none(v: Series):
    if is_exact_zero(v):
        return Fraction(0)
    if v.bound is None and len(v.terms) == 1 and v.terms[0][0] == MONE:
        return v.terms[0][1]
    return None


def _const_pow(c: Fraction, t: Fraction) -> Fraction:
    if t.denominator == 1:
        if c == 0 and t < 0:
            raise DomainError("division by zero")
        return c ** t
    from .errors import IrrationalConstantPower, NotPositive
    if c <= 0:
        raise NotPositive("cannot take a fractional power of %s" % c)
    out = rational_pow(c, t)
    if out is None:
        raise IrrationalConstantPower("%s**%s is irrational" % (c, t))
    return out


def eval_text(text: str, prec: Precision = DEFAULT_PRECISION):
    return evaluate(parse(text), prec)


# --- front end ---------------------------------------------------------------

def _run_line(line: str, prec: Precision, mode: str, out) -> bool:
    try:
        value = eval_text(line, prec)
    except (DomainError, CliSyntaxError, SyntaxError) as err:
        print("error: %s: %s" % (type(err).__name__, err), file=out)
        return False
    print(format_value(value, mode), file=out)
    return True


def repl(prec: Precision, mode: str):
    while True:
        try:
            line = input("> ")
        except EOFError:
            return 0
        except KeyboardInterrupt:
            return 0
        if not line.strip():
            continue
        _run_line(line, prec, mode, sys.stdout)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="hyperlog",
        description="exact arithmetic, calculus and composition for "
                    "logarithmic series")
    parser.add_argument("--prec", type=int, default=8, metavar="N",
                        help="term budget for truncating expansions")
    parser.add_argument("--format", choices=("text", "latex", "json"),
                        default="text")
    parser.add_argument("--eval", metavar="EXPR", help="evaluate one expression")
    parser.add_argument("--script", metavar="FILE",
                        help="evaluate a file of expressions, one per line")
    args = parser.parse_args(argv)
    prec = Precision(args.prec)
    if args.eval is not None:
        ok = _run_line(args.eval, prec, args.format, sys.stdout)
        return 0 if ok else 1
    if args.script is not None:
        ok = True
        with open(args.script, "r", encoding="utf-8") as handle:
            for raw in handle:
                line = raw.strip()
                if not line or line.startswith("#"):
                    continue
                ok = _run_line(line, prec, args.format, sys.stdout) and ok
        return 0 if ok else 1
    return repl(prec, args.format)


if __name__ == "__main__":
    sys.exit(main())
