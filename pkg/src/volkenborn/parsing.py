"""Text grammars for scalars and function descriptors.

Scalars (whitespace-insensitive)::

    scalar := ['-'] term (('+' | '-') term)*
    term   := rational ['*' int ['^' int]] | int '^' int
    rational := int ['/' int]

so ``1+1*3^2`` is 10 and ``1/2 - 3/4*5^3`` is 1/2 - 375/4.

Functions::

    expr   := term ('+' term)*
    term   := factor ('*' factor)*
    factor := '(' expr ')' | atom
    atom   := 'poly:' rational (',' rational)*
            | 'expw:' scalar-without-operators | 'expw:[' scalar ']'
            | 'ind:' int ',' int
            | rational
"""

from __future__ import annotations

import re
from fractions import Fraction

from .functions import BallIndicator, ExpWeight, Polynomial, Scale, UDFunction

__all__ = ["ParseError", "parse_scalar", "parse_function", "parse_pair", "FUNCTION_GRAMMAR"]

FUNCTION_GRAMMAR = __doc__


class ParseError(ValueError):
    pass


_RAT = r"\d+(?:/\d+)?"
_TERM = re.compile(rf"^(?:({_RAT})(?:\*(\d+)(?:\^(\d+))?)?|(\d+)\^(\d+))$")


def _rational(s: str) -> Fraction:
    try:
        r = Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {s!r}") from exc
    return r


def parse_scalar(text: str) -> Fraction:
    s = re.sub(r"\s+", "", text)
    if not s:
        raise ParseError("empty scalar")
    parts = re.findall(r"[+-]?[^+-]+", s)
    if "".join(parts) != s:
        raise ParseError(f"bad scalar {text!r}")
    total = Fraction(0)
    for part in parts:
        sign = -1 if part.startswith("-") else 1
        body = part.lstrip("+-")
        mt = _TERM.match(body)
        if not mt:
            raise ParseError(f"bad scalar term {part!r} in {text!r}")
        if mt.group(1) is not None:
            val = _rational(mt.group(1))
            if mt.group(2) is not None:
                val *= int(mt.group(2)) ** int(mt.group(3) or 1)
        else:
            val = Fraction(int(mt.group(4)) ** int(mt.group(5)))
        total += sign * val
    return total


def parse_pair(text: str, what: str = "pair") -> tuple[int, int]:
    try:
        a, b = (int(x) for x in text.split(","))
    except ValueError as exc:
        raise ParseError(f"{what} must be 'int,int', got {text!r}") from exc
    return a, b


class _FunctionParser:
    def __init__(self, text: str, p: int):
        self.s = re.sub(r"\s+", "", text)
        self.i = 0
        self.p = p

    def parse(self) -> UDFunction:
        if not self.s:
            raise ParseError("empty function descriptor")
        f = self.expr()
        if self.i != len(self.s):
            raise ParseError(f"unexpected {self.s[self.i:]!r} in function descriptor")
        return f

    def peek(self) -> str:
        return self.s[self.i] if self.i < len(self.s) else ""

    def expr(self) -> UDFunction:
        f = self.term()
        while self.peek() == "+":
            self.i += 1
            f = _as_function(f) + _as_function(self.term())
        return f

    def term(self) -> UDFunction:
        f = self.factor()
        while self.peek() == "*":
            self.i += 1
            g = self.factor()
            f = _combine(f, g)
        return f

    def factor(self):
        if self.peek() == "(":
            self.i += 1
            f = self.expr()
            if self.peek() != ")":
                raise ParseError("unbalanced parenthesis")
            self.i += 1
            return f
        return self.atom()

    def _token(self) -> str:
        j, depth = self.i, 0
        while j < len(self.s):
            c = self.s[j]
            if c == "[":
                depth += 1
            elif c == "]":
                depth -= 1
            elif depth == 0 and c in "+*)":
                break
            j += 1
        tok, self.i = self.s[self.i:j], j
        return tok

    def atom(self):
        tok = self._token()
        if tok.startswith("poly:"):
            body = tok[5:]
            if not body:
                raise ParseError("empty coefficient list")
            return Polynomial([_rational(c) for c in body.split(",")])
        if tok.startswith("expw:"):
            body = tok[5:]
            if body.startswith("[") and body.endswith("]"):
                body = body[1:-1]
            return ExpWeight(parse_scalar(body), self.p)
        if tok.startswith("ind:"):
            a, n = parse_pair(tok[4:], "ind")
            try:
                return BallIndicator(a, n, self.p)
            except ValueError as exc:
                raise ParseError(str(exc)) from exc
        if re.fullmatch(r"-?" + _RAT, tok):
            return _rational(tok)
        raise ParseError(f"unknown function atom {tok!r}")


def _as_function(f):
    return Polynomial([f]) if isinstance(f, Fraction) else f


def _combine(f, g):
    if isinstance(f, Fraction) and isinstance(g, Fraction):
        return f * g
    if isinstance(f, Fraction):
        return Scale(f, g)
    if isinstance(g, Fraction):
        return Scale(g, f)
    return f * g


def parse_function(text: str, p: int) -> UDFunction:
    f = _FunctionParser(text, p).parse()
    if isinstance(f, Fraction):
        return Polynomial([f])
    return f
