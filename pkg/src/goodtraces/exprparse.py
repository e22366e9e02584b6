"""Parser for the symbolic scalar strings used in input documents.

Grammar (whitespace-insensitive):

    expr   := term (('+'|'-') term)*
    term   := unary ('*' unary)*
    unary  := '-' unary | atom
    atom   := factor ('^' uint)?
    factor := rational | name | '(' expr ')'

Rationals are written ``p`` or ``p/q``; every other token must be a declared
symbol (``theta`` or a transcendental name).
"""

from __future__ import annotations

from fractions import Fraction

from .domain import DomainElement, DomainSpec
from .errors import NonPolynomial, UnknownSymbol


class _Tok:
    def __init__(self, kind, value):
        self.kind, self.value = kind, value

    def __repr__(self):
        return f"{self.kind}:{self.value}"


def _tokenize(text: str):
    out = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            out.append(_Tok("num", int(text[i:j])))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] in "_'"):
                j += 1
            out.append(_Tok("name", text[i:j]))
            i = j
            continue
        if ch in "+-*/^()":
            out.append(_Tok(ch, ch))
            i += 1
            continue
        raise NonPolynomial(f"unexpected character {ch!r} in {text!r}")
    out.append(_Tok("end", None))
    return out


class _Parser:
    def __init__(self, tokens, resolve):
        self.toks = tokens
        self.pos = 0
        self.resolve = resolve

    def peek(self):
        return self.toks[self.pos]

    def take(self, kind=None):
        tok = self.toks[self.pos]
        if kind and tok.kind != kind:
            raise NonPolynomial(f"expected {kind}, found {tok.kind}")
        self.pos += 1
        return tok

    def expr(self):
        node = self.term()
        while self.peek().kind in "+-":
            op = self.take().kind
            rhs = self.term()
            node = node + rhs if op == "+" else node - rhs
        return node

    def term(self):
        node = self.unary()
        while self.peek().kind == "*":
            self.take()
            node = node * self.unary()
        return node

    def unary(self):
        if self.peek().kind == "-":
            self.take()
            return -self.unary()
        return self.atom()

    def atom(self):
        node = self.factor()
        if self.peek().kind == "^":
            self.take()
            tok = self.take("num")
            node = node**tok.value
        return node

    def factor(self):
        tok = self.peek()
        if tok.kind == "num":
            self.take()
            value = Fraction(tok.value)
            if self.peek().kind == "/":
                self.take()
                den = self.take("num").value
                if den == 0:
                    raise NonPolynomial("division by zero")
                value /= den
            return self.resolve_rational(value)
        if tok.kind == "name":
            self.take()
            return self.resolve(tok.value)
        if tok.kind == "(":
            self.take()
            node = self.expr()
            self.take(")")
            return node
        raise NonPolynomial(f"unexpected token {tok.kind}")

    def resolve_rational(self, q):
        raise NotImplementedError


def parse_element(spec: DomainSpec, text: str) -> DomainElement:
    """Parse a scalar expression over the declared symbols."""

    parser = _Parser(_tokenize(text), spec.symbol)
    parser.resolve_rational = spec.rational
    node = parser.expr()
    parser.take("end")
    return node


def parse_qpoly(text: str, var: str = "x") -> tuple[Fraction, ...]:
    """Parse a univariate rational polynomial in ``var``; returns ascending
    coefficients."""

    class PolyVal:
        def __init__(self, coeffs):
            self.c = list(coeffs)
            while self.c and self.c[-1] == 0:
                self.c.pop()

        def __add__(self, other):
            n = max(len(self.c), len(other.c))
            out = [Fraction(0)] * n
            for i, v in enumerate(self.c):
                out[i] += v
            for i, v in enumerate(other.c):
                out[i] += v
            return PolyVal(out)

        def __sub__(self, other):
            return self + PolyVal([-v for v in other.c])

        def __neg__(self):
            return PolyVal([-v for v in self.c])

        def __mul__(self, other):
            if not self.c or not other.c:
                return PolyVal([])
            out = [Fraction(0)] * (len(self.c) + len(other.c) - 1)
            for i, a in enumerate(self.c):
                for j, b in enumerate(other.c):
                    out[i + j] += a * b
            return PolyVal(out)

        def __pow__(self, n):
            out = PolyVal([Fraction(1)])
            for _ in range(n):
                out = out * self
            return out

    def resolve(name):
        if name != var:
            raise UnknownSymbol(f"only {var!r} is allowed, found {name!r}")
        return PolyVal([Fraction(0), Fraction(1)])

    parser = _Parser(_tokenize(text), resolve)
    parser.resolve_rational = lambda q: PolyVal([q])
    node = parser.expr()
    parser.take("end")
    return tuple(node.c)
