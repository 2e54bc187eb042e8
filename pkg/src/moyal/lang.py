"""Text input and output for polynomials.

Grammar (LL(1), no implicit multiplication)::

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' integer)?
    atom   := rational | 'i' | 'hbar' | 'x' | 'p' | '(' expr ')'
    rational := integer ('/' integer)?

The optional leading '-' lets negative leading coefficients round-trip.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import DivisionByZeroLiteral, ExprSyntaxError, NegativeExponent
from .fock import FockMatrix, matrix_to_json
from .opalg import AAPoly, OpPoly
from .phase import PhasePoly
from .scalar import GaussianRational

IDENTS = ("x", "p", "hbar", "i", "sqrt")
_PUNCT = {"/": "slash", "+": "plus", "-": "minus", "*": "star", "^": "caret", "(": "lparen", ")": "rparen"}


@dataclass(frozen=True)
class ExprToken:
    kind: str  # integer | ident | slash | plus | minus | star | caret | lparen | rparen | eof
    text: str
    position: int


def tokenize(text: str) -> list[ExprToken]:
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        ch = text[pos]
        if ch.isspace():
            pos += 1
        elif ch.isdigit():
            start = pos
            while pos < n and text[pos].isdigit():
                pos += 1
            tokens.append(ExprToken("integer", text[start:pos], start))
        elif ch.isalpha():
            start = pos
            while pos < n and (text[pos].isalnum() or text[pos] == "_"):
                pos += 1
            word = text[start:pos]
            if word not in IDENTS:
                raise ExprSyntaxError(f"unknown identifier {word!r}", start)
            tokens.append(ExprToken("ident", word, start))
        elif ch in _PUNCT:
            tokens.append(ExprToken(_PUNCT[ch], ch, pos))
            pos += 1
        else:
            raise ExprSyntaxError(f"unexpected character {ch!r}", pos)
    tokens.append(ExprToken("eof", "", n))
    return tokens


_ATOMS = {
    "x": PhasePoly.x(),
    "p": PhasePoly.p(),
    "hbar": PhasePoly.hbar(),
    "i": PhasePoly.constant(GaussianRational(0, 1)),
}


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def peek(self) -> ExprToken:
        return self.tokens[self.index]

    def advance(self) -> ExprToken:
        tok = self.tokens[self.index]
        self.index += 1
        return tok

    def expect(self, kind: str, what: str) -> ExprToken:
        tok = self.peek
        if tok.kind != kind:
            raise ExprSyntaxError(f"expected {what}, found {_describe(tok)}", tok.position)
        return self.advance()

    def parse(self) -> PhasePoly:
        if self.peek.kind == "eof":
            raise ExprSyntaxError("empty expression", self.peek.position)
        value = self.expr()
        if self.peek.kind != "eof":
            tok = self.peek
            raise ExprSyntaxError(f"expected operator, found {_describe(tok)}", tok.position)
        return value

    def expr(self) -> PhasePoly:
        negate = False
        if self.peek.kind == "minus":
            self.advance()
            negate = True
        value = self.term()
        if negate:
            value = -value
        while self.peek.kind in ("plus", "minus"):
            op = self.advance()
            rhs = self.term()
            value = value + rhs if op.kind == "plus" else value - rhs
        return value

    def term(self) -> PhasePoly:
        value = self.factor()
        while self.peek.kind == "star":
            self.advance()
            value = value * self.factor()
        return value

    def factor(self) -> PhasePoly:
        base = self.atom()
        if self.peek.kind != "caret":
            return base
        self.advance()
        tok = self.peek
        if tok.kind == "minus":
            raise NegativeExponent("negative exponent", tok.position)
        exponent = int(self.expect("integer", "nonnegative integer exponent").text)
        return base**exponent

    def atom(self) -> PhasePoly:
        tok = self.peek
        if tok.kind == "integer":
            self.advance()
            value = Fraction(int(tok.text))
            if self.peek.kind == "slash":
                self.advance()
                den_tok = self.expect("integer", "integer denominator")
                den = int(den_tok.text)
                if den == 0:
                    raise DivisionByZeroLiteral("zero denominator", den_tok.position)
                value /= den
            return PhasePoly.constant(value)
        if tok.kind == "ident":
            if tok.text == "sqrt":
                raise ExprSyntaxError("sqrt is not allowed in polynomial input", tok.position)
            self.advance()
            return _ATOMS[tok.text]
        if tok.kind == "lparen":
            self.advance()
            value = self.expr()
            self.expect("rparen", "')'")
            return value
        raise ExprSyntaxError(f"expected a number, variable or '(', found {_describe(tok)}", tok.position)


def _describe(tok: ExprToken) -> str:
    return "end of input" if tok.kind == "eof" else repr(tok.text)


def parse_phase_poly(text: str) -> PhasePoly:
    return _Parser(text).parse()


# -- rendering -----------------------------------------------------------------


def _rational_text(q: Fraction, wrap: bool = True) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"({q})" if wrap else str(q)


def _coefficient(c: GaussianRational) -> tuple[bool, str]:
    """Split ``c`` into (negative, magnitude text); magnitude ``"1"`` means unit."""
    re, im = c.re, c.im
    if im == 0:
        return re < 0, _rational_text(abs(re))
    if re == 0:
        mag = abs(im)
        return im < 0, "i" if mag == 1 else f"{_rational_text(mag)}*i"
    im_mag = abs(im)
    im_text = "i" if im_mag == 1 else f"{_rational_text(im_mag)}*i"
    return False, f"({_rational_text(re, wrap=False)} {'-' if im < 0 else '+'} {im_text})"


def scalar_text(c: GaussianRational) -> str:
    """Coefficient rendered so that the expression grammar reads it back."""
    negative, text = _coefficient(c)
    return ("-" if negative else "") + text


def _power(symbol: str, e: int) -> list[str]:
    if e == 0:
        return []
    return [symbol if e == 1 else f"{symbol}^{e}"]


def _sort_key(key: tuple[int, int, int]):
    a, b, k = key
    return (-(a + b), -a, -b, k)


def _render_terms(value, symbols) -> str:
    if not value:
        return "0"
    out = ""
    for key, c in sorted(value.items(), key=lambda t: _sort_key(t[0])):
        factors = symbols(key)
        negative, coef = _coefficient(c)
        if factors and coef == "1":
            body = "*".join(factors)
        else:
            body = "*".join([coef, *factors])
        if not out:
            out = ("-" if negative else "") + body
        else:
            out += (" - " if negative else " + ") + body
    return out


def _phase_symbols(key):
    m, n, k = key
    return _power("p", m) + _power("x", n) + _power("hbar", k)


def _op_symbols(key):
    a, b, k = key
    return _power("hbar", k) + _power("P", a) + _power("X", b)


def _aa_symbols(key):
    m, n, k = key
    return _power("hbar", k) + _power("A", m) + _power("Ad", n)


def format_value(value: Union[PhasePoly, OpPoly, AAPoly, FockMatrix, GaussianRational]) -> str:
    """Canonical text for any value the command line prints.

    Monomials are ordered by descending degree in the two generators, then by
    descending first and second exponent, then by ascending hbar power.
    """
    if isinstance(value, PhasePoly):
        return _render_terms(value, _phase_symbols)
    if isinstance(value, OpPoly):
        return _render_terms(value, _op_symbols)
    if isinstance(value, AAPoly):
        return _render_terms(value, _aa_symbols)
    if isinstance(value, FockMatrix):
        return matrix_to_json(value)
    if isinstance(value, GaussianRational):
        return scalar_text(value)
    raise TypeError(f"cannot format {type(value).__name__}")
