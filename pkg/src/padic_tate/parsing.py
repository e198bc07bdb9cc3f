"""Element literal parser.

Grammar (whitespace ignored):

    expr     := ["-"] term (("+"|"-") term)*
    term     := rational ("*" atom)? | atom
    atom     := "pi" ("^" int)? | "g" ("^" int)? | int "^" int
    rational := int ("/" int)?

"g" names the residue generator and is only valid in unramified fields.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import DenominatorNotInvertible, ParseError
from .field import FieldDescriptor, PadicElement, _vp

_TOKEN = re.compile(r"\s*(?:(\d+)|(pi|g)|([+\-*/^()]))")


def _tokenize(text: str) -> list[str]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected input at position {pos}: {text[pos:pos+8]!r}")
        out.append(m.group(1) or m.group(2) or m.group(3))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens: list[str], field: FieldDescriptor, prec: int):
        self.tokens = tokens
        self.i = 0
        self.field = field
        # generous working precision so literal combinations do not cap early
        extra = sum(len(t) for t in tokens) * field.e + 16
        self.work = prec + extra

    def peek(self, ahead: int = 0):
        j = self.i + ahead
        return self.tokens[j] if j < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input")
        self.i += 1
        return tok

    def expect_int(self) -> int:
        sign = 1
        if self.peek() == "-":
            self.take()
            sign = -1
        tok = self.take()
        if not tok.isdigit():
            raise ParseError(f"expected an integer, found {tok!r}")
        return sign * int(tok)

    # atoms ---------------------------------------------------------------

    def parse_atom(self) -> PadicElement:
        tok = self.peek()
        if tok in ("pi", "g"):
            self.take()
            power = 1
            if self.peek() == "^":
                self.take()
                power = self.expect_int()
            if tok == "pi":
                return PadicElement.uniformizer(self.field, self.work, power)
            if self.field.kind != "unramified":
                raise ParseError("residue generator 'g' needs an unramified field")
            gval = PadicElement.from_pi_digits(
                self.field, 0, [tuple([0, 1] + [0] * (self.field.f - 2))], self.work)
            return gval ** power
        if tok is not None and tok.isdigit():
            base = int(self.take())
            if self.peek() == "^":
                self.take()
                expo = self.expect_int()
                return self._materialize(Fraction(base)) ** expo
            return self._materialize(Fraction(base))
        raise ParseError(f"expected an atom, found {tok!r}")

    def _materialize(self, value: Fraction) -> PadicElement:
        den = value.denominator
        if den != 1 and den % self.field.p == 0:
            if _vp(den, self.field.p) * self.field.e > self.work:
                raise DenominatorNotInvertible(
                    f"denominator {den} exceeds the precision budget")
        return PadicElement.from_rational(self.field, value, self.work)

    def parse_term(self) -> PadicElement:
        tok = self.peek()
        if tok in ("pi", "g"):
            return self.parse_atom()
        if tok is not None and tok.isdigit():
            if self.peek(1) == "^":
                return self.parse_atom()
            num = int(self.take())
            if self.peek() == "/":
                self.take()
                dtok = self.take()
                if not dtok.isdigit():
                    raise ParseError(f"expected a denominator, found {dtok!r}")
                den = int(dtok)
                if den == 0:
                    raise ParseError("zero denominator")
                value = Fraction(num, den)
            else:
                value = Fraction(num)
            if self.peek() == "*":
                self.take()
                return self.parse_atom() * value
            return self._materialize(value)
        raise ParseError(f"expected a term, found {tok!r}")

    def parse_expr(self) -> PadicElement:
        sign = 1
        if self.peek() == "-":
            self.take()
            sign = -1
        acc = self.parse_term()
        if sign < 0:
            acc = -acc
        while self.peek() in ("+", "-"):
            op = self.take()
            nxt = self.parse_term()
            acc = acc + nxt if op == "+" else acc - nxt
        if self.peek() is not None:
            raise ParseError(f"trailing input {self.tokens[self.i:]!r}")
        return acc


def parse_element(text: str, field: FieldDescriptor, prec: int) -> PadicElement:
    """Evaluate an element literal at absolute precision ``prec``.

    A trailing precision marker "+ O(pi^N)" (as printed by the canonical
    display) is accepted and tightens the precision to min(prec, N).
    """
    marker = re.search(r"\+?\s*O\(pi\^(-?\d+)\)\s*$", text)
    if marker:
        prec = min(prec, int(marker.group(1)))
        text = text[: marker.start()].strip()
        if not text:
            return PadicElement.zero(field, prec)
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty literal")
    if tokens == ["0"]:
        return PadicElement.zero(field, prec)
    value = _Parser(tokens, field, prec).parse_expr()
    return value.truncate(prec)
