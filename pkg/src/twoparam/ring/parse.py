"""Recursive-descent parser for coefficient literals such as ``t^-2*(v+v^-1)``."""
from .lpoly import LPoly
from .ratfunc import RatFunc


class ParseError(ValueError):
    def __init__(self, message, pos):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def _skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self._skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch):
        if self.peek() != ch:
            found = self.peek() or "end of input"
            raise ParseError(f"expected {ch!r}, found {found!r}", self.pos)
        self.pos += 1

    def uint(self):
        self._skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            found = self.text[start] if start < len(self.text) else "end of input"
            raise ParseError(f"expected a number, found {found!r}", start)
        return int(self.text[start:self.pos])

    def expr(self):
        neg = False
        if self.peek() == "-":
            self.pos += 1
            neg = True
        val = self.term()
        if neg:
            val = -val
        while self.peek() in ("+", "-"):
            op = self.peek()
            self.pos += 1
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term(self):
        val = self.factor()
        while self.peek() in ("*", "/"):
            op = self.peek()
            self.pos += 1
            at = self.pos
            rhs = self.factor()
            if op == "*":
                val = val * rhs
            else:
                if rhs.is_zero():
                    raise ZeroDivisionError(f"division by zero at position {at}")
                val = val / rhs
        return val

    def factor(self):
        at = self.pos
        val = self.atom()
        if self.peek() == "^":
            self.pos += 1
            neg = False
            if self.peek() == "-":
                self.pos += 1
                neg = True
            e = self.uint()
            if neg:
                if val.is_zero():
                    raise ZeroDivisionError(f"division by zero at position {at}")
                val = val ** (-e)
            else:
                val = val ** e
        return val

    def atom(self):
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            val = self.expr()
            self.take(")")
            return val
        if ch == "v":
            self.pos += 1
            return RatFunc.from_lpoly(LPoly.monomial(1, 0))
        if ch == "t":
            self.pos += 1
            return RatFunc.from_lpoly(LPoly.monomial(0, 1))
        if ch.isdigit():
            return RatFunc.from_lpoly(LPoly.const(self.uint()))
        found = ch or "end of input"
        raise ParseError(f"unexpected {found!r}", self.pos)


def parse_coeff(text):
    """Parse a coefficient literal into a normalized RatFunc."""
    if not isinstance(text, str):
        raise TypeError("coefficient literal must be a string")
    p = _Parser(text)
    val = p.expr()
    if p.peek():
        raise ParseError(f"unexpected {p.peek()!r}", p.pos)
    return val
