"""Text syntax for Laurent polynomials, rationals and integer matrices.

Polynomial grammar (whitespace between tokens is ignored)::

    poly     := ['-'] term (('+' | '-') ['-'] term)*
    term     := factor ('*' factor)*
    factor   := rational | var ('^' int)?
    var      := 'x' posint
    rational := int ('/' posint)?
    int      := '-'? digits

Variables are ``x1 .. xn``; '*' is mandatory between factors.  Errors are
reported as :class:`ParseError` carrying a 1-based line and column.
"""
from dataclasses import dataclass
from fractions import Fraction

from laurentmed.laurent import LaurentPoly

__all__ = [
    "ParseError",
    "parse_poly",
    "format_poly",
    "format_fraction",
    "parse_matrix",
    "format_matrix",
    "parse_rational_list",
    "parse_int_vector",
    "parse_poly_list",
]


class ParseError(ValueError):
    def __init__(self, message, line=1, column=1):
        super().__init__(f"{line}:{column}: {message}")
        self.message = message
        self.line = line
        self.column = column


@dataclass(frozen=True)
class Token:
    kind: str  # NUM, VAR, one of "+-*^/", or EOF
    text: str
    line: int
    column: int


_PUNCT = set("+-*^/")


def tokenize(text, line=1, column=1):
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            column = 1
            i += 1
            continue
        if ch.isspace():
            i += 1
            column += 1
            continue
        start_col = column
        if ch in _PUNCT:
            tokens.append(Token(ch, ch, line, start_col))
            i += 1
            column += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(Token("NUM", text[i:j], line, start_col))
            column += j - i
            i = j
        elif ch == "x":
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            if j == i + 1:
                raise ParseError("expected variable index after 'x'", line, start_col + 1)
            tokens.append(Token("VAR", text[i + 1 : j], line, start_col))
            column += j - i
            i = j
        else:
            raise ParseError(f"unexpected character {ch!r}", line, start_col)
    tokens.append(Token("EOF", "", line, column))
    return tokens


class _PolyParser:
    def __init__(self, tokens, nvars):
        self.tokens = tokens
        self.pos = 0
        self.nvars = nvars

    def peek(self):
        return self.tokens[self.pos]

    def take(self, kind=None):
        tok = self.tokens[self.pos]
        if kind is not None and tok.kind != kind:
            self.fail(f"expected {_describe(kind)}, found {_describe_tok(tok)}", tok)
        self.pos += 1
        return tok

    def fail(self, message, tok=None):
        tok = tok or self.peek()
        raise ParseError(message, tok.line, tok.column)

    def poly(self):
        acc = {}
        sign = 1
        if self.peek().kind == "-":
            self.take()
            sign = -1
        self.term(acc, sign)
        while self.peek().kind in ("+", "-"):
            sign = 1 if self.take().kind == "+" else -1
            if self.peek().kind == "-":
                self.take()
                sign = -sign
            self.term(acc, sign)
        if self.peek().kind != "EOF":
            self.fail(f"expected '+', '-', '*' or end of input, found {_describe_tok(self.peek())}")
        return acc

    def term(self, acc, sign):
        coef = Fraction(sign)
        exp = [0] * self.nvars
        coef = self.factor(coef, exp)
        while self.peek().kind == "*":
            self.take()
            coef = self.factor(coef, exp)
        key = tuple(exp)
        acc[key] = acc.get(key, 0) + coef

    def integer(self):
        neg = False
        if self.peek().kind == "-":
            self.take()
            neg = True
        value = int(self.take("NUM").text)
        return -value if neg else value

    def factor(self, coef, exp):
        tok = self.peek()
        if tok.kind == "VAR":
            self.take()
            index = int(tok.text)
            if not 1 <= index <= self.nvars:
                self.fail(f"variable x{index} out of range (nvars={self.nvars})", tok)
            power = 1
            if self.peek().kind == "^":
                self.take()
                power = self.integer()
            exp[index - 1] += power
            return coef
        if tok.kind in ("NUM", "-"):
            value = self.integer()
            if self.peek().kind == "/":
                self.take()
                den_tok = self.take("NUM")
                den = int(den_tok.text)
                if den == 0:
                    self.fail("zero denominator", den_tok)
                return coef * Fraction(value, den)
            return coef * value
        self.fail(f"expected a number or variable, found {_describe_tok(tok)}", tok)


def _describe(kind):
    return {"NUM": "a number", "VAR": "a variable", "EOF": "end of input"}.get(kind, repr(kind))


def _describe_tok(tok):
    if tok.kind == "EOF":
        return "end of input"
    if tok.kind == "VAR":
        return f"'x{tok.text}'"
    return repr(tok.text)


def parse_poly(text, nvars, *, line=1, column=1):
    """Parse ``text`` into a :class:`LaurentPoly` in ``nvars`` variables."""
    if nvars < 1:
        raise ValueError("nvars must be positive")
    tokens = tokenize(text, line, column)
    if tokens[0].kind == "EOF":
        raise ParseError("empty polynomial", tokens[0].line, tokens[0].column)
    return LaurentPoly(nvars, _PolyParser(tokens, nvars).poly())


def format_fraction(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _format_monomial(exp):
    parts = []
    for i, e in enumerate(exp):
        if e == 1:
            parts.append(f"x{i + 1}")
        elif e:
            parts.append(f"x{i + 1}^{e}")
    return "*".join(parts)


def format_poly(f):
    """Canonical text form; ``parse_poly(format_poly(f), f.nvars) == f``."""
    pieces = []
    for exp, c in f.terms.items():
        mono = _format_monomial(exp)
        if not mono:
            body = format_fraction(c)
        elif c == 1:
            body = mono
        elif c == -1:
            body = "-" + mono
        else:
            body = f"{format_fraction(c)}*{mono}"
        if not pieces:
            pieces.append(body)
        elif body.startswith("-"):
            pieces.append(" - " + body[1:])
        else:
            pieces.append(" + " + body)
    return "".join(pieces) or "0"


def _split_positions(text, sep):
    """Split on ``sep`` keeping the 0-based start offset of each piece."""
    out = []
    start = 0
    for i, ch in enumerate(text):
        if ch == sep:
            out.append((text[start:i], start))
            start = i + 1
    out.append((text[start:], start))
    return out


def _strip_offset(piece, offset):
    stripped = piece.lstrip()
    return stripped.rstrip(), offset + len(piece) - len(stripped)


def parse_matrix(text):
    """``"0,1;1,0"`` -> ``((0, 1), (1, 0))``; single line of text."""
    rows = []
    for row_text, row_off in _split_positions(text, ";"):
        row = []
        for entry, off in _split_positions(row_text, ","):
            entry, off = _strip_offset(entry, row_off + off)
            try:
                row.append(int(entry))
            except ValueError:
                raise ParseError(f"matrix entry {entry!r} is not an integer", 1, off + 1) from None
        if rows and len(row) != len(rows[0]):
            raise ParseError(
                f"ragged matrix: row {len(rows) + 1} has {len(row)} entries, expected {len(rows[0])}", 1, row_off + 1
            )
        rows.append(tuple(row))
    return tuple(rows)


def format_matrix(m):
    return ";".join(",".join(str(v) for v in row) for row in m)


def parse_rational_list(text):
    """``"1,-1/2"`` -> ``(Fraction(1), Fraction(-1, 2))``."""
    out = []
    for entry, off in _split_positions(text, ","):
        entry, off = _strip_offset(entry, off)
        try:
            num, _, den = entry.partition("/")
            value = Fraction(int(num), int(den)) if den else Fraction(int(num))
        except ValueError:
            raise ParseError(f"{entry!r} is not a rational number", 1, off + 1) from None
        except ZeroDivisionError:
            raise ParseError("zero denominator", 1, off + 1) from None
        out.append(value)
    return tuple(out)


def parse_int_vector(text):
    if ";" in text:
        raise ParseError("expected a single row of integers", 1, text.index(";") + 1)
    return parse_matrix(text)[0]


def parse_poly_list(text, nvars):
    """Comma separated polynomials (commas never occur inside a polynomial)."""
    if not text.strip():
        return ()
    return tuple(parse_poly(piece, nvars, column=off + 1) for piece, off in _split_positions(text, ","))
