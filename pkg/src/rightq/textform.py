"""Textual form of biwords and expressions.

Grammar (whitespace between tokens is insignificant):

    expr    := term (('+'|'-') term)* | '0'
    term    := [coeff '*'] biword | coeff
    coeff   := int | [int '*'] 'q' ['^' int]
    biword  := digits '/' digits | '(' intlist ')' '/' '(' intlist ')' | 'e'

In the digits form every digit is one letter, so it only covers letters
1..9; the parenthesized form covers any letters.  'e' is the empty
biword.  A bare coeff is a multiple of 'e'.  The printer emits terms in
canonical order (degree, then top word, then bottom word; exponents
ascending inside one coefficient) and always stays inside the grammar;
the parser additionally tolerates a unary minus in front of a term.
"""

from typing import NamedTuple

from .expressions import Expression
from .laurent import Laurent
from .words import Biword, EMPTY_BIWORD, format_word_pair


class ParseError(ValueError):
    def __init__(self, position: int, expected: str, found: str):
        self.position = position
        self.expected = expected
        self.found = found
        super().__init__(
            f"offset {position}: expected {expected}, found {found}"
        )


class LengthMismatch(ParseError):
    """Top and bottom rows of a biword literal differ in length."""


class LetterOutOfRange(ParseError):
    """A letter is zero or exceeds the configured alphabet bound."""


class _Token(NamedTuple):
    kind: str  # "int" | "name" | "sym" | "end"
    text: str
    pos: int


_SYMBOLS = set("+-*/^(),")


def _lex(text: str) -> list[_Token]:
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch in " \t\r\n":
            i += 1
            continue
        if ch.isdigit():
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("int", text[i:j], i))
            i = j
        elif ch in ("q", "e"):
            tokens.append(_Token("name", ch, i))
            i += 1
        elif ch in _SYMBOLS:
            tokens.append(_Token("sym", ch, i))
            i += 1
        else:
            raise ParseError(i, "a token", f"{ch!r}")
    tokens.append(_Token("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str, r: int | None):
        self.tokens = _lex(text)
        self.r = r
        self.i = 0

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def next(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, expected: str) -> ParseError:
        tok = self.peek()
        found = "end of input" if tok.kind == "end" else f"{tok.text!r}"
        return ParseError(tok.pos, expected, found)

    def expect(self, text: str) -> _Token:
        tok = self.peek()
        if tok.kind == "sym" and tok.text == text:
            return self.next()
        raise self.fail(f"{text!r}")

    def at_sym(self, text: str) -> bool:
        tok = self.peek()
        return tok.kind == "sym" and tok.text == text

    def _letter(self, value: int, pos: int) -> int:
        if value < 1 or (self.r is not None and value > self.r):
            bound = f"1..{self.r}" if self.r is not None else "1.."
            raise LetterOutOfRange(pos, f"a letter in {bound}", str(value))
        return value

    def _digit_word(self) -> tuple[int, ...]:
        tok = self.peek()
        if tok.kind != "int":
            raise self.fail("a digit string")
        self.next()
        return tuple(
            self._letter(int(ch), tok.pos + k) for k, ch in enumerate(tok.text)
        )

    def _int_list(self) -> tuple[int, ...]:
        letters = []
        if self.at_sym(")"):
            return ()
        while True:
            tok = self.peek()
            if tok.kind != "int":
                raise self.fail("a letter")
            self.next()
            letters.append(self._letter(int(tok.text), tok.pos))
            if not self.at_sym(","):
                return tuple(letters)
            self.next()

    def biword(self) -> Biword:
        tok = self.peek()
        if tok.kind == "name" and tok.text == "e":
            self.next()
            return EMPTY_BIWORD
        if self.at_sym("("):
            start = tok.pos
            self.next()
            top = self._int_list()
            self.expect(")")
            self.expect("/")
            self.expect("(")
            bottom = self._int_list()
            self.expect(")")
        elif tok.kind == "int":
            start = tok.pos
            top = self._digit_word()
            self.expect("/")
            bottom = self._digit_word()
        else:
            raise self.fail("a biword")
        if len(top) != len(bottom):
            raise LengthMismatch(
                start,
                "rows of equal length",
                f"{len(top)} top letters over {len(bottom)} bottom letters",
            )
        return Biword._make(top, bottom)

    def _signed_int(self) -> int:
        negative = False
        if self.at_sym("-"):
            self.next()
            negative = True
        tok = self.peek()
        if tok.kind != "int":
            raise self.fail("an integer")
        self.next()
        value = int(tok.text)
        return -value if negative else value

    def _q_power(self, coefficient: int) -> Laurent:
        self.next()  # the 'q'
        exponent = 1
        if self.at_sym("^"):
            self.next()
            exponent = self._signed_int()
        return Laurent.q_power(exponent, coefficient)

    def term(self, sign: int) -> tuple[Biword, Laurent]:
        while self.at_sym("-"):
            self.next()
            sign = -sign
        tok = self.peek()
        if tok.kind == "name" and tok.text == "e":
            self.next()
            return EMPTY_BIWORD, Laurent.integer(sign)
        if self.at_sym("("):
            return self.biword(), Laurent.integer(sign)
        if tok.kind == "name" and tok.text == "q":
            coeff = self._q_power(sign)
            return self._optional_biword(), coeff
        if tok.kind == "int":
            if self.tokens[self.i + 1].kind == "sym" and self.tokens[
                self.i + 1
            ].text == "/":
                return self.biword(), Laurent.integer(sign)
            self.next()
            value = sign * int(tok.text)
            if not self.at_sym("*"):
                return EMPTY_BIWORD, Laurent.integer(value)
            self.next()
            after = self.peek()
            if after.kind == "name" and after.text == "q":
                coeff = self._q_power(value)
                return self._optional_biword(), coeff
            return self.biword(), Laurent.integer(value)
        raise self.fail("a term")

    def _optional_biword(self) -> Biword:
        if self.at_sym("*"):
            self.next()
            return self.biword()
        return EMPTY_BIWORD

    def expression(self) -> Expression:
        acc: dict[Biword, Laurent] = {}

        def absorb(bw: Biword, coeff: Laurent) -> None:
            s = acc.get(bw)
            s = coeff if s is None else s + coeff
            if s:
                acc[bw] = s
            else:
                acc.pop(bw, None)

        absorb(*self.term(1))
        while True:
            tok = self.peek()
            if tok.kind == "end":
                break
            if tok.kind == "sym" and tok.text in "+-":
                self.next()
                absorb(*self.term(1 if tok.text == "+" else -1))
            else:
                raise self.fail("'+', '-' or end of input")
        return Expression._make(acc)


def parse_expression(text: str, r: int | None = None) -> Expression:
    """Parse an expression, validating letters against r when given."""
    return _Parser(text, r).expression()


def parse_biword(text: str, r: int | None = None) -> Biword:
    """Parse a single biword literal."""
    parser = _Parser(text, r)
    bw = parser.biword()
    if parser.peek().kind != "end":
        raise parser.fail("end of input")
    return bw


def print_biword(bw: Biword) -> str:
    return format_word_pair(bw.top, bw.bottom)


def print_expression(expr: Expression) -> str:
    """Canonical text of an expression; parse_expression inverts it."""
    if expr.is_zero():
        return "0"
    chunks: list[str] = []
    first = True
    for bw, coeff in expr.terms():
        for exponent, c in coeff.monomials():
            magnitude = abs(c)
            negative = c < 0
            factors: list[str] = []
            if magnitude != 1 or (first and negative):
                # a leading negative keeps its sign inside the integer
                # factor so the output stays inside the grammar
                factors.append(str(-magnitude if first and negative else magnitude))
            if exponent:
                factors.append("q" if exponent == 1 else f"q^{exponent}")
            factors.append(format_word_pair(bw.top, bw.bottom))
            body = "*".join(factors)
            if first:
                chunks.append(body)
            else:
                chunks.append(("- " if negative else "+ ") + body)
            first = False
    return " ".join(chunks)
