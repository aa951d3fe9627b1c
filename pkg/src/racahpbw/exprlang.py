"""Text format for elements of the algebra: tokenizer, parser, canonical printer.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' factor) | factor)*      # juxtaposition multiplies
    factor := '-' factor | atom ('^' INT)?
    atom   := IDENT | INT ('/' INT)? | '(' expr ')'
            | '[' expr ',' expr ']' | '{' expr ',' expr '}'

``^`` binds tighter than unary minus, which binds tighter than ``+``/``-``.
Parsed values are free-algebra polynomials; nothing is reduced here.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple, Union

from .errors import LexError, ParseError, ZeroDenominator
from .freealg import NcPoly, anticommutator, commutator, format_word, mul, pow_, word_to_exponents
from .racah import NAMES, named
from .rewrite import is_normal

IDENTS = frozenset(NAMES)

_PUNCT = {
    "+": "PLUS", "-": "MINUS", "*": "STAR", "^": "CARET", "/": "SLASH", ",": "COMMA",
    "(": "LPAREN", ")": "RPAREN", "[": "LBRACKET", "]": "RBRACKET", "{": "LBRACE", "}": "RBRACE",
}
_TOKEN_RE = re.compile(r"([A-Za-z_][A-Za-z0-9_]*)|([0-9]+)|(.)", re.S)


@dataclass(frozen=True)
class ExprToken:
    kind: str
    text: str
    position: int


def _byte_offset(text: str, index: int) -> int:
    return len(text[:index].encode("utf-8"))


def tokenize(text: str) -> List[ExprToken]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos] in " \t\r\n":
            pos += 1
            continue
        m = _TOKEN_RE.match(text, pos)
        ident, num, punct = m.groups()
        off = _byte_offset(text, pos)
        if ident is not None:
            if ident not in IDENTS:
                raise LexError(f"unknown identifier {ident!r}", off)
            tokens.append(ExprToken("IDENT", ident, off))
        elif num is not None:
            tokens.append(ExprToken("INT", num, off))
        elif punct in _PUNCT:
            tokens.append(ExprToken(_PUNCT[punct], punct, off))
        else:
            raise LexError(f"unexpected character {punct!r}", off)
        pos = m.end()
    return tokens


# AST


@dataclass(frozen=True)
class Scalar:
    value: Fraction


@dataclass(frozen=True)
class Named:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: "Node"


@dataclass(frozen=True)
class Power:
    base: "Node"
    exponent: int


@dataclass(frozen=True)
class Product:
    factors: Tuple["Node", ...]


@dataclass(frozen=True)
class Sum:
    terms: Tuple["Node", ...]


@dataclass(frozen=True)
class Commutator:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Anticommutator:
    left: "Node"
    right: "Node"


Node = Union[Scalar, Named, Neg, Power, Product, Sum, Commutator, Anticommutator]

_ATOM_START = {"IDENT", "INT", "LPAREN", "LBRACKET", "LBRACE"}


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.end = len(text.encode("utf-8"))
        self.i = 0

    def peek(self) -> str | None:
        return self.tokens[self.i].kind if self.i < len(self.tokens) else None

    def offset(self) -> int:
        return self.tokens[self.i].position if self.i < len(self.tokens) else self.end

    def expect(self, kind: str) -> ExprToken:
        if self.peek() != kind:
            found = self.tokens[self.i].text if self.i < len(self.tokens) else "end of input"
            raise ParseError(f"expected {kind}, found {found!r}", self.offset())
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def parse(self) -> Node:
        if not self.tokens:
            raise ParseError("empty expression", 0)
        node = self.expr()
        if self.peek() is not None:
            raise ParseError(f"unexpected {self.tokens[self.i].text!r}", self.offset())
        return node

    def expr(self) -> Node:
        terms = [self.term()]
        while self.peek() in ("PLUS", "MINUS"):
            op = self.expect(self.peek()).kind
            t = self.term()
            terms.append(Neg(t) if op == "MINUS" else t)
        return terms[0] if len(terms) == 1 else Sum(tuple(terms))

    def term(self) -> Node:
        factors = [self.factor()]
        while True:
            kind = self.peek()
            if kind == "STAR":
                self.i += 1
                factors.append(self.factor())
            elif kind in _ATOM_START:
                factors.append(self.factor())
            else:
                break
        return factors[0] if len(factors) == 1 else Product(tuple(factors))

    def factor(self) -> Node:
        if self.peek() == "MINUS":
            self.i += 1
            return Neg(self.factor())
        base = self.atom()
        if self.peek() == "CARET":
            self.i += 1
            return Power(base, int(self.expect("INT").text))
        return base

    def atom(self) -> Node:
        kind = self.peek()
        if kind == "IDENT":
            return Named(self.expect("IDENT").text)
        if kind == "INT":
            num = int(self.expect("INT").text)
            if self.peek() == "SLASH":
                self.i += 1
                tok = self.expect("INT")
                den = int(tok.text)
                if den == 0:
                    raise ZeroDenominator("zero denominator", tok.position)
                return Scalar(Fraction(num, den))
            return Scalar(Fraction(num))
        if kind == "LPAREN":
            self.i += 1
            node = self.expr()
            self.expect("RPAREN")
            return node
        if kind in ("LBRACKET", "LBRACE"):
            self.i += 1
            left = self.expr()
            self.expect("COMMA")
            right = self.expr()
            if kind == "LBRACKET":
                self.expect("RBRACKET")
                return Commutator(left, right)
            self.expect("RBRACE")
            return Anticommutator(left, right)
        found = self.tokens[self.i].text if self.i < len(self.tokens) else "end of input"
        raise ParseError(f"expected an operand, found {found!r}", self.offset())


def parse_ast(text: str) -> Node:
    return _Parser(text).parse()


def evaluate(node: Node) -> NcPoly:
    if isinstance(node, Scalar):
        return NcPoly.const(node.value)
    if isinstance(node, Named):
        return named(node.name)
    if isinstance(node, Neg):
        return -evaluate(node.operand)
    if isinstance(node, Power):
        return pow_(evaluate(node.base), node.exponent)
    if isinstance(node, Product):
        result = evaluate(node.factors[0])
        for f in node.factors[1:]:
            result = mul(result, evaluate(f))
        return result
    if isinstance(node, Sum):
        result = NcPoly.zero()
        for t in node.terms:
            result = result + evaluate(t)
        return result
    if isinstance(node, Commutator):
        return commutator(evaluate(node.left), evaluate(node.right))
    if isinstance(node, Anticommutator):
        return anticommutator(evaluate(node.left), evaluate(node.right))
    raise TypeError(f"not an expression node: {node!r}")


def parse(text: str) -> NcPoly:
    """Parse text into an unreduced free-algebra polynomial."""
    return evaluate(parse_ast(text))


def _canonical_order(p: NcPoly):
    if is_normal(p):
        def key(item):
            exps = word_to_exponents(item[0])
            return (sum(exps) + exps[1], tuple(-e for e in exps))
    else:
        def key(item):
            return (len(item[0]), item[0])
    return sorted(p.items(), key=key)


def print_canonical(p: NcPoly) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for n, (word, c) in enumerate(_canonical_order(p)):
        mag = abs(c)
        if not word:
            body = str(mag)
        elif mag == 1:
            body = format_word(word)
        else:
            body = f"{mag} {format_word(word)}"
        if n == 0:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f"{'-' if c < 0 else '+'} {body}")
    return " ".join(parts)
