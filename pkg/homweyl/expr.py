"""
Expression language for A_1 and A_1^k: tokenizer, recursive-descent parser,
evaluator and canonical printer.

Grammar:

    expr  := term (("+" | "-") term)*
    term  := unary (("." | "*" | <juxtaposition>) unary)*
    unary := "-" unary | power
    power := atom (("^" | "*^") nat)?
    atom  := "x" | "y" | rational | "(" expr ")"
    rational := int ("/" posint)?

"." is the associative product, "*" the star product of the ambient A_1^k.
Juxtaposed factors ("2 y x") mean "." so that printed polynomials parse back.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Union

from .algebra import (
    AlgebraCtx,
    WeylPoly,
    X,
    Y,
    add,
    assoc_mul,
    assoc_power,
    const,
    neg,
    star_mul,
    star_power_left,
    sub,
)


class ParseError(ValueError):
    """Syntax error with the byte offset where it was detected and the tokens that would have fitted"""

    def __init__(self, message: str, offset: int, expected: Iterable[str] = ()):
        self.offset = offset
        self.expected = tuple(sorted(set(expected)))
        detail = f" (expected one of: {', '.join(self.expected)})" if self.expected else ""
        super().__init__(f"{message} at byte {offset}{detail}")


# Syntax tree -------------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Gen:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: 'Expr'


@dataclass(frozen=True)
class Add:
    left: 'Expr'
    right: 'Expr'


@dataclass(frozen=True)
class Sub:
    left: 'Expr'
    right: 'Expr'


@dataclass(frozen=True)
class Dot:
    left: 'Expr'
    right: 'Expr'


@dataclass(frozen=True)
class Star:
    left: 'Expr'
    right: 'Expr'


@dataclass(frozen=True)
class Pow:
    base: 'Expr'
    exponent: int


@dataclass(frozen=True)
class StarPow:
    base: 'Expr'
    exponent: int


Expr = Union[Num, Gen, Neg, Add, Sub, Dot, Star, Pow, StarPow]


# Tokenizer -----------------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(?P<int>\d+)|(?P<op>\*\^|[-+.*^/()])|(?P<name>[A-Za-z_]\w*)|(?P<bad>\S))")


@dataclass(frozen=True)
class Token:
    kind: str  # 'int', 'op', 'name', 'end'
    text: str
    offset: int


def tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            break  # only trailing whitespace is left
        kind = match.lastgroup
        start = match.start(kind)
        offset = len(text[:start].encode('utf-8'))
        if kind == 'bad':
            raise ParseError(f"unexpected character {match.group(kind)!r}", offset)
        tokens.append(Token(kind, match.group(kind), offset))
        pos = match.end()
    tokens.append(Token('end', '', len(text.encode('utf-8'))))
    return tokens


# Parser ---------------------------------------------------------------------------

_ATOM_START = ('x', 'y', 'integer', '(')


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def at_op(self, *ops: str) -> bool:
        return self.current.kind == 'op' and self.current.text in ops

    def starts_atom(self) -> bool:
        token = self.current
        return token.kind in ('int', 'name') or (token.kind == 'op' and token.text == '(')

    def expect_op(self, op: str, expected: Iterable[str]) -> None:
        if not self.at_op(op):
            raise self.error(expected)
        self.advance()

    def error(self, expected: Iterable[str], message: Optional[str] = None) -> ParseError:
        token = self.current
        if message is None:
            found = "end of input" if token.kind == 'end' else repr(token.text)
            message = f"unexpected {found}"
        return ParseError(message, token.offset, expected)

    def parse(self) -> Expr:
        tree = self.expr()
        if self.current.kind != 'end':
            raise self.error(('+', '-', '.', '*', 'end of input'))
        return tree

    def expr(self) -> Expr:
        tree = self.term()
        while self.at_op('+', '-'):
            op = self.advance().text
            right = self.term()
            tree = Add(tree, right) if op == '+' else Sub(tree, right)
        return tree

    def term(self) -> Expr:
        tree = self.unary()
        while True:
            if self.at_op('.', '*'):
                op = self.advance().text
                right = self.unary()
                tree = Dot(tree, right) if op == '.' else Star(tree, right)
            elif self.starts_atom():
                tree = Dot(tree, self.unary())
            else:
                return tree

    def unary(self) -> Expr:
        if self.at_op('-'):
            self.advance()
            return Neg(self.unary())
        return self.power()

    def power(self) -> Expr:
        base = self.atom()
        if self.at_op('^', '*^'):
            op = self.advance().text
            exponent = self.natural()
            if op == '*^':
                if exponent < 1:
                    raise ParseError("star power exponent must be at least 1", self.tokens[self.index - 1].offset)
                return StarPow(base, exponent)
            return Pow(base, exponent)
        return base

    def natural(self) -> int:
        if self.at_op('-'):
            raise self.error(('natural number',), "negative exponent rejected")
        if self.current.kind != 'int':
            raise self.error(('natural number',))
        value = int(self.advance().text)
        if self.at_op('/'):
            raise self.error(('natural number',), "non-integer exponent rejected")
        return value

    def atom(self) -> Expr:
        token = self.current
        if token.kind == 'name':
            if token.text not in ('x', 'y'):
                raise ParseError(f"unknown symbol {token.text}", token.offset, ('x', 'y'))
            self.advance()
            return Gen(token.text)
        if token.kind == 'int':
            self.advance()
            numerator = int(token.text)
            if self.at_op('/'):
                self.advance()
                if self.current.kind != 'int' or int(self.current.text) == 0:
                    raise self.error(('positive integer',))
                return Num(Fraction(numerator, int(self.advance().text)))
            return Num(Fraction(numerator))
        if self.at_op('('):
            self.advance()
            inner = self.expr()
            self.expect_op(')', (')',))
            return inner
        raise self.error(_ATOM_START)


def parse(text: str) -> Expr:
    """Parse an expression; raises ParseError on malformed input"""
    return _Parser(text).parse()


# Evaluation -------------------------------------------------------------------------

def evaluate(ctx: AlgebraCtx, e: Expr) -> WeylPoly:
    """Evaluate an expression in A_1^k ("." is always the associative product)"""
    if isinstance(e, Num):
        return const(e.value)
    if isinstance(e, Gen):
        return X if e.name == 'x' else Y
    if isinstance(e, Neg):
        return neg(evaluate(ctx, e.operand))
    if isinstance(e, Add):
        return add(evaluate(ctx, e.left), evaluate(ctx, e.right))
    if isinstance(e, Sub):
        return sub(evaluate(ctx, e.left), evaluate(ctx, e.right))
    if isinstance(e, Dot):
        return assoc_mul(evaluate(ctx, e.left), evaluate(ctx, e.right))
    if isinstance(e, Star):
        return star_mul(ctx, evaluate(ctx, e.left), evaluate(ctx, e.right))
    if isinstance(e, Pow):
        return assoc_power(evaluate(ctx, e.base), e.exponent)
    if isinstance(e, StarPow):
        return star_power_left(ctx, evaluate(ctx, e.base), e.exponent)
    raise TypeError(f"not an expression node: {e!r}")


def eval_text(ctx: AlgebraCtx, text: str) -> WeylPoly:
    return evaluate(ctx, parse(text))


# Printing ----------------------------------------------------------------------------

def _format_monomial(i: int, j: int) -> str:
    parts = []
    if i:
        parts.append("y" if i == 1 else f"y^{i}")
    if j:
        parts.append("x" if j == 1 else f"x^{j}")
    return " ".join(parts)


def format_poly(p: WeylPoly) -> str:
    """Canonical text: descending total degree, then descending y-degree"""
    if p.is_zero():
        return "0"
    out = []
    for index, ((i, j), c) in enumerate(p.terms()):
        sign = "-" if c < 0 else "+"
        magnitude = abs(c)
        body = _format_monomial(i, j)
        if not body:
            text = str(magnitude)
        elif magnitude == 1:
            text = body
        else:
            text = f"{magnitude} {body}"
        if index == 0:
            out.append(f"-{text}" if sign == "-" else text)
        else:
            out.append(f" {sign} {text}")
    return "".join(out)


def poly_to_json(p: WeylPoly) -> dict:
    return {'terms': [{'y': i, 'x': j, 'coeff': str(c)} for (i, j), c in p.terms()]}


def format_expr(e: Expr) -> str:
    """Fully parenthesised rendering of a syntax tree, for messages"""
    if isinstance(e, Num):
        return str(e.value)
    if isinstance(e, Gen):
        return e.name
    if isinstance(e, Neg):
        return f"-({format_expr(e.operand)})"
    if isinstance(e, Pow):
        return f"({format_expr(e.base)})^{e.exponent}"
    if isinstance(e, StarPow):
        return f"({format_expr(e.base)})*^{e.exponent}"
    symbol = {Add: '+', Sub: '-', Dot: '.', Star: '*'}[type(e)]
    return f"({format_expr(e.left)} {symbol} {format_expr(e.right)})"
