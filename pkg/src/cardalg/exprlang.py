"""The cardinal expression language: lexer, parser, AST, renderer.

Grammar (precedence low to high: ``+``, ``*``, ``^``; ``^`` is
right-associative)::

    expr    := term ('+' term)*
    term    := factor ('*' factor)*
    factor  := atom ('^' factor)?
    atom    := NAT
             | 'aleph' '(' ordinal ')'
             | NAME '(' expr (',' expr)* ')'
             | '(' expr ')'
    ordinal := oterm ('+' oterm)*          # strictly decreasing exponents
    oterm   := NAT
             | 'w' ('^' oexp)? ('*' NAT)?
    oexp    := NAT | 'w' ('^' oexp)? | '(' ordinal ')'

Functions: card_finsets/1, card_dsum/2, card_sum_family/3,
card_prod_family/3, card_monoid_ring/2, card_poly/2, card_powser/1,
card_tfr/1, exp/2.  Canonical value renderings (``aleph(w+1)``,
``2^aleph(0)``, ``exp(aleph(1), aleph(0))``) reparse to ASTs that
evaluate back to the same value.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple, Union

from .ordinal import Ordinal

FUNCTIONS = {
    "card_finsets": 1,
    "card_dsum": 2,
    "card_sum_family": 3,
    "card_prod_family": 3,
    "card_monoid_ring": 2,
    "card_poly": 2,
    "card_powser": 1,
    "card_tfr": 1,
    "exp": 2,
}


class ParseError(ValueError):
    """Syntax error with byte offset and the expected-token set."""

    def __init__(self, pos: int, found: str, expected: Tuple[str, ...]):
        self.pos = pos
        self.found = found
        self.expected = expected
        super().__init__(
            f"syntax error at byte {pos}: found {found}, expected one of "
            + ", ".join(expected))


# ---------------------------------------------------------------------------
# AST
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    n: int


@dataclass(frozen=True)
class AlephLit:
    index: Ordinal


@dataclass(frozen=True)
class BinOp:
    op: str  # '+', '*', '^'
    left: "ExprAST"
    right: "ExprAST"


@dataclass(frozen=True)
class Call:
    name: str
    args: Tuple["ExprAST", ...]


ExprAST = Union[Num, AlephLit, BinOp, Call]

_PREC = {"+": 1, "*": 2, "^": 3}


def render(ast: ExprAST) -> str:
    """Canonical rendering; parse(render(a)) == a."""
    return _render(ast, 0)


def _render(ast: ExprAST, ctx: int) -> str:
    if isinstance(ast, Num):
        return str(ast.n)
    if isinstance(ast, AlephLit):
        return f"aleph({ast.index})"
    if isinstance(ast, Call):
        return f"{ast.name}(" + ", ".join(_render(a, 0) for a in ast.args) + ")"
    prec = _PREC[ast.op]
    if ast.op == "^":
        # right-associative: the left operand must be atomic, the right
        # may chain
        s = f"{_render(ast.left, prec + 1)}^{_render(ast.right, prec)}"
    else:
        s = f"{_render(ast.left, prec)} {ast.op} {_render(ast.right, prec + 1)}"
    return f"({s})" if prec < ctx else s


# ---------------------------------------------------------------------------
# lexer
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Token:
    kind: str  # NAT NAME SYM END
    text: str
    pos: int


def _lex(text: str) -> List[Token]:
    toks: List[Token] = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(Token("NAT", text[i:j], i))
            i = j
            continue
        if c.isalpha() or c == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(Token("NAME", text[i:j], i))
            i = j
            continue
        if c in "+*^(),":
            toks.append(Token("SYM", c, i))
            i += 1
            continue
        raise ParseError(i, repr(c), ("digit", "name", "+", "*", "^", "(",
                                      ")", ","))
    toks.append(Token("END", "", n))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _lex(text)
        self.i = 0

    def peek(self) -> Token:
        return self.toks[self.i]

    def next(self) -> Token:
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect_sym(self, sym: str) -> Token:
        t = self.peek()
        if t.kind == "SYM" and t.text == sym:
            return self.next()
        raise ParseError(t.pos, repr(t.text or "end of input"), (sym,))

    def at_sym(self, sym: str) -> bool:
        t = self.peek()
        return t.kind == "SYM" and t.text == sym

    # ---- cardinal expressions ----

    def expr(self) -> ExprAST:
        node = self.term()
        while self.at_sym("+"):
            self.next()
            node = BinOp("+", node, self.term())
        return node

    def term(self) -> ExprAST:
        node = self.factor()
        while self.at_sym("*"):
            self.next()
            node = BinOp("*", node, self.factor())
        return node

    def factor(self) -> ExprAST:
        node = self.atom()
        if self.at_sym("^"):
            self.next()
            return BinOp("^", node, self.factor())
        return node

    def atom(self) -> ExprAST:
        t = self.peek()
        if t.kind == "NAT":
            self.next()
            return Num(int(t.text))
        if t.kind == "NAME" and t.text == "aleph":
            self.next()
            self.expect_sym("(")
            idx = self.ordinal()
            self.expect_sym(")")
            return AlephLit(idx)
        if t.kind == "NAME" and t.text in FUNCTIONS:
            self.next()
            self.expect_sym("(")
            args = [self.expr()]
            while self.at_sym(","):
                self.next()
                args.append(self.expr())
            self.expect_sym(")")
            arity = FUNCTIONS[t.text]
            if len(args) != arity:
                raise ParseError(t.pos, f"{len(args)} argument(s) to {t.text}",
                                 (f"{arity} argument(s)",))
            return Call(t.text, tuple(args))
        if t.kind == "SYM" and t.text == "(":
            self.next()
            node = self.expr()
            self.expect_sym(")")
            return node
        raise ParseError(t.pos, repr(t.text or "end of input"),
                         ("natural", "aleph", "function name", "("))

    # ---- ordinals ----

    def ordinal(self) -> Ordinal:
        t0 = self.peek()
        if t0.kind == "NAT" and t0.text == "0":
            self.next()
            return Ordinal()
        terms = [self.oterm()]
        while self.at_sym("+"):
            self.next()
            terms.append(self.oterm())
        try:
            return Ordinal(tuple(terms))
        except ValueError as e:
            raise ParseError(t0.pos, "ordinal term list", (str(e),)) from None

    def oterm(self) -> Tuple[Ordinal, int]:
        t = self.peek()
        if t.kind == "NAT":
            self.next()
            if int(t.text) < 1:
                raise ParseError(t.pos, t.text, ("a positive natural",))
            return (Ordinal(), int(t.text))
        if t.kind == "NAME" and t.text == "w":
            self.next()
            exp = Ordinal.from_int(1)
            if self.at_sym("^"):
                self.next()
                exp = self.oexp()
            coeff = 1
            if self.at_sym("*"):
                self.next()
                c = self.peek()
                if c.kind != "NAT":
                    raise ParseError(c.pos, repr(c.text), ("a natural",))
                self.next()
                coeff = int(c.text)
            return (exp, coeff)
        raise ParseError(t.pos, repr(t.text or "end of input"),
                         ("natural", "w"))

    def oexp(self) -> Ordinal:
        t = self.peek()
        if t.kind == "NAT":
            self.next()
            return Ordinal.from_int(int(t.text))
        if t.kind == "NAME" and t.text == "w":
            self.next()
            if self.at_sym("^"):
                self.next()
                inner = self.oexp()
                return Ordinal.omega_power(inner)
            return Ordinal.omega_power(Ordinal.from_int(1))
        if t.kind == "SYM" and t.text == "(":
            self.next()
            o = self.ordinal()
            self.expect_sym(")")
            return o
        raise ParseError(t.pos, repr(t.text or "end of input"),
                         ("natural", "w", "("))


def parse(text: str) -> ExprAST:
    p = _Parser(text)
    node = p.expr()
    t = p.peek()
    if t.kind != "END":
        raise ParseError(t.pos, repr(t.text), ("end of input",))
    return node


def parse_ordinal(text: str) -> Ordinal:
    p = _Parser(text)
    o = p.ordinal()
    t = p.peek()
    if t.kind != "END":
        raise ParseError(t.pos, repr(t.text), ("end of input",))
    return o
