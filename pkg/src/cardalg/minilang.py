"""Mini-languages for ring and group specifications.

Ring specs::

    rspec := 'ZZ'
           | 'Z' '/' NAT
           | 'GF' '(' NAT ')' '[' 'x' ']' ( '/' '(' poly ')' )?
           | 'prod' '(' rspec (',' rspec)+ ')'
           | 'idealize' '(' rspec ',' '[' NAT (',' NAT)* ']' ')'
           | 'monoidring' '(' rspec ',' NAME ')'
    poly  := pterm ('+' pterm)*        # e.g. x^2 + x + 1, 2*x^3 + 1
    pterm := NAT ('*' xpow)? | xpow
    xpow  := 'x' ('^' NAT)?

Group specs::

    gspec := gatom ('+' gatom)*
    gatom := 'fin' '(' NAT (',' NAT)* ')'
           | 'free' '(' NAT ')'
           | 'prufer' '(' NAT ')'
           | 'sum_inf' '(' gatom ')'

`spec_str` / `group_str` render back to these syntaxes, and parsing a
rendering returns the same spec tree.
"""

from __future__ import annotations

from typing import List, Tuple

from .abgroup import (FiniteAtom, FreeAtom, GroupAtom, GroupSpec, PruferAtom,
                      SumInfAtom)
from .exprlang import ParseError, Token
from .finring import (BuiltinInt, BuiltinPoly, IdealizeSpec, MonoidRingSpec,
                      PolyQuot, Product, RingSpec, Zmod)


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
        if c in "/()[],*^+":
            toks.append(Token("SYM", c, i))
            i += 1
            continue
        raise ParseError(i, repr(c), ("digit", "name", "/()[],*^+"))
    toks.append(Token("END", "", n))
    return toks


class _SpecParser:
    def __init__(self, text: str):
        self.toks = _lex(text)
        self.i = 0

    def peek(self) -> Token:
        return self.toks[self.i]

    def next(self) -> Token:
        t = self.toks[self.i]
        self.i += 1
        return t

    def at_sym(self, sym: str) -> bool:
        t = self.peek()
        return t.kind == "SYM" and t.text == sym

    def expect_sym(self, sym: str) -> None:
        t = self.peek()
        if not (t.kind == "SYM" and t.text == sym):
            raise ParseError(t.pos, repr(t.text or "end of input"), (sym,))
        self.next()

    def expect_nat(self) -> int:
        t = self.peek()
        if t.kind != "NAT":
            raise ParseError(t.pos, repr(t.text or "end of input"),
                             ("a natural",))
        self.next()
        return int(t.text)

    def end(self) -> None:
        t = self.peek()
        if t.kind != "END":
            raise ParseError(t.pos, repr(t.text), ("end of input",))

    # ---- ring specs ----

    def rspec(self) -> RingSpec:
        t = self.peek()
        if t.kind != "NAME":
            raise ParseError(t.pos, repr(t.text or "end of input"),
                             ("ZZ", "Z", "GF", "prod", "idealize",
                              "monoidring"))
        if t.text == "ZZ":
            self.next()
            return BuiltinInt()
        if t.text == "Z":
            self.next()
            self.expect_sym("/")
            return Zmod(self.expect_nat())
        if t.text == "GF":
            self.next()
            self.expect_sym("(")
            q = self.expect_nat()
            self.expect_sym(")")
            self.expect_sym("[")
            x = self.peek()
            if not (x.kind == "NAME" and x.text == "x"):
                raise ParseError(x.pos, repr(x.text), ("x",))
            self.next()
            self.expect_sym("]")
            if self.at_sym("/"):
                self.next()
                self.expect_sym("(")
                coeffs = self.poly(q)
                self.expect_sym(")")
                return PolyQuot(q, coeffs)
            return BuiltinPoly(q)
        if t.text == "prod":
            self.next()
            self.expect_sym("(")
            factors = [self.rspec()]
            while self.at_sym(","):
                self.next()
                factors.append(self.rspec())
            self.expect_sym(")")
            if len(factors) < 2:
                raise ParseError(t.pos, "1 factor", ("at least 2 factors",))
            return Product(tuple(factors))
        if t.text == "idealize":
            self.next()
            self.expect_sym("(")
            base = self.rspec()
            self.expect_sym(",")
            self.expect_sym("[")
            orders = [self.expect_nat()]
            while self.at_sym(","):
                self.next()
                orders.append(self.expect_nat())
            self.expect_sym("]")
            self.expect_sym(")")
            return IdealizeSpec(base, tuple(orders))
        if t.text == "monoidring":
            self.next()
            self.expect_sym("(")
            base = self.rspec()
            self.expect_sym(",")
            m = self.peek()
            if m.kind != "NAME":
                raise ParseError(m.pos, repr(m.text), ("a monoid name",))
            self.next()
            self.expect_sym(")")
            return MonoidRingSpec(base, m.text)
        raise ParseError(t.pos, repr(t.text),
                         ("ZZ", "Z", "GF", "prod", "idealize", "monoidring"))

    def poly(self, q: int) -> Tuple[int, ...]:
        coeffs: dict = {}
        while True:
            c, d = self.pterm()
            coeffs[d] = (coeffs.get(d, 0) + c) % q
            if self.at_sym("+"):
                self.next()
                continue
            break
        deg = max(coeffs) if coeffs else 0
        return tuple(coeffs.get(d, 0) for d in range(deg + 1))

    def pterm(self) -> Tuple[int, int]:
        t = self.peek()
        if t.kind == "NAT":
            self.next()
            c = int(t.text)
            if self.at_sym("*"):
                self.next()
                d = self.xpow()
                return c, d
            return c, 0
        if t.kind == "NAME" and t.text == "x":
            return 1, self.xpow()
        raise ParseError(t.pos, repr(t.text or "end of input"),
                         ("a coefficient", "x"))

    def xpow(self) -> int:
        t = self.peek()
        if not (t.kind == "NAME" and t.text == "x"):
            raise ParseError(t.pos, repr(t.text or "end of input"), ("x",))
        self.next()
        if self.at_sym("^"):
            self.next()
            return self.expect_nat()
        return 1

    # ---- group specs ----

    def gspec(self) -> GroupSpec:
        atoms = [self.gatom()]
        while self.at_sym("+"):
            self.next()
            atoms.append(self.gatom())
        return GroupSpec(tuple(atoms))

    def gatom(self) -> GroupAtom:
        t = self.peek()
        if t.kind != "NAME":
            raise ParseError(t.pos, repr(t.text or "end of input"),
                             ("fin", "free", "prufer", "sum_inf"))
        if t.text == "fin":
            self.next()
            self.expect_sym("(")
            orders = [self.expect_nat()]
            while self.at_sym(","):
                self.next()
                orders.append(self.expect_nat())
            self.expect_sym(")")
            return FiniteAtom(tuple(orders))
        if t.text == "free":
            self.next()
            self.expect_sym("(")
            r = self.expect_nat()
            self.expect_sym(")")
            return FreeAtom(r)
        if t.text == "prufer":
            self.next()
            self.expect_sym("(")
            p = self.expect_nat()
            self.expect_sym(")")
            return PruferAtom(p)
        if t.text == "sum_inf":
            self.next()
            self.expect_sym("(")
            a = self.gatom()
            self.expect_sym(")")
            return SumInfAtom(a)
        raise ParseError(t.pos, repr(t.text),
                         ("fin", "free", "prufer", "sum_inf"))


def parse_ring_spec(text: str) -> RingSpec:
    p = _SpecParser(text)
    spec = p.rspec()
    p.end()
    return spec


def parse_group_spec(text: str) -> GroupSpec:
    p = _SpecParser(text)
    spec = p.gspec()
    p.end()
    return spec
