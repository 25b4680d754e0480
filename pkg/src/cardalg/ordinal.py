"""Ordinals below epsilon_0 in Cantor normal form, used as aleph subscripts.

An ordinal is a finite sum ``w^e1*c1 + ... + w^ek*ck`` with exponents
``e1 > e2 > ... > ek`` (themselves ordinals) and coefficients ``ci >= 1``;
the empty sum is 0.  The representation is unique, so structural equality
is ordinal equality.  Only what the aleph index universe needs is here:
total comparison, successor, and zero/successor/limit classification.
General ordinal arithmetic is deliberately absent.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Tuple


class OrdKind(Enum):
    ZERO = "zero"
    SUCCESSOR = "successor"
    LIMIT = "limit"


@dataclass(frozen=True)
class Ordinal:
    """Cantor normal form as a tuple of (exponent, coefficient) terms."""

    terms: Tuple[Tuple["Ordinal", int], ...] = ()

    def __post_init__(self) -> None:
        prev = None
        for exp, coeff in self.terms:
            if not isinstance(exp, Ordinal):
                raise TypeError(f"exponent {exp!r} is not an Ordinal")
            if not isinstance(coeff, int) or coeff < 1:
                raise ValueError(f"coefficient {coeff!r} must be an integer >= 1")
            if prev is not None and compare(exp, prev) >= 0:
                raise ValueError("exponents must strictly decrease")
            prev = exp

    # ---- constructors -------------------------------------------------

    @staticmethod
    def from_int(n: int) -> "Ordinal":
        if n < 0:
            raise ValueError("ordinals are non-negative")
        if n == 0:
            return Ordinal()
        return Ordinal(((Ordinal(), n),))

    @staticmethod
    def omega_power(exponent: "Ordinal", coeff: int = 1) -> "Ordinal":
        return Ordinal(((exponent, coeff),))

    # ---- queries -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def as_int(self) -> int | None:
        """The natural number this ordinal denotes, or None if >= w."""
        if not self.terms:
            return 0
        if len(self.terms) == 1 and self.terms[0][0].is_zero():
            return self.terms[0][1]
        return None

    # ---- ordering ------------------------------------------------------

    def __lt__(self, other: "Ordinal") -> bool:
        return compare(self, other) < 0

    def __le__(self, other: "Ordinal") -> bool:
        return compare(self, other) <= 0

    def __gt__(self, other: "Ordinal") -> bool:
        return compare(self, other) > 0

    def __ge__(self, other: "Ordinal") -> bool:
        return compare(self, other) >= 0

    # ---- rendering -----------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exp, coeff in self.terms:
            if exp.is_zero():
                parts.append(str(coeff))
                continue
            if exp == ONE:
                base = "w"
            else:
                es = str(exp)
                # parenthesize unless the exponent reparses as one ^-chain atom
                atomic = exp.as_int() is not None or (
                    len(exp.terms) == 1 and exp.terms[0][1] == 1
                )
                base = f"w^{es}" if atomic else f"w^({es})"
            parts.append(base if coeff == 1 else f"{base}*{coeff}")
        return "+".join(parts)

    def __repr__(self) -> str:
        return f"Ordinal({self})"


def compare(a: Ordinal, b: Ordinal) -> int:
    """Total order on CNF: lexicographic on (exponent, coefficient) terms.

    Returns -1, 0 or 1.
    """
    for (ea, ca), (eb, cb) in zip(a.terms, b.terms):
        c = compare(ea, eb)
        if c:
            return c
        if ca != cb:
            return -1 if ca < cb else 1
    if len(a.terms) != len(b.terms):
        return -1 if len(a.terms) < len(b.terms) else 1
    return 0


def succ(a: Ordinal) -> Ordinal:
    """a + 1: bump the w^0 coefficient, or append a fresh unit term."""
    if a.terms and a.terms[-1][0].is_zero():
        exp, coeff = a.terms[-1]
        return Ordinal(a.terms[:-1] + ((exp, coeff + 1),))
    return Ordinal(a.terms + ((Ordinal(), 1),))


def classify(a: Ordinal) -> OrdKind:
    """Zero, successor (least exponent 0) or limit (least exponent > 0)."""
    if not a.terms:
        return OrdKind.ZERO
    if a.terms[-1][0].is_zero():
        return OrdKind.SUCCESSOR
    return OrdKind.LIMIT


ZERO = Ordinal.from_int(0)
ONE = Ordinal.from_int(1)
OMEGA = Ordinal.omega_power(ONE)
