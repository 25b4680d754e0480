"""Symbolic cardinal arithmetic under two axiom modes.

Terms are exact naturals, alephs indexed by ordinals below epsilon_0,
power sets ``2^k`` and (ZFC mode only) unreduced exponents ``b^e``.  The
rewrite rules are the classical consequences of the idempotency of
infinite cardinals: absorption of sums and products into the maximum,
the exponent collapse ``b^e = 2^e`` for ``2 <= b <= e``, Cantor's strict
inequality ``k < 2^k``, the countable-cofinality instance of Koenig's
inequality, and closed forms for indexed families, finite subsets and
finite-support direct sums.

ZFC mode rewrites with exactly that rule set and reports whatever it
does not decide as unknown (an :class:`Unresolved` value carrying
certified bounds and candidates).  GCH mode additionally collapses
``2^aleph(a)`` to ``aleph(a+1)``, which makes every comparison total and
every exponent computable.

All functions are pure; traces are built per evaluation and never
shared, so evaluations may run concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple, Union

from .ordinal import OrdKind, Ordinal, classify, compare as ord_compare, succ
from .trace import Trace, annotate, emit


class Mode(Enum):
    ZFC = "zfc"
    GCH = "gch"


class Cmp(Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    UNKNOWN = "unknown"


class DomainError(ValueError):
    """An operation was applied outside its stated precondition."""


# ---------------------------------------------------------------------------
# terms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Finite:
    n: int

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 0:
            raise ValueError(f"finite cardinal {self.n!r} must be a natural")


@dataclass(frozen=True)
class Aleph:
    index: Ordinal


@dataclass(frozen=True)
class PowSet:
    base: "Cardinal"


@dataclass(frozen=True)
class Exp:
    base: "Cardinal"
    exponent: "Cardinal"


Cardinal = Union[Finite, Aleph, PowSet, Exp]


@dataclass(frozen=True)
class Unresolved:
    """A value the ZFC rules leave undecided.

    ``candidates`` lists the possible exact values when they form a known
    finite set (an undecided maximum); ``lo``/``hi`` are certified bounds.
    """

    lo: Optional[Cardinal] = None
    hi: Optional[Cardinal] = None
    lo_strict: bool = False
    hi_strict: bool = False
    candidates: Tuple[Cardinal, ...] = ()


Value = Union[Finite, Aleph, PowSet, Exp, Unresolved]

ALEPH0 = Aleph(Ordinal.from_int(0))


def is_finite(c: Cardinal) -> bool:
    return isinstance(c, Finite)


def is_infinite(c: Cardinal) -> bool:
    # PowSet and Exp only ever wrap infinite terms, by construction.
    return not isinstance(c, Finite)


def cof_is_countable(c: Cardinal) -> bool:
    """True when c is an aleph with limit index.

    Every limit index below epsilon_0 is a countable ordinal, so such
    alephs have cofinality aleph(0); zero and successor indices give
    regular alephs.
    """
    return isinstance(c, Aleph) and classify(c.index) is OrdKind.LIMIT


# ---------------------------------------------------------------------------
# rendering (canonical text forms; the parser in exprlang round-trips them)
# ---------------------------------------------------------------------------

def render(v: Value) -> str:
    if isinstance(v, Finite):
        return str(v.n)
    if isinstance(v, Aleph):
        return f"aleph({v.index})"
    if isinstance(v, PowSet):
        return f"2^{_pow_operand(v.base)}"
    if isinstance(v, Exp):
        return f"exp({render(v.base)}, {render(v.exponent)})"
    return "unknown"


def _toplevel_ops(s: str) -> set:
    """Operators outside parentheses: what the parser would see first."""
    depth = 0
    ops = set()
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif depth == 0 and ch in "+*^":
            ops.add(ch)
    return ops


def _pow_operand(c: Cardinal) -> str:
    # right operand of '^': chained '^' parses right-associatively, only
    # sums and products need parentheses
    s = render(c)
    return f"({s})" if _toplevel_ops(s) & {"+", "*"} else s


def mul_str(a: str, b: str) -> str:
    wa = f"({a})" if "+" in _toplevel_ops(a) else a
    wb = f"({b})" if "+" in _toplevel_ops(b) else b
    return f"{wa} * {wb}"


def add_str(a: str, b: str) -> str:
    return f"{a} + {b}"


def pow_str(a: str, b: str) -> str:
    wa = f"({a})" if _toplevel_ops(a) else a  # left of ^ must be atomic
    wb = f"({b})" if _toplevel_ops(b) & {"+", "*"} else b
    return f"{wa}^{wb}"


# ---------------------------------------------------------------------------
# GCH normalization
# ---------------------------------------------------------------------------

def gch_normalize(c: Cardinal) -> Cardinal:
    """Reduce a term to the GCH normal form: Finite or Aleph only."""
    if isinstance(c, Finite) or isinstance(c, Aleph):
        return c
    if isinstance(c, PowSet):
        base = gch_normalize(c.base)
        if isinstance(base, Finite):
            return Finite(2 ** base.n)
        return Aleph(succ(base.index))
    if isinstance(c, Exp):
        return _gch_pow(gch_normalize(c.base), gch_normalize(c.exponent))
    raise TypeError(f"not a cardinal term: {c!r}")


def _gch_pow(b: Cardinal, e: Cardinal) -> Cardinal:
    """b^e with b, e in GCH normal form (Finite or Aleph)."""
    if e == Finite(0):
        return Finite(1)
    if b == Finite(0):
        return Finite(0)
    if b == Finite(1):
        return Finite(1)
    if isinstance(b, Finite) and isinstance(e, Finite):
        return Finite(b.n ** e.n)
    if isinstance(e, Finite):  # infinite base, finite exponent >= 1
        return b
    # e infinite
    if isinstance(b, Finite):  # 2 <= b < aleph(0) <= e
        return Aleph(succ(e.index))
    assert isinstance(b, Aleph) and isinstance(e, Aleph)
    c = ord_compare(b.index, e.index)
    if c <= 0:  # b <= e: b^e = 2^e = e+
        return Aleph(succ(e.index))
    # b > e: regular base is untouched, countable-cofinality base steps up
    if classify(b.index) is OrdKind.LIMIT:
        return Aleph(succ(b.index))
    return b


# ---------------------------------------------------------------------------
# comparison
# ---------------------------------------------------------------------------

def _koenig_strict(e: Exp) -> bool:
    # strict lower bound base < base^exp, recorded only for the
    # countable-cofinality base with exponent exactly aleph(0)
    return cof_is_countable(e.base) and e.exponent == ALEPH0


def _known_leq(a: Cardinal, b: Cardinal) -> bool:
    """Certified a <= b from the structural rules (ZFC)."""
    if a == b:
        return True
    if isinstance(a, Finite):
        return a.n <= b.n if isinstance(b, Finite) else True
    if isinstance(b, Finite):
        return False
    if isinstance(a, Aleph) and isinstance(b, Aleph):
        return ord_compare(a.index, b.index) <= 0
    if isinstance(b, PowSet):
        if _known_leq(a, b.base):  # a <= base < 2^base
            return True
        if isinstance(a, PowSet) and _known_leq(a.base, b.base):
            return True
        # 2^aleph(i) >= aleph(i+1): alephs up to the successor index fit below
        if isinstance(a, Aleph) and isinstance(b.base, Aleph):
            if ord_compare(a.index, succ(b.base.index)) <= 0:
                return True
    if isinstance(b, Exp):
        if _known_leq(a, b.base):  # base <= base^e
            return True
        if _known_leq(a, PowSet(b.exponent)):  # 2^e <= b^e
            return True
        if isinstance(a, Exp) and _known_leq(a.base, b.base) \
                and _known_leq(a.exponent, b.exponent):
            return True
    if isinstance(a, Exp):
        # a = base^e <= 2^base since e <= base in normal form
        if _known_leq(PowSet(a.base), b):
            return True
    if isinstance(a, PowSet) and isinstance(b, Exp):
        if _known_leq(a.base, b.exponent):  # 2^x <= 2^e <= base^e
            return True
    return False


def _known_lt(a: Cardinal, b: Cardinal) -> bool:
    """Certified a < b from the structural rules (ZFC)."""
    if isinstance(a, Finite):
        return a.n < b.n if isinstance(b, Finite) else True
    if isinstance(b, Finite):
        return False
    if isinstance(a, Aleph) and isinstance(b, Aleph):
        return ord_compare(a.index, b.index) < 0
    if isinstance(b, PowSet):
        if _known_leq(a, b.base):  # Cantor: a <= base < 2^base
            return True
    if isinstance(b, Exp):
        if _known_lt(a, b.base):
            return True
        if _koenig_strict(b) and _known_leq(a, b.base):
            return True
        if _known_lt(a, PowSet(b.exponent)):  # a < 2^e <= b^e
            return True
    if isinstance(a, Exp):
        if _known_lt(PowSet(a.base), b):  # a <= 2^base < b
            return True
    return False


def card_compare(a: Cardinal, b: Cardinal, mode: Mode = Mode.ZFC) -> Cmp:
    """Trichotomy where the rules decide it; Unknown (ZFC only) elsewhere."""
    if mode is Mode.GCH:
        a, b = gch_normalize(a), gch_normalize(b)
    if a == b:
        return Cmp.EQUAL
    if _known_lt(a, b):
        return Cmp.LESS
    if _known_lt(b, a):
        return Cmp.GREATER
    if _known_leq(a, b) and _known_leq(b, a):
        return Cmp.EQUAL
    return Cmp.UNKNOWN


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------

def _norm(c: Cardinal, mode: Mode) -> Cardinal:
    return gch_normalize(c) if mode is Mode.GCH else c


def _unknown_max(a: Cardinal, b: Cardinal, op: str,
                 trace: Optional[Trace]) -> Unresolved:
    annotate(trace, "R-MONO",
             f"comparison undecided; result is max({render(a)}, {render(b)})",
             at=f"{render(a)} {op} {render(b)}")
    return Unresolved(candidates=tuple(sorted((a, b), key=render)))


def _known_max(a: Cardinal, b: Cardinal) -> Optional[Cardinal]:
    """max(a, b) when one side is certifiably <= the other.

    The maximum can be decided by a one-sided bound even when the strict
    order is not (e.g. 2^aleph(0) <= 2^aleph(3) by monotonicity).
    """
    la, lb = _known_leq(a, b), _known_leq(b, a)
    if la and lb:  # semantically equal: pick the canonical rendering
        return max(a, b, key=render)
    if la:
        return b
    if lb:
        return a
    return None


def card_add(a: Cardinal, b: Cardinal, mode: Mode = Mode.ZFC,
             trace: Optional[Trace] = None) -> Value:
    a, b = _norm(a, mode), _norm(b, mode)
    before = add_str(render(a), render(b))
    if isinstance(a, Finite) and isinstance(b, Finite):
        r = Finite(a.n + b.n)
        emit(trace, "R-FINITE", before, render(r))
        return r
    r = _known_max(a, b)
    if r is None:
        return _unknown_max(a, b, "+", trace)
    emit(trace, "R-ADD", before, render(r))
    return r


def card_mul(a: Cardinal, b: Cardinal, mode: Mode = Mode.ZFC,
             trace: Optional[Trace] = None) -> Value:
    a, b = _norm(a, mode), _norm(b, mode)
    before = mul_str(render(a), render(b))
    if a == Finite(0) or b == Finite(0):
        emit(trace, "R-ZERO", before, "0")
        return Finite(0)
    if isinstance(a, Finite) and isinstance(b, Finite):
        r = Finite(a.n * b.n)
        emit(trace, "R-FINITE", before, render(r))
        return r
    if a == Finite(1):
        emit(trace, "R-ONE", before, render(b))
        return b
    if b == Finite(1):
        emit(trace, "R-ONE", before, render(a))
        return a
    if a == b:
        emit(trace, "R-IDEM", before, render(a))
        return a
    r = _known_max(a, b)
    if r is None:
        return _unknown_max(a, b, "*", trace)
    emit(trace, "R-MUL", before, render(r))
    return r


def _pow2(e: Cardinal, mode: Mode, trace: Optional[Trace]) -> Cardinal:
    """2^e for infinite e, in the mode's normal form."""
    if mode is Mode.GCH:
        r = Aleph(succ(e.index))
        emit(trace, "R-GCH-EXP", pow_str("2", render(e)), render(r))
        return r
    return PowSet(e)


def card_pow(base: Cardinal, exp: Cardinal, mode: Mode = Mode.ZFC,
             trace: Optional[Trace] = None) -> Value:
    base, exp = _norm(base, mode), _norm(exp, mode)
    before = pow_str(render(base), render(exp))
    if exp == Finite(0):
        emit(trace, "R-ONE", before, "1")
        return Finite(1)
    if base == Finite(0):
        emit(trace, "R-ZERO", before, "0")
        return Finite(0)
    if base == Finite(1):
        emit(trace, "R-ONE", before, "1")
        return Finite(1)
    if exp == Finite(1):
        emit(trace, "R-ONE", before, render(base))
        return base
    if isinstance(base, Finite) and isinstance(exp, Finite):
        r = Finite(base.n ** exp.n)
        emit(trace, "R-FINITE", before, render(r))
        return r
    if isinstance(exp, Finite):  # infinite base, finite exponent >= 2
        emit(trace, "R-IDEM", before, render(base),
             note=f"iterated {exp.n}-fold square absorption")
        return base
    # exponent is infinite from here on
    if mode is Mode.GCH:
        r = _gch_pow(base, exp)
        emit(trace, "R-GCH-EXP", before, render(r))
        return r
    if isinstance(base, Finite):  # 2 <= base <= exp
        r = PowSet(exp)
        if base.n > 2:
            emit(trace, "R-EXP-SQUEEZE", before, render(r))
        return r
    if isinstance(base, PowSet):  # (2^c)^e = 2^(c*e)
        inner = mul_str(render(base.base), render(exp))
        emit(trace, "R-EXP-PROD", before, f"2^({inner})")
        m = card_mul(base.base, exp, mode, trace)
        if isinstance(m, Unresolved):
            return Unresolved(candidates=tuple(PowSet(c) for c in m.candidates),
                              lo=PowSet(m.lo) if m.lo else None,
                              hi=PowSet(m.hi) if m.hi else None)
        return PowSet(m)
    if isinstance(base, Exp):  # (b^c)^e = b^(c*e)
        inner = mul_str(render(base.exponent), render(exp))
        emit(trace, "R-EXP-PROD", before,
             f"exp({render(base.base)}, {inner})")
        m = card_mul(base.exponent, exp, mode, trace)
        if isinstance(m, Unresolved):
            return Unresolved(lo=base.base, candidates=())
        return card_pow(base.base, m, mode, trace)
    # base is an aleph
    if _known_leq(base, exp):
        r = PowSet(exp)
        emit(trace, "R-EXP-SQUEEZE", before, render(r))
        return r
    if _known_lt(exp, base):
        r = Exp(base, exp)
        emit(trace, "R-EXP-SMALL", before, render(r),
             note=f"candidates {{{render(base)}, 2^{_pow_operand(base)}}}")
        if _koenig_strict(r):
            annotate(trace, "R-KONIG",
                     f"strictly above {render(base)}: the base has countable "
                     f"cofinality", at=render(r))
        return r
    annotate(trace, "R-MONO",
             f"base/exponent comparison undecided; result >= {render(base)} "
             f"and >= 2^{_pow_operand(exp)}", at=before)
    return Unresolved(lo=base, lo_strict=False)


def card_sum_family(index: Cardinal, lo: Cardinal, hi: Cardinal,
                    mode: Mode = Mode.ZFC,
                    trace: Optional[Trace] = None) -> Value:
    """Cardinality of a disjoint union of |index|-many sets of size lo..hi."""
    index, lo, hi = _norm(index, mode), _norm(lo, mode), _norm(hi, mode)
    if not is_infinite(index):
        raise DomainError("sum_family needs an infinite index set")
    if lo == Finite(0):
        raise DomainError("sum_family members must be nonempty (lo >= 1)")
    if _known_lt(hi, lo):
        raise DomainError("sum_family range has lo > hi")
    before = f"card_sum_family({render(index)}, {render(lo)}, {render(hi)})"
    if lo == hi:
        emit(trace, "L1-SUM", before, mul_str(render(lo), render(index)))
        return card_mul(lo, index, mode, trace)
    if _known_leq(hi, index):
        emit(trace, "L2-SUM-BOUND", before, render(index))
        return index
    upper = card_mul(hi, index, mode, None)
    hi_bound = upper if not isinstance(upper, Unresolved) else None
    annotate(trace, "R-MONO",
             f"family sizes exceed the index set; bounded by "
             f"[{render(index)}, "
             f"{render(hi_bound) if hi_bound is not None else 'unknown'}]",
             at=before)
    return Unresolved(lo=index, hi=hi_bound)


def card_prod_family(index: Cardinal, lo: Cardinal, hi: Cardinal,
                     mode: Mode = Mode.ZFC,
                     trace: Optional[Trace] = None) -> Value:
    """Cardinality of a product of |index|-many sets of size lo..hi."""
    index, lo, hi = _norm(index, mode), _norm(lo, mode), _norm(hi, mode)
    if not is_infinite(index):
        raise DomainError("prod_family needs an infinite index set")
    if _known_lt(hi, lo):
        raise DomainError("prod_family range has lo > hi")
    before = f"card_prod_family({render(index)}, {render(lo)}, {render(hi)})"
    if lo == hi:
        emit(trace, "L1-PROD", before, pow_str(render(lo), render(index)))
        return card_pow(lo, index, mode, trace)
    if _known_lt(lo, Finite(2)):
        raise DomainError("prod_family with varying sizes needs lo >= 2")
    if _known_leq(hi, index):
        emit(trace, "L-PROD-BOUND", before,
             pow_str("2", render(index)))
        return _pow2(index, mode, trace)
    lo_bound = _pow2(index, mode, None) if mode is Mode.ZFC \
        else Aleph(succ(index.index))
    upper = card_pow(hi, index, mode, None)
    hi_bound = upper if not isinstance(upper, Unresolved) else None
    annotate(trace, "R-MONO",
             f"factor sizes exceed the index set; bounded by "
             f"[2^{_pow_operand(index)}, "
             f"{render(hi_bound) if hi_bound is not None else 'unknown'}]",
             at=before)
    return Unresolved(lo=lo_bound, hi=hi_bound)


def card_finsets(s: Cardinal, mode: Mode = Mode.ZFC,
                 trace: Optional[Trace] = None) -> Cardinal:
    """Cardinality of the set of finite subsets of a set of size s."""
    s = _norm(s, mode)
    before = f"card_finsets({render(s)})"
    if isinstance(s, Finite):
        r = Finite(2 ** s.n)
        emit(trace, "L4-FIN", before, render(r),
             note="finite: all subsets are finite")
        return r
    emit(trace, "L4-FIN", before, render(s))
    return s


def card_directsum(m: Cardinal, s: Cardinal, mode: Mode = Mode.ZFC,
                   trace: Optional[Trace] = None) -> Value:
    """Cardinality of an |s|-fold finite-support direct sum of copies of m."""
    m, s = _norm(m, mode), _norm(s, mode)
    before = f"card_dsum({render(m)}, {render(s)})"
    if isinstance(s, Finite) or m in (Finite(0), Finite(1)):
        emit(trace, "L3-DSUM", before, pow_str(render(m), render(s)),
             note="finite index or degenerate member: full product")
        return card_pow(m, s, mode, trace)
    emit(trace, "L3-DSUM", before, mul_str(render(m), render(s)))
    return card_mul(m, s, mode, trace)
