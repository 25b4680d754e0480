"""Closed-form cardinalities of algebraic constructions.

Thin trace-emitting wrappers over the cardinal engine: monoid rings,
polynomial rings, formal power series and total rings of fractions.
Each wrapper records the headline counting rule before delegating, so a
trace reads as the full counting argument.
"""

from __future__ import annotations

from typing import Optional

from .cardinal import (
    ALEPH0, Cardinal, Cmp, DomainError, Finite, Mode, Unresolved, Value,
    _norm, _pow2, card_compare, card_mul, card_pow, is_finite, mul_str,
    pow_str, render,
)
from .trace import Trace, emit


def _require_nonzero_ring(r: Cardinal, op: str) -> None:
    if card_compare(r, Finite(2)) is Cmp.LESS:
        raise DomainError(f"{op} needs a ring with at least two elements")


def card_monoid_ring(r: Cardinal, m: Cardinal, mode: Mode = Mode.ZFC,
                     trace: Optional[Trace] = None) -> Value:
    """|R[M]|: finite-support functions M -> R under convolution."""
    r, m = _norm(r, mode), _norm(m, mode)
    _require_nonzero_ring(r, "card_monoid_ring")
    if m == Finite(0):
        raise DomainError("card_monoid_ring needs a monoid (an identity "
                          "element at least)")
    before = f"card_monoid_ring({render(r)}, {render(m)})"
    if is_finite(m):
        emit(trace, "T1-MONOID", before, pow_str(render(r), render(m)),
             note="finite monoid: all functions M -> R")
        return card_pow(r, m, mode, trace)
    emit(trace, "T1-MONOID", before, mul_str(render(r), render(m)))
    return card_mul(r, m, mode, trace)


def card_poly_ring(r: Cardinal, s: Cardinal, mode: Mode = Mode.ZFC,
                   trace: Optional[Trace] = None) -> Value:
    """|R[x_k : k in S]| = aleph(0) * |R| * |S| for nonzero R, |S| >= 1."""
    r, s = _norm(r, mode), _norm(s, mode)
    _require_nonzero_ring(r, "card_poly")
    if s == Finite(0):
        raise DomainError("card_poly needs at least one variable")
    before = f"card_poly({render(r)}, {render(s)})"
    emit(trace, "C-POLY", before,
         mul_str(mul_str(render(ALEPH0), render(r)), render(s)))
    a = card_mul(ALEPH0, r, mode, trace)
    if isinstance(a, Unresolved):  # pragma: no cover - aleph(0)*r is decided
        return a
    return card_mul(a, s, mode, trace)


def card_power_series(r: Cardinal, mode: Mode = Mode.ZFC,
                      trace: Optional[Trace] = None) -> Value:
    """|R[[x]]|: 2^aleph(0) for finite nonzero R, |R|^aleph(0) otherwise."""
    r = _norm(r, mode)
    _require_nonzero_ring(r, "card_powser")
    before = f"card_powser({render(r)})"
    if is_finite(r):
        emit(trace, "R-PS", before, pow_str("2", render(ALEPH0)),
             note="finite coefficient ring")
        return _pow2(ALEPH0, mode, trace)
    emit(trace, "R-PS", before, pow_str(render(r), render(ALEPH0)))
    return card_pow(r, ALEPH0, mode, trace)


def card_fraction_ring(r: Cardinal, mode: Mode = Mode.ZFC,
                       trace: Optional[Trace] = None) -> Cardinal:
    """|T(R)| = |R| for every commutative ring with at least one element."""
    r = _norm(r, mode)
    if r == Finite(0):
        raise DomainError("card_tfr needs a ring (at least the zero element)")
    before = f"card_tfr({render(r)})"
    if is_finite(r):
        emit(trace, "L6-ZERODIM", before, render(r))
    else:
        emit(trace, "L5-FRAC", before, render(r))
    return r
