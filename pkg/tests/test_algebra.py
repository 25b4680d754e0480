"""Counting formulas for monoid rings, polynomials, power series, fractions."""

import pytest

from cardalg.algebra import (card_fraction_ring, card_monoid_ring,
                             card_poly_ring, card_power_series)
from cardalg.cardinal import (ALEPH0, Aleph, DomainError, Finite, Mode,
                              PowSet, card_directsum)
from cardalg.finring import MONOIDS, Zmod, monoid_ring, ring_build
from cardalg.ordinal import Ordinal, succ

A = lambda n: Aleph(Ordinal.from_int(n))
AW = Aleph(Ordinal.omega_power(Ordinal.from_int(1)))
F = Finite


def test_monoid_ring_finite_branch_against_construction():
    # oracle: exhaustive count of functions M -> R via the table builder
    built = monoid_ring(ring_build(Zmod(2)), MONOIDS["C3"])
    assert built.order == 8
    assert card_monoid_ring(F(2), F(3)) == F(built.order)


def test_monoid_ring_examples():
    assert card_monoid_ring(F(2), ALEPH0) == ALEPH0
    assert card_monoid_ring(PowSet(ALEPH0), ALEPH0) == PowSet(ALEPH0)
    with pytest.raises(DomainError):
        card_monoid_ring(F(1), F(3))
    with pytest.raises(DomainError):
        card_monoid_ring(F(2), F(0))


def test_poly_ring_examples():
    assert card_poly_ring(ALEPH0, F(1)) == ALEPH0
    assert card_poly_ring(F(2), A(2)) == A(2)
    assert card_poly_ring(PowSet(ALEPH0), F(5)) == PowSet(ALEPH0)
    with pytest.raises(DomainError):
        card_poly_ring(F(0), F(1))
    with pytest.raises(DomainError):
        card_poly_ring(F(2), F(0))


def test_poly_ring_matches_monoid_route():
    # R[x_k : k in S] counted as the monoid ring over the exponent monoid
    for r, s in [(F(2), F(1)), (F(2), A(1)), (ALEPH0, A(0)),
                 (PowSet(ALEPH0), F(2)), (A(2), A(0))]:
        exponents = card_directsum(ALEPH0, s)
        assert card_poly_ring(r, s) == card_monoid_ring(r, exponents)


def test_power_series_examples():
    assert card_power_series(F(2)) == PowSet(ALEPH0)
    assert card_power_series(PowSet(ALEPH0)) == PowSet(ALEPH0)
    assert card_power_series(AW, Mode.GCH) == Aleph(succ(AW.index))
    with pytest.raises(DomainError):
        card_power_series(F(1))


def test_fraction_ring_examples():
    assert card_fraction_ring(F(12)) == F(12)
    assert card_fraction_ring(ALEPH0) == ALEPH0
    assert card_fraction_ring(A(3)) == A(3)
    with pytest.raises(DomainError):
        card_fraction_ring(F(0))


def test_fraction_ring_matches_construction():
    from cardalg.finring import total_fraction_ring
    for n in (6, 7, 12):
        r = ring_build(Zmod(n))
        t, _, _ = total_fraction_ring(r)
        assert card_fraction_ring(F(n)) == F(t.order)
