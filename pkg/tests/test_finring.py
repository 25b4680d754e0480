"""Finite ring machinery: construction, partitions, ideals, fractions,
localization, depth, Baer's criterion, idealizations, monoid rings."""

import pytest

from cardalg.finring import (CapExceeded, EffectiveInt, EffectivePolyFq,
                             IdealizeSpec, MONOIDS, MonoidRingSpec,
                             MonoidTable, PolyQuot, Product, RingError, Zmod,
                             annihilator, cyclic_module, depth_zero,
                             gen_module_surjection, hom_criterion,
                             idealization_subring_law, idealize, ideals,
                             is_balanced, is_local, is_self_injective,
                             local_decomposition, maximal_ideals, monoid_ring,
                             ring_build, spec_str, total_fraction_ring,
                             units_and_zero_divisors, unital_subrings)


def zmod_units_oracle(n: int) -> set:
    """Independent modular-arithmetic scan (no ring tables)."""
    return {a for a in range(n) if any(a * b % n == 1 for b in range(n))}


def zmod_zds_oracle(n: int) -> set:
    return {a for a in range(n)
            if any(b != 0 and a * b % n == 0 for b in range(n))}


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------

def test_build_examples():
    assert ring_build(Zmod(6)).order == 6
    assert ring_build(Product((Zmod(4), Zmod(9)))).order == 36
    assert ring_build(IdealizeSpec(Zmod(2), (2, 2))).order == 8


def test_build_verification_flag():
    for spec in (Zmod(12), Product((Zmod(2), Zmod(3))),
                 PolyQuot(2, (1, 1, 1)), IdealizeSpec(Zmod(4), (2,)),
                 MonoidRingSpec(Zmod(2), "C2")):
        ring_build(spec, verify=True)  # exhaustive axiom check on small rings


def test_build_errors():
    with pytest.raises(RingError):
        ring_build(Zmod(1))
    with pytest.raises(RingError):
        ring_build(PolyQuot(4, (1, 1)))  # non-prime characteristic
    with pytest.raises(RingError):
        ring_build(PolyQuot(3, (1, 2)))  # non-monic
    with pytest.raises(CapExceeded):
        ring_build(Zmod(90), cap=64)
    with pytest.raises(RingError):
        cyclic_module(ring_build(Zmod(2)), (4,))  # 4 does not divide 2


def test_noncommutative_monoid_rejected():
    # left-zero semigroup with an identity adjoined: x*y = x for x,y != e
    table = ((0, 1, 2), (1, 1, 1), (2, 2, 2))
    mt = MonoidTable("LZ", table, 0)
    assert not mt.is_commutative()
    with pytest.raises(RingError, match="commutative"):
        monoid_ring(ring_build(Zmod(2)), mt)


def test_polyquot_field():
    f4 = ring_build(PolyQuot(2, (1, 1, 1)))  # x^2+x+1 irreducible
    units, zds = units_and_zero_divisors(f4)
    assert len(units) == 3 and zds == {f4.zero}
    nonfield = ring_build(PolyQuot(2, (0, 0, 1)))  # x^2
    assert len(units_and_zero_divisors(nonfield)[0]) == 2


# ---------------------------------------------------------------------------
# partitions, balancedness
# ---------------------------------------------------------------------------

def test_units_and_zero_divisors_examples():
    r = ring_build(Zmod(12))
    units, zds = units_and_zero_divisors(r)
    assert sorted(units) == [1, 5, 7, 11]
    assert sorted(zds) == [0, 2, 3, 4, 6, 8, 9, 10]
    r7 = ring_build(Zmod(7))
    units7, zds7 = units_and_zero_divisors(r7)
    assert units7 == frozenset(range(1, 7)) and zds7 == {0}


@pytest.mark.parametrize("n", [2, 5, 6, 12, 30, 64, 97])
def test_partition_matches_modular_oracle(n):
    r = ring_build(Zmod(n))
    units, zds = units_and_zero_divisors(r)
    assert set(units) == zmod_units_oracle(n)
    assert set(zds) == zmod_zds_oracle(n)


def test_is_balanced():
    assert is_balanced(ring_build(Zmod(12))) == (True, None)
    assert is_balanced(ring_build(Zmod(7)))[0] is True
    ok, _ = is_balanced(ring_build(Product((Zmod(4), Zmod(9)))))
    assert ok


# ---------------------------------------------------------------------------
# ideals, annihilators, localization, depth
# ---------------------------------------------------------------------------

def test_ideals_examples():
    r6 = ring_build(Zmod(6))
    idl = ideals(r6)
    assert [sorted(i.elements) for i in idl] == [
        [0], [0, 3], [0, 2, 4], [0, 1, 2, 3, 4, 5]]
    assert [i.maximal for i in idl] == [False, True, True, False]
    r7 = ring_build(Zmod(7))
    idl7 = ideals(r7)
    assert len(idl7) == 2 and idl7[0].maximal is True  # the zero ideal
    cx = ring_build(IdealizeSpec(Zmod(2), (2, 2)))
    maxes = [i for i in ideals(cx) if i.maximal]
    assert len(maxes) == 1 and len(maxes[0].elements) == 4  # 0 (+) M


def test_annihilator_examples():
    r12 = ring_build(Zmod(12))
    assert sorted(annihilator(r12, [4]).elements) == [0, 3, 6, 9]
    assert len(annihilator(r12, [0]).elements) == 12
    assert annihilator(ring_build(Zmod(7)), [3]).elements == {0}


def test_local_decomposition_examples():
    assert sorted(f.order for f in
                  local_decomposition(ring_build(Zmod(12)))) == [3, 4]
    assert [f.order for f in local_decomposition(ring_build(Zmod(8)))] == [8]
    two = local_decomposition(ring_build(Product((Zmod(2), Zmod(2)))))
    assert [f.order for f in two] == [2, 2]


def test_depth_zero_examples():
    assert depth_zero(ring_build(Zmod(4))) is True
    assert depth_zero(ring_build(Zmod(7))) is True
    with pytest.raises(RingError):
        depth_zero(ring_build(Zmod(6)))  # not local


def test_is_local():
    assert is_local(ring_build(Zmod(8)))[0] is True
    assert is_local(ring_build(Zmod(6)))[0] is False


@pytest.mark.parametrize("spec", [
    Zmod(12), Zmod(30), Product((Zmod(4), Zmod(9))), Zmod(16),
    PolyQuot(2, (0, 0, 1)), IdealizeSpec(Zmod(2), (2, 2)),
])
def test_maximal_ideals_fast_path_matches_enumeration(spec):
    r = ring_build(spec)
    fast = set(maximal_ideals(r))
    slow = {i.elements for i in ideals(r) if i.maximal}
    assert fast == slow


def test_hom_criterion_on_finite_rings():
    for spec in (Zmod(12), Zmod(7), Product((Zmod(4), Zmod(9))),
                 IdealizeSpec(Zmod(2), (2, 2))):
        assert hom_criterion(ring_build(spec))


# ---------------------------------------------------------------------------
# total ring of fractions
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("spec", [
    Zmod(6), Zmod(7), Product((Zmod(4), Zmod(9))), PolyQuot(2, (0, 0, 1)),
])
def test_total_fraction_ring(spec):
    r = ring_build(spec)
    t, canonical, is_iso = total_fraction_ring(r)
    assert is_iso and t.order == r.order
    assert len(set(canonical)) == r.order
    # dual route: the generic pair-partition construction agrees
    t2, canonical2, iso2 = total_fraction_ring(r, method="generic")
    assert iso2 and t2.order == r.order
    # canonical maps compose to the same bijection structure
    for a in range(r.order):
        for b in range(r.order):
            assert canonical2[r.add[a][b]] == \
                t2.add[canonical2[a]][canonical2[b]]
            assert canonical2[r.mul[a][b]] == \
                t2.mul[canonical2[a]][canonical2[b]]


# ---------------------------------------------------------------------------
# self-injectivity (Baer)
# ---------------------------------------------------------------------------

def test_zmod_self_injective_up_to_30():
    for n in range(2, 31):
        ok, counter = is_self_injective(ring_build(Zmod(n)))
        assert ok, f"Z/{n} reported not self-injective: {counter}"


def test_idealization_counterexample():
    cx = ring_build(IdealizeSpec(Zmod(2), (2, 2)))
    ok, counter = is_self_injective(cx)
    assert not ok
    assert counter is not None and "ideal" in counter and "map" in counter
    # the offending map lives on an ideal inside 0 (+) M
    assert all(name.startswith("(0,") for name in counter["ideal"])


def test_self_injective_cap():
    with pytest.raises(CapExceeded):
        is_self_injective(ring_build(Zmod(97)))


def test_field_and_products_self_injective():
    for spec in (Zmod(7), PolyQuot(2, (1, 1, 1)),
                 Product((Zmod(4), Zmod(9)))):
        assert is_self_injective(ring_build(spec))[0]


# ---------------------------------------------------------------------------
# idealization laws, unital subrings
# ---------------------------------------------------------------------------

def test_idealize_identity_and_square_zero():
    base = ring_build(Zmod(3))
    mod = cyclic_module(base, (3,))
    r = idealize(base, mod)
    one = r.one
    for x in range(r.order):
        assert r.mul[x][one] == x  # (r,x) * (1,0) = (r,x)
    # (0,x) * (0,y) = (0,0)
    zero_part = [b * mod.size + m for b in [0] for m in range(mod.size)]
    for x in zero_part:
        for y in zero_part:
            assert r.mul[x][y] == r.zero


def test_idealize_is_dual_numbers_for_z2():
    r = idealize(ring_build(Zmod(2)), cyclic_module(ring_build(Zmod(2)), (2,)))
    dual = ring_build(PolyQuot(2, (0, 0, 1)))  # Z/2[x]/(x^2)
    assert r.order == dual.order == 4
    # same number of units and nilpotents: isomorphic tables up to naming
    assert len(units_and_zero_divisors(r)[0]) == \
        len(units_and_zero_divisors(dual)[0])
    assert sorted(len(i.elements) for i in ideals(r)) == \
        sorted(len(i.elements) for i in ideals(dual))


def test_unital_subrings_examples():
    cx = ring_build(IdealizeSpec(Zmod(2), (2, 2)))
    subs = unital_subrings(cx)
    assert len(subs) == 5  # one per subgroup of (Z/2)^2
    law, subrings, subgroups_found = idealization_subring_law(cx)
    assert law and len(subrings) == 5 and len(subgroups_found) == 5
    small = ring_build(IdealizeSpec(Zmod(3), (3,)))
    assert len(unital_subrings(small)) == 2


def test_unital_subring_law_base_times_h():
    law, subs, _ = idealization_subring_law(
        ring_build(IdealizeSpec(Zmod(4), (4, 2))))
    assert law
    # base x {0} is always one of them
    r = ring_build(IdealizeSpec(Zmod(4), (4, 2)))
    base_only = frozenset(b * 8 for b in range(4))
    assert base_only in subs


# ---------------------------------------------------------------------------
# monoid rings, module surjection
# ---------------------------------------------------------------------------

def test_monoid_ring_counts():
    base = ring_build(Zmod(3))
    assert monoid_ring(base, MONOIDS["C1"]).order == 3
    assert monoid_ring(base, MONOIDS["C2"]).order == 9
    assert monoid_ring(ring_build(Zmod(2)), MONOIDS["C2"]).order == 4
    b2 = monoid_ring(ring_build(Zmod(2)), MONOIDS["B2"])
    assert b2.order == 4


def test_gen_module_surjection_examples():
    base4 = ring_build(Zmod(4))
    m = cyclic_module(base4, (2,))
    assert gen_module_surjection(base4, m, [1]) is True
    base6 = ring_build(Zmod(6))
    m23 = cyclic_module(base6, (2, 3))
    gen = 1 * 3 + 1  # the element (1,1)
    assert gen_module_surjection(base6, m23, [gen]) is True
    trivial = cyclic_module(base4, (1,))
    assert gen_module_surjection(base4, trivial, []) is True
    with pytest.raises(RingError):
        gen_module_surjection(base6, m23, [3])  # (1,0) does not generate


# ---------------------------------------------------------------------------
# effective rings
# ---------------------------------------------------------------------------

def test_effective_int():
    zz = EffectiveInt()
    assert zz.is_unit(1) and zz.is_unit(-1) and not zz.is_unit(2)
    assert zz.is_zero_divisor(0) and not zz.is_zero_divisor(5)
    assert zz.balanced() == (False, "2")
    assert zz.annihilator_is_zero(2)
    assert zz.depth_zero_at(3) is False
    rep = zz.check_report()
    assert rep["balanced"] is False and rep["witness"] == "2"
    assert rep["hom_criterion"] is False and rep["depth_zero_all"] is False


def test_effective_poly():
    fq = EffectivePolyFq(2)
    assert fq.is_unit((1,)) and not fq.is_unit((0, 1))
    assert fq.is_zero_divisor((0,)) and not fq.is_zero_divisor((1, 1))
    assert fq.balanced() == (False, "x")
    with pytest.raises(RingError):
        EffectivePolyFq(4)


def test_spec_rendering():
    assert spec_str(Zmod(6)) == "Z/6"
    assert spec_str(Product((Zmod(4), Zmod(9)))) == "prod(Z/4, Z/9)"
    assert spec_str(PolyQuot(2, (1, 1, 1))) == "GF(2)[x]/(x^2 + x + 1)"
    assert spec_str(IdealizeSpec(Zmod(2), (2, 2))) == "idealize(Z/2, [2, 2])"
