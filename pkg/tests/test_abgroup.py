"""Finite abelian groups and the countable classification."""

import random

import pytest

from cardalg.abgroup import (Classification, FinAbGroup, FiniteAtom, FreeAtom,
                             GroupError, PruferAtom,
                             cardinality, classify, group_str,
                             has_proper_same_card_subgroup,
                             prufer_truncation_check,
                             same_card_subgroup_witness, subgroups,
                             validate_witness)
from cardalg.cardinal import ALEPH0, Cmp, Finite, card_compare
from cardalg.minilang import parse_group_spec


def gaussian_subgroup_count_f2(k: int) -> int:
    """Oracle: subgroups of (Z/2)^k = sum of Gaussian binomials [k,j]_2."""
    def gauss(n, j):
        num = den = 1
        for i in range(j):
            num *= 2 ** (n - i) - 1
            den *= 2 ** (i + 1) - 1
        return num // den
    return sum(gauss(k, j) for j in range(k + 1))


def test_subgroup_counts():
    assert len(subgroups(FinAbGroup.from_orders([2, 2]))) == 5
    assert len(subgroups(FinAbGroup.from_orders([5]))) == 2
    assert len(subgroups(FinAbGroup.from_orders([8]))) == 4
    # chain for Z/8
    subs = subgroups(FinAbGroup.from_orders([8]))
    assert all(a <= b for a, b in zip(subs, subs[1:]))


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_subgroup_counts_match_gaussian_oracle(k):
    g = FinAbGroup.from_orders([2] * k)
    assert len(subgroups(g)) == gaussian_subgroup_count_f2(k)


def test_subgroup_cap():
    with pytest.raises(GroupError):
        subgroups(FinAbGroup.from_orders([256]))


def test_prime_power_canonicalization():
    assert FinAbGroup.from_orders([6]).factors == (2, 3)
    assert FinAbGroup.from_orders([12, 2]).factors == (2, 3, 4)
    assert FinAbGroup.from_orders([1]).factors == ()


def test_has_proper_same_card_subgroup():
    assert has_proper_same_card_subgroup(FinAbGroup.from_orders([6])) is False
    assert has_proper_same_card_subgroup(FinAbGroup.from_orders([1])) is False
    assert has_proper_same_card_subgroup(
        FinAbGroup.from_orders([2, 4])) is False


def test_prufer_truncation():
    assert prufer_truncation_check(2, 3) is True
    assert prufer_truncation_check(3, 0) is True
    assert prufer_truncation_check(5, 2) is True
    for p in (2, 3, 5, 7):
        for n in range(5):
            assert prufer_truncation_check(p, n) is True
    # count matches the divisor-count oracle n+1 by construction of the check
    with pytest.raises(GroupError):
        prufer_truncation_check(11, 1)
    with pytest.raises(GroupError):
        prufer_truncation_check(2, 5)


def test_classify_examples():
    assert classify(parse_group_spec("fin(4,9)")) is Classification.FINITE
    assert classify(parse_group_spec("prufer(3)")) is Classification.PRUFER
    assert classify(parse_group_spec("free(1) + fin(2)")) \
        is Classification.HAS_PROPER_SAME_CARD
    assert classify(parse_group_spec("prufer(3) + fin(1)")) \
        is Classification.PRUFER
    assert classify(parse_group_spec("prufer(3) + fin(2)")) \
        is Classification.HAS_PROPER_SAME_CARD
    assert classify(parse_group_spec("sum_inf(fin(1))")) \
        is Classification.FINITE


def test_cardinality():
    assert cardinality(parse_group_spec("fin(4,9)")) == Finite(36)
    assert cardinality(parse_group_spec("free(2)")) == ALEPH0
    assert cardinality(parse_group_spec("sum_inf(fin(2))")) == ALEPH0


def test_witness_examples():
    spec = parse_group_spec("free(1)")
    w = same_card_subgroup_witness(spec)
    assert w.kind == "free-double"
    assert validate_witness(spec, w)

    spec = parse_group_spec("prufer(2) + prufer(3)")
    w = same_card_subgroup_witness(spec)
    assert w.kind == "keep-prufer"
    assert group_str(w.subgroup) == "prufer(2)"
    assert validate_witness(spec, w)

    spec = parse_group_spec("sum_inf(fin(2))")
    w = same_card_subgroup_witness(spec)
    assert w.kind == "drop-summand"
    assert validate_witness(spec, w)

    with pytest.raises(GroupError):
        same_card_subgroup_witness(parse_group_spec("prufer(3)"))
    with pytest.raises(GroupError):
        same_card_subgroup_witness(parse_group_spec("fin(8)"))


def test_witness_cardinalities_agree():
    rng = random.Random(3)
    pool = ["free(1)", "free(3)", "sum_inf(fin(4))", "prufer(2) + prufer(2)",
            "prufer(7) + fin(2,2)", "free(2) + prufer(5)",
            "sum_inf(prufer(3)) + fin(9)"]
    for text in pool:
        spec = parse_group_spec(text)
        assert classify(spec) is Classification.HAS_PROPER_SAME_CARD
        w = same_card_subgroup_witness(spec)
        assert validate_witness(spec, w)
        assert card_compare(cardinality(spec),
                            cardinality(w.subgroup)) is Cmp.EQUAL


def test_classifier_agreement_with_characterization():
    # classify != HAS_PROPER iff finite or a single quasicyclic atom
    cases = {
        "fin(2,3)": True,
        "prufer(5)": True,
        "prufer(5) + fin(1)": True,
        "free(1)": False,
        "prufer(2) + prufer(2)": False,
        "sum_inf(fin(2))": False,
        "prufer(3) + fin(4)": False,
    }
    for text, no_proper in cases.items():
        c = classify(parse_group_spec(text))
        assert (c is not Classification.HAS_PROPER_SAME_CARD) == no_proper


def test_atom_validation():
    with pytest.raises(GroupError):
        PruferAtom(4)
    with pytest.raises(GroupError):
        FreeAtom(0)
    with pytest.raises(GroupError):
        FiniteAtom((0,))
