"""Shared fixtures and hypothesis strategies."""

from __future__ import annotations

import pytest
from hypothesis import strategies as st

from cardalg.cardinal import Aleph, Exp, Finite, PowSet
from cardalg.ordinal import Ordinal


# ---------------------------------------------------------------------------
# ordinal / cardinal strategies
# ---------------------------------------------------------------------------

def _ordinal_from_layers(layers) -> Ordinal:
    """Build a CNF ordinal from (exponent_ordinal, coeff) candidates,
    keeping only strictly decreasing exponents."""
    terms = []
    seen = []
    for exp, coeff in sorted(layers, key=lambda t: t[0], reverse=True):
        if any(exp == s for s in seen):
            continue
        seen.append(exp)
        terms.append((exp, coeff))
    return Ordinal(tuple(terms))


_small_exponent = st.sampled_from([
    Ordinal.from_int(0), Ordinal.from_int(1), Ordinal.from_int(2),
    Ordinal.from_int(3), Ordinal.omega_power(Ordinal.from_int(1)),
    Ordinal.omega_power(Ordinal.from_int(2)),
])

ordinals = st.lists(
    st.tuples(_small_exponent, st.integers(min_value=1, max_value=9)),
    min_size=0, max_size=3,
).map(_ordinal_from_layers)


def _mk_cardinal(draw_tuple):
    kind, n, idx, wrap = draw_tuple
    if kind == "finite":
        return Finite(n)
    base = Aleph(idx)
    for _ in range(wrap):
        base = PowSet(base)
    return base


cardinals = st.tuples(
    st.sampled_from(["finite", "aleph"]),
    st.integers(min_value=0, max_value=20),
    ordinals,
    st.integers(min_value=0, max_value=2),
).map(_mk_cardinal)


def normal_cardinals_with_exp():
    """Cardinals in ZFC normal form including unreduced exponent terms."""
    from cardalg.ordinal import succ

    def to_exp(pair):
        idx, bump = pair
        big = idx
        for _ in range(bump + 1):
            big = succ(big)
        return Exp(Aleph(big), Aleph(idx))

    exps = st.tuples(ordinals, st.integers(min_value=0, max_value=2)).map(to_exp)
    return st.one_of(cardinals, exps)


# ---------------------------------------------------------------------------
# the default corpus, run once per session
# ---------------------------------------------------------------------------

@pytest.fixture(scope="session")
def default_corpus():
    from cardalg.corpus import run_corpus
    report, timings = run_corpus()
    return report, timings
