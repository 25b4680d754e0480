"""Corpus generation and the invariant runner.

The default corpus is every Z/n for n <= 100, every two-factor product
Z/a x Z/b with ab <= 200, every monic-modulus quotient of F_p[x] with
p <= 5 and degree 2..3, a fixed family of idealizations and monoid
rings, and every abelian group of order <= 64 (one per isomorphism
class).  For each instance the runner checks the invariants the finite
theory promises: balancedness, the total-fraction-ring isomorphism with
exact cardinality agreement, depth zero of every local factor, the
Hom-criterion at every maximal ideal, monoid-ring cardinalities,
self-injectivity implying balancedness (with the idealization
counterexample expected to fail self-injectivity), the idealization
subring law, subgroup-lattice facts, quasicyclic truncation chains, and
classifier/witness agreement on generated group specs.

Reports are deterministic: the same config yields byte-identical JSON
(timings are returned separately, never embedded).
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from . import abgroup
from .abgroup import (Classification, FinAbGroup, FiniteAtom, FreeAtom,
                      GroupSpec, PruferAtom, SumInfAtom, _atom_finite,
                      _atom_trivial, classify, group_str,
                      prufer_truncation_check, same_card_subgroup_witness,
                      subgroups, validate_witness)
from .algebra import card_monoid_ring
from .cardinal import Finite, Mode
from .finring import (BAER_CAP, DEFAULT_ORDER_CAP, SUBRING_CAP,
                      EffectiveInt, EffectivePolyFq, IdealizeSpec, MONOIDS,
                      MonoidRingSpec, PolyQuot, Product, RingSpec, Zmod,
                      hom_criterion, idealization_subring_law, is_balanced,
                      is_self_injective, local_decomposition, ring_build,
                      spec_str, total_fraction_ring, depth_zero)

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class CorpusConfig:
    zmod_max: int = 100
    product_order_max: int = 200
    polyquot_primes: Tuple[int, ...] = (2, 3, 5)
    polyquot_degrees: Tuple[int, ...] = (2, 3)
    idealizations: Tuple[Tuple[int, Tuple[int, ...]], ...] = (
        (2, (2,)), (2, (2, 2)), (2, (2, 2, 2)), (2, (2, 2, 2, 2)),
        (3, (3,)), (4, (2,)), (4, (4,)), (4, (4, 2)), (6, (2, 3)),
    )
    monoid_rings: Tuple[Tuple[int, str], ...] = (
        (2, "C1"), (2, "C2"), (2, "C3"), (2, "C2xC2"), (2, "B2"),
        (3, "C2"), (3, "B2"), (4, "C2"), (5, "C2"),
    )
    order_cap: int = DEFAULT_ORDER_CAP
    baer_cap: int = BAER_CAP
    subring_cap: int = SUBRING_CAP
    group_order_max: int = 64
    prufer_primes: Tuple[int, ...] = (2, 3, 5, 7)
    prufer_max_n: int = 4
    classifier_specs: int = 50
    seed: int = 20250801

    def validate(self) -> None:
        if self.zmod_max > self.order_cap or \
                self.product_order_max > self.order_cap:
            raise ValueError("corpus orders exceed the materialization cap")
        if self.group_order_max > abgroup.SUBGROUP_CAP:
            raise ValueError("group corpus exceeds the subgroup cap")

    def to_dict(self) -> dict:
        return {
            "zmod_max": self.zmod_max,
            "product_order_max": self.product_order_max,
            "polyquot_primes": list(self.polyquot_primes),
            "polyquot_degrees": list(self.polyquot_degrees),
            "idealizations": [[n, list(o)] for n, o in self.idealizations],
            "monoid_rings": [[n, m] for n, m in self.monoid_rings],
            "order_cap": self.order_cap,
            "baer_cap": self.baer_cap,
            "subring_cap": self.subring_cap,
            "group_order_max": self.group_order_max,
            "prufer_primes": list(self.prufer_primes),
            "prufer_max_n": self.prufer_max_n,
            "classifier_specs": self.classifier_specs,
            "seed": self.seed,
        }


# ---------------------------------------------------------------------------
# generation
# ---------------------------------------------------------------------------

def ring_specs(config: CorpusConfig) -> List[Tuple[str, RingSpec]]:
    """(kind, spec) pairs in deterministic order."""
    out: List[Tuple[str, RingSpec]] = []
    for n in range(2, config.zmod_max + 1):
        out.append(("zmod", Zmod(n)))
    for a in range(2, config.product_order_max // 2 + 1):
        for b in range(a, config.product_order_max // a + 1):
            out.append(("product", Product((Zmod(a), Zmod(b)))))
    for p in config.polyquot_primes:
        for d in config.polyquot_degrees:
            lows = [[]]
            for _ in range(d):
                lows = [low + [c] for low in lows for c in range(p)]
            for low in lows:
                out.append(("polyquot", PolyQuot(p, tuple(low) + (1,))))
    for base_n, orders in config.idealizations:
        out.append(("idealization", IdealizeSpec(Zmod(base_n), orders)))
    for base_n, name in config.monoid_rings:
        out.append(("monoidring", MonoidRingSpec(Zmod(base_n), name)))
    return out


def group_factor_lists(max_order: int) -> List[Tuple[int, ...]]:
    """All abelian groups of order <= max_order, one factor list per
    isomorphism class (nondecreasing prime powers)."""
    if max_order < 1:
        return []
    pps = [q for q in range(2, max_order + 1)
           if _is_prime_power(q)]
    out: List[Tuple[int, ...]] = [()]
    stack: List[Tuple[Tuple[int, ...], int]] = [((), 1)]
    while stack:
        factors, order = stack.pop()
        for q in pps:
            if factors and q < factors[-1]:
                continue
            if order * q > max_order:
                continue
            nxt = factors + (q,)
            out.append(nxt)
            stack.append((nxt, order * q))
    return sorted(out, key=lambda f: (_prod(f), f))


def _prod(xs) -> int:
    n = 1
    for x in xs:
        n *= x
    return n


def _is_prime_power(q: int) -> bool:
    if q < 2:
        return False
    p = 2
    while p * p <= q:
        if q % p == 0:
            while q % p == 0:
                q //= p
            return q == 1
        p += 1
    return True  # q itself prime


def random_group_specs(count: int, seed: int) -> List[GroupSpec]:
    rng = random.Random(seed)
    specs: List[GroupSpec] = []
    # pin the boundary cases, then fill with random compositions
    specs.append(GroupSpec((FiniteAtom((4, 9)),)))
    specs.append(GroupSpec((PruferAtom(3),)))
    specs.append(GroupSpec((FreeAtom(1), FiniteAtom((2,)))))
    specs.append(GroupSpec((PruferAtom(2), PruferAtom(3))))
    specs.append(GroupSpec((SumInfAtom(FiniteAtom((2,))),)))
    specs.append(GroupSpec((PruferAtom(5), FiniteAtom((1,)))))
    while len(specs) < count:
        atoms = []
        for _ in range(rng.randint(1, 3)):
            kind = rng.choice(["fin", "fin", "free", "prufer", "sum_inf"])
            if kind == "fin":
                orders = tuple(rng.choice([1, 2, 3, 4, 5, 8, 9])
                               for _ in range(rng.randint(1, 2)))
                atoms.append(FiniteAtom(orders))
            elif kind == "free":
                atoms.append(FreeAtom(rng.randint(1, 3)))
            elif kind == "prufer":
                atoms.append(PruferAtom(rng.choice([2, 3, 5, 7])))
            else:
                inner = rng.choice([FiniteAtom((rng.choice([1, 2, 3]),)),
                                    PruferAtom(rng.choice([2, 3]))])
                atoms.append(SumInfAtom(inner))
        specs.append(GroupSpec(tuple(atoms)))
    return specs[:count]


# ---------------------------------------------------------------------------
# per-instance checks
# ---------------------------------------------------------------------------

def check_ring(kind: str, spec: RingSpec, config: CorpusConfig) -> dict:
    """Build one ring and run every finite-ring invariant on it."""
    r = ring_build(spec, cap=config.order_cap)
    rec: Dict[str, object] = {"kind": kind, "spec": spec_str(spec),
                              "order": r.order}
    failures: List[str] = []

    balanced, witness = is_balanced(r)
    rec["balanced"] = balanced
    if not balanced:
        rec["nonbalanced_witness"] = r.names[witness]
        failures.append("balanced")

    t, _canonical, is_iso = total_fraction_ring(r)
    rec["tfr_iso"] = is_iso
    rec["tfr_order"] = t.order
    if not is_iso or t.order != r.order:
        failures.append("tfr")

    factors = local_decomposition(r)
    rec["local_factors"] = [f.order for f in factors]
    all_depth_zero = all(depth_zero(f) for f in factors)
    rec["depth_zero_all"] = all_depth_zero
    if not all_depth_zero:
        failures.append("depth")

    hom = hom_criterion(r)
    rec["hom_criterion"] = hom
    if not hom:
        failures.append("hom")

    if r.order <= config.baer_cap:
        selfinj, counter = is_self_injective(r, cap=config.baer_cap)
        rec["self_injective"] = selfinj
        if not selfinj:
            rec["selfinj_counterexample"] = counter
        if selfinj and not balanced:
            failures.append("selfinj-implies-balanced")
    else:
        rec["self_injective"] = None

    if kind == "monoidring":
        assert isinstance(spec, MonoidRingSpec)
        base_n = spec.base.n
        msize = len(MONOIDS[spec.monoid])
        expected_card = card_monoid_ring(Finite(base_n), Finite(msize),
                                         Mode.ZFC)
        rec["expected_order"] = expected_card.n
        if r.order != expected_card.n:
            failures.append("monoid-ring-count")

    if kind == "idealization" and r.order <= config.subring_cap:
        law, subrings, module_subgroups = idealization_subring_law(
            r, cap=config.subring_cap)
        rec["subring_law"] = law
        rec["n_subrings"] = len(subrings)
        g = FinAbGroup.from_orders(spec.orders)
        expected_subgroups = len(subgroups(g))
        rec["n_module_subgroups"] = expected_subgroups
        if not law or len(subrings) != expected_subgroups:
            failures.append("subring-law")

    rec["failures"] = failures
    return rec


def check_group(factors: Tuple[int, ...]) -> dict:
    g = FinAbGroup.from_orders(factors)
    subs = subgroups(g)
    full = frozenset(range(g.order))
    proper_same = any(h != full and len(h) == g.order for h in subs)
    return {
        "factors": list(g.factors),
        "order": g.order,
        "n_subgroups": len(subs),
        "proper_same_card": proper_same,
        "failures": ["proper-same-card"] if proper_same else [],
    }


def check_classifier_spec(spec: GroupSpec) -> dict:
    c = classify(spec)
    rec: Dict[str, object] = {"spec": group_str(spec),
                              "classification": c.value}
    failures: List[str] = []
    # direct restatement of the theorem, computed structurally
    finite = all(_atom_finite(a) for a in spec.atoms)
    nontrivial = [a for a in spec.atoms if not _atom_trivial(a)]
    single_prufer = (len(nontrivial) == 1
                     and isinstance(nontrivial[0], PruferAtom))
    expected_no_proper = finite or single_prufer
    if (c is not Classification.HAS_PROPER_SAME_CARD) != expected_no_proper:
        failures.append("classifier-disagrees")
    if c is Classification.HAS_PROPER_SAME_CARD:
        w = same_card_subgroup_witness(spec)
        ok = validate_witness(spec, w)
        rec["witness"] = {"subgroup": group_str(w.subgroup), "kind": w.kind,
                          "outside": w.outside_element}
        rec["witness_valid"] = ok
        if not ok:
            failures.append("witness-invalid")
    rec["failures"] = failures
    return rec


def check_builtins() -> List[dict]:
    out = []
    for eff in (EffectiveInt(), EffectivePolyFq(2)):
        rec = eff.check_report()
        failures = []
        if rec["balanced"] is not False or rec["hom_criterion"] is not False \
                or rec["depth_zero_all"] is not False \
                or rec["tfr_iso"] is not False:
            failures.append("builtin-expected-negative")
        rec["failures"] = failures
        out.append(rec)
    return out


# ---------------------------------------------------------------------------
# the runner
# ---------------------------------------------------------------------------

def _check_ring_star(args):
    kind, spec, config = args
    return check_ring(kind, spec, config)


def run_corpus(config: Optional[CorpusConfig] = None,
               jobs: int = 1) -> Tuple[dict, Dict[str, float]]:
    """Run every invariant; returns (report, phase timings in seconds)."""
    config = config or CorpusConfig()
    config.validate()
    timings: Dict[str, float] = {}

    t0 = time.perf_counter()
    specs = ring_specs(config)
    if jobs > 1:
        import multiprocessing
        with multiprocessing.Pool(jobs) as pool:
            rings = pool.map(_check_ring_star,
                             [(k, s, config) for k, s in specs],
                             chunksize=8)
    else:
        rings = [check_ring(k, s, config) for k, s in specs]
    timings["rings"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    builtins = check_builtins()
    timings["builtins"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    groups = [check_group(f) for f in group_factor_lists(config.group_order_max)]
    timings["groups"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    prufer = []
    for p in config.prufer_primes:
        for n in range(config.prufer_max_n + 1):
            ok = prufer_truncation_check(p, n)
            prufer.append({"p": p, "n": n, "ok": ok,
                           "failures": [] if ok else ["prufer-chain"]})
    timings["prufer"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    classifier = [check_classifier_spec(s)
                  for s in random_group_specs(config.classifier_specs,
                                              config.seed)]
    timings["classifier"] = time.perf_counter() - t0

    failures: List[str] = []
    for section, records in (("ring", rings), ("builtin", builtins),
                             ("group", groups), ("prufer", prufer),
                             ("classifier", classifier)):
        for rec in records:
            for f in rec["failures"]:
                key = rec.get("spec") or rec.get("factors") or \
                    f"p={rec.get('p')},n={rec.get('n')}"
                failures.append(f"{section}:{key}:{f}")

    report = {
        "schema_version": SCHEMA_VERSION,
        "config": config.to_dict(),
        "rings": rings,
        "builtins": builtins,
        "groups": groups,
        "prufer": prufer,
        "classifier": classifier,
        "summary": {
            "n_rings": len(rings),
            "n_groups": len(groups),
            "n_balanced": sum(1 for r in rings if r["balanced"]),
            "n_self_injective": sum(1 for r in rings
                                    if r.get("self_injective") is True),
            "n_not_self_injective": sum(1 for r in rings
                                        if r.get("self_injective") is False),
            "n_failures": len(failures),
        },
        "failures": failures,
    }
    return report, timings


def report_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=1) + "\n"
