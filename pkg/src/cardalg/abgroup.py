"""Finite abelian groups and the countable-group classification.

Finite groups are tuples of prime-power cyclic factors with exhaustive
subgroup enumeration (bitmask closure search).  Countable groups are
described by a small grammar of atoms; ``classify`` decides whether such
a group is finite, a quasicyclic p-group (the unique infinite kind with
no proper subgroup of its own cardinality), or possesses a proper
subgroup of the same cardinality, in which case ``same_card_subgroup_witness``
emits a machine-checkable witness.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from math import gcd
from typing import List, Tuple, Union

from .cardinal import ALEPH0, Cardinal, Cmp, Finite, card_compare
from .finring import _is_prime

SUBGROUP_CAP = 128


class GroupError(ValueError):
    pass


# ---------------------------------------------------------------------------
# finite abelian groups
# ---------------------------------------------------------------------------

def _prime_power_factors(n: int) -> List[int]:
    if n < 1:
        raise GroupError("cyclic orders must be >= 1")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            q = 1
            while n % d == 0:
                q *= d
                n //= d
            out.append(q)
        d += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class FinAbGroup:
    """Direct sum of cyclic groups of prime-power order.

    Elements are residue tuples, indexed in mixed radix with the last
    factor varying fastest; index 0 is the identity.
    """

    factors: Tuple[int, ...]

    @staticmethod
    def from_orders(orders) -> "FinAbGroup":
        pps: List[int] = []
        for n in orders:
            pps.extend(_prime_power_factors(int(n)))
        return FinAbGroup(tuple(sorted(pps)))

    @property
    def order(self) -> int:
        n = 1
        for d in self.factors:
            n *= d
        return n

    def element_tuple(self, i: int) -> Tuple[int, ...]:
        out = []
        for d in reversed(self.factors):
            out.append(i % d)
            i //= d
        return tuple(reversed(out))

    @cached_property
    def add_table(self) -> Tuple[Tuple[int, ...], ...]:
        tuples = list(itertools.product(*[range(d) for d in self.factors])) \
            if self.factors else [()]
        index = {t: i for i, t in enumerate(tuples)}
        return tuple(
            tuple(index[tuple((x + y) % d
                              for x, y, d in zip(t, u, self.factors))]
                  for u in tuples)
            for t in tuples)


def subgroups(g: FinAbGroup, cap: int = SUBGROUP_CAP) -> List[frozenset]:
    """Every subgroup, by closure of generator extensions (exhaustive)."""
    n = g.order
    if n > cap:
        raise GroupError(f"subgroup enumeration capped at {cap}, order {n}")
    add = g.add_table
    trivial = 1  # identity has index 0

    def extend(mask: int, members: List[int], x: int) -> int:
        # <S, x> = union of cosets S + k*x
        t = mask
        y = x
        while not (t >> y) & 1:
            for s in members:
                t |= 1 << add[s][y]
            y = add[y][x]
        return t

    found = {trivial}
    queue = [trivial]
    while queue:
        mask = queue.pop()
        members = [i for i in range(n) if (mask >> i) & 1]
        for x in range(1, n):
            if (mask >> x) & 1:
                continue
            t = extend(mask, members, x)
            if t not in found:
                found.add(t)
                queue.append(t)
    out = [frozenset(i for i in range(n) if (m >> i) & 1) for m in found]
    return sorted(out, key=lambda s: (len(s), tuple(sorted(s))))


def has_proper_same_card_subgroup(g: FinAbGroup,
                                  cap: int = SUBGROUP_CAP) -> bool:
    """Scan the full lattice: a finite group never has one."""
    full = frozenset(range(g.order))
    return any(h != full and len(h) == len(full) for h in subgroups(g, cap))


def prufer_truncation_check(p: int, n: int) -> bool:
    """Verify Z/p^n has the chain lattice a quasicyclic truncation must.

    Enumerates the cyclic subgroups <x> for every x (exhaustive for a
    cyclic group) and checks: exactly n+1 subgroups, one of each order
    p^k for k <= n, totally ordered by inclusion.
    """
    if not _is_prime(p) or p > 7:
        raise GroupError("truncation check needs a prime p <= 7")
    if not 0 <= n <= 4:
        raise GroupError("truncation check needs 0 <= n <= 4")
    m = p ** n
    found = {}
    for x in range(m):
        ordx = m // gcd(x, m) if x else 1
        hit = next((s for s in found.values()
                    if x in s and len(s) == ordx), None)
        if hit is not None:
            continue  # <x> is this already-known subgroup
        members = {0}
        y = x
        while y:
            members.add(y)
            y = (y + x) % m
        found[frozenset(members)] = frozenset(members)
    subs = sorted(found, key=len)
    if len(subs) != n + 1:
        return False
    if [len(s) for s in subs] != [p ** k for k in range(n + 1)]:
        return False
    return all(a <= b for a, b in zip(subs, subs[1:]))


# ---------------------------------------------------------------------------
# countable group specifications
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FiniteAtom:
    orders: Tuple[int, ...]

    def __post_init__(self) -> None:
        for d in self.orders:
            if d < 1:
                raise GroupError("finite factor orders must be >= 1")


@dataclass(frozen=True)
class FreeAtom:
    rank: int

    def __post_init__(self) -> None:
        if self.rank < 1:
            raise GroupError("free rank must be >= 1")


@dataclass(frozen=True)
class PruferAtom:
    p: int

    def __post_init__(self) -> None:
        if not _is_prime(self.p):
            raise GroupError(f"{self.p} is not prime")


@dataclass(frozen=True)
class SumInfAtom:
    atom: "GroupAtom"


GroupAtom = Union[FiniteAtom, FreeAtom, PruferAtom, SumInfAtom]


@dataclass(frozen=True)
class GroupSpec:
    atoms: Tuple[GroupAtom, ...]


class Classification(Enum):
    FINITE = "finite"
    PRUFER = "prufer"
    HAS_PROPER_SAME_CARD = "has_proper_same_card_subgroup"


def atom_str(a: GroupAtom) -> str:
    if isinstance(a, FiniteAtom):
        return "fin(" + ",".join(map(str, a.orders)) + ")"
    if isinstance(a, FreeAtom):
        return f"free({a.rank})"
    if isinstance(a, PruferAtom):
        return f"prufer({a.p})"
    if isinstance(a, SumInfAtom):
        return f"sum_inf({atom_str(a.atom)})"
    raise GroupError(f"unknown atom {a!r}")


def group_str(spec: GroupSpec) -> str:
    return " + ".join(atom_str(a) for a in spec.atoms)


def _atom_trivial(a: GroupAtom) -> bool:
    if isinstance(a, FiniteAtom):
        n = 1
        for d in a.orders:
            n *= d
        return n == 1
    if isinstance(a, SumInfAtom):
        return _atom_trivial(a.atom)
    return False


def _atom_finite(a: GroupAtom) -> bool:
    if isinstance(a, FiniteAtom):
        return True
    if isinstance(a, SumInfAtom):
        return _atom_trivial(a.atom)
    return False


def cardinality(spec: GroupSpec) -> Cardinal:
    if all(_atom_finite(a) for a in spec.atoms):
        n = 1
        for a in spec.atoms:
            if isinstance(a, FiniteAtom):
                for d in a.orders:
                    n *= d
        return Finite(n)
    return ALEPH0


def classify(spec: GroupSpec) -> Classification:
    """Finite, a single quasicyclic p-group, or owner of a proper
    same-cardinality subgroup; total on the grammar."""
    if all(_atom_finite(a) for a in spec.atoms):
        return Classification.FINITE
    infinite = [a for a in spec.atoms if not _atom_finite(a)]
    finite_nontrivial = [a for a in spec.atoms
                         if _atom_finite(a) and not _atom_trivial(a)]
    if (len(infinite) == 1 and isinstance(infinite[0], PruferAtom)
            and not finite_nontrivial):
        return Classification.PRUFER
    return Classification.HAS_PROPER_SAME_CARD


@dataclass(frozen=True)
class Witness:
    """A proper subgroup of the same cardinality, with its certificate.

    ``subgroup`` is the abstract isomorphism type; ``outside_element``
    names a concrete element of the original group not in the subgroup,
    and ``kind`` selects which arithmetic check certifies that.
    """

    subgroup: GroupSpec
    kind: str  # "free-double" | "drop-summand" | "keep-prufer"
    description: str
    outside_element: str


def same_card_subgroup_witness(spec: GroupSpec) -> Witness:
    if classify(spec) is not Classification.HAS_PROPER_SAME_CARD:
        raise GroupError("witness exists only for groups with a proper "
                         "subgroup of the same cardinality")
    atoms = spec.atoms
    for i, a in enumerate(atoms):
        if isinstance(a, FreeAtom):
            return Witness(
                subgroup=spec,
                kind="free-double",
                description=(f"inside atom {i} ({atom_str(a)}): replace the "
                             f"first free generator g by 2g, keeping "
                             f"everything else"),
                outside_element=f"g (atom {i}): its coordinate 1 is odd",
            )
    for i, a in enumerate(atoms):
        if isinstance(a, SumInfAtom) and not _atom_trivial(a):
            return Witness(
                subgroup=spec,
                kind="drop-summand",
                description=(f"inside atom {i} ({atom_str(a)}): drop the "
                             f"copy at index 0; the rest is isomorphic to "
                             f"the whole sum"),
                outside_element=(f"a nonzero element of the index-0 copy of "
                                 f"{atom_str(a.atom)}"),
            )
    first = next(i for i, a in enumerate(atoms) if isinstance(a, PruferAtom))
    dropped = [(i, a) for i, a in enumerate(atoms) if i != first]
    dropped_nontrivial = [(i, a) for i, a in dropped if not _atom_trivial(a)]
    return Witness(
        subgroup=GroupSpec((atoms[first],)),
        kind="keep-prufer",
        description=(f"keep atom {first} ({atom_str(atoms[first])}) whole "
                     "and drop "
                     + ", ".join(f"atom {i} ({atom_str(a)})"
                                 for i, a in dropped)),
        outside_element=(f"a nonzero element of atom "
                         f"{dropped_nontrivial[0][0]} "
                         f"({atom_str(dropped_nontrivial[0][1])})"),
    )


def validate_witness(spec: GroupSpec, w: Witness) -> bool:
    """Run the certificate: cardinalities agree and the outside element
    is real (the arithmetic fact behind each kind)."""
    if card_compare(cardinality(spec), cardinality(w.subgroup)) is not Cmp.EQUAL:
        return False
    if w.kind == "free-double":
        # g has coordinate 1 in the doubled copy; 1 is not an even integer
        return any(isinstance(a, FreeAtom) for a in spec.atoms) and 1 % 2 != 0
    if w.kind == "drop-summand":
        return any(isinstance(a, SumInfAtom) and not _atom_trivial(a)
                   for a in spec.atoms)
    if w.kind == "keep-prufer":
        idxs = [i for i, a in enumerate(spec.atoms)
                if isinstance(a, PruferAtom)]
        if not idxs:
            return False
        others = [a for i, a in enumerate(spec.atoms)
                  if i != idxs[0] and not _atom_trivial(a)]
        # properness needs something nontrivial to have been dropped
        return len(others) >= 1
    return False
