"""Executable countable witnesses: pairing, finite sets, finite support.

All codes use exact arbitrary-precision arithmetic and are stable: the
encodings below are pinned byte-for-byte so codes never change across
releases.

* ``cantor_pair(m, n) = m + (m+n)(m+n+1)/2`` walks the diagonals of
  omega x omega and is a bijection onto omega.
* ``finset_encode(s) = sum(2^i for i in s)`` is the usual bit-set
  bijection between finite sets of naturals and naturals.
* ``finsupp_encode`` composes the two: a finite-support sequence with
  support ``i_1 < ... < i_k`` and values ``v_1..v_k`` (all >= 1) maps to
  ``0`` when empty and otherwise to
  ``cantor_pair(finset_encode(support) - 1, V) + 1`` where ``V`` is the
  right fold ``cantor_pair(v_1 - 1, cantor_pair(v_2 - 1, ... v_k - 1))``.
  Both layers are bijections, so the composite is one.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Dict, Iterable, Mapping, Tuple


def cantor_pair(m: int, n: int) -> int:
    if m < 0 or n < 0:
        raise ValueError("pairing is defined on naturals")
    d = m + n
    return m + d * (d + 1) // 2


def cantor_unpair(k: int) -> Tuple[int, int]:
    """The unique (m, n) with cantor_pair(m, n) == k."""
    if k < 0:
        raise ValueError("codes are naturals")
    d = (isqrt(8 * k + 1) - 1) // 2  # diagonal index: d(d+1)/2 <= k
    m = k - d * (d + 1) // 2
    return m, d - m


def finset_encode(s: Iterable[int]) -> int:
    code = 0
    for i in set(s):
        if i < 0:
            raise ValueError("finite sets of naturals only")
        code |= 1 << i
    return code


def finset_decode(k: int) -> set:
    if k < 0:
        raise ValueError("codes are naturals")
    out, i = set(), 0
    while k:
        if k & 1:
            out.add(i)
        k >>= 1
        i += 1
    return out


@dataclass(frozen=True)
class FinSupportSeq:
    """A function omega -> omega that is 0 almost everywhere.

    Stored as sorted (index, value) pairs with every value nonzero, so
    absence of an index means value 0 and equal sequences are equal
    tuples.
    """

    entries: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        prev = -1
        for i, v in self.entries:
            if i <= prev:
                raise ValueError("entries must have strictly increasing indices")
            if i < 0 or v <= 0:
                raise ValueError("indices are naturals, stored values nonzero")
            prev = i

    @staticmethod
    def from_dict(d: Mapping[int, int]) -> "FinSupportSeq":
        return FinSupportSeq(tuple(sorted((i, v) for i, v in d.items() if v)))

    def __getitem__(self, i: int) -> int:
        for j, v in self.entries:
            if j == i:
                return v
        return 0

    def support(self) -> Tuple[int, ...]:
        return tuple(i for i, _ in self.entries)

    def to_dict(self) -> Dict[int, int]:
        return dict(self.entries)


def finsupp_encode(f: FinSupportSeq) -> int:
    if not f.entries:
        return 0
    support_code = finset_encode(i for i, _ in f.entries)
    values = [v for _, v in f.entries]
    acc = values[-1] - 1
    for v in reversed(values[:-1]):
        acc = cantor_pair(v - 1, acc)
    return cantor_pair(support_code - 1, acc) + 1


def finsupp_decode(k: int) -> FinSupportSeq:
    if k < 0:
        raise ValueError("codes are naturals")
    if k == 0:
        return FinSupportSeq()
    s1, acc = cantor_unpair(k - 1)
    support = sorted(finset_decode(s1 + 1))
    values = []
    for _ in range(len(support) - 1):
        a, acc = cantor_unpair(acc)
        values.append(a + 1)
    values.append(acc + 1)
    return FinSupportSeq(tuple(zip(support, values)))
