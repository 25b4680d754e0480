"""Derivation traces: ordered rewrite steps tagged with stable rule IDs.

Every simplification the cardinal engine performs appends a step.  A step
either rewrites a subterm (``kind="rewrite"``, with the exact before/after
renderings so the whole derivation can be replayed) or annotates the
derivation (``kind="note"``: candidate sets, certified bounds).  Rule IDs
are public identifiers; the registry below maps each to the statement of
the fact it applies.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

SCHEMA_VERSION = 1

RULES = {
    "R-ADD": "a sum of cardinals equals the larger summand once either is infinite",
    "R-MUL": "a product of cardinals equals the larger factor once either is "
             "infinite and neither is zero",
    "R-IDEM": "every infinite cardinal equals its own square (and hence any "
              "finite positive power of itself)",
    "R-ZERO": "zero annihilates: k*0 = 0 and 0^e = 0 for e >= 1",
    "R-ONE": "unit laws: k*1 = k, k^1 = k, k^0 = 1, 1^e = 1",
    "R-FINITE": "finite arithmetic is exact, unbounded natural arithmetic",
    "R-EXP-SQUEEZE": "b^e = 2^e whenever 2 <= b <= e and e is infinite "
                     "(squeeze 2^e <= b^e <= e^e = 2^e)",
    "R-EXP-SMALL": "for infinite e < b the power b^e lies in {b, 2^b}; "
                   "the term is kept unreduced with that candidate set",
    "R-EXP-PROD": "iterated exponents multiply: (b^c)^e = b^(c*e)",
    "R-CANTOR": "k < 2^k for every cardinal k",
    "R-KONIG": "a sum of strictly smaller cardinals stays below the product: "
               "in particular k^aleph(0) > k when k has countable cofinality",
    "R-GCH-EXP": "with the continuum hypothesis generalized, 2^aleph(a) = "
                 "aleph(a+1) and b^e follows the cofinality recursion",
    "R-MONO": "sums, products and powers are monotone in every argument, so "
              "interval bounds propagate through them",
    "L1-SUM": "a constant family summed over an index set has cardinality "
              "|M| * |S|",
    "L1-PROD": "a constant family multiplied over an index set has "
               "cardinality |M| ^ |S|",
    "L2-SUM-BOUND": "a sum of nonempty sets of size at most |S| over an "
                    "infinite index set S has cardinality |S|",
    "L-PROD-BOUND": "a product of sets of size between 2 and |S| over an "
                    "infinite index set S has cardinality 2^|S|",
    "L4-FIN": "a finite set has 2^n finite subsets; an infinite set has "
              "exactly |S| of them",
    "L3-DSUM": "a finite-support direct sum has cardinality |M|^|S| when S "
               "is finite or |M| <= 1, and |M| * |S| otherwise",
    "T1-MONOID": "a monoid ring over a nonzero ring has cardinality |R|^|M| "
                 "for finite M and |R| * |M| for infinite M",
    "C-POLY": "a polynomial ring in |S| >= 1 variables over a nonzero ring "
              "has cardinality aleph(0) * |R| * |S|",
    "R-PS": "formal power series have cardinality 2^aleph(0) over a finite "
            "nonzero ring and |R|^aleph(0) over an infinite one",
    "L5-FRAC": "an infinite ring and any localization of it at a set of "
               "non-zero-divisors are equinumerous",
    "L6-ZERODIM": "a zero-dimensional ring is canonically isomorphic to its "
                  "total ring of fractions; finite rings are zero-dimensional",
}


@dataclass
class Step:
    rule: str
    before: str
    after: str
    note: str = ""
    kind: str = "rewrite"  # "rewrite" | "note"

    def to_dict(self) -> dict:
        d = {"rule": self.rule, "statement": RULES[self.rule],
             "kind": self.kind, "before": self.before, "after": self.after}
        if self.note:
            d["note"] = self.note
        return d


@dataclass(frozen=True)
class BoundsInfo:
    """Certified interval for a result the rules leave undecided."""

    lo: Optional[str] = None
    hi: Optional[str] = None
    lo_strict: bool = False
    hi_strict: bool = False
    candidates: Tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {
            "lo": self.lo, "hi": self.hi,
            "lo_strict": self.lo_strict, "hi_strict": self.hi_strict,
            "candidates": list(self.candidates),
        }

    def __str__(self) -> str:
        parts = []
        if self.lo is not None:
            parts.append(f"{self.lo} {'<' if self.lo_strict else '<='} result")
        if self.hi is not None:
            parts.append(f"result {'<' if self.hi_strict else '<='} {self.hi}")
        if self.candidates:
            parts.append("result in {" + ", ".join(self.candidates) + "}")
        return "; ".join(parts) if parts else "no bounds"


@dataclass
class Trace:
    input: str
    mode: str
    steps: List[Step] = field(default_factory=list)
    result: str = ""
    bounds: Optional[BoundsInfo] = None

    def emit(self, rule: str, before: str, after: str, note: str = "") -> None:
        if rule not in RULES:
            raise KeyError(f"unregistered rule id {rule!r}")
        self.steps.append(Step(rule, before, after, note))

    def annotate(self, rule: str, text: str, at: str = "") -> None:
        if rule not in RULES:
            raise KeyError(f"unregistered rule id {rule!r}")
        self.steps.append(Step(rule, at, at, text, kind="note"))

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "input": self.input,
            "mode": self.mode,
            "result": self.result,
            "bounds": self.bounds.to_dict() if self.bounds else None,
            "steps": [s.to_dict() for s in self.steps],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    def to_text(self) -> str:
        lines = [f"input:  {self.input}", f"mode:   {self.mode}"]
        for i, s in enumerate(self.steps, 1):
            if s.kind == "note":
                lines.append(f"  {i:2d}. [{s.rule}] note: {s.note}"
                             + (f" (at {s.before})" if s.before else ""))
            else:
                lines.append(f"  {i:2d}. [{s.rule}] {s.before}  ~>  {s.after}"
                             + (f"  ({s.note})" if s.note else ""))
        lines.append(f"result: {self.result}")
        if self.bounds is not None:
            lines.append(f"bounds: {self.bounds}")
        return "\n".join(lines)


def emit(trace: Optional[Trace], rule: str, before: str, after: str,
         note: str = "") -> None:
    if trace is not None:
        trace.emit(rule, before, after, note)


def annotate(trace: Optional[Trace], rule: str, text: str, at: str = "") -> None:
    if trace is not None:
        trace.annotate(rule, text, at)
