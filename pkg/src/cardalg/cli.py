"""Command-line interface.

Subcommands::

    cardalg eval "<expr>" --mode zfc|gch [--trace text|json]
    cardalg ring check "<ringspec>" [--all|--balanced|--tfr|--depth|--selfinj]
    cardalg group classify|witness|subgroups "<groupspec>"
    cardalg bij pair M N | unpair K | finset-encode I,J,... | roundtrip [--limit N]
    cardalg corpus run [--out FILE] [--jobs N] [--no-figures] [...size knobs]

Exit codes: 0 success, 1 check failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .abgroup import (Classification, FinAbGroup, FiniteAtom, classify,
                      group_str, same_card_subgroup_witness, subgroups,
                      validate_witness)
from .bijection import (cantor_pair, cantor_unpair, finset_decode,
                        finset_encode)
from .cardinal import Mode
from .corpus import CorpusConfig, run_corpus
from .evaluate import evaluate
from .exprlang import ParseError
from .finring import (BuiltinInt, BuiltinPoly, RingError, depth_zero,
                      effective_ring, hom_criterion, is_balanced,
                      is_self_injective, local_decomposition, ring_build,
                      spec_str, total_fraction_ring, units_and_zero_divisors)
from .minilang import parse_group_spec, parse_ring_spec
from .report import render_figures, summary_table, write_csv, write_json


def _cmd_eval(args) -> int:
    mode = Mode.ZFC if args.mode == "zfc" else Mode.GCH
    value, trace = evaluate(args.expr, mode)
    if args.trace == "json":
        print(trace.to_json())
    elif args.trace == "text":
        print(trace.to_text())
    else:
        print(trace.result)
        if trace.bounds is not None:
            print(f"bounds: {trace.bounds}")
    return 0


def _ring_record(spec, args) -> dict:
    if isinstance(spec, (BuiltinInt, BuiltinPoly)):
        eff = effective_ring(spec)
        rec = eff.check_report()
        wanted = {}
        if args.balanced or args.all:
            wanted["balanced"] = rec["balanced"]
            wanted["witness"] = rec["witness"]
        if args.tfr or args.all:
            wanted["tfr_iso"] = rec["tfr_iso"]
            wanted["tfr_note"] = rec["tfr_note"]
        if args.depth or args.all:
            wanted["depth_zero_all"] = rec["depth_zero_all"]
            wanted["hom_criterion"] = rec["hom_criterion"]
            wanted["hom_detail"] = rec["hom_detail"]
        if args.selfinj:
            raise RingError("self-injectivity is decided on finite "
                            "instances only")
        return {"spec": rec["spec"], "cardinality": rec["cardinality"],
                **wanted}
    r = ring_build(spec)
    out = {"spec": spec_str(spec), "order": r.order}
    if args.balanced or args.all:
        ok, witness = is_balanced(r)
        out["balanced"] = ok
        if witness is not None:
            out["witness"] = r.names[witness]
        units, zds = units_and_zero_divisors(r)
        out["n_units"] = len(units)
        out["n_zero_divisors"] = len(zds)
    if args.tfr or args.all:
        t, _, is_iso = total_fraction_ring(r)
        out["tfr_iso"] = is_iso
        out["tfr_order"] = t.order
    if args.depth or args.all:
        factors = local_decomposition(r)
        out["local_factors"] = [f.order for f in factors]
        out["depth_zero_all"] = all(depth_zero(f) for f in factors)
        out["hom_criterion"] = hom_criterion(r)
    if args.selfinj or (args.all and r.order <= 64):
        ok, counter = is_self_injective(r)
        out["self_injective"] = ok
        if counter is not None:
            out["counterexample"] = counter
    return out


def _cmd_ring(args) -> int:
    spec = parse_ring_spec(args.spec)
    if not (args.balanced or args.tfr or args.depth or args.selfinj):
        args.all = True
    rec = _ring_record(spec, args)
    if args.json:
        print(json.dumps(rec, sort_keys=True, indent=1))
    else:
        for k, v in rec.items():
            print(f"{k}: {v}")
    return 0


def _cmd_group(args) -> int:
    spec = parse_group_spec(args.spec)
    if args.action == "classify":
        c = classify(spec)
        print(c.value)
        return 0
    if args.action == "witness":
        c = classify(spec)
        if c is not Classification.HAS_PROPER_SAME_CARD:
            print(f"no witness: the group is {c.value}")
            return 1
        w = same_card_subgroup_witness(spec)
        print(f"subgroup: {group_str(w.subgroup)}")
        print(f"how: {w.description}")
        print(f"outside element: {w.outside_element}")
        print(f"certificate valid: {validate_witness(spec, w)}")
        return 0
    # subgroups of a finite spec
    if any(not isinstance(a, FiniteAtom) for a in spec.atoms):
        print("subgroup enumeration needs a finite group spec", file=sys.stderr)
        return 2
    orders = [d for a in spec.atoms for d in a.orders]
    g = FinAbGroup.from_orders(orders)
    subs = subgroups(g)
    print(f"order {g.order}: {len(subs)} subgroups")
    for h in subs:
        print("  {" + ", ".join(str(g.element_tuple(i)) for i in sorted(h))
              + "}")
    return 0


def _cmd_bij(args) -> int:
    if args.action == "pair":
        print(cantor_pair(args.m, args.n))
    elif args.action == "unpair":
        m, n = cantor_unpair(args.k)
        print(f"{m} {n}")
    elif args.action == "finset-encode":
        items = [int(x) for x in args.items.split(",") if x != ""]
        print(finset_encode(items))
    elif args.action == "finset-decode":
        print(",".join(map(str, sorted(finset_decode(args.k)))))
    else:  # roundtrip
        limit = args.limit
        bad = 0
        for k in range(limit):
            m, n = cantor_unpair(k)
            if cantor_pair(m, n) != k:
                bad += 1
        side = int(limit ** 0.5) + 1
        for m in range(side):
            for n in range(side):
                if cantor_unpair(cantor_pair(m, n)) != (m, n):
                    bad += 1
        print(f"roundtrip checked {limit} codes and {side}x{side} pairs: "
              f"{bad} failures")
        return 0 if bad == 0 else 1
    return 0


def _cmd_corpus(args) -> int:
    config = CorpusConfig(
        zmod_max=args.zmod_max,
        product_order_max=args.product_order_max,
        group_order_max=args.group_order_max,
        classifier_specs=args.classifier_specs,
        seed=args.seed,
    )
    report, timings = run_corpus(config, jobs=args.jobs)
    out = args.out
    if out:
        out_dir = os.path.dirname(os.path.abspath(out)) or "."
        os.makedirs(out_dir, exist_ok=True)
        write_json(report, out)
        csv_path = os.path.splitext(out)[0] + ".csv"
        write_csv(report, csv_path)
        written = [out, csv_path]
        if not args.no_figures:
            written += render_figures(report, out_dir)
        for p in written:
            print(f"wrote {p}")
    print(summary_table(report))
    print("timings: " + ", ".join(f"{k}={v:.1f}s" for k, v in timings.items()))
    return 1 if report["failures"] else 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cardalg", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate a cardinal expression")
    p.add_argument("expr")
    p.add_argument("--mode", choices=["zfc", "gch"], default="zfc")
    p.add_argument("--trace", choices=["none", "text", "json"], default="none")
    p.set_defaults(fn=_cmd_eval)

    p = sub.add_parser("ring", help="finite/effective ring checks")
    rsub = p.add_subparsers(dest="action", required=True)
    pc = rsub.add_parser("check")
    pc.add_argument("spec")
    pc.add_argument("--all", action="store_true")
    pc.add_argument("--balanced", action="store_true")
    pc.add_argument("--tfr", action="store_true")
    pc.add_argument("--depth", action="store_true")
    pc.add_argument("--selfinj", action="store_true")
    pc.add_argument("--json", action="store_true")
    pc.set_defaults(fn=_cmd_ring)

    p = sub.add_parser("group", help="countable abelian group classification")
    p.add_argument("action", choices=["classify", "witness", "subgroups"])
    p.add_argument("spec")
    p.set_defaults(fn=_cmd_group)

    p = sub.add_parser("bij", help="countable bijection witnesses")
    bsub = p.add_subparsers(dest="action", required=True)
    bp = bsub.add_parser("pair")
    bp.add_argument("m", type=int)
    bp.add_argument("n", type=int)
    bp = bsub.add_parser("unpair")
    bp.add_argument("k", type=int)
    bp = bsub.add_parser("finset-encode")
    bp.add_argument("items")
    bp = bsub.add_parser("finset-decode")
    bp.add_argument("k", type=int)
    bp = bsub.add_parser("roundtrip")
    bp.add_argument("--limit", type=int, default=10000)
    p.set_defaults(fn=_cmd_bij)

    p = sub.add_parser("corpus", help="run the verification corpus")
    csub = p.add_subparsers(dest="action", required=True)
    cp = csub.add_parser("run")
    cp.add_argument("--out", default="")
    cp.add_argument("--jobs", type=int, default=1)
    cp.add_argument("--no-figures", action="store_true")
    cp.add_argument("--zmod-max", type=int, default=100)
    cp.add_argument("--product-order-max", type=int, default=200)
    cp.add_argument("--group-order-max", type=int, default=64)
    cp.add_argument("--classifier-specs", type=int, default=50)
    cp.add_argument("--seed", type=int, default=20250801)
    cp.set_defaults(fn=_cmd_corpus)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (RingError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
