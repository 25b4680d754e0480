"""Evaluator: reduces expressions to normal form with a replayable trace.

Evaluation is innermost-first; every rewrite appends a step whose
before/after renderings are exact, so :func:`replay` can reproduce the
result from the input by textual substitution alone.  Values the ZFC
rules leave undecided come back as :class:`~cardalg.cardinal.Unresolved`
with their certified bounds mirrored into ``trace.bounds``; those render
as ``unknown`` and only annotate the trace (notes are skipped by
replay).
"""

from __future__ import annotations

from typing import Optional, Tuple, Union

from . import algebra
from .cardinal import (
    Aleph, Cmp, Exp, Finite, Mode, PowSet, Unresolved, Value,
    _koenig_strict, _pow_operand, card_add, card_compare, card_directsum,
    card_finsets, card_mul, card_pow, card_prod_family, card_sum_family,
    render as render_value,
)
from .exprlang import AlephLit, BinOp, Call, ExprAST, Num, parse, render
from .trace import BoundsInfo, Trace, annotate

_CARD_TYPES = (Finite, Aleph, PowSet, Exp)

_OPS = {
    "+": card_add,
    "*": card_mul,
    "^": card_pow,
    "exp": card_pow,
    "card_finsets": card_finsets,
    "card_dsum": card_directsum,
    "card_sum_family": card_sum_family,
    "card_prod_family": card_prod_family,
    "card_monoid_ring": algebra.card_monoid_ring,
    "card_poly": algebra.card_poly_ring,
    "card_powser": algebra.card_power_series,
    "card_tfr": algebra.card_fraction_ring,
}


def _apply(name: str, args: Tuple[Value, ...], mode: Mode,
           trace: Optional[Trace]) -> Value:
    fn = _OPS[name]
    if all(isinstance(a, _CARD_TYPES) for a in args):
        return fn(*args, mode=mode, trace=trace)
    idxs = [i for i, a in enumerate(args) if isinstance(a, Unresolved)]
    if len(idxs) == 1:
        i = idxs[0]
        u = args[i]
        if u.candidates:
            outs = []
            for c in u.candidates:
                sub = args[:i] + (c,) + args[i + 1:]
                r = fn(*sub, mode=mode, trace=None)
                if isinstance(r, Unresolved):
                    outs = None
                    break
                outs.append(r)
            if outs:
                if all(card_compare(o, outs[0], mode) is Cmp.EQUAL
                       for o in outs[1:]):
                    annotate(trace, "R-MONO",
                             f"every candidate input yields "
                             f"{render_value(outs[0])}")
                    return outs[0]
                annotate(trace, "R-MONO",
                         "candidates propagate: result is one of {"
                         + ", ".join(render_value(o) for o in outs) + "}")
                return Unresolved(candidates=tuple(outs))
        lo = hi = None
        if u.lo is not None:
            r = fn(*(args[:i] + (u.lo,) + args[i + 1:]), mode=mode, trace=None)
            lo = r if isinstance(r, _CARD_TYPES) else None
        if u.hi is not None:
            r = fn(*(args[:i] + (u.hi,) + args[i + 1:]), mode=mode, trace=None)
            hi = r if isinstance(r, _CARD_TYPES) else None
        annotate(trace, "R-MONO",
                 "interval bounds propagate monotonically: result in ["
                 + (render_value(lo) if lo is not None else "?") + ", "
                 + (render_value(hi) if hi is not None else "?") + "]")
        return Unresolved(lo=lo, hi=hi)
    annotate(trace, "R-MONO", "multiple undetermined arguments")
    return Unresolved()


def _eval(node: ExprAST, mode: Mode, trace: Optional[Trace]) -> Value:
    from .cardinal import DomainError
    if isinstance(node, Num):
        return Finite(node.n)
    if isinstance(node, AlephLit):
        return Aleph(node.index)
    if isinstance(node, BinOp):
        left = _eval(node.left, mode, trace)
        right = _eval(node.right, mode, trace)
        op, args = node.op, (left, right)
    elif isinstance(node, Call):
        op = node.name
        args = tuple(_eval(a, mode, trace) for a in node.args)
    else:
        raise TypeError(f"not an AST node: {node!r}")
    try:
        return _apply(op, args, mode, trace)
    except DomainError as e:
        if "(in " in str(e):  # already carries the innermost sub-expression
            raise
        raise DomainError(f"{e} (in {render(node)})") from None


def value_bounds(v: Value) -> Optional[BoundsInfo]:
    """Certified bounds worth reporting for an evaluation result."""
    if isinstance(v, Exp):
        return BoundsInfo(
            lo=render_value(v.base),
            hi=f"2^{_pow_operand(v.base)}",
            lo_strict=_koenig_strict(v),
            hi_strict=False,
            candidates=(render_value(v.base), f"2^{_pow_operand(v.base)}"),
        )
    if isinstance(v, Unresolved):
        return BoundsInfo(
            lo=render_value(v.lo) if v.lo is not None else None,
            hi=render_value(v.hi) if v.hi is not None else None,
            lo_strict=v.lo_strict,
            hi_strict=v.hi_strict,
            candidates=tuple(render_value(c) for c in v.candidates),
        )
    return None


def evaluate(ast_or_text: Union[str, ExprAST],
             mode: Mode = Mode.ZFC) -> Tuple[Value, Trace]:
    """Evaluate an expression (or its text) to (value, trace)."""
    ast = parse(ast_or_text) if isinstance(ast_or_text, str) else ast_or_text
    trace = Trace(input=render(ast), mode=mode.value)
    value = _eval(ast, mode, trace)
    trace.result = render_value(value)
    trace.bounds = value_bounds(value)
    return value, trace


# ---------------------------------------------------------------------------
# replay
# ---------------------------------------------------------------------------

def _substitute(node: ExprAST, target: str,
                repl: ExprAST) -> Tuple[ExprAST, bool]:
    """Replace the first (innermost, left-to-right) node rendering as
    ``target``; returns (new node, found)."""
    if isinstance(node, BinOp):
        left, found = _substitute(node.left, target, repl)
        if found:
            return BinOp(node.op, left, node.right), True
        right, found = _substitute(node.right, target, repl)
        if found:
            return BinOp(node.op, node.left, right), True
    elif isinstance(node, Call):
        args = list(node.args)
        for i, a in enumerate(args):
            new, found = _substitute(a, target, repl)
            if found:
                args[i] = new
                return Call(node.name, tuple(args)), True
    if render(node) == target:
        return repl, True
    return node, False


def _unfold_exp(node: ExprAST) -> ExprAST:
    """exp(a, b) is definitionally a^b; replay matches modulo that."""
    if isinstance(node, BinOp):
        return BinOp(node.op, _unfold_exp(node.left), _unfold_exp(node.right))
    if isinstance(node, Call):
        args = tuple(_unfold_exp(a) for a in node.args)
        if node.name == "exp":
            return BinOp("^", args[0], args[1])
        return Call(node.name, args)
    return node


def replay(trace: Trace) -> str:
    """Re-apply the recorded rewrites to the input; returns the final
    rendering (equal to ``trace.result`` for determinate evaluations)."""
    ast = _unfold_exp(parse(trace.input))
    for step in trace.steps:
        if step.kind != "rewrite":
            continue
        repl = parse(step.after)
        ast, found = _substitute(ast, step.before, repl)
        if not found:
            raise ValueError(f"replay lost step {step.rule}: "
                             f"{step.before!r} not present")
    return render(ast)


def replay_ok(trace: Trace) -> bool:
    """Replay invariant: determinate traces reproduce their result."""
    if trace.result == "unknown":
        replay(trace)  # the steps must still apply cleanly
        return True
    return replay(trace) == trace.result
