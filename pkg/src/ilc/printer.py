"""Pretty printers for terms, contexts and deltas.

Output re-parses to the same tree (for parser-accepted variable names) and
carries the minimum parentheses the precedence levels require.
"""
from __future__ import annotations

from .delta import (
    AppCong,
    Del,
    Delta,
    Eps,
    InlBang,
    InlCong,
    Ins,
    InrBang,
    InrCong,
    LamCong,
    MatchCong,
    PairCong,
    Replace,
    RollCong,
    UnrollCong,
    VarReplace,
)
from .terms import (
    App,
    Context,
    CtxHole,
    Hole,
    Inl,
    Inr,
    Lam,
    MatchPair,
    MatchSum,
    Pair,
    Roll,
    Term,
    Unit,
    Unroll,
    Var,
)

# Precedence levels, loosest first. A node prints bare when its own level is
# at least the level its position demands.
_LAM, _PREFIX, _APP, _ATOM = 0, 1, 2, 3


def pretty_term(t: Term) -> str:
    return _pt(t, _LAM)


def pretty_context(c: Context) -> str:
    return _pt(c, _LAM)


def _wrap(text: str, own: int, need: int) -> str:
    return f"({text})" if own < need else text


def _pt(t: Term, need: int) -> str:
    match t:
        case Hole():
            return "_"
        case CtxHole():
            return "@"
        case Var(x):
            return x
        case Unit():
            return "()"
        case Pair(a, b):
            return f"({_pt(a, _LAM)}, {_pt(b, _LAM)})"
        case Inl(b):
            return _wrap(f"inl {_pt(b, _PREFIX)}", _PREFIX, need)
        case Inr(b):
            return _wrap(f"inr {_pt(b, _PREFIX)}", _PREFIX, need)
        case Roll(b):
            return _wrap(f"roll {_pt(b, _PREFIX)}", _PREFIX, need)
        case Unroll(b):
            return _wrap(f"unroll {_pt(b, _PREFIX)}", _PREFIX, need)
        case Lam(x, b):
            return _wrap(f"fun {x} -> {_pt(b, _LAM)}", _LAM, need)
        case App(f, a):
            return _wrap(f"{_pt(f, _APP)} {_pt(a, _ATOM)}", _APP, need)
        case MatchSum(s, xl, l, xr, r):
            return (
                f"match {_pt(s, _LAM)} {{ inl {xl} -> {_pt(l, _LAM)}"
                f" | inr {xr} -> {_pt(r, _LAM)} }}"
            )
        case MatchPair(s, x1, x2, b):
            return f"match {_pt(s, _LAM)} {{ ({x1}, {x2}) -> {_pt(b, _LAM)} }}"
    raise TypeError(f"not a term: {t!r}")


def pretty_delta(d: Delta) -> str:
    return _pd(d, _LAM)


def _cong_child(inner: Delta) -> str:
    # 'inl !{...}' would lex as the bang form, so a Replace child of a plain
    # inl/inr congruence needs parentheses.
    if isinstance(inner, Replace):
        return f"({_pd(inner, _LAM)})"
    return _pd(inner, _PREFIX)


def _pd(d: Delta, need: int) -> str:
    match d:
        case Eps(e):
            return f"~{{{_pt(e, _LAM)}}}"
        case Ins(frame, inner):
            return f"+[{_pt(frame, _LAM)}]{{{_pd(inner, _LAM)}}}"
        case Del(frame, inner):
            return f"-[{_pt(frame, _LAM)}]{{{_pd(inner, _LAM)}}}"
        case Replace(a, b):
            return f"!{{{_pt(a, _LAM)} => {_pt(b, _LAM)}}}"
        case VarReplace(x, y):
            return f"{x} ~> {y}"
        case PairCong(a, b):
            return f"({_pd(a, _LAM)}, {_pd(b, _LAM)})"
        case InlCong(inner):
            return _wrap(f"inl {_cong_child(inner)}", _PREFIX, need)
        case InrCong(inner):
            return _wrap(f"inr {_cong_child(inner)}", _PREFIX, need)
        case InlBang(inner):
            return _wrap(f"inl! {_pd(inner, _PREFIX)}", _PREFIX, need)
        case InrBang(inner):
            return _wrap(f"inr! {_pd(inner, _PREFIX)}", _PREFIX, need)
        case RollCong(inner):
            return _wrap(f"roll {_pd(inner, _PREFIX)}", _PREFIX, need)
        case UnrollCong(inner):
            return _wrap(f"unroll {_pd(inner, _PREFIX)}", _PREFIX, need)
        case LamCong(x, b):
            return _wrap(f"fun {x} -> {_pd(b, _LAM)}", _LAM, need)
        case AppCong(f, a):
            return _wrap(f"{_pd(f, _APP)} {_pd(a, _ATOM)}", _APP, need)
        case MatchCong(s, xl, l, xr, r):
            return (
                f"match {_pd(s, _LAM)} {{ inl {xl} -> {_pd(l, _LAM)}"
                f" | inr {xr} -> {_pd(r, _LAM)} }}"
            )
    raise TypeError(f"not a delta: {d!r}")
