"""First-class deltas over terms, with computable endpoints.

A delta d denotes an edit from src(d) to tgt(d). Both endpoints are total
functions of the delta itself: epsilon carries the unchanged term, insertion
and deletion carry their one-hole frame, replacement carries both sides.
"""
from __future__ import annotations

from dataclasses import dataclass

from .terms import (
    App,
    Context,
    CtxHole,
    Inl,
    Inr,
    Lam,
    MatchPair,
    MatchSum,
    Pair,
    Roll,
    Term,
    Unroll,
    Var,
    alpha_eq,
    hole_count,
    is_value,
    plug,
    split_context,
    term_size,
)


class Delta:
    """Base class for all delta constructors."""

    __slots__ = ()


@dataclass(frozen=True)
class Eps(Delta):
    """No change, written ~{e}: both endpoints are the carried term."""

    at: Term


class _Framed(Delta):
    __slots__ = ()

    def __post_init__(self) -> None:
        holes = hole_count(self.frame)  # type: ignore[attr-defined]
        if holes != 1:
            raise ValueError(f"frame needs exactly one hole, found {holes}")


@dataclass(frozen=True)
class Ins(_Framed):
    """Insertion +[C]{d}: frame C exists only in the target endpoint."""

    frame: Context
    inner: Delta


@dataclass(frozen=True)
class Del(_Framed):
    """Deletion -[C]{d}: frame C exists only in the source endpoint."""

    frame: Context
    inner: Delta


@dataclass(frozen=True)
class InlCong(Delta):
    """Change under inl: inl d"""

    inner: Delta


@dataclass(frozen=True)
class InrCong(Delta):
    """Change under inr: inr d"""

    inner: Delta


@dataclass(frozen=True)
class InlBang(Delta):
    """Constructor flip inl! d: inr (src d) becomes inl (tgt d)."""

    inner: Delta


@dataclass(frozen=True)
class InrBang(Delta):
    """Constructor flip inr! d: inl (src d) becomes inr (tgt d)."""

    inner: Delta


@dataclass(frozen=True)
class MatchCong(Delta):
    """Componentwise change of a sum match; binders are fixed by the delta."""

    scrutinee: Delta
    left_binder: str
    left: Delta
    right_binder: str
    right: Delta


@dataclass(frozen=True)
class PairCong(Delta):
    """Componentwise change of a pair: (d1, d2)"""

    first: Delta
    second: Delta


@dataclass(frozen=True)
class LamCong(Delta):
    """Change under a lambda, binder fixed: fun x -> d"""

    binder: str
    body: Delta


@dataclass(frozen=True)
class AppCong(Delta):
    """Componentwise change of an application: d1 d2"""

    fn: Delta
    arg: Delta


@dataclass(frozen=True)
class RollCong(Delta):
    """Change under roll: roll d"""

    inner: Delta


@dataclass(frozen=True)
class UnrollCong(Delta):
    """Change under unroll: unroll d"""

    inner: Delta


@dataclass(frozen=True)
class Replace(Delta):
    """Wholesale replacement !{e1 => e2}: no structure is shared."""

    source: Term
    target: Term


@dataclass(frozen=True)
class VarReplace(Delta):
    """Variable rename at one occurrence: x ~> y"""

    source: str
    target: str


class EndpointMismatch(Exception):
    """Raised when a delta is applied to a term other than its source."""

    def __init__(self, expected: Term, actual: Term):
        self.expected = expected
        self.actual = actual
        super().__init__("delta source endpoint does not match the given term")


def src(d: Delta) -> Term:
    match d:
        case Eps(e):
            return e
        case Ins(_, inner):
            return src(inner)
        case Del(frame, inner):
            return plug(frame, src(inner))
        case InlCong(inner):
            return Inl(src(inner))
        case InrCong(inner):
            return Inr(src(inner))
        case InlBang(inner):
            return Inr(src(inner))
        case InrBang(inner):
            return Inl(src(inner))
        case MatchCong(s, xl, l, xr, r):
            return MatchSum(src(s), xl, src(l), xr, src(r))
        case PairCong(a, b):
            return Pair(src(a), src(b))
        case LamCong(x, b):
            return Lam(x, src(b))
        case AppCong(f, a):
            return App(src(f), src(a))
        case RollCong(inner):
            return Roll(src(inner))
        case UnrollCong(inner):
            return Unroll(src(inner))
        case Replace(source, _):
            return source
        case VarReplace(source, _):
            return Var(source)
    raise TypeError(f"not a delta: {d!r}")


def tgt(d: Delta) -> Term:
    match d:
        case Eps(e):
            return e
        case Ins(frame, inner):
            return plug(frame, tgt(inner))
        case Del(_, inner):
            return tgt(inner)
        case InlCong(inner):
            return Inl(tgt(inner))
        case InrCong(inner):
            return Inr(tgt(inner))
        case InlBang(inner):
            return Inl(tgt(inner))
        case InrBang(inner):
            return Inr(tgt(inner))
        case MatchCong(s, xl, l, xr, r):
            return MatchSum(tgt(s), xl, tgt(l), xr, tgt(r))
        case PairCong(a, b):
            return Pair(tgt(a), tgt(b))
        case LamCong(x, b):
            return Lam(x, tgt(b))
        case AppCong(f, a):
            return App(tgt(f), tgt(a))
        case RollCong(inner):
            return Roll(tgt(inner))
        case UnrollCong(inner):
            return Unroll(tgt(inner))
        case Replace(_, target):
            return target
        case VarReplace(_, target):
            return Var(target)
    raise TypeError(f"not a delta: {d!r}")


def apply(e: Term, d: Delta) -> Term:
    """Run the edit: returns tgt(d) once e matches src(d) up to alpha."""
    expected = src(d)
    if not alpha_eq(expected, e):
        raise EndpointMismatch(expected, e)
    return tgt(d)


def check_valid(d: Delta, e: Term) -> bool:
    """True when d is an edit of e, i.e. src(d) is alpha-equal to e."""
    return alpha_eq(src(d), e)


def delta_size(d: Delta) -> int:
    """Node count: annotations are free, frames and replacement targets are not."""
    match d:
        case Eps() | VarReplace():
            return 1
        case Ins(frame, inner) | Del(frame, inner):
            return term_size(frame) + delta_size(inner)
        case Replace(_, target):
            return 1 + term_size(target)
        case InlCong(i) | InrCong(i) | InlBang(i) | InrBang(i) | RollCong(i) | UnrollCong(i):
            return 1 + delta_size(i)
        case PairCong(a, b) | AppCong(a, b):
            return 1 + delta_size(a) + delta_size(b)
        case LamCong(_, b):
            return 1 + delta_size(b)
        case MatchCong(s, _, l, _, r):
            return 1 + delta_size(s) + delta_size(l) + delta_size(r)
    raise TypeError(f"not a delta: {d!r}")


def is_value_delta(d: Delta) -> bool:
    return is_value(src(d)) and is_value(tgt(d))


def decompose(d: Delta) -> Delta:
    """Normalize every insertion/deletion frame to depth 1.

    +[C1[C2]]{d} becomes +[C1]{+[C2]{d}} and dually for deletion; trivial
    @-frames drop out. Endpoints are preserved exactly.
    """
    match d:
        case Eps() | Replace() | VarReplace():
            return d
        case Ins(frame, inner):
            inner = decompose(inner)
            if isinstance(frame, CtxHole):
                return inner
            head, rest = split_context(frame)
            if isinstance(rest, CtxHole):
                return Ins(head, inner)
            return Ins(head, decompose(Ins(rest, inner)))
        case Del(frame, inner):
            inner = decompose(inner)
            if isinstance(frame, CtxHole):
                return inner
            head, rest = split_context(frame)
            if isinstance(rest, CtxHole):
                return Del(head, inner)
            return Del(head, decompose(Del(rest, inner)))
        case InlCong(i):
            return InlCong(decompose(i))
        case InrCong(i):
            return InrCong(decompose(i))
        case InlBang(i):
            return InlBang(decompose(i))
        case InrBang(i):
            return InrBang(decompose(i))
        case RollCong(i):
            return RollCong(decompose(i))
        case UnrollCong(i):
            return UnrollCong(decompose(i))
        case PairCong(a, b):
            return PairCong(decompose(a), decompose(b))
        case AppCong(f, a):
            return AppCong(decompose(f), decompose(a))
        case LamCong(x, b):
            return LamCong(x, decompose(b))
        case MatchCong(s, xl, l, xr, r):
            return MatchCong(decompose(s), xl, decompose(l), xr, decompose(r))
    raise TypeError(f"not a delta: {d!r}")


def find_occurrence(needle: Term, hay: Term) -> Context | None:
    """Leftmost-outermost structurally equal occurrence of needle in hay,
    returned as the surrounding context. None when needle does not occur."""
    if hay == needle:
        return CtxHole()
    match hay:
        case Inl(b):
            c = find_occurrence(needle, b)
            return Inl(c) if c is not None else None
        case Inr(b):
            c = find_occurrence(needle, b)
            return Inr(c) if c is not None else None
        case Roll(b):
            c = find_occurrence(needle, b)
            return Roll(c) if c is not None else None
        case Unroll(b):
            c = find_occurrence(needle, b)
            return Unroll(c) if c is not None else None
        case Lam(x, b):
            c = find_occurrence(needle, b)
            return Lam(x, c) if c is not None else None
        case Pair(a, b):
            c = find_occurrence(needle, a)
            if c is not None:
                return Pair(c, b)
            c = find_occurrence(needle, b)
            return Pair(a, c) if c is not None else None
        case App(f, a):
            c = find_occurrence(needle, f)
            if c is not None:
                return App(c, a)
            c = find_occurrence(needle, a)
            return App(f, c) if c is not None else None
        case MatchSum(s, xl, l, xr, r):
            c = find_occurrence(needle, s)
            if c is not None:
                return MatchSum(c, xl, l, xr, r)
            c = find_occurrence(needle, l)
            if c is not None:
                return MatchSum(s, xl, c, xr, r)
            c = find_occurrence(needle, r)
            return MatchSum(s, xl, l, xr, c) if c is not None else None
        case MatchPair(s, x1, x2, b):
            c = find_occurrence(needle, s)
            if c is not None:
                return MatchPair(c, x1, x2, b)
            c = find_occurrence(needle, b)
            return MatchPair(s, x1, x2, c) if c is not None else None
        case _:
            return None


def diff(e1: Term, e2: Term) -> Delta:
    """A canonical delta with src e1 and tgt e2.

    Preference order: epsilon for alpha-equal terms, congruence when the head
    constructor and binders agree, a bang for flipped injections, then an
    insertion (preferred) or deletion when one term occurs in the other, a
    rename for two variables, and wholesale replacement as the last resort.
    """
    if alpha_eq(e1, e2):
        return Eps(e1)
    match e1, e2:
        case Inl(a), Inl(b):
            return InlCong(diff(a, b))
        case Inr(a), Inr(b):
            return InrCong(diff(a, b))
        case Roll(a), Roll(b):
            return RollCong(diff(a, b))
        case Unroll(a), Unroll(b):
            return UnrollCong(diff(a, b))
        case Pair(a1, a2), Pair(b1, b2):
            return PairCong(diff(a1, b1), diff(a2, b2))
        case App(f1, a1), App(f2, a2):
            return AppCong(diff(f1, f2), diff(a1, a2))
        case Lam(x, a), Lam(y, b) if x == y:
            return LamCong(x, diff(a, b))
        case MatchSum(s1, xl, l1, xr, r1), MatchSum(s2, yl, l2, yr, r2) if xl == yl and xr == yr:
            return MatchCong(diff(s1, s2), xl, diff(l1, l2), xr, diff(r1, r2))
        case Inl(a), Inr(b):
            return InrBang(diff(a, b))
        case Inr(a), Inl(b):
            return InlBang(diff(a, b))
    ctx = find_occurrence(e1, e2)
    if ctx is not None and not isinstance(ctx, CtxHole):
        return Ins(ctx, Eps(e1))
    ctx = find_occurrence(e2, e1)
    if ctx is not None and not isinstance(ctx, CtxHole):
        return Del(ctx, Eps(e2))
    match e1, e2:
        case Var(x), Var(y):
            return VarReplace(x, y)
    return Replace(e1, e2)
