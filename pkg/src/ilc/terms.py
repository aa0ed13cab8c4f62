"""Term syntax: the untyped lambda calculus with sums, pairs and iso-recursion.

Contexts are ordinary terms containing exactly one occurrence of the
distinguished hole marker (written @ in concrete syntax).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass


class Term:
    """Base class for all term constructors."""

    __slots__ = ()


@dataclass(frozen=True)
class Hole(Term):
    """The incomplete-program placeholder, written _. Never a value."""


@dataclass(frozen=True)
class Var(Term):
    """Variable occurrence: x"""

    name: str


@dataclass(frozen=True)
class Unit(Term):
    """The unit value: ()"""


@dataclass(frozen=True)
class Inl(Term):
    """Left injection: inl e"""

    body: Term


@dataclass(frozen=True)
class Inr(Term):
    """Right injection: inr e"""

    body: Term


@dataclass(frozen=True)
class MatchSum(Term):
    """Sum elimination: match e { inl x -> e1 | inr y -> e2 }"""

    scrutinee: Term
    left_binder: str
    left: Term
    right_binder: str
    right: Term


@dataclass(frozen=True)
class Pair(Term):
    """Pair construction: (e1, e2)"""

    first: Term
    second: Term


@dataclass(frozen=True)
class MatchPair(Term):
    """Pair elimination: match e { (x, y) -> e1 }. Binders must be distinct."""

    scrutinee: Term
    first_binder: str
    second_binder: str
    body: Term

    def __post_init__(self) -> None:
        if self.first_binder == self.second_binder:
            raise ValueError(
                f"pair-pattern binders must differ, got {self.first_binder!r} twice"
            )


@dataclass(frozen=True)
class Lam(Term):
    """Abstraction: fun x -> e"""

    binder: str
    body: Term


@dataclass(frozen=True)
class App(Term):
    """Application: e1 e2 (left-associative, call-by-value)"""

    fn: Term
    arg: Term


@dataclass(frozen=True)
class Roll(Term):
    """Fold into the recursive type: roll e"""

    body: Term


@dataclass(frozen=True)
class Unroll(Term):
    """Unfold one layer of the recursive type: unroll e"""

    body: Term


@dataclass(frozen=True)
class CtxHole(Term):
    """Context hole marker, written @. Only legal inside a context."""


# A context is a Term with exactly one CtxHole leaf; there is no separate type.
Context = Term

_fresh_counter = itertools.count(1)


def fresh_name(base: str = "x") -> str:
    """Return a name no parser accepts, derived from base.

    The '!' separator is outside the identifier alphabet, so fresh names can
    never collide with source-program variables. next() on the shared counter
    is atomic under the GIL, so concurrent fuzz trials may share it.
    """
    stem = base.split("!", 1)[0] or "x"
    return f"{stem}!{next(_fresh_counter)}"


def free_vars(t: Term) -> frozenset[str]:
    match t:
        case Var(name):
            return frozenset((name,))
        case Hole() | Unit() | CtxHole():
            return frozenset()
        case Inl(b) | Inr(b) | Roll(b) | Unroll(b):
            return free_vars(b)
        case Pair(a, b) | App(a, b):
            return free_vars(a) | free_vars(b)
        case Lam(x, b):
            return free_vars(b) - {x}
        case MatchSum(s, xl, l, xr, r):
            return free_vars(s) | (free_vars(l) - {xl}) | (free_vars(r) - {xr})
        case MatchPair(s, x1, x2, b):
            return free_vars(s) | (free_vars(b) - {x1, x2})
    raise TypeError(f"not a term: {t!r}")


def is_value(t: Term) -> bool:
    """Values: (), inl v, inr v, (v1, v2), roll v, and every lambda."""
    match t:
        case Unit() | Lam():
            return True
        case Inl(b) | Inr(b) | Roll(b):
            return is_value(b)
        case Pair(a, b):
            return is_value(a) and is_value(b)
        case _:
            return False


def term_size(t: Term) -> int:
    """Number of constructor nodes, counting holes and variables as 1."""
    match t:
        case Hole() | Var() | Unit() | CtxHole():
            return 1
        case Inl(b) | Inr(b) | Roll(b) | Unroll(b) | Lam(_, b):
            return 1 + term_size(b)
        case Pair(a, b) | App(a, b):
            return 1 + term_size(a) + term_size(b)
        case MatchSum(s, _, l, _, r):
            return 1 + term_size(s) + term_size(l) + term_size(r)
        case MatchPair(s, _, _, b):
            return 1 + term_size(s) + term_size(b)
    raise TypeError(f"not a term: {t!r}")


def hole_count(t: Term) -> int:
    match t:
        case CtxHole():
            return 1
        case Hole() | Var() | Unit():
            return 0
        case Inl(b) | Inr(b) | Roll(b) | Unroll(b) | Lam(_, b):
            return hole_count(b)
        case Pair(a, b) | App(a, b):
            return hole_count(a) + hole_count(b)
        case MatchSum(s, _, l, _, r):
            return hole_count(s) + hole_count(l) + hole_count(r)
        case MatchPair(s, _, _, b):
            return hole_count(s) + hole_count(b)
    raise TypeError(f"not a term: {t!r}")


def is_context(t: Term) -> bool:
    return hole_count(t) == 1


def plug(ctx: Context, filler: Term) -> Term:
    """Replace the hole of ctx with filler, verbatim.

    Plugging is textual: binders in ctx deliberately capture free variables of
    filler. That is what makes insertion/deletion frames able to move code
    under a binder.
    """
    match ctx:
        case CtxHole():
            return filler
        case Hole() | Var() | Unit():
            return ctx
        case Inl(b):
            return Inl(plug(b, filler))
        case Inr(b):
            return Inr(plug(b, filler))
        case Roll(b):
            return Roll(plug(b, filler))
        case Unroll(b):
            return Unroll(plug(b, filler))
        case Lam(x, b):
            return Lam(x, plug(b, filler))
        case Pair(a, b):
            return Pair(plug(a, filler), plug(b, filler))
        case App(a, b):
            return App(plug(a, filler), plug(b, filler))
        case MatchSum(s, xl, l, xr, r):
            return MatchSum(plug(s, filler), xl, plug(l, filler), xr, plug(r, filler))
        case MatchPair(s, x1, x2, b):
            return MatchPair(plug(s, filler), x1, x2, plug(b, filler))
    raise TypeError(f"not a term: {ctx!r}")


def split_context(ctx: Context) -> tuple[Context, Context]:
    """Split a non-trivial context into (depth-1 frame, remaining context).

    ctx must contain exactly one hole and must not be the bare hole. The frame
    is the root constructor with @ at the child on the hole path; the rest is
    that child. plug(frame, rest) == ctx.
    """
    if isinstance(ctx, CtxHole):
        raise ValueError("cannot split the bare hole")

    def one(child: Context, make) -> tuple[Context, Context]:
        return make(CtxHole()), child

    match ctx:
        case Inl(b):
            return one(b, Inl)
        case Inr(b):
            return one(b, Inr)
        case Roll(b):
            return one(b, Roll)
        case Unroll(b):
            return one(b, Unroll)
        case Lam(x, b):
            return Lam(x, CtxHole()), b
        case Pair(a, b):
            if hole_count(a) == 1:
                return Pair(CtxHole(), b), a
            return Pair(a, CtxHole()), b
        case App(a, b):
            if hole_count(a) == 1:
                return App(CtxHole(), b), a
            return App(a, CtxHole()), b
        case MatchSum(s, xl, l, xr, r):
            if hole_count(s) == 1:
                return MatchSum(CtxHole(), xl, l, xr, r), s
            if hole_count(l) == 1:
                return MatchSum(s, xl, CtxHole(), xr, r), l
            return MatchSum(s, xl, l, xr, CtxHole()), r
        case MatchPair(s, x1, x2, b):
            if hole_count(s) == 1:
                return MatchPair(CtxHole(), x1, x2, b), s
            return MatchPair(s, x1, x2, CtxHole()), b
    raise ValueError(f"no hole in {ctx!r}")


def alpha_eq(a: Term, b: Term) -> bool:
    """Alpha-equivalence. Free variables compare by name, bound ones by binder.

    Context holes only match context holes, so the function doubles as
    alpha-equivalence on contexts.
    """
    return _alpha(a, b, {}, {}, 0)


def _alpha(a: Term, b: Term, env_a: dict[str, int], env_b: dict[str, int], depth: int) -> bool:
    match a, b:
        case Hole(), Hole():
            return True
        case Unit(), Unit():
            return True
        case CtxHole(), CtxHole():
            return True
        case Var(x), Var(y):
            da, db = env_a.get(x), env_b.get(y)
            if da is None and db is None:
                return x == y
            return da == db
        case (Inl(p), Inl(q)) | (Inr(p), Inr(q)) | (Roll(p), Roll(q)) | (Unroll(p), Unroll(q)):
            return _alpha(p, q, env_a, env_b, depth)
        case (Pair(p1, p2), Pair(q1, q2)) | (App(p1, p2), App(q1, q2)):
            return _alpha(p1, q1, env_a, env_b, depth) and _alpha(p2, q2, env_a, env_b, depth)
        case Lam(x, p), Lam(y, q):
            return _alpha(p, q, {**env_a, x: depth}, {**env_b, y: depth}, depth + 1)
        case MatchSum(s1, xl, l1, xr, r1), MatchSum(s2, yl, l2, yr, r2):
            return (
                _alpha(s1, s2, env_a, env_b, depth)
                and _alpha(l1, l2, {**env_a, xl: depth}, {**env_b, yl: depth}, depth + 1)
                and _alpha(r1, r2, {**env_a, xr: depth}, {**env_b, yr: depth}, depth + 1)
            )
        case MatchPair(s1, x1, x2, p), MatchPair(s2, y1, y2, q):
            return _alpha(s1, s2, env_a, env_b, depth) and _alpha(
                p,
                q,
                {**env_a, x1: depth, x2: depth + 1},
                {**env_b, y1: depth, y2: depth + 1},
                depth + 2,
            )
        case _:
            return False
