"""Sequential composition, compatibility and residuals of deltas.

compose rewrites a pair of abutting deltas into one delta with the combined
endpoints. compatible is the directional side-by-side relation; residual
replays the left delta after the right one. All three work on decomposed
deltas (depth-1 frames).
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
    decompose,
    src,
    tgt,
)
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
    alpha_eq,
)


class NotComposable(Exception):
    """tgt(d1) and src(d2) disagree, so d1 then d2 is not a history."""

    def __init__(self, d1: Delta, d2: Delta):
        self.d1 = d1
        self.d2 = d2
        super().__init__("target of the first delta differs from source of the second")


class NotCoinitial(Exception):
    """The two deltas do not share a source endpoint."""


class UndefinedResidual(Exception):
    """No residual equation applies to this pair."""


# ---------------------------------------------------------------------------
# congruence lifting of a depth-1 frame


def lift_frame(frame: Context, inner: Delta) -> Delta:
    """The congruence delta that changes only the hole of a depth-1 frame."""
    match frame:
        case Inl(CtxHole()):
            return InlCong(inner)
        case Inr(CtxHole()):
            return InrCong(inner)
        case Roll(CtxHole()):
            return RollCong(inner)
        case Unroll(CtxHole()):
            return UnrollCong(inner)
        case Lam(x, CtxHole()):
            return LamCong(x, inner)
        case Pair(CtxHole(), t):
            return PairCong(inner, Eps(t))
        case Pair(t, CtxHole()):
            return PairCong(Eps(t), inner)
        case App(CtxHole(), t):
            return AppCong(inner, Eps(t))
        case App(t, CtxHole()):
            return AppCong(Eps(t), inner)
        case MatchSum(CtxHole(), xl, l, xr, r):
            return MatchCong(inner, xl, Eps(l), xr, Eps(r))
        case MatchSum(s, xl, CtxHole(), xr, r):
            return MatchCong(Eps(s), xl, inner, xr, Eps(r))
        case MatchSum(s, xl, l, xr, CtxHole()):
            return MatchCong(Eps(s), xl, Eps(l), xr, inner)
    raise UndefinedResidual(f"no congruence form for frame {frame!r}")


def match_lift(frame: Context, d: Delta) -> Delta | None:
    """Inverse of lift_frame: the delta at the hole of frame, if d is exactly
    the congruence of that frame (epsilons with equal terms elsewhere)."""
    match frame, d:
        case Inl(CtxHole()), InlCong(i):
            return i
        case Inr(CtxHole()), InrCong(i):
            return i
        case Roll(CtxHole()), RollCong(i):
            return i
        case Unroll(CtxHole()), UnrollCong(i):
            return i
        case Lam(x, CtxHole()), LamCong(y, i) if x == y:
            return i
        case Pair(CtxHole(), t), PairCong(i, Eps(t2)) if t == t2:
            return i
        case Pair(t, CtxHole()), PairCong(Eps(t2), i) if t == t2:
            return i
        case App(CtxHole(), t), AppCong(i, Eps(t2)) if t == t2:
            return i
        case App(t, CtxHole()), AppCong(Eps(t2), i) if t == t2:
            return i
        case MatchSum(CtxHole(), xl, l, xr, r), MatchCong(i, yl, Eps(l2), yr, Eps(r2)) if (
            xl == yl and xr == yr and l == l2 and r == r2
        ):
            return i
        case MatchSum(s, xl, CtxHole(), xr, r), MatchCong(Eps(s2), yl, i, yr, Eps(r2)) if (
            xl == yl and xr == yr and s == s2 and r == r2
        ):
            return i
        case MatchSum(s, xl, l, xr, CtxHole()), MatchCong(Eps(s2), yl, Eps(l2), yr, i) if (
            xl == yl and xr == yr and s == s2 and l == l2
        ):
            return i
    return None


# ---------------------------------------------------------------------------
# composition


def compose(d1: Delta, d2: Delta) -> Delta:
    """d1 then d2 as one delta: src(d1) to tgt(d2).

    Applies the equational rewrites (epsilon absorption, frame cancellation,
    frame absorption, bang cancellation), recurses through matching
    congruences, and otherwise falls back to a wholesale Replace, which is
    always endpoint-correct.
    """
    if not alpha_eq(tgt(d1), src(d2)):
        raise NotComposable(d1, d2)
    return _comp(decompose(d1), decompose(d2))


def _comp(d1: Delta, d2: Delta) -> Delta:
    if isinstance(d1, Eps):
        return d2
    if isinstance(d2, Eps):
        return d1
    if isinstance(d1, Ins) and isinstance(d2, Del) and d1.frame == d2.frame:
        return _comp(d1.inner, d2.inner)
    if isinstance(d1, Ins):
        hole_delta = match_lift(d1.frame, d2)
        if hole_delta is not None:
            return Ins(d1.frame, _comp(d1.inner, hole_delta))
    if isinstance(d2, Del):
        hole_delta = match_lift(d2.frame, d1)
        if hole_delta is not None:
            return Del(d2.frame, _comp(hole_delta, d2.inner))
    match d1, d2:
        case InlBang(a), InrBang(b):
            return InrCong(_comp(a, b))
        case InrBang(a), InlBang(b):
            return InlCong(_comp(a, b))
        case InlCong(a), InlCong(b):
            return InlCong(_comp(a, b))
        case InrCong(a), InrCong(b):
            return InrCong(_comp(a, b))
        case RollCong(a), RollCong(b):
            return RollCong(_comp(a, b))
        case UnrollCong(a), UnrollCong(b):
            return UnrollCong(_comp(a, b))
        case PairCong(a1, a2), PairCong(b1, b2):
            return PairCong(_comp(a1, b1), _comp(a2, b2))
        case AppCong(a1, a2), AppCong(b1, b2):
            return AppCong(_comp(a1, b1), _comp(a2, b2))
        case LamCong(x, a), LamCong(y, b) if x == y:
            return LamCong(x, _comp(a, b))
        case MatchCong(s1, xl, l1, xr, r1), MatchCong(s2, yl, l2, yr, r2) if (
            xl == yl and xr == yr
        ):
            return MatchCong(_comp(s1, s2), xl, _comp(l1, l2), xr, _comp(r1, r2))
    return Replace(src(d1), tgt(d2))


# ---------------------------------------------------------------------------
# compatibility


def compatible(d1: Delta, d2: Delta) -> bool:
    """Directional side-by-side relation on coinitial deltas.

    Epsilon on the left tolerates anything; an insertion on the left drops its
    frame; deletions must delete alpha-equal frames; congruences must agree
    constructor- and binder-wise. Nothing else relates, so the relation is
    deliberately not symmetric.
    """
    if not alpha_eq(src(d1), src(d2)):
        raise NotCoinitial("the deltas edit different terms")
    return _compat(decompose(d1), decompose(d2))


def _compat(d1: Delta, d2: Delta) -> bool:
    if isinstance(d1, Eps):
        return True
    if isinstance(d1, Ins):
        return _compat(d1.inner, d2)
    if isinstance(d1, Del):
        return (
            isinstance(d2, Del)
            and alpha_eq(d1.frame, d2.frame)
            and _compat(d1.inner, d2.inner)
        )
    match d1, d2:
        case InlCong(a), InlCong(b):
            return _compat(a, b)
        case InrCong(a), InrCong(b):
            return _compat(a, b)
        case RollCong(a), RollCong(b):
            return _compat(a, b)
        case UnrollCong(a), UnrollCong(b):
            return _compat(a, b)
        case PairCong(a1, a2), PairCong(b1, b2):
            return _compat(a1, b1) and _compat(a2, b2)
        case AppCong(a1, a2), AppCong(b1, b2):
            return _compat(a1, b1) and _compat(a2, b2)
        case LamCong(x, a), LamCong(y, b) if x == y:
            return _compat(a, b)
        case MatchCong(s1, xl, l1, xr, r1), MatchCong(s2, yl, l2, yr, r2) if (
            xl == yl and xr == yr
        ):
            return _compat(s1, s2) and _compat(l1, l2) and _compat(r1, r2)
    return False


# ---------------------------------------------------------------------------
# residuals


def residual(d1: Delta, d2: Delta) -> Delta:
    """What remains of d1 after d2: a delta out of tgt(d2).

    Raises UndefinedResidual when no residual equation applies. Callers
    wanting the guarantee should check compatible(d1, d2) first; the
    equations themselves are more permissive than the compatibility relation
    (in particular residual(d, Eps(src d)) is d for every d).
    """
    return _res(decompose(d1), decompose(d2))


def _res(d1: Delta, d2: Delta) -> Delta:
    if isinstance(d2, Eps):
        return d1
    if isinstance(d1, Eps) and not isinstance(d2, Ins):
        return Eps(tgt(d2))
    if isinstance(d1, Ins):
        return Ins(d1.frame, _res(d1.inner, d2))
    if isinstance(d2, Ins):
        return lift_frame(d2.frame, _res(d1, d2.inner))
    if isinstance(d1, Del) and isinstance(d2, Del):
        if not alpha_eq(d1.frame, d2.frame):
            raise UndefinedResidual("deletions of different frames")
        return _res(d1.inner, d2.inner)
    match d1, d2:
        case InlCong(a), InlCong(b):
            return InlCong(_res(a, b))
        case InrCong(a), InrCong(b):
            return InrCong(_res(a, b))
        case RollCong(a), RollCong(b):
            return RollCong(_res(a, b))
        case UnrollCong(a), UnrollCong(b):
            return UnrollCong(_res(a, b))
        case PairCong(a1, a2), PairCong(b1, b2):
            return PairCong(_res(a1, b1), _res(a2, b2))
        case AppCong(a1, a2), AppCong(b1, b2):
            return AppCong(_res(a1, b1), _res(a2, b2))
        case LamCong(x, a), LamCong(y, b) if x == y:
            return LamCong(x, _res(a, b))
        case MatchCong(s1, xl, l1, xr, r1), MatchCong(s2, yl, l2, yr, r2) if (
            xl == yl and xr == yr
        ):
            return MatchCong(_res(s1, s2), xl, _res(l1, l2), xr, _res(r1, r2))
    raise UndefinedResidual(f"no equation for {type(d1).__name__} / {type(d2).__name__}")


# ---------------------------------------------------------------------------
# the equational theory as single rewrite steps (test support)

REWRITE_NAMES: tuple[str, ...] = (
    "eps_left",
    "eps_right",
    "ins_del",
    "ins_cong",
    "cong_del",
    "bang_inl_inr",
    "bang_inr_inl",
)


def rewrite_at_root(name: str, d1: Delta, d2: Delta) -> Delta | None:
    """Apply one named equation to the composition d1 then d2, at its root.

    Nested residual compositions on the right-hand sides are materialized with
    compose(). Returns None when the left-hand side does not match.
    """
    match name:
        case "eps_left":
            return d2 if isinstance(d1, Eps) else None
        case "eps_right":
            return d1 if isinstance(d2, Eps) else None
        case "ins_del":
            if isinstance(d1, Ins) and isinstance(d2, Del) and d1.frame == d2.frame:
                return compose(d1.inner, d2.inner)
            return None
        case "ins_cong":
            if isinstance(d1, Ins):
                hole_delta = match_lift(d1.frame, d2)
                if hole_delta is not None:
                    return Ins(d1.frame, compose(d1.inner, hole_delta))
            return None
        case "cong_del":
            if isinstance(d2, Del):
                hole_delta = match_lift(d2.frame, d1)
                if hole_delta is not None:
                    return Del(d2.frame, compose(hole_delta, d2.inner))
            return None
        case "bang_inl_inr":
            if isinstance(d1, InlBang) and isinstance(d2, InrBang):
                return InrCong(compose(d1.inner, d2.inner))
            return None
        case "bang_inr_inl":
            if isinstance(d1, InrBang) and isinstance(d2, InlBang):
                return InlCong(compose(d1.inner, d2.inner))
            return None
    raise ValueError(f"unknown rewrite {name!r}")


def _children(d: Delta) -> tuple[Delta, ...]:
    match d:
        case InlCong(i) | InrCong(i) | RollCong(i) | UnrollCong(i):
            return (i,)
        case LamCong(_, b):
            return (b,)
        case PairCong(a, b) | AppCong(a, b):
            return (a, b)
        case MatchCong(s, _, l, _, r):
            return (s, l, r)
    return ()


def _same_cong(d1: Delta, d2: Delta) -> bool:
    if type(d1) is not type(d2):
        return False
    match d1, d2:
        case LamCong(x, _), LamCong(y, _):
            return x == y
        case MatchCong(_, xl, _, xr, _), MatchCong(_, yl, _, yr, _):
            return xl == yl and xr == yr
    return isinstance(d1, (InlCong, InrCong, RollCong, UnrollCong, PairCong, AppCong))


def _with_children(d: Delta, kids: list[Delta]) -> Delta:
    match d:
        case InlCong(_):
            return InlCong(kids[0])
        case InrCong(_):
            return InrCong(kids[0])
        case RollCong(_):
            return RollCong(kids[0])
        case UnrollCong(_):
            return UnrollCong(kids[0])
        case LamCong(x, _):
            return LamCong(x, kids[0])
        case PairCong(_, _):
            return PairCong(kids[0], kids[1])
        case AppCong(_, _):
            return AppCong(kids[0], kids[1])
        case MatchCong(_, xl, _, xr, _):
            return MatchCong(kids[0], xl, kids[1], xr, kids[2])
    raise TypeError(f"not a congruence: {d!r}")


def aligned_sites(d1: Delta, d2: Delta) -> list[tuple[int, ...]]:
    """Positions at which the two deltas share a congruence spine from the
    root; a rewrite can be applied to the aligned subpair at any of them."""
    sites: list[tuple[int, ...]] = [()]
    if _same_cong(d1, d2):
        for i, (c1, c2) in enumerate(zip(_children(d1), _children(d2))):
            sites.extend((i, *p) for p in aligned_sites(c1, c2))
    return sites


def apply_rewrite(
    d1: Delta, d2: Delta, site: tuple[int, ...], name: str
) -> Delta | None:
    """One rewrite step at an aligned site of the composition d1 then d2.

    The result is a single delta: the rewritten subpair at the site, the
    other aligned children composed, all under the common congruence spine.
    None when the equation does not match at that site.
    """
    if not site:
        return rewrite_at_root(name, d1, d2)
    i = site[0]
    kids1, kids2 = _children(d1), _children(d2)
    stepped = apply_rewrite(kids1[i], kids2[i], site[1:], name)
    if stepped is None:
        return None
    combined = [
        stepped if j == i else compose(c1, c2)
        for j, (c1, c2) in enumerate(zip(kids1, kids2))
    ]
    return _with_children(d1, combined)
