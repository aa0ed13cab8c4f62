"""Call-by-value evaluation, for terms and for deltas.

eval_term runs a closed term to a value under a fuel budget (fuel is spent on
beta, match and unroll steps). delta_eval runs a delta between two programs to
a delta between their values: evaluating src(d) and applying the result agrees
with evaluating tgt(d). Where no structured rule applies it falls back to a
wholesale replacement of one value by the other, which keeps the agreement
trivially; the per-rule counters make such fallbacks visible.
"""
from __future__ import annotations

import sys
from dataclasses import dataclass

from .algebra import compose
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
    decompose,
    src,
    tgt,
)
from .terms import (
    App,
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
    free_vars,
    fresh_name,
    is_value,
)

DEFAULT_FUEL = 512

_MIN_RECURSION = 30_000


def _ensure_stack() -> None:
    if sys.getrecursionlimit() < _MIN_RECURSION:
        sys.setrecursionlimit(_MIN_RECURSION)


# ---------------------------------------------------------------------------
# outcomes and errors


@dataclass(frozen=True)
class Val:
    value: Term


@dataclass(frozen=True)
class Stuck:
    reason: str
    at: Term


@dataclass(frozen=True)
class OutOfFuel:
    """Budget exhausted; `at` is the redex that was about to run."""

    at: Term


EvalOutcome = Val | Stuck | OutOfFuel


class _StuckError(Exception):
    def __init__(self, reason: str, at: Term):
        super().__init__(reason)
        self.outcome = Stuck(reason, at)


class _FuelError(Exception):
    def __init__(self, at: Term):
        super().__init__("out of fuel")
        self.outcome = OutOfFuel(at)


class DeltaEvalError(Exception):
    """A baseline endpoint of the delta failed to evaluate.

    endpoint is "source" or "target"; outcome is the failing Stuck/OutOfFuel.
    """

    def __init__(self, endpoint: str, outcome: Stuck | OutOfFuel):
        self.endpoint = endpoint
        self.outcome = outcome
        reason = outcome.reason if isinstance(outcome, Stuck) else "out of fuel"
        super().__init__(f"{endpoint} endpoint failed: {reason}")


class _Fuel:
    __slots__ = ("left",)

    def __init__(self, amount: int):
        self.left = amount

    def spend(self, at: Term) -> None:
        if self.left <= 0:
            raise _FuelError(at)
        self.left -= 1


# ---------------------------------------------------------------------------
# substitution


def subst(e: Term, v: Term, x: str) -> Term:
    """Capture-avoiding [v/x]e. Binders that would capture v are freshened."""
    match e:
        case Var(y):
            return v if y == x else e
        case Hole() | Unit() | CtxHole():
            return e
        case Inl(b):
            return Inl(subst(b, v, x))
        case Inr(b):
            return Inr(subst(b, v, x))
        case Roll(b):
            return Roll(subst(b, v, x))
        case Unroll(b):
            return Unroll(subst(b, v, x))
        case Pair(a, b):
            return Pair(subst(a, v, x), subst(b, v, x))
        case App(f, a):
            return App(subst(f, v, x), subst(a, v, x))
        case Lam(y, b):
            y2, b2 = _subst_under(y, b, v, x)
            return Lam(y2, b2)
        case MatchSum(s, xl, l, xr, r):
            xl2, l2 = _subst_under(xl, l, v, x)
            xr2, r2 = _subst_under(xr, r, v, x)
            return MatchSum(subst(s, v, x), xl2, l2, xr2, r2)
        case MatchPair(s, x1, x2, b):
            (y1, y2), b2 = _subst_under2((x1, x2), b, v, x)
            return MatchPair(subst(s, v, x), y1, y2, b2)
    raise TypeError(f"not a term: {e!r}")


def _subst_under(binder: str, body: Term, v: Term, x: str) -> tuple[str, Term]:
    """Substitute [v/x] under one binder, renaming the binder on capture."""
    if binder == x:
        return binder, body
    if x not in free_vars(body):
        return binder, body
    if binder in free_vars(v):
        z = fresh_name(binder)
        body = subst(body, Var(z), binder)
        return z, subst(body, v, x)
    return binder, subst(body, v, x)


def _subst_under2(
    binders: tuple[str, str], body: Term, v: Term, x: str
) -> tuple[tuple[str, str], Term]:
    if x in binders:
        return binders, body
    if x not in free_vars(body):
        return binders, body
    b1, b2 = binders
    fv = free_vars(v)
    if b1 in fv:
        z = fresh_name(b1)
        body = subst(body, Var(z), b1)
        b1 = z
    if b2 in fv:
        z = fresh_name(b2)
        body = subst(body, Var(z), b2)
        b2 = z
    return (b1, b2), subst(body, v, x)


# ---------------------------------------------------------------------------
# baseline evaluation


def eval_term(e: Term, fuel: int = DEFAULT_FUEL) -> EvalOutcome:
    """Big-step call-by-value evaluation, left to right, with a step budget."""
    _ensure_stack()
    try:
        return Val(_eval(e, _Fuel(fuel)))
    except _StuckError as err:
        return err.outcome
    except _FuelError as err:
        return err.outcome


def _eval(e: Term, fuel: _Fuel) -> Term:
    match e:
        case Unit() | Lam():
            return e
        case Var(x):
            raise _StuckError(f"unbound variable {x}", e)
        case Hole():
            raise _StuckError("hole reached", e)
        case CtxHole():
            raise _StuckError("context hole reached", e)
        case Inl(b):
            return Inl(_eval(b, fuel))
        case Inr(b):
            return Inr(_eval(b, fuel))
        case Roll(b):
            return Roll(_eval(b, fuel))
        case Pair(a, b):
            return Pair(_eval(a, fuel), _eval(b, fuel))
        case App(f, a):
            vf = _eval(f, fuel)
            va = _eval(a, fuel)
            if not isinstance(vf, Lam):
                raise _StuckError("application of a non-function", App(vf, va))
            fuel.spend(e)
            return _eval(subst(vf.body, va, vf.binder), fuel)
        case MatchSum(s, xl, l, xr, r):
            vs = _eval(s, fuel)
            match vs:
                case Inl(p):
                    fuel.spend(e)
                    return _eval(subst(l, p, xl), fuel)
                case Inr(p):
                    fuel.spend(e)
                    return _eval(subst(r, p, xr), fuel)
            raise _StuckError("match on a non-sum", MatchSum(vs, xl, l, xr, r))
        case MatchPair(s, x1, x2, b):
            vs = _eval(s, fuel)
            match vs:
                case Pair(p, q):
                    fuel.spend(e)
                    if x2 in free_vars(p):
                        z = fresh_name(x2)
                        body = subst(b, Var(z), x2)
                        return _eval(subst(subst(body, p, x1), q, z), fuel)
                    return _eval(subst(subst(b, p, x1), q, x2), fuel)
            raise _StuckError("match on a non-pair", MatchPair(vs, x1, x2, b))
        case Unroll(b):
            vb = _eval(b, fuel)
            match vb:
                case Roll(v):
                    fuel.spend(e)
                    return v
            raise _StuckError("unroll of a non-roll", Unroll(vb))
    raise TypeError(f"not a term: {e!r}")


# ---------------------------------------------------------------------------
# delta substitution


def delta_subst(d: Delta, dv: Delta, x: str) -> Delta:
    """[dv/x]d: substitute a change of values for a variable inside a delta.

    src(d) with [src(dv)/x] and tgt(d) with [tgt(dv)/x] are the endpoints of
    the result; that square commutes by construction. Where the binder
    structure of d would capture, the affected node degrades to an
    endpoint-correct Replace.
    """
    return _dsub(decompose(d), dv, x)


def _dsub(d: Delta, dv: Delta, x: str) -> Delta:
    v, w = src(dv), tgt(dv)

    def node_fallback(node: Delta) -> Delta:
        return Replace(subst(src(node), v, x), subst(tgt(node), w, x))

    match d:
        case Eps(e):
            if x not in free_vars(e):
                return d
            if isinstance(dv, Eps):
                return Eps(subst(e, v, x))
            pushed = _push_eps(e, dv, x, v, w)
            return pushed if pushed is not None else node_fallback(d)
        case VarReplace(y, z):
            if y == x and z == x:
                return dv
            if y == x:
                return Replace(v, Var(z))
            if z == x:
                return Replace(Var(y), w)
            return d
        case Replace(a, b):
            return Replace(subst(a, v, x), subst(b, w, x))
        case InlCong(i):
            return InlCong(_dsub(i, dv, x))
        case InrCong(i):
            return InrCong(_dsub(i, dv, x))
        case InlBang(i):
            return InlBang(_dsub(i, dv, x))
        case InrBang(i):
            return InrBang(_dsub(i, dv, x))
        case RollCong(i):
            return RollCong(_dsub(i, dv, x))
        case UnrollCong(i):
            return UnrollCong(_dsub(i, dv, x))
        case PairCong(a, b):
            return PairCong(_dsub(a, dv, x), _dsub(b, dv, x))
        case AppCong(f, a):
            return AppCong(_dsub(f, dv, x), _dsub(a, dv, x))
        case LamCong(y, b):
            if y == x:
                return d
            if y in free_vars(v) or y in free_vars(w):
                return node_fallback(d)
            return LamCong(y, _dsub(b, dv, x))
        case MatchCong(s, xl, l, xr, r):
            if (xl != x and (xl in free_vars(v) or xl in free_vars(w))) or (
                xr != x and (xr in free_vars(v) or xr in free_vars(w))
            ):
                return node_fallback(d)
            l2 = l if xl == x else _dsub(l, dv, x)
            r2 = r if xr == x else _dsub(r, dv, x)
            return MatchCong(_dsub(s, dv, x), xl, l2, xr, r2)
        case Ins(frame, inner):
            out = _dsub_frame(frame, inner, dv, x, v, w, insertion=True)
            return out if out is not None else node_fallback(d)
        case Del(frame, inner):
            out = _dsub_frame(frame, inner, dv, x, v, w, insertion=False)
            return out if out is not None else node_fallback(d)
    raise TypeError(f"not a delta: {d!r}")


def _push_eps(e: Term, dv: Delta, x: str, v: Term, w: Term) -> Delta | None:
    """Distribute a non-epsilon substitution through one constructor of e.

    Precondition: x occurs free in e. Returns None where no delta congruence
    exists (pair-pattern match) or a binder would capture.
    """

    def rec(sub: Term) -> Delta:
        if x not in free_vars(sub):
            return Eps(sub)
        out = _push_eps(sub, dv, x, v, w)
        if out is None:
            return Replace(subst(sub, v, x), subst(sub, w, x))
        return out

    match e:
        case Var(y):
            return dv if y == x else Eps(e)
        case Inl(b):
            return InlCong(rec(b))
        case Inr(b):
            return InrCong(rec(b))
        case Roll(b):
            return RollCong(rec(b))
        case Unroll(b):
            return UnrollCong(rec(b))
        case Pair(a, b):
            return PairCong(rec(a), rec(b))
        case App(f, a):
            return AppCong(rec(f), rec(a))
        case Lam(y, b):
            if y == x:
                return Eps(e)
            if y in free_vars(v) or y in free_vars(w):
                return None
            return LamCong(y, rec(b))
        case MatchSum(s, xl, l, xr, r):
            if (xl != x and (xl in free_vars(v) or xl in free_vars(w))) or (
                xr != x and (xr in free_vars(v) or xr in free_vars(w))
            ):
                return None
            dl = Eps(l) if xl == x else rec(l)
            dr = Eps(r) if xr == x else rec(r)
            return MatchCong(rec(s), xl, dl, xr, dr)
        case MatchPair():
            return None
    return None


def _dsub_frame(
    frame: Term, inner: Delta, dv: Delta, x: str, v: Term, w: Term, insertion: bool
) -> Delta | None:
    """Substitute through a depth-1 insertion/deletion frame.

    Frame material exists only in the target (insertion) or only in the source
    (deletion), so plain terms in the frame take that endpoint's substitution.
    A frame binder over the hole rebinds x on that side; following the paper,
    the inner delta then substitutes the half-change that leaves the rebound
    side alone: Replace(v, Var x) under an insertion, Replace(Var x, w) under
    a deletion. Returns None when a frame binder would capture.
    """
    side = w if insertion else v
    make = Ins if insertion else Del
    half = Replace(v, Var(x)) if insertion else Replace(Var(x), w)

    def plain(t: Term) -> Term:
        return subst(t, side, x)

    def under(binder: str, t: Term) -> tuple[str, Term]:
        return _subst_under(binder, t, side, x)

    match frame:
        case Inl(CtxHole()) | Inr(CtxHole()) | Roll(CtxHole()) | Unroll(CtxHole()):
            return make(frame, _dsub(inner, dv, x))
        case Pair(CtxHole(), e):
            return make(Pair(CtxHole(), plain(e)), _dsub(inner, dv, x))
        case Pair(e, CtxHole()):
            return make(Pair(plain(e), CtxHole()), _dsub(inner, dv, x))
        case App(CtxHole(), e):
            return make(App(CtxHole(), plain(e)), _dsub(inner, dv, x))
        case App(e, CtxHole()):
            return make(App(plain(e), CtxHole()), _dsub(inner, dv, x))
        case Lam(y, CtxHole()):
            if y == x:
                return make(frame, _dsub(inner, half, x))
            if y in free_vars(side):
                return None
            return make(frame, _dsub(inner, dv, x))
        case MatchSum(CtxHole(), xl, l, xr, r):
            xl2, l2 = under(xl, l)
            xr2, r2 = under(xr, r)
            return make(MatchSum(CtxHole(), xl2, l2, xr2, r2), _dsub(inner, dv, x))
        case MatchSum(s, xl, CtxHole(), xr, r):
            xr2, r2 = under(xr, r)
            if xl == x:
                return make(MatchSum(plain(s), xl, CtxHole(), xr2, r2), _dsub(inner, half, x))
            if xl in free_vars(side):
                return None
            return make(MatchSum(plain(s), xl, CtxHole(), xr2, r2), _dsub(inner, dv, x))
        case MatchSum(s, xl, l, xr, CtxHole()):
            xl2, l2 = under(xl, l)
            if xr == x:
                return make(MatchSum(plain(s), xl2, l2, xr, CtxHole()), _dsub(inner, half, x))
            if xr in free_vars(side):
                return None
            return make(MatchSum(plain(s), xl2, l2, xr, CtxHole()), _dsub(inner, dv, x))
        case MatchPair(CtxHole(), x1, x2, b):
            (y1, y2), b2 = _subst_under2((x1, x2), b, side, x)
            return make(MatchPair(CtxHole(), y1, y2, b2), _dsub(inner, dv, x))
        case MatchPair(s, x1, x2, CtxHole()):
            if x in (x1, x2):
                return make(MatchPair(plain(s), x1, x2, CtxHole()), _dsub(inner, half, x))
            if x1 in free_vars(side) or x2 in free_vars(side):
                return None
            return make(MatchPair(plain(s), x1, x2, CtxHole()), _dsub(inner, dv, x))
    return None


# ---------------------------------------------------------------------------
# delta evaluation

RULES: tuple[str, ...] = (
    "eps",
    "replace",
    "lam",
    "inl_cong",
    "inr_cong",
    "inl_bang",
    "inr_bang",
    "roll_cong",
    "pair_cong",
    "app_cong",
    "unroll_cong",
    "match_cong_inl",
    "match_cong_inr",
    "match_bang_inl",
    "match_bang_inr",
    "inl_ins",
    "inr_ins",
    "roll_ins",
    "unroll_ins",
    "pair_ins_left",
    "pair_ins_right",
    "app_ins_left",
    "app_ins_right",
    "match_ins_inl",
    "match_ins_inr",
    "inl_del",
    "inr_del",
    "roll_del",
    "unroll_del",
    "pair_del_left",
    "pair_del_right",
    "app_del_left",
    "app_del_right",
    "match_del_inl",
    "match_del_inr",
    "fallback",
)


def delta_eval(
    d: Delta, fuel: int = DEFAULT_FUEL, counters: dict[str, int] | None = None
) -> Delta:
    """Evaluate a delta between closed programs to a delta between values.

    Raises DeltaEvalError when a baseline endpoint is stuck or out of fuel;
    otherwise total. counters, if given, accumulates per-rule fire counts.
    """
    _ensure_stack()
    d = decompose(d)
    ctr = counters if counters is not None else {}
    try:
        return _deval(d, _Fuel(fuel), ctr)
    except (_StuckError, _FuelError):
        s_out = eval_term(src(d), fuel)
        if not isinstance(s_out, Val):
            raise DeltaEvalError("source", s_out) from None
        t_out = eval_term(tgt(d), fuel)
        if not isinstance(t_out, Val):
            raise DeltaEvalError("target", t_out) from None
        _bump(ctr, "fallback")
        return Replace(s_out.value, t_out.value)


def _bump(ctr: dict[str, int], rule: str) -> None:
    ctr[rule] = ctr.get(rule, 0) + 1


def _as_lam_cong(d: Delta) -> tuple[str, Delta] | None:
    match d:
        case LamCong(x, b):
            return x, b
        case Eps(Lam(x, b)):
            return x, Eps(b)
    return None


def _as_inl_cong(d: Delta) -> Delta | None:
    match d:
        case InlCong(i):
            return i
        case Eps(Inl(b)):
            return Eps(b)
    return None


def _as_inr_cong(d: Delta) -> Delta | None:
    match d:
        case InrCong(i):
            return i
        case Eps(Inr(b)):
            return Eps(b)
    return None


def _deval(d: Delta, fuel: _Fuel, ctr: dict[str, int]) -> Delta:
    def fallback(node: Delta) -> Delta:
        out = Replace(_eval(src(node), fuel), _eval(tgt(node), fuel))
        _bump(ctr, "fallback")
        return out

    match d:
        case Eps(e):
            _bump(ctr, "eps")
            return Eps(_eval(e, fuel))
        case Replace(a, b):
            _bump(ctr, "replace")
            return Replace(_eval(a, fuel), _eval(b, fuel))
        case VarReplace(y, _):
            raise _StuckError(f"unbound variable {y}", Var(y))
        case LamCong():
            _bump(ctr, "lam")
            return d
        case InlCong(i):
            _bump(ctr, "inl_cong")
            return InlCong(_deval(i, fuel, ctr))
        case InrCong(i):
            _bump(ctr, "inr_cong")
            return InrCong(_deval(i, fuel, ctr))
        case InlBang(i):
            _bump(ctr, "inl_bang")
            return InlBang(_deval(i, fuel, ctr))
        case InrBang(i):
            _bump(ctr, "inr_bang")
            return InrBang(_deval(i, fuel, ctr))
        case RollCong(i):
            _bump(ctr, "roll_cong")
            return RollCong(_deval(i, fuel, ctr))
        case PairCong(a, b):
            _bump(ctr, "pair_cong")
            return PairCong(_deval(a, fuel, ctr), _deval(b, fuel, ctr))
        case UnrollCong(i):
            dv = _deval(i, fuel, ctr)
            rolled = _as_roll_cong(dv)
            if rolled is None:
                return fallback(d)
            fuel.spend(src(d))
            _bump(ctr, "unroll_cong")
            return rolled
        case AppCong(df, da):
            dvf = _deval(df, fuel, ctr)
            lam = _as_lam_cong(dvf)
            if lam is None:
                return fallback(d)
            x, body = lam
            dva = _deval(da, fuel, ctr)
            fuel.spend(src(d))
            _bump(ctr, "app_cong")
            return _deval(delta_subst(body, dva, x), fuel, ctr)
        case MatchCong(ds, xl, dl, xr, dr):
            dscr = _deval(ds, fuel, ctr)
            payload = _as_inl_cong(dscr)
            if payload is not None:
                fuel.spend(src(d))
                _bump(ctr, "match_cong_inl")
                return _deval(delta_subst(dl, payload, xl), fuel, ctr)
            payload = _as_inr_cong(dscr)
            if payload is not None:
                fuel.spend(src(d))
                _bump(ctr, "match_cong_inr")
                return _deval(delta_subst(dr, payload, xr), fuel, ctr)
            match dscr:
                case InlBang(i):
                    # scrutinee flipped inr -> inl: source ran the right arm,
                    # target runs the left arm
                    fuel.spend(src(d))
                    v0 = _eval(subst(src(dr), src(i), xr), fuel)
                    v1 = _eval(subst(tgt(dl), tgt(i), xl), fuel)
                    _bump(ctr, "match_bang_inl")
                    return Replace(v0, v1)
                case InrBang(i):
                    fuel.spend(src(d))
                    v0 = _eval(subst(src(dl), src(i), xl), fuel)
                    v1 = _eval(subst(tgt(dr), tgt(i), xr), fuel)
                    _bump(ctr, "match_bang_inr")
                    return Replace(v0, v1)
            return fallback(d)
        case Ins(frame, inner):
            return _deval_ins(d, frame, inner, fuel, ctr, fallback)
        case Del(frame, inner):
            return _deval_del(d, frame, inner, fuel, ctr, fallback)
    raise TypeError(f"not a delta: {d!r}")


def _as_roll_cong(d: Delta) -> Delta | None:
    match d:
        case RollCong(i):
            return i
        case Eps(Roll(b)):
            return Eps(b)
    return None


def _deval_ins(d, frame, inner, fuel, ctr, fallback):
    match frame:
        case Inl(CtxHole()):
            _bump(ctr, "inl_ins")
            return Ins(frame, _deval(inner, fuel, ctr))
        case Inr(CtxHole()):
            _bump(ctr, "inr_ins")
            return Ins(frame, _deval(inner, fuel, ctr))
        case Roll(CtxHole()):
            _bump(ctr, "roll_ins")
            return Ins(frame, _deval(inner, fuel, ctr))
        case Unroll(CtxHole()):
            dv = _deval(inner, fuel, ctr)
            t = tgt(dv)
            if not isinstance(t, Roll):
                return fallback(d)
            fuel.spend(tgt(d))
            _bump(ctr, "unroll_ins")
            return compose(dv, Del(Roll(CtxHole()), Eps(t.body)))
        case Pair(e, CtxHole()):
            ve = _eval(e, fuel)
            dv = _deval(inner, fuel, ctr)
            _bump(ctr, "pair_ins_left")
            return Ins(Pair(ve, CtxHole()), dv)
        case Pair(CtxHole(), e):
            dv = _deval(inner, fuel, ctr)
            ve = _eval(e, fuel)
            _bump(ctr, "pair_ins_right")
            return Ins(Pair(CtxHole(), ve), dv)
        case App(e, CtxHole()):
            vf = _eval(e, fuel)
            if not isinstance(vf, Lam):
                return fallback(d)
            dv = _deval(inner, fuel, ctr)
            fuel.spend(tgt(d))
            v1 = _eval(subst(vf.body, tgt(dv), vf.binder), fuel)
            _bump(ctr, "app_ins_left")
            return Replace(src(dv), v1)
        case App(CtxHole(), e):
            dv = _deval(inner, fuel, ctr)
            tv = tgt(dv)
            if not isinstance(tv, Lam):
                return fallback(d)
            va = _eval(e, fuel)
            fuel.spend(tgt(d))
            v1 = _eval(subst(tv.body, va, tv.binder), fuel)
            _bump(ctr, "app_ins_right")
            return Replace(src(dv), v1)
        case MatchSum(CtxHole(), xl, e1, xr, e2):
            dv = _deval(inner, fuel, ctr)
            match tgt(dv):
                case Inl(p):
                    fuel.spend(tgt(d))
                    v1 = _eval(subst(e1, p, xl), fuel)
                    _bump(ctr, "match_ins_inl")
                    return Replace(src(dv), v1)
                case Inr(p):
                    fuel.spend(tgt(d))
                    v1 = _eval(subst(e2, p, xr), fuel)
                    _bump(ctr, "match_ins_inr")
                    return Replace(src(dv), v1)
            return fallback(d)
    return fallback(d)


def _deval_del(d, frame, inner, fuel, ctr, fallback):
    match frame:
        case Inl(CtxHole()):
            _bump(ctr, "inl_del")
            return Del(frame, _deval(inner, fuel, ctr))
        case Inr(CtxHole()):
            _bump(ctr, "inr_del")
            return Del(frame, _deval(inner, fuel, ctr))
        case Roll(CtxHole()):
            _bump(ctr, "roll_del")
            return Del(frame, _deval(inner, fuel, ctr))
        case Unroll(CtxHole()):
            dv = _deval(inner, fuel, ctr)
            s = src(dv)
            if not isinstance(s, Roll):
                return fallback(d)
            fuel.spend(src(d))
            _bump(ctr, "unroll_del")
            return compose(Ins(Roll(CtxHole()), Eps(s.body)), dv)
        case Pair(e, CtxHole()):
            ve = _eval(e, fuel)
            dv = _deval(inner, fuel, ctr)
            _bump(ctr, "pair_del_left")
            return Del(Pair(ve, CtxHole()), dv)
        case Pair(CtxHole(), e):
            dv = _deval(inner, fuel, ctr)
            ve = _eval(e, fuel)
            _bump(ctr, "pair_del_right")
            return Del(Pair(CtxHole(), ve), dv)
        case App(e, CtxHole()):
            vf = _eval(e, fuel)
            if not isinstance(vf, Lam):
                return fallback(d)
            dv = _deval(inner, fuel, ctr)
            fuel.spend(src(d))
            v0 = _eval(subst(vf.body, src(dv), vf.binder), fuel)
            _bump(ctr, "app_del_left")
            return Replace(v0, tgt(dv))
        case App(CtxHole(), e):
            dv = _deval(inner, fuel, ctr)
            sv = src(dv)
            if not isinstance(sv, Lam):
                return fallback(d)
            va = _eval(e, fuel)
            fuel.spend(src(d))
            v0 = _eval(subst(sv.body, va, sv.binder), fuel)
            _bump(ctr, "app_del_right")
            return Replace(v0, tgt(dv))
        case MatchSum(CtxHole(), xl, e1, xr, e2):
            dv = _deval(inner, fuel, ctr)
            match src(dv):
                case Inl(p):
                    fuel.spend(src(d))
                    v0 = _eval(subst(e1, p, xl), fuel)
                    _bump(ctr, "match_del_inl")
                    return Replace(v0, tgt(dv))
                case Inr(p):
                    fuel.spend(src(d))
                    v0 = _eval(subst(e2, p, xr), fuel)
                    _bump(ctr, "match_del_inr")
                    return Replace(v0, tgt(dv))
            return fallback(d)
    return fallback(d)
