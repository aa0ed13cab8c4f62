"""Seeded random generation of closed terms and of valid deltas.

gen_term is biased toward terms that actually reduce (beta redexes, matches on
injections, unrolls of rolls) so that downstream coherence runs mostly finish.
gen_delta builds a delta whose source is exactly the given term, descending
through its structure and mixing every delta alternative; insertion frames are
chosen so the structured delta-evaluation rules all get exercised. Everything
is deterministic in the seed.

The enumerate_* functions generate whole finite families (small closed terms
over the sum/pair/function fragment, and small valid deltas over a term) for
exhaustive sweeps.
"""
from __future__ import annotations

import random
from collections.abc import Iterator

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
    delta_size,
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
    is_value,
    term_size,
)

Rng = random.Random

_BINDERS = ("x", "y", "z", "u", "w", "s", "t")


def _rng(seed: int | Rng) -> Rng:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def _pick(rng: Rng, options: list[tuple[float, object]]):
    total = sum(w for w, _ in options)
    mark = rng.random() * total
    for w, item in options:
        mark -= w
        if mark <= 0:
            return item
    return options[-1][1]


# ---------------------------------------------------------------------------
# terms


def gen_term(seed: int | Rng, size: int = 16, scope: tuple[str, ...] = ()) -> Term:
    """A deterministic pseudo-random term of at most `size` nodes, closed when
    `scope` is empty."""
    rng = _rng(seed)
    return _gen_term(rng, max(1, size), list(scope))


def _leaf(rng: Rng, scope: list[str]) -> Term:
    if scope and rng.random() < 0.7:
        return Var(rng.choice(scope))
    return Unit()


def _binder(rng: Rng) -> str:
    return rng.choice(_BINDERS)


def _split(rng: Rng, budget: int, parts: int) -> list[int]:
    """Split budget into `parts` positive shares."""
    shares = [1] * parts
    for _ in range(budget - parts):
        shares[rng.randrange(parts)] += 1
    return shares


def _gen_term(rng: Rng, budget: int, scope: list[str]) -> Term:
    if budget <= 1:
        return _leaf(rng, scope)
    options: list[tuple[float, str]] = [
        (0.8, "inl"),
        (0.8, "inr"),
        (0.5, "roll"),
        (1.4, "lam"),
        (0.4, "unit"),
    ]
    if scope:
        options.append((0.9, "var"))
    if budget >= 3:
        options.extend([(1.1, "pair"), (0.6, "unroll_roll")])
    if budget >= 4:
        options.append((2.6, "beta"))
        if scope:
            options.append((0.35, "app_var"))
    if budget >= 5:
        options.extend([(1.3, "match_inj"), (0.5, "match_pair")])
    match _pick(rng, options):
        case "unit":
            return Unit()
        case "var":
            return Var(rng.choice(scope))
        case "inl":
            return Inl(_gen_term(rng, budget - 1, scope))
        case "inr":
            return Inr(_gen_term(rng, budget - 1, scope))
        case "roll":
            return Roll(_gen_term(rng, budget - 1, scope))
        case "lam":
            x = _binder(rng)
            return Lam(x, _gen_term(rng, budget - 1, scope + [x]))
        case "pair":
            b1, b2 = _split(rng, budget - 1, 2)
            return Pair(_gen_term(rng, b1, scope), _gen_term(rng, b2, scope))
        case "unroll_roll":
            return Unroll(Roll(_gen_term(rng, budget - 2, scope)))
        case "beta":
            x = _binder(rng)
            arg_budget = max(1, (budget - 2) // 3)
            body_budget = budget - 2 - arg_budget
            body = _gen_term(rng, body_budget, scope + [x])
            arg = _gen_term(rng, arg_budget, scope)
            return App(Lam(x, body), arg)
        case "app_var":
            return App(Var(rng.choice(scope)), _gen_term(rng, budget - 2, scope))
        case "match_inj":
            wrap = Inl if rng.random() < 0.5 else Inr
            b0, b1, b2 = _split(rng, budget - 3, 3)
            xl, xr = _binder(rng), _binder(rng)
            return MatchSum(
                wrap(_gen_term(rng, b0, scope)),
                xl,
                _gen_term(rng, b1, scope + [xl]),
                xr,
                _gen_term(rng, b2, scope + [xr]),
            )
        case "match_pair":
            b0a, b0b, b1 = _split(rng, budget - 2, 3)
            x1 = _binder(rng)
            x2 = rng.choice([b for b in _BINDERS if b != x1])
            scrut = Pair(_gen_term(rng, b0a, scope), _gen_term(rng, b0b, scope))
            return MatchPair(scrut, x1, x2, _gen_term(rng, b1, scope + [x1, x2]))
    raise AssertionError("unreachable")


# ---------------------------------------------------------------------------
# deltas


def gen_delta(
    seed: int | Rng, e: Term, size: int = 8, scope: tuple[str, ...] = ()
) -> Delta:
    """A deterministic pseudo-random delta with source exactly `e`.

    `scope` lists the variables bound around e (empty for whole programs);
    generated insertions and replacements only mention those, so a closed
    source keeps a closed target.
    """
    rng = _rng(seed)
    return _gen_delta(rng, e, max(1, size), list(scope))


def _gen_delta(rng: Rng, e: Term, budget: int, scope: list[str]) -> Delta:
    if budget <= 1:
        if isinstance(e, Var) and scope and rng.random() < 0.4:
            return VarReplace(e.name, rng.choice(scope))
        return Eps(e)
    options: list[tuple[float, str]] = [(0.9, "eps"), (2.0, "ins"), (0.4, "replace")]
    if _has_congruence(e):
        options.append((3.0, "cong"))
    if isinstance(e, (Inl, Inr)):
        options.append((1.0, "bang"))
    if _has_deletion(e):
        options.append((1.6, "del"))
    if isinstance(e, Var) and scope:
        options.append((1.2, "varreplace"))
    match _pick(rng, options):
        case "eps":
            return Eps(e)
        case "replace":
            return Replace(e, _gen_term(rng, min(4, budget), scope))
        case "varreplace":
            return VarReplace(e.name, rng.choice(scope))
        case "bang":
            inner = _gen_delta(rng, e.body, budget - 1, scope)
            return InrBang(inner) if isinstance(e, Inl) else InlBang(inner)
        case "cong":
            return _gen_cong(rng, e, budget, scope)
        case "ins":
            return _gen_ins(rng, e, budget, scope)
        case "del":
            return _gen_del(rng, e, budget, scope)
    raise AssertionError("unreachable")


def _has_congruence(e: Term) -> bool:
    return isinstance(e, (Inl, Inr, Roll, Unroll, Pair, App, Lam, MatchSum))


def _has_deletion(e: Term) -> bool:
    return isinstance(e, (Inl, Inr, Roll, Unroll, Pair, App, MatchSum, MatchPair, Lam))


def _gen_cong(rng: Rng, e: Term, budget: int, scope: list[str]) -> Delta:
    rec = _gen_delta
    match e:
        case Inl(b):
            return InlCong(rec(rng, b, budget - 1, scope))
        case Inr(b):
            return InrCong(rec(rng, b, budget - 1, scope))
        case Roll(b):
            return RollCong(rec(rng, b, budget - 1, scope))
        case Unroll(b):
            return UnrollCong(rec(rng, b, budget - 1, scope))
        case Pair(a, b):
            b1, b2 = _split(rng, max(2, budget - 1), 2)
            return PairCong(rec(rng, a, b1, scope), rec(rng, b, b2, scope))
        case App(f, a):
            b1, b2 = _split(rng, max(2, budget - 1), 2)
            return AppCong(rec(rng, f, b1, scope), rec(rng, a, b2, scope))
        case Lam(x, b):
            return LamCong(x, rec(rng, b, budget - 1, scope + [x]))
        case MatchSum(s, xl, l, xr, r):
            b0, b1, b2 = _split(rng, max(3, budget - 1), 3)
            return MatchCong(
                rec(rng, s, b0, scope),
                xl,
                rec(rng, l, b1, scope + [xl]),
                xr,
                rec(rng, r, b2, scope + [xr]),
            )
    raise AssertionError(f"no congruence for {e!r}")


def _gen_ins(rng: Rng, e: Term, budget: int, scope: list[str]) -> Delta:
    options: list[tuple[float, str]] = [
        (1.0, "inl"),
        (1.0, "inr"),
        (0.7, "roll"),
        (1.0, "pair_left"),
        (1.0, "pair_right"),
        (1.2, "app_fn"),
        (0.3, "lam_frame"),
    ]
    if isinstance(e, Roll):
        options.append((1.6, "unroll"))
    if isinstance(e, Lam):
        options.append((1.4, "app_arg"))
    if isinstance(e, (Inl, Inr)):
        options.append((1.6, "match"))
    sib = max(1, min(4, budget - 2))
    match _pick(rng, options):
        case "inl":
            frame: Term = Inl(CtxHole())
        case "inr":
            frame = Inr(CtxHole())
        case "roll":
            frame = Roll(CtxHole())
        case "unroll":
            frame = Unroll(CtxHole())
        case "pair_left":
            frame = Pair(_gen_term(rng, sib, scope), CtxHole())
        case "pair_right":
            frame = Pair(CtxHole(), _gen_term(rng, sib, scope))
        case "app_fn":
            x = _binder(rng)
            fn = Lam(x, _gen_term(rng, sib, scope + [x]))
            frame = App(fn, CtxHole())
        case "app_arg":
            frame = App(CtxHole(), _gen_term(rng, sib, scope))
        case "lam_frame":
            frame = Lam(_binder(rng), CtxHole())
        case "match":
            xl, xr = _binder(rng), _binder(rng)
            frame = MatchSum(
                CtxHole(),
                xl,
                _gen_term(rng, sib, scope + [xl]),
                xr,
                _gen_term(rng, sib, scope + [xr]),
            )
        case other:
            raise AssertionError(other)
    inner_budget = max(1, budget - term_size(frame))
    return Ins(frame, _gen_delta(rng, e, inner_budget, scope))


def _gen_del(rng: Rng, e: Term, budget: int, scope: list[str]) -> Delta:
    """Delete one frame of e's root, keeping the line of one child."""
    rec = _gen_delta
    options: list[tuple[float, tuple[Term, Term]]] = []

    def frame_of(ctx: Term, kept: Term, w: float = 1.0) -> None:
        options.append((w, (ctx, kept)))

    match e:
        case Inl(b):
            frame_of(Inl(CtxHole()), b)
        case Inr(b):
            frame_of(Inr(CtxHole()), b)
        case Roll(b):
            frame_of(Roll(CtxHole()), b)
        case Unroll(b):
            frame_of(Unroll(CtxHole()), b, 1.4)
        case Pair(a, b):
            frame_of(Pair(CtxHole(), b), a)
            frame_of(Pair(a, CtxHole()), b)
        case App(f, a):
            frame_of(App(CtxHole(), a), f)
            frame_of(App(f, CtxHole()), a, 1.3)
        case MatchSum(s, xl, l, xr, r):
            frame_of(MatchSum(CtxHole(), xl, l, xr, r), s, 1.5)
        case MatchPair(s, x1, x2, b):
            frame_of(MatchPair(CtxHole(), x1, x2, b), s)
        case Lam(x, b):
            if x not in free_vars(b):
                # deleting the binder must not strand occurrences of x
                return Del(Lam(x, CtxHole()), Eps(b))
    if not options:
        return Eps(e)
    frame, kept = _pick(rng, options)
    inner_budget = max(1, budget - term_size(frame))
    return Del(frame, rec(rng, kept, inner_budget, scope))


# ---------------------------------------------------------------------------
# value deltas and compatible pairs (for the algebra and substitution laws)


def gen_value_delta(seed: int | Rng, v: Term, size: int = 6) -> Delta:
    """A delta between closed values, with source exactly the closed value v."""
    rng = _rng(seed)
    if not is_value(v) or free_vars(v):
        raise ValueError("gen_value_delta wants a closed value")
    return _gen_vdelta(rng, v, max(1, size))


def _gen_value(rng: Rng, budget: int) -> Term:
    if budget <= 1:
        return Unit()
    match _pick(
        rng,
        [(1.0, "inl"), (1.0, "inr"), (0.7, "roll"), (0.9, "pair"), (0.8, "lam"), (0.6, "unit")],
    ):
        case "unit":
            return Unit()
        case "inl":
            return Inl(_gen_value(rng, budget - 1))
        case "inr":
            return Inr(_gen_value(rng, budget - 1))
        case "roll":
            return Roll(_gen_value(rng, budget - 1))
        case "pair":
            b1, b2 = _split(rng, max(2, budget - 1), 2)
            return Pair(_gen_value(rng, b1), _gen_value(rng, b2))
        case "lam":
            x = _binder(rng)
            return Lam(x, _gen_term(rng, budget - 1, [x]))
    raise AssertionError("unreachable")


def _gen_vdelta(rng: Rng, v: Term, budget: int) -> Delta:
    if budget <= 1:
        return Eps(v)
    options: list[tuple[float, str]] = [(1.0, "eps"), (1.2, "ins"), (0.6, "replace")]
    if isinstance(v, (Inl, Inr, Roll, Pair, Lam)):
        options.append((2.2, "cong"))
    if isinstance(v, (Inl, Inr)):
        options.append((1.0, "bang"))
    if isinstance(v, (Inl, Inr, Roll, Pair)):
        options.append((1.0, "del"))
    match _pick(rng, options):
        case "eps":
            return Eps(v)
        case "replace":
            return Replace(v, _gen_value(rng, min(4, budget)))
        case "bang":
            inner = _gen_vdelta(rng, v.body, budget - 1)
            return InrBang(inner) if isinstance(v, Inl) else InlBang(inner)
        case "cong":
            match v:
                case Inl(b):
                    return InlCong(_gen_vdelta(rng, b, budget - 1))
                case Inr(b):
                    return InrCong(_gen_vdelta(rng, b, budget - 1))
                case Roll(b):
                    return RollCong(_gen_vdelta(rng, b, budget - 1))
                case Pair(a, b):
                    b1, b2 = _split(rng, max(2, budget - 1), 2)
                    return PairCong(_gen_vdelta(rng, a, b1), _gen_vdelta(rng, b, b2))
                case Lam(x, b):
                    return LamCong(x, _gen_delta(rng, b, budget - 1, [x]))
        case "del":
            match v:
                case Inl(b) | Inr(b) | Roll(b):
                    frame = type(v)(CtxHole())
                    return Del(frame, _gen_vdelta(rng, b, budget - 2))
                case Pair(a, b):
                    if rng.random() < 0.5:
                        return Del(Pair(CtxHole(), b), _gen_vdelta(rng, a, budget - 2))
                    return Del(Pair(a, CtxHole()), _gen_vdelta(rng, b, budget - 2))
        case "ins":
            match _pick(rng, [(1.0, "inl"), (1.0, "inr"), (0.8, "roll"), (1.0, "pair")]):
                case "inl":
                    frame: Term = Inl(CtxHole())
                case "inr":
                    frame = Inr(CtxHole())
                case "roll":
                    frame = Roll(CtxHole())
                case "pair":
                    sib = _gen_value(rng, max(1, min(3, budget - 2)))
                    frame = Pair(sib, CtxHole()) if rng.random() < 0.5 else Pair(CtxHole(), sib)
            return Ins(frame, _gen_vdelta(rng, v, max(1, budget - term_size(frame))))
    raise AssertionError("unreachable")


def gen_compatible_pair(
    seed: int | Rng, e: Term, size: int = 8, scope: tuple[str, ...] = ()
) -> tuple[Delta, Delta]:
    """Two coinitial deltas at e with compatible(d1, d2) true by construction."""
    rng = _rng(seed)
    return _gen_compat(rng, e, max(1, size), list(scope))


def _gen_compat(rng: Rng, e: Term, budget: int, scope: list[str]) -> tuple[Delta, Delta]:
    options: list[tuple[float, str]] = [(1.2, "eps_left"), (0.8, "ins_left")]
    if _has_congruence(e) and budget >= 2:
        options.append((2.0, "cong"))
    if _has_deletion(e) and budget >= 2:
        options.append((1.0, "del_both"))
    match _pick(rng, options):
        case "eps_left":
            return Eps(e), _gen_delta(rng, e, budget, scope)
        case "ins_left":
            d1, d2 = _gen_compat(rng, e, max(1, budget - 2), scope)
            wrapped = _gen_ins(rng, e, budget, scope)
            # reuse the generated frame but put the compatible left delta inside
            return Ins(wrapped.frame, d1), d2
        case "del_both":
            del_probe = _gen_del(rng, e, budget, scope)
            if isinstance(del_probe, Del):
                kept = del_probe.inner
                inner1, inner2 = _gen_compat(rng, _src_of(kept), max(1, budget - 2), scope)
                return Del(del_probe.frame, inner1), Del(del_probe.frame, inner2)
            return Eps(e), _gen_delta(rng, e, budget, scope)
        case "cong":
            return _gen_compat_cong(rng, e, budget, scope)
    raise AssertionError("unreachable")


def _src_of(d: Delta) -> Term:
    from .delta import src

    return src(d)


def _gen_compat_cong(rng: Rng, e: Term, budget: int, scope: list[str]) -> tuple[Delta, Delta]:
    match e:
        case Inl(b):
            a1, a2 = _gen_compat(rng, b, budget - 1, scope)
            return InlCong(a1), InlCong(a2)
        case Inr(b):
            a1, a2 = _gen_compat(rng, b, budget - 1, scope)
            return InrCong(a1), InrCong(a2)
        case Roll(b):
            a1, a2 = _gen_compat(rng, b, budget - 1, scope)
            return RollCong(a1), RollCong(a2)
        case Unroll(b):
            a1, a2 = _gen_compat(rng, b, budget - 1, scope)
            return UnrollCong(a1), UnrollCong(a2)
        case Pair(a, b):
            b1, b2 = _split(rng, max(2, budget - 1), 2)
            p1, p2 = _gen_compat(rng, a, b1, scope)
            q1, q2 = _gen_compat(rng, b, b2, scope)
            return PairCong(p1, q1), PairCong(p2, q2)
        case App(f, a):
            b1, b2 = _split(rng, max(2, budget - 1), 2)
            p1, p2 = _gen_compat(rng, f, b1, scope)
            q1, q2 = _gen_compat(rng, a, b2, scope)
            return AppCong(p1, q1), AppCong(p2, q2)
        case Lam(x, b):
            a1, a2 = _gen_compat(rng, b, budget - 1, scope + [x])
            return LamCong(x, a1), LamCong(x, a2)
        case MatchSum(s, xl, l, xr, r):
            b0, b1, b2 = _split(rng, max(3, budget - 1), 3)
            s1, s2 = _gen_compat(rng, s, b0, scope)
            l1, l2 = _gen_compat(rng, l, b1, scope + [xl])
            r1, r2 = _gen_compat(rng, r, b2, scope + [xr])
            return MatchCong(s1, xl, l1, xr, r1), MatchCong(s2, xl, l2, xr, r2)
    raise AssertionError(f"no congruence for {e!r}")


# ---------------------------------------------------------------------------
# exhaustive enumeration (sum/pair/function fragment)

_ENUM_CACHE: dict[tuple[int, int], list[Term]] = {}


def enumerate_terms(max_size: int, scope_depth: int = 0) -> Iterator[Term]:
    """All terms of at most max_size nodes over unit, injections, pairs,
    lambdas and application, closed under `scope_depth` canonical binders."""
    for size in range(1, max_size + 1):
        yield from _enum_exact(size, scope_depth)


def _enum_exact(size: int, depth: int) -> list[Term]:
    key = (size, depth)
    if key in _ENUM_CACHE:
        return _ENUM_CACHE[key]
    out: list[Term] = []
    if size == 1:
        out.append(Unit())
        out.extend(Var(f"v{i}") for i in range(depth))
    else:
        for sub in _enum_exact(size - 1, depth):
            out.append(Inl(sub))
            out.append(Inr(sub))
        for body in _enum_exact(size - 1, depth + 1):
            out.append(Lam(f"v{depth}", body))
        for left_size in range(1, size - 1):
            for a in _enum_exact(left_size, depth):
                for b in _enum_exact(size - 1 - left_size, depth):
                    out.append(Pair(a, b))
                    out.append(App(a, b))
    _ENUM_CACHE[key] = out
    return out


_REPLACE_POOL: tuple[Term, ...] = (Unit(), Inl(Unit()), Lam("v9", Var("v9")))


def enumerate_deltas(e: Term, max_size: int, scope_depth: int = 0) -> Iterator[Delta]:
    """All valid deltas for e (source exactly e) of delta_size at most
    max_size, over the same fragment as enumerate_terms."""
    for d in _enum_deltas_raw(e, max_size, scope_depth):
        if delta_size(d) <= max_size:
            yield d


def _enum_deltas_raw(e: Term, max_size: int, scope_depth: int) -> Iterator[Delta]:
    yield Eps(e)
    budget = max_size
    if budget < 2:
        return
    scope = [f"v{i}" for i in range(scope_depth)]
    # congruences and bangs
    match e:
        case Inl(b):
            for i in _enum_deltas_list(b, budget - 1, scope_depth):
                yield InlCong(i)
                yield InrBang(i)
            yield Del(Inl(CtxHole()), Eps(b))
        case Inr(b):
            for i in _enum_deltas_list(b, budget - 1, scope_depth):
                yield InrCong(i)
                yield InlBang(i)
            yield Del(Inr(CtxHole()), Eps(b))
        case Pair(a, b):
            for left_budget in range(1, budget - 1):
                for i in _enum_deltas_list(a, left_budget, scope_depth):
                    for j in _enum_deltas_list(b, budget - 1 - left_budget, scope_depth):
                        yield PairCong(i, j)
            yield Del(Pair(CtxHole(), b), Eps(a))
            yield Del(Pair(a, CtxHole()), Eps(b))
        case App(f, a):
            for left_budget in range(1, budget - 1):
                for i in _enum_deltas_list(f, left_budget, scope_depth):
                    for j in _enum_deltas_list(a, budget - 1 - left_budget, scope_depth):
                        yield AppCong(i, j)
            yield Del(App(CtxHole(), a), Eps(f))
            yield Del(App(f, CtxHole()), Eps(a))
        case Lam(x, b):
            if x == f"v{scope_depth}":
                for i in _enum_deltas_list(b, budget - 1, scope_depth + 1):
                    yield LamCong(x, i)
            else:
                for i in _enum_deltas_list(b, budget - 1, scope_depth):
                    yield LamCong(x, i)
            if x not in free_vars(b):
                yield Del(Lam(x, CtxHole()), Eps(b))
        case Var(x):
            for y in scope:
                yield VarReplace(x, y)
    # insertions: small frames around e
    for frame in _small_frames(budget, scope):
        inner_budget = budget - term_size(frame)
        for i in _enum_deltas_list(e, inner_budget, scope_depth):
            yield Ins(frame, i)
    # replacements
    for target in _REPLACE_POOL:
        if 1 + term_size(target) <= budget:
            yield Replace(e, target)
    for y in scope:
        if budget >= 2:
            yield Replace(e, Var(y))


def _enum_deltas_list(e: Term, max_size: int, scope_depth: int) -> list[Delta]:
    if max_size < 1:
        return []
    return list(enumerate_deltas(e, max_size, scope_depth))


def _small_frames(budget: int, scope: list[str]) -> list[Term]:
    frames: list[Term] = []
    if budget >= 3:
        frames.extend([Inl(CtxHole()), Inr(CtxHole())])
        frames.append(Lam(f"w{len(scope)}", CtxHole()))
    if budget >= 4:
        frames.extend(
            [
                Pair(Unit(), CtxHole()),
                Pair(CtxHole(), Unit()),
                App(CtxHole(), Unit()),
            ]
        )
        frames.extend(Pair(Var(y), CtxHole()) for y in scope[:1])
    return frames
