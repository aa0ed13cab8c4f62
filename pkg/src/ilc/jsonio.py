"""JSON wire format for terms and deltas.

Every node is an object with a "kind" field; see docs/wire-format.md. The
decoder reports the JSON path of the offending node on malformed input.
"""
from __future__ import annotations

from typing import Any

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
from .semantics import EvalOutcome, OutOfFuel, Stuck, Val
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
)

Json = dict[str, Any]


class WireFormatError(ValueError):
    """Malformed JSON for a term or delta; the message carries the path."""


def term_to_json(t: Term) -> Json:
    match t:
        case Hole():
            return {"kind": "hole"}
        case CtxHole():
            return {"kind": "ctxhole"}
        case Var(x):
            return {"kind": "var", "name": x}
        case Unit():
            return {"kind": "unit"}
        case Inl(b):
            return {"kind": "inl", "body": term_to_json(b)}
        case Inr(b):
            return {"kind": "inr", "body": term_to_json(b)}
        case Roll(b):
            return {"kind": "roll", "body": term_to_json(b)}
        case Unroll(b):
            return {"kind": "unroll", "body": term_to_json(b)}
        case Pair(a, b):
            return {"kind": "pair", "first": term_to_json(a), "second": term_to_json(b)}
        case App(f, a):
            return {"kind": "app", "fn": term_to_json(f), "arg": term_to_json(a)}
        case Lam(x, b):
            return {"kind": "lam", "binder": x, "body": term_to_json(b)}
        case MatchSum(s, xl, l, xr, r):
            return {
                "kind": "match",
                "scrutinee": term_to_json(s),
                "left_binder": xl,
                "left": term_to_json(l),
                "right_binder": xr,
                "right": term_to_json(r),
            }
        case MatchPair(s, x1, x2, b):
            return {
                "kind": "matchpair",
                "scrutinee": term_to_json(s),
                "first_binder": x1,
                "second_binder": x2,
                "body": term_to_json(b),
            }
    raise TypeError(f"not a term: {t!r}")


def delta_to_json(d: Delta) -> Json:
    match d:
        case Eps(e):
            return {"kind": "eps", "at": term_to_json(e)}
        case Ins(frame, inner):
            return {"kind": "ins", "frame": term_to_json(frame), "inner": delta_to_json(inner)}
        case Del(frame, inner):
            return {"kind": "del", "frame": term_to_json(frame), "inner": delta_to_json(inner)}
        case InlCong(i):
            return {"kind": "inl", "inner": delta_to_json(i)}
        case InrCong(i):
            return {"kind": "inr", "inner": delta_to_json(i)}
        case InlBang(i):
            return {"kind": "inlbang", "inner": delta_to_json(i)}
        case InrBang(i):
            return {"kind": "inrbang", "inner": delta_to_json(i)}
        case RollCong(i):
            return {"kind": "roll", "inner": delta_to_json(i)}
        case UnrollCong(i):
            return {"kind": "unroll", "inner": delta_to_json(i)}
        case PairCong(a, b):
            return {"kind": "pair", "first": delta_to_json(a), "second": delta_to_json(b)}
        case AppCong(f, a):
            return {"kind": "app", "fn": delta_to_json(f), "arg": delta_to_json(a)}
        case LamCong(x, b):
            return {"kind": "lam", "binder": x, "body": delta_to_json(b)}
        case MatchCong(s, xl, l, xr, r):
            return {
                "kind": "match",
                "scrutinee": delta_to_json(s),
                "left_binder": xl,
                "left": delta_to_json(l),
                "right_binder": xr,
                "right": delta_to_json(r),
            }
        case Replace(a, b):
            return {"kind": "replace", "source": term_to_json(a), "target": term_to_json(b)}
        case VarReplace(x, y):
            return {"kind": "varreplace", "source": x, "target": y}
    raise TypeError(f"not a delta: {d!r}")


def _obj(node: Any, path: str) -> Json:
    if not isinstance(node, dict):
        raise WireFormatError(f"{path}: expected an object, got {type(node).__name__}")
    if "kind" not in node:
        raise WireFormatError(f"{path}: missing 'kind'")
    return node


def _field(node: Json, name: str, path: str) -> Any:
    if name not in node:
        raise WireFormatError(f"{path}: missing field {name!r} for kind {node['kind']!r}")
    return node[name]


def _name(node: Json, field: str, path: str) -> str:
    value = _field(node, field, path)
    if not isinstance(value, str) or not value:
        raise WireFormatError(f"{path}.{field}: expected a non-empty string")
    return value


def term_from_json(node: Any, path: str = "$") -> Term:
    obj = _obj(node, path)
    kind = obj["kind"]
    match kind:
        case "hole":
            return Hole()
        case "ctxhole":
            return CtxHole()
        case "unit":
            return Unit()
        case "var":
            return Var(_name(obj, "name", path))
        case "inl":
            return Inl(term_from_json(_field(obj, "body", path), f"{path}.body"))
        case "inr":
            return Inr(term_from_json(_field(obj, "body", path), f"{path}.body"))
        case "roll":
            return Roll(term_from_json(_field(obj, "body", path), f"{path}.body"))
        case "unroll":
            return Unroll(term_from_json(_field(obj, "body", path), f"{path}.body"))
        case "pair":
            return Pair(
                term_from_json(_field(obj, "first", path), f"{path}.first"),
                term_from_json(_field(obj, "second", path), f"{path}.second"),
            )
        case "app":
            return App(
                term_from_json(_field(obj, "fn", path), f"{path}.fn"),
                term_from_json(_field(obj, "arg", path), f"{path}.arg"),
            )
        case "lam":
            return Lam(
                _name(obj, "binder", path),
                term_from_json(_field(obj, "body", path), f"{path}.body"),
            )
        case "match":
            return MatchSum(
                term_from_json(_field(obj, "scrutinee", path), f"{path}.scrutinee"),
                _name(obj, "left_binder", path),
                term_from_json(_field(obj, "left", path), f"{path}.left"),
                _name(obj, "right_binder", path),
                term_from_json(_field(obj, "right", path), f"{path}.right"),
            )
        case "matchpair":
            try:
                return MatchPair(
                    term_from_json(_field(obj, "scrutinee", path), f"{path}.scrutinee"),
                    _name(obj, "first_binder", path),
                    _name(obj, "second_binder", path),
                    term_from_json(_field(obj, "body", path), f"{path}.body"),
                )
            except ValueError as err:
                raise WireFormatError(f"{path}: {err}") from None
    raise WireFormatError(f"{path}: unknown term kind {kind!r}")


def delta_from_json(node: Any, path: str = "$") -> Delta:
    obj = _obj(node, path)
    kind = obj["kind"]
    match kind:
        case "eps":
            return Eps(term_from_json(_field(obj, "at", path), f"{path}.at"))
        case "ins" | "del":
            frame = term_from_json(_field(obj, "frame", path), f"{path}.frame")
            inner = delta_from_json(_field(obj, "inner", path), f"{path}.inner")
            try:
                return Ins(frame, inner) if kind == "ins" else Del(frame, inner)
            except ValueError as err:
                raise WireFormatError(f"{path}.frame: {err}") from None
        case "inl":
            return InlCong(delta_from_json(_field(obj, "inner", path), f"{path}.inner"))
        case "inr":
            return InrCong(delta_from_json(_field(obj, "inner", path), f"{path}.inner"))
        case "inlbang":
            return InlBang(delta_from_json(_field(obj, "inner", path), f"{path}.inner"))
        case "inrbang":
            return InrBang(delta_from_json(_field(obj, "inner", path), f"{path}.inner"))
        case "roll":
            return RollCong(delta_from_json(_field(obj, "inner", path), f"{path}.inner"))
        case "unroll":
            return UnrollCong(delta_from_json(_field(obj, "inner", path), f"{path}.inner"))
        case "pair":
            return PairCong(
                delta_from_json(_field(obj, "first", path), f"{path}.first"),
                delta_from_json(_field(obj, "second", path), f"{path}.second"),
            )
        case "app":
            return AppCong(
                delta_from_json(_field(obj, "fn", path), f"{path}.fn"),
                delta_from_json(_field(obj, "arg", path), f"{path}.arg"),
            )
        case "lam":
            return LamCong(
                _name(obj, "binder", path),
                delta_from_json(_field(obj, "body", path), f"{path}.body"),
            )
        case "match":
            return MatchCong(
                delta_from_json(_field(obj, "scrutinee", path), f"{path}.scrutinee"),
                _name(obj, "left_binder", path),
                delta_from_json(_field(obj, "left", path), f"{path}.left"),
                _name(obj, "right_binder", path),
                delta_from_json(_field(obj, "right", path), f"{path}.right"),
            )
        case "replace":
            return Replace(
                term_from_json(_field(obj, "source", path), f"{path}.source"),
                term_from_json(_field(obj, "target", path), f"{path}.target"),
            )
        case "varreplace":
            return VarReplace(_name(obj, "source", path), _name(obj, "target", path))
    raise WireFormatError(f"{path}: unknown delta kind {kind!r}")


# ---------------------------------------------------------------------------
# evaluation outcomes


def outcome_to_json(out: EvalOutcome) -> Json:
    match out:
        case Val(v):
            return {"kind": "value", "value": term_to_json(v)}
        case Stuck(reason, at):
            return {"kind": "stuck", "reason": reason, "at": term_to_json(at)}
        case OutOfFuel(at):
            return {"kind": "out-of-fuel", "at": term_to_json(at)}
    raise WireFormatError(f"not an outcome: {out!r}")


def outcome_from_json(node: Any, path: str = "$") -> EvalOutcome:
    obj = _obj(node, path)
    kind = _name(obj, "kind", path)
    match kind:
        case "value":
            return Val(term_from_json(_field(obj, "value", path), f"{path}.value"))
        case "stuck":
            return Stuck(
                _name(obj, "reason", path),
                term_from_json(_field(obj, "at", path), f"{path}.at"),
            )
        case "out-of-fuel":
            return OutOfFuel(term_from_json(_field(obj, "at", path), f"{path}.at"))
    raise WireFormatError(f"{path}: unknown outcome kind {kind!r}")
