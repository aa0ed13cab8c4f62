"""Delta endpoints, application, decomposition, diff, and the wire format."""
from __future__ import annotations

import pytest

from ilc import (
    App,
    AppCong,
    CtxHole,
    Del,
    EndpointMismatch,
    Eps,
    Inl,
    InlBang,
    InlCong,
    Inr,
    InrBang,
    Ins,
    Lam,
    LamCong,
    MatchCong,
    MatchSum,
    Pair,
    PairCong,
    Replace,
    Roll,
    RollCong,
    Unit,
    Unroll,
    UnrollCong,
    Var,
    VarReplace,
    alpha_eq,
    apply,
    check_valid,
    decompose,
    delta_size,
    diff,
    gen_delta,
    gen_term,
    parse_delta,
    parse_term,
    src,
    tgt,
)
from ilc.delta import find_occurrence, is_value_delta
from ilc.jsonio import (
    WireFormatError,
    delta_from_json,
    delta_to_json,
    outcome_from_json,
    outcome_to_json,
    term_from_json,
    term_to_json,
)
from ilc.semantics import OutOfFuel, Stuck, Val


def test_eps_endpoints():
    d = Eps(Inl(Unit()))
    assert src(d) == tgt(d) == Inl(Unit())


def test_ins_endpoints_plug_the_frame_on_the_target_side():
    d = Ins(Pair(CtxHole(), Unit()), Eps(Var("x")))
    assert src(d) == Var("x")
    assert tgt(d) == Pair(Var("x"), Unit())


def test_del_endpoints_plug_the_frame_on_the_source_side():
    d = Del(Inl(CtxHole()), Eps(Unit()))
    assert src(d) == Inl(Unit())
    assert tgt(d) == Unit()


def test_bang_endpoints_swap_the_injection():
    d = InlBang(Eps(Unit()))
    assert src(d) == Inr(Unit())
    assert tgt(d) == Inl(Unit())
    d = InrBang(Replace(Unit(), Var("y")))
    assert src(d) == Inl(Unit())
    assert tgt(d) == Inr(Var("y"))


def test_congruence_endpoints_rebuild_the_node():
    d = MatchCong(Eps(Var("s")), "x", VarReplace("x", "x"), "y", Replace(Var("y"), Unit()))
    assert src(d) == MatchSum(Var("s"), "x", Var("x"), "y", Var("y"))
    assert tgt(d) == MatchSum(Var("s"), "x", Var("x"), "y", Unit())


def test_var_replace_endpoints():
    d = VarReplace("x", "y")
    assert src(d) == Var("x")
    assert tgt(d) == Var("y")


def test_apply_checks_the_source_up_to_alpha():
    d = LamCong("x", Eps(Var("x")))
    assert apply(Lam("y", Var("y")), d) == Lam("x", Var("x"))
    with pytest.raises(EndpointMismatch):
        apply(Lam("y", Var("z")), d)


def test_check_valid_is_alpha_loose():
    d = parse_delta("fun x -> ~{x}")
    assert check_valid(d, parse_term("fun q -> q"))
    assert not check_valid(d, parse_term("fun q -> ()"))


def test_delta_size_charges_frames_and_replacements():
    assert delta_size(Eps(Pair(Unit(), Unit()))) == 1
    assert delta_size(VarReplace("x", "y")) == 1
    assert delta_size(Ins(Pair(CtxHole(), Unit()), Eps(Unit()))) == 4
    assert delta_size(Replace(Unit(), Inl(Unit()))) == 3
    assert delta_size(InlCong(Eps(Unit()))) == 2


def test_is_value_delta():
    assert is_value_delta(InlCong(Eps(Unit())))
    assert is_value_delta(Replace(Unit(), Lam("x", Var("x"))))
    assert not is_value_delta(Eps(App(Lam("x", Var("x")), Unit())))
    assert not is_value_delta(Ins(App(Lam("x", Var("x")), CtxHole()), Eps(Unit())))


def test_decompose_splits_deep_frames_to_depth_one():
    d = parse_delta("+[inl (roll @)]{~{()}}")
    split = decompose(d)
    assert split == Ins(Inl(CtxHole()), Ins(Roll(CtxHole()), Eps(Unit())))
    assert src(split) == src(d)
    assert tgt(split) == tgt(d)


def test_decompose_recurses_into_congruences():
    d = PairCong(Del(Inl(Roll(CtxHole())), Eps(Unit())), Eps(Unit()))
    split = decompose(d)
    assert split.first == Del(Inl(CtxHole()), Del(Roll(CtxHole()), Eps(Unit())))


def test_decompose_preserves_endpoints_on_generated_deltas():
    for seed in range(120):
        t = gen_term(seed, 12)
        d = gen_delta(seed + 5000, t, 9)
        split = decompose(d)
        assert src(split) == src(d)
        assert tgt(split) == tgt(d)


def test_diff_of_equal_terms_is_eps():
    t = parse_term("fun x -> (x, inl ())")
    assert diff(t, Lam("y", Pair(Var("y"), Inl(Unit())))) == Eps(t)


def test_diff_prefers_insertion_over_replacement():
    d = diff(Unit(), Pair(Unit(), Inl(Unit())))
    assert d == Ins(Pair(CtxHole(), Inl(Unit())), Eps(Unit()))


def test_diff_prefers_deletion_when_shrinking():
    d = diff(Pair(Unit(), Inl(Unit())), Unit())
    assert isinstance(d, Del)
    assert tgt(d) == Unit()


def test_diff_flips_injections_with_bangs():
    d = diff(Inl(Unit()), Inr(Unit()))
    assert d == InrBang(Eps(Unit()))


def test_diff_satisfies_the_patch_law():
    for seed in range(200):
        a = gen_term(seed, 10)
        b = gen_term(seed + 9001, 10)
        d = diff(a, b)
        assert alpha_eq(apply(a, d), b)


def test_find_occurrence_returns_the_surrounding_context():
    hay = Pair(Inl(Unit()), Roll(Inl(Unit())))
    ctx = find_occurrence(Inl(Unit()), hay)
    assert ctx == Pair(CtxHole(), Roll(Inl(Unit())))
    assert find_occurrence(Var("zzz"), hay) is None


def test_term_json_roundtrip():
    for seed in range(80):
        t = gen_term(seed, 15)
        assert term_from_json(term_to_json(t)) == t


def test_delta_json_roundtrip():
    for seed in range(80):
        t = gen_term(seed, 10)
        d = gen_delta(seed + 77, t, 8)
        assert delta_from_json(delta_to_json(d)) == d


def test_outcome_json_roundtrip():
    outs = [
        Val(Inl(Unit())),
        Stuck("free variable", Var("x")),
        OutOfFuel(App(Lam("x", App(Var("x"), Var("x"))), Lam("x", App(Var("x"), Var("x"))))),
    ]
    for out in outs:
        assert outcome_from_json(outcome_to_json(out)) == out


def test_wire_errors_carry_the_json_path():
    with pytest.raises(WireFormatError) as err:
        term_from_json({"kind": "inl", "body": {"kind": "nope"}})
    assert "$.body" in str(err.value)
    with pytest.raises(WireFormatError):
        delta_from_json({"kind": "ins", "frame": {"kind": "unit"}, "inner": {"kind": "eps"}})
    with pytest.raises(WireFormatError):
        term_from_json(["not", "an", "object"])


def test_unroll_roll_congruences_roundtrip_json():
    d = UnrollCong(RollCong(Eps(Unit())))
    assert delta_from_json(delta_to_json(d)) == d
    assert src(d) == Unroll(Roll(Unit()))
