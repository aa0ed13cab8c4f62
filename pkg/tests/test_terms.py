"""Term structure: values, free variables, contexts, alpha-equivalence."""
from __future__ import annotations

import pytest

from ilc import (
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
    Unit,
    Unroll,
    Var,
    alpha_eq,
    free_vars,
    is_value,
    plug,
    term_size,
)
from ilc.terms import fresh_name, hole_count, is_context, split_context


def test_values_cover_the_value_grammar():
    assert is_value(Unit())
    assert is_value(Lam("x", App(Var("x"), Var("x"))))
    assert is_value(Inl(Unit()))
    assert is_value(Inr(Pair(Unit(), Unit())))
    assert is_value(Roll(Inl(Unit())))


def test_non_values():
    assert not is_value(Var("x"))
    assert not is_value(App(Lam("x", Var("x")), Unit()))
    assert not is_value(Unroll(Roll(Unit())))
    assert not is_value(Inl(App(Lam("x", Var("x")), Unit())))
    assert not is_value(MatchSum(Inl(Unit()), "x", Var("x"), "y", Var("y")))
    assert not is_value(Hole())


def test_free_vars_respect_binders():
    body = MatchSum(Var("s"), "x", Var("x"), "y", Var("z"))
    assert free_vars(body) == {"s", "z"}
    assert free_vars(Lam("z", body)) == {"s"}
    assert free_vars(MatchPair(Var("p"), "a", "b", Pair(Var("a"), Var("c")))) == {"p", "c"}


def test_match_pair_binders_must_differ():
    with pytest.raises(ValueError):
        MatchPair(Var("p"), "a", "a", Var("a"))


def test_term_size_counts_nodes():
    assert term_size(Unit()) == 1
    assert term_size(Pair(Unit(), Inl(Unit()))) == 4
    assert term_size(Lam("x", App(Var("x"), Var("x")))) == 4


def test_plug_is_verbatim_and_captures():
    ctx = Lam("x", CtxHole())
    assert plug(ctx, Var("x")) == Lam("x", Var("x"))


def test_plug_fills_every_hole_occurrence():
    ctx = Pair(CtxHole(), Inl(CtxHole()))
    assert plug(ctx, Unit()) == Pair(Unit(), Inl(Unit()))


def test_hole_count_and_is_context():
    assert hole_count(CtxHole()) == 1
    assert hole_count(Pair(CtxHole(), CtxHole())) == 2
    assert is_context(Inl(CtxHole()))
    assert not is_context(Inl(Unit()))
    assert not is_context(Pair(CtxHole(), CtxHole()))


def test_split_context_peels_one_frame():
    frame, rest = split_context(Inl(Roll(CtxHole())))
    assert frame == Inl(CtxHole())
    assert rest == Roll(CtxHole())


def test_split_context_at_depth_one():
    frame, rest = split_context(Pair(Unit(), CtxHole()))
    assert frame == Pair(Unit(), CtxHole())
    assert rest == CtxHole()


def test_alpha_eq_renames_binders():
    assert alpha_eq(Lam("x", Var("x")), Lam("y", Var("y")))
    assert alpha_eq(
        MatchSum(Unit(), "a", Var("a"), "b", Var("b")),
        MatchSum(Unit(), "c", Var("c"), "d", Var("d")),
    )
    assert not alpha_eq(Lam("x", Var("x")), Lam("y", Var("x")))


def test_alpha_eq_distinguishes_free_variables_by_name():
    assert alpha_eq(Var("x"), Var("x"))
    assert not alpha_eq(Var("x"), Var("y"))


def test_alpha_eq_handles_shadowing():
    a = Lam("x", Lam("x", Var("x")))
    b = Lam("y", Lam("z", Var("z")))
    c = Lam("y", Lam("z", Var("y")))
    assert alpha_eq(a, b)
    assert not alpha_eq(a, c)


def test_fresh_names_do_not_collide():
    seen = {fresh_name("x") for _ in range(100)}
    assert len(seen) == 100
