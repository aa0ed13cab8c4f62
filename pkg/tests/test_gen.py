"""Generators: determinism, closedness, validity, coverage, enumeration."""
from __future__ import annotations

from collections import Counter

from ilc import (
    Delta,
    Eps,
    Unit,
    Val,
    alpha_eq,
    check_valid,
    compatible,
    delta_size,
    enumerate_deltas,
    enumerate_terms,
    eval_term,
    free_vars,
    gen_compatible_pair,
    gen_delta,
    gen_term,
    gen_value_delta,
    is_value,
    residual,
    src,
    term_size,
    tgt,
)

ALL_DELTA_KINDS = {
    "Eps",
    "Ins",
    "Del",
    "InlCong",
    "InrCong",
    "InlBang",
    "InrBang",
    "MatchCong",
    "PairCong",
    "LamCong",
    "AppCong",
    "RollCong",
    "UnrollCong",
    "Replace",
    "VarReplace",
}


def _delta_kinds(d: Delta, seen: Counter) -> None:
    seen[type(d).__name__] += 1
    for field in getattr(d, "__dataclass_fields__", {}):
        child = getattr(d, field)
        if isinstance(child, Delta):
            _delta_kinds(child, seen)


def test_gen_term_is_deterministic():
    for seed in (0, 1, 7, 123456):
        assert gen_term(seed, 20) == gen_term(seed, 20)


def test_gen_term_is_closed_and_within_budget():
    for seed in range(300):
        t = gen_term(seed, 16)
        assert free_vars(t) == set()
        assert term_size(t) <= 16


def test_gen_term_size_one_is_a_leaf():
    for seed in range(20):
        assert gen_term(seed, 1) == Unit()


def test_gen_term_biases_toward_terms_that_evaluate():
    values = sum(
        isinstance(eval_term(gen_term(seed, 16)), Val) for seed in range(300)
    )
    assert values >= 240


def test_gen_delta_zero_budget_is_eps():
    for seed in range(20):
        t = gen_term(seed, 8)
        assert gen_delta(seed, t, 0) == Eps(t)


def test_gen_delta_source_is_exactly_the_term():
    for seed in range(300):
        t = gen_term(seed, 10)
        d = gen_delta(seed + 1, t, 8)
        assert src(d) == t
        assert check_valid(d, t)


def test_gen_delta_targets_stay_closed():
    for seed in range(300):
        t = gen_term(seed, 10)
        d = gen_delta(seed + 1, t, 8)
        assert free_vars(tgt(d)) == set()


def test_gen_delta_distribution_covers_every_alternative():
    """Over 1000 samples at budget 8, every delta constructor appears."""
    seen: Counter = Counter()
    for seed in range(1000):
        t = gen_term(seed, 8)
        _delta_kinds(gen_delta(seed + 7919, t, 8), seen)
    assert ALL_DELTA_KINDS <= set(seen)


def test_gen_value_delta_endpoints_are_closed_values():
    checked = 0
    for seed in range(200):
        out = eval_term(gen_term(seed, 10))
        if not isinstance(out, Val):
            continue
        dv = gen_value_delta(seed + 31, out.value, 6)
        assert src(dv) == out.value
        assert is_value(tgt(dv)) and not free_vars(tgt(dv))
        checked += 1
    assert checked > 150


def test_gen_compatible_pair_is_compatible_with_defined_residual():
    for seed in range(200):
        t = gen_term(seed, 10)
        d1, d2 = gen_compatible_pair(seed + 5, t, 8)
        assert src(d1) == t and src(d2) == t
        assert compatible(d1, d2)
        r = residual(d1, d2)
        assert alpha_eq(src(r), tgt(d2))


def test_enumerate_terms_is_finite_closed_and_bounded():
    terms = list(enumerate_terms(5))
    assert len(terms) == len(set(map(repr, terms)))
    for t in terms:
        assert term_size(t) <= 5
        assert free_vars(t) == set()


def test_enumerate_terms_counts_grow():
    counts = [sum(1 for _ in enumerate_terms(n)) for n in (1, 2, 3, 4)]
    assert counts == sorted(counts)
    assert counts[0] == 1  # just ()


def test_enumerate_deltas_are_valid_and_bounded():
    for t in enumerate_terms(3):
        for d in enumerate_deltas(t, 4):
            assert src(d) == t
            assert delta_size(d) <= 4


def test_enumerate_deltas_include_every_family_somewhere():
    seen: Counter = Counter()
    for t in enumerate_terms(4):
        for d in enumerate_deltas(t, 4):
            _delta_kinds(d, seen)
    # roll/unroll and match forms are outside the enumerated fragment
    expected = ALL_DELTA_KINDS - {"RollCong", "UnrollCong", "MatchCong"}
    assert expected <= set(seen)
