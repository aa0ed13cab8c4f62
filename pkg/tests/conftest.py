"""Shared fixtures: the recursive list-copy program and its pair-with edit."""
from __future__ import annotations

import pytest

from ilc import Delta, Ins, Pair, Replace, parse_delta, parse_term

FST_IMPL = "fun p -> match p { (a, b) -> a }"
SND_IMPL = "fun p -> match p { (a, b) -> b }"
DUP_IMPL = "fun v -> (v, v)"
LIST2 = "roll (inr (inl (), roll (inr (inr (), roll (inl ())))))"

_COPY = (
    "fun self -> fun l -> match unroll l "
    "{ inl n -> roll (inl n) "
    "| inr c -> (fun x -> fun t -> roll (inr (x, (self self) t))) (fst c) (snd c) }"
)

COPY_LIST_PROGRAM = (
    f"(fun fst -> fun snd -> fun dup -> ({_COPY}) ({_COPY}) ({LIST2})) "
    f"({FST_IMPL}) ({SND_IMPL}) ({DUP_IMPL})"
)

_COPY_EDIT = (
    "fun self -> fun l -> match unroll ~{l} "
    "{ inl n -> ~{roll (inl n)} "
    "| inr c -> (fun x -> fun t -> roll (inr (+[(@, dup x)]{~{x}}, ~{(self self) t}))) "
    "(~{fst c}) (~{snd c}) }"
)

COPY_LIST_DELTA = (
    f"(fun fst -> fun snd -> fun dup -> ({_COPY_EDIT}) ({_COPY_EDIT}) (~{{{LIST2}}})) "
    f"(~{{{FST_IMPL}}}) (~{{{SND_IMPL}}}) (~{{{DUP_IMPL}}})"
)


@pytest.fixture
def copy_list_fixture():
    """The list-copy program, the delta pairing each cons head with dup of
    itself, and the fuel that comfortably runs both."""
    return parse_term(COPY_LIST_PROGRAM), parse_delta(COPY_LIST_DELTA), 2048


def count_pair_insertions(d: Delta) -> int:
    return sum(1 for node in iter_delta(d) if isinstance(node, Ins) and isinstance(node.frame, Pair))


def count_replaces(d: Delta) -> int:
    return sum(1 for node in iter_delta(d) if isinstance(node, Replace))


def iter_delta(d: Delta):
    yield d
    for name in getattr(d, "__dataclass_fields__", {}):
        child = getattr(d, name)
        if isinstance(child, Delta):
            yield from iter_delta(child)
