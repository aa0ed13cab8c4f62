"""Incremental lambda calculus workbench.

Terms with first-class deltas: construct or parse an edit, compute its
endpoints, compose and residuate edits, and evaluate an edit between two
programs to an edit between their values.
"""
from .algebra import (
    NotComposable,
    NotCoinitial,
    UndefinedResidual,
    compatible,
    compose,
    residual,
)
from .delta import (
    AppCong,
    Del,
    Delta,
    EndpointMismatch,
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
    apply,
    check_valid,
    decompose,
    delta_size,
    diff,
    find_occurrence,
    is_value_delta,
    src,
    tgt,
)
from .gen import (
    enumerate_deltas,
    enumerate_terms,
    gen_compatible_pair,
    gen_delta,
    gen_term,
    gen_value_delta,
)
from .jsonio import (
    WireFormatError,
    delta_from_json,
    delta_to_json,
    outcome_from_json,
    outcome_to_json,
    term_from_json,
    term_to_json,
)
from .parser import ParseError, parse_context, parse_delta, parse_term
from .printer import pretty_context, pretty_delta, pretty_term
from .semantics import (
    DEFAULT_FUEL,
    DeltaEvalError,
    EvalOutcome,
    OutOfFuel,
    Stuck,
    Val,
    delta_eval,
    delta_subst,
    eval_term,
    subst,
)
from .terms import (
    App,
    Context,
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
    alpha_eq,
    free_vars,
    is_value,
    plug,
    term_size,
)

__all__ = [name for name in dir() if not name.startswith("_")]
