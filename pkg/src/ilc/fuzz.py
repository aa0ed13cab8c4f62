"""Differential coherence fuzzing.

Each trial generates a closed term and a valid delta over it, evaluates both
endpoints independently, evaluates the delta itself, and checks that the value
delta's endpoints agree with the two baseline runs up to alpha-equivalence.
Trials whose baselines run out of fuel or get stuck are counted and skipped,
not failed. Every trial is reproducible from the seed stored in its report.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .delta import Delta, src, tgt
from .gen import gen_delta, gen_term
from .jsonio import Json, delta_to_json, outcome_to_json, term_to_json
from .semantics import (
    DEFAULT_FUEL,
    DeltaEvalError,
    EvalOutcome,
    OutOfFuel,
    Stuck,
    Val,
    delta_eval,
    eval_term,
)
from .terms import Term, alpha_eq

VERDICTS = ("coherent", "incoherent", "skipped-fuel", "skipped-stuck")


@dataclass(frozen=True)
class Config:
    """Knobs for a coherence run; all sizes positive, trials may be zero."""

    fuel: int = DEFAULT_FUEL
    trials: int = 2000
    max_size: int = 40
    seed: int = 1
    output: str = "text"

    def __post_init__(self) -> None:
        if self.fuel <= 0:
            raise ValueError("fuel must be positive")
        if self.trials < 0:
            raise ValueError("trials must not be negative")
        if self.max_size <= 0:
            raise ValueError("max term size must be positive")
        if self.output not in ("text", "json"):
            raise ValueError("output must be text or json")


@dataclass(frozen=True)
class TrialReport:
    """One differential trial; rerunning run_trial with the same seed, size
    bound and fuel reproduces it exactly."""

    seed: int
    term: Term
    delta: Delta
    src_outcome: EvalOutcome
    tgt_outcome: EvalOutcome
    delta_outcome: Delta | DeltaEvalError | None
    verdict: str


@dataclass(frozen=True)
class Summary:
    config: Config
    verdicts: dict[str, int] = field(default_factory=dict)
    rule_counts: dict[str, int] = field(default_factory=dict)

    @property
    def incoherent(self) -> int:
        return self.verdicts.get("incoherent", 0)

    @property
    def coherent(self) -> int:
        return self.verdicts.get("coherent", 0)


def trial_seeds(master: int, n: int) -> list[int]:
    """Per-trial seeds derived deterministically from the master seed."""
    rng = random.Random(master)
    return [rng.getrandbits(48) for _ in range(n)]


def run_trial(
    seed: int,
    max_size: int = 40,
    fuel: int = DEFAULT_FUEL,
    counters: dict[str, int] | None = None,
) -> TrialReport:
    """Generate one (term, delta) pair from seed and judge its coherence."""
    rng = random.Random(seed)
    term = gen_term(rng, rng.randint(max(1, max_size // 4), max_size))
    delta = gen_delta(rng, term, rng.randint(2, max(3, max_size // 3)))

    s_out = eval_term(src(delta), fuel)
    t_out = eval_term(tgt(delta), fuel)
    if isinstance(s_out, OutOfFuel) or isinstance(t_out, OutOfFuel):
        return TrialReport(seed, term, delta, s_out, t_out, None, "skipped-fuel")
    if isinstance(s_out, Stuck) or isinstance(t_out, Stuck):
        return TrialReport(seed, term, delta, s_out, t_out, None, "skipped-stuck")

    try:
        dv = delta_eval(delta, fuel, counters)
    except DeltaEvalError as err:
        # both baselines produced values, so a delta-side failure is a bug
        return TrialReport(seed, term, delta, s_out, t_out, err, "incoherent")
    ok = alpha_eq(src(dv), s_out.value) and alpha_eq(tgt(dv), t_out.value)
    verdict = "coherent" if ok else "incoherent"
    return TrialReport(seed, term, delta, s_out, t_out, dv, verdict)


def run_coherence_suite(cfg: Config) -> tuple[Summary, list[TrialReport]]:
    """Run cfg.trials independent trials; reports come back in seed order."""
    verdicts = {v: 0 for v in VERDICTS}
    rule_counts: dict[str, int] = {}
    reports: list[TrialReport] = []
    for seed in trial_seeds(cfg.seed, cfg.trials):
        report = run_trial(seed, cfg.max_size, cfg.fuel, rule_counts)
        verdicts[report.verdict] += 1
        reports.append(report)
    return Summary(cfg, verdicts, rule_counts), reports


# ---------------------------------------------------------------------------
# rendering


def report_to_json(report: TrialReport) -> Json:
    if isinstance(report.delta_outcome, Delta):
        delta_outcome: Json | None = {"delta": delta_to_json(report.delta_outcome)}
    elif isinstance(report.delta_outcome, DeltaEvalError):
        delta_outcome = {"error": str(report.delta_outcome)}
    else:
        delta_outcome = None
    return {
        "seed": report.seed,
        "term": term_to_json(report.term),
        "delta": delta_to_json(report.delta),
        "src_outcome": outcome_to_json(report.src_outcome),
        "tgt_outcome": outcome_to_json(report.tgt_outcome),
        "delta_outcome": delta_outcome,
        "verdict": report.verdict,
    }


def summary_to_json(summary: Summary, reports: list[TrialReport]) -> Json:
    """Summary plus the incoherent counterexamples, if any."""
    return {
        "config": {
            "fuel": summary.config.fuel,
            "trials": summary.config.trials,
            "max_size": summary.config.max_size,
            "seed": summary.config.seed,
        },
        "verdicts": dict(summary.verdicts),
        "rules": dict(summary.rule_counts),
        "incoherent": [
            report_to_json(r) for r in reports if r.verdict == "incoherent"
        ],
    }


def summary_to_text(summary: Summary) -> str:
    lines = [
        f"trials {summary.config.trials}  seed {summary.config.seed}"
        f"  size {summary.config.max_size}  fuel {summary.config.fuel}"
    ]
    for verdict in VERDICTS:
        lines.append(f"  {verdict:>14}: {summary.verdicts.get(verdict, 0)}")
    fired = sum(1 for n in summary.rule_counts.values() if n > 0)
    lines.append(f"  rules fired: {fired} ({sum(summary.rule_counts.values())} total applications)")
    return "\n".join(lines)
