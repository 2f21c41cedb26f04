"""Step-by-step verification of CL5 proof objects."""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional, Sequence

from .cirquent import Cirquent, exchange_equivalent
from .rules import AxiomIntro, RuleApplication, RuleError, apply_axiom, apply_forward

MODES = ("strict", "normalized")


@dataclass(frozen=True)
class Step:
    application: RuleApplication
    result: Optional[Cirquent] = None


@dataclass(frozen=True)
class Proof:
    """Axiom first, then one rule application per step, ending in ``conclusion``.

    ``result`` may be omitted on any step; it is then recomputed forward.
    """

    steps: tuple[Step, ...]
    conclusion: Cirquent
    mode: str = "strict"

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))


@dataclass(frozen=True)
class Failure:
    step: int
    code: str
    message: str


@dataclass(frozen=True)
class Verdict:
    accepted: bool
    failure: Optional[Failure] = None

    def __bool__(self) -> bool:
        return self.accepted


class ProofError(ValueError):
    def __init__(self, failure: Failure):
        super().__init__(f"step {failure.step}: {failure.code}: {failure.message}")
        self.failure = failure


def _same(a: Cirquent, b: Cirquent, mode: str) -> bool:
    return a == b if mode == "strict" else exchange_equivalent(a, b)


def _walk(p: Proof, mode: str) -> list[Cirquent]:
    """Results of every step; raises ProofError at the first bad one."""
    if mode not in MODES:
        raise ProofError(Failure(0, "MALFORMED", f"unknown mode {mode!r}"))
    if not p.steps:
        raise ProofError(Failure(0, "MALFORMED", "proof has no steps"))
    results: list[Cirquent] = []
    for index, step in enumerate(p.steps):
        app = step.application
        try:
            if index == 0:
                if not isinstance(app, AxiomIntro):
                    raise RuleError("NOT_AXIOM", "first step must introduce an axiom")
                current = apply_axiom(app)
            elif isinstance(app, AxiomIntro):
                raise RuleError("MALFORMED", "axiom introduced after step 0")
            else:
                current = apply_forward(results[-1], app)
        except RuleError as exc:
            raise ProofError(Failure(index, exc.code, str(exc))) from None
        if step.result is not None and not _same(current, step.result, mode):
            raise ProofError(
                Failure(index, "RESULT_MISMATCH", f"rule yields {current}, step records {step.result}")
            )
        results.append(current if step.result is None or mode == "strict" else step.result)
    if not _same(results[-1], p.conclusion, mode):
        raise ProofError(
            Failure(len(p.steps) - 1, "CONCLUSION_MISMATCH", f"proof ends in {results[-1]}, not {p.conclusion}")
        )
    return results


def check_proof(p: Proof, mode: Optional[str] = None) -> Verdict:
    """Accept iff every step follows from the previous result.

    In ``normalized`` mode each recorded result only has to be
    Exchange-equivalent to what the rule produces; the next step then applies
    to the recorded result.
    """
    try:
        _walk(p, mode or p.mode)
    except ProofError as exc:
        return Verdict(False, exc.failure)
    return Verdict(True)


def elaborate_proof(p: Proof, mode: Optional[str] = None) -> Proof:
    """Fill in every step's result by forward application."""
    results = _walk(p, mode or p.mode)
    return replace(p, steps=tuple(Step(s.application, r) for s, r in zip(p.steps, results)))


def proof_from_applications(apps: Sequence[RuleApplication], conclusion: Cirquent, mode: str = "strict") -> Proof:
    return Proof(tuple(Step(a) for a in apps), conclusion, mode)
