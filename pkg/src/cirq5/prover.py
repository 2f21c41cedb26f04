"""Decide CL5 provability by exhaustive backward search.

Every backward rule strictly lowers ``measure`` (connectives first, then
arcs + groups) and each cirquent has finitely many premises, so the
reachable space is finite and a failed search is a genuine refutation.
States are memoized on their canonical form, which quotients out Exchange;
the strict proof is rebuilt afterwards by inserting adjacent swaps.

Cirquents made only of literals are decided directly. No forward rule
deletes a compound formula, so such a cirquent can only come from a literal
axiom by Weakening, Duplication and Exchange, and that happens exactly when
some set of disjoint dual pairs puts one pair inside every group. When the
cover exists, the matching backward chain is recorded like any other.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional, Union

from .checker import Proof, Step, check_proof, elaborate_proof
from .cirquent import Cirquent, canonicalize, is_axiom, isomorphism, measure
from .formula import Literal, atom_masks, atoms, nnf_dual, truth_mask
from .rules import (
    AxiomIntro,
    Duplication,
    Exchange,
    RuleApplication,
    Weakening,
    apply_forward,
    enumerate_backward,
)

DEFAULT_MAX_STATES = 10**6
DEFAULT_MAX_SECONDS = 60.0
# Above this many atoms the classical pre-filter is skipped (table too wide).
PRUNE_ATOM_CAP = 16


@dataclass(frozen=True)
class Provable:
    proof: Proof
    states_explored: int


@dataclass(frozen=True)
class NotProvable:
    states_explored: int


@dataclass(frozen=True)
class ResourceLimit:
    reason: str
    states_explored: int


ProveOutcome = Union[Provable, NotProvable, ResourceLimit]


class _LimitHit(Exception):
    pass


def exchange_steps(a: Cirquent, b: Cirquent) -> list[Exchange]:
    """Adjacent swaps turning ``a`` into exactly ``b`` (formulas first, then groups)."""
    iso = isomorphism(a, b)
    if iso is None:
        raise ValueError("cirquents are not Exchange-equivalent")
    steps = []
    for kind, order in zip(("formula", "group"), iso):
        current = list(range(len(order)))
        for k, want in enumerate(order):
            p = current.index(want)
            for q in range(p - 1, k - 1, -1):
                current[q], current[q + 1] = current[q + 1], current[q]
                steps.append(Exchange(kind, q))
    return steps


def dual_pair_cover(c: Cirquent) -> Optional[list[tuple[int, int]]]:
    """One dual pair inside each group, the chosen pairs pairwise disjoint.

    Returns the pair picked for every group, or None if no such cover exists.
    """
    candidates = []
    for g in c.groups:
        members = sorted(g)
        pairs = [
            (a, b)
            for x, a in enumerate(members)
            for b in members[x + 1:]
            if c.formulas[b] == nnf_dual(c.formulas[a])
        ]
        if not pairs:
            return None
        candidates.append(pairs)
    chosen: dict[int, tuple[int, int]] = {}  # occurrence -> pair using it
    picks: list[Optional[tuple[int, int]]] = [None] * len(c.groups)

    def extend() -> bool:
        best = None
        for j, pairs in enumerate(candidates):
            if picks[j] is not None:
                continue
            reuse = [p for p in pairs if chosen.get(p[0]) == p]
            if reuse:
                picks[j] = reuse[0]
                if extend():
                    return True
                picks[j] = None
                return False
            free = [p for p in pairs if p[0] not in chosen and p[1] not in chosen]
            if best is None or len(free) < len(best[1]):
                best = (j, free)
        if best is None:
            return True
        j, free = best
        for p in free:
            picks[j] = p
            chosen[p[0]] = chosen[p[1]] = p
            if extend():
                return True
            del chosen[p[0]], chosen[p[1]]
        picks[j] = None
        return False

    return list(picks) if extend() else None


def structural_chain(c: Cirquent, cover: list[tuple[int, int]]) -> list[tuple[RuleApplication, Cirquent]]:
    """Backward Weakening and Duplication steps from ``c`` down to an axiom."""
    targets = [set(p) for p in cover]
    chain = []
    while True:
        arc = next(((j, i) for j, g in enumerate(c.groups) for i in sorted(g) if i not in targets[j]), None)
        if arc is None:
            break
        app, premise = next(
            (a, p) for a, p in enumerate_backward(c) if isinstance(a, Weakening) and a.arc == arc
        )
        if len(premise.formulas) < len(c.formulas):
            targets = [{x - (x > arc[1]) for x in t} for t in targets]
        chain.append((app, premise))
        c = premise
    while not is_axiom(c):
        app, premise = next((a, p) for a, p in enumerate_backward(c) if isinstance(a, Duplication))
        chain.append((app, premise))
        c = premise
    return chain


class _Search:
    def __init__(self, target: Cirquent, max_states: int, max_seconds: float, prune: bool):
        self.max_states = max_states
        self.deadline = time.monotonic() + max_seconds
        self.explored = 0
        # canonical cirquent -> (application, concrete premise, concrete conclusion),
        # or (None, None, concrete axiom)
        self.proved: dict[Cirquent, tuple] = {}
        self.failed: set[Cirquent] = set()
        self.masks = None
        self.shortcut = prune
        if prune:
            names: dict[str, None] = {}
            for f in target.formulas:
                names.update(dict.fromkeys(atoms(f)))
            if len(names) <= PRUNE_ATOM_CAP:
                self.masks = atom_masks(list(names))
                self.mask_cache: dict = {}

    def classically_valid(self, c: Cirquent) -> bool:
        masks, full = self.masks
        for g in c.groups:
            acc = 0
            for i in g:
                f = c.formulas[i]
                m = self.mask_cache.get(f)
                if m is None:
                    m = self.mask_cache[f] = truth_mask(f, masks, full)
                acc |= m
            if acc != full:
                return False
        return True

    def solve(self, c: Cirquent) -> bool:
        if self.masks is not None and not self.classically_valid(c):
            return False
        key = canonicalize(c).cirquent
        if key in self.proved:
            return True
        if key in self.failed:
            return False
        self.explored += 1
        if self.explored > self.max_states:
            raise _LimitHit(f"max_states={self.max_states} reached")
        if time.monotonic() > self.deadline:
            raise _LimitHit("time limit reached")
        if is_axiom(c):
            self.proved[key] = (None, None, c)
            return True
        if self.shortcut and all(isinstance(f, Literal) for f in c.formulas):
            return self.decide_literal(c, key)
        here = measure(c)
        for app, premise in enumerate_backward(c):
            assert measure(premise) < here, (app, c)
            if self.solve(premise):
                self.proved[key] = (app, premise, c)
                return True
        self.failed.add(key)
        return False

    def decide_literal(self, c: Cirquent, key: Cirquent) -> bool:
        cover = dual_pair_cover(c)
        if cover is None:
            self.failed.add(key)
            return False
        current = c
        for app, premise in structural_chain(c, cover):
            assert measure(premise) < measure(current), (app, current)
            self.proved.setdefault(canonicalize(current).cirquent, (app, premise, current))
            current = premise
        self.proved.setdefault(canonicalize(current).cirquent, (None, None, current))
        return True

    def reconstruct(self, target: Cirquent) -> Proof:
        chain: list[tuple[RuleApplication, Cirquent]] = []
        key = canonicalize(target).cirquent
        while True:
            app, premise, concrete = self.proved[key]
            if app is None:
                axiom = concrete
                break
            chain.append((app, premise))
            key = canonicalize(premise).cirquent
        steps = [Step(AxiomIntro(axiom), axiom)]
        current = axiom
        for app, premise in reversed(chain):
            for swap in exchange_steps(current, premise):
                current = apply_forward(current, swap)
                steps.append(Step(swap, current))
            current = apply_forward(current, app)
            steps.append(Step(app, current))
        for swap in exchange_steps(current, target):
            current = apply_forward(current, swap)
            steps.append(Step(swap, current))
        return Proof(tuple(steps), target, "strict")


def prove(
    target: Cirquent,
    max_states: int = DEFAULT_MAX_STATES,
    max_seconds: float = DEFAULT_MAX_SECONDS,
    prune: bool = True,
) -> ProveOutcome:
    """Search for a CL5 proof of ``target``.

    With ``prune`` on, states that are not classical tautologies are
    refuted without expansion (every CL5 rule preserves classical
    validity) and literal-only states are decided by their dual-pair cover.
    With it off the search expands every backward child.
    """
    search = _Search(target, max_states, max_seconds, prune)
    try:
        found = search.solve(target)
    except _LimitHit as exc:
        return ResourceLimit(str(exc), search.explored)
    except RecursionError:
        return ResourceLimit("search depth exceeds the interpreter stack", search.explored)
    if not found:
        return NotProvable(search.explored)
    proof = search.reconstruct(target)
    verdict = check_proof(proof, "strict")
    assert verdict.accepted, verdict.failure
    return Provable(proof, search.explored)


@dataclass(frozen=True)
class ProofStats:
    steps: int
    max_width: int
    max_groups: int


def proof_stats(p: Proof, include_exchange: bool = False) -> ProofStats:
    """Size figures of an accepted proof; raises ValueError on a rejected one."""
    verdict = check_proof(p, "normalized")
    if not verdict.accepted:
        raise ValueError(f"proof rejected: {verdict.failure}")
    full = elaborate_proof(p, "normalized")
    results = [s.result for s in full.steps]
    counted = [s for s in full.steps if include_exchange or not isinstance(s.application, Exchange)]
    return ProofStats(
        steps=len(counted),
        max_width=max(len(c.formulas) for c in results),
        max_groups=max(len(c.groups) for c in results),
    )
