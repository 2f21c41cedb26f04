"""The six CL5 rules: forward application and backward enumeration."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .cirquent import Cirquent, CirquentError, is_axiom, swap_formulas, swap_groups
from .formula import Conjunction, Disjunction, Formula


class RuleError(ValueError):
    """A rule application does not fit its premise.

    ``code`` is one of MALFORMED (bad shape or out-of-range index),
    ADJACENCY, AND_SHAPE, ARC_EXISTS, NOT_AXIOM, INVALID_CIRQUENT.
    """

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


@dataclass(frozen=True)
class AxiomIntro:
    cirquent: Cirquent


@dataclass(frozen=True)
class Exchange:
    kind: str  # "formula" or "group"
    position: int


@dataclass(frozen=True)
class Weakening:
    arc: tuple[int, int]  # (group, formula position in the conclusion)
    new_formula: Optional[tuple[int, Formula]] = None


@dataclass(frozen=True)
class Duplication:
    group: int


@dataclass(frozen=True)
class OrIntro:
    position: int


@dataclass(frozen=True)
class AndIntro:
    position: int
    merges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "merges", tuple(tuple(p) for p in self.merges))


RuleApplication = Union[AxiomIntro, Exchange, Weakening, Duplication, OrIntro, AndIntro]


def _check_index(value, bound: int, what: str) -> None:
    if not isinstance(value, int) or isinstance(value, bool) or not 0 <= value < bound:
        raise RuleError("MALFORMED", f"{what} {value!r} out of range (0..{bound - 1})")


def _make(formulas, groups) -> Cirquent:
    try:
        return Cirquent(tuple(formulas), tuple(groups))
    except CirquentError as exc:
        raise RuleError("INVALID_CIRQUENT", str(exc)) from None


def apply_axiom(r: AxiomIntro) -> Cirquent:
    if not is_axiom(r.cirquent):
        raise RuleError("NOT_AXIOM", "cirquent is not an array of (~F, F) groups")
    return r.cirquent


def apply_forward(premise: Cirquent, r: RuleApplication) -> Cirquent:
    """Conclusion of ``r`` applied to ``premise``; raises RuleError if ``r`` does not fit."""
    if isinstance(r, Exchange):
        return _exchange(premise, r)
    if isinstance(r, Weakening):
        return _weakening(premise, r)
    if isinstance(r, Duplication):
        _check_index(r.group, len(premise.groups), "group")
        gs = list(premise.groups)
        gs.insert(r.group + 1, gs[r.group])
        return _make(premise.formulas, gs)
    if isinstance(r, OrIntro):
        return _or_intro(premise, r)
    if isinstance(r, AndIntro):
        return _and_intro(premise, r)
    if isinstance(r, AxiomIntro):
        raise RuleError("MALFORMED", "axioms take no premise")
    raise RuleError("MALFORMED", f"unknown rule application {r!r}")


def _exchange(c: Cirquent, r: Exchange) -> Cirquent:
    if r.kind == "formula":
        _check_index(r.position, len(c.formulas) - 1, "formula exchange position")
        return swap_formulas(c, r.position)
    if r.kind == "group":
        _check_index(r.position, len(c.groups) - 1, "group exchange position")
        return swap_groups(c, r.position)
    raise RuleError("MALFORMED", f"unknown exchange kind {r.kind!r}")


def _weakening(c: Cirquent, r: Weakening) -> Cirquent:
    if not (isinstance(r.arc, tuple) and len(r.arc) == 2):
        raise RuleError("MALFORMED", "weakening arc must be a (group, formula) pair")
    group, target = r.arc
    _check_index(group, len(c.groups), "group")
    formulas = list(c.formulas)
    groups = list(c.groups)
    if r.new_formula is not None:
        at, f = r.new_formula
        _check_index(at, len(formulas) + 1, "insert position")
        if target != at:
            raise RuleError("ADJACENCY", "the new arc must point to the inserted formula")
        formulas.insert(at, f)
        groups = [frozenset(i + 1 if i >= at else i for i in g) for g in groups]
    else:
        _check_index(target, len(formulas), "formula")
    if target in groups[group]:
        raise RuleError("ARC_EXISTS", f"group {group} already contains formula {target}")
    groups[group] = groups[group] | {target}
    return _make(formulas, groups)


def _or_intro(c: Cirquent, r: OrIntro) -> Cirquent:
    k = r.position
    _check_index(k, len(c.formulas) - 1, "disjunction position")
    fused = Disjunction(c.formulas[k], c.formulas[k + 1])
    formulas = c.formulas[:k] + (fused,) + c.formulas[k + 2:]
    groups = [frozenset(i if i <= k else i - 1 for i in g) for g in c.groups]
    return _make(formulas, groups)


def _and_intro(c: Cirquent, r: AndIntro) -> Cirquent:
    k = r.position
    _check_index(k, len(c.formulas) - 1, "conjunction position")
    left_f, right_f = k, k + 1
    paired: dict[int, int] = {}
    for pair in r.merges:
        if len(pair) != 2:
            raise RuleError("MALFORMED", f"merge {pair!r} is not a pair")
        for j in pair:
            _check_index(j, len(c.groups), "group")
            if j in paired:
                raise RuleError("AND_SHAPE", f"group {j} listed in two merges")
        lg, rg = pair
        paired[lg] = rg
        paired[rg] = lg
        a, b = c.groups[lg], c.groups[rg]
        if not (left_f in a and right_f not in a):
            raise RuleError("AND_SHAPE", f"group {lg} must contain formula {left_f} and not {right_f}")
        if not (right_f in b and left_f not in b):
            raise RuleError("AND_SHAPE", f"group {rg} must contain formula {right_f} and not {left_f}")
        if a - {left_f} != b - {right_f}:
            raise RuleError("AND_SHAPE", f"groups {lg} and {rg} differ outside the conjuncts")
        if rg != lg + 1:
            raise RuleError("ADJACENCY", f"merged groups {lg} and {rg} are not adjacent")
    for j, g in enumerate(c.groups):
        if (left_f in g or right_f in g) and j not in paired:
            raise RuleError("AND_SHAPE", f"group {j} contains a conjunct but is not merged")
    fused = Conjunction(c.formulas[left_f], c.formulas[right_f])
    formulas = c.formulas[:k] + (fused,) + c.formulas[k + 2:]
    groups = []
    for j, g in enumerate(c.groups):
        if j in paired and paired[j] < j:
            continue
        groups.append(frozenset(i if i <= k else i - 1 for i in g))
    return _make(formulas, groups)


# ---------------------------------------------------------------- backward


def enumerate_backward(c: Cirquent) -> list[tuple[RuleApplication, Cirquent]]:
    """Every one-step premise of ``c`` modulo Exchange.

    Connective-splitting rules come first, then Weakening, then Duplication.
    Exchange is never produced.
    """
    out: list[tuple[RuleApplication, Cirquent]] = []
    for k, f in enumerate(c.formulas):
        if isinstance(f, Disjunction):
            out.append(_split(c, k, f, conjunctive=False))
    for k, f in enumerate(c.formulas):
        if isinstance(f, Conjunction):
            out.append(_split(c, k, f, conjunctive=True))
    for j, g in enumerate(c.groups):
        if len(g) < 2:
            continue
        for i in sorted(g):
            shrunk = g - {i}
            if any(i in h for jj, h in enumerate(c.groups) if jj != j):
                gs = list(c.groups)
                gs[j] = shrunk
                out.append((Weakening(arc=(j, i)), Cirquent(c.formulas, tuple(gs))))
            else:
                formulas = c.formulas[:i] + c.formulas[i + 1:]
                gs = [
                    frozenset(x if x < i else x - 1 for x in (shrunk if jj == j else h))
                    for jj, h in enumerate(c.groups)
                ]
                out.append(
                    (Weakening(arc=(j, i), new_formula=(i, c.formulas[i])), Cirquent(formulas, tuple(gs)))
                )
    seen_pairs = set()
    for j, g in enumerate(c.groups):
        for jj in range(j + 1, len(c.groups)):
            if c.groups[jj] == g and g not in seen_pairs:
                seen_pairs.add(g)
                gs = c.groups[:jj] + c.groups[jj + 1:]
                out.append((Duplication(group=j), Cirquent(c.formulas, gs)))
    return out


def _split(c: Cirquent, k: int, f: Formula, conjunctive: bool) -> tuple[RuleApplication, Cirquent]:
    formulas = c.formulas[:k] + (f.left, f.right) + c.formulas[k + 1:]

    def shift(g):
        return frozenset(i if i < k else i + 1 for i in g if i != k)

    groups = []
    merges = []
    for g in c.groups:
        if k not in g:
            groups.append(shift(g))
        elif conjunctive:
            merges.append((len(groups), len(groups) + 1))
            groups.append(shift(g) | {k})
            groups.append(shift(g) | {k + 1})
        else:
            groups.append(shift(g) | {k, k + 1})
    premise = Cirquent(formulas, tuple(groups))
    if conjunctive:
        return AndIntro(position=k, merges=tuple(merges)), premise
    return OrIntro(position=k), premise
