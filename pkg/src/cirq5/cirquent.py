"""Shallow cirquents: formula occurrences shared between disjunctive groups.

A cirquent is a conjunction of groups; each group is a disjunction of the
formula occurrences it has arcs to. Groups are sets of occurrence indices, so
an occurrence shared by two groups is one resource seen twice, not two copies.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .formula import Formula, connective_count, nnf_dual


class CirquentError(ValueError):
    """A cirquent violates a structural invariant."""


@dataclass(frozen=True)
class Cirquent:
    formulas: tuple[Formula, ...]
    groups: tuple[frozenset[int], ...]

    def __post_init__(self):
        object.__setattr__(self, "formulas", tuple(self.formulas))
        object.__setattr__(self, "groups", tuple(frozenset(g) for g in self.groups))
        n = len(self.formulas)
        if n == 0:
            raise CirquentError("cirquent has no formulas")
        covered = set()
        for j, g in enumerate(self.groups):
            if not g:
                raise CirquentError(f"group {j} is empty")
            for i in g:
                if not isinstance(i, int) or not 0 <= i < n:
                    raise CirquentError(f"group {j} points to missing formula {i!r}")
            covered |= g
        orphans = sorted(set(range(n)) - covered)
        if orphans:
            raise CirquentError(f"formula {orphans[0]} belongs to no group")

    @classmethod
    def build(cls, formulas: Sequence[Formula], groups: Iterable[Iterable[int]]) -> Cirquent:
        return cls(tuple(formulas), tuple(frozenset(g) for g in groups))

    def containing(self, i: int) -> list[int]:
        """Indices of the groups with an arc to occurrence ``i``."""
        return [j for j, g in enumerate(self.groups) if i in g]

    @property
    def arc_count(self) -> int:
        return sum(len(g) for g in self.groups)

    def __str__(self) -> str:
        fs = ", ".join(f.text for f in self.formulas)
        gs = ", ".join("{" + ",".join(map(str, sorted(g))) + "}" for g in self.groups)
        return f"[{fs}] [{gs}]"


def from_formula(f: Formula) -> Cirquent:
    return Cirquent((f,), (frozenset({0}),))


def measure(c: Cirquent) -> tuple[int, int]:
    """(connective count, arcs + groups): decreases along every backward rule."""
    return (
        sum(connective_count(f) for f in c.formulas),
        c.arc_count + len(c.groups),
    )


def is_axiom(c: Cirquent) -> bool:
    if len(c.formulas) != 2 * len(c.groups):
        return False
    seen = set()
    for g in c.groups:
        if len(g) != 2:
            return False
        a, b = sorted(g)
        if c.formulas[b] != nnf_dual(c.formulas[a]):
            return False
        seen |= g
    return len(seen) == len(c.formulas)


def swap_formulas(c: Cirquent, k: int) -> Cirquent:
    """Exchange occurrences ``k`` and ``k + 1``; arcs follow them."""
    if not 0 <= k < len(c.formulas) - 1:
        raise IndexError(f"no adjacent formulas at position {k}")
    fs = list(c.formulas)
    fs[k], fs[k + 1] = fs[k + 1], fs[k]
    swap = {k: k + 1, k + 1: k}
    return Cirquent(tuple(fs), tuple(frozenset(swap.get(i, i) for i in g) for g in c.groups))


def swap_groups(c: Cirquent, k: int) -> Cirquent:
    if not 0 <= k < len(c.groups) - 1:
        raise IndexError(f"no adjacent groups at position {k}")
    gs = list(c.groups)
    gs[k], gs[k + 1] = gs[k + 1], gs[k]
    return Cirquent(c.formulas, tuple(gs))


def permute(c: Cirquent, formula_order: Sequence[int], group_order: Sequence[int]) -> Cirquent:
    """Cirquent whose ``k``-th formula is ``c.formulas[formula_order[k]]``, same for groups."""
    new_index = {old: new for new, old in enumerate(formula_order)}
    return Cirquent(
        tuple(c.formulas[i] for i in formula_order),
        tuple(frozenset(new_index[i] for i in c.groups[j]) for j in group_order),
    )


# ---------------------------------------------------------------- canonical form


@dataclass(frozen=True)
class CanonicalForm:
    """Canonical representative of an Exchange class.

    ``formula_order[k]`` / ``group_order[k]`` give the index in the source
    cirquent of the canonical ``k``-th formula / group. Equality and hashing
    use the canonical cirquent only.
    """

    cirquent: Cirquent
    formula_order: tuple[int, ...] = field(compare=False)
    group_order: tuple[int, ...] = field(compare=False)


def _rank(keys: list) -> list[int]:
    order = {k: r for r, k in enumerate(sorted(set(keys)))}
    return [order[k] for k in keys]


def _refine(colours: list[int], groups: tuple[frozenset[int], ...], incidence: list[list[int]]) -> list[int]:
    """Colour refinement on the occurrence/group incidence graph."""
    cells = len(set(colours))
    while True:
        gsig = [tuple(sorted(colours[i] for i in g)) for g in groups]
        colours = _rank(
            [(colours[i], tuple(sorted(gsig[j] for j in incidence[i]))) for i in range(len(colours))]
        )
        new_cells = len(set(colours))
        if new_cells == cells:
            return colours
        cells = new_cells


def canonicalize(c: Cirquent) -> CanonicalForm:
    """Exact canonical form modulo Exchange.

    Occurrences are ordered by printed formula, refined by their arc
    signature; remaining ties are broken by individualize-and-refine
    backtracking, keeping the lexicographically least group encoding.
    """
    n = len(c.formulas)
    labels = [f.text for f in c.formulas]
    incidence = [[] for _ in range(n)]
    for j, g in enumerate(c.groups):
        for i in g:
            incidence[i].append(j)

    best: list = [None, None]  # [encoding, formula_order]

    def leaf(colours: list[int]) -> None:
        order = sorted(range(n), key=colours.__getitem__)
        position = [0] * n
        for k, i in enumerate(order):
            position[i] = k
        encoding = tuple(sorted(tuple(sorted(position[i] for i in g)) for g in c.groups))
        if best[0] is None or encoding < best[0]:
            best[0] = encoding
            best[1] = order

    def search(colours: list[int]) -> None:
        colours = _refine(colours, c.groups, incidence)
        counts: dict[int, list[int]] = {}
        for i, col in enumerate(colours):
            counts.setdefault(col, []).append(i)
        target = next((members for col, members in sorted(counts.items()) if len(members) > 1), None)
        if target is None:
            leaf(colours)
            return
        for v in target:
            split = [2 * col + (1 if col == colours[v] and i != v else 0) for i, col in enumerate(colours)]
            search(split)

    search(_rank(labels))
    order = best[1]
    position = {i: k for k, i in enumerate(order)}
    keyed = sorted(
        range(len(c.groups)), key=lambda j: (tuple(sorted(position[i] for i in c.groups[j])), j)
    )
    canonical = permute(c, order, keyed)
    return CanonicalForm(canonical, tuple(order), tuple(keyed))


def exchange_equivalent(a: Cirquent, b: Cirquent) -> bool:
    return canonicalize(a) == canonicalize(b)


def isomorphism(a: Cirquent, b: Cirquent) -> tuple[list[int], list[int]] | None:
    """Orders ``(formula_order, group_order)`` with ``permute(a, ...) == b``, if any."""
    ca, cb = canonicalize(a), canonicalize(b)
    if ca != cb:
        return None
    fa = {k: i for k, i in enumerate(ca.formula_order)}
    ga = {k: j for k, j in enumerate(ca.group_order)}
    formula_order = [0] * len(b.formulas)
    for k, i in enumerate(cb.formula_order):
        formula_order[i] = fa[k]
    group_order = [0] * len(b.groups)
    for k, j in enumerate(cb.group_order):
        group_order[j] = ga[k]
    return formula_order, group_order
