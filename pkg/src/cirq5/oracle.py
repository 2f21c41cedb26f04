"""Brute-force validity oracle for formulas, independent of the rule engine.

A formula is judged valid when some *binarization* of it is a classical
tautology: literal occurrences of one atom are grouped into classes of at
most two, and every class gets its own fresh atom (each occurrence keeps its
polarity). Each fresh atom thus occurs at most twice in the rewritten formula.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .formula import (
    Atom,
    Formula,
    NegativeLiteral,
    PositiveLiteral,
    atom_masks,
    atoms,
    literals,
    truth_mask,
)

MAX_TAUTOLOGY_ATOMS = 20


class OracleLimitError(RuntimeError):
    pass


@dataclass(frozen=True)
class Binarization:
    """Partition of literal occurrences (indexed left to right) into classes of size <= 2."""

    classes: tuple[tuple[int, ...], ...]

    def apply(self, f: Formula) -> Formula:
        fresh = {}
        for k, cls in enumerate(self.classes):
            for occ in cls:
                fresh[occ] = Atom(f"X{k}")
        counter = iter(range(len(fresh)))
        return _rename(f, fresh, counter)


def _rename(f: Formula, fresh: dict[int, Atom], counter: Iterator[int]) -> Formula:
    if isinstance(f, PositiveLiteral):
        return PositiveLiteral(fresh[next(counter)])
    if isinstance(f, NegativeLiteral):
        return NegativeLiteral(fresh[next(counter)])
    left = _rename(f.left, fresh, counter)
    right = _rename(f.right, fresh, counter)
    return type(f)(left, right)


def is_tautology(f: Formula, max_atoms: int = MAX_TAUTOLOGY_ATOMS) -> bool:
    names = atoms(f)
    if len(names) > max_atoms:
        raise OracleLimitError(f"{len(names)} atoms exceed the truth-table cap of {max_atoms}")
    masks, full = atom_masks(names)
    return truth_mask(f, masks, full) == full


def matchings(items: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All partitions of ``items`` into singletons and pairs."""
    if not items:
        yield ()
        return
    first, rest = items[0], items[1:]
    for tail in matchings(rest):
        yield ((first,),) + tail
    for k, partner in enumerate(rest):
        remaining = rest[:k] + rest[k + 1:]
        for tail in matchings(remaining):
            yield ((first, partner),) + tail


def enumerate_binarizations(f: Formula) -> Iterator[Binarization]:
    by_atom: dict[str, list[int]] = {}
    for k, lit in enumerate(literals(f)):
        by_atom.setdefault(lit.atom.name, []).append(k)
    per_atom = [list(matchings(tuple(occ))) for occ in by_atom.values()]
    for choice in product(*per_atom):
        classes = tuple(sorted(cls for part in choice for cls in part))
        yield Binarization(classes)


def oracle_valid(f: Formula) -> bool:
    return any(is_tautology(b.apply(f)) for b in enumerate_binarizations(f))
