"""Exhaustive small-formula corpus and the prover/oracle agreement sweep."""

from __future__ import annotations

import string
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

from .cirquent import from_formula
from .formula import Conjunction, Disjunction, Formula, neg, parse_formula, pos
from .oracle import oracle_valid
from .prover import NotProvable, Provable, prove


def atom_names(k: int) -> list[str]:
    if not 1 <= k <= 26:
        raise ValueError("between 1 and 26 atoms are supported")
    return list(string.ascii_uppercase[:k])


def formulas_with(names: tuple[str, ...], connectives: int) -> list[Formula]:
    return list(_formulas(names, connectives))


@lru_cache(maxsize=None)
def _formulas(names: tuple[str, ...], n: int) -> tuple[Formula, ...]:
    if n == 0:
        return tuple(lit for a in names for lit in (pos(a), neg(a)))
    out = []
    for k in range(n):
        for left in _formulas(names, k):
            for right in _formulas(names, n - 1 - k):
                out.append(Conjunction(left, right))
                out.append(Disjunction(left, right))
    return tuple(out)


def corpus(atoms: int, max_connectives: int) -> Iterator[Formula]:
    """Every NNF formula over the first ``atoms`` letters with at most ``max_connectives`` connectives."""
    names = tuple(atom_names(atoms))
    for n in range(max_connectives + 1):
        yield from _formulas(names, n)


@dataclass(frozen=True)
class SweepRow:
    formula: str
    prover: str  # "provable", "not_provable" or "limit"
    oracle: bool

    @property
    def agrees(self) -> bool:
        return (self.prover == "provable") == self.oracle and self.prover != "limit"


def judge(text: str) -> SweepRow:
    f = parse_formula(text)
    outcome = prove(from_formula(f))
    if isinstance(outcome, Provable):
        verdict = "provable"
    elif isinstance(outcome, NotProvable):
        verdict = "not_provable"
    else:
        verdict = "limit"
    return SweepRow(text, verdict, oracle_valid(f))


def sweep(atoms: int, max_connectives: int, jobs: Optional[int] = 1) -> list[SweepRow]:
    """Prover and oracle verdicts for the whole corpus, sorted by formula text."""
    texts = sorted({f.text for f in corpus(atoms, max_connectives)})
    if jobs == 1:
        rows = [judge(t) for t in texts]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(judge, texts, chunksize=64))
    return rows
