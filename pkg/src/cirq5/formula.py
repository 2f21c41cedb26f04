"""Negation-normal (~, /\\, \\/) formulas: syntax, parsing, printing, evaluation."""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Mapping, Union

ATOM_RE = re.compile(r"[A-Z][A-Za-z0-9_]*\Z")


class FormulaSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class MissingAtomError(KeyError):
    pass


@dataclass(frozen=True)
class Atom:
    name: str

    def __post_init__(self):
        if not isinstance(self.name, str) or not ATOM_RE.match(self.name):
            raise ValueError(f"invalid atom name {self.name!r}")

    def __str__(self) -> str:
        return self.name


class _Node:
    """Shared helpers for the four formula node types."""

    @cached_property
    def text(self) -> str:
        return print_formula(self)

    def __str__(self) -> str:
        return self.text

    # Printing is injective on NNF trees, so the cached text is a structural key.
    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        return type(self) is type(other) and self.text == other.text

    def __hash__(self) -> int:
        return hash(self.text)

    def __lt__(self, other: Formula) -> bool:
        return self.text < other.text


@dataclass(frozen=True, eq=False)
class PositiveLiteral(_Node):
    atom: Atom


@dataclass(frozen=True, eq=False)
class NegativeLiteral(_Node):
    atom: Atom


@dataclass(frozen=True, eq=False)
class Conjunction(_Node):
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True, eq=False)
class Disjunction(_Node):
    left: "Formula"
    right: "Formula"


Formula = Union[PositiveLiteral, NegativeLiteral, Conjunction, Disjunction]
Literal = (PositiveLiteral, NegativeLiteral)
Binary = (Conjunction, Disjunction)


def pos(name: str) -> PositiveLiteral:
    return PositiveLiteral(Atom(name))


def neg(name: str) -> NegativeLiteral:
    return NegativeLiteral(Atom(name))


# ---------------------------------------------------------------- parsing

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<not>~|¬)|(?P<and>/\\|∧)|(?P<or>\\/|∨)"
    r"|(?P<lpar>\()|(?P<rpar>\))|(?P<atom>[A-Za-z][A-Za-z0-9_]*))"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos_ = 0
    while True:
        while pos_ < len(text) and text[pos_].isspace():
            pos_ += 1
        if pos_ >= len(text):
            break
        m = _TOKEN_RE.match(text, pos_)
        if m is None or m.end() == pos_:
            raise FormulaSyntaxError(f"unexpected character {text[pos_]!r}", pos_)
        kind = m.lastgroup
        start = m.start(kind)
        value = m.group(kind)
        if kind == "atom" and not value[0].isupper():
            raise FormulaSyntaxError(
                f"atom {value!r} must start with an uppercase letter", start
            )
        tokens.append((kind, value, start))
        pos_ = m.end()
    tokens.append(("eof", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def take(self, kind: str) -> tuple[str, str, int]:
        tok = self.peek()
        if tok[0] != kind:
            what = "end of input" if tok[0] == "eof" else repr(tok[1])
            raise FormulaSyntaxError(f"expected {kind}, found {what}", tok[2])
        self.i += 1
        return tok

    def formula(self) -> Formula:
        left = self.conj()
        while self.peek()[0] == "or":
            self.i += 1
            left = Disjunction(left, self.conj())
        return left

    def conj(self) -> Formula:
        left = self.unary()
        while self.peek()[0] == "and":
            self.i += 1
            left = Conjunction(left, self.unary())
        return left

    def unary(self) -> Formula:
        kind, value, at = self.peek()
        if kind == "not":
            self.i += 1
            return nnf_dual(self.unary())
        if kind == "atom":
            self.i += 1
            return PositiveLiteral(Atom(value))
        if kind == "lpar":
            self.i += 1
            inner = self.formula()
            self.take("rpar")
            return inner
        what = "end of input" if kind == "eof" else repr(value)
        raise FormulaSyntaxError(f"expected a formula, found {what}", at)


def parse_formula(text: str) -> Formula:
    """Parse surface syntax into NNF.

    Negated compound formulas are pushed down to the literals by De Morgan
    rewriting; ``~~X`` collapses to ``X``.
    """
    parser = _Parser(text)
    result = parser.formula()
    parser.take("eof")
    return result


# ---------------------------------------------------------------- printing


def print_formula(f: Formula) -> str:
    if isinstance(f, PositiveLiteral):
        return f.atom.name
    if isinstance(f, NegativeLiteral):
        return "~" + f.atom.name
    op = " /\\ " if isinstance(f, Conjunction) else " \\/ "
    return _operand(f.left) + op + _operand(f.right)


def _operand(f: Formula) -> str:
    if isinstance(f, Literal):
        return print_formula(f)
    return "(" + print_formula(f) + ")"


# ---------------------------------------------------------------- structure


def nnf_dual(f: Formula) -> Formula:
    """NNF of the negation of ``f``."""
    if isinstance(f, PositiveLiteral):
        return NegativeLiteral(f.atom)
    if isinstance(f, NegativeLiteral):
        return PositiveLiteral(f.atom)
    if isinstance(f, Conjunction):
        return Disjunction(nnf_dual(f.left), nnf_dual(f.right))
    return Conjunction(nnf_dual(f.left), nnf_dual(f.right))


def connective_count(f: Formula) -> int:
    if isinstance(f, Literal):
        return 0
    return 1 + connective_count(f.left) + connective_count(f.right)


def literals(f: Formula) -> Iterator[Formula]:
    """Literal occurrences, left to right."""
    if isinstance(f, Literal):
        yield f
    else:
        yield from literals(f.left)
        yield from literals(f.right)


def literal_count(f: Formula) -> int:
    return connective_count(f) + 1


def atoms(f: Formula) -> list[str]:
    """Distinct atom names in order of first occurrence."""
    seen: dict[str, None] = {}
    for lit in literals(f):
        seen.setdefault(lit.atom.name, None)
    return list(seen)


def subformulas(f: Formula) -> Iterator[Formula]:
    yield f
    if isinstance(f, Binary):
        yield from subformulas(f.left)
        yield from subformulas(f.right)


# ---------------------------------------------------------------- semantics


def classical_eval(f: Formula, assignment: Mapping[str, bool]) -> bool:
    if isinstance(f, Literal):
        try:
            value = bool(assignment[f.atom.name])
        except KeyError:
            raise MissingAtomError(f.atom.name) from None
        return value if isinstance(f, PositiveLiteral) else not value
    if isinstance(f, Conjunction):
        return classical_eval(f.left, assignment) and classical_eval(f.right, assignment)
    return classical_eval(f.left, assignment) or classical_eval(f.right, assignment)


def atom_masks(names: list[str]) -> tuple[dict[str, int], int]:
    """Bit-parallel truth-table columns for ``names``.

    Bit ``r`` of an atom's mask is its value in row ``r`` of the table with
    ``2 ** len(names)`` rows. Returns the column map and the all-ones mask.
    """
    rows = 1 << len(names)
    full = (1 << rows) - 1
    masks = {}
    for k, name in enumerate(names):
        m = 0
        for r in range(rows):
            if (r >> k) & 1:
                m |= 1 << r
        masks[name] = m
    return masks, full


def truth_mask(f: Formula, masks: Mapping[str, int], full: int) -> int:
    """Truth table of ``f`` as a bitmask over the rows encoded in ``masks``."""
    if isinstance(f, PositiveLiteral):
        return masks[f.atom.name]
    if isinstance(f, NegativeLiteral):
        return full & ~masks[f.atom.name]
    left = truth_mask(f.left, masks, full)
    right = truth_mask(f.right, masks, full)
    return left & right if isinstance(f, Conjunction) else left | right
