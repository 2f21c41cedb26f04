"""JSON encoding of cirquents, rule applications and proofs (format_version 1)."""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path
from typing import Any, Union

from .checker import Proof, Step
from .cirquent import Cirquent, CirquentError
from .formula import FormulaSyntaxError, parse_formula
from .rules import (
    AndIntro,
    AxiomIntro,
    Duplication,
    Exchange,
    OrIntro,
    RuleApplication,
    Weakening,
)

FORMAT_VERSION = 1


class FormatError(ValueError):
    """Input file does not follow the expected JSON layout."""


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise FormatError(message)


def _int(value: Any, what: str) -> int:
    _require(isinstance(value, int) and not isinstance(value, bool), f"{what} must be an integer")
    return value


def _version(data: dict) -> None:
    version = data.get("format_version", FORMAT_VERSION)
    _require(version == FORMAT_VERSION, f"unsupported format_version {version!r}")


# ---------------------------------------------------------------- cirquents


def cirquent_to_json(c: Cirquent) -> dict:
    return {
        "formulas": [f.text for f in c.formulas],
        "groups": [sorted(g) for g in c.groups],
    }


def cirquent_from_json(data: Any) -> Cirquent:
    _require(isinstance(data, dict), "cirquent must be a JSON object")
    _version(data)
    formulas = data.get("formulas")
    groups = data.get("groups")
    _require(isinstance(formulas, list), "cirquent needs a 'formulas' array")
    _require(isinstance(groups, list), "cirquent needs a 'groups' array")
    parsed = []
    for text in formulas:
        _require(isinstance(text, str), "formulas must be strings")
        try:
            parsed.append(parse_formula(text))
        except FormulaSyntaxError as exc:
            raise FormatError(f"bad formula {text!r}: {exc}") from None
    sets = []
    for g in groups:
        _require(isinstance(g, list), "each group must be an array of indices")
        members = [_int(i, "group member") for i in g]
        _require(len(set(members)) == len(members), "a group lists the same formula twice")
        sets.append(frozenset(members))
    try:
        return Cirquent(tuple(parsed), tuple(sets))
    except CirquentError as exc:
        raise FormatError(str(exc)) from None


# ---------------------------------------------------------------- rules


def rule_to_json(r: RuleApplication) -> dict:
    if isinstance(r, AxiomIntro):
        return {"rule": "axiom", "cirquent": cirquent_to_json(r.cirquent)}
    if isinstance(r, Exchange):
        return {"rule": "exchange", "kind": r.kind, "position": r.position}
    if isinstance(r, Weakening):
        out: dict = {"rule": "weakening", "arc": list(r.arc)}
        if r.new_formula is not None:
            out["new_formula"] = {"position": r.new_formula[0], "formula": r.new_formula[1].text}
        return out
    if isinstance(r, Duplication):
        return {"rule": "duplication", "group": r.group}
    if isinstance(r, OrIntro):
        return {"rule": "or_intro", "position": r.position}
    if isinstance(r, AndIntro):
        return {"rule": "and_intro", "position": r.position, "merges": [list(p) for p in r.merges]}
    raise TypeError(f"not a rule application: {r!r}")


def rule_from_json(data: Any) -> RuleApplication:
    _require(isinstance(data, dict), "rule application must be a JSON object")
    rule = data.get("rule")
    if rule == "axiom":
        return AxiomIntro(cirquent_from_json(data.get("cirquent")))
    if rule == "exchange":
        kind = data.get("kind")
        _require(kind in ("formula", "group"), "exchange kind must be 'formula' or 'group'")
        return Exchange(kind, _int(data.get("position"), "position"))
    if rule == "weakening":
        arc = data.get("arc")
        _require(isinstance(arc, list) and len(arc) == 2, "weakening needs an 'arc' pair")
        arc_t = (_int(arc[0], "arc group"), _int(arc[1], "arc formula"))
        new = data.get("new_formula")
        if new is None:
            return Weakening(arc_t)
        _require(isinstance(new, dict), "new_formula must be an object")
        text = new.get("formula")
        _require(isinstance(text, str), "new_formula needs a 'formula' string")
        try:
            f = parse_formula(text)
        except FormulaSyntaxError as exc:
            raise FormatError(f"bad formula {text!r}: {exc}") from None
        return Weakening(arc_t, (_int(new.get("position"), "new_formula position"), f))
    if rule == "duplication":
        return Duplication(_int(data.get("group"), "group"))
    if rule == "or_intro":
        return OrIntro(_int(data.get("position"), "position"))
    if rule == "and_intro":
        merges = data.get("merges")
        _require(isinstance(merges, list), "and_intro needs a 'merges' array")
        pairs = []
        for m in merges:
            _require(isinstance(m, list) and len(m) == 2, "each merge must be a pair")
            pairs.append((_int(m[0], "merge group"), _int(m[1], "merge group")))
        return AndIntro(_int(data.get("position"), "position"), tuple(pairs))
    raise FormatError(f"unknown rule {rule!r}")


# ---------------------------------------------------------------- proofs


def proof_to_json(p: Proof, with_results: bool = True) -> dict:
    steps = []
    for s in p.steps:
        entry = rule_to_json(s.application)
        if with_results and s.result is not None:
            entry["result"] = cirquent_to_json(s.result)
        steps.append(entry)
    return {
        "format_version": FORMAT_VERSION,
        "mode": p.mode,
        "conclusion": cirquent_to_json(p.conclusion),
        "steps": steps,
    }


def proof_from_json(data: Any) -> Proof:
    _require(isinstance(data, dict), "proof must be a JSON object")
    _version(data)
    steps = data.get("steps")
    _require(isinstance(steps, list), "proof needs a 'steps' array")
    mode = data.get("mode", "strict")
    _require(mode in ("strict", "normalized"), f"unknown mode {mode!r}")
    parsed = []
    for entry in steps:
        app = rule_from_json(entry)
        result = entry.get("result")
        parsed.append(Step(app, None if result is None else cirquent_from_json(result)))
    return Proof(tuple(parsed), cirquent_from_json(data.get("conclusion")), mode)


# ---------------------------------------------------------------- files


def read_json(path: Union[str, Path]) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc})") from None


def dumps(data: Any) -> str:
    """Indented JSON with arrays of scalars (and arrays of those) kept on one line."""
    return _dump(data, 0) + "\n"


def _flat(value: Any) -> bool:
    if isinstance(value, list):
        return all(not isinstance(v, (dict, list)) or (isinstance(v, list) and _flat(v)) for v in value)
    return not isinstance(value, dict)


def _dump(value: Any, indent: int) -> str:
    if _flat(value):
        return json.dumps(value, ensure_ascii=False)
    pad = "  " * (indent + 1)
    if isinstance(value, dict):
        items = [f"{pad}{json.dumps(k)}: {_dump(v, indent + 1)}" for k, v in value.items()]
        return "{\n" + ",\n".join(items) + "\n" + "  " * indent + "}"
    items = [pad + _dump(v, indent + 1) for v in value]
    return "[\n" + ",\n".join(items) + "\n" + "  " * indent + "]"


def save_cirquent(c: Cirquent, path: Union[str, Path]) -> None:
    data = {"format_version": FORMAT_VERSION, **cirquent_to_json(c)}
    Path(path).write_text(dumps(data), encoding="utf-8")


def load_cirquent(path: Union[str, Path]) -> Cirquent:
    return cirquent_from_json(read_json(path))


def save_proof(p: Proof, path: Union[str, Path], with_results: bool = True) -> None:
    Path(path).write_text(dumps(proof_to_json(p, with_results)), encoding="utf-8")


def load_proof(path: Union[str, Path]) -> Proof:
    return proof_from_json(read_json(path))


def load_fixture(name: str) -> Proof:
    """A proof bundled with the package, e.g. ``"blass.proof.json"``."""
    text = resources.files("cirq5").joinpath("fixtures", name).read_text(encoding="utf-8")
    return proof_from_json(json.loads(text))


def is_proof_document(data: Any) -> bool:
    return isinstance(data, dict) and "steps" in data
