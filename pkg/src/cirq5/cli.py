"""Command-line interface: parse, prove, check, validate, render, corpus.

Exit codes: 0 success / positive verdict, 1 negative verdict, 2 bad input,
3 resource limit (prove only).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from .checker import check_proof, elaborate_proof, ProofError
from .cirquent import Cirquent, from_formula
from .corpus import sweep
from .fileformat import (
    FormatError,
    cirquent_from_json,
    is_proof_document,
    proof_from_json,
    read_json,
    save_proof,
)
from .formula import FormulaSyntaxError, parse_formula
from .oracle import OracleLimitError, oracle_valid
from .prover import DEFAULT_MAX_SECONDS, DEFAULT_MAX_STATES, NotProvable, Provable, prove
from .render import RenderSpec, render, render_proof

EXIT_OK, EXIT_NO, EXIT_BAD, EXIT_LIMIT = 0, 1, 2, 3


class BadInput(Exception):
    pass


def _error(message: str) -> None:
    if os.environ.get("CIRQ5_COLOR") == "1":
        message = f"\033[31m{message}\033[0m"
    print(message, file=sys.stderr)


def _emit(data: dict) -> None:
    print(json.dumps(data, ensure_ascii=False))


def _formula(text: str):
    try:
        return parse_formula(text)
    except (FormulaSyntaxError, ValueError) as exc:
        raise BadInput(f"cannot parse formula: {exc}") from None


def _load_json(path: str):
    try:
        return read_json(path)
    except OSError as exc:
        raise BadInput(f"cannot read {path}: {exc}") from None
    except FormatError as exc:
        raise BadInput(str(exc)) from None


def _target(arg: str) -> Cirquent:
    if Path(arg).is_file():
        try:
            return cirquent_from_json(_load_json(arg))
        except FormatError as exc:
            raise BadInput(f"{arg}: {exc}") from None
    return from_formula(_formula(arg))


def cmd_parse(args) -> int:
    print(_formula(args.formula).text)
    return EXIT_OK


def cmd_prove(args) -> int:
    target = _target(args.target)
    outcome = prove(target, max_states=args.max_states, max_seconds=args.max_seconds)
    if isinstance(outcome, Provable):
        if args.emit_proof:
            save_proof(outcome.proof, args.emit_proof)
        _emit({"verdict": "provable", "states_explored": outcome.states_explored,
               "steps": len(outcome.proof.steps)})
        return EXIT_OK
    if isinstance(outcome, NotProvable):
        _emit({"verdict": "not_provable", "states_explored": outcome.states_explored})
        return EXIT_NO
    _error(f"resource limit: {outcome.reason}")
    _emit({"verdict": "resource_limit", "reason": outcome.reason,
           "states_explored": outcome.states_explored})
    return EXIT_LIMIT


def cmd_check(args) -> int:
    try:
        proof = proof_from_json(_load_json(args.proof))
    except FormatError as exc:
        raise BadInput(f"{args.proof}: {exc}") from None
    mode = args.mode or proof.mode
    verdict = check_proof(proof, mode)
    if verdict.failure is not None and verdict.failure.code == "MALFORMED":
        _error(f"malformed proof: {verdict.failure.message}")
        _emit({"accepted": False, "step": verdict.failure.step, "reason": "MALFORMED"})
        return EXIT_BAD
    if verdict.accepted:
        _emit({"accepted": True, "mode": mode, "steps": len(proof.steps)})
        return EXIT_OK
    f = verdict.failure
    _error(f"rejected at step {f.step}: {f.code}: {f.message}")
    _emit({"accepted": False, "mode": mode, "step": f.step, "reason": f.code})
    return EXIT_NO


def cmd_validate(args) -> int:
    f = _formula(args.formula)
    try:
        valid = oracle_valid(f)
    except OracleLimitError as exc:
        raise BadInput(str(exc)) from None
    _emit({"formula": f.text, "valid": valid})
    return EXIT_OK if valid else EXIT_NO


def cmd_render(args) -> int:
    data = _load_json(args.file)
    spec = RenderSpec(args.format, show_indices=not args.no_indices, label_groups=not args.no_group_labels)
    try:
        if is_proof_document(data):
            proof = proof_from_json(data)
            try:
                proof = elaborate_proof(proof, "normalized")
            except ProofError as exc:
                _error(f"warning: {exc}; rendering recorded results only")
            sys.stdout.write(render_proof(proof, spec))
        else:
            sys.stdout.write(render(cirquent_from_json(data), spec))
    except FormatError as exc:
        raise BadInput(f"{args.file}: {exc}") from None
    return EXIT_OK


def cmd_corpus(args) -> int:
    try:
        rows = sweep(args.atoms, args.max_connectives, jobs=args.jobs)
    except ValueError as exc:
        raise BadInput(str(exc)) from None
    bad = [r for r in rows if not r.agrees]
    for r in bad:
        print(f"MISMATCH {r.formula}  prover={r.prover} oracle={'valid' if r.oracle else 'invalid'}")
    _emit({"formulas": len(rows), "provable": sum(r.prover == "provable" for r in rows),
           "mismatches": len(bad)})
    return EXIT_NO if bad else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cirq5", description="CL5 cirquent calculus toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="print the canonical NNF of a formula")
    p.add_argument("formula")
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("prove", help="decide CL5 provability")
    p.add_argument("target", help="formula text or cirquent JSON file")
    p.add_argument("--max-states", type=int, default=DEFAULT_MAX_STATES)
    p.add_argument("--max-seconds", type=float, default=DEFAULT_MAX_SECONDS)
    p.add_argument("--emit-proof", metavar="FILE")
    p.set_defaults(func=cmd_prove)

    p = sub.add_parser("check", help="verify a proof file")
    p.add_argument("proof")
    p.add_argument("--mode", choices=["strict", "normalized"])
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("validate", help="brute-force validity oracle")
    p.add_argument("formula")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("render", help="draw a cirquent or proof file")
    p.add_argument("file")
    p.add_argument("--format", choices=["ascii", "dot"], default="ascii")
    p.add_argument("--no-indices", action="store_true")
    p.add_argument("--no-group-labels", action="store_true")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("corpus", help="prover/oracle agreement sweep")
    p.add_argument("--atoms", type=int, default=2)
    p.add_argument("--max-connectives", type=int, default=3)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_corpus)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_BAD
    try:
        return args.func(args)
    except BadInput as exc:
        _error(str(exc))
        return EXIT_BAD


if __name__ == "__main__":
    sys.exit(main())
