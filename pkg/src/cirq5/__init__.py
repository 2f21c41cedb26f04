"""CL5 cirquent calculus: formulas, shallow cirquents, proof checking and proof search."""

from .checker import Proof, Step, Verdict, check_proof, elaborate_proof
from .cirquent import Cirquent, canonicalize, from_formula, is_axiom, measure
from .formula import nnf_dual, parse_formula, print_formula
from .oracle import oracle_valid
from .prover import NotProvable, Provable, ResourceLimit, proof_stats, prove
from .rules import apply_forward, enumerate_backward

__all__ = [
    "Cirquent",
    "NotProvable",
    "Proof",
    "Provable",
    "ResourceLimit",
    "Step",
    "Verdict",
    "apply_forward",
    "canonicalize",
    "check_proof",
    "elaborate_proof",
    "enumerate_backward",
    "from_formula",
    "is_axiom",
    "measure",
    "nnf_dual",
    "oracle_valid",
    "parse_formula",
    "print_formula",
    "proof_stats",
    "prove",
]
