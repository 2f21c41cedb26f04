"""Regenerate the bundled Blass's-principle proof fixtures.

The Exchange block is expanded as insertion-sort swaps (formulas first,
then groups); the disjunction block fuses left to right.
"""

from pathlib import Path

from cirq5.checker import Proof, Step
from cirq5.cirquent import Cirquent
from cirq5.fileformat import save_proof
from cirq5.formula import neg, pos
from cirq5.prover import exchange_steps
from cirq5.rules import AndIntro, AxiomIntro, OrIntro, apply_forward

ROOT = Path(__file__).resolve().parent.parent

axiom = Cirquent.build(
    [neg("P"), pos("P"), neg("Q"), pos("Q"), neg("S"), pos("S"), neg("R"), pos("R")],
    [{0, 1}, {2, 3}, {4, 5}, {6, 7}],
)
sorted_row = Cirquent.build(
    [neg("P"), neg("Q"), neg("R"), neg("S"), pos("P"), pos("R"), pos("Q"), pos("S")],
    [{0, 4}, {1, 6}, {2, 5}, {3, 7}],
)

apps = [AxiomIntro(axiom)]
apps += exchange_steps(axiom, sorted_row)
apps += [OrIntro(0), OrIntro(1), OrIntro(2), OrIntro(3)]
apps += [AndIntro(2, ((0, 1), (2, 3))), AndIntro(0, ((0, 1),)), OrIntro(0)]

steps = []
current = None
for app in apps:
    current = axiom if isinstance(app, AxiomIntro) else apply_forward(current, app)
    steps.append(Step(app, current))
proof = Proof(tuple(steps), current, "normalized")

for folder in (ROOT / "src" / "cirq5" / "fixtures", ROOT / "fixtures"):
    save_proof(proof, folder / "blass.proof.json")
    save_proof(proof, folder / "blass.apps.json", with_results=False)
print(current.formulas[0].text, len(steps), "steps")
