import random

import pytest

from cirq5.checker import check_proof, proof_from_applications
from cirq5.cirquent import Cirquent, from_formula, is_axiom, measure
from cirq5.fileformat import load_fixture
from cirq5.formula import neg, parse_formula, pos
from cirq5.oracle import is_tautology
from cirq5.prover import (
    NotProvable,
    Provable,
    ResourceLimit,
    dual_pair_cover,
    proof_stats,
    prove,
    structural_chain,
)
from cirq5.rules import AxiomIntro, Exchange, OrIntro
from figures import BLASS
from gen import random_cirquent, random_formula


def run(text, **kw):
    return prove(from_formula(parse_formula(text)), **kw)


class TestProve:
    def test_excluded_middle(self):
        out = run("~A \\/ A")
        assert isinstance(out, Provable)
        non_exchange = [s for s in out.proof.steps if not isinstance(s.application, Exchange)]
        assert len(non_exchange) == 2
        assert check_proof(out.proof, "strict").accepted

    @pytest.mark.parametrize(
        "text",
        [
            BLASS,
            "A \\/ B \\/ ~A",
            "((~A \\/ ~B) /\\ (~C \\/ ~D)) \\/ ((A \\/ C) /\\ (B \\/ D))",
            "((~A \\/ ~A) /\\ (~A \\/ ~A)) \\/ ((A \\/ A) /\\ (A \\/ A))",
            "(~A \\/ ~B) \\/ (A /\\ B)",
            "(A \\/ B) \\/ (A \\/ ~B)",
        ],
    )
    def test_provable(self, text):
        out = run(text)
        assert isinstance(out, Provable)
        assert check_proof(out.proof, "strict").accepted
        assert out.proof.conclusion == from_formula(parse_formula(text))

    @pytest.mark.parametrize("text", ["A", "A \\/ A", "~A \\/ (A /\\ A)", "(~A /\\ ~A) \\/ A", "A /\\ ~A"])
    def test_not_provable(self, text):
        assert isinstance(run(text), NotProvable)

    def test_prune_does_not_change_verdicts(self):
        rng = random.Random(3)
        for _ in range(60):
            f = random_formula(rng, 4, ["A", "B"])
            assert type(prove(from_formula(f))) is type(prove(from_formula(f), prune=False))

    def test_literal_decision_matches_plain_search(self):
        rng = random.Random(8)
        seen = {NotProvable: 0, Provable: 0}
        for _ in range(150):
            c = random_cirquent(rng, 6, 4, max_connectives=0)
            fast = prove(c)
            assert type(fast) is type(prove(c, prune=False)), c
            seen[type(fast)] += 1
            if isinstance(fast, Provable):
                assert check_proof(fast.proof, "strict").accepted
        assert min(seen.values()) > 5

    def test_structural_chain(self):
        c = Cirquent.build([neg("P"), pos("P"), pos("Q"), neg("Q"), pos("P")], [{0, 1, 2}, {0, 1}, {2, 3, 4}])
        cover = dual_pair_cover(c)
        assert cover == [(0, 1), (0, 1), (2, 3)]
        chain = structural_chain(c, cover)
        assert is_axiom(chain[-1][1])
        sizes = [measure(c)] + [measure(p) for _, p in chain]
        assert sizes == sorted(sizes, reverse=True) and len(set(sizes)) == len(sizes)

    def test_no_cover(self):
        # ~P shared by two groups that each need it
        c = Cirquent.build([neg("P"), pos("P"), pos("P")], [{0, 1}, {0, 2}])
        assert dual_pair_cover(c) is None

    def test_hard_refutation_is_fast(self):
        out = run("((~C /\\ A) \\/ (B /\\ B)) \\/ ((~B /\\ ~C) \\/ C)")
        assert isinstance(out, NotProvable) and out.states_explored < 10_000

    def test_cirquent_target(self):
        # two groups sharing nothing: each must be proved on its own
        c = Cirquent.build([neg("P"), pos("P"), parse_formula("~Q \\/ Q")], [{0, 1}, {2}])
        out = prove(c)
        assert isinstance(out, Provable) and out.proof.conclusion == c

    def test_shared_occurrence_target(self):
        # ~P shared by two groups can only be used once
        c = Cirquent.build([neg("P"), pos("P"), pos("P")], [{0, 1}, {0, 2}])
        assert isinstance(prove(c), NotProvable)

    def test_state_limit(self):
        out = run(BLASS, max_states=3)
        assert isinstance(out, ResourceLimit)
        assert "max_states" in out.reason

    def test_time_limit(self):
        out = run("((~A \\/ ~A) /\\ (~A \\/ ~A)) \\/ ((A \\/ A) /\\ (A \\/ A))", max_seconds=0)
        assert isinstance(out, ResourceLimit)

    def test_deterministic(self):
        first = run(BLASS)
        second = run(BLASS)
        assert first == second

    def test_sound_on_random_formulas(self):
        rng = random.Random(11)
        for _ in range(150):
            f = random_formula(rng, 5)
            out = prove(from_formula(f))
            if isinstance(out, Provable):
                assert is_tautology(f)
                assert check_proof(out.proof, "strict").accepted


class TestStats:
    def test_two_step(self):
        axiom = Cirquent.build([neg("P"), pos("P")], [{0, 1}])
        p = proof_from_applications([AxiomIntro(axiom), OrIntro(0)], from_formula(parse_formula("~P \\/ P")))
        stats = proof_stats(p)
        assert (stats.steps, stats.max_width, stats.max_groups) == (2, 2, 1)

    def test_blass_fixture(self):
        p = load_fixture("blass.proof.json")
        assert proof_stats(p).max_groups == 4
        assert proof_stats(p).steps == 8
        assert proof_stats(p, include_exchange=True).steps == len(p.steps)

    def test_single_axiom(self):
        axiom = Cirquent.build([neg("P"), pos("P")], [{0, 1}])
        assert proof_stats(proof_from_applications([AxiomIntro(axiom)], axiom)).steps == 1

    def test_rejects_unchecked(self):
        axiom = Cirquent.build([neg("P"), pos("P")], [{0, 1}])
        bad = proof_from_applications([AxiomIntro(axiom), OrIntro(3)], axiom)
        with pytest.raises(ValueError):
            proof_stats(bad)
