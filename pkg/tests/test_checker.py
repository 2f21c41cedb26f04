from dataclasses import replace

import pytest

from cirq5.checker import Proof, ProofError, Step, check_proof, elaborate_proof, proof_from_applications
from cirq5.cirquent import Cirquent, exchange_equivalent, from_formula
from cirq5.fileformat import load_fixture
from cirq5.formula import neg, parse_formula, pos
from cirq5.rules import AndIntro, AxiomIntro, Duplication, Exchange, OrIntro
from figures import ROWS

EXCLUDED_MIDDLE_AXIOM = Cirquent.build([neg("P"), pos("P")], [{0, 1}])
EXCLUDED_MIDDLE = from_formula(parse_formula("~P \\/ P"))


@pytest.fixture(scope="module")
def blass():
    return load_fixture("blass.proof.json")


def two_step():
    return proof_from_applications([AxiomIntro(EXCLUDED_MIDDLE_AXIOM), OrIntro(0)], EXCLUDED_MIDDLE)


class TestCheck:
    def test_blass_fixture_accepted(self, blass):
        assert check_proof(blass, "normalized").accepted
        assert check_proof(blass, "strict").accepted

    def test_blass_rows_appear_in_order(self, blass):
        results = [s.result for s in blass.steps]
        cursor = 0
        for row in ROWS:
            while not exchange_equivalent(results[cursor], row):
                cursor += 1
            assert cursor < len(results)
        assert results[0] == ROWS[0]
        assert results[-1] == ROWS[-1]

    def test_two_step_proof(self):
        assert check_proof(two_step(), "strict") == check_proof(two_step(), "normalized")
        assert check_proof(two_step()).accepted

    def test_corrupted_merge_rejected(self, blass):
        steps = list(blass.steps)
        k = next(i for i, s in enumerate(steps) if isinstance(s.application, AndIntro))
        steps[k] = replace(steps[k], application=AndIntro(2, ((0, 3), (2, 1))))
        verdict = check_proof(replace(blass, steps=tuple(steps)), "normalized")
        assert not verdict.accepted
        assert verdict.failure.step == k
        assert verdict.failure.code == "AND_SHAPE"

    def test_first_step_must_be_axiom(self):
        bad = proof_from_applications([OrIntro(0)], EXCLUDED_MIDDLE)
        assert check_proof(bad).failure.code == "NOT_AXIOM"
        not_axiom = Cirquent.build([pos("P"), pos("P")], [{0, 1}])
        bad = proof_from_applications([AxiomIntro(not_axiom)], not_axiom)
        assert check_proof(bad).failure.code == "NOT_AXIOM"

    def test_empty_proof_is_malformed(self):
        verdict = check_proof(Proof((), EXCLUDED_MIDDLE))
        assert verdict.failure.code == "MALFORMED" and verdict.failure.step == 0

    def test_late_axiom_is_malformed(self):
        bad = proof_from_applications([AxiomIntro(EXCLUDED_MIDDLE_AXIOM)] * 2, EXCLUDED_MIDDLE_AXIOM)
        failure = check_proof(bad).failure
        assert (failure.step, failure.code) == (1, "MALFORMED")

    def test_wrong_conclusion(self):
        p = replace(two_step(), conclusion=from_formula(parse_formula("P \\/ ~P")))
        assert check_proof(p, "strict").failure.code == "CONCLUSION_MISMATCH"
        assert not check_proof(p, "normalized").accepted

    def test_normalized_tolerates_reordered_results(self):
        axiom = Cirquent.build([neg("P"), pos("P"), neg("Q"), pos("Q")], [{0, 1}, {2, 3}])
        swapped = Cirquent.build([neg("P"), pos("P"), neg("Q"), pos("Q")], [{2, 3}, {0, 1}])
        # the exchange really yields `swapped`; the step records the original order
        p = Proof((Step(AxiomIntro(axiom), axiom), Step(Exchange("group", 0), axiom)), swapped)
        assert check_proof(p, "normalized").accepted
        assert check_proof(p, "strict").failure.code == "RESULT_MISMATCH"

    def test_failure_iff_rejected(self, blass):
        assert check_proof(blass).failure is None
        assert check_proof(Proof((), EXCLUDED_MIDDLE)).failure is not None


class TestElaborate:
    def test_two_step(self):
        full = elaborate_proof(two_step())
        assert full.steps[-1].result == Cirquent.build([parse_formula("~P \\/ P")], [{0}])

    def test_blass_applications_only(self, blass):
        bare = load_fixture("blass.apps.json")
        assert all(s.result is None for s in bare.steps)
        assert elaborate_proof(bare) == replace(blass, mode=bare.mode)

    def test_out_of_range(self):
        bad = proof_from_applications([AxiomIntro(EXCLUDED_MIDDLE_AXIOM), Duplication(5)], EXCLUDED_MIDDLE)
        with pytest.raises(ProofError) as info:
            elaborate_proof(bad)
        assert info.value.failure.step == 1
        assert "out of range" in str(info.value)
