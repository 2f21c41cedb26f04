import random

import pytest
from hypothesis import given, settings

from cirq5.cirquent import (
    Cirquent,
    CirquentError,
    canonicalize,
    exchange_equivalent,
    from_formula,
    is_axiom,
    isomorphism,
    measure,
    permute,
    swap_formulas,
    swap_groups,
)
from cirq5.formula import Conjunction, neg, parse_formula, pos
from cirq5.prover import exchange_steps
from cirq5.rules import apply_forward
from gen import brute_force_equivalent, cirquent_st, random_cirquent

F, G, H = pos("F"), pos("G"), pos("H")


def C(formulas, groups):
    return Cirquent.build(formulas, groups)


class TestStructure:
    def test_from_formula(self):
        assert from_formula(F) == C([F], [{0}])
        blass = from_formula(parse_formula("((~P \\/ ~Q) /\\ (~R \\/ ~S)) \\/ ((P \\/ R) /\\ (Q \\/ S))"))
        assert len(blass.formulas) == 1 and blass.groups == (frozenset({0}),)

    @pytest.mark.parametrize(
        "formulas, groups, message",
        [
            ([F], [set()], "empty"),
            ([F, G], [{0}], "no group"),
            ([F], [{0, 3}], "missing"),
            ([], [], "no formulas"),
        ],
    )
    def test_invariants(self, formulas, groups, message):
        with pytest.raises(CirquentError, match=message):
            C(formulas, groups)


class TestCanonical:
    def test_formula_swap(self):
        a, b = pos("A"), pos("B")
        assert canonicalize(C([b, a], [{0}, {1}])) == canonicalize(C([a, b], [{0}, {1}]))

    def test_three_group_example_under_group_permutations(self):
        base = C([F, G, H, F], [{0, 1}, {1, 2}, {3}])
        forms = {canonicalize(permute(base, range(4), order)) for order in
                 [(0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)]}
        assert len(forms) == 1

    def test_symmetric_occurrences(self):
        a = pos("A")
        c = C([a, a], [{0}, {1}])
        assert canonicalize(c) == canonicalize(swap_formulas(c, 0))
        assert canonicalize(c).cirquent == c

    def test_sharing_is_not_forgotten(self):
        # same formula multiset and group sizes, different sharing pattern
        x = C([F, F, G], [{0, 2}, {1}])
        y = C([F, F, G], [{0}, {1, 2}])
        z = C([F, G, G], [{0, 1}, {2}])
        assert canonicalize(x) == canonicalize(y)
        assert canonicalize(x) != canonicalize(z)

    def test_refinement_needs_backtracking(self):
        # a 6-cycle and two triangles: same degree profile everywhere
        a = pos("A")
        hexagon = C([a] * 6, [{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}])
        triangles = C([a] * 6, [{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}])
        assert canonicalize(hexagon) != canonicalize(triangles)
        assert brute_force_equivalent(hexagon, triangles) is False

    def test_recorded_orders(self):
        c = C([G, F, H], [{2}, {0, 1}])
        cf = canonicalize(c)
        assert permute(c, cf.formula_order, cf.group_order) == cf.cirquent

    @settings(max_examples=150)
    @given(cirquent_st())
    def test_exchange_soundness(self, c):
        rng = random.Random(len(c.formulas) * 31 + len(c.groups))
        target = canonicalize(c)
        moved = c
        for _ in range(20):
            if rng.random() < 0.5 and len(moved.formulas) > 1:
                moved = swap_formulas(moved, rng.randrange(len(moved.formulas) - 1))
            elif len(moved.groups) > 1:
                moved = swap_groups(moved, rng.randrange(len(moved.groups) - 1))
            assert canonicalize(moved) == target

    @settings(max_examples=100)
    @given(cirquent_st(max_occurrences=5), cirquent_st(max_occurrences=5))
    def test_agrees_with_brute_force(self, a, b):
        assert exchange_equivalent(a, b) == brute_force_equivalent(a, b)

    @settings(max_examples=100)
    @given(cirquent_st())
    def test_exchange_completeness_replayed(self, c):
        rng = random.Random(7)
        fo = list(range(len(c.formulas)))
        go = list(range(len(c.groups)))
        rng.shuffle(fo)
        rng.shuffle(go)
        shuffled = permute(c, fo, go)
        assert isomorphism(c, shuffled) is not None
        current = c
        for swap in exchange_steps(c, shuffled):
            current = apply_forward(current, swap)
        assert current == shuffled


class TestAxiom:
    def test_two_pairs(self):
        assert is_axiom(C([neg("P"), pos("P"), neg("Q"), pos("Q")], [{0, 1}, {2, 3}]))

    def test_single_pair(self):
        assert is_axiom(C([neg("P"), pos("P")], [{0, 1}]))

    def test_unpaired_group(self):
        assert not is_axiom(C([neg("P"), pos("P"), pos("Q")], [{0, 1}, {2}]))

    def test_compound_pair_either_order(self):
        f = parse_formula("A /\\ ~B")
        g = parse_formula("~A \\/ B")
        assert is_axiom(C([f, g], [{0, 1}]))
        assert is_axiom(C([g, f], [{0, 1}]))

    def test_shared_occurrence_is_not_axiom(self):
        assert not is_axiom(C([neg("P"), pos("P"), neg("P")], [{0, 1}, {1, 2}]))

    def test_not_dual(self):
        assert not is_axiom(C([pos("P"), pos("P")], [{0, 1}]))

    @given(cirquent_st())
    def test_exchange_invariant(self, c):
        if len(c.formulas) > 1:
            assert is_axiom(c) == is_axiom(swap_formulas(c, 0))
        assert is_axiom(c) == is_axiom(canonicalize(c).cirquent)


class TestMeasure:
    def test_examples(self):
        assert measure(from_formula(parse_formula("~P \\/ P"))) == (1, 2)
        assert measure(C([neg("P"), pos("P")], [{0, 1}])) == (0, 3)
        # F/\H, G, F; arcs {0,1},{1,2}: one connective, 4 arcs + 2 groups
        assert measure(C([Conjunction(F, H), G, F], [{0, 1}, {1, 2}])) == (1, 6)

    @given(cirquent_st())
    def test_exchange_invariant(self, c):
        assert measure(c) == measure(canonicalize(c).cirquent)
