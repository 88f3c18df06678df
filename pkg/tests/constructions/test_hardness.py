# This file is part of the Neural Network Rule Verifier (nnrules).
#
# Copyright (C) 2026 The nnrules developers.
#
# nnrules is released under the Revised BSD License. See file LICENSE for
# full license details.

"""Unit tests for the generators of hardness instances."""

from fractions import Fraction
from itertools import product

import os

import pytest

from nnrules.arith.vector import QVector
from nnrules.constructions.cnf import CNFFormula, brute_force_sat, random_cnf
from nnrules.constructions.hardness import (
    BOOL_MONOTONICITY, BOOL_PROPOSITIONAL, CONSISTENCY, EXHAUSTIVENESS, SAT,
    TriviallyTrue, boolean_condition, generate_boolean_monotonicity_instance,
    generate_boolean_propositional_instance, generate_consistency_instance,
    generate_exhaustiveness_instance, generate_sat_instance, literal_position,
    rule_set_instance, verification_truth
)
from nnrules.constructions.instance import (
    CONSISTENT, CONTRADICTORY, DEFECTIVE, EXHAUSTIVE, FAILS, HOLDS
)
from nnrules.network.boolean import BoolAnd, BoolNot, BoolOr, BoolVar
from nnrules.rules.formula import eval_formula
from nnrules.verifier.base import verify_rule, verify_ruleset


# (x1 | x2 | ~x3) with satisfying assignments.
SATISFIABLE = CNFFormula(3, [[(1, True), (2, True), (3, False)]])
# (x1) & (~x1)
UNSATISFIABLE = CNFFormula(1, [[(1, True)], [(1, False)]])
# (x1 | x2) & (~x1 | x2) & (x1 | ~x2) & (~x1 | ~x2)
UNSATISFIABLE_2 = CNFFormula(2, [
    [(1, True), (2, True)], [(1, False), (2, True)],
    [(1, True), (2, False)], [(1, False), (2, False)]
])


def cube_grid(n, steps=4):
    return product([Fraction(k, steps) for k in range(steps + 1)], repeat=n)


def test_sat_network_on_vertices():
    """The network is one exactly on the satisfying vertices of the cube."""
    instance = generate_sat_instance(SATISFIABLE, with_truth=True)
    assert instance.kind == SAT
    assert instance.ground_truth == FAILS
    assert instance.properties == {'variables': 3, 'clauses': 1}
    net, rule = instance.net, instance.rules[0]
    assert net.input_dim == 3 and net.output_dim == 1
    assert [layer.out_dim for layer in net.layers] == [12, 6, 2, 1, 1]
    for x in product([0, 1], repeat=3):
        expected = 1 if SATISFIABLE.evaluate(x) else 0
        assert net.evaluate(list(x)) == QVector([expected])
        assert rule.violated_by(net, list(x)) == SATISFIABLE.evaluate(x)


@pytest.mark.parametrize('formula', [UNSATISFIABLE, UNSATISFIABLE_2])
def test_sat_network_bounds(formula):
    """For unsatisfiable formulas the network stays below one on the cube."""
    instance = generate_sat_instance(formula, with_truth=True)
    assert instance.ground_truth == HOLDS
    net, rule = instance.net, instance.rules[0]
    for x in cube_grid(formula.num_vars):
        out = net.evaluate(list(x))[0]
        assert 0 <= out < 1
        assert not rule.violated_by(net, list(x))
    # The centre of the cube makes all literals zero.
    centre = [Fraction(1, 2)] * formula.num_vars
    assert net.evaluate(centre) == QVector([0])


def test_sat_instance_errors():
    with pytest.raises(ValueError):
        generate_sat_instance(CNFFormula(2, []))
    assert literal_position((1, True)) == 0
    assert literal_position((2, False)) == 3


# Small formulas that are checked on every run. Setting NNRULES_SAT_CORPUS
# adds all random 3-CNF formulas of the larger corpus.
SAT_CORPUS = [
    UNSATISFIABLE,
    CNFFormula(2, [[(1, True), (2, True)], [(1, False), (2, False)]]),
    SATISFIABLE
] + [random_cnf(2, 3, seed=s) for s in range(2)]
LARGE_SAT_CORPUS = [
    random_cnf(n, q, seed=s) for n in range(3, 7) for q in (n, 2 * n) for s in range(3)
]


def round_to_vertex(x):
    return tuple(1 if v > Fraction(1, 2) else 0 for v in x)


def assert_sat_verdict(formula):
    instance = generate_sat_instance(formula)
    verdict = verify_rule(instance.net, instance.rules[0], threads=1)
    assert verdict.holds() == (brute_force_sat(formula) is None)
    if not verdict.holds():
        # Rounding a violating input to the nearest vertex satisfies the
        # formula.
        assert formula.evaluate(round_to_vertex(verdict.counterexample.x))


@pytest.mark.parametrize('formula', SAT_CORPUS)
def test_sat_instances_match_brute_force(formula):
    """The rule holds if and only if the formula is unsatisfiable."""
    assert_sat_verdict(formula)


@pytest.mark.skipif(
    not os.environ.get('NNRULES_SAT_CORPUS'), reason='large corpus not requested'
)
@pytest.mark.parametrize('formula', LARGE_SAT_CORPUS)
def test_sat_instances_match_brute_force_large(formula):
    assert_sat_verdict(formula)


def test_boolean_monotonicity_instances():
    """The monotonicity rule fails if and only if the formula is
    satisfiable.
    """
    formula = BoolAnd([BoolVar(1), BoolNot(BoolVar(2))])
    instance = generate_boolean_monotonicity_instance(formula, with_truth=True)
    assert instance.kind == BOOL_MONOTONICITY
    assert instance.ground_truth == FAILS
    assert not verify_rule(instance.net, instance.rules[0]).holds()
    instance = generate_boolean_monotonicity_instance(UNSATISFIABLE, with_truth=True)
    assert instance.ground_truth == HOLDS
    assert verify_rule(instance.net, instance.rules[0]).holds()
    result = generate_boolean_monotonicity_instance(BoolOr([BoolVar(1), BoolVar(2)]))
    assert isinstance(result, TriviallyTrue)
    assert generate_boolean_monotonicity_instance(SATISFIABLE) == TriviallyTrue(
        reason='formula holds for (1, ..., 1)'
    )


@pytest.mark.parametrize(
    'formula,truth',
    [(SATISFIABLE, FAILS), (UNSATISFIABLE, HOLDS), (UNSATISFIABLE_2, HOLDS)]
)
def test_boolean_propositional_instances(formula, truth):
    instance = generate_boolean_propositional_instance(formula, with_truth=True)
    assert instance.kind == BOOL_PROPOSITIONAL
    assert instance.ground_truth == truth
    assert instance.net.boolean
    verdict = verify_rule(instance.net, instance.rules[0])
    assert verdict.holds() == (truth == HOLDS)
    if not verdict.holds():
        assert formula.evaluate(verdict.counterexample.x)


def test_boolean_condition():
    """The condition agrees with the formula on Boolean points."""
    formula = BoolOr([BoolAnd([BoolVar(1), BoolNot(BoolVar(2))]), BoolNot(BoolOr([BoolVar(3)]))])
    cond = boolean_condition(formula, 3)
    for x in product([0, 1], repeat=3):
        assert eval_formula(cond, QVector(x)) == formula.evaluate(x)
    assert verification_truth(formula, 3) == FAILS


@pytest.mark.parametrize(
    'formula,truth',
    [(SATISFIABLE, CONTRADICTORY), (UNSATISFIABLE_2, CONSISTENT)]
)
def test_consistency_instances(formula, truth):
    """The zero network obeys the rules if and only if they are
    consistent.
    """
    rules = generate_consistency_instance(formula)
    assert len(rules) == 3
    instance = rule_set_instance(formula, CONSISTENCY, with_truth=True)
    assert instance.ground_truth == truth
    verdicts = verify_ruleset(instance.net, instance.rules)
    assert all(v.holds() for v in verdicts) == (truth == CONSISTENT)
    if truth == CONTRADICTORY:
        cex = verdicts[1].counterexample.x
        assert formula.evaluate(cex)


@pytest.mark.parametrize(
    'formula,truth',
    [(SATISFIABLE, DEFECTIVE), (UNSATISFIABLE_2, EXHAUSTIVE)]
)
def test_exhaustiveness_instances(formula, truth):
    """Only the open unit boxes of satisfying vertices are unconstrained."""
    rule = generate_exhaustiveness_instance(formula)[0]
    instance = rule_set_instance(formula, EXHAUSTIVENESS, with_truth=True)
    assert instance.ground_truth == truth
    assert verify_rule(instance.net, rule).holds()
    n = formula.num_vars
    for v in product([0, 1], repeat=n):
        centre = [Fraction(2 * b + 1, 2) for b in v]
        assert eval_formula(rule.cond, centre) != formula.evaluate(v)
    assert brute_force_sat(formula) is None or truth == DEFECTIVE
    with pytest.raises(ValueError):
        rule_set_instance(formula, SAT)
