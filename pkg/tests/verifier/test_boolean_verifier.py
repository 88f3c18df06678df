# This file is part of the Neural Network Rule Verifier (nnrules).
#
# Copyright (C) 2026 The nnrules developers.
#
# nnrules is released under the Revised BSD License. See file LICENSE for
# full license details.

"""Unit tests for verifying rules of Boolean networks by enumeration."""

import pytest

from nnrules.arith.vector import QMatrix, QVector
from nnrules.error import UnsupportedError
from nnrules.network.boolean import BoolAnd, BoolNot, BoolOr, BoolVar, compile_boolean_formula
from nnrules.network.gadget import identity_network
from nnrules.rules.base import (
    MofNRule, MonotonicityRule, PropositionalRule, TotalMonotonicityRule
)
from nnrules.rules.formula import Relation, atom
from nnrules.verifier.base import Fails, verify_rule
from nnrules.verifier.boolean import boolean_inputs, verify_boolean


OR = compile_boolean_formula(BoolOr([BoolVar(1), BoolVar(2)]))
NOT = compile_boolean_formula(BoolNot(BoolVar(1)))


def test_boolean_inputs():
    assert boolean_inputs(2) == [
        QVector([0, 0]), QVector([0, 1]), QVector([1, 0]), QVector([1, 1])
    ]


def test_conditional_rules():
    """Test rules of the or-network over all Boolean inputs."""
    rule = PropositionalRule(atom([1, 0], '>=', 1), atom([1], '>=', 1))
    verdict = verify_rule(OR, rule)
    assert verdict.holds()
    assert verdict.stats.branches == 4
    rule = PropositionalRule(atom([1, 0], '<=', 0), atom([1], '<=', 0))
    verdict = verify_rule(OR, rule)
    assert isinstance(verdict, Fails)
    # First violation in lexicographic order.
    assert verdict.counterexample.x == QVector([0, 1])
    assert verdict.certificate is None
    parts = [atom([1, 0], '>=', 1), atom([0, 1], '>=', 1)]
    rule = MofNRule(parts, Relation.EQ, 1, atom([1], '=', 1))
    assert verify_rule(OR, rule).holds()
    rule = MofNRule(parts, Relation.LE, 1, atom([1], '=', 1))
    assert verify_rule(OR, rule).counterexample.x == QVector([0, 0])


def test_monotonicity_rules():
    """The or-network is monotone and the not-network is not."""
    assert verify_rule(OR, MonotonicityRule(QMatrix.identity(2), 1)).holds()
    assert verify_rule(OR, TotalMonotonicityRule(QMatrix.identity(2), 1)).holds()
    verdict = verify_rule(NOT, MonotonicityRule(QMatrix.identity(1), 1))
    assert verdict.counterexample.x == QVector([0])
    assert verdict.counterexample.y == QVector([1])
    verdict = verify_rule(NOT, TotalMonotonicityRule(QMatrix.identity(1), 1))
    assert not verdict.holds()
    # Equal inputs never violate.
    rule = MonotonicityRule(QMatrix.from_rows([[1], [-1]]), 1)
    assert verify_rule(NOT, rule).holds()


def test_formula_network_monotonicity():
    """x_1 and not x_2 is monotone in x_1 but not in x_2."""
    net = compile_boolean_formula(BoolAnd([BoolVar(1), BoolNot(BoolVar(2))]))
    increase_first = QMatrix.from_rows([[1, 0], [0, 1], [0, -1]])
    increase_second = QMatrix.from_rows([[0, 1], [1, 0], [-1, 0]])
    assert verify_rule(net, MonotonicityRule(increase_first, 1)).holds()
    verdict = verify_rule(net, MonotonicityRule(increase_second, 1))
    assert verdict.counterexample.x == QVector([1, 0])
    assert verdict.counterexample.y == QVector([1, 1])


def test_enumeration_bound():
    """Networks with too many inputs are refused."""
    rule = PropositionalRule(atom([1, 0], '>=', 1), atom([1], '>=', 1))
    with pytest.raises(UnsupportedError):
        verify_rule(OR, rule, bool_bound=1)
    with pytest.raises(UnsupportedError):
        verify_boolean(identity_network(1), rule)
