# This file is part of the Neural Network Rule Verifier (nnrules).
#
# Copyright (C) 2026 The nnrules developers.
#
# nnrules is released under the Revised BSD License. See file LICENSE for
# full license details.

"""Unit tests for verifying rules of all kinds on small networks."""

from fractions import Fraction
from random import Random

import os

import pytest

from nnrules.arith.vector import QMatrix, QVector
from nnrules.network.base import Activation, Layer, Network
from nnrules.network.gadget import affine_network, build_clamp_gadget, build_min_gadget
from nnrules.rules.base import (
    MOFN, MONOTONICITY, OBLIQUE, TOTAL_MONOTONICITY, MofNRule, MonotonicityRule,
    ObliqueRule, PropositionalRule, TotalMonotonicityRule
)
from nnrules.rules.formula import Relation, atom, box, interval
from nnrules.tests.sample import random_formula, random_network, random_rule
from nnrules.verifier.base import (
    Fails, Holds, minimize_witness, simpler_values, verify_rule, verify_ruleset
)
from nnrules.verifier.query import Counterexample

import nnrules.config as config


def relu_network():
    """Network with a single ReLU node y = max(0, x)."""
    return Network(
        input_dim=1,
        layers=[Layer(QMatrix.from_rows([[1]]), QVector([0]), Activation.RELU)]
    )


def assert_fails(net, rule, **kwargs):
    verdict = verify_rule(net, rule, **kwargs)
    assert isinstance(verdict, Fails)
    assert not verdict.holds()
    cex = verdict.counterexample
    assert rule.violated_by(net, cex.x, cex.y)
    return verdict


def test_clamp_gadget_rules():
    """The clamp gadget maps every input into [0, 1]."""
    net = build_clamp_gadget()
    rule = PropositionalRule(box([-5], [5]), interval(1, 0, 0, 1))
    verdict = verify_rule(net, rule)
    assert isinstance(verdict, Holds)
    assert verdict.holds()
    assert repr(verdict) == 'HOLDS'
    assert verdict.stats.lp_calls > 0
    rule = PropositionalRule(box([-5], [5]), atom([1], '<=', '1/2'))
    verdict = assert_fails(net, rule)
    assert repr(verdict) == 'FAILS'
    assert verdict.certificate is not None
    assert verdict.counterexample.x[0] > Fraction(1, 2)


def test_min_gadget_rules():
    net = build_min_gadget(2)
    cond = box([-1, -1], [1, 1])
    assert verify_rule(net, ObliqueRule(cond, atom([1], '>=', -1))).holds()
    assert verify_rule(net, ObliqueRule(cond, atom([1], '<=', 1))).holds()
    assert_fails(net, ObliqueRule(cond, atom([1], '>', -1)))
    # Oblique conditional part x_1 + x_2 <= 0 forces min(x_1, x_2) <= 0.
    rule = ObliqueRule(atom([1, 1], '<=', 0), atom([1], '<=', 0))
    assert verify_rule(net, rule).holds()


def test_classifying_network():
    """Test rules for a network that classifies x as 1 if x >= 1/2."""
    net = Network(
        input_dim=1,
        layers=[Layer(QMatrix.from_rows([[1], [-1]]), QVector([0, 1]), Activation.IDENTITY)],
        classifying=True
    )
    # Ties at x = 1/2 yield both classes.
    rule = ObliqueRule(atom([1], '>=', '1/2'), atom([1, 0], '>=', 1))
    assert verify_rule(net, rule).holds()
    rule = ObliqueRule(atom([1], '>=', 0), atom([1, 0], '>=', 1))
    verdict = assert_fails(net, rule)
    assert verdict.counterexample.x == QVector([0])
    assert verdict.certificate.argmax == (1,)
    rule = ObliqueRule(atom([1], '>', '1/2'), atom([0, 1], '=', 0))
    assert verify_rule(net, rule).holds()


def test_mofn_rules():
    net = affine_network(QMatrix.from_rows([[1, 1], [1, -1]]), QVector([0, 0]))
    parts = [atom([1, 0], '>=', 1), atom([0, 1], '>=', 1)]
    assert verify_rule(net, MofNRule(parts, Relation.GE, 2, atom([1, 0], '>=', 2))).holds()
    verdict = assert_fails(net, MofNRule(parts, Relation.GE, 2, atom([1, 0], '>=', 3)))
    assert verdict.certificate.parts == (1, 1)
    # Exactly one part: x_1 >= 1 > x_2 or x_2 >= 1 > x_1.
    verdict = assert_fails(net, MofNRule(parts, Relation.EQ, 1, atom([0, 1], '>=', 0)))
    assert verdict.counterexample.x[1] > verdict.counterexample.x[0]
    # No part can hold three times.
    assert verify_rule(net, MofNRule(parts, Relation.GE, 3, atom([1, 0], '>=', 100))).holds()


def test_monotonicity_rules():
    """Output 1 is x and output 2 is 0. Class 1 is monotone in x and class
    2 is not.
    """
    net = affine_network(QMatrix.from_rows([[1], [0]]), QVector([0, 0]))
    A = QMatrix.from_rows([[1]])
    assert verify_rule(net, MonotonicityRule(A, 1)).holds()
    verdict = assert_fails(net, MonotonicityRule(A, 2))
    assert verdict.counterexample.is_pair()
    assert verify_rule(net, MonotonicityRule(QMatrix.from_rows([[-1]]), 2)).holds()


def test_total_monotonicity_rules():
    A = QMatrix.from_rows([[1]])
    assert verify_rule(relu_network(), TotalMonotonicityRule(A, 1)).holds()
    net = affine_network(QMatrix.from_rows([[-1]]), QVector([0]))
    verdict = assert_fails(net, TotalMonotonicityRule(A, 1))
    cex = verdict.counterexample
    assert cex.x[0] <= cex.y[0]


def test_verify_ruleset():
    net = build_clamp_gadget()
    rules = [
        PropositionalRule(box([0], [1]), atom([1], '>=', 0)),
        PropositionalRule(box([0], [1]), atom([1], '<', 1))
    ]
    verdicts = verify_ruleset(net, rules)
    assert [v.holds() for v in verdicts] == [True, False]
    with pytest.raises(ValueError):
        verify_rule(net, rules[0], mode='random')


def search_corpus(rand, count, hidden, width, atoms, bound):
    """Random networks with up to the given number of hidden layers and
    nodes per layer together with random rules of all kinds that the
    search handles.
    """
    kinds = [OBLIQUE, MOFN, MONOTONICITY, TOTAL_MONOTONICITY]
    for _ in range(count):
        kind = rand.choice(kinds)
        widths = [rand.randint(1, width) for _ in range(rand.randint(1, hidden))]
        outputs = 2 if kind in (MONOTONICITY, TOTAL_MONOTONICITY) else rand.randint(1, 2)
        net = random_network(rand, rand.randint(1, 2), widths, outputs, bound=bound)
        yield net, random_rule(rand, kind, net, atoms=rand.randint(2, atoms))


def assert_modes_agree(net, rule):
    pruned = verify_rule(net, rule, mode=config.MODE_PRUNED, threads=1)
    exhaustive = verify_rule(net, rule, mode=config.MODE_EXHAUSTIVE, threads=1)
    assert pruned.holds() == exhaustive.holds()
    for verdict in [pruned, exhaustive]:
        if not verdict.holds():
            cex = verdict.counterexample
            assert rule.violated_by(net, cex.x, cex.y)


def test_pruned_and_exhaustive_agree():
    """Both search modes reach the same verdict on random instances."""
    for net, rule in search_corpus(Random(13), 16, hidden=1, width=2, atoms=3, bound=3):
        assert_modes_agree(net, rule)


@pytest.mark.skipif(
    not os.environ.get('NNRULES_SEARCH_CORPUS'), reason='large corpus not requested'
)
def test_pruned_and_exhaustive_agree_large():
    for net, rule in search_corpus(Random(31), 60, hidden=2, width=4, atoms=6, bound=8):
        assert_modes_agree(net, rule)


def test_threads_are_deterministic():
    """The number of workers does not change the verdict or the
    counterexample.
    """
    rand = Random(29)
    for _ in range(8):
        net = random_network(rand, 2, [2], 1, bound=3)
        rule = ObliqueRule(random_formula(rand, 2, atoms=2), random_formula(rand, 1, atoms=1))
        single = verify_rule(net, rule, threads=1, minimize=False)
        multi = verify_rule(net, rule, threads=4, minimize=False)
        assert single.holds() == multi.holds()
        if not single.holds():
            assert single.counterexample == multi.counterexample
            assert single.certificate == multi.certificate


def test_minimize_witness():
    """Coordinates are replaced by simpler values while the rule stays
    violated.
    """
    net = relu_network()
    rule = PropositionalRule(box([-1], [1]), atom([1], '<=', '1/2'))
    cex = minimize_witness(net, rule, Counterexample(x=QVector(['37/40'])))
    assert cex.x == QVector([1])
    rule = PropositionalRule(box([-1], ['3/4']), atom([1], '<=', '1/2'))
    cex = minimize_witness(net, rule, Counterexample(x=QVector(['7/10'])))
    assert cex.x == QVector(['2/3'])
    assert simpler_values(Fraction(7, 10)) == [
        Fraction(0), Fraction(1), Fraction(1, 2), Fraction(2, 3), Fraction(5, 7)
    ]
    assert simpler_values(Fraction(3)) == [Fraction(0)]
    assert simpler_values(Fraction(0)) == []
