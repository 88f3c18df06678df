# This file is part of the Neural Network Rule Verifier (nnrules).
#
# Copyright (C) 2026 The nnrules developers.
#
# nnrules is released under the Revised BSD License. See file LICENSE for
# full license details.

"""Unit tests for interval bounds of the network encoding and for the order
in which the search visits branches.
"""

from fractions import Fraction

import pytest

from nnrules.arith.vector import QMatrix, QVector
from nnrules.network.base import Activation, Layer, Network
from nnrules.rules.base import PropositionalRule
from nnrules.rules.formula import Relation, atom, box
from nnrules.verifier.encoding import (
    ACTIVE, INACTIVE, NetworkEncoding, expression_bounds, output_bounds
)
from nnrules.verifier.query import build_query
from nnrules.verifier.search import INPUT, OUTPUT, PHASE, SearchSpace


@pytest.fixture
def literal_network():
    """Literal nodes ReLU(2x - 1), ReLU(2x - 2), ReLU(-2x) followed by the
    difference of the first two.
    """
    return Network(
        input_dim=1,
        layers=[
            Layer(QMatrix.from_rows([[2], [2], [-2]]), QVector([-1, -2, 0]), Activation.RELU),
            Layer(QMatrix.from_rows([[1, -1, 0]]), QVector([0]), Activation.RELU)
        ]
    )


def test_bounds_and_forced_phases(literal_network):
    encoding = NetworkEncoding(literal_network)
    bounds = encoding.bounds({0: (Fraction(0), Fraction(1))}, dict())
    assert bounds[(0, 0)] == (-1, 1)
    assert bounds[(0, 1)] == (-2, 0)
    assert bounds[(0, 2)] == (-2, 0)
    assert bounds[(1, 0)] == (0, 1)
    assert encoding.forced_phase((0, 0), bounds[(0, 0)]) is None
    assert encoding.forced_phase((0, 1), bounds[(0, 1)]) == INACTIVE
    assert encoding.forced_phase((1, 0), bounds[(1, 0)]) == ACTIVE
    # Phases of earlier nodes bound the later pre-activations.
    bounds = encoding.bounds({0: (Fraction(0), Fraction(1))}, {(0, 0): INACTIVE})
    assert bounds[(1, 0)] == (0, 0)
    assert encoding.forced_phase((1, 0), bounds[(1, 0)]) == INACTIVE
    # Unbounded inputs.
    bounds = encoding.bounds(dict(), dict())
    assert bounds[(0, 0)] == (None, None)
    assert bounds[(1, 0)] == (None, None)
    bounds = encoding.bounds({0: (None, Fraction(0))}, dict())
    assert bounds[(0, 0)] == (None, -1)
    assert bounds[(0, 2)] == (0, None)


def test_bounded_relaxation(literal_network):
    """The relaxation of ReLU(2x - 1) on [0, 1] is cut by h <= x."""
    encoding = NetworkEncoding(literal_network)
    plain = encoding.relaxation((0, 0))
    tight = encoding.relaxation((0, 0), (Fraction(-1), Fraction(1)))
    assert len(plain) == 2 and len(tight) == 3
    # Variables are x and the outputs of the four nodes.
    point = [Fraction(1, 2), Fraction(1), 0, 0, 0]
    assert all(c.holds(point) for c in plain)
    assert not all(c.holds(point) for c in tight)
    assert all(c.holds([1, 1, 0, 0, 0]) for c in tight)
    # Upper bound without lower bound.
    tight = encoding.relaxation((0, 0), (None, Fraction(1)))
    assert not all(c.holds([0, 2, 0, 0, 0]) for c in tight)
    # Stable nodes are encoded by their phase.
    assert encoding.relaxation((0, 1), (Fraction(-2), Fraction(0))) == \
        encoding.phase_constraints((0, 1), INACTIVE)


def test_expression_and_output_bounds():
    expr = (QVector([1, -2]), Fraction(1))
    assert expression_bounds(expr, [(0, 1), (0, 1)]) == (-1, 2)
    assert expression_bounds(expr, [(0, None), (0, 1)]) == (-1, None)
    assert expression_bounds(expr, [(0, 1), (None, 1)]) == (-1, None)
    assert output_bounds(Activation.RELU, (-1, 2), None) == (0, 2)
    assert output_bounds(Activation.RELU, (-1, 2), INACTIVE) == (0, 0)
    assert output_bounds(Activation.RELU, (None, None), ACTIVE) == (0, None)
    assert output_bounds(Activation.HEAVISIDE, (-1, 2), None) == (0, 1)
    assert output_bounds(Activation.HEAVISIDE, (1, 2), None) == (1, 1)
    assert output_bounds(Activation.HEAVISIDE, (-2, -1), None) == (0, 0)
    assert output_bounds(Activation.HEAVISIDE, (-1, 2), ACTIVE) == (1, 1)


def test_branch_order():
    """Children that contain the relaxation witness come first."""
    net = Network(
        input_dim=1,
        layers=[Layer(QMatrix.from_rows([[1]]), QVector([0]), Activation.RELU)]
    )
    rule = PropositionalRule(box([-1], [1]), atom([1], '<=', '1/2'))
    space = SearchSpace(build_query(net, rule))
    assert [d.kind for d in space.decisions] == [INPUT, INPUT, OUTPUT, PHASE]
    inside = [Relation.GE, Relation.LE]
    bounds = space.bounds(inside)
    assert bounds[(0, 0)] == (-1, 1)
    w = QVector([1, 1])
    assert space.options(inside, w, bounds) == [Relation.GT, Relation.LE]
    assert space.options(inside + [Relation.GT], w, bounds) == [ACTIVE, INACTIVE]
    w = QVector(['-1/2', 0])
    assert space.options(inside, w, bounds) == [Relation.LE, Relation.GT]
    assert space.options(inside + [Relation.LE], w, bounds) == [INACTIVE, ACTIVE]
    assert space.options([], w) == [Relation.GE, Relation.LT]
    # Inputs below -1 fix the node to be inactive.
    below = [Relation.LT, Relation.LE, Relation.GT]
    bounds = space.bounds(below)
    assert bounds[(0, 0)] == (None, -1)
    assert space.options(below, w, bounds) == [INACTIVE]
    # Without bounds both phases remain.
    assert space.options(below, w) == [INACTIVE, ACTIVE]
