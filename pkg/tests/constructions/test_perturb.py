# This file is part of the Neural Network Rule Verifier (nnrules).
#
# Copyright (C) 2026 The nnrules developers.
#
# nnrules is released under the Revised BSD License. See file LICENSE for
# full license details.

"""Unit tests for the perturbation of networks inside the unit cube."""

from fractions import Fraction
from itertools import product

import pytest

from nnrules.arith.vector import QMatrix, QVector
from nnrules.constructions.perturb import build_cube_perturbation, perturb_network
from nnrules.network.gadget import affine_network, build_clamp_gadget
from nnrules.rules.base import PropositionalRule
from nnrules.rules.formula import box, interval
from nnrules.verifier.base import verify_rule


@pytest.mark.parametrize(
    'x,y',
    [
        (['1/2'], ['3/4']),
        (['1/4'], ['3/8']),
        ([0], [0]),
        ([1], [1]),
        ([2], [2]),
        ([-1], [-1]),
        (['1/4', '1/2'], ['3/8', '1/2']),
        (['1/2', '1/2'], ['3/4', '1/2']),
        ([2, '1/2'], [2, '1/2']),
        (['1/2', -3], ['1/2', -3])
    ]
)
def test_cube_perturbation(x, y):
    f = build_cube_perturbation(len(x))
    assert f.evaluate(x) == QVector(y)


def test_cube_perturbation_maps_cube_into_cube():
    f = build_cube_perturbation(2, shift=1)
    grid = [Fraction(k, 4) for k in range(5)]
    for x in product(grid, repeat=2):
        y = f.evaluate(list(x))
        assert all(0 <= v <= 1 for v in y)
        assert y[1] == x[1]
    assert build_cube_perturbation(1, shift=0).evaluate(['1/2']) == QVector(['1/2'])
    with pytest.raises(ValueError):
        build_cube_perturbation(0)
    # Shift factors are exact rationals.
    assert build_cube_perturbation(1, shift='1/2') == build_cube_perturbation(1)
    with pytest.raises(TypeError):
        build_cube_perturbation(1, shift=0.5)


def test_perturbed_network():
    """The perturbed network differs from the original one inside the cube
    but obeys the same rules on the cube.
    """
    net = affine_network(QMatrix.from_rows([[1]]), QVector([0]))
    perturbed = perturb_network(net)
    assert perturbed.input_dim == 1 and perturbed.output_dim == 1
    assert perturbed.evaluate(['1/2']) == QVector(['3/4'])
    assert perturbed.evaluate([3]) == QVector([3])
    rule = PropositionalRule(cond=box([0], [1]), concl=interval(1, 0, 0, 1))
    assert verify_rule(net, rule).holds()
    assert verify_rule(perturbed, rule).holds()
    rule = PropositionalRule(cond=box([0], [1]), concl=interval(1, 0, upper='1/2'))
    assert not verify_rule(perturbed, rule).holds()
    clamp = perturb_network(build_clamp_gadget(), shift='1/4')
    assert clamp.evaluate(['1/2']) == QVector(['5/8'])
    assert clamp.evaluate([5]) == QVector([1])
