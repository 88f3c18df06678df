# This file is part of the Neural Network Rule Verifier (nnrules).
#
# Copyright (C) 2026 The nnrules developers.
#
# nnrules is released under the Revised BSD License. See file LICENSE for
# full license details.

"""Perturbation of networks inside the unit cube. The map

    f(x) = x + s * d(x) * e_1,  d(x) = min_i min(ReLU(x_i), ReLU(1 - x_i))

is the identity outside of [0,1]^n and moves interior points along the first
axis by s times their distance to the cube boundary. For s <= 1 the cube is
mapped into itself, so N o f obeys every rule that N obeys on the cube while
it differs from N wherever N has a nonzero slope along x_1.
"""

from fractions import Fraction
from typing import Optional

from nnrules.arith.rational import Rational, to_rational
from nnrules.arith.vector import QMatrix, QVector
from nnrules.network.base import Activation, Layer, Network
from nnrules.network.compose import compose, stack
from nnrules.network.gadget import affine_network, build_min_gadget, identity_network


"""Default shift factor."""
SHIFT = Fraction(1, 2)


def build_cube_perturbation(n: int, shift: Optional[Rational] = SHIFT) -> Network:
    """Get the network for the cube perturbation f on R^n.

    Parameters
    ----------
    n: int
        Input dimension (at least 1).
    shift: fraction, default=1/2
        Shift factor s.

    Returns
    -------
    nnrules.network.base.Network

    Raises
    ------
    TypeError
    ValueError
    """
    if n < 1:
        raise ValueError('invalid dimension {}'.format(n))
    shift = to_rational(shift)
    # Distances ReLU(x_i), ReLU(1 - x_i) followed by the pass-through of x.
    rows, biases, activations = list(), list(), list()
    for i in range(n):
        for weight, bias in [(1, 0), (-1, 1)]:
            row = [0] * n
            row[i] = weight
            rows.append(row)
            biases.append(bias)
            activations.append(Activation.RELU)
    rows.extend(QMatrix.identity(n).to_lists())
    biases.extend([0] * n)
    activations.extend([Activation.IDENTITY] * n)
    distances = Network(
        input_dim=n,
        layers=[Layer(QMatrix.from_rows(rows), QVector(biases), activations)]
    )
    inner = compose(stack([build_min_gadget(2 * n), identity_network(n)]), distances)
    rows = list()
    for i in range(n):
        row = [0] * (n + 1)
        row[i + 1] = 1
        rows.append(row)
    rows[0][0] = shift
    return compose(affine_network(QMatrix.from_rows(rows), QVector.zeros(n)), inner)


def perturb_network(net: Network, shift: Optional[Rational] = SHIFT) -> Network:
    """Get the network N o f that agrees with N outside of the unit cube.

    Parameters
    ----------
    net: nnrules.network.base.Network
    shift: fraction, default=1/2

    Returns
    -------
    nnrules.network.base.Network
    """
    return compose(net, build_cube_perturbation(net.input_dim, shift))
