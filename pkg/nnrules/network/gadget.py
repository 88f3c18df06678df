# This file is part of the Neural Network Rule Verifier (nnrules).
#
# Copyright (C) 2026 The nnrules developers.
#
# nnrules is released under the Revised BSD License. See file LICENSE for
# full license details.

"""Building blocks for networks: affine maps, constants, the clamp gadget
that cuts a value to [0, 1], and the min gadget that computes the minimum of
its inputs.
"""

from fractions import Fraction
from typing import List, Sequence

from nnrules.arith.rational import Rational
from nnrules.arith.vector import QMatrix, QVector
from nnrules.network.base import Activation, Layer, Network


def affine_network(weights: QMatrix, biases: QVector) -> Network:
    """Get a single-layer network that computes the affine map W x + b.

    Parameters
    ----------
    weights: nnrules.arith.vector.QMatrix
    biases: nnrules.arith.vector.QVector

    Returns
    -------
    nnrules.network.base.Network
    """
    return Network(
        input_dim=weights.cols,
        layers=[Layer(weights, biases, Activation.IDENTITY)]
    )


def build_clamp_gadget() -> Network:
    """Get the 1-input network ReLU(ReLU(x) - ReLU(x - 1)). The network
    computes 0 for x <= 0, x for x in [0, 1] and 1 for x >= 1.

    Returns
    -------
    nnrules.network.base.Network
    """
    return Network(
        input_dim=1,
        layers=[
            Layer(QMatrix.from_rows([[1], [1]]), QVector([0, -1]), Activation.RELU),
            Layer(QMatrix.from_rows([[1, -1]]), QVector([0]), Activation.RELU)
        ]
    )


def build_min_gadget(k: int) -> Network:
    """Get a network with k inputs and one output that computes the minimum
    of its inputs. The network is a balanced tree of binary minimum nodes,
    each computed as

        min(a, b) = (a + b)/2 - ReLU((a - b)/2) - ReLU((b - a)/2)

    where (a + b)/2 is carried by an identity node. Levels with an odd
    number of values duplicate their last value.

    Parameters
    ----------
    k: int
        Number of inputs (at least 2).

    Returns
    -------
    nnrules.network.base.Network

    Raises
    ------
    ValueError
    """
    if k < 2:
        raise ValueError('min gadget requires at least 2 inputs, got {}'.format(k))
    half = Fraction(1, 2)
    # Each current value is a linear combination (row) of the outputs of the
    # previous layer.
    values = QMatrix.identity(k).to_lists()
    layers = list()
    while len(values) > 1:
        if len(values) % 2 == 1:
            values.append(list(values[-1]))
        rows, activations = list(), list()
        for a, b in zip(values[0::2], values[1::2]):
            rows.append([half * (u + v) for u, v in zip(a, b)])
            rows.append([half * (u - v) for u, v in zip(a, b)])
            rows.append([half * (v - u) for u, v in zip(a, b)])
            activations.extend([Activation.IDENTITY, Activation.RELU, Activation.RELU])
        layers.append(
            Layer(
                QMatrix.from_rows(rows),
                QVector.zeros(len(rows)),
                activations
            )
        )
        width = len(rows)
        values = list()
        for j in range(width // 3):
            row = [0] * width
            row[3 * j], row[3 * j + 1], row[3 * j + 2] = 1, -1, -1
            values.append(row)
    layers.append(Layer(QMatrix.from_rows(values), QVector([0]), Activation.IDENTITY))
    return Network(input_dim=k, layers=layers)


def constant_network(input_dim: int, values: Sequence[Rational]) -> Network:
    """Get a network that ignores its input and returns the given constant
    vector.

    Parameters
    ----------
    input_dim: int
    values: nnrules.arith.vector.QVector

    Returns
    -------
    nnrules.network.base.Network
    """
    values = values if isinstance(values, QVector) else QVector(values)
    return affine_network(QMatrix.zeros(values.dim, input_dim), values)


def identity_network(dim: int) -> Network:
    """Get a single-layer network that returns its input."""
    return affine_network(QMatrix.identity(dim), QVector.zeros(dim))


def selection_matrix(dim: int, indices: Sequence[int]) -> QMatrix:
    """Get the 0/1 matrix that selects the given (0-based) positions from a
    vector of the given dimension.

    Parameters
    ----------
    dim: int
    indices: list of int

    Returns
    -------
    nnrules.arith.vector.QMatrix
    """
    rows: List[List[int]] = list()
    for i in indices:
        row = [0] * dim
        row[i] = 1
        rows.append(row)
    return QMatrix.from_rows(rows, cols=dim)
