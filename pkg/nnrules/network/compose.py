# This file is part of the Neural Network Rule Verifier (nnrules).
#
# Copyright (C) 2026 The nnrules developers.
#
# nnrules is released under the Revised BSD License. See file LICENSE for
# full license details.

"""Operators that combine networks into a single flat network. The verifier
only ever sees plain layered networks, so all operators build new layer
sequences instead of wrapping their arguments.
"""

from typing import List, Sequence

from nnrules.arith.vector import QMatrix, QVector, mat_vec
from nnrules.error import DimensionError, UnsupportedError
from nnrules.network.base import Activation, Layer, Network
from nnrules.network.gadget import affine_network, selection_matrix


def compose(outer: Network, inner: Network) -> Network:
    """Get a network that computes outer(inner(x)). If the output layer of
    the inner network only has identity nodes it is merged into the first
    layer of the outer network. Otherwise the layer sequences are
    concatenated.

    The result is classifying if the outer network is classifying.

    Parameters
    ----------
    outer: nnrules.network.base.Network
    inner: nnrules.network.base.Network

    Returns
    -------
    nnrules.network.base.Network

    Raises
    ------
    nnrules.error.DimensionError
    nnrules.error.UnsupportedError
    """
    if inner.output_dim != outer.input_dim:
        raise DimensionError(
            'inner network has {} outputs, outer network expects {} inputs'.format(
                inner.output_dim,
                outer.input_dim
            )
        )
    if inner.classifying:
        raise UnsupportedError('cannot compose with classifying inner network')
    last = inner.layers[-1]
    if last.is_linear():
        first = outer.layers[0]
        merged = Layer(
            weights=first.weights.mat_mul(last.weights),
            biases=mat_vec(first.weights, last.biases) + first.biases,
            activation=first.activations
        )
        layers = list(inner.layers[:-1]) + [merged] + list(outer.layers[1:])
        boolean = outer.boolean and len(inner.layers) == 1
    else:
        layers = list(inner.layers) + list(outer.layers)
        boolean = outer.boolean and inner.boolean
    return Network(
        input_dim=inner.input_dim,
        layers=layers,
        classifying=outer.classifying,
        boolean=boolean
    )


def juxtapose(nets: Sequence[Network]) -> Network:
    """Get a network that runs all given networks on the same input and
    concatenates their outputs.

    Parameters
    ----------
    nets: list of nnrules.network.base.Network

    Returns
    -------
    nnrules.network.base.Network

    Raises
    ------
    nnrules.error.DimensionError
    """
    dims = set(net.input_dim for net in nets)
    if len(dims) != 1:
        raise DimensionError('networks have different input dimensions {}'.format(sorted(dims)))
    n = dims.pop()
    fanout = QMatrix.identity(n)
    for _ in range(len(nets) - 1):
        fanout = fanout.vstack(QMatrix.identity(n))
    return compose(stack(nets), affine_network(fanout, QVector.zeros(fanout.rows)))


def parallel_product(net: Network) -> Network:
    """Get the network that computes (N(x), N(y)) on input (x, y).

    Parameters
    ----------
    net: nnrules.network.base.Network

    Returns
    -------
    nnrules.network.base.Network

    Raises
    ------
    nnrules.error.UnsupportedError
    """
    return stack([net, net])


def select_outputs(net: Network, indices: Sequence[int]) -> Network:
    """Get a copy of a (non-classifying) network that only returns the
    output nodes at the given (0-based) positions.

    Parameters
    ----------
    net: nnrules.network.base.Network
    indices: list of int

    Returns
    -------
    nnrules.network.base.Network

    Raises
    ------
    nnrules.error.UnsupportedError
    """
    if net.classifying:
        raise UnsupportedError('cannot select outputs of a classifying network')
    last = net.layers[-1]
    for i in indices:
        if i < 0 or i >= last.out_dim:
            raise DimensionError('output index {} out of range'.format(i))
    selection = selection_matrix(last.out_dim, indices)
    layer = Layer(
        weights=selection.mat_mul(last.weights),
        biases=QVector(last.biases[i] for i in indices),
        activation=[last.activations[i] for i in indices]
    )
    return Network(
        input_dim=net.input_dim,
        layers=list(net.layers[:-1]) + [layer],
        boolean=net.boolean
    )


def stack(nets: Sequence[Network]) -> Network:
    """Get the block-diagonal network that runs the given networks on
    disjoint parts of its input. On input (x_1, ..., x_k) the result is
    (N_1(x_1), ..., N_k(x_k)). Networks with fewer layers are padded at the
    end with pass-through layers (identity nodes, or Heaviside copy nodes
    H(x - 1) if all networks are Boolean).

    Parameters
    ----------
    nets: list of nnrules.network.base.Network

    Returns
    -------
    nnrules.network.base.Network

    Raises
    ------
    nnrules.error.UnsupportedError
    """
    if not nets:
        raise ValueError('no networks to stack')
    for net in nets:
        if net.classifying:
            raise UnsupportedError('cannot stack classifying networks')
    boolean = all(net.boolean for net in nets)
    depth = max(len(net.layers) for net in nets)
    padded: List[List[Layer]] = list()
    for net in nets:
        layers = list(net.layers)
        m = net.output_dim
        while len(layers) < depth:
            if boolean:
                layers.append(
                    Layer(QMatrix.identity(m), QVector([-1] * m), Activation.HEAVISIDE)
                )
            else:
                layers.append(
                    Layer(QMatrix.identity(m), QVector.zeros(m), Activation.IDENTITY)
                )
        padded.append(layers)
    layers = list()
    for pos in range(depth):
        column = [p[pos] for p in padded]
        biases = QVector()
        activations = list()
        for layer in column:
            biases = biases.concat(layer.biases)
            activations.extend(layer.activations)
        layers.append(
            Layer(
                weights=QMatrix.block_diag([layer.weights for layer in column]),
                biases=biases,
                activation=activations
            )
        )
    return Network(
        input_dim=sum(net.input_dim for net in nets),
        layers=layers,
        boolean=boolean
    )
