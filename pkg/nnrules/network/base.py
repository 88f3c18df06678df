# This file is part of the Neural Network Rule Verifier (nnrules).
#
# Copyright (C) 2026 The nnrules developers.
#
# nnrules is released under the Revised BSD License. See file LICENSE for
# full license details.

"""Feedforward networks with exact rational weights. A network is a sequence
of layers. Each layer applies an affine map to the outputs of the previous
layer (or the input vector) followed by a per-node activation function.

Heaviside nodes output 1 if their pre-activation is greater than or equal to
zero and 0 otherwise, i.e., H(0) = 1. With this convention a negation can be
written as H(-x) using weights and biases in {-1, 0, 1} only.
"""

from __future__ import annotations
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from nnrules.arith.rational import Rational
from nnrules.arith.vector import QMatrix, QVector, mat_vec
from nnrules.error import DimensionError


class Activation(Enum):
    """Activation functions of network nodes."""
    HEAVISIDE = 'heaviside'
    IDENTITY = 'identity'
    RELU = 'relu'

    def apply(self, value: Rational) -> Rational:
        """Apply the activation function to a pre-activation value.

        Parameters
        ----------
        value: fractions.Fraction

        Returns
        -------
        fractions.Fraction
        """
        if self == Activation.RELU:
            return value if value > 0 else Fraction(0)
        elif self == Activation.HEAVISIDE:
            return Fraction(1) if value >= 0 else Fraction(0)
        return value

    def is_linear(self) -> bool:
        """Test if the activation is the identity function."""
        return self == Activation.IDENTITY


"""Type for activation specifications of a layer."""
ActivationSpec = Union[Activation, Sequence[Activation]]


class Layer(object):
    """Layer of a feedforward network. Row i of the weight matrix holds the
    incoming weights of node i.
    """
    def __init__(
        self, weights: QMatrix, biases: QVector,
        activation: ActivationSpec = Activation.RELU
    ):
        """Initialize the weights, biases and node activations.

        Parameters
        ----------
        weights: nnrules.arith.vector.QMatrix
            Weight matrix of shape out_dim x in_dim.
        biases: nnrules.arith.vector.QVector
            Bias vector of dimension out_dim.
        activation: nnrules.network.base.Activation or list, default=RELU
            Either a single activation that is used for all nodes or one
            activation per node.

        Raises
        ------
        nnrules.error.DimensionError
        """
        if weights.rows != biases.dim:
            raise DimensionError(
                '{} weight rows but {} biases'.format(weights.rows, biases.dim)
            )
        self.weights = weights
        self.biases = biases
        if isinstance(activation, Activation):
            self.activations = tuple([activation] * weights.rows)
        else:
            self.activations = tuple(activation)
        if len(self.activations) != weights.rows:
            raise DimensionError(
                '{} activations for {} nodes'.format(len(self.activations), weights.rows)
            )

    def __eq__(self, other) -> bool:
        if not isinstance(other, Layer):
            return False
        return (
            self.weights == other.weights and self.biases == other.biases
            and self.activations == other.activations
        )

    def __repr__(self) -> str:
        return '<Layer {}x{} {}>'.format(
            self.out_dim, self.in_dim,
            self.activation.value if self.activation else 'mixed'
        )

    @property
    def activation(self) -> Optional[Activation]:
        """Get the activation of the layer if all nodes share the same
        activation. Returns None for mixed layers.
        """
        if self.activations and all(a == self.activations[0] for a in self.activations):
            return self.activations[0]
        return None

    def forward(self, values: Sequence[Rational]) -> Tuple[QVector, QVector]:
        """Compute pre-activation and output values of all layer nodes.

        Parameters
        ----------
        values: nnrules.arith.vector.QVector
            Outputs of the previous layer.

        Returns
        -------
        (nnrules.arith.vector.QVector, nnrules.arith.vector.QVector)
        """
        pre = mat_vec(self.weights, values) + self.biases
        return pre, QVector(a.apply(z) for a, z in zip(self.activations, pre))

    @property
    def in_dim(self) -> int:
        return self.weights.cols

    def is_linear(self) -> bool:
        """Test if all nodes in the layer have the identity activation."""
        return all(a.is_linear() for a in self.activations)

    @property
    def out_dim(self) -> int:
        return self.weights.rows


class Network(object):
    """Feedforward network over exact rationals. A classifying network
    returns the 0/1 indicator of the maximal entries of its output layer.
    Boolean networks only use Heaviside nodes with weights and biases in
    {-1, 0, 1}.
    """
    def __init__(
        self, input_dim: int, layers: Sequence[Layer],
        classifying: Optional[bool] = False, boolean: Optional[bool] = False
    ):
        """Initialize the network structure. Validates that the layer
        dimensions chain correctly and, for Boolean networks, that the
        Boolean restrictions hold.

        Parameters
        ----------
        input_dim: int
            Number of input nodes.
        layers: list of nnrules.network.base.Layer
            Computation layers (at least one).
        classifying: bool, default=False
            Network outputs the argmax indicator of the output layer.
        boolean: bool, default=False
            Network is a Boolean network.

        Raises
        ------
        nnrules.error.DimensionError
        ValueError
        """
        if not layers:
            raise ValueError('network without layers')
        dim = input_dim
        for pos, layer in enumerate(layers):
            if layer.in_dim != dim:
                raise DimensionError(
                    'layer {} expects {} inputs but receives {}'.format(pos, layer.in_dim, dim)
                )
            dim = layer.out_dim
        self.input_dim = input_dim
        self.layers = tuple(layers)
        self.classifying = bool(classifying)
        self.boolean = bool(boolean)
        if self.boolean:
            for pos, layer in enumerate(self.layers):
                if any(a != Activation.HEAVISIDE for a in layer.activations):
                    raise ValueError('layer {} of Boolean network is not Heaviside'.format(pos))
                values = layer.weights.to_lists() + [layer.biases.to_list()]
                for row in values:
                    if any(v not in (-1, 0, 1) for v in row):
                        raise ValueError(
                            'weights of Boolean network layer {} not in {{-1,0,1}}'.format(pos)
                        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, Network):
            return False
        return (
            self.input_dim == other.input_dim and self.layers == other.layers
            and self.classifying == other.classifying and self.boolean == other.boolean
        )

    def __repr__(self) -> str:
        return '<Network {} -> {} ({} layers{}{})>'.format(
            self.input_dim, self.output_dim, len(self.layers),
            ', classifying' if self.classifying else '',
            ', boolean' if self.boolean else ''
        )

    def evaluate(self, x: Sequence[Rational]) -> QVector:
        """Evaluate the network at the given input. For classifying networks
        the result is the 0/1 indicator of all maximal entries of the output
        layer (ties yield multiple ones).

        Parameters
        ----------
        x: nnrules.arith.vector.QVector
            Input vector.

        Returns
        -------
        nnrules.arith.vector.QVector

        Raises
        ------
        nnrules.error.DimensionError
        """
        values = self.raw(x)
        if self.classifying:
            return argmax_indicator(values)
        return values

    def nonlinear_nodes(self) -> List[Tuple[int, int]]:
        """Get (layer, node) index pairs of all nodes that have a ReLU or
        Heaviside activation, in layer order.

        Returns
        -------
        list of (int, int)
        """
        nodes = list()
        for pos, layer in enumerate(self.layers):
            for i, a in enumerate(layer.activations):
                if not a.is_linear():
                    nodes.append((pos, i))
        return nodes

    @property
    def output_dim(self) -> int:
        return self.layers[-1].out_dim

    def raw(self, x: Sequence[Rational]) -> QVector:
        """Evaluate the network and return the values of the output layer
        (ignoring the classifying flag).
        """
        return self.trace(x)[-1][1]

    def trace(self, x: Sequence[Rational]) -> List[Tuple[QVector, QVector]]:
        """Evaluate the network and return pre-activation and output values
        for every layer.

        Parameters
        ----------
        x: nnrules.arith.vector.QVector
            Input vector.

        Returns
        -------
        list of (nnrules.arith.vector.QVector, nnrules.arith.vector.QVector)

        Raises
        ------
        nnrules.error.DimensionError
        """
        values = x if isinstance(x, QVector) else QVector(x)
        if values.dim != self.input_dim:
            raise DimensionError(
                'network expects {} inputs, got {}'.format(self.input_dim, values.dim)
            )
        result = list()
        for layer in self.layers:
            pre, values = layer.forward(values)
            result.append((pre, values))
        return result

    def unclassified(self) -> Network:
        """Get a copy of the network that returns the raw output layer."""
        return Network(
            input_dim=self.input_dim,
            layers=self.layers,
            classifying=False,
            boolean=self.boolean
        )


def argmax_indicator(values: Sequence[Rational]) -> QVector:
    """Get the 0/1 indicator vector of all entries that are at least as big
    as all other entries.

    Parameters
    ----------
    values: nnrules.arith.vector.QVector

    Returns
    -------
    nnrules.arith.vector.QVector
    """
    top = max(values)
    return QVector(1 if v == top else 0 for v in values)
