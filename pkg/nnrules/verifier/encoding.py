# This file is part of the Neural Network Rule Verifier (nnrules).
#
# Copyright (C) 2026 The nnrules developers.
#
# nnrules is released under the Revised BSD License. See file LICENSE for
# full license details.

"""Linear encoding of a network. The variables of the encoding are the
network inputs followed by one variable h for the output of every ReLU or
Heaviside node. Pre-activations of all nodes and the outputs of identity
nodes are affine expressions over these variables.

Fixing the phase of a node adds linear constraints on its pre-activation z
and output h:

- ReLU active: z >= 0, h = z
- ReLU inactive: z <= 0, h = 0
- Heaviside active: z >= 0, h = 1
- Heaviside inactive: z < 0, h = 0

Nodes without a phase are relaxed to h >= 0, h >= z (ReLU) or 0 <= h <= 1
(Heaviside). Given interval bounds l < 0 < u on z the ReLU relaxation adds
h <= u (z - l) / (u - l). Nodes whose bounds decide the phase are encoded
exactly.
"""

from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from nnrules.arith.vector import QVector
from nnrules.error import UnsupportedError
from nnrules.network.base import Activation, Network
from nnrules.rules.formula import LinearAtom, Relation


"""Node phases."""
ACTIVE = 'active'
INACTIVE = 'inactive'
PHASES = [ACTIVE, INACTIVE]


"""Affine expression (coefficients over the encoding variables, constant)."""
Expression = Tuple[QVector, Fraction]


"""Interval with optional ends (None is unbounded)."""
Bounds = Tuple[Optional[Fraction], Optional[Fraction]]


class NetworkEncoding(object):
    """Affine expressions for all nodes of a network over the input
    variables and the outputs of nonlinear nodes.
    """
    def __init__(self, net: Network):
        """Compute the pre-activation expression of every node.

        Parameters
        ----------
        net: nnrules.network.base.Network

        Raises
        ------
        nnrules.error.UnsupportedError
        """
        if net.classifying:
            raise UnsupportedError('cannot encode classifying network')
        self.net = net
        self.nodes = net.nonlinear_nodes()
        self.input_dim = net.input_dim
        self.dim = net.input_dim + len(self.nodes)
        position = {node: net.input_dim + k for k, node in enumerate(self.nodes)}
        values = [
            (QVector.unit(self.dim, i), Fraction(0)) for i in range(net.input_dim)
        ]
        self.pre: Dict[Tuple[int, int], Expression] = dict()
        for pos, layer in enumerate(net.layers):
            outputs = list()
            for i in range(layer.out_dim):
                expr = affine(layer.weights.row(i), layer.biases[i], values, self.dim)
                self.pre[(pos, i)] = expr
                if layer.activations[i] == Activation.IDENTITY:
                    outputs.append(expr)
                else:
                    outputs.append((QVector.unit(self.dim, position[(pos, i)]), Fraction(0)))
            values = outputs
        self.outputs: List[Expression] = values
        self.position = position

    def activation(self, node: Tuple[int, int]) -> Activation:
        """Get the activation function of a nonlinear node."""
        return self.net.layers[node[0]].activations[node[1]]

    def input_atom(self, atom: LinearAtom) -> LinearAtom:
        """Translate an atom over the network inputs."""
        return atom.lift(0, self.dim)

    def output_atom(self, atom: LinearAtom) -> LinearAtom:
        """Translate an atom over the network outputs by substituting the
        output expressions.
        """
        coeffs, const = affine(atom.coeffs, Fraction(0), self.outputs, self.dim)
        return LinearAtom(coeffs, atom.rel, atom.const - const)

    def output_difference(self, i: int, j: int, rel: Relation) -> LinearAtom:
        """Get the atom o_i - o_j rel 0 over the encoding variables."""
        ci, ki = self.outputs[i]
        cj, kj = self.outputs[j]
        return LinearAtom(ci - cj, rel, kj - ki)

    def phase_constraints(self, node: Tuple[int, int], phase: str) -> List[LinearAtom]:
        """Get the constraints for a node in the given phase.

        Parameters
        ----------
        node: (int, int)
            Layer and node index.
        phase: string
            One of ACTIVE or INACTIVE.

        Returns
        -------
        list of nnrules.rules.formula.LinearAtom
        """
        z, k = self.pre[node]
        h = QVector.unit(self.dim, self.position[node])
        relu = self.activation(node) == Activation.RELU
        if phase == ACTIVE:
            return [
                LinearAtom(z, Relation.GE, -k),
                LinearAtom(h - z, Relation.EQ, k) if relu else LinearAtom(h, Relation.EQ, 1)
            ]
        return [
            LinearAtom(z, Relation.LE if relu else Relation.LT, -k),
            LinearAtom(h, Relation.EQ, 0)
        ]

    def bounds(
        self, inputs: Dict[int, Bounds], phases: Dict[Tuple[int, int], str]
    ) -> Dict[Tuple[int, int], Bounds]:
        """Get interval bounds for the pre-activations of all nonlinear
        nodes when the inputs range over the given box.

        Parameters
        ----------
        inputs: dict
            Bounds for input variables. Missing variables are unbounded.
        phases: dict
            Phases of nodes. Bounds of the node outputs respect them.

        Returns
        -------
        dict
        """
        values: List[Bounds] = [inputs.get(i, (None, None)) for i in range(self.input_dim)]
        values += [(None, None)] * len(self.nodes)
        result = dict()
        for node in self.nodes:
            z = expression_bounds(self.pre[node], values)
            result[node] = z
            values[self.position[node]] = output_bounds(
                self.activation(node), z, phases.get(node)
            )
        return result

    def forced_phase(self, node: Tuple[int, int], bounds: Bounds) -> Optional[str]:
        """Get the phase of a node that is decided by the bounds of its
        pre-activation (or None).
        """
        lower, upper = bounds
        relu = self.activation(node) == Activation.RELU
        if upper is not None and (upper <= 0 if relu else upper < 0):
            return INACTIVE
        if lower is not None and lower >= 0:
            return ACTIVE
        return None

    def output_values(self, w: Sequence[Fraction]) -> QVector:
        """Get the values of the output expressions at a point."""
        return QVector(c.dot(w) + k for c, k in self.outputs)

    def relaxation(
        self, node: Tuple[int, int], bounds: Optional[Bounds] = None
    ) -> List[LinearAtom]:
        """Get the relaxed constraints for a node without phase. Optional
        bounds of the pre-activation tighten the relaxation.
        """
        lower, upper = bounds if bounds is not None else (None, None)
        phase = self.forced_phase(node, (lower, upper))
        if phase is not None:
            return self.phase_constraints(node, phase)
        z, k = self.pre[node]
        h = QVector.unit(self.dim, self.position[node])
        if self.activation(node) != Activation.RELU:
            return [LinearAtom(h, Relation.GE, 0), LinearAtom(h, Relation.LE, 1)]
        constraints = [LinearAtom(h, Relation.GE, 0), LinearAtom(h - z, Relation.GE, k)]
        if upper is not None and lower is not None:
            coeffs = h.scale(upper - lower) - z.scale(upper)
            constraints.append(LinearAtom(coeffs, Relation.LE, upper * (k - lower)))
        elif upper is not None:
            constraints.append(LinearAtom(h, Relation.LE, upper))
        return constraints

    def phase_of(self, trace: Sequence[Tuple[QVector, QVector]], node: Tuple[int, int]) -> str:
        """Get the phase of a node for a network trace (pre-activation >= 0
        is active).
        """
        return ACTIVE if trace[node[0]][0][node[1]] >= 0 else INACTIVE


def affine(
    coeffs: QVector, const: Fraction, values: Sequence[Expression], dim: int
) -> Expression:
    """Get the expression sum_i coeffs_i * values_i + const."""
    result = [Fraction(0)] * dim
    for c, (vc, vk) in zip(coeffs, values):
        if c != 0:
            const += c * vk
            for j in vc.support():
                result[j] += c * vc[j]
    return QVector(result), const


def expression_bounds(expr: Expression, values: Sequence[Bounds]) -> Bounds:
    """Get bounds of an affine expression from bounds of its variables."""
    coeffs, const = expr
    lower: Optional[Fraction] = const
    upper: Optional[Fraction] = const
    for j in coeffs.support():
        c = coeffs[j]
        lo, hi = values[j] if c > 0 else values[j][::-1]
        lower = lower + c * lo if lower is not None and lo is not None else None
        upper = upper + c * hi if upper is not None and hi is not None else None
    return lower, upper


def output_bounds(activation: Activation, z: Bounds, phase: Optional[str]) -> Bounds:
    """Get bounds of a node output from bounds of its pre-activation."""
    if phase == INACTIVE:
        return Fraction(0), Fraction(0)
    lower, upper = z
    if activation == Activation.RELU:
        return (
            max(lower, Fraction(0)) if lower is not None else Fraction(0),
            max(upper, Fraction(0)) if upper is not None else None
        )
    if phase == ACTIVE:
        return Fraction(1), Fraction(1)
    return (
        Fraction(1) if lower is not None and lower >= 0 else Fraction(0),
        Fraction(0) if upper is not None and upper < 0 else Fraction(1)
    )
