# This file is part of the Neural Network Rule Verifier (nnrules).
#
# Copyright (C) 2026 The nnrules developers.
#
# nnrules is released under the Revised BSD License. See file LICENSE for
# full license details.

"""Boolean formulas over variables x_1, ..., x_n and their compilation into
Boolean networks. Gates are Heaviside nodes with weights and biases in
{-1, 0, 1} (using H(0) = 1):

- OR(c_1, ..., c_k)  = H(c_1 + ... + c_k - 1)
- NOT(c)             = H(-c)
- AND(c_1, ..., c_k) = H(-(NOT(c_1) + ... + NOT(c_k)))
- COPY(c)            = H(c - 1)
- TRUE = H(0), FALSE = H(-1)

A bias of -k for k >= 2 is not allowed in Boolean networks. AND gates are
therefore compiled via De Morgan at the cost of one extra layer.
"""

from __future__ import annotations
from abc import ABCMeta, abstractmethod
from typing import Dict, List, Optional, Sequence, Set, Tuple

from nnrules.arith.vector import QMatrix, QVector
from nnrules.network.base import Activation, Layer, Network


# -- Formula AST --------------------------------------------------------------

class BoolFormula(metaclass=ABCMeta):
    """Abstract class for Boolean formulas."""
    @abstractmethod
    def evaluate(self, x: Sequence[int]) -> bool:
        """Evaluate the formula for a 0/1 assignment of variables x_1, ...,
        x_n (given as a 0-indexed sequence).

        Parameters
        ----------
        x: list of int

        Returns
        -------
        bool
        """
        raise NotImplementedError()  # pragma: no cover

    @abstractmethod
    def variables(self) -> Set[int]:
        """Get the (1-based) indices of all variables in the formula.

        Returns
        -------
        set of int
        """
        raise NotImplementedError()  # pragma: no cover


class BoolConst(BoolFormula):
    """Boolean constant."""
    def __init__(self, value: bool):
        if value not in (True, False, 0, 1):
            raise ValueError("invalid Boolean constant '{}'".format(value))
        self.value = bool(value)

    def __eq__(self, other) -> bool:
        return isinstance(other, BoolConst) and self.value == other.value

    def __repr__(self) -> str:
        return 'TRUE' if self.value else 'FALSE'

    def evaluate(self, x: Sequence[int]) -> bool:
        return self.value

    def variables(self) -> Set[int]:
        return set()


class BoolVar(BoolFormula):
    """Boolean variable x_index (index starts at 1)."""
    def __init__(self, index: int):
        if index < 1:
            raise ValueError('invalid variable index {}'.format(index))
        self.index = index

    def __eq__(self, other) -> bool:
        return isinstance(other, BoolVar) and self.index == other.index

    def __repr__(self) -> str:
        return 'x{}'.format(self.index)

    def evaluate(self, x: Sequence[int]) -> bool:
        value = x[self.index - 1]
        if value not in (0, 1):
            raise ValueError("non-Boolean value '{}' for x{}".format(value, self.index))
        return value == 1

    def variables(self) -> Set[int]:
        return {self.index}


class BoolNot(BoolFormula):
    """Negation of a Boolean formula."""
    def __init__(self, child: BoolFormula):
        self.child = child

    def __eq__(self, other) -> bool:
        return isinstance(other, BoolNot) and self.child == other.child

    def __repr__(self) -> str:
        return '~{}'.format(self.child)

    def evaluate(self, x: Sequence[int]) -> bool:
        return not self.child.evaluate(x)

    def variables(self) -> Set[int]:
        return self.child.variables()


class BoolAnd(BoolFormula):
    """Conjunction of an arbitrary number of formulas (TRUE if empty)."""
    def __init__(self, children: Sequence[BoolFormula]):
        self.children = list(children)

    def __eq__(self, other) -> bool:
        return isinstance(other, BoolAnd) and self.children == other.children

    def __repr__(self) -> str:
        return '({})'.format(' & '.join(str(c) for c in self.children))

    def evaluate(self, x: Sequence[int]) -> bool:
        return all(c.evaluate(x) for c in self.children)

    def variables(self) -> Set[int]:
        result = set()
        for c in self.children:
            result |= c.variables()
        return result


class BoolOr(BoolFormula):
    """Disjunction of an arbitrary number of formulas (FALSE if empty)."""
    def __init__(self, children: Sequence[BoolFormula]):
        self.children = list(children)

    def __eq__(self, other) -> bool:
        return isinstance(other, BoolOr) and self.children == other.children

    def __repr__(self) -> str:
        return '({})'.format(' | '.join(str(c) for c in self.children))

    def evaluate(self, x: Sequence[int]) -> bool:
        return any(c.evaluate(x) for c in self.children)

    def variables(self) -> Set[int]:
        result = set()
        for c in self.children:
            result |= c.variables()
        return result


# -- Compiler -----------------------------------------------------------------

"""A signal is a (level, position) pair. Level 0 is the input vector."""
Signal = Tuple[int, int]


class CircuitBuilder(object):
    """Layered circuit of Heaviside gates. Each gate reads signals from the
    level directly below it. Signals are lifted to higher levels by chains
    of copy gates. Identical gates on the same level are shared.
    """
    def __init__(self, num_vars: int):
        """Initialize the input level.

        Parameters
        ----------
        num_vars: int
            Number of network inputs.
        """
        self.num_vars = num_vars
        # Gates per level (starting at level 1). A gate is a pair of the
        # weights (by input position) and the bias.
        self.levels: List[List[Tuple[Dict[int, int], int]]] = list()
        self.index: Dict[Tuple[int, Tuple, int], int] = dict()

    def gate(self, level: int, weights: Dict[int, int], bias: int) -> Signal:
        """Add a gate at the given level (>= 1) that reads from the level
        below. Returns the existing signal if the same gate was added
        before.
        """
        while len(self.levels) < level:
            self.levels.append(list())
        key = (level, tuple(sorted(weights.items())), bias)
        if key not in self.index:
            self.levels[level - 1].append((weights, bias))
            self.index[key] = len(self.levels[level - 1]) - 1
        return (level, self.index[key])

    def lift(self, signal: Signal, level: int) -> Signal:
        """Lift a signal to the given level using copy gates."""
        while signal[0] < level:
            signal = self.gate(signal[0] + 1, {signal[1]: 1}, -1)
        return signal

    def compile(self, formula: BoolFormula) -> Signal:
        """Add gates that compute the formula. Returns the output signal."""
        if isinstance(formula, BoolVar):
            if formula.index > self.num_vars:
                raise ValueError('variable x{} out of range'.format(formula.index))
            return (0, formula.index - 1)
        elif isinstance(formula, BoolConst):
            return self.gate(1, {}, 0 if formula.value else -1)
        elif isinstance(formula, BoolNot):
            child = self.compile(formula.child)
            return self.gate(child[0] + 1, {child[1]: -1}, 0)
        elif isinstance(formula, BoolOr):
            if not formula.children:
                return self.compile(BoolConst(False))
            children = self._aligned(formula.children)
            return self.gate(children[0][0] + 1, {s[1]: 1 for s in children}, -1)
        elif isinstance(formula, BoolAnd):
            if not formula.children:
                return self.compile(BoolConst(True))
            children = self._aligned(formula.children)
            level = children[0][0] + 1
            negated = [self.gate(level, {s[1]: -1}, 0) for s in children]
            return self.gate(level + 1, {s[1]: -1 for s in negated}, 0)
        raise ValueError("non-Boolean formula element '{}'".format(formula))

    def network(self, output: Signal) -> Network:
        """Get the Boolean network for the circuit with the given output
        signal.
        """
        output = self.lift(output, max(1, output[0]))
        depth = output[0]
        layers = list()
        width = self.num_vars
        for level in range(1, depth + 1):
            gates = self.levels[level - 1]
            if level == depth:
                gates = [gates[output[1]]]
            rows, biases = list(), list()
            for weights, bias in gates:
                row = [0] * width
                for pos, w in weights.items():
                    row[pos] = w
                rows.append(row)
                biases.append(bias)
            layers.append(
                Layer(
                    QMatrix.from_rows(rows, cols=width),
                    QVector(biases),
                    Activation.HEAVISIDE
                )
            )
            width = len(gates)
        return Network(input_dim=self.num_vars, layers=layers, boolean=True)

    def _aligned(self, children: Sequence[BoolFormula]) -> List[Signal]:
        """Compile all children and lift them to a common level."""
        signals = [self.compile(c) for c in children]
        level = max(s[0] for s in signals)
        return [self.lift(s, level) for s in signals]


def compile_boolean_formula(formula, num_vars: Optional[int] = None) -> Network:
    """Compile a Boolean formula into a Boolean network N_F with one output
    that is 1 on x in {0,1}^n if and only if F(x) holds.

    Parameters
    ----------
    formula: nnrules.network.boolean.BoolFormula or CNF formula
        Formula AST. Objects with a `to_formula()` method (e.g., CNF
        formulas) are converted first.
    num_vars: int, default=None
        Number of network inputs. Defaults to the number of variables of a
        CNF formula or the largest variable index in the formula.

    Returns
    -------
    nnrules.network.base.Network

    Raises
    ------
    ValueError
    """
    if hasattr(formula, 'to_formula'):
        if num_vars is None:
            num_vars = formula.num_vars
        formula = formula.to_formula()
    if num_vars is None:
        num_vars = max(formula.variables(), default=0)
    if num_vars < 1:
        raise ValueError('Boolean network requires at least one input')
    builder = CircuitBuilder(num_vars=num_vars)
    return builder.network(builder.compile(formula))
