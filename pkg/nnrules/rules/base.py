# This file is part of the Neural Network Rule Verifier (nnrules).
#
# Copyright (C) 2026 The nnrules developers.
#
# nnrules is released under the Revised BSD License. See file LICENSE for
# full license details.

"""Rules about the input/output behavior of networks. Conditional rules
(propositional, oblique and MofN) state that every input satisfying the
conditional part is mapped to an output satisfying the conclusion part.
Monotonicity rules compare the outputs for pairs of inputs x, y with
Ax <= Ay (componentwise).
"""

from __future__ import annotations
from abc import ABCMeta, abstractmethod
from typing import Optional, Sequence

from nnrules.arith.rational import Rational
from nnrules.arith.vector import QMatrix, mat_vec
from nnrules.error import DimensionError
from nnrules.network.base import Network
from nnrules.rules.formula import Formula, Relation, eval_formula, formula_dim, is_paraxial


"""Rule kinds."""
PROPOSITIONAL = 'propositional'
OBLIQUE = 'oblique'
MOFN = 'mofn'
MONOTONICITY = 'monotonicity'
TOTAL_MONOTONICITY = 'total_monotonicity'


class Rule(metaclass=ABCMeta):
    """Abstract base class for rules."""
    @abstractmethod
    def check_dims(self, net: Network):
        """Raise a dimension error if the rule does not fit the network.

        Parameters
        ----------
        net: nnrules.network.base.Network

        Raises
        ------
        nnrules.error.DimensionError
        """
        raise NotImplementedError()  # pragma: no cover

    def is_pairwise(self) -> bool:
        """Test if the rule talks about pairs of inputs."""
        return False

    @property
    @abstractmethod
    def kind(self) -> str:
        raise NotImplementedError()  # pragma: no cover

    @abstractmethod
    def violated_by(
        self, net: Network, x: Sequence[Rational],
        y: Optional[Sequence[Rational]] = None
    ) -> bool:
        """Test if the rule is violated by the given input (or pair of
        inputs for monotonicity rules) using direct evaluation of the
        network.

        Parameters
        ----------
        net: nnrules.network.base.Network
        x: nnrules.arith.vector.QVector
        y: nnrules.arith.vector.QVector, default=None

        Returns
        -------
        bool
        """
        raise NotImplementedError()  # pragma: no cover


class ConditionalRule(Rule):
    """Rule cond => concl with formulas over the input and the output space.
    """
    def __init__(self, cond: Formula, concl: Formula):
        """Initialize the conditional part and the conclusion part.

        Parameters
        ----------
        cond: nnrules.rules.formula.Formula
            Formula over the network inputs.
        concl: nnrules.rules.formula.Formula
            Formula over the network outputs.
        """
        self.cond = cond
        self.concl = concl

    def __eq__(self, other) -> bool:
        return (
            type(self) is type(other) and self.cond == other.cond
            and self.concl == other.concl
        )

    def __repr__(self) -> str:
        return '<{} {} => {}>'.format(self.kind, self.cond, self.concl)

    def check_dims(self, net: Network):
        check_formula_dim(self.cond, net.input_dim, 'conditional part')
        check_formula_dim(self.concl, net.output_dim, 'conclusion')

    def violated_by(self, net, x, y=None):
        return eval_formula(self.cond, x) and not eval_formula(self.concl, net.evaluate(x))


class PropositionalRule(ConditionalRule):
    """Rule whose conditional part only uses paraxial atoms."""
    def __init__(self, cond: Formula, concl: Formula):
        """Initialize the formulas.

        Raises
        ------
        ValueError
        """
        if not is_paraxial(cond):
            raise ValueError('conditional part of propositional rule is not paraxial')
        super(PropositionalRule, self).__init__(cond=cond, concl=concl)

    @property
    def kind(self) -> str:
        return PROPOSITIONAL


class ObliqueRule(ConditionalRule):
    """Rule with Boolean combinations of arbitrary half-spaces."""
    @property
    def kind(self) -> str:
        return OBLIQUE


class MofNRule(Rule):
    """Rule whose conditional part holds if the number of satisfied parts
    compares to a threshold r using one of <=, = or >=.
    """
    def __init__(self, parts: Sequence[Formula], cmp: Relation, r: int, concl: Formula):
        """Initialize the rule components.

        Parameters
        ----------
        parts: list of nnrules.rules.formula.Formula
            Formulas phi_1, ..., phi_t over the network inputs.
        cmp: nnrules.rules.formula.Relation
            One of LE, EQ or GE.
        r: int
            Threshold. Thresholds above t are allowed (the conditional part
            is then unsatisfiable for EQ and GE).
        concl: nnrules.rules.formula.Formula
            Formula over the network outputs.

        Raises
        ------
        ValueError
        """
        if cmp not in (Relation.LE, Relation.EQ, Relation.GE):
            raise ValueError("invalid MofN comparator '{}'".format(cmp.value))
        if r < 0:
            raise ValueError('invalid MofN threshold {}'.format(r))
        self.parts = tuple(parts)
        self.cmp = cmp
        self.r = r
        self.concl = concl

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MofNRule) and self.parts == other.parts
            and self.cmp == other.cmp and self.r == other.r
            and self.concl == other.concl
        )

    def __repr__(self) -> str:
        return '<mofn |{}| {} {} => {}>'.format(
            len(self.parts), self.cmp.value, self.r, self.concl
        )

    def check_dims(self, net: Network):
        for f in self.parts:
            check_formula_dim(f, net.input_dim, 'MofN part')
        check_formula_dim(self.concl, net.output_dim, 'conclusion')

    def count_holds(self, count: int) -> bool:
        """Test if the given number of satisfied parts satisfies the
        conditional part.
        """
        return self.cmp.compare(count, self.r)

    @property
    def kind(self) -> str:
        return MOFN

    def violated_by(self, net, x, y=None):
        if not self.count_holds(mofn_count_satisfied(self.parts, x)):
            return False
        return not eval_formula(self.concl, net.evaluate(x))


class MonotonicityRule(Rule):
    """Rule (A, i): if x is classified i and Ax <= Ay then y is classified
    i. The class index i starts at 1.
    """
    def __init__(self, A: QMatrix, i: int):
        """Initialize the comparison matrix and the class index.

        Parameters
        ----------
        A: nnrules.arith.vector.QMatrix
        i: int
            Class index (1-based).

        Raises
        ------
        ValueError
        """
        if i < 1:
            raise ValueError('invalid class index {}'.format(i))
        self.A = A
        self.i = i

    def __eq__(self, other) -> bool:
        return type(self) is type(other) and self.A == other.A and self.i == other.i

    def __repr__(self) -> str:
        return '<{} {}x{} i={}>'.format(self.kind, self.A.rows, self.A.cols, self.i)

    def check_dims(self, net: Network):
        if self.A.cols != net.input_dim:
            raise DimensionError(
                'matrix with {} columns for network with {} inputs'.format(
                    self.A.cols,
                    net.input_dim
                )
            )
        if self.i > net.output_dim:
            raise DimensionError(
                'class index {} for network with {} outputs'.format(self.i, net.output_dim)
            )

    def is_pairwise(self) -> bool:
        return True

    @property
    def kind(self) -> str:
        return MONOTONICITY

    def precedes(self, x: Sequence[Rational], y: Sequence[Rational]) -> bool:
        """Test Ax <= Ay componentwise."""
        return all(a <= b for a, b in zip(mat_vec(self.A, x), mat_vec(self.A, y)))

    def violated_by(self, net, x, y=None):
        if y is None:
            raise ValueError('monotonicity rules are violated by pairs of inputs')
        return (
            classified(net, x, self.i) and self.precedes(x, y)
            and not classified(net, y, self.i)
        )


class TotalMonotonicityRule(MonotonicityRule):
    """Rule (A, i): Ax <= Ay implies N(x)_i <= N(y)_i."""
    @property
    def kind(self) -> str:
        return TOTAL_MONOTONICITY

    def violated_by(self, net, x, y=None):
        if y is None:
            raise ValueError('monotonicity rules are violated by pairs of inputs')
        if not self.precedes(x, y):
            return False
        return net.evaluate(x)[self.i - 1] > net.evaluate(y)[self.i - 1]


# -- Helper Functions ---------------------------------------------------------

def check_formula_dim(formula: Formula, dim: int, name: str):
    """Raise a dimension error if the formula is over a space of different
    dimension.
    """
    fdim = formula_dim(formula)
    if fdim is not None and fdim != dim:
        raise DimensionError('{} over {} variables, expected {}'.format(name, fdim, dim))


def classified(net: Network, x: Sequence[Rational], i: int) -> bool:
    """Test if input x is classified i (1-based) by the network. For
    classifying and Boolean networks this means N(x)_i = 1. For other
    networks output i has to be a maximal entry of the output layer.

    Parameters
    ----------
    net: nnrules.network.base.Network
    x: nnrules.arith.vector.QVector
    i: int

    Returns
    -------
    bool
    """
    if net.classifying or net.boolean:
        return net.evaluate(x)[i - 1] == 1
    out = net.raw(x)
    return out[i - 1] == max(out)


def mofn_count_satisfied(parts: Sequence[Formula], x: Sequence[Rational]) -> int:
    """Count the number of formulas that are satisfied at x.

    Parameters
    ----------
    parts: list of nnrules.rules.formula.Formula
    x: nnrules.arith.vector.QVector

    Returns
    -------
    int

    Raises
    ------
    nnrules.error.DimensionError
    """
    return sum(1 for f in parts if eval_formula(f, x))
