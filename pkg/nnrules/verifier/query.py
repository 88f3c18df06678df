# This file is part of the Neural Network Rule Verifier (nnrules).
#
# Copyright (C) 2026 The nnrules developers.
#
# nnrules is released under the Revised BSD License. See file LICENSE for
# full license details.

"""Translation of rules into violation queries. A violation query describes
the inputs that violate a rule as a formula over the inputs and the outputs
of a (non-classifying) target network:

- propositional and oblique rules: cond(x) and not concl(N(x)),
- MofN rules: the number of satisfied parts compares to r and not
  concl(N(x)),
- monotonicity rules: on the parallel product of the network, Ax <= Ay, x is
  classified i and y is not,
- total monotonicity rules: on the parallel product, Ax <= Ay and
  N(x)_i > N(y)_i.

For classifying networks the search branches over the set of maximal
outputs instead of conclusion atoms.
"""

from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple

from nnrules.arith.vector import QVector
from nnrules.network.base import Network
from nnrules.network.compose import parallel_product
from nnrules.rules.base import ConditionalRule, MofNRule, MonotonicityRule, Rule
from nnrules.rules.base import TotalMonotonicityRule
from nnrules.rules.formula import (
    Formula, LinearAtom, Not, Relation, Atom, TRUE, conjunction, to_nnf
)


@dataclass(frozen=True)
class Counterexample:
    """Input (or pair of inputs for monotonicity rules) that violates a rule.
    """
    x: QVector
    y: Optional[QVector] = None

    def is_pair(self) -> bool:
        return self.y is not None


@dataclass
class ViolationQuery:
    """Description of the inputs that violate a rule."""
    # Rule and network under verification.
    rule: Rule
    net: Network
    # Network whose inputs and outputs the formulas talk about.
    target: Network
    # Branch over the set of maximal outputs of the target network.
    classifying: bool
    # MofN parts over the target inputs and the filter on their count.
    parts: Tuple[Formula, ...]
    count_filter: Optional[Callable[[int], bool]]
    # Formula over the target inputs (negation normal form).
    cond: Formula
    # Formula over the target outputs that holds for violations (negation
    # normal form).
    concl: Formula

    def counterexample(self, w: QVector) -> Counterexample:
        """Get the counterexample for a point in the target input space."""
        if self.rule.is_pairwise():
            n = self.net.input_dim
            return Counterexample(x=w[:n], y=w[n:])
        return Counterexample(x=w)

    def violated(self, cex: Counterexample) -> bool:
        """Validate a counterexample by direct evaluation of the rule."""
        return self.rule.violated_by(self.net, cex.x, cex.y)


def build_query(net: Network, rule: Rule) -> ViolationQuery:
    """Get the violation query for a rule and a network.

    Parameters
    ----------
    net: nnrules.network.base.Network
    rule: nnrules.rules.base.Rule

    Returns
    -------
    nnrules.verifier.query.ViolationQuery

    Raises
    ------
    nnrules.error.DimensionError
    """
    rule.check_dims(net)
    if isinstance(rule, ConditionalRule):
        return ViolationQuery(
            rule=rule,
            net=net,
            target=net.unclassified(),
            classifying=net.classifying,
            parts=tuple(),
            count_filter=None,
            cond=to_nnf(rule.cond),
            concl=to_nnf(rule.concl, negate=True)
        )
    elif isinstance(rule, MofNRule):
        return ViolationQuery(
            rule=rule,
            net=net,
            target=net.unclassified(),
            classifying=net.classifying,
            parts=rule.parts,
            count_filter=rule.count_holds,
            cond=TRUE,
            concl=to_nnf(rule.concl, negate=True)
        )
    assert isinstance(rule, MonotonicityRule)
    n, m = net.input_dim, net.output_dim
    boolean = net.boolean and not net.classifying
    if isinstance(rule, TotalMonotonicityRule) and not net.classifying:
        coeffs = [0] * (2 * m)
        coeffs[rule.i - 1] = 1
        coeffs[m + rule.i - 1] = -1
        concl = Atom(LinearAtom(QVector(coeffs), Relation.GT, 0))
    else:
        concl = to_nnf(conjunction([
            classified_formula(m, rule.i, 0, 2 * m, boolean),
            Not(classified_formula(m, rule.i, m, 2 * m, boolean))
        ]))
    return ViolationQuery(
        rule=rule,
        net=net,
        target=parallel_product(net.unclassified()),
        classifying=False,
        parts=tuple(),
        count_filter=None,
        cond=precedes_formula(rule, n),
        concl=concl
    )


# -- Helper Functions ---------------------------------------------------------

def classified_formula(m: int, i: int, offset: int, dim: int, boolean: bool) -> Formula:
    """Get the formula stating that the output block of m values that starts
    at the given offset is classified i (1-based). For Boolean networks the
    formula is o_i >= 1. Otherwise o_i - o_j >= 0 for all j != i.

    Parameters
    ----------
    m: int
        Number of outputs per block.
    i: int
        Class index (1-based).
    offset: int
        Position of the first output of the block.
    dim: int
        Dimension of the ambient output space.
    boolean: bool
        Use the Boolean output semantics.

    Returns
    -------
    nnrules.rules.formula.Formula
    """
    if boolean:
        return Atom(LinearAtom(QVector.unit(dim, offset + i - 1), Relation.GE, 1))
    atoms: List[Formula] = list()
    for j in range(m):
        if j != i - 1:
            coeffs = [0] * dim
            coeffs[offset + i - 1] = 1
            coeffs[offset + j] = -1
            atoms.append(Atom(LinearAtom(QVector(coeffs), Relation.GE, 0)))
    return conjunction(atoms)


def precedes_formula(rule: MonotonicityRule, n: int) -> Formula:
    """Get the formula Ax - Ay <= 0 over the joint space of (x, y).

    Parameters
    ----------
    rule: nnrules.rules.base.MonotonicityRule
    n: int
        Input dimension of the network.

    Returns
    -------
    nnrules.rules.formula.Formula
    """
    atoms: List[Formula] = list()
    for k in range(rule.A.rows):
        row = rule.A.row(k).to_list()
        coeffs = QVector(row + [-v for v in row])
        atoms.append(Atom(LinearAtom(coeffs, Relation.LE, 0)))
    return conjunction(atoms)
