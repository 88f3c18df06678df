# This file is part of the Neural Network Rule Verifier (nnrules).
#
# Copyright (C) 2026 The nnrules developers.
#
# nnrules is released under the Revised BSD License. See file LICENSE for
# full license details.

"""Reductions between rule kinds. Propositional rules are oblique rules,
and oblique rules are MofN rules with a single part that has to hold
exactly once. Monotonicity rules reduce to oblique rules over the parallel
product of the network, and total monotonicity rules reduce to monotonicity
rules over a network with one additional pass-through input.
"""

from typing import List, Sequence, Tuple

from nnrules.arith.vector import QMatrix, QVector
from nnrules.error import UnsupportedError
from nnrules.network.base import Activation, Layer, Network
from nnrules.network.compose import parallel_product, select_outputs, stack
from nnrules.network.gadget import identity_network
from nnrules.rules.base import ConditionalRule, MofNRule, MonotonicityRule, ObliqueRule
from nnrules.rules.base import PropositionalRule, Rule, TotalMonotonicityRule
from nnrules.rules.formula import Atom, LinearAtom, Not, Relation, disjunction
from nnrules.verifier.query import classified_formula, precedes_formula


def embed_propositional_as_oblique(rule: PropositionalRule) -> ObliqueRule:
    """Get the propositional rule as an oblique rule with the same
    formulas.

    Parameters
    ----------
    rule: nnrules.rules.base.PropositionalRule

    Returns
    -------
    nnrules.rules.base.ObliqueRule

    Raises
    ------
    nnrules.error.UnsupportedError
    """
    if not isinstance(rule, PropositionalRule):
        raise UnsupportedError('expected propositional rule, got {}'.format(rule.kind))
    return ObliqueRule(cond=rule.cond, concl=rule.concl)


def embed_oblique_as_mofn(rule: ConditionalRule) -> MofNRule:
    """Get the oblique (or propositional) rule as an MofN rule with the
    conditional part as its only part, comparison '=' and threshold 1.

    Parameters
    ----------
    rule: nnrules.rules.base.ConditionalRule

    Returns
    -------
    nnrules.rules.base.MofNRule

    Raises
    ------
    nnrules.error.UnsupportedError
    """
    if not isinstance(rule, ConditionalRule):
        raise UnsupportedError('expected oblique rule, got {}'.format(rule.kind))
    return MofNRule(parts=[rule.cond], cmp=Relation.EQ, r=1, concl=rule.concl)


def embed_as_mofn(rules: Sequence[Rule]) -> List[MofNRule]:
    """Get a list of MofN rules that is equivalent to the given list of
    propositional, oblique and MofN rules.
    """
    result = list()
    for rule in rules:
        if isinstance(rule, MofNRule):
            result.append(rule)
        else:
            result.append(embed_oblique_as_mofn(rule))
    return result


def reduce_monotonicity_to_oblique(
    net: Network, rule: MonotonicityRule
) -> Tuple[Network, ObliqueRule]:
    """Reduce a (total) monotonicity rule to an oblique rule over the
    parallel product N'(x, y) = (N(x), N(y)). The conditional part encodes
    Ax <= Ay. The conclusion part states that y is classified i whenever x
    is (or N(x)_i <= N(y)_i for total monotonicity rules on
    non-classifying networks).

    For classifying networks the product is built from the raw network and
    classification is expressed by comparing raw outputs. Total
    monotonicity on a classifying network coincides with monotonicity.

    Parameters
    ----------
    net: nnrules.network.base.Network
    rule: nnrules.rules.base.MonotonicityRule

    Returns
    -------
    (nnrules.network.base.Network, nnrules.rules.base.ObliqueRule)

    Raises
    ------
    nnrules.error.DimensionError
    nnrules.error.UnsupportedError
    """
    if not isinstance(rule, MonotonicityRule):
        raise UnsupportedError('expected monotonicity rule, got {}'.format(rule.kind))
    rule.check_dims(net)
    n, m = net.input_dim, net.output_dim
    if isinstance(rule, TotalMonotonicityRule) and not net.classifying:
        coeffs = [0] * (2 * m)
        coeffs[rule.i - 1] = 1
        coeffs[m + rule.i - 1] = -1
        concl = Atom(LinearAtom(QVector(coeffs), Relation.LE, 0))
    else:
        boolean = net.boolean and not net.classifying
        concl = disjunction([
            Not(classified_formula(m, rule.i, 0, 2 * m, boolean)),
            classified_formula(m, rule.i, m, 2 * m, boolean)
        ])
    product = parallel_product(net.unclassified())
    return product, ObliqueRule(cond=precedes_formula(rule, n), concl=concl)


def reduce_total_to_monotonicity(
    net: Network, rule: TotalMonotonicityRule
) -> Tuple[Network, MonotonicityRule]:
    """Reduce a total monotonicity rule (A, i) to a monotonicity rule
    (A', 1) over the network N'(x, a) = (N(x)_i, a). The matrix A' extends A
    by a zero column and the rows (0, ..., 0, 1) and (0, ..., 0, -1) so that
    A'(x, a) <= A'(y, b) if and only if Ax <= Ay and a = b.

    On classifying networks total monotonicity is monotonicity; the rule is
    returned as a monotonicity rule for the raw network.

    Parameters
    ----------
    net: nnrules.network.base.Network
    rule: nnrules.rules.base.TotalMonotonicityRule

    Returns
    -------
    (nnrules.network.base.Network, nnrules.rules.base.MonotonicityRule)

    Raises
    ------
    nnrules.error.DimensionError
    nnrules.error.UnsupportedError
    """
    if not isinstance(rule, TotalMonotonicityRule):
        raise UnsupportedError('expected total monotonicity rule, got {}'.format(rule.kind))
    rule.check_dims(net)
    if net.classifying:
        return net.unclassified(), MonotonicityRule(A=rule.A, i=rule.i)
    return (
        stack([select_outputs(net, [rule.i - 1]), pass_through(net.boolean)]),
        MonotonicityRule(A=extend_matrix(rule.A), i=1)
    )


# -- Helper Functions ---------------------------------------------------------

def extend_matrix(A: QMatrix) -> QMatrix:
    """Get the (l+2) x (n+1) matrix that appends a zero column and the rows
    (0, ..., 0, 1) and (0, ..., 0, -1) to the l x n matrix A.
    """
    rows = [row + [0] for row in A.to_lists()]
    rows.append([0] * A.cols + [1])
    rows.append([0] * A.cols + [-1])
    return QMatrix.from_rows(rows, cols=A.cols + 1)


def pass_through(boolean: bool) -> Network:
    """Get the network that returns its single input. The Boolean version
    uses the copy gate H(x - 1).
    """
    if boolean:
        layer = Layer(QMatrix.identity(1), QVector([-1]), Activation.HEAVISIDE)
        return Network(input_dim=1, layers=[layer], boolean=True)
    return identity_network(1)
