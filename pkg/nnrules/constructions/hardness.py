# This file is part of the Neural Network Rule Verifier (nnrules).
#
# Copyright (C) 2026 The nnrules developers.
#
# nnrules is released under the Revised BSD License. See file LICENSE for
# full license details.

"""Generators for verification instances whose outcome is determined by the
satisfiability of a propositional formula. They realize the reductions that
show hardness of rule verification and of deciding consistency and
exhaustiveness of rule sets.
"""

from dataclasses import dataclass
from typing import List, Optional, Union

from nnrules.arith.vector import QMatrix, QVector
from nnrules.constructions.cnf import CNFFormula, Literal, brute_force_sat
from nnrules.constructions.instance import (
    CONSISTENT, CONTRADICTORY, DEFECTIVE, EXHAUSTIVE, FAILS, HOLDS,
    VerificationInstance
)
from nnrules.network.base import Activation, Layer, Network
from nnrules.network.boolean import (
    BoolAnd, BoolConst, BoolFormula, BoolNot, BoolOr, BoolVar, compile_boolean_formula
)
from nnrules.network.gadget import constant_network
from nnrules.rules.base import MonotonicityRule, PropositionalRule, Rule
from nnrules.rules.formula import (
    FALSE, TRUE, Formula, Not, box, conjunction, disjunction, interval
)


"""Instance kinds."""
BOOL_MONOTONICITY = 'bool-mono'
BOOL_PROPOSITIONAL = 'bool-prop'
CONSISTENCY = 'consistency'
EXHAUSTIVENESS = 'exhaustiveness'
SAT = 'sat'
KINDS = [SAT, BOOL_MONOTONICITY, BOOL_PROPOSITIONAL, CONSISTENCY, EXHAUSTIVENESS]


@dataclass(frozen=True)
class TriviallyTrue:
    """Result of a generator when the outcome is decided without building
    an instance.
    """
    reason: str


"""Type alias for Boolean formula inputs."""
BooleanInput = Union[BoolFormula, CNFFormula]


# -- Rule verification --------------------------------------------------------

def generate_sat_instance(
    formula: CNFFormula, with_truth: Optional[bool] = False
) -> VerificationInstance:
    """Get a ReLU network and a propositional rule that holds if and only if
    the formula is unsatisfiable. On [0,1]^n the network computes

        v_i = f(2x_i - 1), w_i = f(1 - 2x_i)         (literals)
        c_k = f(sum of the literals of clause k)     (clauses)
        N(x) = ReLU(c_1 + ... + c_q - (q - 1))

    with the clamp f(z) = ReLU(ReLU(z) - ReLU(z - 1)). The rule states
    x in [0,1]^n implies N(x) in [0, 1). Clauses are padded to width 3.

    Parameters
    ----------
    formula: nnrules.constructions.cnf.CNFFormula
    with_truth: bool, default=False
        Decide satisfiability by enumeration and record the expected
        outcome.

    Returns
    -------
    nnrules.constructions.instance.VerificationInstance

    Raises
    ------
    ValueError
    """
    if formula.num_clauses == 0:
        raise ValueError('formula without clauses')
    formula = formula.padded()
    n, q = formula.num_vars, formula.num_clauses
    # Literals: ReLU(2x - 1), ReLU(2x - 2), ReLU(1 - 2x), ReLU(-2x).
    rows, biases = list(), list()
    for i in range(n):
        for weight, bias in [(2, -1), (2, -2), (-2, 1), (-2, 0)]:
            row = [0] * n
            row[i] = weight
            rows.append(row)
            biases.append(bias)
    layers = [Layer(QMatrix.from_rows(rows), QVector(biases), Activation.RELU)]
    rows = list()
    for i in range(2 * n):
        row = [0] * (4 * n)
        row[2 * i], row[2 * i + 1] = 1, -1
        rows.append(row)
    layers.append(Layer(QMatrix.from_rows(rows), QVector.zeros(2 * n), Activation.RELU))
    # Clauses: ReLU(s), ReLU(s - 1) for the literal sum s, then the clamp.
    rows, biases = list(), list()
    for clause in formula.clauses:
        row = [0] * (2 * n)
        for lit in clause:
            row[literal_position(lit)] += 1
        rows.extend([row, list(row)])
        biases.extend([0, -1])
    layers.append(Layer(QMatrix.from_rows(rows), QVector(biases), Activation.RELU))
    rows = list()
    for k in range(q):
        row = [0] * (2 * q)
        row[2 * k], row[2 * k + 1] = 1, -1
        rows.append(row)
    layers.append(Layer(QMatrix.from_rows(rows), QVector.zeros(q), Activation.RELU))
    layers.append(Layer(QMatrix.from_rows([[1] * q]), QVector([-(q - 1)]), Activation.RELU))
    rule = PropositionalRule(
        cond=box([0] * n, [1] * n),
        concl=interval(1, 0, lower=0, upper=1, upper_open=True)
    )
    return VerificationInstance(
        net=Network(input_dim=n, layers=layers),
        rules=[rule],
        kind=SAT,
        ground_truth=verification_truth(formula) if with_truth else None,
        properties={'variables': n, 'clauses': q}
    )


def generate_boolean_monotonicity_instance(
    formula: BooleanInput, num_vars: Optional[int] = None,
    with_truth: Optional[bool] = False
) -> Union[VerificationInstance, TriviallyTrue]:
    """Get the Boolean network N_F for the formula together with the
    monotonicity rule (I, 1). If F(1, ..., 1) holds the result is trivially
    true. Otherwise the rule fails if and only if F is satisfiable.

    Parameters
    ----------
    formula: nnrules.network.boolean.BoolFormula or nnrules.constructions.cnf.CNFFormula
    num_vars: int, default=None
    with_truth: bool, default=False

    Returns
    -------
    nnrules.constructions.instance.VerificationInstance or nnrules.constructions.hardness.TriviallyTrue
    """
    tree, n = boolean_tree(formula, num_vars)
    if tree.evaluate([1] * n):
        return TriviallyTrue(reason='formula holds for (1, ..., 1)')
    return VerificationInstance(
        net=compile_boolean_formula(tree, n),
        rules=[MonotonicityRule(A=QMatrix.identity(n), i=1)],
        kind=BOOL_MONOTONICITY,
        ground_truth=verification_truth(tree, n) if with_truth else None,
        properties={'variables': n}
    )


def generate_boolean_propositional_instance(
    formula: BooleanInput, num_vars: Optional[int] = None,
    net: Optional[Network] = None, with_truth: Optional[bool] = False
) -> VerificationInstance:
    """Get a Boolean network and a propositional rule with the formula as
    conditional part and a conclusion that never holds. Variables are read
    as x_j >= 1 and negated variables as x_j <= 0. The rule fails if and only
    if the formula is satisfiable.

    Parameters
    ----------
    formula: nnrules.network.boolean.BoolFormula or nnrules.constructions.cnf.CNFFormula
    num_vars: int, default=None
    net: nnrules.network.base.Network, default=None
        Boolean network with n inputs. By default the constant false
        network.
    with_truth: bool, default=False

    Returns
    -------
    nnrules.constructions.instance.VerificationInstance
    """
    tree, n = boolean_tree(formula, num_vars)
    if net is None:
        net = compile_boolean_formula(BoolConst(False), n)
    return VerificationInstance(
        net=net,
        rules=[PropositionalRule(cond=boolean_condition(tree, n), concl=FALSE)],
        kind=BOOL_PROPOSITIONAL,
        ground_truth=verification_truth(tree, n) if with_truth else None,
        properties={'variables': n}
    )


# -- Rule sets ----------------------------------------------------------------

def generate_consistency_instance(formula: CNFFormula) -> List[Rule]:
    """Get a set of propositional rules over [0,1]^n that is consistent if
    and only if the formula is unsatisfiable. The rules demand that the
    network is zero on the cube, one on the satisfying Boolean vertices and
    zero on the falsifying Boolean vertices.

    Parameters
    ----------
    formula: nnrules.constructions.cnf.CNFFormula

    Returns
    -------
    list of nnrules.rules.base.Rule
    """
    n = formula.num_vars
    cube = box([0] * n, [1] * n)
    vertex = conjunction([
        disjunction([interval(n, i, 0, 0), interval(n, i, 1, 1)]) for i in range(n)
    ])
    satisfied = conjunction([
        disjunction([
            interval(n, var - 1, 1, 1) if pol else interval(n, var - 1, 0, 0)
            for var, pol in clause
        ])
        for clause in formula.clauses
    ])
    zero = interval(1, 0, 0, 0)
    one = interval(1, 0, 1, 1)
    return [
        PropositionalRule(cond=cube, concl=zero),
        PropositionalRule(cond=conjunction([cube, vertex, satisfied]), concl=one),
        PropositionalRule(cond=conjunction([cube, vertex, Not(satisfied)]), concl=zero)
    ]


def generate_exhaustiveness_instance(formula: CNFFormula) -> List[Rule]:
    """Get a propositional rule that demands N(x) = 0 everywhere except on
    the open unit boxes (v, v + 1) of the satisfying Boolean vertices v.
    Coordinate x_i in (1, 2) reads as x_i true and x_i in (0, 1) as false.
    The rule set is exhaustive if and only if the formula is
    unsatisfiable.

    Parameters
    ----------
    formula: nnrules.constructions.cnf.CNFFormula

    Returns
    -------
    list of nnrules.rules.base.Rule
    """
    n = formula.num_vars

    def cell(index: int, value: bool) -> Formula:
        lower = 1 if value else 0
        return interval(n, index, lower, lower + 1, lower_open=True, upper_open=True)

    interior = conjunction(
        [disjunction([cell(i, False), cell(i, True)]) for i in range(n)]
        + [
            disjunction([cell(var - 1, pol) for var, pol in clause])
            for clause in formula.clauses
        ]
    )
    return [PropositionalRule(cond=Not(interior), concl=interval(1, 0, 0, 0))]


def rule_set_instance(
    formula: CNFFormula, kind: str, with_truth: Optional[bool] = False
) -> VerificationInstance:
    """Bundle the consistency or exhaustiveness rule set for the formula
    with the constant zero network. The zero network obeys the consistency
    rules if and only if they are consistent, and it always obeys the
    exhaustiveness rule.

    Parameters
    ----------
    formula: nnrules.constructions.cnf.CNFFormula
    kind: string
        Either CONSISTENCY or EXHAUSTIVENESS.
    with_truth: bool, default=False

    Returns
    -------
    nnrules.constructions.instance.VerificationInstance

    Raises
    ------
    ValueError
    """
    truth = None
    if kind == CONSISTENCY:
        rules = generate_consistency_instance(formula)
        if with_truth:
            truth = CONSISTENT if brute_force_sat(formula) is None else CONTRADICTORY
    elif kind == EXHAUSTIVENESS:
        rules = generate_exhaustiveness_instance(formula)
        if with_truth:
            truth = EXHAUSTIVE if brute_force_sat(formula) is None else DEFECTIVE
    else:
        raise ValueError("unknown rule set kind '{}'".format(kind))
    return VerificationInstance(
        net=constant_network(formula.num_vars, [0]),
        rules=rules,
        kind=kind,
        ground_truth=truth,
        properties={'variables': formula.num_vars, 'clauses': formula.num_clauses}
    )


# -- Helper Functions ---------------------------------------------------------

def boolean_condition(formula: BoolFormula, n: int) -> Formula:
    """Translate a Boolean formula into a paraxial formula over R^n that
    agrees with it on {0,1}^n.
    """
    if isinstance(formula, BoolConst):
        return TRUE if formula.value else FALSE
    elif isinstance(formula, BoolVar):
        return interval(n, formula.index - 1, lower=1)
    elif isinstance(formula, BoolNot):
        if isinstance(formula.child, BoolVar):
            return interval(n, formula.child.index - 1, upper=0)
        return Not(boolean_condition(formula.child, n))
    elif isinstance(formula, BoolAnd):
        return conjunction([boolean_condition(c, n) for c in formula.children])
    elif isinstance(formula, BoolOr):
        return disjunction([boolean_condition(c, n) for c in formula.children])
    raise ValueError("non-Boolean formula element '{}'".format(formula))


def boolean_tree(formula: BooleanInput, num_vars: Optional[int] = None):
    """Get the formula tree and the number of variables for a Boolean
    formula or a CNF formula.
    """
    if isinstance(formula, CNFFormula):
        return formula.to_formula(), num_vars if num_vars is not None else formula.num_vars
    if num_vars is None:
        num_vars = max(formula.variables(), default=0)
    if num_vars < 1:
        raise ValueError('formula without variables requires num_vars')
    return formula, num_vars


def literal_position(literal: Literal) -> int:
    """Position of the literal node in the second layer of the SAT network.
    """
    var, pol = literal
    return 2 * (var - 1) + (0 if pol else 1)


def verification_truth(formula: BooleanInput, n: Optional[int] = None) -> str:
    """Expected verification outcome for instances whose rule holds if and
    only if the formula is unsatisfiable.
    """
    if isinstance(formula, CNFFormula):
        satisfiable = brute_force_sat(formula) is not None
    else:
        satisfiable = any(
            formula.evaluate(x) for x in boolean_points(n)
        )
    return FAILS if satisfiable else HOLDS


def boolean_points(n: int):
    """Iterate over {0,1}^n in lexicographic order."""
    for k in range(2 ** n):
        yield [(k >> (n - 1 - i)) & 1 for i in range(n)]
