# This file is part of the Neural Network Rule Verifier (nnrules).
#
# Copyright (C) 2026 The nnrules developers.
#
# nnrules is released under the Revised BSD License. See file LICENSE for
# full license details.

"""Exact feasibility checks for conjunctions of strict and non-strict linear
constraints over free rational variables.

Strict constraints share one slack variable d: a.v < b becomes a.v + d <= b
and a.v > b becomes a.v - d >= b. The closed system is solved maximizing d
subject to 0 <= d <= 1. The original system is feasible if and only if the
maximum is positive. The bound on d does not change the answer since any
positive d certifies the open system.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence

from nnrules.arith.vector import QVector
from nnrules.error import DimensionError
from nnrules.lp.simplex import OPTIMAL, solve
from nnrules.rules.formula import LinearAtom, Relation


class LinearSystem(object):
    """Conjunction of linear atoms over a space of fixed dimension."""
    def __init__(self, dim: int, constraints: Optional[Sequence[LinearAtom]] = None):
        """Initialize the dimension and the list of constraints.

        Parameters
        ----------
        dim: int
            Number of variables.
        constraints: list of nnrules.rules.formula.LinearAtom, default=None

        Raises
        ------
        nnrules.error.DimensionError
        """
        self.dim = dim
        self.constraints: List[LinearAtom] = list()
        for c in constraints if constraints is not None else []:
            self.add(c)

    def __len__(self) -> int:
        return len(self.constraints)

    def add(self, constraint: LinearAtom):
        """Add a constraint to the system.

        Raises
        ------
        nnrules.error.DimensionError
        """
        if constraint.dim != self.dim:
            raise DimensionError(
                'constraint over {} variables for system over {}'.format(constraint.dim, self.dim)
            )
        self.constraints.append(constraint)

    def extend(self, constraints: Sequence[LinearAtom]):
        """Add a list of constraints to the system."""
        for c in constraints:
            self.add(c)

    def is_satisfied(self, v: Sequence[Fraction]) -> bool:
        """Test if all constraints hold at the given point."""
        return all(c.holds(v) for c in self.constraints)


@dataclass
class FeasibilityResult:
    """Outcome of a feasibility check. The witness is set if (and only if)
    the system is feasible.
    """
    witness: Optional[QVector] = None
    # Number of simplex pivots.
    pivots: int = 0

    @property
    def feasible(self) -> bool:
        return self.witness is not None


def check_feasible(system: LinearSystem) -> FeasibilityResult:
    """Decide whether the system has a rational solution. If it does, the
    result contains a solution that satisfies all constraints exactly.

    Parameters
    ----------
    system: nnrules.lp.feasibility.LinearSystem

    Returns
    -------
    nnrules.lp.feasibility.FeasibilityResult

    Raises
    ------
    RuntimeError
    """
    d = system.dim
    if not system.constraints:
        return FeasibilityResult(witness=QVector.zeros(d))
    strict = any(c.rel.is_strict() for c in system.constraints)
    # Free variables are split into v = p - q with p, q >= 0. The last
    # column is the slack d for strict constraints.
    width = 2 * d + (1 if strict else 0)
    rows, rhs = list(), list()

    def append(coeffs, const, negate, slack):
        if negate:
            coeffs = [-c for c in coeffs]
            const = -const
        row = list(coeffs) + [-c for c in coeffs]
        if strict:
            row.append(Fraction(1) if slack else Fraction(0))
        rows.append(row)
        rhs.append(const)

    for c in system.constraints:
        coeffs = c.coeffs.to_list()
        if c.rel in (Relation.LE, Relation.EQ):
            append(coeffs, c.const, False, False)
        if c.rel in (Relation.GE, Relation.EQ):
            append(coeffs, c.const, True, False)
        if c.rel == Relation.LT:
            append(coeffs, c.const, False, True)
        elif c.rel == Relation.GT:
            append(coeffs, c.const, True, True)
    if strict:
        rows.append([Fraction(0)] * (width - 1) + [Fraction(1)])
        rhs.append(Fraction(1))
        objective = [Fraction(0)] * (width - 1) + [Fraction(1)]
    else:
        objective = [Fraction(0)] * width
    solution = solve(num_vars=width, rows=rows, rhs=rhs, objective=objective)
    if solution.status != OPTIMAL or (strict and solution.value <= 0):
        return FeasibilityResult(pivots=solution.pivots)
    x = solution.x
    witness = QVector(x[i] - x[d + i] for i in range(d))
    if not system.is_satisfied(witness):
        raise RuntimeError('simplex returned invalid witness {}'.format(witness))
    return FeasibilityResult(witness=witness, pivots=solution.pivots)
