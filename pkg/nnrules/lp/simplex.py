# This file is part of the Neural Network Rule Verifier (nnrules).
#
# Copyright (C) 2026 The nnrules developers.
#
# nnrules is released under the Revised BSD License. See file LICENSE for
# full license details.

"""Two-phase primal simplex over exact rationals. Solves

    maximize c.x  subject to  A x <= b, x >= 0

where entries of b may be negative. Pivoting follows Bland's rule (smallest
entering column with positive reduced cost, smallest basic variable among
rows with minimal ratio), which guarantees termination.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence

import logging

import nnrules.config as config


logger = logging.getLogger(__name__)


"""Result status of the simplex."""
INFEASIBLE = 'infeasible'
OPTIMAL = 'optimal'
UNBOUNDED = 'unbounded'


@dataclass
class LPSolution:
    """Result of solving a linear program."""
    # One of INFEASIBLE, OPTIMAL, UNBOUNDED.
    status: str
    # Optimal solution (only for OPTIMAL).
    x: Optional[List[Fraction]] = None
    # Objective value at x (only for OPTIMAL).
    value: Optional[Fraction] = None
    # Total number of pivot steps in both phases.
    pivots: int = 0


class SimplexTableau(object):
    """Dense simplex tableau. Columns are the structural variables, one slack
    variable per row, and one artificial variable per row with negative
    right-hand side. Each tableau row ends with its right-hand side. The cost
    row holds reduced costs and, in its last entry, the negated objective
    value.
    """
    def __init__(
        self, num_vars: int, rows: Sequence[Sequence[Fraction]],
        rhs: Sequence[Fraction], max_pivots: Optional[int] = None
    ):
        """Initialize the phase one tableau.

        Parameters
        ----------
        num_vars: int
            Number of structural variables.
        rows: list of list of fractions
            Constraint matrix A.
        rhs: list of fractions
            Right-hand side b.
        max_pivots: int, default=None
            Pivot ceiling. Uses config.MAX_PIVOTS() if not given.
        """
        self.num_vars = num_vars
        self.max_pivots = max_pivots if max_pivots is not None else config.MAX_PIVOTS()
        self.pivots = 0
        m = len(rows)
        negative = [i for i in range(m) if rhs[i] < 0]
        self.num_slack = m
        self.num_cols = num_vars + m + len(negative)
        self.rows: List[List[Fraction]] = list()
        self.basis: List[int] = list()
        for i in range(m):
            row = [Fraction(v) for v in rows[i]]
            row += [Fraction(0)] * (self.num_cols - num_vars) + [Fraction(rhs[i])]
            row[num_vars + i] = Fraction(1)
            if rhs[i] < 0:
                row = [-v for v in row]
                col = num_vars + m + negative.index(i)
                row[col] = Fraction(1)
                self.basis.append(col)
            else:
                self.basis.append(num_vars + i)
            self.rows.append(row)
        self.cost = [Fraction(0)] * (self.num_cols + 1)

    def dump(self) -> str:
        """Get a plain text representation of the tableau."""
        lines = list()
        for b, row in zip(self.basis, self.rows):
            lines.append('{:>4} | {} | {}'.format(
                b,
                ' '.join(str(v) for v in row[:-1]),
                row[-1]
            ))
        lines.append('   c | {} | {}'.format(
            ' '.join(str(v) for v in self.cost[:-1]),
            self.cost[-1]
        ))
        return '\n'.join(lines)

    def optimize(self, columns: int) -> str:
        """Run the primal simplex on the current cost row, considering only
        the first columns of the tableau as entering candidates.

        Parameters
        ----------
        columns: int
            Number of candidate columns.

        Returns
        -------
        string
        """
        while True:
            entering = None
            for j in range(columns):
                if self.cost[j] > 0:
                    entering = j
                    break
            if entering is None:
                return OPTIMAL
            leaving = None
            for i, row in enumerate(self.rows):
                a = row[entering]
                if a > 0:
                    key = (row[-1] / a, self.basis[i])
                    if leaving is None or key < leaving[0]:
                        leaving = (key, i)
            if leaving is None:
                return UNBOUNDED
            self.pivot(leaving[1], entering)

    def pivot(self, row: int, col: int):
        """Pivot on the tableau entry at the given row and column.

        Raises
        ------
        RuntimeError
        """
        self.pivots += 1
        if self.pivots > self.max_pivots:
            raise RuntimeError('exceeded pivot limit {}'.format(self.max_pivots))
        p = self.rows[row][col]
        prow = [v / p for v in self.rows[row]]
        self.rows[row] = prow
        for i, other in enumerate(self.rows):
            f = other[col]
            if i != row and f != 0:
                self.rows[i] = [a - f * b for a, b in zip(other, prow)]
        f = self.cost[col]
        if f != 0:
            self.cost = [a - f * b for a, b in zip(self.cost, prow)]
        self.basis[row] = col

    def set_objective(self, objective: Sequence[Fraction]):
        """Set the cost row for maximizing the given objective (over all
        tableau columns) and express it in terms of the non-basic variables.
        """
        self.cost = [Fraction(v) for v in objective] + [Fraction(0)]
        for i, b in enumerate(self.basis):
            f = self.cost[b]
            if f != 0:
                self.cost = [a - f * v for a, v in zip(self.cost, self.rows[i])]

    def solution(self) -> List[Fraction]:
        """Get the values of the structural variables in the current basic
        solution.
        """
        x = [Fraction(0)] * self.num_vars
        for i, b in enumerate(self.basis):
            if b < self.num_vars:
                x[b] = self.rows[i][-1]
        return x

    def drop_artificials(self):
        """Pivot artificial variables (at value zero) out of the basis and
        remove their columns. Rows where no pivot is possible are redundant
        and are removed.
        """
        bound = self.num_vars + self.num_slack
        rows, basis = list(), list()
        for i in range(len(self.rows)):
            if self.basis[i] >= bound:
                col = next((j for j in range(bound) if self.rows[i][j] != 0), None)
                if col is not None:
                    self.pivot(i, col)
        for i, row in enumerate(self.rows):
            if self.basis[i] < bound:
                rows.append(row[:bound] + [row[-1]])
                basis.append(self.basis[i])
        self.rows = rows
        self.basis = basis
        self.num_cols = bound


def solve(
    num_vars: int, rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction],
    objective: Sequence[Fraction], max_pivots: Optional[int] = None
) -> LPSolution:
    """Maximize objective.x subject to rows x <= rhs, x >= 0.

    Parameters
    ----------
    num_vars: int
        Number of variables.
    rows: list of list of fractions
        Constraint matrix.
    rhs: list of fractions
        Right-hand side.
    objective: list of fractions
        Objective coefficients.
    max_pivots: int, default=None
        Pivot ceiling.

    Returns
    -------
    nnrules.lp.simplex.LPSolution

    Raises
    ------
    RuntimeError
    """
    tableau = SimplexTableau(num_vars=num_vars, rows=rows, rhs=rhs, max_pivots=max_pivots)
    # Phase one: maximize the negated sum of artificial variables.
    bound = num_vars + tableau.num_slack
    if tableau.num_cols > bound:
        tableau.set_objective([0] * bound + [-1] * (tableau.num_cols - bound))
        tableau.optimize(columns=tableau.num_cols)
        if tableau.cost[-1] != 0:
            logger.debug('infeasible after phase one\n%s', tableau.dump())
            return LPSolution(status=INFEASIBLE, pivots=tableau.pivots)
        tableau.drop_artificials()
    # Phase two.
    tableau.set_objective(list(objective) + [0] * tableau.num_slack)
    status = tableau.optimize(columns=bound)
    if logger.isEnabledFor(logging.DEBUG):
        logger.debug('%s after %d pivots\n%s', status, tableau.pivots, tableau.dump())
    if status == UNBOUNDED:
        return LPSolution(status=UNBOUNDED, pivots=tableau.pivots)
    return LPSolution(
        status=OPTIMAL,
        x=tableau.solution(),
        value=-tableau.cost[-1],
        pivots=tableau.pivots
    )
