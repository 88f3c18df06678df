# This file is part of the Neural Network Rule Verifier (nnrules).
#
# Copyright (C) 2026 The nnrules developers.
#
# nnrules is released under the Revised BSD License. See file LICENSE for
# full license details.

"""Formulas in conjunctive normal form and their DIMACS representation.
Literals are pairs of a variable index (starting at 1) and a polarity (True
for positive literals).
"""

from __future__ import annotations
from itertools import product
from typing import List, Optional, Sequence, Tuple

import random
import re

from nnrules.error import ParseError
from nnrules.network.boolean import BoolAnd, BoolFormula, BoolNot, BoolOr, BoolVar


"""Type alias for literals."""
Literal = Tuple[int, bool]

PROBLEM_LINE = re.compile(r'^\s*p\s+cnf\s+(\d+)\s+(\d+)\s*$', re.IGNORECASE)
LITERAL = re.compile(r'^-?\d+$')


class CNFFormula(object):
    """Conjunction of clauses over the variables x_1, ..., x_n."""
    def __init__(self, num_vars: int, clauses: Sequence[Sequence[Literal]]):
        """Initialize the number of variables and the list of clauses.

        Parameters
        ----------
        num_vars: int
            Number of variables n.
        clauses: list of list of (int, bool)
            Non-empty clauses.

        Raises
        ------
        ValueError
        """
        self.num_vars = num_vars
        self.clauses: List[Tuple[Literal, ...]] = list()
        for clause in clauses:
            if not clause:
                raise ValueError('empty clause')
            for var, _ in clause:
                if var < 1 or var > num_vars:
                    raise ValueError('variable {} not in [1, {}]'.format(var, num_vars))
            self.clauses.append(tuple((var, bool(pol)) for var, pol in clause))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CNFFormula) and self.num_vars == other.num_vars
            and self.clauses == other.clauses
        )

    def __repr__(self) -> str:
        return ' & '.join(
            '({})'.format(' | '.join(('' if p else '~') + 'x{}'.format(v) for v, p in c))
            for c in self.clauses
        )

    def evaluate(self, x: Sequence) -> bool:
        """Evaluate the formula for a 0/1 assignment (0-indexed sequence).
        """
        return all(
            any((x[var - 1] == 1) == pol for var, pol in clause)
            for clause in self.clauses
        )

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    def padded(self, width: Optional[int] = 3) -> CNFFormula:
        """Get an equivalent formula where clauses that are shorter than the
        given width are padded by repeating their last literal.
        """
        clauses = list()
        for clause in self.clauses:
            clause = list(clause)
            while len(clause) < width:
                clause.append(clause[-1])
            clauses.append(clause)
        return CNFFormula(num_vars=self.num_vars, clauses=clauses)

    def to_formula(self) -> BoolFormula:
        """Get the formula as a Boolean formula tree."""
        return BoolAnd([
            BoolOr([BoolVar(v) if p else BoolNot(BoolVar(v)) for v, p in clause])
            for clause in self.clauses
        ])


def brute_force_sat(formula: CNFFormula) -> Optional[Tuple[int, ...]]:
    """Get the first satisfying assignment in lexicographic order or None if
    the formula is unsatisfiable.

    Parameters
    ----------
    formula: nnrules.constructions.cnf.CNFFormula

    Returns
    -------
    tuple of int
    """
    for x in product((0, 1), repeat=formula.num_vars):
        if formula.evaluate(x):
            return x
    return None


def parse_dimacs(text: str) -> CNFFormula:
    """Parse a formula in DIMACS CNF format. Clauses are sequences of
    non-zero literals terminated by 0 and may span multiple lines. Lines
    starting with 'c' are comments. A line starting with '%' ends the
    formula.

    Parameters
    ----------
    text: string

    Returns
    -------
    nnrules.constructions.cnf.CNFFormula

    Raises
    ------
    nnrules.error.ParseError
    """
    header = None
    clauses: List[List[Literal]] = list()
    clause: List[Literal] = list()
    lineno = 0
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith('c'):
            continue
        if stripped.startswith('%'):
            break
        if stripped.lower().startswith('p'):
            match = PROBLEM_LINE.match(line)
            if match is None:
                raise ParseError("invalid problem line '{}'".format(stripped), line=lineno)
            if header is not None:
                raise ParseError('duplicate problem line', line=lineno)
            header = (int(match.group(1)), int(match.group(2)))
            continue
        if header is None:
            raise ParseError('clause before problem line', line=lineno)
        position = 0
        for token in line.split():
            position = line.index(token, position) + 1
            if not LITERAL.match(token):
                raise ParseError("invalid literal '{}'".format(token), line=lineno, position=position)
            value = int(token)
            if value == 0:
                if not clause:
                    raise ParseError('empty clause', line=lineno, position=position)
                clauses.append(clause)
                clause = list()
            elif abs(value) > header[0]:
                raise ParseError(
                    'variable {} exceeds {}'.format(abs(value), header[0]),
                    line=lineno,
                    position=position
                )
            else:
                clause.append((abs(value), value > 0))
    if header is None:
        raise ParseError('missing problem line')
    if clause:
        raise ParseError('unterminated clause', line=lineno)
    if len(clauses) != header[1]:
        raise ParseError('expected {} clauses, found {}'.format(header[1], len(clauses)))
    return CNFFormula(num_vars=header[0], clauses=clauses)


def random_cnf(
    num_vars: int, num_clauses: int, width: Optional[int] = 3,
    seed: Optional[int] = None
) -> CNFFormula:
    """Generate a random formula. Each clause has min(width, num_vars)
    literals over distinct variables with random polarities.

    Parameters
    ----------
    num_vars: int
    num_clauses: int
    width: int, default=3
    seed: int, default=None
        Seed for the random number generator.

    Returns
    -------
    nnrules.constructions.cnf.CNFFormula
    """
    rand = random.Random(seed)
    size = min(width, num_vars)
    clauses = list()
    for _ in range(num_clauses):
        variables = rand.sample(range(1, num_vars + 1), size)
        clauses.append([(v, rand.random() < 0.5) for v in sorted(variables)])
    return CNFFormula(num_vars=num_vars, clauses=clauses)


def read_dimacs(filename: str) -> CNFFormula:
    """Read a formula from a DIMACS CNF file."""
    with open(filename, 'r') as f:
        return parse_dimacs(f.read())


def write_dimacs(formula: CNFFormula) -> str:
    """Get the DIMACS CNF representation of a formula."""
    lines = ['p cnf {} {}'.format(formula.num_vars, formula.num_clauses)]
    for clause in formula.clauses:
        lines.append(' '.join(str(v if p else -v) for v, p in clause) + ' 0')
    return '\n'.join(lines) + '\n'
