# This file is part of the Neural Network Rule Verifier (nnrules).
#
# Copyright (C) 2026 The nnrules developers.
#
# nnrules is released under the Revised BSD License. See file LICENSE for
# full license details.

"""Unit tests for CNF formulas and the DIMACS format."""

from itertools import product

import os
import pytest

from nnrules.constructions.cnf import (
    CNFFormula, brute_force_sat, parse_dimacs, random_cnf, read_dimacs, write_dimacs
)
from nnrules.error import ParseError


DIMACS = """c example formula
c with two comment lines
p cnf 3 2
1 -3
2 0 -1
2 3 0
"""


def test_parse_dimacs():
    """Test parsing clauses that span lines."""
    formula = parse_dimacs(DIMACS)
    assert formula.num_vars == 3
    assert formula.num_clauses == 2
    assert formula.clauses == [
        ((1, True), (3, False), (2, True)),
        ((1, False), (2, True), (3, True))
    ]
    assert parse_dimacs(write_dimacs(formula)) == formula
    # Everything after a percent line is ignored.
    assert parse_dimacs('p cnf 1 1\n-1 0\n%\n0\n') == CNFFormula(1, [[(1, False)]])


@pytest.mark.parametrize(
    'text,line,position',
    [
        ('p cnf x 1\n1 0\n', 1, None),
        ('p cnf 1 1\np cnf 1 1\n1 0\n', 2, None),
        ('1 0\np cnf 1 1\n', 1, None),
        ('p cnf 2 1\n1 a 0\n', 2, 3),
        ('p cnf 2 2\n1 0\n 0\n', 3, 2),
        ('p cnf 2 1\n1 -3 0\n', 2, 3),
        ('p cnf 2 1\n1 2\n', 2, None),
        ('p cnf 2 2\n1 2 0\n', None, None),
        ('c no header\n', None, None)
    ]
)
def test_dimacs_errors(text, line, position):
    """Test parse errors and their locations."""
    with pytest.raises(ParseError) as ex:
        parse_dimacs(text)
    assert ex.value.line == line
    assert ex.value.position == position


def test_formula_semantics():
    """Test evaluation, padding and conversion to Boolean formulas."""
    formula = CNFFormula(3, [[(1, True), (2, False)], [(3, True)]])
    padded = formula.padded()
    assert padded.clauses[1] == ((3, True), (3, True), (3, True))
    tree = formula.to_formula()
    for x in product([0, 1], repeat=3):
        assert formula.evaluate(x) == padded.evaluate(x) == tree.evaluate(x)
    assert brute_force_sat(formula) == (0, 0, 1)
    assert brute_force_sat(CNFFormula(1, [[(1, True)], [(1, False)]])) is None
    with pytest.raises(ValueError):
        CNFFormula(2, [[]])
    with pytest.raises(ValueError):
        CNFFormula(2, [[(3, True)]])
    assert repr(formula) == '(x1 | ~x2) & (x3)'


def test_random_cnf():
    """Random formulas are reproducible and use distinct variables."""
    formula = random_cnf(5, 8, seed=7)
    assert formula == random_cnf(5, 8, seed=7)
    assert formula.num_clauses == 8
    for clause in formula.clauses:
        variables = [v for v, _ in clause]
        assert len(set(variables)) == 3
        assert variables == sorted(variables)
    assert all(len(c) == 2 for c in random_cnf(2, 4, seed=1).clauses)


def test_read_dimacs(tmpdir):
    filename = os.path.join(str(tmpdir), 'formula.cnf')
    with open(filename, 'w') as f:
        f.write(DIMACS)
    assert read_dimacs(filename) == parse_dimacs(DIMACS)
