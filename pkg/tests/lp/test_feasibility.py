# This file is part of the Neural Network Rule Verifier (nnrules).
#
# Copyright (C) 2026 The nnrules developers.
#
# nnrules is released under the Revised BSD License. See file LICENSE for
# full license details.

"""Unit tests for feasibility checks of strict and non-strict linear
systems.
"""

from fractions import Fraction
from hypothesis import given, settings, strategies as st
from itertools import combinations, product
from random import Random

import pytest

from nnrules.arith.vector import QVector
from nnrules.error import DimensionError
from nnrules.lp.feasibility import LinearSystem, check_feasible
from nnrules.rules.formula import LinearAtom, Relation
from nnrules.tests.sample import random_atom


def constraint(coeffs, rel, const):
    return LinearAtom(QVector(coeffs), Relation(rel), Fraction(const))


def interval_oracle(constraints):
    """Decide feasibility of a one-dimensional system by intersecting the
    intervals of its constraints.
    """
    lower, lower_open = None, False
    upper, upper_open = None, False
    for c in constraints:
        a, b = c.coeffs[0], c.const
        rel = c.rel if a > 0 else c.rel.flip()
        bound = b / a
        if rel in (Relation.GE, Relation.GT, Relation.EQ):
            strict = rel == Relation.GT
            if lower is None or bound > lower or (bound == lower and strict):
                lower, lower_open = bound, strict
        if rel in (Relation.LE, Relation.LT, Relation.EQ):
            strict = rel == Relation.LT
            if upper is None or bound < upper or (bound == upper and strict):
                upper, upper_open = bound, strict
    if lower is None or upper is None:
        return True
    if lower < upper:
        return True
    return lower == upper and not lower_open and not upper_open


@pytest.mark.parametrize(
    'constraints,feasible',
    [
        ([], True),
        ([constraint([1], '<', 1), constraint([1], '>', 1)], False),
        ([constraint([1], '<', 1), constraint([1], '>=', 1)], False),
        ([constraint([1], '<=', 1), constraint([1], '>=', 1)], True),
        ([constraint([1], '>', 0), constraint([1], '<', '1/1000')], True),
        ([constraint([1, 1], '=', 1), constraint([1, -1], '=', 0)], True),
        ([constraint([1, 1], '<', 0), constraint([-1, -1], '<', 0)], False),
        ([constraint([0, 0], '<=', 0), constraint([0, 1], '>', 5)], True),
        ([constraint([0, 0], '<', 0)], False)
    ]
)
def test_small_systems(constraints, feasible):
    """Test feasibility of small hand-written systems."""
    dim = constraints[0].dim if constraints else 2
    result = check_feasible(LinearSystem(dim, constraints))
    assert result.feasible == feasible
    if feasible:
        assert result.witness.dim == dim
        for c in constraints:
            assert c.holds(result.witness)
    else:
        assert result.witness is None


def test_equality_witness():
    system = LinearSystem(2)
    system.extend([constraint([1, 1], '=', 1), constraint([1, -1], '=', 0)])
    assert len(system) == 2
    assert check_feasible(system).witness == QVector(['1/2', '1/2'])


def test_dimension_mismatch():
    system = LinearSystem(2)
    with pytest.raises(DimensionError):
        system.add(constraint([1], '<=', 0))


def test_random_one_dimensional_systems():
    """Compare against interval intersection."""
    rand = Random(17)
    for _ in range(200):
        constraints = [random_atom(rand, 1, bound=3) for _ in range(rand.randint(1, 4))]
        result = check_feasible(LinearSystem(1, constraints))
        assert result.feasible == interval_oracle(constraints)


def test_random_two_dimensional_systems():
    """Every grid point that satisfies a random system proves feasibility
    and every witness satisfies the system.
    """
    rand = Random(23)
    grid = [Fraction(k, 2) for k in range(-8, 9)]
    for _ in range(100):
        constraints = [random_atom(rand, 2, bound=3) for _ in range(rand.randint(1, 4))]
        system = LinearSystem(2, constraints)
        result = check_feasible(system)
        if result.feasible:
            assert system.is_satisfied(result.witness)
        elif any(system.is_satisfied(p) for p in product(grid, repeat=2)):
            pytest.fail('grid point satisfies infeasible system')


# Half-width of the box that bounds the closed systems in the vertex
# enumeration. Basic solutions of systems with coefficients in [-3, 3] and at
# most four variables lie well inside.
BOX = 2000


def closure(rel):
    return {Relation.LT: Relation.LE, Relation.GT: Relation.GE}.get(rel, rel)


def solve_square(rows, rhs):
    """Solve a square linear system by Gauss-Jordan elimination. Returns
    None if the matrix is singular.
    """
    n = len(rows)
    m = [[Fraction(a) for a in r] + [Fraction(b)] for r, b in zip(rows, rhs)]
    for col in range(n):
        pivot = next((i for i in range(col, n) if m[i][col] != 0), None)
        if pivot is None:
            return None
        m[col], m[pivot] = m[pivot], m[col]
        for i in range(n):
            if i != col and m[i][col] != 0:
                f = m[i][col] / m[col][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[col])]
    return [m[i][n] / m[i][i] for i in range(n)]


def vertex_oracle(dim, constraints):
    """Decide feasibility by enumerating the vertices of the closed system
    inside a large box. The centroid of all vertices lies in the relative
    interior of the closed polytope, so the system with its strict
    constraints is feasible if and only if the centroid satisfies them.
    """
    box = [
        LinearAtom(QVector.unit(dim, i), rel, Fraction(sign * BOX))
        for i in range(dim) for rel, sign in [(Relation.LE, 1), (Relation.GE, -1)]
    ]
    closed = [LinearAtom(c.coeffs, closure(c.rel), c.const) for c in constraints] + box
    vertices = set()
    for subset in combinations(closed, dim):
        point = solve_square([c.coeffs.to_list() for c in subset], [c.const for c in subset])
        if point is not None and all(c.holds(point) for c in closed):
            vertices.add(tuple(point))
    if not vertices:
        return False
    centroid = [sum(v[i] for v in vertices) / len(vertices) for i in range(dim)]
    return all(c.holds(centroid) for c in constraints)


@st.composite
def linear_systems(draw):
    """Systems of up to eight mixed strict and non-strict constraints over
    up to four variables.
    """
    dim = draw(st.integers(min_value=1, max_value=4))
    constraints = list()
    for _ in range(draw(st.integers(min_value=1, max_value=8))):
        coeffs = draw(st.lists(st.integers(-3, 3), min_size=dim, max_size=dim))
        rel = draw(st.sampled_from(list(Relation)))
        constraints.append(LinearAtom(QVector(coeffs), rel, Fraction(draw(st.integers(-3, 3)))))
    return dim, constraints


@settings(max_examples=100, deadline=None)
@given(linear_systems())
def test_systems_against_vertex_enumeration(system):
    """Compare against vertex enumeration and re-validate every witness."""
    dim, constraints = system
    result = check_feasible(LinearSystem(dim, constraints))
    assert result.feasible == vertex_oracle(dim, constraints)
    if result.feasible:
        assert all(c.holds(result.witness) for c in constraints)


def test_vertex_oracle():
    """The oracle separates open and closed systems that touch."""
    assert vertex_oracle(1, [constraint([1], '<=', 1), constraint([1], '>=', 1)])
    assert not vertex_oracle(1, [constraint([1], '<', 1), constraint([1], '>=', 1)])
    assert vertex_oracle(2, [constraint([1, 1], '<', 1), constraint([1, -1], '>', 0)])
    assert not vertex_oracle(2, [constraint([1, 1], '<', 0), constraint([-1, -1], '<', 0)])
    assert not vertex_oracle(2, [constraint([0, 0], '<', 0)])
