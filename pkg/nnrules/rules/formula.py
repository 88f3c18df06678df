# This file is part of the Neural Network Rule Verifier (nnrules).
#
# Copyright (C) 2026 The nnrules developers.
#
# nnrules is released under the Revised BSD License. See file LICENSE for
# full license details.

"""Formulas over linear atoms. An atom a.v R b compares a linear term over
the variables v with a rational constant. Formulas are Boolean combinations
of atoms. They describe the conditional part (over the input space) and the
conclusion part (over the output space) of rules.

Intervals with open or closed ends are represented as (strict or
non-strict) atoms. Infinite interval ends are represented by omitting the
respective atom.
"""

from __future__ import annotations
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import FrozenSet, List, Optional, Sequence, Tuple

from nnrules.arith.rational import Rational, to_rational
from nnrules.arith.vector import QVector
from nnrules.error import DimensionError


# -- Relations ----------------------------------------------------------------

"""Signs of a.v - b."""
NEG = -1
ZERO = 0
POS = 1


class Relation(Enum):
    """Comparison operators of linear atoms."""
    LT = '<'
    LE = '<='
    EQ = '='
    GE = '>='
    GT = '>'

    def compare(self, lhs: Rational, rhs: Rational) -> bool:
        """Evaluate lhs R rhs."""
        sign = (lhs > rhs) - (lhs < rhs)
        return sign in self.signs

    def complement(self) -> Relation:
        """Get the relation that holds exactly when this relation does not
        hold. Equality has no single complement.

        Raises
        ------
        ValueError
        """
        if self == Relation.EQ:
            raise ValueError('equality has no complementary relation')
        return {
            Relation.LT: Relation.GE,
            Relation.LE: Relation.GT,
            Relation.GE: Relation.LT,
            Relation.GT: Relation.LE
        }[self]

    def flip(self) -> Relation:
        """Get the relation for swapped operands (a R b iff b flip(R) a)."""
        return {
            Relation.LT: Relation.GT,
            Relation.LE: Relation.GE,
            Relation.EQ: Relation.EQ,
            Relation.GE: Relation.LE,
            Relation.GT: Relation.LT
        }[self]

    def is_strict(self) -> bool:
        return self in (Relation.LT, Relation.GT)

    @property
    def signs(self) -> FrozenSet[int]:
        """Signs of lhs - rhs for which the relation holds."""
        return SIGNS[self]


SIGNS = {
    Relation.LT: frozenset([NEG]),
    Relation.LE: frozenset([NEG, ZERO]),
    Relation.EQ: frozenset([ZERO]),
    Relation.GE: frozenset([ZERO, POS]),
    Relation.GT: frozenset([POS])
}


# -- Formulas -----------------------------------------------------------------

class Formula(object):
    """Base class for formulas over linear atoms."""
    pass


@dataclass(frozen=True)
class LinearAtom:
    """Linear atom coeffs . v rel const."""
    # Coefficients over the variables of the ambient space.
    coeffs: QVector
    rel: Relation
    const: Fraction

    @property
    def dim(self) -> int:
        return self.coeffs.dim

    def holds(self, v: Sequence[Rational]) -> bool:
        """Evaluate the atom at the given point.

        Raises
        ------
        nnrules.error.DimensionError
        """
        return self.rel.compare(self.coeffs.dot(v), self.const)

    def hyperplane(self) -> Tuple[QVector, Fraction, bool]:
        """Get a normalized representation (coeffs, const) of the boundary
        hyperplane where the first nonzero coefficient is 1. The flag is
        True if the atom was scaled by a negative factor.
        """
        support = self.coeffs.support()
        if not support:
            return self.coeffs, self.const, False
        lead = self.coeffs[support[0]]
        factor = 1 / lead
        return self.coeffs.scale(factor), self.const * factor, lead < 0

    def is_paraxial(self) -> bool:
        """Test if the atom has exactly one nonzero coefficient."""
        return len(self.coeffs.support()) == 1

    def lift(self, offset: int, dim: int) -> LinearAtom:
        """Embed the atom into a space of larger dimension where its
        variables start at the given offset.
        """
        coeffs = [0] * offset + self.coeffs.to_list()
        coeffs += [0] * (dim - len(coeffs))
        return LinearAtom(QVector(coeffs), self.rel, self.const)

    def with_relation(self, rel: Relation) -> LinearAtom:
        """Get the atom with the same hyperplane and a different relation."""
        return LinearAtom(self.coeffs, rel, self.const)


@dataclass(frozen=True)
class Atom(Formula):
    atom: LinearAtom


@dataclass(frozen=True)
class Not(Formula):
    child: Formula


@dataclass(frozen=True)
class And(Formula):
    children: Tuple[Formula, ...]


@dataclass(frozen=True)
class Or(Formula):
    children: Tuple[Formula, ...]


@dataclass(frozen=True)
class Top(Formula):
    pass


@dataclass(frozen=True)
class Bottom(Formula):
    pass


TRUE = Top()
FALSE = Bottom()


# -- Builders -----------------------------------------------------------------

def atom(coeffs: Sequence, rel: str, const) -> Atom:
    """Shortcut to create an atom formula.

    Parameters
    ----------
    coeffs: list
        Coefficients (fractions, integers or rational strings).
    rel: string or nnrules.rules.formula.Relation
        Relation symbol.
    const: fraction, int or string
        Right-hand side constant.

    Returns
    -------
    nnrules.rules.formula.Atom
    """
    return Atom(LinearAtom(QVector(coeffs), Relation(rel), to_rational(const)))


def conjunction(children: Sequence[Formula]) -> Formula:
    """Get the conjunction of the given formulas (TRUE if empty, the formula
    itself if there is only one).
    """
    children = tuple(children)
    if not children:
        return TRUE
    return children[0] if len(children) == 1 else And(children)


def disjunction(children: Sequence[Formula]) -> Formula:
    """Get the disjunction of the given formulas (FALSE if empty)."""
    children = tuple(children)
    if not children:
        return FALSE
    return children[0] if len(children) == 1 else Or(children)


def interval(
    dim: int, index: int, lower=None, upper=None,
    lower_open: Optional[bool] = False, upper_open: Optional[bool] = False
) -> Formula:
    """Get the formula for x_index in an interval. Missing bounds are
    infinite and do not produce an atom.

    Parameters
    ----------
    dim: int
        Dimension of the ambient space.
    index: int
        Variable position (0-based).
    lower: fraction, int or string, default=None
    upper: fraction, int or string, default=None
    lower_open: bool, default=False
    upper_open: bool, default=False

    Returns
    -------
    nnrules.rules.formula.Formula
    """
    unit = QVector.unit(dim, index)
    atoms = list()
    if lower is not None:
        rel = Relation.GT if lower_open else Relation.GE
        atoms.append(Atom(LinearAtom(unit, rel, to_rational(lower))))
    if upper is not None:
        rel = Relation.LT if upper_open else Relation.LE
        atoms.append(Atom(LinearAtom(unit, rel, to_rational(upper))))
    return conjunction(atoms)


def box(lower: Sequence, upper: Sequence) -> Formula:
    """Get the conjunction of closed intervals lower_i <= x_i <= upper_i."""
    dim = len(lower)
    if len(upper) != dim:
        raise DimensionError('box bounds of dimension {} and {}'.format(dim, len(upper)))
    return conjunction([interval(dim, i, lower[i], upper[i]) for i in range(dim)])


def lift(formula: Formula, offset: int, dim: int) -> Formula:
    """Embed the formula into a space of larger dimension where its
    variables start at the given offset.

    Parameters
    ----------
    formula: nnrules.rules.formula.Formula
    offset: int
    dim: int

    Returns
    -------
    nnrules.rules.formula.Formula
    """
    if isinstance(formula, Atom):
        return Atom(formula.atom.lift(offset, dim))
    elif isinstance(formula, Not):
        return Not(lift(formula.child, offset, dim))
    elif isinstance(formula, And):
        return And(tuple(lift(c, offset, dim) for c in formula.children))
    elif isinstance(formula, Or):
        return Or(tuple(lift(c, offset, dim) for c in formula.children))
    return formula


# -- Semantics ----------------------------------------------------------------

def atoms(formula: Formula) -> List[LinearAtom]:
    """Get the list of distinct atoms in the formula (in order of first
    occurrence).
    """
    result: List[LinearAtom] = list()
    stack = [formula]
    while stack:
        f = stack.pop()
        if isinstance(f, Atom):
            if f.atom not in result:
                result.append(f.atom)
        elif isinstance(f, Not):
            stack.append(f.child)
        elif isinstance(f, (And, Or)):
            stack.extend(reversed(f.children))
    return result


def formula_dim(formula: Formula) -> Optional[int]:
    """Get the dimension of the ambient space of the formula. The result is
    None for formulas without atoms.

    Raises
    ------
    nnrules.error.DimensionError
    """
    dims = set(a.dim for a in atoms(formula))
    if len(dims) > 1:
        raise DimensionError('formula atoms of different dimensions {}'.format(sorted(dims)))
    return dims.pop() if dims else None


def eval_formula(formula: Formula, v: Sequence[Rational]) -> bool:
    """Evaluate the formula at the given point.

    Parameters
    ----------
    formula: nnrules.rules.formula.Formula
    v: nnrules.arith.vector.QVector

    Returns
    -------
    bool

    Raises
    ------
    nnrules.error.DimensionError
    """
    dim = formula_dim(formula)
    if dim is not None and dim != len(v):
        raise DimensionError('formula over {} variables evaluated at {}-vector'.format(dim, len(v)))
    return eval_partial(formula, lambda a: a.holds(v))


def eval_partial(formula: Formula, value) -> Optional[bool]:
    """Evaluate a formula with three-valued (Kleene) logic given a function
    that returns True, False or None (unknown) for each atom.

    Parameters
    ----------
    formula: nnrules.rules.formula.Formula
    value: callable

    Returns
    -------
    bool
    """
    if isinstance(formula, Atom):
        return value(formula.atom)
    elif isinstance(formula, Top):
        return True
    elif isinstance(formula, Bottom):
        return False
    elif isinstance(formula, Not):
        result = eval_partial(formula.child, value)
        return None if result is None else not result
    elif isinstance(formula, And):
        result = True
        for c in formula.children:
            val = eval_partial(c, value)
            if val is False:
                return False
            elif val is None:
                result = None
        return result
    elif isinstance(formula, Or):
        result = False
        for c in formula.children:
            val = eval_partial(c, value)
            if val is True:
                return True
            elif val is None:
                result = None
        return result
    raise ValueError("unknown formula element '{}'".format(formula))


def is_paraxial(formula: Formula) -> bool:
    """Test if every atom of the formula has exactly one nonzero
    coefficient.
    """
    return all(a.is_paraxial() for a in atoms(formula))


def to_nnf(formula: Formula, negate: Optional[bool] = False) -> Formula:
    """Push negations down to the atoms. Negated atoms are replaced by atoms
    with the complementary relation. A negated equality a.v = b becomes
    a.v < b or a.v > b.

    Parameters
    ----------
    formula: nnrules.rules.formula.Formula
    negate: bool, default=False
        Return the negation normal form of the negated formula.

    Returns
    -------
    nnrules.rules.formula.Formula
    """
    if isinstance(formula, Atom):
        if not negate:
            return formula
        a = formula.atom
        if a.rel == Relation.EQ:
            return Or((
                Atom(a.with_relation(Relation.LT)),
                Atom(a.with_relation(Relation.GT))
            ))
        return Atom(a.with_relation(a.rel.complement()))
    elif isinstance(formula, Not):
        return to_nnf(formula.child, negate=not negate)
    elif isinstance(formula, Top):
        return FALSE if negate else TRUE
    elif isinstance(formula, Bottom):
        return TRUE if negate else FALSE
    children = tuple(to_nnf(c, negate=negate) for c in formula.children)
    if isinstance(formula, And):
        return Or(children) if negate else And(children)
    return And(children) if negate else Or(children)

