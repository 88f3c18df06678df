# This file is part of the Neural Network Rule Verifier (nnrules).
#
# Copyright (C) 2026 The nnrules developers.
#
# nnrules is released under the Revised BSD License. See file LICENSE for
# full license details.

"""Construction of networks that obey a given set of rules. Rules with
pairwise separated box conditionals are realized by a sum of bump functions
that are constant on each box. Sets of monotonicity rules are obeyed by every
constant network.
"""

from __future__ import annotations
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Sequence

from nnrules.arith.rational import Rational
from nnrules.arith.vector import QMatrix, QVector
from nnrules.error import DimensionError, UnsupportedError
from nnrules.lp.feasibility import LinearSystem, check_feasible
from nnrules.network.base import Network
from nnrules.network.compose import compose, juxtapose
from nnrules.network.gadget import (
    affine_network, build_clamp_gadget, build_min_gadget, constant_network
)
from nnrules.rules.base import ConditionalRule, MonotonicityRule, Rule
from nnrules.rules.formula import (
    And, Atom, Bottom, Formula, LinearAtom, Or, Relation, Top, conjunction,
    formula_dim, to_nnf
)


@dataclass(frozen=True)
class BoxRegion:
    """Closed box lower <= x <= upper."""
    lower: QVector
    upper: QVector

    def __post_init__(self):
        if self.lower.dim != self.upper.dim:
            raise DimensionError(
                'box bounds of dimension {} and {}'.format(self.lower.dim, self.upper.dim)
            )
        for lo, up in zip(self.lower, self.upper):
            if lo > up:
                raise ValueError('empty box [{}, {}]'.format(lo, up))

    def contains(self, x: Sequence[Rational]) -> bool:
        return all(lo <= v <= up for lo, v, up in zip(self.lower, x, self.upper))

    @property
    def dim(self) -> int:
        return self.lower.dim

    def gap(self, other: BoxRegion) -> Fraction:
        """Distance between two boxes in the maximum norm, i.e., the largest
        gap between their projections onto a coordinate axis.
        """
        if other.dim != self.dim:
            raise DimensionError('boxes of dimension {} and {}'.format(self.dim, other.dim))
        gap = Fraction(0)
        for i in range(self.dim):
            gap = max(gap, other.lower[i] - self.upper[i], self.lower[i] - other.upper[i])
        return gap


@dataclass(frozen=True)
class Consistent:
    """Outcome of a consistency check together with a network that obeys
    all rules.
    """
    witness: Network


# -- Box witnesses ------------------------------------------------------------

def build_box_witness(
    regions: Sequence[BoxRegion], values: Sequence[QVector],
    margin: Optional[Rational] = None
) -> Network:
    """Get a ReLU network that equals values[k] on regions[k] and is zero
    outside of the c'-neighbourhoods of the regions. The network is the sum
    of the bump functions

        bump_k(x) = clamp(min_i min(x_i - l_i + c', u_i + c' - x_i) / c')

    weighted by the region values. Here c' is half of the smallest distance
    between two regions (capped by the margin). For a single region without
    margin c' = 1.

    Parameters
    ----------
    regions: list of nnrules.constructions.witness.BoxRegion
    values: list of nnrules.arith.vector.QVector
        Output value for each region.
    margin: fraction, default=None
        Upper bound for c'.

    Returns
    -------
    nnrules.network.base.Network

    Raises
    ------
    nnrules.error.DimensionError
    ValueError
    """
    if not regions:
        raise ValueError('no regions')
    if len(values) != len(regions):
        raise DimensionError('{} values for {} regions'.format(len(values), len(regions)))
    n = regions[0].dim
    m = values[0].dim
    for region, value in zip(regions, values):
        if region.dim != n or value.dim != m:
            raise DimensionError('regions or values of different dimensions')
    radius = bump_radius(regions, margin)
    bumps = [bump_network(region, radius) for region in regions]
    weights = QMatrix.from_rows([[value[j] for value in values] for j in range(m)])
    return compose(affine_network(weights, QVector.zeros(m)), juxtapose(bumps))


def bump_network(region: BoxRegion, radius: Fraction) -> Network:
    """Get the network for the bump function of a region that is one on the
    region and zero outside of its radius-neighbourhood.
    """
    n = region.dim
    rows, biases = list(), list()
    for i in range(n):
        row = [0] * n
        row[i] = 1 / radius
        rows.append(row)
        biases.append((radius - region.lower[i]) / radius)
        row = [0] * n
        row[i] = -1 / radius
        rows.append(row)
        biases.append((region.upper[i] + radius) / radius)
    distances = affine_network(QMatrix.from_rows(rows), QVector(biases))
    return compose(build_clamp_gadget(), compose(build_min_gadget(2 * n), distances))


def bump_radius(regions: Sequence[BoxRegion], margin: Optional[Rational] = None) -> Fraction:
    """Get c' for a list of regions.

    Raises
    ------
    ValueError
    """
    radius = None
    for k, region in enumerate(regions):
        for other in regions[k + 1:]:
            gap = region.gap(other)
            if gap <= 0:
                raise ValueError('regions {} and {} are not separated'.format(region, other))
            radius = gap / 2 if radius is None else min(radius, gap / 2)
    if margin is not None:
        if margin <= 0:
            raise ValueError('margin must be positive')
        radius = Fraction(margin) if radius is None else min(radius, Fraction(margin))
    return radius if radius is not None else Fraction(1)


def build_interpolation_network(
    points: Sequence[QVector], values: Sequence[QVector]
) -> Network:
    """Get a ReLU network with N(points[k]) = values[k]. Points have to be
    pairwise different.

    Parameters
    ----------
    points: list of nnrules.arith.vector.QVector
    values: list of nnrules.arith.vector.QVector

    Returns
    -------
    nnrules.network.base.Network

    Raises
    ------
    nnrules.error.DimensionError
    ValueError
    """
    regions = [BoxRegion(lower=p, upper=p) for p in points]
    return build_box_witness(regions, values)


# -- Rule witnesses -----------------------------------------------------------

def build_rule_witness(rules: Sequence[Rule]) -> Network:
    """Get a network that obeys all rules. Supports sets of monotonicity
    rules and sets of propositional or oblique rules whose conditional parts
    are bounded boxes that are pairwise separated (or equal).

    Parameters
    ----------
    rules: list of nnrules.rules.base.Rule

    Returns
    -------
    nnrules.network.base.Network

    Raises
    ------
    nnrules.error.DimensionError
    nnrules.error.UnsupportedError
    ValueError
    """
    if all(isinstance(r, MonotonicityRule) for r in rules):
        return monotonicity_set_consistency(rules).witness
    n, m = None, None
    groups: Dict[BoxRegion, List[Formula]] = dict()
    for rule in rules:
        if not isinstance(rule, ConditionalRule):
            raise UnsupportedError(
                'witness construction not supported for {} rules'.format(rule.kind)
            )
        cdim = formula_dim(rule.cond)
        if cdim is None and isinstance(rule.cond, Bottom):
            continue
        elif cdim is None:
            raise UnsupportedError('conditional part {} is not a bounded box'.format(rule.cond))
        if n is not None and cdim != n:
            raise DimensionError('conditional parts over {} and {} variables'.format(n, cdim))
        n = cdim
        odim = formula_dim(rule.concl)
        if odim is not None:
            if m is not None and odim != m:
                raise DimensionError('conclusions over {} and {} outputs'.format(m, odim))
            m = odim
        region = box_region(rule.cond)
        if region is not None:
            groups.setdefault(region, list()).append(rule.concl)
    m = m if m is not None else 1
    if not groups:
        return constant_network(n if n is not None else 1, QVector.zeros(m))
    regions, values = list(), list()
    for region, concls in groups.items():
        value = satisfying_point(conjunction(concls), m)
        if value is None:
            raise ValueError('no output satisfies the conclusions for {}'.format(region))
        regions.append(region)
        values.append(value)
    return build_box_witness(regions, values)


def monotonicity_set_consistency(
    rules: Sequence[Rule], input_dim: Optional[int] = None,
    output_dim: Optional[int] = None
) -> Consistent:
    """Every constant network obeys every monotonicity rule. Returns the
    constant zero network as witness.

    Parameters
    ----------
    rules: list of nnrules.rules.base.MonotonicityRule
    input_dim: int, default=None
        Number of inputs (defaults to the number of matrix columns or 1).
    output_dim: int, default=None
        Number of outputs (defaults to the largest class index or 1).

    Returns
    -------
    nnrules.constructions.witness.Consistent

    Raises
    ------
    nnrules.error.DimensionError
    nnrules.error.UnsupportedError
    """
    check_monotonicity_set(rules)
    n = input_dim
    for rule in rules:
        if n is not None and rule.A.cols != n:
            raise DimensionError('matrix with {} columns, expected {}'.format(rule.A.cols, n))
        n = rule.A.cols
    m = max([r.i for r in rules] + [output_dim if output_dim is not None else 1])
    return Consistent(witness=constant_network(n if n is not None else 1, QVector.zeros(m)))


def monotonicity_set_exhaustive(rules: Sequence[Rule]) -> bool:
    """A set of monotonicity rules is never exhaustive since every constant
    network obeys it.

    Raises
    ------
    nnrules.error.UnsupportedError
    """
    check_monotonicity_set(rules)
    return False


# -- Helper Functions ---------------------------------------------------------

def box_region(formula: Formula) -> Optional[BoxRegion]:
    """Get the closure of the box described by a conjunction of paraxial
    atoms. Returns None if the box is empty.

    Raises
    ------
    nnrules.error.UnsupportedError
    """
    n = formula_dim(formula)
    lower: List[Optional[Fraction]] = [None] * n
    upper: List[Optional[Fraction]] = [None] * n
    stack = [formula]
    while stack:
        f = stack.pop()
        if isinstance(f, And):
            stack.extend(f.children)
            continue
        elif isinstance(f, Top):
            continue
        elif isinstance(f, Bottom):
            return None
        elif not isinstance(f, Atom):
            raise UnsupportedError('conditional part {} is not a box'.format(formula))
        a = f.atom
        support = a.coeffs.support()
        if not support:
            if not a.rel.compare(0, a.const):
                return None
            continue
        if len(support) > 1:
            raise UnsupportedError('atom {} is not paraxial'.format(a))
        i = support[0]
        bound = a.const / a.coeffs[i]
        rel = a.rel if a.coeffs[i] > 0 else a.rel.flip()
        if rel in (Relation.GE, Relation.GT, Relation.EQ):
            lower[i] = bound if lower[i] is None else max(lower[i], bound)
        if rel in (Relation.LE, Relation.LT, Relation.EQ):
            upper[i] = bound if upper[i] is None else min(upper[i], bound)
    if any(v is None for v in lower + upper):
        raise UnsupportedError('conditional part {} is not a bounded box'.format(formula))
    if any(lo > up for lo, up in zip(lower, upper)):
        return None
    return BoxRegion(lower=QVector(lower), upper=QVector(upper))


def check_monotonicity_set(rules: Sequence[Rule]):
    """Raise an error if the list contains rules that are not monotonicity
    rules.
    """
    for rule in rules:
        if not isinstance(rule, MonotonicityRule):
            raise UnsupportedError(
                'expected monotonicity rules, got {} rule'.format(rule.kind)
            )


def conjunctive_branches(formula: Formula) -> Iterator[List[LinearAtom]]:
    """Iterate over the conjunctions of atoms of the disjunctive normal form
    of a formula in negation normal form.
    """
    if isinstance(formula, Atom):
        yield [formula.atom]
    elif isinstance(formula, Top):
        yield []
    elif isinstance(formula, Or):
        for child in formula.children:
            yield from conjunctive_branches(child)
    elif isinstance(formula, And):
        yield from product_branches(formula.children)


def product_branches(children: Sequence[Formula]) -> Iterator[List[LinearAtom]]:
    if not children:
        yield []
        return
    for head in conjunctive_branches(children[0]):
        for tail in product_branches(children[1:]):
            yield head + tail


def satisfying_point(formula: Formula, dim: int) -> Optional[QVector]:
    """Get a point that satisfies the formula or None if the formula is
    unsatisfiable.

    Parameters
    ----------
    formula: nnrules.rules.formula.Formula
    dim: int

    Returns
    -------
    nnrules.arith.vector.QVector
    """
    for branch in conjunctive_branches(to_nnf(formula)):
        result = check_feasible(LinearSystem(dim, branch))
        if result.feasible:
            return result.witness
    return None
