# This file is part of the Neural Network Rule Verifier (nnrules).
#
# Copyright (C) 2026 The nnrules developers.
#
# nnrules is released under the Revised BSD License. See file LICENSE for
# full license details.

"""Branching search for rule violations. The search assigns, in this order,
truth values to the MofN parts, sides to the hyperplanes of input atoms, the
set of maximal outputs (classifying networks), sides to the hyperplanes of
output atoms, and phases to the nonlinear nodes in layer order. Every
complete assignment induces a linear system whose solutions are exactly the
violating inputs with that assignment.

In pruned mode each partial assignment is checked propositionally (three-
valued) and by the linear relaxation that ignores unassigned parts. The
input part of every relaxation witness is evaluated directly and ends the
search if it violates the rule. Interval bounds that follow from the
assigned input sides fix the phase of stable nodes and tighten the relaxation
of the others, and the children of an assignment are visited starting with
the one that contains the relaxation witness. In exhaustive mode all complete assignments
are enumerated without pruning.

The first levels of the search tree form a frontier of subtrees that are
explored by a pool of workers. The reported counterexample is the one of the
first subtree (in frontier order) that contains a violation, independently
of the number of workers.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Any, Dict, List, Optional, Sequence, Tuple

import logging
import threading
import time

from nnrules.arith.vector import QVector
from nnrules.lp.feasibility import LinearSystem, check_feasible
from nnrules.rules.formula import (
    Formula, LinearAtom, Relation, atoms, eval_formula, eval_partial
)
from nnrules.verifier.encoding import (
    ACTIVE, INACTIVE, PHASES, Bounds, NetworkEncoding
)
from nnrules.verifier.query import Counterexample, ViolationQuery

import nnrules.config as config


logger = logging.getLogger(__name__)


"""Kinds of branching decisions."""
PART = 'part'
INPUT = 'input'
ARGMAX = 'argmax'
OUTPUT = 'output'
PHASE = 'phase'


@dataclass(frozen=True)
class Hyperplane:
    """Boundary c.v = k of one or more atoms (normalized so that the first
    nonzero coefficient is 1) and the sides that the search branches over.
    """
    coeffs: QVector
    const: Fraction
    sides: Tuple[Relation, ...]

    def side_of(self, v: Sequence[Fraction]) -> Relation:
        """Get the side that contains the given point."""
        value = self.coeffs.dot(v)
        sign = (value > self.const) - (value < self.const)
        return next(s for s in self.sides if sign in s.signs)

    def to_atom(self, side: Relation) -> LinearAtom:
        return LinearAtom(self.coeffs, side, self.const)


@dataclass
class Decision:
    """Branching decision with its options (in branching order)."""
    kind: str
    key: Any
    options: Tuple[Any, ...]


@dataclass
class SearchStatistics:
    """Counters for the search."""
    branches: int = 0
    lp_calls: int = 0
    pivots: int = 0
    elapsed: float = 0.0

    def merge(self, other):
        self.branches += other.branches
        self.lp_calls += other.lp_calls
        self.pivots += other.pivots


class SearchSpace(object):
    """Branching decisions for a violation query together with the
    propositional and the linear check of (partial) assignments. An
    assignment is a list of options for a prefix of the decisions.
    """
    def __init__(self, query: ViolationQuery):
        """Collect hyperplanes and nonlinear nodes of the query and set up
        the list of decisions.

        Parameters
        ----------
        query: nnrules.verifier.query.ViolationQuery
        """
        self.query = query
        self.encoding = NetworkEncoding(query.target)
        input_formulas = list(query.parts) + [query.cond]
        self.input_planes, self.input_keys = collect_hyperplanes(input_formulas)
        if query.classifying:
            self.output_planes, self.output_keys = list(), dict()
        else:
            self.output_planes, self.output_keys = collect_hyperplanes([query.concl])
        decisions = [Decision(PART, k, (1, 0)) for k in range(len(query.parts))]
        decisions += [Decision(INPUT, p, p.sides) for p in self.input_planes]
        if query.classifying:
            m = query.target.output_dim
            options = list()
            for size in range(1, m + 1):
                for s in combinations(range(m), size):
                    if self.argmax_violates(s):
                        options.append(s)
            decisions.append(Decision(ARGMAX, None, tuple(options)))
        decisions += [Decision(OUTPUT, p, p.sides) for p in self.output_planes]
        decisions += [Decision(PHASE, node, tuple(PHASES)) for node in self.encoding.nodes]
        self.decisions = decisions

    def argmax_violates(self, s: Sequence[int]) -> bool:
        """Test if the conclusion is violated when the given outputs are the
        maximal ones.
        """
        m = self.query.target.output_dim
        return eval_formula(self.query.concl, QVector(1 if j in s else 0 for j in range(m)))

    def is_complete(self, assignment: Sequence) -> bool:
        return len(assignment) == len(self.decisions)

    def propositional(self, assignment: Sequence) -> Optional[bool]:
        """Three-valued check of the assignment. Returns False if no
        extension of the assignment can lead to a violation.
        """
        bits: List[int] = list()
        input_sides: Dict[Any, Relation] = dict()
        output_sides: Dict[Any, Relation] = dict()
        for decision, value in zip(self.decisions, assignment):
            if decision.kind == PART:
                bits.append(value)
            elif decision.kind == INPUT:
                input_sides[decision.key] = value
            elif decision.kind == OUTPUT:
                output_sides[decision.key] = value
            elif decision.kind == ARGMAX and not self.argmax_violates(value):
                return False

        def input_truth(a: LinearAtom) -> Optional[bool]:
            return atom_truth(a, input_sides.get(self.input_keys[a]))

        def output_truth(a: LinearAtom) -> Optional[bool]:
            return atom_truth(a, output_sides.get(self.output_keys[a]))

        query = self.query
        values = list()
        if query.parts:
            for bit, part in zip(bits, query.parts):
                value = eval_partial(part, input_truth)
                if value is not None and value != bool(bit):
                    return False
            count = sum(bits)
            unknown = len(query.parts) - len(bits)
            if not any(query.count_filter(c) for c in range(count, count + unknown + 1)):
                return False
            values.append(True if unknown == 0 else None)
        values.append(eval_partial(query.cond, input_truth))
        if not query.classifying:
            values.append(eval_partial(query.concl, output_truth))
        elif not any(d.kind == ARGMAX for d in self.decisions[:len(assignment)]):
            values.append(None)
        if False in values:
            return False
        return None if None in values else True

    def bounds(self, assignment: Sequence) -> Dict[Any, Bounds]:
        """Get bounds for the pre-activations of all nonlinear nodes. Input
        bounds come from the assigned sides of hyperplanes over a single
        input variable.
        """
        inputs: Dict[int, Bounds] = dict()
        for decision, value in zip(self.decisions, assignment):
            if decision.kind != INPUT:
                continue
            support = decision.key.coeffs.support()
            if len(support) != 1:
                continue
            # The coefficient of the variable is one.
            i, const = support[0], decision.key.const
            lower, upper = inputs.get(i, (None, None))
            if value in (Relation.GT, Relation.GE, Relation.EQ):
                lower = const if lower is None else max(lower, const)
            if value in (Relation.LT, Relation.LE, Relation.EQ):
                upper = const if upper is None else min(upper, const)
            inputs[i] = (lower, upper)
        return self.encoding.bounds(inputs, self.phases(assignment))

    def options(
        self, assignment: Sequence, w: QVector, bounds: Optional[Dict[Any, Bounds]] = None
    ) -> List:
        """Get the options of the next decision. The option that agrees
        with the given solution of the relaxation comes first. Phases that
        the bounds rule out are dropped.
        """
        decision = self.decisions[len(assignment)]
        if decision.kind == PHASE and bounds is not None:
            forced = self.encoding.forced_phase(decision.key, bounds[decision.key])
            if forced is not None:
                return [forced]
        options = list(decision.options)
        preferred = self.preferred(decision, w)
        if preferred in options:
            options.remove(preferred)
            options.insert(0, preferred)
        return options

    def phases(self, assignment: Sequence) -> Dict[Any, str]:
        """Get the phases of nodes in the assignment."""
        return {
            d.key: value for d, value in zip(self.decisions, assignment) if d.kind == PHASE
        }

    def preferred(self, decision: Decision, w: QVector) -> Any:
        """Get the option of a decision that holds for a solution of the
        linear system.
        """
        x = w[:self.query.target.input_dim]
        if decision.kind == PART:
            return 1 if eval_formula(self.query.parts[decision.key], x) else 0
        elif decision.kind == INPUT:
            return decision.key.side_of(x)
        elif decision.kind == PHASE:
            z, k = self.encoding.pre[decision.key]
            return ACTIVE if z.dot(w) + k >= 0 else INACTIVE
        outputs = self.encoding.output_values(w)
        if decision.kind == OUTPUT:
            return decision.key.side_of(outputs)
        top = max(outputs)
        return tuple(j for j, o in enumerate(outputs) if o == top)

    def system(
        self, assignment: Sequence, bounds: Optional[Dict[Any, Bounds]] = None
    ) -> LinearSystem:
        """Get the linear system for the assignment. Nodes without a phase
        are relaxed, using the bounds of their pre-activation if given.
        """
        encoding = self.encoding
        system = LinearSystem(dim=encoding.dim)
        phases = dict()
        for decision, value in zip(self.decisions, assignment):
            if decision.kind == INPUT:
                system.add(encoding.input_atom(decision.key.to_atom(value)))
            elif decision.kind == OUTPUT:
                system.add(encoding.output_atom(decision.key.to_atom(value)))
            elif decision.kind == ARGMAX:
                top = value[0]
                for s in value[1:]:
                    system.add(encoding.output_difference(s, top, Relation.EQ))
                for j in range(self.query.target.output_dim):
                    if j not in value:
                        system.add(encoding.output_difference(top, j, Relation.GT))
            elif decision.kind == PHASE:
                phases[decision.key] = value
        for node in encoding.nodes:
            if node in phases:
                system.extend(encoding.phase_constraints(node, phases[node]))
            else:
                system.extend(encoding.relaxation(node, bounds.get(node) if bounds else None))
        return system

    def witness(self, w: QVector) -> Counterexample:
        """Get the counterexample for a solution of an induced system."""
        return self.query.counterexample(w[:self.query.target.input_dim])


class Explorer(object):
    """Explores the subtrees of the search frontier. Subtrees after the
    first one that found a counterexample are abandoned.
    """
    def __init__(self, space: SearchSpace, mode: str, frontier: List[List]):
        self.space = space
        self.mode = mode
        self.frontier = frontier
        self.lock = threading.Lock()
        self.winner = len(frontier)

    def abandoned(self, index: int) -> bool:
        with self.lock:
            return index > self.winner

    def explore(self, index: int) -> Tuple[Optional[Counterexample], SearchStatistics]:
        """Explore the subtree at the given frontier position."""
        stats = SearchStatistics()
        if self.mode == config.MODE_EXHAUSTIVE:
            cex = self.enumerate(index, stats)
        else:
            cex = self.dfs(index, stats)
        if cex is not None:
            with self.lock:
                self.winner = min(self.winner, index)
        logger.debug(
            'subtree %d: %d branches, %d LP calls, %s',
            index,
            stats.branches,
            stats.lp_calls,
            'violation' if cex is not None else 'no violation'
        )
        return cex, stats

    def dfs(self, index: int, stats: SearchStatistics) -> Optional[Counterexample]:
        """Depth-first search with propositional and LP pruning. Children
        that agree with the witness of the relaxation are explored first.
        """
        space = self.space
        stack = [self.frontier[index]]
        while stack:
            if self.abandoned(index):
                return None
            assignment = stack.pop()
            stats.branches += 1
            if space.propositional(assignment) is False:
                continue
            bounds = space.bounds(assignment)
            result = check_feasible(space.system(assignment, bounds))
            stats.lp_calls += 1
            stats.pivots += result.pivots
            if not result.feasible:
                continue
            cex = space.witness(result.witness)
            if space.query.violated(cex):
                return cex
            if space.is_complete(assignment):
                raise RuntimeError('solution of complete assignment is not a violation')
            for option in reversed(space.options(assignment, result.witness, bounds)):
                stack.append(assignment + [option])
        return None

    def enumerate(self, index: int, stats: SearchStatistics) -> Optional[Counterexample]:
        """Check every complete assignment in the subtree."""
        space = self.space
        prefix = self.frontier[index]
        remaining = [d.options for d in space.decisions[len(prefix):]]
        for suffix in product(*remaining):
            if self.abandoned(index):
                return None
            assignment = prefix + list(suffix)
            stats.branches += 1
            if space.propositional(assignment) is not True:
                continue
            result = check_feasible(space.system(assignment))
            stats.lp_calls += 1
            stats.pivots += result.pivots
            if result.feasible:
                cex = space.witness(result.witness)
                if not space.query.violated(cex):
                    raise RuntimeError('solution of complete assignment is not a violation')
                return cex
        return None


def search(
    query: ViolationQuery, mode: Optional[str] = None, threads: Optional[int] = None,
    split_depth: Optional[int] = None
) -> Tuple[Optional[Counterexample], SearchStatistics]:
    """Search for a violation of the query.

    Parameters
    ----------
    query: nnrules.verifier.query.ViolationQuery
    mode: string, default=None
        Search mode (pruned or exhaustive). Uses config.MODE() if not given.
    threads: int, default=None
        Number of workers. Uses config.THREADS() if not given.
    split_depth: int, default=None
        Number of decisions that form the frontier. Uses
        config.SPLIT_DEPTH() if not given.

    Returns
    -------
    (nnrules.verifier.query.Counterexample, nnrules.verifier.search.SearchStatistics)

    Raises
    ------
    ValueError
    """
    mode = mode if mode is not None else config.MODE()
    if mode not in config.MODES:
        raise ValueError("unknown search mode '{}'".format(mode))
    threads = threads if threads is not None else config.THREADS()
    split_depth = split_depth if split_depth is not None else config.SPLIT_DEPTH()
    start = time.perf_counter()
    space = SearchSpace(query)
    depth = min(split_depth, len(space.decisions))
    frontier = [list(p) for p in product(*[d.options for d in space.decisions[:depth]])]
    explorer = Explorer(space=space, mode=mode, frontier=frontier)
    stats = SearchStatistics()
    cex = None
    if threads <= 1 or len(frontier) <= 1:
        for index in range(len(frontier)):
            cex, sub = explorer.explore(index)
            stats.merge(sub)
            if cex is not None:
                break
    else:
        with ThreadPoolExecutor(max_workers=threads) as executor:
            futures = [executor.submit(explorer.explore, i) for i in range(len(frontier))]
            for future in futures:
                found, sub = future.result()
                stats.merge(sub)
                if found is not None:
                    cex = found
                    for f in futures:
                        f.cancel()
                    break
    stats.elapsed = time.perf_counter() - start
    return cex, stats


# -- Helper Functions ---------------------------------------------------------

def atom_truth(atom: LinearAtom, side: Optional[Relation]) -> Optional[bool]:
    """Get the truth value of an atom for a side of its hyperplane. The
    result is None if the side is unknown.
    """
    if side is None:
        return None
    _, _, flipped = atom.hyperplane()
    rel = atom.rel.flip() if flipped else atom.rel
    if side.signs <= rel.signs:
        return True
    elif not (side.signs & rel.signs):
        return False
    return None


def collect_hyperplanes(
    formulas: Sequence[Formula]
) -> Tuple[List[Hyperplane], Dict[LinearAtom, Hyperplane]]:
    """Group the atoms of the given formulas by their hyperplane. Returns
    the hyperplanes in order of first occurrence and the mapping of atoms to
    hyperplanes.

    Two sides suffice for hyperplanes whose atoms only use one relation and
    its complement. All other hyperplanes have the three sides <, = and >.
    """
    order: List[Tuple[QVector, Fraction]] = list()
    relations: Dict[Tuple[QVector, Fraction], set] = dict()
    members: Dict[LinearAtom, Tuple[QVector, Fraction]] = dict()
    for f in formulas:
        for a in atoms(f):
            coeffs, const, flipped = a.hyperplane()
            key = (coeffs, const)
            if key not in relations:
                order.append(key)
                relations[key] = set()
            relations[key].add(a.rel.flip() if flipped else a.rel)
            members[a] = key
    planes: Dict[Tuple[QVector, Fraction], Hyperplane] = dict()
    for key in order:
        rels = relations[key]
        if rels <= {Relation.LE, Relation.GT}:
            sides = (Relation.LE, Relation.GT)
        elif rels <= {Relation.LT, Relation.GE}:
            sides = (Relation.LT, Relation.GE)
        else:
            sides = (Relation.LT, Relation.EQ, Relation.GT)
        planes[key] = Hyperplane(coeffs=key[0], const=key[1], sides=sides)
    return [planes[key] for key in order], {a: planes[key] for a, key in members.items()}
