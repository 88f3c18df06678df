# This file is part of the Neural Network Rule Verifier (nnrules).
#
# Copyright (C) 2026 The nnrules developers.
#
# nnrules is released under the Revised BSD License. See file LICENSE for
# full license details.

"""Certificates for rule violations. A certificate fixes the truth values of
the MofN parts, the side of every input and output hyperplane, the set of
maximal outputs (classifying networks only) and the phase of every
nonlinear node. Checking a certificate is a propositional test followed by
one feasibility check of a linear system.
"""

from __future__ import annotations
from dataclasses import dataclass
from typing import List, Optional, Tuple

from nnrules.lp.feasibility import check_feasible
from nnrules.network.base import Network
from nnrules.rules.base import Rule
from nnrules.rules.formula import Relation, eval_formula
from nnrules.verifier.encoding import PHASES
from nnrules.verifier.query import Counterexample, build_query
from nnrules.verifier.search import ARGMAX, INPUT, OUTPUT, PART, PHASE, SearchSpace


"""Reasons for rejecting a certificate."""
STRUCTURAL = 'structural'
PROPOSITIONAL = 'propositional'
INFEASIBLE = 'infeasible'


@dataclass(frozen=True)
class Certificate:
    """Complete assignment for all branching decisions of a violation
    query.
    """
    # Truth values (0/1) of the MofN parts (None for other rules).
    parts: Optional[Tuple[int, ...]]
    # Phase (active or inactive) of every nonlinear node in layer order.
    phases: Tuple[str, ...]
    # Side of every hyperplane of input atoms.
    input_halfspaces: Tuple[Relation, ...]
    # Side of every hyperplane of output atoms (empty for classifying
    # networks).
    output_halfspaces: Tuple[Relation, ...]
    # Positions (0-based) of the maximal outputs (classifying networks
    # only).
    argmax: Optional[Tuple[int, ...]] = None

    def replace(self, **kwargs) -> Certificate:
        """Get a copy of the certificate with modified components."""
        values = dict(
            parts=self.parts,
            phases=self.phases,
            input_halfspaces=self.input_halfspaces,
            output_halfspaces=self.output_halfspaces,
            argmax=self.argmax
        )
        values.update(kwargs)
        return Certificate(**values)


class CertificateCheck(object):
    """Base class for the result of checking a certificate."""
    def is_accepted(self) -> bool:
        raise NotImplementedError()  # pragma: no cover


@dataclass(frozen=True)
class Accepted(CertificateCheck):
    """Accepted certificate with the validated counterexample."""
    witness: Counterexample

    def is_accepted(self) -> bool:
        return True


@dataclass(frozen=True)
class Rejected(CertificateCheck):
    """Rejected certificate with the reason for rejection."""
    reason: str
    message: str = ''

    def is_accepted(self) -> bool:
        return False


def check_certificate(net: Network, rule: Rule, cert: Certificate) -> CertificateCheck:
    """Check a certificate for the violation of a rule by a network. The
    witness of an accepted certificate is always validated by direct
    evaluation.

    Parameters
    ----------
    net: nnrules.network.base.Network
    rule: nnrules.rules.base.Rule
    cert: nnrules.verifier.certificate.Certificate

    Returns
    -------
    nnrules.verifier.certificate.CertificateCheck

    Raises
    ------
    nnrules.error.DimensionError
    """
    space = SearchSpace(build_query(net, rule))
    assignment, message = to_assignment(space, cert)
    if assignment is None:
        return Rejected(reason=STRUCTURAL, message=message)
    if space.propositional(assignment) is not True:
        return Rejected(
            reason=PROPOSITIONAL,
            message='assignment does not force a violation'
        )
    result = check_feasible(space.system(assignment))
    if not result.feasible:
        return Rejected(reason=INFEASIBLE, message='induced linear system is infeasible')
    cex = space.witness(result.witness)
    if not space.query.violated(cex):
        raise RuntimeError('solution of certificate system is not a violation')
    return Accepted(witness=cex)


def extract_certificate(net: Network, rule: Rule, cex: Counterexample) -> Certificate:
    """Get the certificate that describes a counterexample.

    Parameters
    ----------
    net: nnrules.network.base.Network
    rule: nnrules.rules.base.Rule
    cex: nnrules.verifier.query.Counterexample

    Returns
    -------
    nnrules.verifier.certificate.Certificate
    """
    space = SearchSpace(build_query(net, rule))
    query = space.query
    w = cex.x.concat(cex.y) if cex.is_pair() else cex.x
    trace = query.target.trace(w)
    out = trace[-1][1]
    parts = None
    if query.parts:
        parts = tuple(1 if eval_formula(f, w) else 0 for f in query.parts)
    argmax = None
    if query.classifying:
        top = max(out)
        argmax = tuple(j for j, v in enumerate(out) if v == top)
    encoding = space.encoding
    return Certificate(
        parts=parts,
        phases=tuple(encoding.phase_of(trace, node) for node in encoding.nodes),
        input_halfspaces=tuple(p.side_of(w) for p in space.input_planes),
        output_halfspaces=tuple(p.side_of(out) for p in space.output_planes),
        argmax=argmax
    )


# -- Helper Functions ---------------------------------------------------------

def to_assignment(space: SearchSpace, cert: Certificate) -> Tuple[Optional[List], str]:
    """Convert a certificate into a complete assignment for the decisions of
    the search space. Returns None and an error message if the certificate
    does not match the shape of the search space.
    """
    query = space.query
    if query.parts:
        if cert.parts is None or len(cert.parts) != len(query.parts):
            return None, 'expected {} part values'.format(len(query.parts))
        if any(b not in (0, 1) for b in cert.parts):
            return None, 'part values must be 0 or 1'
    elif cert.parts is not None:
        return None, 'unexpected part values'
    if len(cert.input_halfspaces) != len(space.input_planes):
        return None, 'expected {} input half-spaces'.format(len(space.input_planes))
    if len(cert.output_halfspaces) != len(space.output_planes):
        return None, 'expected {} output half-spaces'.format(len(space.output_planes))
    if len(cert.phases) != len(space.encoding.nodes):
        return None, 'expected {} phases'.format(len(space.encoding.nodes))
    if any(p not in PHASES for p in cert.phases):
        return None, 'invalid phase'
    if query.classifying:
        m = query.target.output_dim
        argmax = cert.argmax
        if not argmax or list(argmax) != sorted(set(argmax)) or argmax[-1] >= m or argmax[0] < 0:
            return None, 'invalid set of maximal outputs'
    elif cert.argmax is not None:
        return None, 'unexpected set of maximal outputs'
    parts = iter(cert.parts or [])
    inputs = iter(cert.input_halfspaces)
    outputs = iter(cert.output_halfspaces)
    phases = iter(cert.phases)
    assignment = list()
    for decision in space.decisions:
        if decision.kind == PART:
            assignment.append(next(parts))
        elif decision.kind == INPUT:
            assignment.append(next(inputs))
        elif decision.kind == ARGMAX:
            assignment.append(tuple(cert.argmax))
        elif decision.kind == OUTPUT:
            assignment.append(next(outputs))
        elif decision.kind == PHASE:
            assignment.append(next(phases))
        if decision.kind != ARGMAX and assignment[-1] not in decision.options:
            return None, 'invalid {} value {}'.format(decision.kind, assignment[-1])
    return assignment, ''
