# This file is part of the Neural Network Rule Verifier (nnrules).
#
# Copyright (C) 2026 The nnrules developers.
#
# nnrules is released under the Revised BSD License. See file LICENSE for
# full license details.

"""Complete verification of rules for networks. A rule either holds for the
network or the verifier returns a counterexample that has been validated by
direct evaluation, together with a certificate for the violation.
"""

from abc import ABCMeta, abstractmethod
from fractions import Fraction
from typing import List, Optional, Sequence

import logging

from nnrules.arith.vector import QVector
from nnrules.network.base import Network
from nnrules.rules.base import Rule
from nnrules.verifier.certificate import extract_certificate
from nnrules.verifier.query import Counterexample, build_query
from nnrules.verifier.search import SearchStatistics, search


logger = logging.getLogger(__name__)


class Verdict(metaclass=ABCMeta):
    """Outcome of verifying a rule."""
    def __init__(self, stats: Optional[SearchStatistics] = None):
        """Initialize the search statistics.

        Parameters
        ----------
        stats: nnrules.verifier.search.SearchStatistics, default=None
        """
        self.stats = stats if stats is not None else SearchStatistics()

    @abstractmethod
    def holds(self) -> bool:
        """True if the rule holds for the network."""
        raise NotImplementedError()  # pragma: no cover


class Holds(Verdict):
    """The rule holds for the network."""
    def __repr__(self) -> str:
        return 'HOLDS'

    def holds(self) -> bool:
        return True


class Fails(Verdict):
    """The rule is violated by the counterexample."""
    def __init__(
        self, counterexample: Counterexample, certificate=None,
        stats: Optional[SearchStatistics] = None
    ):
        """Initialize the counterexample and the certificate.

        Parameters
        ----------
        counterexample: nnrules.verifier.query.Counterexample
        certificate: nnrules.verifier.certificate.Certificate, default=None
            Certificate for the violation. Counterexamples for Boolean
            networks have no separate certificate.
        stats: nnrules.verifier.search.SearchStatistics, default=None
        """
        super(Fails, self).__init__(stats=stats)
        self.counterexample = counterexample
        self.certificate = certificate

    def __repr__(self) -> str:
        return 'FAILS'

    def holds(self) -> bool:
        return False


def minimize_witness(net: Network, rule: Rule, cex: Counterexample) -> Counterexample:
    """Replace counterexample coordinates by rationals with small
    denominators as long as the rule stays violated. Coordinates are
    processed in order. The result is always a valid counterexample.

    Parameters
    ----------
    net: nnrules.network.base.Network
    rule: nnrules.rules.base.Rule
    cex: nnrules.verifier.query.Counterexample

    Returns
    -------
    nnrules.verifier.query.Counterexample
    """
    n = cex.x.dim
    values = cex.x.to_list() + (cex.y.to_list() if cex.is_pair() else [])

    def split(v: List[Fraction]) -> Counterexample:
        if cex.is_pair():
            return Counterexample(x=QVector(v[:n]), y=QVector(v[n:]))
        return Counterexample(x=QVector(v))

    for k in range(len(values)):
        for candidate in simpler_values(values[k]):
            trial = values[:k] + [candidate] + values[k + 1:]
            point = split(trial)
            if rule.violated_by(net, point.x, point.y):
                values = trial
                break
    return split(values)


def simpler_values(value: Fraction) -> List[Fraction]:
    """Get candidates for replacing a value: zero, the nearest integer and
    the best approximations with denominators 2, 4, 8, ... below the
    denominator of the value.
    """
    candidates = [Fraction(0), Fraction(round(value))]
    bound = 2
    while bound < value.denominator:
        candidates.append(value.limit_denominator(bound))
        bound *= 2
    result = list()
    for c in candidates:
        if c != value and c not in result:
            result.append(c)
    return result


def verify_rule(
    net: Network, rule: Rule, mode: Optional[str] = None,
    threads: Optional[int] = None, minimize: Optional[bool] = True,
    bool_bound: Optional[int] = None
) -> Verdict:
    """Decide whether a rule holds for a network. Boolean networks are
    verified by enumeration of their Boolean inputs. All other networks are
    verified by branching search.

    Parameters
    ----------
    net: nnrules.network.base.Network
    rule: nnrules.rules.base.Rule
    mode: string, default=None
        Search mode (pruned or exhaustive).
    threads: int, default=None
        Number of search workers.
    minimize: bool, default=True
        Simplify the coordinates of counterexamples.
    bool_bound: int, default=None
        Enumeration bound for Boolean networks.

    Returns
    -------
    nnrules.verifier.base.Verdict

    Raises
    ------
    nnrules.error.DimensionError
    nnrules.error.UnsupportedError
    ValueError
    """
    if net.boolean:
        from nnrules.verifier.boolean import verify_boolean
        verdict = verify_boolean(net=net, rule=rule, bound=bool_bound)
    else:
        cex, stats = search(build_query(net, rule), mode=mode, threads=threads)
        if cex is None:
            verdict = Holds(stats=stats)
        else:
            if minimize:
                cex = minimize_witness(net, rule, cex)
            if not rule.violated_by(net, cex.x, cex.y):
                raise RuntimeError('counterexample does not validate')
            verdict = Fails(
                counterexample=cex,
                certificate=extract_certificate(net, rule, cex),
                stats=stats
            )
    logger.info(
        '%s rule: %s (%d branches, %d LP calls, %.3fs)',
        rule.kind,
        verdict,
        verdict.stats.branches,
        verdict.stats.lp_calls,
        verdict.stats.elapsed
    )
    return verdict


def verify_ruleset(
    net: Network, rules: Sequence[Rule], mode: Optional[str] = None,
    threads: Optional[int] = None, minimize: Optional[bool] = True,
    bool_bound: Optional[int] = None
) -> List[Verdict]:
    """Verify every rule in a list of rules. The set of rules holds if all
    verdicts hold.

    Parameters
    ----------
    net: nnrules.network.base.Network
    rules: list of nnrules.rules.base.Rule
    mode: string, default=None
    threads: int, default=None
    minimize: bool, default=True
    bool_bound: int, default=None

    Returns
    -------
    list of nnrules.verifier.base.Verdict
    """
    return [
        verify_rule(
            net=net,
            rule=rule,
            mode=mode,
            threads=threads,
            minimize=minimize,
            bool_bound=bool_bound
        ) for rule in rules
    ]
