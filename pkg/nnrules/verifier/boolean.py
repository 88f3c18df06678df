# This file is part of the Neural Network Rule Verifier (nnrules).
#
# Copyright (C) 2026 The nnrules developers.
#
# nnrules is released under the Revised BSD License. See file LICENSE for
# full license details.

"""Verification of rules for Boolean networks by enumeration of all inputs
in {0,1}^n. The counterexample is the certificate.
"""

from itertools import product
from typing import List, Optional

import time

from nnrules.arith.vector import QVector, mat_vec
from nnrules.error import UnsupportedError
from nnrules.network.base import Network
from nnrules.rules.base import MonotonicityRule, Rule, TotalMonotonicityRule, classified
from nnrules.verifier.base import Fails, Holds, Verdict
from nnrules.verifier.query import Counterexample
from nnrules.verifier.search import SearchStatistics

import nnrules.config as config


def boolean_inputs(n: int) -> List[QVector]:
    """Get all vectors in {0,1}^n in lexicographic order."""
    return [QVector(x) for x in product((0, 1), repeat=n)]


def verify_boolean(net: Network, rule: Rule, bound: Optional[int] = None) -> Verdict:
    """Decide whether a rule holds for a Boolean network by enumerating all
    Boolean inputs (pairs of inputs for monotonicity rules).

    Parameters
    ----------
    net: nnrules.network.base.Network
        Boolean network.
    rule: nnrules.rules.base.Rule
    bound: int, default=None
        Maximal number of network inputs. Uses config.BOOL_BOUND() if not
        given.

    Returns
    -------
    nnrules.verifier.base.Verdict

    Raises
    ------
    nnrules.error.DimensionError
    nnrules.error.UnsupportedError
    """
    bound = bound if bound is not None else config.BOOL_BOUND()
    if not net.boolean:
        raise UnsupportedError('enumeration requires a Boolean network')
    if net.input_dim > bound:
        raise UnsupportedError(
            'Boolean network with {} inputs exceeds enumeration bound {}'.format(
                net.input_dim,
                bound
            )
        )
    rule.check_dims(net)
    start = time.perf_counter()
    stats = SearchStatistics()
    points = boolean_inputs(net.input_dim)
    cex = None
    if not rule.is_pairwise():
        for x in points:
            stats.branches += 1
            if rule.violated_by(net, x):
                cex = Counterexample(x=x)
                break
    else:
        cex = find_pair(net, rule, points, stats)
    stats.elapsed = time.perf_counter() - start
    if cex is None:
        return Holds(stats=stats)
    if not rule.violated_by(net, cex.x, cex.y):
        raise RuntimeError('enumerated counterexample does not validate')
    return Fails(counterexample=cex, stats=stats)


def find_pair(
    net: Network, rule: MonotonicityRule, points: List[QVector],
    stats: SearchStatistics
) -> Optional[Counterexample]:
    """Find the first pair (x, y) in lexicographic order that violates a
    monotonicity rule. Network outputs are computed once per input.
    """
    i = rule.i - 1
    images = [mat_vec(rule.A, x) for x in points]
    if isinstance(rule, TotalMonotonicityRule):
        outputs = [net.evaluate(x)[i] for x in points]
    else:
        flags = [classified(net, x, rule.i) for x in points]
    for kx, x in enumerate(points):
        if not isinstance(rule, TotalMonotonicityRule) and not flags[kx]:
            stats.branches += len(points)
            continue
        for ky, y in enumerate(points):
            stats.branches += 1
            if isinstance(rule, TotalMonotonicityRule):
                if not outputs[kx] > outputs[ky]:
                    continue
            elif flags[ky]:
                continue
            if all(a <= b for a, b in zip(images[kx], images[ky])):
                return Counterexample(x=x, y=y)
    return None
