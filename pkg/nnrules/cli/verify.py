# This file is part of the Neural Network Rule Verifier (nnrules).
#
# Copyright (C) 2026 The nnrules developers.
#
# nnrules is released under the Revised BSD License. See file LICENSE for
# full license details.

"""Command line interface to verify rules, evaluate networks and check
certificates. Exit status 0 means that all rules hold (or a certificate is
accepted), 1 that a rule fails (or a certificate is rejected) and 2 that the
input is invalid.
"""

from typing import List

import click
import jsonschema
import sys

from nnrules.arith.rational import format_rational, parse_rational
from nnrules.arith.vector import QVector
from nnrules.error import UnsupportedError
from nnrules.network.serialize import read_network
from nnrules.rules.serialize import read_rules
from nnrules.verifier.base import verify_ruleset
from nnrules.verifier.certificate import STRUCTURAL, check_certificate
from nnrules.verifier.serialize import (
    counterexample_to_dict, read_certificate, read_counterexamples,
    write_counterexamples
)

import nnrules.config as config


"""Exit status codes."""
EXIT_HOLDS = 0
EXIT_FAILS = 1
EXIT_INVALID = 2

"""Errors that are reported as invalid input."""
INPUT_ERRORS = (ValueError, jsonschema.ValidationError)


# -- Verify -------------------------------------------------------------------

@click.command(name='verify')
@click.option(
    '-m', '--mode',
    required=False,
    type=click.Choice(config.MODES),
    help='Search mode'
)
@click.option(
    '-t', '--threads',
    required=False,
    type=click.IntRange(min=1),
    help='Number of search workers'
)
@click.option(
    '-b', '--bool-bound',
    required=False,
    type=click.IntRange(min=1),
    help='Maximal number of inputs for Boolean enumeration'
)
@click.option(
    '-e', '--emit-cex',
    required=False,
    type=click.Path(file_okay=True, dir_okay=False),
    help='Output file for counterexamples'
)
@click.argument(
    'network',
    type=click.Path(file_okay=True, dir_okay=False, exists=True)
)
@click.argument(
    'rules',
    type=click.Path(file_okay=True, dir_okay=False, exists=True)
)
def verify_rules(mode, threads, bool_bound, emit_cex, network, rules):
    """Verify all rules for a network."""
    job = config.JobConfig.create(
        command='verify',
        inputs=[network, rules],
        output=emit_cex,
        mode=mode,
        threads=threads,
        bool_bound=bool_bound
    )
    try:
        net = read_network(network)
        ruleset = read_rules(rules)
        verdicts = verify_ruleset(
            net=net,
            rules=ruleset,
            mode=job.mode(),
            threads=job.threads(),
            bool_bound=job.bool_bound()
        )
    except INPUT_ERRORS as ex:
        abort(ex)
    failed = list()
    for index, (rule, verdict) in enumerate(zip(ruleset, verdicts)):
        click.echo('rule {} ({}): {} ({} branches, {} LP calls, {:.3f}s)'.format(
            index,
            rule.kind,
            verdict,
            verdict.stats.branches,
            verdict.stats.lp_calls,
            verdict.stats.elapsed
        ))
        if not verdict.holds():
            cex = verdict.counterexample
            if cex.is_pair():
                click.echo('  x = {}'.format(format_vector(cex.x)))
                click.echo('  y = {}'.format(format_vector(cex.y)))
            else:
                click.echo('  x = {}'.format(format_vector(cex.x)))
            failed.append(counterexample_to_dict(index, cex, verdict.certificate))
    if not failed:
        click.echo('ALL RULES HOLD')
        sys.exit(EXIT_HOLDS)
    click.echo('{} OF {} RULES FAIL'.format(len(failed), len(ruleset)))
    if job.output() is not None:
        write_counterexamples(failed, job.output())
        click.echo('Counterexamples written to {}.'.format(job.output()))
    sys.exit(EXIT_FAILS)


# -- Evaluate -----------------------------------------------------------------

@click.command(name='eval')
@click.option(
    '-c', '--cex',
    required=False,
    type=click.Path(file_okay=True, dir_okay=False, exists=True),
    help='Evaluate the inputs of a counterexample file'
)
@click.option(
    '-r', '--rules',
    required=False,
    type=click.Path(file_okay=True, dir_okay=False, exists=True),
    help='Re-validate counterexamples against the rules in this file'
)
@click.argument(
    'network',
    type=click.Path(file_okay=True, dir_okay=False, exists=True)
)
@click.argument('values', nargs=-1)
def eval_network(cex, rules, network, values):
    """Evaluate a network for an input vector.

    Negative values have to follow a '--' separator.
    """
    try:
        net = read_network(network)
        if cex is None:
            x = QVector(parse_rational(v) for v in values)
            click.echo(format_vector(net.evaluate(x)))
            sys.exit(EXIT_HOLDS)
        ruleset = read_rules(rules) if rules is not None else None
        status = EXIT_HOLDS
        for index, c, _ in read_counterexamples(cex):
            points = [c.x, c.y] if c.is_pair() else [c.x]
            for x in points:
                click.echo(format_vector(net.evaluate(x)))
            if ruleset is not None:
                if ruleset[index].violated_by(net, c.x, c.y):
                    click.echo('  violates rule {}'.format(index))
                else:
                    click.echo('  does not violate rule {}'.format(index))
                    status = EXIT_FAILS
    except IndexError:
        abort(ValueError('counterexample refers to unknown rule'))
    except INPUT_ERRORS as ex:
        abort(ex)
    sys.exit(status)


# -- Check certificate --------------------------------------------------------

@click.command(name='check-cert')
@click.argument(
    'network',
    type=click.Path(file_okay=True, dir_okay=False, exists=True)
)
@click.argument(
    'rules',
    type=click.Path(file_okay=True, dir_okay=False, exists=True)
)
@click.argument(
    'certificate',
    type=click.Path(file_okay=True, dir_okay=False, exists=True)
)
def check_cert(network, rules, certificate):
    """Check a certificate for the violation of a rule."""
    try:
        net = read_network(network)
        ruleset = read_rules(rules)
        index, cert = read_certificate(certificate)
        if index < 0 or index >= len(ruleset):
            raise ValueError('certificate refers to unknown rule {}'.format(index))
        if net.boolean:
            raise UnsupportedError('counterexamples for Boolean networks are their own certificates')
        result = check_certificate(net, ruleset[index], cert)
    except INPUT_ERRORS as ex:
        abort(ex)
    if result.is_accepted():
        click.echo('ACCEPTED')
        witness = result.witness
        click.echo('  x = {}'.format(format_vector(witness.x)))
        if witness.is_pair():
            click.echo('  y = {}'.format(format_vector(witness.y)))
        sys.exit(EXIT_HOLDS)
    click.echo('REJECTED ({}): {}'.format(result.reason, result.message))
    sys.exit(EXIT_INVALID if result.reason == STRUCTURAL else EXIT_FAILS)


# -- Helper Functions ---------------------------------------------------------

def abort(ex: Exception):
    """Print the error message and exit with the status for invalid
    input.
    """
    click.echo('Error: {}'.format(ex), err=True)
    sys.exit(EXIT_INVALID)


def format_vector(values: List) -> str:
    """Space separated list of rationals in p/q form."""
    return ' '.join(format_rational(v) for v in values)
