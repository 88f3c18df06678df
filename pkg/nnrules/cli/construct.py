# This file is part of the Neural Network Rule Verifier (nnrules).
#
# Copyright (C) 2026 The nnrules developers.
#
# nnrules is released under the Revised BSD License. See file LICENSE for
# full license details.

"""Command line interface for the constructions: reductions between rule
kinds, generators for hardness instances, witness networks and the cube
perturbation.
"""

import click
import sys

from nnrules.arith.rational import parse_rational
from nnrules.constructions.cnf import random_cnf, read_dimacs
from nnrules.constructions.hardness import (
    BOOL_MONOTONICITY, BOOL_PROPOSITIONAL, KINDS, SAT,
    TriviallyTrue, generate_boolean_monotonicity_instance,
    generate_boolean_propositional_instance, generate_sat_instance,
    rule_set_instance
)
from nnrules.constructions.instance import VerificationInstance
from nnrules.constructions.perturb import SHIFT, perturb_network
from nnrules.constructions.reduce import (
    embed_oblique_as_mofn, embed_propositional_as_oblique,
    reduce_monotonicity_to_oblique, reduce_total_to_monotonicity
)
from nnrules.constructions.witness import build_rule_witness
from nnrules.cli.verify import EXIT_HOLDS, INPUT_ERRORS, abort
from nnrules.network.serialize import read_network, write_network
from nnrules.rules.serialize import read_rules

import nnrules.config as config


"""Reductions between rule kinds."""
MOFN = 'mofn'
MONO_OBLIQUE = 'mono-oblique'
OBLIQUE = 'oblique'
TOTAL_MONO = 'total-mono'
REDUCTIONS = [OBLIQUE, MOFN, MONO_OBLIQUE, TOTAL_MONO]


# -- Reduce -------------------------------------------------------------------

@click.command(name='reduce')
@click.option(
    '-i', '--index',
    required=False,
    default=0,
    type=click.IntRange(min=0),
    help='Index of the reduced rule'
)
@click.argument('kind', type=click.Choice(REDUCTIONS))
@click.argument(
    'network',
    type=click.Path(file_okay=True, dir_okay=False, exists=True)
)
@click.argument(
    'rules',
    type=click.Path(file_okay=True, dir_okay=False, exists=True)
)
@click.argument(
    'outdir',
    type=click.Path(file_okay=False, dir_okay=True)
)
def reduce_rule(index, kind, network, rules, outdir):
    """Reduce a rule to a rule of another kind."""
    try:
        net = read_network(network)
        ruleset = read_rules(rules)
        if index >= len(ruleset):
            raise ValueError('no rule with index {}'.format(index))
        rule = ruleset[index]
        if kind == OBLIQUE:
            rule = embed_propositional_as_oblique(rule)
        elif kind == MOFN:
            rule = embed_oblique_as_mofn(rule)
        elif kind == MONO_OBLIQUE:
            net, rule = reduce_monotonicity_to_oblique(net, rule)
        else:
            net, rule = reduce_total_to_monotonicity(net, rule)
        instance = VerificationInstance(net=net, rules=[rule], kind='reduce-' + kind)
    except INPUT_ERRORS as ex:
        abort(ex)
    instance.write(outdir)
    click.echo('Reduced {} rule written to {}.'.format(rule.kind, outdir))


# -- Generate -----------------------------------------------------------------

@click.command(name='gen')
@click.option(
    '-f', '--cnf',
    required=False,
    type=click.Path(file_okay=True, dir_okay=False, exists=True),
    help='DIMACS file with the source formula'
)
@click.option(
    '-n', '--variables',
    required=False,
    default=3,
    type=click.IntRange(min=1),
    help='Number of variables of a random formula'
)
@click.option(
    '-q', '--clauses',
    required=False,
    default=4,
    type=click.IntRange(min=1),
    help='Number of clauses of a random formula'
)
@click.option(
    '-s', '--seed',
    required=False,
    type=int,
    help='Seed for random formulas'
)
@click.option(
    '-w', '--with-truth',
    is_flag=True,
    default=False,
    help='Record the expected outcome'
)
@click.option(
    '-b', '--bool-bound',
    required=False,
    type=click.IntRange(min=1),
    help='Maximal number of variables for --with-truth'
)
@click.argument('kind', type=click.Choice(KINDS))
@click.argument(
    'outdir',
    type=click.Path(file_okay=False, dir_okay=True)
)
def generate_instance(cnf, variables, clauses, seed, with_truth, bool_bound, kind, outdir):
    """Generate an instance from a CNF formula. Without a DIMACS file a
    random 3-CNF formula is used.
    """
    job = config.JobConfig.create(
        command='gen',
        inputs=[cnf] if cnf is not None else None,
        output=outdir,
        bool_bound=bool_bound,
        seed=seed
    )
    try:
        if cnf is not None:
            formula = read_dimacs(cnf)
        else:
            formula = random_cnf(variables, clauses, seed=job.seed())
        if with_truth and formula.num_vars > job.bool_bound():
            raise ValueError(
                '{} variables exceed the enumeration bound {}'.format(
                    formula.num_vars,
                    job.bool_bound()
                )
            )
        if kind == SAT:
            instance = generate_sat_instance(formula, with_truth=with_truth)
        elif kind == BOOL_MONOTONICITY:
            instance = generate_boolean_monotonicity_instance(formula, with_truth=with_truth)
        elif kind == BOOL_PROPOSITIONAL:
            instance = generate_boolean_propositional_instance(formula, with_truth=with_truth)
        else:
            instance = rule_set_instance(formula, kind=kind, with_truth=with_truth)
    except INPUT_ERRORS as ex:
        abort(ex)
    if isinstance(instance, TriviallyTrue):
        click.echo('TRIVIALLY TRUE: {}'.format(instance.reason))
        sys.exit(EXIT_HOLDS)
    instance.write(outdir)
    click.echo('Instance written to {}.'.format(outdir))
    if instance.ground_truth is not None:
        click.echo('Expected outcome: {}'.format(instance.ground_truth))


# -- Witness ------------------------------------------------------------------

@click.command(name='witness')
@click.argument(
    'rules',
    type=click.Path(file_okay=True, dir_okay=False, exists=True)
)
@click.argument(
    'output',
    type=click.Path(file_okay=True, dir_okay=False)
)
def witness_network(rules, output):
    """Construct a network that obeys all rules."""
    try:
        net = build_rule_witness(read_rules(rules))
    except INPUT_ERRORS as ex:
        abort(ex)
    write_network(net, output)
    click.echo('Witness network written to {}.'.format(output))


# -- Perturb ------------------------------------------------------------------

@click.command(name='perturb')
@click.option(
    '-s', '--shift',
    required=False,
    default=str(SHIFT),
    help='Shift factor (rational)'
)
@click.argument(
    'network',
    type=click.Path(file_okay=True, dir_okay=False, exists=True)
)
@click.argument(
    'output',
    type=click.Path(file_okay=True, dir_okay=False)
)
def perturb(shift, network, output):
    """Perturb a network inside the unit cube."""
    try:
        net = perturb_network(read_network(network), shift=parse_rational(shift))
    except INPUT_ERRORS as ex:
        abort(ex)
    write_network(net, output)
    click.echo('Perturbed network written to {}.'.format(output))
