# This file is part of the Neural Network Rule Verifier (nnrules).
#
# Copyright (C) 2026 The nnrules developers.
#
# nnrules is released under the Revised BSD License. See file LICENSE for
# full license details.

"""Unit tests for the command-line commands of the constructions."""

import os
import pytest

from click.testing import CliRunner

from nnrules.arith.vector import QMatrix, QVector
from nnrules.cli.base import cli
from nnrules.constructions.instance import read_instance
from nnrules.network.gadget import affine_network
from nnrules.network.serialize import read_network, write_network
from nnrules.rules.base import (
    MofNRule, MonotonicityRule, ObliqueRule, PropositionalRule, TotalMonotonicityRule
)
from nnrules.rules.formula import Relation, box, interval
from nnrules.rules.serialize import write_rules


# -- Fixtures and Helper Functions --------------------------------------------

"""Network with outputs (x, 0)."""
STEP = affine_network(QMatrix.from_rows([[1], [0]]), QVector([0, 0]))

RULES = [
    PropositionalRule(box([0], [1]), interval(2, 0, lower=0)),
    ObliqueRule(box([0], [1]), interval(2, 1, upper=0)),
    MonotonicityRule(QMatrix.identity(1), 1),
    TotalMonotonicityRule(QMatrix.identity(1), 1)
]


@pytest.fixture
def files(tmpdir):
    basedir = str(tmpdir)
    network = os.path.join(basedir, 'network.json')
    write_network(STEP, network)
    rules = os.path.join(basedir, 'rules.json')
    write_rules(RULES, rules)
    return basedir, network, rules


def write_text(basedir, name, text):
    filename = os.path.join(basedir, name)
    with open(filename, 'w') as f:
        f.write(text)
    return filename


# -- Reduce -------------------------------------------------------------------

@pytest.mark.parametrize(
    'kind,index,rule_type,input_dim',
    [
        ('oblique', 0, ObliqueRule, 1),
        ('mofn', 1, MofNRule, 1),
        ('mono-oblique', 2, ObliqueRule, 2),
        ('total-mono', 3, MonotonicityRule, 2)
    ]
)
def test_reduce_rules(kind, index, rule_type, input_dim, files):
    """Test reductions that write a new instance."""
    basedir, network, rules = files
    outdir = os.path.join(basedir, kind)
    args = ['reduce', '-i', str(index), kind, network, rules, outdir]
    result = CliRunner().invoke(cli, args)
    assert result.exit_code == 0
    assert result.output.startswith('Reduced ')
    instance = read_instance(outdir)
    assert instance.kind == 'reduce-' + kind
    assert len(instance.rules) == 1
    assert type(instance.rules[0]) is rule_type
    assert instance.net.input_dim == input_dim


def test_reduce_errors(files):
    basedir, network, rules = files
    outdir = os.path.join(basedir, 'out')
    # Rule index out of range.
    result = CliRunner().invoke(cli, ['reduce', '-i', '4', 'oblique', network, rules, outdir])
    assert result.exit_code == 2
    # Monotonicity rules cannot be embedded as oblique rules.
    result = CliRunner().invoke(cli, ['reduce', '-i', '2', 'oblique', network, rules, outdir])
    assert result.exit_code == 2
    result = CliRunner().invoke(cli, ['reduce', 'fuzzy', network, rules, outdir])
    assert result.exit_code == 2
    assert not os.path.isdir(outdir)


# -- Generate -----------------------------------------------------------------

def test_generate_from_dimacs(tmpdir):
    """Test generating instances from a DIMACS file."""
    basedir = str(tmpdir)
    cnf = write_text(basedir, 'formula.cnf', 'c example\np cnf 2 2\n1 -2 0\n2 0\n')
    outdir = os.path.join(basedir, 'sat')
    result = CliRunner().invoke(cli, ['gen', '-f', cnf, '-w', 'sat', outdir])
    assert result.exit_code == 0
    assert 'Expected outcome: fails' in result.output
    instance = read_instance(outdir)
    assert instance.ground_truth == 'fails'
    assert instance.properties == {'variables': 2, 'clauses': 2}
    outdir = os.path.join(basedir, 'bool-prop')
    result = CliRunner().invoke(cli, ['gen', '-f', cnf, 'bool-prop', outdir])
    assert result.exit_code == 0
    assert 'Expected outcome' not in result.output
    assert read_instance(outdir).net.boolean
    # The formula holds for (1, 1).
    outdir = os.path.join(basedir, 'bool-mono')
    result = CliRunner().invoke(cli, ['gen', '-f', cnf, 'bool-mono', outdir])
    assert result.exit_code == 0
    assert result.output.startswith('TRIVIALLY TRUE')
    assert not os.path.isdir(outdir)


def test_generate_random_formula(tmpdir):
    basedir = str(tmpdir)
    outdirs = [os.path.join(basedir, 'run{}'.format(i)) for i in range(2)]
    for outdir in outdirs:
        args = ['gen', '-n', '3', '-q', '2', '-s', '7', '-w', 'consistency', outdir]
        result = CliRunner().invoke(cli, args)
        assert result.exit_code == 0
    a, b = [read_instance(d) for d in outdirs]
    assert len(a.rules) == 3
    assert a.rules == b.rules
    assert a.ground_truth in ['consistent', 'contradictory']
    outdir = os.path.join(basedir, 'exhaustiveness')
    result = CliRunner().invoke(cli, ['gen', '-n', '2', '-q', '1', 'exhaustiveness', outdir])
    assert result.exit_code == 0
    assert read_instance(outdir).net.evaluate([5, 5]) == QVector([0])


def test_generate_errors(tmpdir):
    basedir = str(tmpdir)
    outdir = os.path.join(basedir, 'out')
    cnf = write_text(basedir, 'formula.cnf', 'p cnf 3 1\n1 2 -3 0\n')
    result = CliRunner().invoke(cli, ['gen', '-f', cnf, '-w', '-b', '2', 'sat', outdir])
    assert result.exit_code == 2
    cnf = write_text(basedir, 'malformed.cnf', 'p cnf 2 x\n1 0\n')
    result = CliRunner().invoke(cli, ['gen', '-f', cnf, 'sat', outdir])
    assert result.exit_code == 2
    result = CliRunner().invoke(cli, ['gen', 'unknown', outdir])
    assert result.exit_code == 2
    assert not os.path.isdir(outdir)


# -- Witness and perturbation -------------------------------------------------

def test_witness_network(tmpdir):
    basedir = str(tmpdir)
    rules = os.path.join(basedir, 'rules.json')
    write_rules([
        PropositionalRule(box([0], [1]), interval(1, 0, 2, 2)),
        PropositionalRule(box([3], [4]), interval(1, 0, -1, -1))
    ], rules)
    output = os.path.join(basedir, 'witness.json')
    result = CliRunner().invoke(cli, ['witness', rules, output])
    assert result.exit_code == 0
    net = read_network(output)
    assert net.evaluate(['1/2']) == QVector([2])
    assert net.evaluate(['7/2']) == QVector([-1])
    assert net.evaluate([2]) == QVector([0])
    # Sets of monotonicity rules are obeyed by the zero network.
    write_rules([MonotonicityRule(QMatrix.identity(2), 2)], rules)
    result = CliRunner().invoke(cli, ['witness', rules, output])
    assert result.exit_code == 0
    assert read_network(output).evaluate([1, 2]) == QVector([0, 0])
    # Unsupported rule kind.
    write_rules([
        MofNRule([box([0], [1])], Relation.GE, 1, interval(1, 0, lower=0))
    ], rules)
    result = CliRunner().invoke(cli, ['witness', rules, output])
    assert result.exit_code == 2


def test_perturb_network(tmpdir):
    basedir = str(tmpdir)
    network = os.path.join(basedir, 'network.json')
    write_network(affine_network(QMatrix.identity(1), QVector([0])), network)
    output = os.path.join(basedir, 'perturbed.json')
    result = CliRunner().invoke(cli, ['perturb', network, output])
    assert result.exit_code == 0
    net = read_network(output)
    assert net.evaluate(['1/2']) == QVector(['3/4'])
    assert net.evaluate([2]) == QVector([2])
    result = CliRunner().invoke(cli, ['perturb', '-s', '1/4', network, output])
    assert result.exit_code == 0
    assert read_network(output).evaluate(['1/2']) == QVector(['5/8'])
    result = CliRunner().invoke(cli, ['perturb', '-s', 'half', network, output])
    assert result.exit_code == 2
