# This file is part of the Neural Network Rule Verifier (nnrules).
#
# Copyright (C) 2026 The nnrules developers.
#
# nnrules is released under the Revised BSD License. See file LICENSE for
# full license details.

"""Unit tests for reading and writing certificates and counterexamples."""

import json
import os

import jsonschema
import pytest

from nnrules.arith.vector import QVector
from nnrules.rules.formula import Relation
from nnrules.verifier.certificate import Certificate
from nnrules.verifier.encoding import ACTIVE, INACTIVE
from nnrules.verifier.query import Counterexample
from nnrules.verifier.serialize import (
    counterexample_to_dict, read_certificate, read_counterexamples,
    write_certificate, write_counterexamples
)


CERT = Certificate(
    parts=(1, 0),
    phases=(ACTIVE, INACTIVE),
    input_halfspaces=(Relation.LT, Relation.EQ, Relation.GE),
    output_halfspaces=(Relation.GT,)
)


def test_certificate_file(tmpdir):
    """Test writing and reading certificates with and without rule index."""
    filename = os.path.join(str(tmpdir), 'cert.json')
    write_certificate(CERT, filename, rule_index=3)
    assert read_certificate(filename) == (3, CERT)
    cert = CERT.replace(parts=None, argmax=(0, 2))
    write_certificate(cert, filename)
    assert read_certificate(filename) == (0, cert)
    with open(filename, 'w') as f:
        json.dump({'phases': ['half'], 'input_halfspaces': [], 'output_halfspaces': []}, f)
    with pytest.raises(jsonschema.ValidationError):
        read_certificate(filename)


def test_counterexamples_file(tmpdir):
    """Test writing and reading single inputs and pairs of inputs."""
    filename = os.path.join(str(tmpdir), 'cex.json')
    single = Counterexample(x=QVector(['1/3', -2]))
    pair = Counterexample(x=QVector([0]), y=QVector(['5/2']))
    docs = [counterexample_to_dict(0, single, CERT), counterexample_to_dict(2, pair)]
    assert docs[0]['witness'] == ['1/3', '-2']
    assert docs[1]['witness_y'] == ['5/2']
    write_counterexamples(docs, filename)
    assert read_counterexamples(filename) == [(0, single, CERT), (2, pair, None)]
    with open(filename, 'w') as f:
        json.dump([{'rule_index': 0, 'witness_x': ['1']}], f)
    with pytest.raises(jsonschema.ValidationError):
        read_counterexamples(filename)
