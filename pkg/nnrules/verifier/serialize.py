# This file is part of the Neural Network Rule Verifier (nnrules).
#
# Copyright (C) 2026 The nnrules developers.
#
# nnrules is released under the Revised BSD License. See file LICENSE for
# full license details.

"""Serialization of counterexamples and certificates. A counterexample file
is a Json array with one object per failed rule. Each object contains the
index of the rule, the witness (or the pair of witnesses for monotonicity
rules) and the certificate (if any).
"""

from typing import Dict, List, Optional, Tuple

from nnrules.arith.rational import format_rational, parse_rational
from nnrules.arith.vector import QVector
from nnrules.rules.formula import Relation
from nnrules.verifier.certificate import Certificate
from nnrules.verifier.encoding import PHASES
from nnrules.verifier.query import Counterexample

import nnrules.util as util


RELATIONS = [r.value for r in Relation]

VECTOR_SCHEMA = {'type': 'array', 'items': {'type': 'string'}}

CERTIFICATE_SCHEMA = {
    'type': 'object',
    'properties': {
        'rule_index': {'type': 'integer', 'minimum': 0},
        'parts': {
            'oneOf': [
                {'type': 'null'},
                {'type': 'array', 'items': {'type': 'integer', 'enum': [0, 1]}}
            ]
        },
        'phases': {'type': 'array', 'items': {'type': 'string', 'enum': PHASES}},
        'input_halfspaces': {'type': 'array', 'items': {'type': 'string', 'enum': RELATIONS}},
        'output_halfspaces': {'type': 'array', 'items': {'type': 'string', 'enum': RELATIONS}},
        'argmax': {
            'oneOf': [
                {'type': 'null'},
                {'type': 'array', 'items': {'type': 'integer', 'minimum': 0}}
            ]
        }
    },
    'required': ['phases', 'input_halfspaces', 'output_halfspaces']
}

COUNTEREXAMPLE_SCHEMA = {
    'type': 'object',
    'properties': {
        'rule_index': {'type': 'integer', 'minimum': 0},
        'witness': VECTOR_SCHEMA,
        'witness_x': VECTOR_SCHEMA,
        'witness_y': VECTOR_SCHEMA,
        'certificate': {'oneOf': [{'type': 'null'}, CERTIFICATE_SCHEMA]}
    },
    'required': ['rule_index'],
    'oneOf': [
        {'required': ['witness']},
        {'required': ['witness_x', 'witness_y']}
    ]
}

COUNTEREXAMPLES_SCHEMA = {'type': 'array', 'items': COUNTEREXAMPLE_SCHEMA}


# -- Certificates -------------------------------------------------------------

def certificate_from_dict(doc: Dict) -> Certificate:
    """Create a certificate from its dictionary serialization."""
    parts = doc.get('parts')
    argmax = doc.get('argmax')
    return Certificate(
        parts=tuple(parts) if parts is not None else None,
        phases=tuple(doc['phases']),
        input_halfspaces=tuple(Relation(r) for r in doc['input_halfspaces']),
        output_halfspaces=tuple(Relation(r) for r in doc['output_halfspaces']),
        argmax=tuple(argmax) if argmax is not None else None
    )


def certificate_to_dict(cert: Certificate, rule_index: Optional[int] = None) -> Dict:
    """Get the dictionary serialization of a certificate."""
    doc = dict()
    if rule_index is not None:
        doc['rule_index'] = rule_index
    doc['parts'] = list(cert.parts) if cert.parts is not None else None
    doc['phases'] = list(cert.phases)
    doc['input_halfspaces'] = [r.value for r in cert.input_halfspaces]
    doc['output_halfspaces'] = [r.value for r in cert.output_halfspaces]
    doc['argmax'] = list(cert.argmax) if cert.argmax is not None else None
    return doc


def read_certificate(filename: str) -> Tuple[int, Certificate]:
    """Read a certificate from file. Returns the index of the rule that the
    certificate refers to (0 if not given) and the certificate.

    Raises
    ------
    jsonschema.ValidationError
    nnrules.error.ParseError
    """
    doc = util.read_json(filename, schema=CERTIFICATE_SCHEMA)
    return doc.get('rule_index', 0), certificate_from_dict(doc)


def write_certificate(cert: Certificate, filename: str, rule_index: Optional[int] = None):
    """Write a certificate to file."""
    util.write_json(certificate_to_dict(cert, rule_index=rule_index), filename)


# -- Counterexamples ----------------------------------------------------------

def counterexample_from_dict(doc: Dict) -> Tuple[int, Counterexample, Optional[Certificate]]:
    """Get the rule index, the counterexample and the certificate from a
    dictionary serialization.
    """
    if 'witness' in doc:
        cex = Counterexample(x=parse_vector(doc['witness']))
    else:
        cex = Counterexample(x=parse_vector(doc['witness_x']), y=parse_vector(doc['witness_y']))
    cert = doc.get('certificate')
    return doc['rule_index'], cex, certificate_from_dict(cert) if cert else None


def counterexample_to_dict(
    rule_index: int, cex: Counterexample, cert: Optional[Certificate] = None
) -> Dict:
    """Get the dictionary serialization of a counterexample."""
    doc = {'rule_index': rule_index}
    if cex.is_pair():
        doc['witness_x'] = format_vector(cex.x)
        doc['witness_y'] = format_vector(cex.y)
    else:
        doc['witness'] = format_vector(cex.x)
    doc['certificate'] = certificate_to_dict(cert) if cert is not None else None
    return doc


def read_counterexamples(filename: str) -> List[Tuple[int, Counterexample, Optional[Certificate]]]:
    """Read a list of counterexamples from file.

    Raises
    ------
    jsonschema.ValidationError
    nnrules.error.ParseError
    """
    docs = util.read_json(filename, schema=COUNTEREXAMPLES_SCHEMA)
    return [counterexample_from_dict(doc) for doc in docs]


def write_counterexamples(docs: List[Dict], filename: str):
    """Write a list of serialized counterexamples to file."""
    util.write_json(docs, filename)


# -- Helper Functions ---------------------------------------------------------

def format_vector(v: QVector) -> List[str]:
    return [format_rational(x) for x in v]


def parse_vector(values: List[str]) -> QVector:
    return QVector(parse_rational(x) for x in values)
