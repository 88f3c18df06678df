# This file is part of the Neural Network Rule Verifier (nnrules).
#
# Copyright (C) 2026 The nnrules developers.
#
# nnrules is released under the Revised BSD License. See file LICENSE for
# full license details.

"""Serialization of formulas and rules as Json documents. A rules file is a
Json array of rule objects. Rationals are encoded as strings.
"""

from typing import Dict, List

from nnrules.arith.rational import format_rational, parse_rational
from nnrules.arith.vector import QMatrix, QVector
from nnrules.rules.base import (
    ConditionalRule, MofNRule, MonotonicityRule, ObliqueRule,
    PropositionalRule, Rule, TotalMonotonicityRule,
    MOFN, MONOTONICITY, OBLIQUE, PROPOSITIONAL, TOTAL_MONOTONICITY
)
from nnrules.rules.formula import (
    And, Atom, Bottom, Formula, LinearAtom, Not, Or, Relation, Top, FALSE, TRUE
)

import nnrules.util as util


RELATIONS = [r.value for r in Relation]

FORMULA_SCHEMA = {
    'type': 'object',
    'properties': {
        'op': {'type': 'string', 'enum': ['and', 'or', 'not', 'atom', 'true', 'false']},
        'args': {'type': 'array', 'items': {'$ref': '#/definitions/formula'}},
        'arg': {'$ref': '#/definitions/formula'},
        'coeffs': {'type': 'array', 'items': {'type': 'string'}},
        'rel': {'type': 'string', 'enum': RELATIONS},
        'const': {'type': 'string'}
    },
    'required': ['op'],
    'allOf': [
        {
            'if': {'properties': {'op': {'const': 'atom'}}},
            'then': {'required': ['coeffs', 'rel', 'const']}
        },
        {
            'if': {'properties': {'op': {'enum': ['and', 'or']}}},
            'then': {'required': ['args']}
        },
        {
            'if': {'properties': {'op': {'const': 'not'}}},
            'then': {'required': ['arg']}
        }
    ]
}

MATRIX_SCHEMA = {
    'type': 'array',
    'items': {'type': 'array', 'items': {'type': 'string'}}
}

RULE_SCHEMA = {
    'type': 'object',
    'properties': {
        'kind': {
            'type': 'string',
            'enum': [PROPOSITIONAL, OBLIQUE, MOFN, MONOTONICITY, TOTAL_MONOTONICITY]
        },
        'cond': {'$ref': '#/definitions/formula'},
        'concl': {'$ref': '#/definitions/formula'},
        'parts': {'type': 'array', 'items': {'$ref': '#/definitions/formula'}},
        'cmp': {'type': 'string', 'enum': ['<=', '=', '>=']},
        'r': {'type': 'integer', 'minimum': 0},
        'A': MATRIX_SCHEMA,
        'i': {'type': 'integer', 'minimum': 1}
    },
    'required': ['kind'],
    'allOf': [
        {
            'if': {'properties': {'kind': {'enum': [PROPOSITIONAL, OBLIQUE]}}},
            'then': {'required': ['cond', 'concl']}
        },
        {
            'if': {'properties': {'kind': {'const': MOFN}}},
            'then': {'required': ['parts', 'cmp', 'r', 'concl']}
        },
        {
            'if': {'properties': {'kind': {'enum': [MONOTONICITY, TOTAL_MONOTONICITY]}}},
            'then': {'required': ['A', 'i']}
        }
    ]
}

RULESET_SCHEMA = {
    'definitions': {'formula': FORMULA_SCHEMA, 'rule': RULE_SCHEMA},
    'type': 'array',
    'items': {'$ref': '#/definitions/rule'}
}


# -- Formulas -----------------------------------------------------------------

def formula_from_dict(doc: Dict) -> Formula:
    """Create a formula from its dictionary serialization.

    Parameters
    ----------
    doc: dict

    Returns
    -------
    nnrules.rules.formula.Formula

    Raises
    ------
    nnrules.error.ParseError
    """
    op = doc['op']
    if op == 'atom':
        return Atom(
            LinearAtom(
                QVector(parse_rational(v) for v in doc['coeffs']),
                Relation(doc['rel']),
                parse_rational(doc['const'])
            )
        )
    elif op == 'not':
        return Not(formula_from_dict(doc['arg']))
    elif op == 'and':
        return And(tuple(formula_from_dict(c) for c in doc['args']))
    elif op == 'or':
        return Or(tuple(formula_from_dict(c) for c in doc['args']))
    return TRUE if op == 'true' else FALSE


def formula_to_dict(formula: Formula) -> Dict:
    """Get the dictionary serialization for a formula."""
    if isinstance(formula, Atom):
        a = formula.atom
        return {
            'op': 'atom',
            'coeffs': [format_rational(v) for v in a.coeffs],
            'rel': a.rel.value,
            'const': format_rational(a.const)
        }
    elif isinstance(formula, Not):
        return {'op': 'not', 'arg': formula_to_dict(formula.child)}
    elif isinstance(formula, And):
        return {'op': 'and', 'args': [formula_to_dict(c) for c in formula.children]}
    elif isinstance(formula, Or):
        return {'op': 'or', 'args': [formula_to_dict(c) for c in formula.children]}
    elif isinstance(formula, Top):
        return {'op': 'true'}
    elif isinstance(formula, Bottom):
        return {'op': 'false'}
    raise ValueError("unknown formula element '{}'".format(formula))


# -- Rules --------------------------------------------------------------------

def matrix_from_list(rows: List[List[str]], cols: int = None) -> QMatrix:
    """Parse a matrix of rational strings."""
    return QMatrix.from_rows([[parse_rational(v) for v in row] for row in rows], cols=cols)


def matrix_to_list(A: QMatrix) -> List[List[str]]:
    """Get the serialization of a matrix as a list of lists of strings."""
    return [[format_rational(v) for v in row] for row in A.to_lists()]


def rule_from_dict(doc: Dict) -> Rule:
    """Create a rule from its dictionary serialization.

    Parameters
    ----------
    doc: dict

    Returns
    -------
    nnrules.rules.base.Rule

    Raises
    ------
    nnrules.error.ParseError
    ValueError
    """
    kind = doc['kind']
    if kind == PROPOSITIONAL:
        return PropositionalRule(
            cond=formula_from_dict(doc['cond']),
            concl=formula_from_dict(doc['concl'])
        )
    elif kind == OBLIQUE:
        return ObliqueRule(
            cond=formula_from_dict(doc['cond']),
            concl=formula_from_dict(doc['concl'])
        )
    elif kind == MOFN:
        return MofNRule(
            parts=[formula_from_dict(f) for f in doc['parts']],
            cmp=Relation(doc['cmp']),
            r=doc['r'],
            concl=formula_from_dict(doc['concl'])
        )
    elif not doc['A']:
        raise ValueError('empty comparison matrix')
    A = matrix_from_list(doc['A'])
    if kind == MONOTONICITY:
        return MonotonicityRule(A=A, i=doc['i'])
    return TotalMonotonicityRule(A=A, i=doc['i'])


def rule_to_dict(rule: Rule) -> Dict:
    """Get the dictionary serialization for a rule."""
    if isinstance(rule, ConditionalRule):
        return {
            'kind': rule.kind,
            'cond': formula_to_dict(rule.cond),
            'concl': formula_to_dict(rule.concl)
        }
    elif isinstance(rule, MofNRule):
        return {
            'kind': rule.kind,
            'parts': [formula_to_dict(f) for f in rule.parts],
            'cmp': rule.cmp.value,
            'r': rule.r,
            'concl': formula_to_dict(rule.concl)
        }
    elif isinstance(rule, MonotonicityRule):
        return {'kind': rule.kind, 'A': matrix_to_list(rule.A), 'i': rule.i}
    raise ValueError("unknown rule type '{}'".format(type(rule)))


def read_rules(filename: str) -> List[Rule]:
    """Read a list of rules from a Json file.

    Parameters
    ----------
    filename: string

    Returns
    -------
    list of nnrules.rules.base.Rule

    Raises
    ------
    jsonschema.ValidationError
    nnrules.error.ParseError
    """
    return [rule_from_dict(doc) for doc in util.read_json(filename, schema=RULESET_SCHEMA)]


def write_rules(rules: List[Rule], filename: str):
    """Write a list of rules to a Json file."""
    util.write_json([rule_to_dict(r) for r in rules], filename)
