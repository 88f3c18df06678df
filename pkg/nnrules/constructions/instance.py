# This file is part of the Neural Network Rule Verifier (nnrules).
#
# Copyright (C) 2026 The nnrules developers.
#
# nnrules is released under the Revised BSD License. See file LICENSE for
# full license details.

"""Verification instances are bundles of a network and a list of rules that
are written to a directory as three files: the network, the rules and a
manifest with the instance kind and (optionally) the expected outcome.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional

import os

from nnrules.network.base import Network
from nnrules.network.serialize import read_network, write_network
from nnrules.rules.base import Rule
from nnrules.rules.serialize import read_rules, write_rules

import nnrules.util as util


"""Names of the files in an instance directory."""
MANIFEST_FILE = 'instance.json'
NETWORK_FILE = 'network.json'
RULES_FILE = 'rules.json'

"""Expected outcomes."""
CONSISTENT = 'consistent'
CONTRADICTORY = 'contradictory'
DEFECTIVE = 'defective'
EXHAUSTIVE = 'exhaustive'
FAILS = 'fails'
HOLDS = 'holds'
OUTCOMES = [CONSISTENT, CONTRADICTORY, DEFECTIVE, EXHAUSTIVE, FAILS, HOLDS]


INSTANCE_SCHEMA = {
    'type': 'object',
    'properties': {
        'kind': {'type': 'string'},
        'network': {'type': 'string'},
        'rules': {'type': 'string'},
        'groundTruth': {'type': ['string', 'null'], 'enum': OUTCOMES + [None]},
        'properties': {'type': 'object'}
    },
    'required': ['kind', 'network', 'rules']
}


@dataclass
class VerificationInstance:
    """Network and rules generated by one of the instance constructions."""
    # Network under verification.
    net: Network
    # Rules that are verified for the network.
    rules: List[Rule]
    # Name of the construction that generated the instance.
    kind: str
    # Expected outcome (if known).
    ground_truth: Optional[str] = None
    # Additional descriptive properties of the instance (e.g., the number of
    # variables and clauses of a source formula).
    properties: Dict = field(default_factory=dict)

    def __post_init__(self):
        """Validate the rule dimensions and the expected outcome.

        Raises
        ------
        nnrules.error.DimensionError
        ValueError
        """
        for rule in self.rules:
            rule.check_dims(self.net)
        if self.ground_truth is not None and self.ground_truth not in OUTCOMES:
            raise ValueError("invalid outcome '{}'".format(self.ground_truth))

    def write(self, directory: str):
        """Write the instance files to the given directory. The directory is
        created if it does not exist.

        Parameters
        ----------
        directory: string
        """
        util.createdir(directory)
        write_network(self.net, os.path.join(directory, NETWORK_FILE))
        write_rules(self.rules, os.path.join(directory, RULES_FILE))
        doc = {
            'kind': self.kind,
            'network': NETWORK_FILE,
            'rules': RULES_FILE,
            'groundTruth': self.ground_truth,
            'properties': self.properties
        }
        util.write_json(doc, os.path.join(directory, MANIFEST_FILE))


def read_instance(directory: str) -> VerificationInstance:
    """Read a verification instance from the files in the given directory.

    Parameters
    ----------
    directory: string

    Returns
    -------
    nnrules.constructions.instance.VerificationInstance

    Raises
    ------
    jsonschema.ValidationError
    nnrules.error.ParseError
    ValueError
    """
    doc = util.read_json(os.path.join(directory, MANIFEST_FILE), schema=INSTANCE_SCHEMA)
    return VerificationInstance(
        net=read_network(os.path.join(directory, doc['network'])),
        rules=read_rules(os.path.join(directory, doc['rules'])),
        kind=doc['kind'],
        ground_truth=doc.get('groundTruth'),
        properties=doc.get('properties', dict())
    )
