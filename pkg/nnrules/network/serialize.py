# This file is part of the Neural Network Rule Verifier (nnrules).
#
# Copyright (C) 2026 The nnrules developers.
#
# nnrules is released under the Revised BSD License. See file LICENSE for
# full license details.

"""Serialization of networks as Json documents. Rational values are encoded
as strings "p/q" or "p". The activation of a layer is either a single name
that applies to all nodes of the layer or a list with one name per node.
"""

from typing import Dict

from nnrules.arith.rational import format_rational, parse_rational
from nnrules.arith.vector import QMatrix, QVector
from nnrules.network.base import Activation, Layer, Network

import nnrules.util as util


ACTIVATIONS = [a.value for a in Activation]

RATIONAL_SCHEMA = {'type': 'string'}

NETWORK_SCHEMA = {
    'type': 'object',
    'properties': {
        'input_dim': {'type': 'integer', 'minimum': 0},
        'classifying': {'type': 'boolean'},
        'boolean': {'type': 'boolean'},
        'layers': {
            'type': 'array',
            'minItems': 1,
            'items': {
                'type': 'object',
                'properties': {
                    'activation': {
                        'oneOf': [
                            {'type': 'string', 'enum': ACTIVATIONS},
                            {
                                'type': 'array',
                                'items': {'type': 'string', 'enum': ACTIVATIONS}
                            }
                        ]
                    },
                    'weights': {
                        'type': 'array',
                        'items': {'type': 'array', 'items': RATIONAL_SCHEMA}
                    },
                    'biases': {'type': 'array', 'items': RATIONAL_SCHEMA}
                },
                'required': ['activation', 'weights', 'biases']
            }
        }
    },
    'required': ['input_dim', 'layers']
}


def network_from_dict(doc: Dict) -> Network:
    """Create a network from its dictionary serialization. Assumes that the
    document has been validated against the network schema.

    Parameters
    ----------
    doc: dict

    Returns
    -------
    nnrules.network.base.Network

    Raises
    ------
    nnrules.error.DimensionError
    nnrules.error.ParseError
    ValueError
    """
    layers = list()
    dim = doc['input_dim']
    for obj in doc['layers']:
        weights = [[parse_rational(v) for v in row] for row in obj['weights']]
        biases = QVector(parse_rational(v) for v in obj['biases'])
        if isinstance(obj['activation'], str):
            activation = Activation(obj['activation'])
        else:
            activation = [Activation(a) for a in obj['activation']]
        layer = Layer(QMatrix.from_rows(weights, cols=dim), biases, activation)
        layers.append(layer)
        dim = layer.out_dim
    return Network(
        input_dim=doc['input_dim'],
        layers=layers,
        classifying=doc.get('classifying', False),
        boolean=doc.get('boolean', False)
    )


def network_to_dict(net: Network) -> Dict:
    """Get the dictionary serialization of a network.

    Parameters
    ----------
    net: nnrules.network.base.Network

    Returns
    -------
    dict
    """
    layers = list()
    for layer in net.layers:
        if layer.activation is not None:
            activation = layer.activation.value
        else:
            activation = [a.value for a in layer.activations]
        layers.append({
            'activation': activation,
            'weights': [[format_rational(v) for v in row] for row in layer.weights.to_lists()],
            'biases': [format_rational(v) for v in layer.biases]
        })
    return {
        'input_dim': net.input_dim,
        'classifying': net.classifying,
        'boolean': net.boolean,
        'layers': layers
    }


def read_network(filename: str) -> Network:
    """Read a network from a Json file.

    Parameters
    ----------
    filename: string

    Returns
    -------
    nnrules.network.base.Network

    Raises
    ------
    jsonschema.ValidationError
    nnrules.error.ParseError
    ValueError
    """
    return network_from_dict(util.read_json(filename, schema=NETWORK_SCHEMA))


def write_network(net: Network, filename: str):
    """Write a network to a Json file."""
    util.write_json(network_to_dict(net), filename)
