# This file is part of the Neural Network Rule Verifier (nnrules).
#
# Copyright (C) 2026 The nnrules developers.
#
# nnrules is released under the Revised BSD License. See file LICENSE for
# full license details.

"""Helper methods for file input and output of Json documents."""

from typing import Any, Dict, Optional

import errno
import gzip
import json
import jsonschema
import os

from nnrules.error import ParseError


# -- Files --------------------------------------------------------------------

def createdir(directory: str, abs: Optional[bool] = False) -> str:
    """Safely create the given directory path if it does not exist.

    Parameters
    ----------
    directory: string
        Path to directory that is being created.
    abs: boolean, optional
        Return absolute path if true

    Returns
    -------
    string
    """
    # Based on https://stackoverflow.com/questions/273192/
    if not os.path.exists(directory):
        try:
            os.makedirs(directory)
        except OSError as e:  # pragma: no cover
            if e.errno != errno.EEXIST:
                raise
    if abs:
        return os.path.abspath(directory)
    return directory


def get_compression(filename: str) -> Optional[str]:
    """Derive the compression mode from the file suffix. Files ending in
    '.gz' are gzip compressed.

    Parameters
    ----------
    filename: string
        Path to a file.

    Returns
    -------
    string
    """
    return 'gzip' if filename.endswith('.gz') else None


# -- Json ---------------------------------------------------------------------

def read_json(filename: str, schema: Optional[Dict] = None) -> Any:
    """Read a Json document from file. Validates the document against the
    given schema (if not None). Syntax errors are reported as parse errors
    with line and column of the error.

    Parameters
    ----------
    filename: string
        Path to the input file.
    schema: dict, default=None
        Json schema for the document.

    Returns
    -------
    any

    Raises
    ------
    nnrules.error.ParseError
    jsonschema.ValidationError
    """
    if get_compression(filename) == 'gzip':
        with gzip.open(filename, 'rb') as f:
            text = f.read().decode('utf8')
    else:
        with open(filename, 'r') as f:
            text = f.read()
    return loads_json(text, schema=schema, source=filename)


def loads_json(
    text: str, schema: Optional[Dict] = None, source: Optional[str] = None
) -> Any:
    """Parse a Json document from a string and validate it against the given
    schema (if not None).

    Parameters
    ----------
    text: string
        Serialized Json document.
    schema: dict, default=None
        Json schema for the document.
    source: string, default=None
        Name of the document source for error messages.

    Returns
    -------
    any

    Raises
    ------
    nnrules.error.ParseError
    jsonschema.ValidationError
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as ex:
        prefix = '{}: '.format(source) if source else ''
        raise ParseError(prefix + ex.msg, line=ex.lineno, position=ex.colno)
    if schema is not None:
        jsonschema.validate(instance=doc, schema=schema)
    return doc


def write_json(doc: Any, filename: str):
    """Write a Json document to file. The output is gzip compressed if the
    file name ends with '.gz'.

    Parameters
    ----------
    doc: any
        Json serializable object.
    filename: string
        Path to the output file.
    """
    text = json.dumps(doc, indent=2)
    if get_compression(filename) == 'gzip':
        with gzip.open(filename, 'wb') as f:
            f.write(str.encode(text, 'utf8'))
    else:
        with open(filename, 'w') as f:
            f.write(text)
