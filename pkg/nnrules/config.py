# This file is part of the Neural Network Rule Verifier (nnrules).
#
# Copyright (C) 2026 The nnrules developers.
#
# nnrules is released under the Revised BSD License. See file LICENSE for
# full license details.

"""Helper methods to access configuration parameters. All parameters have
fixed defaults that can be overridden explicitly on the command line or when
calling the library functions. No environment variables are read.
"""

from typing import Dict, Optional

import jsonschema
import psutil


"""Names of configuration parameters."""
# Upper bound for the number of input variables of a Boolean network that
# are enumerated exhaustively.
PARA_BOOL_BOUND = 'boolBound'
# Number of workers that explore disjoint branches of the search tree.
PARA_THREADS = 'threads'
# Search mode of the verifier (pruned or exhaustive).
PARA_MODE = 'mode'
# Seed for sampling test instances.
PARA_SEED = 'seed'


"""Search modes."""
MODE_EXHAUSTIVE = 'exhaustive'
MODE_PRUNED = 'pruned'
MODES = [MODE_PRUNED, MODE_EXHAUSTIVE]


def BOOL_BOUND() -> int:
    """Get the default enumeration bound for Boolean networks.

    Returns
    -------
    int
    """
    return 20


def MAX_PIVOTS() -> int:
    """Get the maximum number of simplex pivots for a single feasibility
    check.

    Returns
    -------
    int
    """
    return 100000


def MODE() -> str:
    """Get the default search mode.

    Returns
    -------
    string
    """
    return MODE_PRUNED


def SEED() -> int:
    """Get the default random seed.

    Returns
    -------
    int
    """
    return 42


def SPLIT_DEPTH() -> int:
    """Get the number of branching decisions that are expanded before the
    search frontier is distributed among workers. The frontier does not
    depend on the number of workers.

    Returns
    -------
    int
    """
    return 2


def THREADS() -> int:
    """Get the default number of workers. Uses the number of physical cores
    of the machine.

    Returns
    -------
    int
    """
    count = psutil.cpu_count(logical=False)
    return max(count if count else 1, 1)


# -- Job configuration --------------------------------------------------------

"""Json schema for job configurations."""
JOBCONFIG_SCHEMA = {
    'type': 'object',
    'properties': {
        'command': {'type': 'string'},
        'inputs': {'type': 'array', 'items': {'type': 'string'}},
        'output': {'type': 'string'},
        PARA_MODE: {'type': 'string', 'enum': MODES},
        PARA_THREADS: {'type': 'integer', 'minimum': 1},
        PARA_BOOL_BOUND: {'type': 'integer', 'minimum': 1},
        PARA_SEED: {'type': 'integer'}
    },
    'required': ['command']
}


class JobConfig(object):
    """Wrapper around the dictionary that describes a single command-line
    job. Provides access to parameter values and their defaults.
    """
    def __init__(self, doc: Dict, validate: Optional[bool] = True):
        """Initialize the dictionary containing the job configuration.
        Validates the document against the job configuration schema if the
        validate flag is True.

        Parameters
        ----------
        doc: dict
            Dictionary containing a job configuration.
        validate: bool, default=True
            Validate the given dictionary against the schema.

        Raises
        ------
        jsonschema.ValidationError
        """
        self.doc = doc
        if validate:
            jsonschema.validate(instance=doc, schema=JOBCONFIG_SCHEMA)

    @staticmethod
    def create(
        command: str, inputs: Optional[list] = None,
        output: Optional[str] = None, mode: Optional[str] = None,
        threads: Optional[int] = None, bool_bound: Optional[int] = None,
        seed: Optional[int] = None
    ):
        """Create a new job configuration. Parameters that are None are
        omitted and resolve to their defaults.

        Parameters
        ----------
        command: string
            Name of the executed command.
        inputs: list of string, default=None
            Paths of input files.
        output: string, default=None
            Path of the output file.
        mode: string, default=None
            Search mode.
        threads: int, default=None
            Number of workers.
        bool_bound: int, default=None
            Enumeration bound for Boolean networks.
        seed: int, default=None
            Random seed.

        Returns
        -------
        nnrules.config.JobConfig
        """
        doc = {'command': command, 'inputs': list(inputs) if inputs else []}
        if output is not None:
            doc['output'] = output
        if mode is not None:
            doc[PARA_MODE] = mode
        if threads is not None:
            doc[PARA_THREADS] = threads
        if bool_bound is not None:
            doc[PARA_BOOL_BOUND] = bool_bound
        if seed is not None:
            doc[PARA_SEED] = seed
        return JobConfig(doc)

    def bool_bound(self) -> int:
        """Get the Boolean enumeration bound."""
        return self.doc.get(PARA_BOOL_BOUND, BOOL_BOUND())

    def command(self) -> str:
        """Get the command name."""
        return self.doc['command']

    def inputs(self) -> list:
        """Get the list of input file paths."""
        return self.doc.get('inputs', [])

    def mode(self) -> str:
        """Get the search mode."""
        return self.doc.get(PARA_MODE, MODE())

    def output(self) -> Optional[str]:
        """Get the output path (or None)."""
        return self.doc.get('output')

    def seed(self) -> int:
        """Get the random seed."""
        return self.doc.get(PARA_SEED, SEED())

    def threads(self) -> int:
        """Get the number of workers."""
        return self.doc.get(PARA_THREADS, THREADS())
