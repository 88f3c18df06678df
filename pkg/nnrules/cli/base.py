# This file is part of the Neural Network Rule Verifier (nnrules).
#
# Copyright (C) 2026 The nnrules developers.
#
# nnrules is released under the Revised BSD License. See file LICENSE for
# full license details.

"""Command line interface for the network rule verifier."""

import click
import logging

from nnrules.cli.construct import (
    generate_instance, perturb, reduce_rule, witness_network
)
from nnrules.cli.verify import check_cert, eval_network, verify_rules


# -- Create command group -----------------------------------------------------

@click.group()
@click.option(
    '-v', '--verbose',
    is_flag=True,
    default=False,
    help='Log search progress'
)
def cli(verbose):
    """Command line interface for the network rule verifier."""
    if verbose:
        logging.basicConfig(
            level=logging.INFO,
            format='%(asctime)s %(levelname)s %(name)s: %(message)s'
        )


cli.add_command(check_cert)
cli.add_command(eval_network)
cli.add_command(generate_instance)
cli.add_command(perturb)
cli.add_command(reduce_rule)
cli.add_command(verify_rules)
cli.add_command(witness_network)
