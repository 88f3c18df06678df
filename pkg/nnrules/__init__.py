# This file is part of the Neural Network Rule Verifier (nnrules).
#
# Copyright (C) 2026 The nnrules developers.
#
# nnrules is released under the Revised BSD License. See file LICENSE for
# full license details.

from nnrules.network.base import Activation, Layer, Network  # noqa: F401
from nnrules.network.serialize import read_network, write_network  # noqa: F401
from nnrules.rules.serialize import read_rules, write_rules  # noqa: F401
from nnrules.verifier.base import Fails, Holds, verify_rule, verify_ruleset  # noqa: F401
