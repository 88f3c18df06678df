# This file is part of the Neural Network Rule Verifier (nnrules).
#
# Copyright (C) 2026 The nnrules developers.
#
# nnrules is released under the Revised BSD License. See file LICENSE for
# full license details.

"""Exact verification of rules for ReLU and Boolean networks."""

from nnrules.verifier.base import Fails, Holds, Verdict, verify_rule, verify_ruleset  # noqa: F401
