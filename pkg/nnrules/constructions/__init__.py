# This file is part of the Neural Network Rule Verifier (nnrules).
#
# Copyright (C) 2026 The nnrules developers.
#
# nnrules is released under the Revised BSD License. See file LICENSE for
# full license details.

"""Constructions on networks and rules: reductions between rule kinds,
generators for hardness instances, witness networks for consistent rule
sets and the cube perturbation.
"""
