# This file is part of the Neural Network Rule Verifier (nnrules).
#
# Copyright (C) 2026 The nnrules developers.
#
# nnrules is released under the Revised BSD License. See file LICENSE for
# full license details.

"""Exact linear programming and feasibility checks."""

from nnrules.lp.feasibility import FeasibilityResult, LinearSystem, check_feasible  # noqa: F401
