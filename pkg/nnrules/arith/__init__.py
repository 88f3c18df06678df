# This file is part of the Neural Network Rule Verifier (nnrules).
#
# Copyright (C) 2026 The nnrules developers.
#
# nnrules is released under the Revised BSD License. See file LICENSE for
# full license details.

"""Exact rational scalars, vectors and matrices."""

from nnrules.arith.rational import (  # noqa: F401
    Rational, format_rational, parse_rational, rat_arith, to_rational
)
from nnrules.arith.vector import QMatrix, QVector, mat_vec  # noqa: F401
