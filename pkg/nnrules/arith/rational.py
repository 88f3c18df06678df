# This file is part of the Neural Network Rule Verifier (nnrules).
#
# Copyright (C) 2026 The nnrules developers.
#
# nnrules is released under the Revised BSD License. See file LICENSE for
# full license details.

"""Arbitrary-precision rational scalars. Rationals are represented by
instances of :class:`fractions.Fraction`, which keep numerator and
denominator in canonical form (positive denominator, greatest common divisor
one) after every operation. This module adds the textual format that is used
in all Json documents and a guarded conversion that never accepts floating
point values.
"""

from fractions import Fraction
from typing import Union

import re

from nnrules.error import ParseError


"""Type alias for rational scalars."""
Rational = Fraction

"""Textual format 'p/q' or 'p' with optional leading '-' and no whitespace."""
RATIONAL_FORMAT = re.compile(r'^-?[0-9]+(/[0-9]+)?$')

"""Arithmetic operators for rat_arith."""
ADD = 'add'
DIV = 'div'
MUL = 'mul'
SUB = 'sub'


def format_rational(value: Rational) -> str:
    """Get the textual representation of a rational value. Integers are
    written without denominator.

    Parameters
    ----------
    value: fractions.Fraction

    Returns
    -------
    string
    """
    value = to_rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    return '{}/{}'.format(value.numerator, value.denominator)


def parse_rational(text: str) -> Rational:
    """Parse a rational value from its textual representation.

    Parameters
    ----------
    text: string
        String of the form 'p/q' or 'p'.

    Returns
    -------
    fractions.Fraction

    Raises
    ------
    nnrules.error.ParseError
    """
    if not isinstance(text, str) or not RATIONAL_FORMAT.match(text):
        raise ParseError("invalid rational '{}'".format(text))
    pos = text.find('/')
    if pos == -1:
        return Fraction(int(text))
    denominator = int(text[pos + 1:])
    if denominator == 0:
        raise ParseError(
            "zero denominator in rational '{}'".format(text),
            position=pos + 2
        )
    return Fraction(int(text[:pos]), denominator)


def rat_arith(a: Rational, b: Rational, op: str) -> Rational:
    """Apply an arithmetic operator to two rationals. The result is exact
    and in canonical form.

    Parameters
    ----------
    a: fractions.Fraction
        Left operand.
    b: fractions.Fraction
        Right operand.
    op: string
        One of 'add', 'sub', 'mul', 'div'.

    Returns
    -------
    fractions.Fraction

    Raises
    ------
    ZeroDivisionError
    ValueError
    """
    a = to_rational(a)
    b = to_rational(b)
    if op == ADD:
        return a + b
    elif op == SUB:
        return a - b
    elif op == MUL:
        return a * b
    elif op == DIV:
        if b == 0:
            raise ZeroDivisionError('division of {} by zero'.format(a))
        return a / b
    raise ValueError("unknown operator '{}'".format(op))


def to_rational(value: Union[Rational, int, str]) -> Rational:
    """Convert a value into a rational. Accepts fractions, integers and
    strings in the textual format. Floating point values are rejected since
    they cannot be converted without loss of intent.

    Parameters
    ----------
    value: fractions.Fraction, int, or string

    Returns
    -------
    fractions.Fraction

    Raises
    ------
    TypeError
    nnrules.error.ParseError
    """
    if isinstance(value, Fraction):
        return value
    elif isinstance(value, bool):
        return Fraction(int(value))
    elif isinstance(value, int):
        return Fraction(value)
    elif isinstance(value, str):
        return parse_rational(value)
    raise TypeError("cannot convert '{}' to rational".format(type(value).__name__))
