# This file is part of the Neural Network Rule Verifier (nnrules).
#
# Copyright (C) 2026 The nnrules developers.
#
# nnrules is released under the Revised BSD License. See file LICENSE for
# full license details.

"""Unit tests for parsing, formatting and arithmetic of exact rationals."""

from fractions import Fraction
from hypothesis import given, strategies as st

import pytest

from nnrules.arith.rational import (
    ADD, DIV, MUL, SUB, format_rational, parse_rational, rat_arith, to_rational
)
from nnrules.error import ParseError


@pytest.mark.parametrize(
    'text,value',
    [
        ('3/4', Fraction(3, 4)),
        ('-2', Fraction(-2)),
        ('6/8', Fraction(3, 4)),
        ('0/5', Fraction(0)),
        ('-7/3', Fraction(-7, 3))
    ]
)
def test_parse_rational(text, value):
    """Test parsing valid rational strings into canonical fractions."""
    assert parse_rational(text) == value


@pytest.mark.parametrize('text', ['1/0', '1.5', '', ' 1', '1/-2', '--1', '1/', 'a'])
def test_parse_invalid_rational(text):
    """Test error cases for malformed rational strings."""
    with pytest.raises(ParseError):
        parse_rational(text)


def test_parse_zero_denominator_position():
    """The parse error for a zero denominator points to the denominator."""
    with pytest.raises(ParseError) as ex:
        parse_rational('12/0')
    assert ex.value.position == 4


def test_format_rational():
    """Test the textual format of rationals."""
    assert format_rational(Fraction(3, 4)) == '3/4'
    assert format_rational(Fraction(4, 2)) == '2'
    assert format_rational(Fraction(-1, 3)) == '-1/3'
    assert format_rational(0) == '0'


@given(st.fractions())
def test_format_parse_identity(value):
    """Formatting and parsing preserves every rational exactly."""
    assert parse_rational(format_rational(value)) == value


@given(st.fractions(), st.fractions(), st.fractions())
def test_exact_distributivity(a, b, c):
    """Arithmetic is exact: a * (b + c) = a * b + a * c."""
    lhs = rat_arith(a, rat_arith(b, c, ADD), MUL)
    rhs = rat_arith(rat_arith(a, b, MUL), rat_arith(a, c, MUL), ADD)
    assert lhs == rhs


def test_rat_arith():
    """Test the four arithmetic operators and the error cases."""
    a, b = Fraction(1, 3), Fraction(1, 6)
    assert rat_arith(a, b, ADD) == Fraction(1, 2)
    assert rat_arith(a, b, SUB) == Fraction(1, 6)
    assert rat_arith(a, b, MUL) == Fraction(1, 18)
    assert rat_arith(a, b, DIV) == 2
    with pytest.raises(ZeroDivisionError):
        rat_arith(a, 0, DIV)
    with pytest.raises(ValueError):
        rat_arith(a, b, 'pow')


def test_to_rational():
    """Test conversion of supported and unsupported value types."""
    assert to_rational(True) == 1
    assert to_rational(3) == Fraction(3)
    assert to_rational('1/2') == Fraction(1, 2)
    with pytest.raises(TypeError):
        to_rational(0.5)
