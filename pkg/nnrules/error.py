# This file is part of the Neural Network Rule Verifier (nnrules).
#
# Copyright (C) 2026 The nnrules developers.
#
# nnrules is released under the Revised BSD License. See file LICENSE for
# full license details.

"""Exceptions that are raised by nnrules components. All of them are value
errors.
"""

from typing import Optional


class DimensionError(ValueError):
    """Error raised when the dimensions of vectors, matrices, networks or
    rules do not fit together.
    """
    pass


class ParseError(ValueError):
    """Error raised for malformed textual input. Keeps track of the line and
    position of the error if known.
    """
    def __init__(
        self, message: str, line: Optional[int] = None,
        position: Optional[int] = None
    ):
        """Initialize the error message and the location information.

        Parameters
        ----------
        message: string
            Error message.
        line: int, default=None
            Line number (starting at 1) where the error occurred.
        position: int, default=None
            Character position (starting at 1) within the line.
        """
        self.message = message
        self.line = line
        self.position = position
        location = list()
        if line is not None:
            location.append('line {}'.format(line))
        if position is not None:
            location.append('position {}'.format(position))
        if location:
            message = '{} ({})'.format(message, ', '.join(location))
        super(ParseError, self).__init__(message)


class UnsupportedError(ValueError):
    """Error raised for requests outside of the supported classes of
    networks, rules or witnesses.
    """
    pass
