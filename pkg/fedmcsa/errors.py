# Copyright (c) 2026 The fedmcsa Authors
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in
# all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN
# THE SOFTWARE.

"""
.. autoclass:: FedError
    :members:

.. autoclass:: ConfigError
    :members:

.. autoclass:: ConfigParserError
    :members:

.. autoclass:: DataError
    :members:

.. autoclass:: ParseError
    :members:

.. autoclass:: EndOfInputError
    :members:

.. autoclass:: ShapeError
    :members:

.. autoclass:: InvalidBatchError
    :members:

.. autoclass:: NonFiniteError
    :members:

.. autoclass:: ExperimentError
    :members:
"""
from __future__ import absolute_import, unicode_literals, print_function


class FedError(Exception):
    """Base class for all exceptions raised by fedmcsa."""

    #: Process exit status used by the command line tool.
    exit_code = 1


class ConfigError(FedError):
    """An invalid configuration value or combination of values."""

    exit_code = 2


class ConfigParserError(ConfigError):
    """Exception raised by the config file lexer or parser."""


class DataError(FedError):
    """A dataset could not be located, read or partitioned."""

    exit_code = 3


class ParseError(DataError):
    """A binary dataset file is malformed.

    .. py:attribute:: offset

        Byte offset at which the problem was detected.

    .. py:attribute:: path

        Path of the file being read, if known.
    """

    def __init__(self, message, offset=None, path=None):
        super(ParseError, self).__init__(message)
        self.offset = offset
        self.path = path

    def __str__(self):
        message = super(ParseError, self).__str__()
        if self.offset is not None:
            message = '%s (at byte %d)' % (message, self.offset)
        if self.path:
            message = '%s: %s' % (self.path, message)
        return message


class EndOfInputError(ParseError):
    """The input was shorter than expected."""


class ShapeError(FedError):
    """Arrays or models with incompatible dimensions were combined."""

    exit_code = 3

    def __init__(self, message, expected=None, actual=None):
        super(ShapeError, self).__init__(message)
        self.expected = expected
        self.actual = actual

    def __str__(self):
        message = super(ShapeError, self).__str__()
        if self.expected is None and self.actual is None:
            return message
        return '%s (expected %r, got %r)' % (
            message, self.expected, self.actual
        )


class InvalidBatchError(FedError):
    """A batch was empty or contained labels outside the class range."""

    exit_code = 3


class NonFiniteError(FedError):
    """A loss or parameter became NaN or infinite.

    .. py:attribute:: round_index

        Round during which the value was produced, if known.

    .. py:attribute:: client_id

        Client whose update produced the value, if known.
    """

    exit_code = 4

    def __init__(self, message, round_index=None, client_id=None):
        super(NonFiniteError, self).__init__(message)
        self.round_index = round_index
        self.client_id = client_id

    def __str__(self):
        return '%s (round=%r, client=%r)' % (
            super(NonFiniteError, self).__str__(),
            self.round_index,
            self.client_id,
        )


class ExperimentError(FedError):
    """An error raised while running a round, tagged with that round."""

    def __init__(self, cause, round_index):
        super(ExperimentError, self).__init__(
            'round %d failed: %s' % (round_index, cause)
        )
        self.cause = cause
        self.round_index = round_index

    @property
    def exit_code(self):
        return self.cause.exit_code


__all__ = [
    'FedError',
    'ConfigError',
    'ConfigParserError',
    'DataError',
    'ParseError',
    'EndOfInputError',
    'ShapeError',
    'InvalidBatchError',
    'NonFiniteError',
    'ExperimentError',
]
