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

from __future__ import absolute_import, unicode_literals, print_function

import struct

import numpy as np

from ..errors import EndOfInputError

__all__ = ['ReadBuffer', 'WriteBuffer']


class ReadBuffer(object):
    """A cursor over an immutable byte string.

    Every read advances the cursor. Reading past the end raises
    :py:class:`~fedmcsa.errors.EndOfInputError` carrying the offset at which
    the read started; the cursor is left where it was.
    """

    __slots__ = ('data', 'offset', 'path')

    def __init__(self, data, path=None):
        """
        :param bytes data:
            Bytes to read from.
        :param str path:
            Source of the bytes, used in error messages.
        """
        self.data = memoryview(bytes(data))
        self.offset = 0
        self.path = path

    @property
    def remaining(self):
        return len(self.data) - self.offset

    def take(self, count):
        """Return the next ``count`` bytes."""
        if count > self.remaining:
            raise EndOfInputError(
                'Expected %d bytes but only %d remain'
                % (count, self.remaining),
                offset=self.offset,
                path=self.path,
            )
        start = self.offset
        self.offset += count
        return self.data[start:self.offset].tobytes()

    def unpack(self, fmt):
        """Read and unpack a :py:mod:`struct` format string."""
        return struct.unpack(fmt, self.take(struct.calcsize(fmt)))

    def take_array(self, dtype, count):
        """Read ``count`` items of the given numpy dtype."""
        dtype = np.dtype(dtype)
        raw = self.take(dtype.itemsize * count)
        return np.frombuffer(raw, dtype=dtype, count=count)


class WriteBuffer(object):
    """A growable byte sink."""

    __slots__ = ('_data',)

    def __init__(self):
        self._data = bytearray()

    @property
    def value(self):
        return bytes(self._data)

    def write_bytes(self, data):
        self._data.extend(data)

    def pack(self, fmt, *values):
        self._data.extend(struct.pack(fmt, *values))

    def write_array(self, array, dtype):
        self._data.extend(np.ascontiguousarray(array, dtype=dtype).tobytes())
