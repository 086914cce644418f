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

from collections import namedtuple

__all__ = ['Document', 'Assignment']


class Document(namedtuple('Document', 'assignments')):
    """A parsed configuration file.

    .. py:attribute:: assignments

        Collection of :py:class:`Assignment` objects in file order.
    """


class Assignment(namedtuple('Assignment', 'key value lineno')):
    """A single ``key = value`` line.

    ::

        rounds = 100
        sigma = 10, 30, 50;

    .. py:attribute:: key

        Key as written in the file.

    .. py:attribute:: value

        An ``int``, ``float``, ``bool`` or ``str``, or a tuple of those when
        the value is a comma-separated list.

    .. py:attribute:: lineno

        Line on which the key appears.
    """
