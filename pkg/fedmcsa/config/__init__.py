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
Experiment configuration.

Run configuration
-----------------

.. autoclass:: RunConfig
    :members:

Configuration files
-------------------

Configuration files hold one ``key = value`` assignment per line::

    # FedMCSA on the synthetic data
    algorithm = fedmcsa
    rounds = 100
    sigma = 50;
    data_dir = "/srv/datasets"   // quoted strings for paths

Values may be integers, floats, ``true``/``false``, bare words, quoted
strings, or comma-separated lists of those. ``-`` and ``_`` are
interchangeable in keys.

.. autoclass:: Loader
    :members:

.. autofunction:: dumps

Parser
------

.. autoclass:: fedmcsa.config.parser.Parser
    :members:

.. autoclass:: fedmcsa.config.ast.Document

.. autoclass:: fedmcsa.config.ast.Assignment
"""
from __future__ import absolute_import, unicode_literals, print_function

from .loader import Loader, dumps, load, loads, normalize_key
from .run import RunConfig, FIELDS, DEFAULTS

__all__ = [
    'RunConfig',
    'FIELDS',
    'DEFAULTS',
    'Loader',
    'load',
    'loads',
    'dumps',
    'normalize_key',
]
