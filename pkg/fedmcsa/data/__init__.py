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
Client datasets for federated experiments.

Federations
-----------

.. autoclass:: FederationData
    :members:

.. autoclass:: ClientDataset
    :members:

.. autofunction:: build_federation

.. autofunction:: split_train_test

Generation and partitioning
---------------------------

.. autofunction:: generate_synthetic

.. autofunction:: shard_by_label

Files
-----

.. automodule:: fedmcsa.data.idx

.. autofunction:: read_idx

.. autofunction:: read_cifar_bin

.. autofunction:: write_idx

.. autofunction:: dump_federation

.. autofunction:: load_federation
"""
from __future__ import absolute_import, unicode_literals, print_function

from .federation import (
    ClientDataset,
    FederationData,
    split_train_test,
    dump_federation,
    load_federation,
)
from .idx import read_idx, read_idx_file, read_cifar_bin, write_idx
from .partition import shard_by_label
from .sources import DATASETS, build_federation, load_dataset
from .synthetic import generate_synthetic

__all__ = [
    # Federations
    'ClientDataset',
    'FederationData',
    'build_federation',
    'split_train_test',

    # Generation and partitioning
    'generate_synthetic',
    'shard_by_label',

    # Files
    'DATASETS',
    'load_dataset',
    'read_idx',
    'read_idx_file',
    'read_cifar_bin',
    'write_idx',
    'dump_federation',
    'load_federation',
]
