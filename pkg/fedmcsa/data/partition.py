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

import logging

import numpy as np

from .federation import FederationData, make_client
from ..errors import ConfigError, DataError

__all__ = ['SHARD_SIZE_RANGE', 'assign_classes', 'shard_by_label']

logger = logging.getLogger(__name__)

#: Client size range used for the image datasets.
SHARD_SIZE_RANGE = (1165, 3834)

#: Fewest samples of a class a holder keeps, one for each of train and test.
MIN_PER_CLASS = 2


def assign_classes(n_clients, classes_per_client, n_classes):
    """Client ``i`` receives classes ``(i + j) % n_classes``.

    Neighbouring clients share a class whenever
    ``n_clients * classes_per_client > n_classes``.
    """
    return [
        [(i + j) % n_classes for j in range(classes_per_client)]
        for i in range(n_clients)
    ]


def _split_evenly(total, parts):
    base, extra = divmod(total, parts)
    return [base + (1 if j < extra else 0) for j in range(parts)]


def _fit_to_pool(counts, available, floor):
    """Scale ``counts`` down so that they sum to at most ``available``.

    Every count keeps at least ``floor``; the spare samples are shared in
    proportion to what each count asked for above it.
    """
    spare = available - floor * len(counts)
    extra = [count - floor for count in counts]
    total = sum(extra)
    return [floor + (e * spare) // total for e in extra]


def shard_by_label(features, labels, n_clients, classes_per_client=2,
                   size_range=SHARD_SIZE_RANGE, seed=0, name='sharded',
                   n_classes=None):
    """Partition a pooled dataset into label-skewed clients.

    Each client holds exactly ``classes_per_client`` distinct labels and a
    number of samples drawn uniformly from ``size_range``, split evenly
    across its labels. No sample is given to more than one client. When a
    class cannot cover every request for it, the requests are scaled down
    to what it holds, so some clients end up below ``size_range``.

    :raises fedmcsa.errors.DataError:
        If some class has fewer than two samples for each client holding
        it.
    """
    features = np.asarray(features, dtype=np.float64)
    labels = np.asarray(labels, dtype=np.int64)
    if n_classes is None:
        n_classes = int(labels.max()) + 1
    if n_clients < 1:
        raise ConfigError('Need at least one client, got %d' % n_clients)
    if not 1 <= classes_per_client <= n_classes:
        raise ConfigError(
            'classes_per_client must be in [1, %d], got %d'
            % (n_classes, classes_per_client)
        )
    low, high = size_range
    if low < 2 * classes_per_client or high < low:
        raise ConfigError('Invalid client size range %r' % (size_range,))

    rng = np.random.default_rng(seed)
    classes = assign_classes(n_clients, classes_per_client, n_classes)
    sizes = rng.integers(low, high + 1, size=n_clients)

    demand = [[] for _ in range(n_classes)]
    for client, (owned, size) in enumerate(zip(classes, sizes)):
        for label, count in zip(owned, _split_evenly(int(size),
                                                     classes_per_client)):
            demand[label].append((client, count))

    pools = {}
    for label in range(n_classes):
        pool = rng.permutation(np.flatnonzero(labels == label))
        needed = sum(count for _, count in demand[label])
        if needed > pool.size:
            holders = len(demand[label])
            if pool.size < MIN_PER_CLASS * holders:
                raise DataError(
                    'Class %d is starved: %d clients need at least %d '
                    'samples each, %d available'
                    % (label, holders, MIN_PER_CLASS, pool.size)
                )
            logger.warning(
                'Class %d: %d samples requested, %d available; scaling '
                'the %d requests down', label, needed, pool.size, holders
            )
            counts = _fit_to_pool([c for _, c in demand[label]],
                                  pool.size, MIN_PER_CLASS)
            demand[label] = [
                (client, count)
                for (client, _), count in zip(demand[label], counts)
            ]
        pools[label] = pool

    taken = [[] for _ in range(n_clients)]
    for label in range(n_classes):
        cursor = 0
        for client, count in demand[label]:
            taken[client].append(pools[label][cursor:cursor + count])
            cursor += count

    clients = []
    for client in range(n_clients):
        index = np.concatenate(taken[client])
        clients.append(make_client(
            client, features[index], labels[index], rng,
            source_indices=index,
        ))

    logger.info('Sharded %s into %d clients with %d classes each',
                name, n_clients, classes_per_client)
    return FederationData(
        name, tuple(clients), features.shape[1], n_classes
    ).validate()
