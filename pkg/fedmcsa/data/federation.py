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
import logging

import numpy as np

from .buffer import ReadBuffer, WriteBuffer
from ..errors import DataError, ParseError

__all__ = [
    'TEST_FRACTION',
    'ClientDataset',
    'FederationData',
    'split_train_test',
    'make_client',
    'dump_federation',
    'load_federation',
]

logger = logging.getLogger(__name__)

TEST_FRACTION = 0.25

FEDERATION_MAGIC = b'FEDS'
FEDERATION_VERSION = 1


class ClientDataset(namedtuple('ClientDataset', [
    'client_id',
    'train_x',
    'train_y',
    'test_x',
    'test_y',
    'classes',
    'source_indices',
    'truth',
])):
    """One client's private data, split into train and test sets.

    .. py:attribute:: classes

        Sorted tuple of the labels present on this client.

    .. py:attribute:: source_indices

        For partitions of a pooled dataset, the row indices the client's
        train and test samples (in that order) came from. ``None``
        otherwise.

    .. py:attribute:: truth

        For synthetic clients, the ``(W, b)`` ground-truth model that
        labelled the features. ``None`` otherwise.
    """

    @property
    def n_train(self):
        return self.train_y.size

    @property
    def n_test(self):
        return self.test_y.size


class FederationData(namedtuple('FederationData',
                                'name clients feature_width n_classes')):
    """All clients of a federation.

    .. py:attribute:: name

        Dataset name, e.g. ``synthetic`` or ``mnist``.
    """

    @property
    def n_clients(self):
        return len(self.clients)

    def validate(self):
        for position, client in enumerate(self.clients):
            if client.client_id != position:
                raise DataError('Client at position %d has id %d'
                                % (position, client.client_id))
            for x in (client.train_x, client.test_x):
                if x.shape[1] != self.feature_width:
                    raise DataError(
                        'Client %d has feature width %d, expected %d'
                        % (client.client_id, x.shape[1], self.feature_width)
                    )
            if client.n_train == 0 or client.n_test == 0:
                raise DataError(
                    'Client %d has an empty train or test set'
                    % client.client_id
                )
            labels = np.concatenate([client.train_y, client.test_y])
            if labels.min() < 0 or labels.max() >= self.n_classes:
                raise DataError(
                    'Client %d has labels outside [0, %d)'
                    % (client.client_id, self.n_classes)
                )
        return self


def _test_counts(counts, n_test):
    """Spread ``n_test`` over classes by largest remainder.

    Classes with at least two samples keep one in each split; singleton
    classes stay in train.
    """
    quota = TEST_FRACTION * counts
    low = np.where(counts >= 2, 1, 0)
    high = np.where(counts >= 2, counts - 1, 0)
    taken = np.clip(np.floor(quota).astype(np.int64), low, high)
    fraction = quota - np.floor(quota)

    # Stable sorts keep ties ordered by class.
    remaining = n_test - int(taken.sum())
    for index in np.argsort(-fraction, kind='stable'):
        if remaining <= 0:
            break
        if taken[index] < high[index]:
            taken[index] += 1
            remaining -= 1
    for index in np.argsort(fraction, kind='stable'):
        if remaining >= 0:
            break
        if taken[index] > low[index]:
            taken[index] -= 1
            remaining += 1
    return taken


def split_train_test(labels, rng):
    """Stratified 75/25 split of one client's samples.

    :returns:
        ``(train_index, test_index)``, each sorted.
    :raises fedmcsa.errors.DataError:
        If there are fewer than two samples.
    """
    labels = np.asarray(labels)
    if labels.size < 2:
        raise DataError(
            'Cannot split %d samples into train and test sets' % labels.size
        )
    classes, counts = np.unique(labels, return_counts=True)
    n_test = int(np.floor(TEST_FRACTION * labels.size + 0.5))
    n_test = min(max(n_test, 1), labels.size - 1)

    train, test = [], []
    for label, k in zip(classes, _test_counts(counts, n_test)):
        members = rng.permutation(np.flatnonzero(labels == label))
        test.append(members[:k])
        train.append(members[k:])
    return np.sort(np.concatenate(train)), np.sort(np.concatenate(test))


def make_client(client_id, features, labels, rng, source_indices=None,
                truth=None):
    """Split a client's samples and wrap them in a :py:class:`ClientDataset`.
    """
    train, test = split_train_test(labels, rng)
    if source_indices is not None:
        source_indices = np.concatenate(
            [source_indices[train], source_indices[test]]
        )
    return ClientDataset(
        client_id=client_id,
        train_x=features[train],
        train_y=labels[train],
        test_x=features[test],
        test_y=labels[test],
        classes=tuple(int(c) for c in np.unique(labels)),
        source_indices=source_indices,
        truth=truth,
    )


##############################################################################
# Export and import
#
# All integers are big-endian. Layout:
#
#   'FEDS'  u16 version  u16 name length  name (utf-8)
#   u32 clients  u32 feature width  u32 classes
#   per client:
#     u32 id  u32 train count  u32 test count
#     u16 class count  u8 class ids...
#     u8 has truth  [f64 W (width x classes)  f64 b (classes)]
#     u8 has indices  [i64 source indices (train + test)]
#     u8 train labels...  f64 train features (row-major)
#     u8 test labels...   f64 test features (row-major)


def dump_federation(federation, path):
    """Write a federation to ``path`` in the binary layout above."""
    buff = WriteBuffer()
    name = federation.name.encode('utf-8')
    buff.write_bytes(FEDERATION_MAGIC)
    buff.pack('>HH', FEDERATION_VERSION, len(name))
    buff.write_bytes(name)
    buff.pack('>III', len(federation.clients), federation.feature_width,
              federation.n_classes)

    for client in federation.clients:
        buff.pack('>III', client.client_id, client.n_train, client.n_test)
        buff.pack('>H', len(client.classes))
        buff.pack('>' + 'B' * len(client.classes), *client.classes)

        buff.pack('>B', client.truth is not None)
        if client.truth is not None:
            weight, bias = client.truth
            buff.write_array(weight, '>f8')
            buff.write_array(bias, '>f8')

        buff.pack('>B', client.source_indices is not None)
        if client.source_indices is not None:
            buff.write_array(client.source_indices, '>i8')

        for x, y in ((client.train_x, client.train_y),
                     (client.test_x, client.test_y)):
            buff.write_array(y, '>u1')
            buff.write_array(x, '>f8')

    try:
        with open(path, 'wb') as f:
            f.write(buff.value)
    except (IOError, OSError) as e:
        raise DataError('Cannot write "%s": %s' % (path, e))
    logger.info('Wrote %d clients of %s to %s',
                len(federation.clients), federation.name, path)


def _read_client(buff, width, n_classes):
    client_id, n_train, n_test = buff.unpack('>III')
    (count,) = buff.unpack('>H')
    classes = buff.unpack('>' + 'B' * count)

    truth = None
    (has_truth,) = buff.unpack('>B')
    if has_truth:
        weight = buff.take_array('>f8', width * n_classes)
        bias = buff.take_array('>f8', n_classes)
        truth = (weight.astype(np.float64).reshape(width, n_classes),
                 bias.astype(np.float64))

    source_indices = None
    (has_indices,) = buff.unpack('>B')
    if has_indices:
        source_indices = buff.take_array('>i8', n_train + n_test)
        source_indices = source_indices.astype(np.int64)

    arrays = []
    for n in (n_train, n_test):
        labels_offset = buff.offset
        labels = buff.take_array('>u1', n).astype(np.int64)
        if n and labels.max() >= n_classes:
            raise ParseError('Label out of range', offset=labels_offset,
                             path=buff.path)
        features = buff.take_array('>f8', n * width)
        arrays.append(features.astype(np.float64).reshape(n, width))
        arrays.append(labels)

    return ClientDataset(
        client_id=client_id,
        train_x=arrays[0],
        train_y=arrays[1],
        test_x=arrays[2],
        test_y=arrays[3],
        classes=tuple(classes),
        source_indices=source_indices,
        truth=truth,
    )


def load_federation(path):
    """Read a federation written by :py:func:`dump_federation`.

    :raises fedmcsa.errors.ParseError:
        If the file is truncated or not a federation file.
    """
    try:
        with open(path, 'rb') as f:
            buff = ReadBuffer(f.read(), path=path)
    except (IOError, OSError) as e:
        raise DataError('Cannot read "%s": %s' % (path, e))

    if buff.take(len(FEDERATION_MAGIC)) != FEDERATION_MAGIC:
        raise ParseError('Not a federation file', offset=0, path=path)
    version, name_length = buff.unpack('>HH')
    if version != FEDERATION_VERSION:
        raise ParseError('Unsupported version %d' % version, offset=4,
                         path=path)
    name = buff.take(name_length).decode('utf-8')
    n_clients, width, n_classes = buff.unpack('>III')

    clients = [_read_client(buff, width, n_classes) for _ in range(n_clients)]
    if buff.remaining:
        raise ParseError('%d unexpected trailing bytes' % buff.remaining,
                         offset=buff.offset, path=path)

    logger.info('Loaded %d clients of %s from %s', n_clients, name, path)
    return FederationData(name, tuple(clients), width, n_classes).validate()
