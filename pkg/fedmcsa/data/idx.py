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

"""Readers for the binary formats MNIST, Fashion-MNIST and CIFAR-10 ship in.

IDX layout (big-endian)::

    [offset] [type]          [description]
    0000     2 zero bytes
    0002     unsigned byte   element type code (0x08 = unsigned byte)
    0003     unsigned byte   number of dimensions
    0004     32 bit integer  size of dimension 0
    ...      32 bit integer  size of the remaining dimensions
    ....     elements, row-major

Images use magic ``0x00000803`` and labels ``0x00000801``.

CIFAR-10 binary batches are a sequence of 3073-byte records: one label byte
followed by 3072 pixel bytes (1024 red, 1024 green, 1024 blue).
"""
from __future__ import absolute_import, unicode_literals, print_function

import gzip
import logging

import numpy as np

from .buffer import ReadBuffer, WriteBuffer
from ..errors import DataError, ParseError

__all__ = [
    'IMAGES_MAGIC',
    'LABELS_MAGIC',
    'read_idx_file',
    'write_idx',
    'read_idx',
    'read_cifar_bin',
]

logger = logging.getLogger(__name__)

IMAGES_MAGIC = 0x00000803
LABELS_MAGIC = 0x00000801

CIFAR_RECORD = 3073
CIFAR_PIXELS = 3072

#: IDX element type codes and their big-endian numpy dtypes.
IDX_TYPES = {
    0x08: np.dtype('>u1'),
    0x09: np.dtype('>i1'),
    0x0B: np.dtype('>i2'),
    0x0C: np.dtype('>i4'),
    0x0D: np.dtype('>f4'),
    0x0E: np.dtype('>f8'),
}


def _open(path, mode):
    if path.endswith('.gz'):
        return gzip.open(path, mode)
    return open(path, mode)


def _read_bytes(path):
    try:
        with _open(path, 'rb') as f:
            return f.read()
    except (IOError, OSError) as e:
        raise DataError('Cannot read "%s": %s' % (path, e))


def parse_idx(data, path=None):
    """Parse IDX bytes into ``(magic, array)``."""
    buff = ReadBuffer(data, path=path)
    zero, type_code, ndim = buff.unpack('>HBB')
    if zero != 0 or type_code not in IDX_TYPES or ndim == 0:
        raise ParseError(
            'Bad IDX magic 0x%04x%02x%02x' % (zero, type_code, ndim),
            offset=0,
            path=path,
        )
    dims = buff.unpack('>' + 'I' * ndim)
    count = int(np.prod(dims))
    array = buff.take_array(IDX_TYPES[type_code], count)
    if buff.remaining:
        raise ParseError(
            '%d unexpected trailing bytes' % buff.remaining,
            offset=buff.offset,
            path=path,
        )
    magic = (type_code << 8) | ndim
    return magic, array.reshape(dims)


def read_idx_file(path):
    """Read a single IDX file (optionally gzipped).

    :returns:
        ``(magic, array)`` where ``array`` has the file's dimensions.
    :raises fedmcsa.errors.ParseError:
        If the file is empty, truncated, or has a bad magic number.
    """
    return parse_idx(_read_bytes(path), path=path)


def write_idx(path, array):
    """Write ``array`` as an IDX file, gzipped if ``path`` ends in ``.gz``."""
    array = np.asarray(array)
    for code, dtype in IDX_TYPES.items():
        if dtype.kind == array.dtype.kind and \
                dtype.itemsize == array.dtype.itemsize:
            break
    else:
        raise DataError('No IDX element type for dtype %s' % array.dtype)

    buff = WriteBuffer()
    buff.pack('>HBB', 0, code, array.ndim)
    buff.pack('>' + 'I' * array.ndim, *array.shape)
    buff.write_array(array, dtype)
    with _open(path, 'wb') as f:
        f.write(buff.value)


def read_idx(images_path, labels_path):
    """Read an IDX image file and its label file.

    :returns:
        ``(features, labels)``: features as an ``(n, rows * cols)`` float
        array scaled to ``[0, 1]`` and labels as an ``int64`` vector.
    """
    magic, images = read_idx_file(images_path)
    if magic != IMAGES_MAGIC:
        raise ParseError(
            'Expected image magic 0x%08x, got 0x%08x' % (IMAGES_MAGIC, magic),
            offset=0,
            path=images_path,
        )
    magic, labels = read_idx_file(labels_path)
    if magic != LABELS_MAGIC:
        raise ParseError(
            'Expected label magic 0x%08x, got 0x%08x' % (LABELS_MAGIC, magic),
            offset=0,
            path=labels_path,
        )
    if images.shape[0] != labels.shape[0]:
        raise DataError(
            '%s has %d images but %s has %d labels'
            % (images_path, images.shape[0], labels_path, labels.shape[0])
        )

    features = images.reshape(images.shape[0], -1).astype(np.float64) / 255.0
    logger.debug('Read %d images of width %d from %s',
                 features.shape[0], features.shape[1], images_path)
    return features, labels.astype(np.int64)


def read_cifar_bin(path):
    """Read a CIFAR-10 binary batch.

    :returns:
        ``(features, labels)`` with 3072 features per row scaled to
        ``[0, 1]``.
    """
    data = _read_bytes(path)
    if not data:
        raise ParseError('Empty CIFAR-10 batch', offset=0, path=path)
    if len(data) % CIFAR_RECORD:
        raise ParseError(
            'Truncated record; file size %d is not a multiple of %d'
            % (len(data), CIFAR_RECORD),
            offset=len(data) - len(data) % CIFAR_RECORD,
            path=path,
        )

    records = np.frombuffer(data, dtype=np.uint8).reshape(-1, CIFAR_RECORD)
    labels = records[:, 0].astype(np.int64)
    bad = np.flatnonzero(labels > 9)
    if bad.size:
        raise ParseError(
            'Label %d out of range' % labels[bad[0]],
            offset=int(bad[0]) * CIFAR_RECORD,
            path=path,
        )
    features = records[:, 1:].astype(np.float64) / 255.0
    logger.debug('Read %d CIFAR-10 records from %s', labels.size, path)
    return features, labels
