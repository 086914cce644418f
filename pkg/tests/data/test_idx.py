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
import pytest

from fedmcsa.data.idx import (
    IMAGES_MAGIC,
    LABELS_MAGIC,
    read_cifar_bin,
    read_idx,
    read_idx_file,
    write_idx,
)
from fedmcsa.errors import DataError, EndOfInputError, ParseError


@pytest.fixture
def images():
    return np.array([
        np.arange(4, dtype=np.uint8).reshape(2, 2),
        np.full((2, 2), 255, dtype=np.uint8),
        np.zeros((2, 2), dtype=np.uint8),
    ])


@pytest.mark.parametrize('suffix', ['', '.gz'])
def test_idx_round_trip(tmpdir, images, suffix):
    images_path = str(tmpdir.join('images' + suffix))
    labels_path = str(tmpdir.join('labels' + suffix))
    write_idx(images_path, images)
    write_idx(labels_path, np.array([3, 1, 4], dtype=np.uint8))

    assert read_idx_file(images_path)[0] == IMAGES_MAGIC
    assert read_idx_file(labels_path)[0] == LABELS_MAGIC

    features, labels = read_idx(images_path, labels_path)
    assert features.shape == (3, 4)
    assert np.allclose(features[0], [0, 1 / 255.0, 2 / 255.0, 3 / 255.0])
    assert np.all(features[1] == 1.0)
    assert list(labels) == [3, 1, 4]
    assert labels.dtype == np.int64


def test_idx_header_layout(tmpdir, images):
    path = str(tmpdir.join('images'))
    write_idx(path, images)
    data = tmpdir.join('images').read_binary()
    assert data[:4] == b'\x00\x00\x08\x03'
    assert struct.unpack('>III', data[4:16]) == (3, 2, 2)
    assert len(data) == 16 + 12


def test_empty_file_is_a_parse_error(tmpdir):
    path = tmpdir.join('empty')
    path.write_binary(b'')
    with pytest.raises(ParseError) as exc_info:
        read_idx_file(str(path))
    assert exc_info.value.offset == 0


def test_bad_magic(tmpdir):
    path = tmpdir.join('bad')
    path.write_binary(b'\x12\x34\x08\x01' + b'\x00' * 8)
    with pytest.raises(ParseError) as exc_info:
        read_idx_file(str(path))
    assert 'Bad IDX magic' in str(exc_info.value)
    assert exc_info.value.offset == 0


def test_truncated_body(tmpdir, images):
    path = tmpdir.join('images')
    write_idx(str(path), images)
    path.write_binary(path.read_binary()[:20])
    with pytest.raises(EndOfInputError) as exc_info:
        read_idx_file(str(path))
    assert exc_info.value.offset == 16


def test_trailing_bytes(tmpdir):
    path = tmpdir.join('labels')
    write_idx(str(path), np.array([1, 2], dtype=np.uint8))
    path.write_binary(path.read_binary() + b'\x00')
    with pytest.raises(ParseError) as exc_info:
        read_idx_file(str(path))
    assert exc_info.value.offset == 10


def test_images_and_labels_swapped(tmpdir, images):
    write_idx(str(tmpdir.join('images')), images)
    write_idx(str(tmpdir.join('labels')), np.array([1, 2, 3], np.uint8))
    with pytest.raises(ParseError):
        read_idx(str(tmpdir.join('labels')), str(tmpdir.join('images')))


def test_row_count_mismatch(tmpdir, images):
    write_idx(str(tmpdir.join('images')), images)
    write_idx(str(tmpdir.join('labels')), np.array([1, 2], np.uint8))
    with pytest.raises(DataError):
        read_idx(str(tmpdir.join('images')), str(tmpdir.join('labels')))


def test_missing_file(tmpdir):
    with pytest.raises(DataError) as exc_info:
        read_idx_file(str(tmpdir.join('nope')))
    assert 'nope' in str(exc_info.value)


def cifar_record(label, value):
    return bytes([label]) + bytes([value]) * 3072


def test_cifar_batch(tmpdir):
    path = tmpdir.join('data_batch_1.bin')
    path.write_binary(cifar_record(3, 0) + cifar_record(9, 255))
    features, labels = read_cifar_bin(str(path))
    assert features.shape == (2, 3072)
    assert list(labels) == [3, 9]
    assert np.all(features[0] == 0.0) and np.all(features[1] == 1.0)


def test_cifar_empty(tmpdir):
    path = tmpdir.join('empty.bin')
    path.write_binary(b'')
    with pytest.raises(ParseError) as exc_info:
        read_cifar_bin(str(path))
    assert exc_info.value.offset == 0


def test_cifar_truncated_record(tmpdir):
    path = tmpdir.join('short.bin')
    path.write_binary(cifar_record(1, 5) + cifar_record(2, 5)[:100])
    with pytest.raises(ParseError) as exc_info:
        read_cifar_bin(str(path))
    assert exc_info.value.offset == 3073


def test_cifar_bad_label(tmpdir):
    path = tmpdir.join('bad.bin')
    path.write_binary(cifar_record(1, 5) + cifar_record(12, 5))
    with pytest.raises(ParseError) as exc_info:
        read_cifar_bin(str(path))
    assert exc_info.value.offset == 3073
