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
import os.path

import numpy as np

from .federation import load_federation
from .idx import read_cifar_bin, read_idx
from .partition import shard_by_label
from .synthetic import generate_synthetic
from ..errors import ConfigError, DataError

__all__ = [
    'SYNTHETIC',
    'MNIST',
    'FMNIST',
    'CIFAR10',
    'DATASETS',
    'load_dataset',
    'build_federation',
]

logger = logging.getLogger(__name__)

SYNTHETIC = 'synthetic'
MNIST = 'mnist'
FMNIST = 'fmnist'
CIFAR10 = 'cifar10'

DATASETS = (SYNTHETIC, MNIST, FMNIST, CIFAR10)

IDX_FILES = (
    ('train-images-idx3-ubyte', 'train-labels-idx1-ubyte'),
    ('t10k-images-idx3-ubyte', 't10k-labels-idx1-ubyte'),
)

CIFAR_FILES = tuple(
    'data_batch_%d.bin' % i for i in range(1, 6)
) + ('test_batch.bin',)


def _locate(directory, name):
    """Path of ``name`` or its gzipped form under ``directory``."""
    for candidate in (name, name + '.gz'):
        path = os.path.join(directory, candidate)
        if os.path.exists(path):
            return path
    raise DataError('Missing dataset file "%s"' % os.path.join(directory,
                                                              name))


def load_dataset(name, data_dir):
    """Read a real dataset, pooling its train and test files.

    :param str name:
        One of ``mnist``, ``fmnist`` or ``cifar10``.
    :param str data_dir:
        Directory holding a subdirectory per dataset.
    :returns:
        ``(features, labels)``
    """
    if data_dir is None:
        raise DataError(
            'Dataset "%s" needs a data directory (--data-dir or '
            'FEDMCSA_DATA_DIR)' % name
        )
    directory = os.path.join(data_dir, name)

    parts = []
    if name in (MNIST, FMNIST):
        for images, labels in IDX_FILES:
            parts.append(read_idx(_locate(directory, images),
                                  _locate(directory, labels)))
    elif name == CIFAR10:
        for batch in CIFAR_FILES:
            parts.append(read_cifar_bin(_locate(directory, batch)))
    else:
        raise ConfigError('No reader for dataset "%s"' % name)

    features = np.concatenate([p[0] for p in parts])
    labels = np.concatenate([p[1] for p in parts])
    logger.info('Loaded %s: %d samples of width %d',
                name, labels.size, features.shape[1])
    return features, labels


def build_federation(cfg):
    """Construct the federation described by a
    :py:class:`~fedmcsa.config.RunConfig`.

    An exported federation file takes precedence over generation.
    """
    if cfg.data_file:
        federation = load_federation(cfg.data_file)
        if federation.name != cfg.dataset:
            raise ConfigError(
                '%s holds a %s federation but the dataset is %s'
                % (cfg.data_file, federation.name, cfg.dataset)
            )
    elif cfg.dataset == SYNTHETIC:
        federation = generate_synthetic(
            cfg.clients, cfg.alpha, cfg.beta, cfg.seed,
            size_range=(cfg.size_min, cfg.size_max),
        )
    else:
        features, labels = load_dataset(cfg.dataset, cfg.data_dir)
        federation = shard_by_label(
            features, labels, cfg.clients,
            classes_per_client=cfg.classes_per_client,
            size_range=(cfg.size_min, cfg.size_max),
            seed=cfg.seed,
            name=cfg.dataset,
            n_classes=10,
        )

    if federation.n_clients != cfg.clients:
        raise ConfigError(
            'Federation has %d clients but the config asks for %d'
            % (federation.n_clients, cfg.clients)
        )
    return federation
