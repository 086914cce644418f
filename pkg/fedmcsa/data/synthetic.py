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

"""Synthetic Non-IID federations.

Every client ``k`` owns a private softmax model and a private feature
distribution:

- ``u_k ~ N(0, alpha)`` and ``b_k ~ N(0, beta)``;
- ground truth ``W_k, bias_k ~ N(u_k, 1)``;
- feature means ``v_k[j] ~ N(b_k, 1)`` and diagonal covariance
  ``Sigma[j, j] = j ** -1.2``;
- ``x ~ N(v_k, Sigma)`` and ``y = argmax(x W_k + bias_k)``.

``alpha`` controls how much the local models differ and ``beta`` how much
the local feature distributions differ. With both at zero every client
shares one ground-truth model and a zero feature mean.
"""
from __future__ import absolute_import, unicode_literals, print_function

import logging

import numpy as np

from .federation import FederationData, make_client
from ..errors import ConfigError

__all__ = [
    'SYNTHETIC_WIDTH',
    'SYNTHETIC_CLASSES',
    'SYNTHETIC_SIZE_RANGE',
    'generate_synthetic',
    'client_sizes',
    'label_with',
]

logger = logging.getLogger(__name__)

SYNTHETIC_WIDTH = 60
SYNTHETIC_CLASSES = 10
SYNTHETIC_SIZE_RANGE = (250, 25810)

COVARIANCE_EXPONENT = -1.2


def client_sizes(n_clients, rng, size_range=SYNTHETIC_SIZE_RANGE):
    """Heavy-tailed client sizes rescaled into ``size_range``.

    A lognormal draw is mapped linearly onto the range, so most clients sit
    near the lower end and a few are large.
    """
    low, high = size_range
    raw = rng.lognormal(4.0, 2.0, size=n_clients)
    spread = raw.max() - raw.min()
    if spread <= 0:
        return np.full(n_clients, low, dtype=np.int64)
    scaled = low + (raw - raw.min()) / spread * (high - low)
    return np.clip(np.rint(scaled), low, high).astype(np.int64)


def label_with(truth, features):
    """Labels assigned by a ground-truth ``(W, b)`` model."""
    weight, bias = truth
    return np.argmax(features @ weight + bias, axis=1)


def generate_synthetic(n_clients, alpha, beta, seed,
                       size_range=SYNTHETIC_SIZE_RANGE):
    """Generate a synthetic federation.

    :param int n_clients:
        Number of clients, at least 2.
    :param float alpha:
        Spread of the clients' ground-truth models.
    :param float beta:
        Spread of the clients' feature means.
    :param int seed:
        Seed of the generator; equal seeds give identical federations.
    :param tuple size_range:
        Inclusive bounds on the number of samples per client.
    """
    if n_clients < 2:
        raise ConfigError('Synthetic data needs at least 2 clients, got %d'
                          % n_clients)
    if alpha < 0 or beta < 0:
        raise ConfigError('alpha and beta must be non-negative, got %r, %r'
                          % (alpha, beta))

    rng = np.random.default_rng(seed)
    width, n_classes = SYNTHETIC_WIDTH, SYNTHETIC_CLASSES
    sizes = client_sizes(n_clients, rng, size_range)
    scale = np.sqrt(np.arange(1, width + 1) ** COVARIANCE_EXPONENT)

    iid = alpha == 0 and beta == 0
    if iid:
        shared_truth = (rng.normal(0.0, 1.0, (width, n_classes)),
                        rng.normal(0.0, 1.0, n_classes))

    clients = []
    for k in range(n_clients):
        if iid:
            truth = shared_truth
            mean = np.zeros(width)
        else:
            model_mean = rng.normal(0.0, alpha)
            feature_seed = rng.normal(0.0, beta)
            truth = (rng.normal(model_mean, 1.0, (width, n_classes)),
                     rng.normal(model_mean, 1.0, n_classes))
            mean = rng.normal(feature_seed, 1.0, width)

        features = mean + rng.standard_normal((sizes[k], width)) * scale
        labels = label_with(truth, features)
        clients.append(make_client(k, features, labels, rng, truth=truth))

    logger.info('Generated synthetic federation: %d clients, %d samples '
                '(alpha=%g, beta=%g)', n_clients, int(sizes.sum()),
                alpha, beta)
    return FederationData(
        'synthetic', tuple(clients), width, n_classes
    ).validate()
