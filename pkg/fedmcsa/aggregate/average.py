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

import numpy as np

from .cohort import CohortMatrix
from ..errors import ShapeError

__all__ = ['average_aggregate', 'uniform_weights', 'normalize_weights']


def uniform_weights(n):
    return np.full(n, 1.0 / n)


def normalize_weights(client_weights, n):
    """Turn nonnegative per-client weights into a distribution.

    :raises ValueError:
        If a weight is negative or all weights are zero.
    """
    weights = np.asarray(client_weights, dtype=np.float64).ravel()
    if weights.size != n:
        raise ShapeError('One weight per client required', expected=n,
                         actual=weights.size)
    if np.any(weights < 0) or not np.any(weights > 0):
        raise ValueError(
            'Client weights must be nonnegative and not all zero, got %r'
            % (weights.tolist(),)
        )
    return weights / weights.sum()


def average_aggregate(cohort, client_weights=None):
    """Componentwise mean of a cohort.

    :param CohortMatrix cohort:
        Client models to average.
    :param client_weights:
        Optional per-client weights such as training sample counts. The
        mean is uniform when omitted.
    :returns:
        A single :py:class:`~fedmcsa.nn.ComponentizedModel`.
    """
    if not isinstance(cohort, CohortMatrix):
        cohort = CohortMatrix(cohort)
    n = cohort.n_clients
    if client_weights is None:
        weights = uniform_weights(n)
    else:
        weights = normalize_weights(client_weights, n)

    return cohort.models[0].with_values(
        weights @ cohort.layer(index) for index in range(cohort.n_components)
    )
