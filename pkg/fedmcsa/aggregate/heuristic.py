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

"""Whole-model attentive message passing.

Each client keeps a fixed share ``self_weight`` of its own model and spreads
the rest over the other clients in proportion to
``exp(sigma * cos(Theta_i, Theta_k))``, with the cosine taken over the full
flattened parameter vectors.
"""
from __future__ import absolute_import, unicode_literals, print_function

import numpy as np

from .attention import cosine_matrix
from .cohort import CohortMatrix

__all__ = ['heurfedamp_weights', 'heurfedamp_aggregate']


def heurfedamp_weights(vectors, sigma, self_weight):
    """N x N mixing matrix over flattened client models."""
    if not 0 < self_weight <= 1:
        raise ValueError('self_weight must lie in (0, 1], got %r'
                         % self_weight)
    if sigma < 0:
        raise ValueError('sigma must be non-negative, got %r' % sigma)

    similarities = cosine_matrix(vectors)
    n = similarities.shape[0]
    mixing = np.zeros((n, n))
    for i in range(n):
        mixing[i, i] = self_weight
        if n == 1:
            mixing[i, i] = 1.0
            continue
        others = np.array([k for k in range(n) if k != i])
        logits = sigma * similarities[i, others]
        exp = np.exp(logits - logits.max())
        mixing[i, others] = (1.0 - self_weight) * exp / exp.sum()
    return mixing


def heurfedamp_aggregate(cohort, sigma, self_weight):
    """Personalize every client with :py:func:`heurfedamp_weights`.

    :returns:
        A :py:class:`CohortMatrix` congruent with ``cohort``. A single-client
        cohort is returned unchanged.
    """
    if not isinstance(cohort, CohortMatrix):
        cohort = CohortMatrix(cohort)
    mixing = heurfedamp_weights(cohort.flattened(), sigma, self_weight)
    if cohort.n_clients == 1:
        return cohort
    return cohort.recombine(mixing)
