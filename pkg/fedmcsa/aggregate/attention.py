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

"""Model components self-attention.

For every component index ``l`` the server treats the clients' ``l``-th
components as queries, keys and values at once:

.. math::

    psi_{i,l,k} = exp(sigma cos(theta_{i,l}, theta_{k,l}))
                  / sum_h exp(sigma cos(theta_{i,l}, theta_{h,l}))

    w_{i,l} = sum_k psi_{i,l,k} theta_{k,l}

Rows are normalized over their own index ``i``, which makes every ``w_{i,l}``
a convex combination of the inputs. Each component is attended to
independently of the others.
"""
from __future__ import absolute_import, unicode_literals, print_function

from collections import namedtuple

import numpy as np

from .cohort import CohortMatrix
from ..errors import ShapeError
from ..nn.ops import softmax

__all__ = [
    'ZERO_NORM',
    'AttentionWeights',
    'cosine_similarity',
    'cosine_matrix',
    'attention_weights',
    'mcsa_aggregate',
    'write_attention_csv',
]

#: Vectors with a norm below this have a cosine similarity of 0 to anything.
ZERO_NORM = 1e-12


class AttentionWeights(namedtuple('AttentionWeights', 'matrices sigma')):
    """Per-component attention matrices.

    .. py:attribute:: matrices

        Tuple with one N x N row-stochastic array per component.

    .. py:attribute:: sigma

        Scale the matrices were built with.
    """

    @property
    def n_components(self):
        return len(self.matrices)

    def rows(self):
        """Yield ``(layer, i, k, psi)`` for every entry."""
        for layer, matrix in enumerate(self.matrices):
            n = matrix.shape[0]
            for i in range(n):
                for k in range(n):
                    yield layer, i, k, matrix[i, k]


def cosine_similarity(a, b):
    """Cosine of the angle between two flat vectors, clamped to [-1, 1].

    Zero vectors (norm below :py:data:`ZERO_NORM`) have similarity 0.
    """
    a = np.asarray(a, dtype=np.float64).ravel()
    b = np.asarray(b, dtype=np.float64).ravel()
    if a.size != b.size:
        raise ShapeError('Vector lengths differ', expected=a.size,
                         actual=b.size)
    norm_a, norm_b = np.linalg.norm(a), np.linalg.norm(b)
    if norm_a < ZERO_NORM or norm_b < ZERO_NORM:
        return 0.0
    return float(np.clip(np.dot(a, b) / (norm_a * norm_b), -1.0, 1.0))


def cosine_matrix(vectors):
    """Pairwise cosine similarities of the rows of an N x d array."""
    vectors = np.asarray(vectors, dtype=np.float64)
    norms = np.linalg.norm(vectors, axis=1)
    live = norms >= ZERO_NORM
    units = np.zeros_like(vectors)
    units[live] = vectors[live] / norms[live][:, None]

    n = vectors.shape[0]
    similarities = np.zeros((n, n))
    for i in range(n):
        for k in range(i, n):
            similarities[i, k] = similarities[k, i] = np.dot(
                units[i], units[k]
            )
    return np.clip(similarities, -1.0, 1.0)


def attention_weights(components, sigma):
    """Row-stochastic attention matrix over one component of N clients.

    :param components:
        N x d array (or sequence of N flat vectors of equal length).
    :param float sigma:
        Scale applied to the cosine similarities before the softmax.
    """
    if sigma < 0:
        raise ValueError('sigma must be non-negative, got %r' % sigma)
    try:
        components = np.stack([
            np.asarray(c, dtype=np.float64).ravel() for c in components
        ])
    except ValueError:
        raise ShapeError('Components of one layer must have equal lengths')
    return softmax(sigma * cosine_matrix(components))


def mcsa_aggregate(cohort, sigma):
    """Model components self-attention over a cohort.

    :param CohortMatrix cohort:
        Client models to aggregate.
    :param float sigma:
        Attention scale.
    :returns:
        ``(personalized, weights)``: a :py:class:`CohortMatrix` with one
        personalized model per input column and the
        :py:class:`AttentionWeights` used to build it.
    """
    if not isinstance(cohort, CohortMatrix):
        cohort = CohortMatrix(cohort)
    matrices = tuple(
        attention_weights(cohort.layer(index), sigma)
        for index in range(cohort.n_components)
    )
    return cohort.recombine(matrices), AttentionWeights(matrices, sigma)


def write_attention_csv(writer, round_index, weights, client_ids):
    """Append one round of attention weights to a :py:func:`csv.writer`.

    Rows are ``round, layer, i, k, psi`` with ``i`` and ``k`` translated to
    client ids.
    """
    for layer, i, k, psi in weights.rows():
        writer.writerow([
            round_index, layer, client_ids[i], client_ids[k], '%.10g' % psi
        ])
