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
Server-side aggregation rules.

Each rule consumes a :py:class:`CohortMatrix` of client models. Model
components self-attention and the whole-model heuristic return one
personalized model per client; averaging returns a single global model.

.. autoclass:: CohortMatrix
    :members:

Self-attention
--------------

.. automodule:: fedmcsa.aggregate.attention

.. autoclass:: AttentionWeights
    :members:

.. autofunction:: cosine_similarity

.. autofunction:: attention_weights

.. autofunction:: mcsa_aggregate

.. autofunction:: write_attention_csv

Other rules
-----------

.. autofunction:: average_aggregate

.. automodule:: fedmcsa.aggregate.heuristic

.. autofunction:: heurfedamp_aggregate
"""
from __future__ import absolute_import, unicode_literals, print_function

from .attention import (
    AttentionWeights,
    cosine_similarity,
    cosine_matrix,
    attention_weights,
    mcsa_aggregate,
    write_attention_csv,
)
from .average import average_aggregate
from .cohort import CohortMatrix
from .heuristic import heurfedamp_aggregate, heurfedamp_weights

__all__ = [
    'CohortMatrix',

    # Self-attention
    'AttentionWeights',
    'cosine_similarity',
    'cosine_matrix',
    'attention_weights',
    'mcsa_aggregate',
    'write_attention_csv',

    # Other rules
    'average_aggregate',
    'heurfedamp_aggregate',
    'heurfedamp_weights',
]
