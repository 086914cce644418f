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

import numpy as np

from ..errors import ShapeError

__all__ = ['CohortMatrix']


class CohortMatrix(namedtuple('CohortMatrix', 'models round_index')):
    """The client models a server aggregates in one round.

    .. py:attribute:: models

        Tuple of :py:class:`~fedmcsa.nn.ComponentizedModel`, one column per
        client, all sharing one component layout.

    .. py:attribute:: round_index

        Round the cohort belongs to.
    """

    def __new__(cls, models, round_index=0):
        models = tuple(models)
        if not models:
            raise ShapeError('A cohort needs at least one model')
        first = models[0]
        for model in models[1:]:
            first.check_congruent(model)
        return super(CohortMatrix, cls).__new__(cls, models, round_index)

    @property
    def n_clients(self):
        return len(self.models)

    @property
    def n_components(self):
        return self.models[0].n_components

    def layer(self, index):
        """Component ``index`` of every client stacked into an N x d array.
        """
        return np.stack([m.components[index].values for m in self.models])

    def flattened(self):
        """Every client's full parameter vector stacked into an N x D array.
        """
        return np.stack([m.flatten() for m in self.models])

    def recombine(self, mixing):
        """Apply one mixing matrix per component.

        :param mixing:
            Sequence with one N x N row-stochastic matrix per component (or
            a single matrix used for every component). Client ``i`` of the
            output receives ``sum_k mixing[i, k] * column_k`` per
            component.
        :returns:
            A new :py:class:`CohortMatrix`.
        """
        if isinstance(mixing, np.ndarray) and mixing.ndim == 2:
            mixing = [mixing] * self.n_components

        per_client = [[] for _ in self.models]
        for index, weights in enumerate(mixing):
            stack = self.layer(index)
            # One row at a time so each output column sees the same
            # reduction whatever the other rows hold.
            for i, row in enumerate(weights):
                per_client[i].append(row @ stack)

        return CohortMatrix(
            [m.with_values(v) for m, v in zip(self.models, per_client)],
            self.round_index,
        )
