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

from ..errors import InvalidBatchError, ShapeError
from ..nn.ops import accuracy, cross_entropy

__all__ = [
    'RoundMetrics',
    'MetricsSeries',
    'evaluate_client',
    'evaluate_cohort',
    'bmta',
]


class RoundMetrics(namedtuple('RoundMetrics', [
    'round_index',
    'client_accuracies',
    'mean_test_acc',
    'weighted_test_acc',
    'mean_train_loss',
    'duration_ms',
])):
    """Evaluation of every client after one round.

    .. py:attribute:: client_accuracies

        Tuple with the test accuracy of each client, in client order.

    .. py:attribute:: mean_test_acc

        Unweighted mean of :py:attr:`client_accuracies`.

    .. py:attribute:: weighted_test_acc

        Mean accuracy weighted by test set sizes.

    .. py:attribute:: mean_train_loss

        Unweighted mean over clients of the loss on their whole training set.
    """

    @property
    def min_client_acc(self):
        return min(self.client_accuracies)

    @property
    def max_client_acc(self):
        return max(self.client_accuracies)


class MetricsSeries(namedtuple('MetricsSeries', 'config rounds models')):
    """Every round of one experiment.

    .. py:attribute:: config

        The :py:class:`~fedmcsa.config.RunConfig` the experiment ran with.

    .. py:attribute:: rounds

        Tuple of :py:class:`RoundMetrics`, first round first.

    .. py:attribute:: models

        The model each client was evaluated with after the last round.
    """

    @property
    def n_rounds(self):
        return len(self.rounds)

    @property
    def bmta(self):
        """Best mean test accuracy; see :py:func:`bmta`."""
        return bmta(self)[0]

    @property
    def bmta_round(self):
        return bmta(self)[1]

    @property
    def final_accuracies(self):
        return self.rounds[-1].client_accuracies if self.rounds else ()


def evaluate_client(model, dataset, l2=0.0):
    """``(test accuracy, train loss)`` of one model on one client."""
    return (
        accuracy(model, dataset.test_x, dataset.test_y),
        cross_entropy(model, dataset.train_x, dataset.train_y, l2),
    )


def evaluate_cohort(models, datasets, round_index=0, duration_ms=0.0,
                    l2=0.0, mapper=map):
    """Evaluate each client's model on that client's data.

    :param models:
        One model per client.
    :param datasets:
        One :py:class:`~fedmcsa.data.ClientDataset` per client.
    :param mapper:
        ``map``-like callable used to evaluate the clients, such as
        :py:meth:`concurrent.futures.Executor.map`. Results are reduced in
        client order.
    :returns:
        A :py:class:`RoundMetrics`.
    :raises fedmcsa.errors.InvalidBatchError:
        If a client has an empty test set.
    """
    models, datasets = list(models), list(datasets)
    if len(models) != len(datasets):
        raise ShapeError('One model per client required',
                         expected=len(datasets), actual=len(models))
    if not datasets:
        raise InvalidBatchError('Cannot evaluate an empty cohort')

    results = list(mapper(
        lambda pair: evaluate_client(pair[0], pair[1], l2),
        zip(models, datasets),
    ))
    accuracies = tuple(acc for acc, _ in results)
    test_sizes = np.array([d.n_test for d in datasets], dtype=np.float64)
    return RoundMetrics(
        round_index=round_index,
        client_accuracies=accuracies,
        mean_test_acc=float(np.mean(accuracies)),
        weighted_test_acc=float(np.dot(accuracies, test_sizes) /
                                test_sizes.sum()),
        mean_train_loss=float(np.mean([loss for _, loss in results])),
        duration_ms=duration_ms,
    )


def bmta(series):
    """Best mean test accuracy and the earliest round attaining it.

    :param series:
        A :py:class:`MetricsSeries` or a sequence of
        :py:class:`RoundMetrics`.
    :returns:
        ``(value, round_index)``
    :raises ValueError:
        If the series is empty.
    """
    rounds = series.rounds if isinstance(series, MetricsSeries) else series
    if not rounds:
        raise ValueError('Cannot take the best accuracy of an empty series')
    best = rounds[0]
    for metrics in rounds[1:]:
        if metrics.mean_test_acc > best.mean_test_acc:
            best = metrics
    return best.mean_test_acc, best.round_index
