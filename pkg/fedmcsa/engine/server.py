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
import logging

import numpy as np

from .registry import GLOBAL_AVERAGE, COHORT_AVERAGE, MCSA, HEURFEDAMP
from ..aggregate import (
    CohortMatrix,
    average_aggregate,
    heurfedamp_aggregate,
    mcsa_aggregate,
)
from ..errors import ConfigError

__all__ = [
    'SAMPLING_STREAM',
    'INIT_STREAM',
    'ServerState',
    'Dispatch',
    'sample_clients',
    'sampling_rng',
    'init_rng',
    'dispatch',
]

logger = logging.getLogger(__name__)

SAMPLING_STREAM = 2
INIT_STREAM = 3


class ServerState(namedtuple('ServerState',
                             'models global_model round_index')):
    """The server between rounds.

    .. py:attribute:: models

        Tuple with one column per client: the latest model that client sent
        back. Only sampled clients' columns change in a round.

    .. py:attribute:: global_model

        The shared model of global-average algorithms.

    .. py:attribute:: round_index

        Number of completed rounds.
    """

    @classmethod
    def initial(cls, model, n_clients):
        return cls((model,) * n_clients, model, 0)

    def cohort(self, client_ids):
        """The sampled columns as a :py:class:`CohortMatrix`."""
        return CohortMatrix([self.models[i] for i in client_ids],
                            self.round_index + 1)

    def with_columns(self, updates):
        """Replace the columns named in the ``{client_id: model}`` mapping.
        """
        models = list(self.models)
        for client_id, model in updates.items():
            models[client_id] = model
        return self._replace(models=tuple(models))


class Dispatch(namedtuple('Dispatch', 'models attention')):
    """What the server sends in one round.

    .. py:attribute:: models

        ``{client_id: model}`` for every sampled client.

    .. py:attribute:: attention

        :py:class:`~fedmcsa.aggregate.AttentionWeights` when the server rule
        is model components self-attention, ``None`` otherwise.
    """


def _stream(seed, *words):
    return np.random.default_rng(np.random.SeedSequence([seed] + list(words)))


def sampling_rng(seed, round_index):
    """Generator used to sample the clients of one round."""
    return _stream(seed, SAMPLING_STREAM, round_index)


def init_rng(seed):
    """Generator used to initialize the shared starting model."""
    return _stream(seed, INIT_STREAM)


def sample_clients(n, s, rng):
    """Sample ``s`` of ``n`` client ids uniformly without replacement.

    :returns:
        Sorted tuple of ids.
    :raises fedmcsa.errors.ConfigError:
        Unless ``1 <= s <= n``.
    """
    if not 1 <= s <= n:
        raise ConfigError('Cannot sample %d of %d clients' % (s, n))
    return tuple(sorted(int(i) for i in rng.choice(n, size=s, replace=False)))


def dispatch(server, client_ids, algorithm, cfg, sample_counts=None):
    """Apply the server rule of ``algorithm`` to the sampled clients.

    :param sample_counts:
        Training set sizes of all clients, used by averages when
        ``cfg.sample_weighted`` is set.
    :returns:
        A :py:class:`Dispatch`.
    """
    rule = algorithm.server_rule
    attention = None
    weights = None
    if cfg.sample_weighted and sample_counts is not None:
        weights = [sample_counts[i] for i in client_ids]

    if rule == GLOBAL_AVERAGE:
        sent = [server.global_model] * len(client_ids)
    else:
        cohort = server.cohort(client_ids)
        if rule == COHORT_AVERAGE:
            sent = [average_aggregate(cohort, weights)] * len(client_ids)
        elif rule == MCSA:
            personalized, attention = mcsa_aggregate(cohort, cfg.sigma)
            sent = personalized.models
        elif rule == HEURFEDAMP:
            sent = heurfedamp_aggregate(cohort, cfg.sigma,
                                        cfg.self_weight).models
        else:
            raise ValueError('Unknown server rule "%s"' % rule)

    return Dispatch(dict(zip(client_ids, sent)), attention)
