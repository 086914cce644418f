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
from concurrent.futures import ThreadPoolExecutor
import logging
import math
import timeit

from .client import ClientState, client_rng, train_client
from .registry import GLOBAL, LOCAL, get_algorithm
from .server import ServerState, dispatch, init_rng, sample_clients, \
    sampling_rng
from ..aggregate import average_aggregate
from ..data.sources import build_federation
from ..errors import ExperimentError, FedError, NonFiniteError
from ..metrics import MetricsSeries, evaluate_cohort
from ..nn.model import init_model

__all__ = [
    'RoundResult',
    'init_states',
    'evaluated_models',
    'run_round',
    'run_experiment',
]

logger = logging.getLogger(__name__)


class RoundResult(namedtuple('RoundResult',
                             'server clients metrics sampled attention')):
    """State after one round.

    .. py:attribute:: server

        The new :py:class:`~fedmcsa.engine.server.ServerState`.

    .. py:attribute:: clients

        Tuple of :py:class:`~fedmcsa.engine.client.ClientState`.

    .. py:attribute:: metrics

        :py:class:`~fedmcsa.metrics.RoundMetrics` of the round.

    .. py:attribute:: sampled

        Sorted ids of the sampled clients.

    .. py:attribute:: attention

        Attention weights of the round, if the server computed any.
    """


def init_states(federation, cfg):
    """Server and client states before the first round.

    Every client starts from one shared model drawn from the seed's
    initialization stream.
    """
    model = init_model(cfg.model, federation.feature_width,
                       federation.n_classes, cfg.hidden, init_rng(cfg.seed))
    clients = tuple(
        ClientState(client.client_id, model, model, model, client)
        for client in federation.clients
    )
    return ServerState.initial(model, len(clients)), clients


def evaluated_models(algorithm, server, clients):
    """The model each client is evaluated with."""
    if algorithm.evaluates == GLOBAL:
        return [server.global_model] * len(clients)
    if algorithm.evaluates == LOCAL:
        return [c.model for c in clients]
    return [c.personal for c in clients]


def _check_update(update, round_index):
    if not math.isfinite(update.loss):
        raise NonFiniteError('Training loss is %r' % update.loss,
                             round_index, update.client_id)
    for model in (update.model, update.personal):
        if not model.is_finite():
            raise NonFiniteError('Model parameters are not finite',
                                 round_index, update.client_id)


def run_round(server, clients, cfg, mapper=map):
    """Run one communication round.

    The server samples ``cfg.clients_per_round`` clients, collects their
    current local models, applies its aggregation rule to them and sends
    each one its model.
    The sampled clients (or all clients when ``cfg.all_clients_train`` is
    set) then train locally, the sampled ones report back, and every client
    is evaluated.

    :param ServerState server:
        State after the previous round.
    :param clients:
        Sequence of :py:class:`ClientState` in client id order.
    :param mapper:
        ``map``-like callable used to train and evaluate clients. Results are
        always applied in client id order.
    :returns:
        A :py:class:`RoundResult`.
    :raises fedmcsa.errors.NonFiniteError:
        If a client produced a non-finite loss or model.
    """
    start = timeit.default_timer()
    algorithm = get_algorithm(cfg.algorithm)
    round_index = server.round_index + 1

    sampled = sample_clients(len(clients), cfg.clients_per_round,
                             sampling_rng(cfg.seed, round_index))
    logger.debug('Round %d: sampled clients %s', round_index, sampled)
    # Sampled clients upload their current local model before aggregation.
    server = server.with_columns(
        dict((i, clients[i].model) for i in sampled)
    )
    sent = dispatch(server, sampled, algorithm, cfg,
                    [c.dataset.n_train for c in clients])

    if cfg.all_clients_train:
        trainers = [c.client_id for c in clients]
    else:
        trainers = list(sampled)

    def train(client_id):
        return train_client(
            algorithm.client_rule,
            clients[client_id],
            sent.models.get(client_id),
            cfg,
            client_rng(cfg.seed, client_id, round_index),
        )

    updates = list(mapper(train, trainers))
    clients = list(clients)
    for update in updates:
        _check_update(update, round_index)
        logger.debug('Round %d: client %d loss %.6f',
                     round_index, update.client_id, update.loss)
        state = clients[update.client_id]
        anchor = sent.models.get(update.client_id, state.anchor)
        clients[update.client_id] = state._replace(
            model=update.model, personal=update.personal, anchor=anchor,
        )

    server = server.with_columns(
        dict((i, clients[i].model) for i in sampled)
    )
    if algorithm.is_global:
        weights = None
        if cfg.sample_weighted:
            weights = [clients[i].dataset.n_train for i in sampled]
        server = server._replace(global_model=average_aggregate(
            server.cohort(sampled), weights,
        ))
    server = server._replace(round_index=round_index)

    metrics = evaluate_cohort(
        evaluated_models(algorithm, server, clients),
        [c.dataset for c in clients],
        round_index=round_index,
        l2=cfg.l2,
        mapper=mapper,
    )
    duration_ms = 1000.0 * (timeit.default_timer() - start)
    metrics = metrics._replace(duration_ms=duration_ms)
    return RoundResult(server, tuple(clients), metrics, sampled,
                       sent.attention)


def run_experiment(cfg, federation=None, on_round=None):
    """Run ``cfg.rounds`` rounds.

    :param cfg:
        A :py:class:`~fedmcsa.config.RunConfig`.
    :param federation:
        The clients' data. Built from ``cfg`` when omitted.
    :param on_round:
        Optional callable receiving every :py:class:`RoundResult`.
    :returns:
        A :py:class:`~fedmcsa.metrics.MetricsSeries`.
    :raises fedmcsa.errors.ExperimentError:
        If a round fails; the round index is attached.
    """
    if federation is None:
        federation = build_federation(cfg)
    algorithm = get_algorithm(cfg.algorithm)
    server, clients = init_states(federation, cfg)
    logger.info(
        'Running %s on %s/%s: %d clients, %d per round, %d rounds '
        '(eta=%g, lambda=%g, sigma=%g, seed=%d)',
        algorithm.name, cfg.dataset, cfg.model, len(clients),
        cfg.clients_per_round, cfg.rounds, cfg.eta, cfg.lam, cfg.sigma,
        cfg.seed,
    )

    rounds = []
    with ThreadPoolExecutor(max_workers=cfg.threads) as executor:
        mapper = executor.map if cfg.threads > 1 else map
        for round_index in range(1, cfg.rounds + 1):
            try:
                result = run_round(server, clients, cfg, mapper)
            except FedError as e:
                raise ExperimentError(e, round_index)
            server, clients = result.server, result.clients
            rounds.append(result.metrics)
            logger.info(
                'Round %d/%d: mean test acc %.4f, mean train loss %.4f '
                '(%.0f ms)', round_index, cfg.rounds,
                result.metrics.mean_test_acc, result.metrics.mean_train_loss,
                result.metrics.duration_ms,
            )
            if on_round is not None:
                on_round(result)

    series = MetricsSeries(cfg, tuple(rounds),
                           tuple(evaluated_models(algorithm, server, clients)))
    logger.info('%s finished: BMTA %.2f%% at round %d',
                algorithm.name, 100.0 * series.bmta, series.bmta_round)
    return series
