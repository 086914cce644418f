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

"""Client-side training.

Every client rule runs ``local_epochs`` iterations, each on a fresh
mini-batch. The proximal rule minimizes

    f_i(Theta) + (lam / 2) ||Theta - W_local||^2

where the anchor ``W_local`` is the model last received from the server and
stays fixed for the whole loop.
"""
from __future__ import absolute_import, unicode_literals, print_function

from collections import namedtuple

import numpy as np

from .registry import SGD, PROXIMAL, FEDPROX, PFEDME
from ..errors import DataError
from ..nn.model import Gradient
from ..nn.ops import loss_and_grad, sgd_step

__all__ = [
    'CLIENT_STREAM',
    'ClientState',
    'ClientUpdate',
    'BatchObjective',
    'client_rng',
    'local_update',
    'pfedme_update',
    'train_client',
]

#: Entropy word separating client streams from other streams of one seed.
CLIENT_STREAM = 1


class ClientState(namedtuple('ClientState',
                             'client_id model anchor personal dataset')):
    """What a client keeps between rounds.

    .. py:attribute:: model

        The local model ``Theta_i`` after the client's latest training.

    .. py:attribute:: anchor

        The model last received from the server. Only changes when the
        client is sampled.

    .. py:attribute:: personal

        The personalized pFedMe model ``theta_i``; equal to ``model`` for
        other client rules.

    .. py:attribute:: dataset

        The client's :py:class:`~fedmcsa.data.ClientDataset`.
    """


class ClientUpdate(
        namedtuple('ClientUpdate', 'client_id model personal loss')):
    """Result of one round of local training."""


def client_rng(seed, client_id, round_index):
    """Generator private to one client in one round.

    Streams depend only on their three inputs, so results do not depend on
    the order or the thread clients are trained in.
    """
    return np.random.default_rng(
        np.random.SeedSequence([seed, CLIENT_STREAM, client_id, round_index])
    )


class BatchObjective(object):
    """Mini-batch cross-entropy on one client's training set."""

    __slots__ = ('features', 'labels', 'batch_size', 'l2')

    def __init__(self, features, labels, batch_size, l2=0.0):
        if labels.size == 0:
            raise DataError('Cannot train on an empty dataset')
        self.features = features
        self.labels = labels
        self.batch_size = batch_size
        self.l2 = l2

    def sample(self, rng):
        """Draw a batch without replacement."""
        n = self.labels.size
        index = rng.choice(n, size=min(self.batch_size, n), replace=False)
        return self.features[index], self.labels[index]

    def __call__(self, model, batch):
        x, y = batch
        return loss_and_grad(model, x, y, self.l2)


def _with_proximal(grad, model, anchor, lam):
    return Gradient(
        [g + lam * (m - a) for g, m, a in
         zip(grad.values, model.values, anchor.values)],
        grad.shapes,
    )


def local_update(model, anchor, objective, rng, iterations, eta, lam):
    """Run ``iterations`` proximal SGD steps.

    :param model:
        Starting point.
    :param anchor:
        Model the proximal term pulls towards. Ignored when ``lam`` is 0.
    :param objective:
        Object with ``sample(rng)`` returning a batch and
        ``__call__(model, batch)`` returning ``(loss, gradient)``.
    :returns:
        ``(model, mean_loss)`` where the loss excludes the proximal term.
    """
    if lam:
        model.check_congruent(anchor)
    losses = []
    for _ in range(iterations):
        loss, grad = objective(model, objective.sample(rng))
        if lam:
            grad = _with_proximal(grad, model, anchor, lam)
        model = sgd_step(model, grad, eta)
        losses.append(loss)
    return model, float(np.mean(losses)) if losses else 0.0


def pfedme_update(model, personal, objective, rng, iterations, steps,
                  personal_eta, eta, lam):
    """pFedMe's bi-level local loop.

    Each iteration draws a batch, takes ``steps`` gradient steps on
    ``f_i(theta) + (lam / 2) ||theta - w||^2`` at rate ``personal_eta``, then
    moves the local model: ``w <- w - eta * lam * (w - theta)``.

    :returns:
        ``(w, theta, mean_loss)``
    """
    losses = []
    for _ in range(iterations):
        batch = objective.sample(rng)
        for _ in range(steps):
            loss, grad = objective(personal, batch)
            personal = sgd_step(
                personal, _with_proximal(grad, personal, model, lam),
                personal_eta,
            )
            losses.append(loss)
        model = model.with_values(
            w - eta * lam * (w - theta)
            for w, theta in zip(model.values, personal.values)
        )
    return model, personal, float(np.mean(losses)) if losses else 0.0


def train_client(rule, state, received, cfg, rng):
    """Run one client rule for one round.

    :param str rule:
        One of the client rules of :py:mod:`fedmcsa.engine.registry`.
    :param ClientState state:
        The client before training.
    :param received:
        Model sent by the server this round, or ``None`` if the client was
        not sampled and trains on its own.
    :returns:
        A :py:class:`ClientUpdate`.
    """
    data = state.dataset
    objective = BatchObjective(data.train_x, data.train_y, cfg.batch_size,
                               cfg.l2)
    if received is not None:
        start, anchor = received, received
    else:
        start, anchor = state.model, state.anchor

    if rule == PFEDME:
        personal = received if received is not None else state.personal
        model, personal, loss = pfedme_update(
            start, personal, objective, rng, cfg.local_epochs,
            cfg.pfedme_steps, cfg.personal_eta, cfg.eta, cfg.lam,
        )
        return ClientUpdate(state.client_id, model, personal, loss)

    if rule == SGD:
        lam = 0.0
    elif rule == PROXIMAL:
        lam = cfg.lam
    elif rule == FEDPROX:
        lam = cfg.mu
    else:
        raise ValueError('Unknown client rule "%s"' % rule)
    model, loss = local_update(start, anchor, objective, rng,
                               cfg.local_epochs, cfg.eta, lam)
    return ClientUpdate(state.client_id, model, model, loss)
