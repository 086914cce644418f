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

import pytest

from fedmcsa.config import DEFAULTS, FIELDS, RunConfig
from fedmcsa.errors import ConfigError


def test_synthetic_defaults():
    cfg = RunConfig.create()
    assert cfg.algorithm == 'fedmcsa'
    assert cfg.dataset == 'synthetic'
    assert cfg.model == 'mlr'
    assert (cfg.clients, cfg.clients_per_round, cfg.rounds) == (100, 20, 800)
    assert (cfg.local_epochs, cfg.batch_size) == (20, 20)
    assert (cfg.eta, cfg.lam, cfg.sigma) == (0.02, 5.0, 50.0)
    assert cfg.hidden == 20
    assert cfg.l2 == 1e-4
    assert cfg.personal_eta == cfg.eta
    assert (cfg.size_min, cfg.size_max) == (250, 25810)
    assert cfg.data_dir is None and cfg.data_file is None


def test_image_defaults():
    cfg = RunConfig.create(dataset='MNIST', model='DNN', eta=0.05)
    assert cfg.dataset == 'mnist'
    assert cfg.model == 'dnn'
    assert (cfg.clients, cfg.clients_per_round, cfg.hidden) == (20, 10, 100)
    assert cfg.l2 == 0.0
    assert cfg.personal_eta == 0.05
    assert (cfg.size_min, cfg.size_max) == (1165, 3834)


def test_explicit_values_win():
    cfg = RunConfig.create(clients=10, clients_per_round=10, hidden=7,
                           l2=0.0, personal_eta=0.1, rounds=None)
    assert (cfg.clients, cfg.clients_per_round, cfg.hidden) == (10, 10, 7)
    assert cfg.l2 == 0.0
    assert cfg.personal_eta == 0.1
    assert cfg.rounds == DEFAULTS['rounds']


def test_algorithm_is_canonical():
    assert RunConfig.create(algorithm='pFedMe').algorithm == 'pfedme-pm'


def test_coercion():
    cfg = RunConfig.create(rounds=5.0, eta=1, all_clients_train='true')
    assert cfg.rounds == 5 and isinstance(cfg.rounds, int)
    assert cfg.eta == 1.0 and isinstance(cfg.eta, float)
    assert cfg.all_clients_train is True


@pytest.mark.parametrize('values, message', [
    (dict(rounds=0), '"rounds" must be at least 1'),
    (dict(clients=5, clients_per_round=6),
     'clients_per_round (6) cannot exceed clients (5)'),
    (dict(clients=1, clients_per_round=1),
     'synthetic dataset needs at least 2 clients'),
    (dict(algorithm='fedsgd'), 'Unknown algorithm "fedsgd"'),
    (dict(dataset='imagenet'), 'Unknown dataset "imagenet"'),
    (dict(model='cnn'), 'Unknown model "cnn"'),
    (dict(sigma=-1.0), '"sigma" must be non-negative'),
    (dict(seed=-1), '"seed" must be non-negative'),
    (dict(self_weight=0.0), '"self_weight" must lie in (0, 1]'),
    (dict(rounds=2.5), '"rounds" expects an integer'),
    (dict(rounds=True), '"rounds" expects an integer'),
    (dict(eta='fast'), '"eta" expects a number'),
    (dict(eta=float('nan')), '"eta" must be finite'),
    (dict(sigma=(10, 50)), '"sigma" expects a number'),
    (dict(timings='yes'), '"timings" expects true or false'),
    (dict(algorithm=3), '"algorithm" expects a string'),
    (dict(size_min=500, size_max=400), 'Invalid client size range'),
    (dict(rounds_per_epoch=3), 'Unknown setting(s): rounds_per_epoch'),
])
def test_invalid(values, message):
    with pytest.raises(ConfigError) as exc_info:
        RunConfig.create(**values)
    assert message in str(exc_info.value)


def test_replace_revalidates():
    cfg = RunConfig.create(rounds=10)
    assert cfg.replace(seed=3).seed == 3
    with pytest.raises(ConfigError):
        cfg.replace(clients_per_round=1000)


def test_replace_rederives_defaults():
    cfg = RunConfig.create()
    assert cfg.replace(eta=0.05).personal_eta == 0.05
    assert cfg.replace(model='dnn').l2 == 0.0

    image = cfg.replace(dataset='mnist')
    assert (image.clients, image.clients_per_round, image.hidden) == \
        (20, 10, 100)
    assert (image.size_min, image.size_max) == (1165, 3834)


def test_replace_keeps_explicit_values():
    cfg = RunConfig.create(personal_eta=0.01, l2=0.5, clients=30)
    changed = cfg.replace(eta=0.05, model='dnn', dataset='mnist')
    assert changed.personal_eta == 0.01
    assert changed.l2 == 0.5
    assert changed.clients == 30
    assert changed.clients_per_round == 10


def test_to_dict_order():
    assert list(RunConfig.create().to_dict()) == list(FIELDS)
