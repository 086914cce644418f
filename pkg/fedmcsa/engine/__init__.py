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
The federated training loop.

Registry
--------

.. autoclass:: Algorithm
    :members:

.. autofunction:: get_algorithm

Server
------

.. autoclass:: ServerState
    :members:

.. autofunction:: sample_clients

Clients
-------

.. automodule:: fedmcsa.engine.client

.. autoclass:: ClientState

.. autofunction:: local_update

.. autofunction:: pfedme_update

.. autofunction:: client_rng

Rounds
------

.. autofunction:: run_round

.. autofunction:: run_experiment
"""
from __future__ import absolute_import, unicode_literals, print_function

from .client import (
    ClientState,
    ClientUpdate,
    BatchObjective,
    client_rng,
    local_update,
    pfedme_update,
    train_client,
)
from .registry import Algorithm, ALGORITHMS, get_algorithm, algorithm_names
from .runner import (
    RoundResult,
    init_states,
    evaluated_models,
    run_round,
    run_experiment,
)
from .server import ServerState, sample_clients, sampling_rng, dispatch

__all__ = [
    # Registry
    'Algorithm',
    'ALGORITHMS',
    'get_algorithm',
    'algorithm_names',

    # Server
    'ServerState',
    'sample_clients',
    'sampling_rng',
    'dispatch',

    # Clients
    'ClientState',
    'ClientUpdate',
    'BatchObjective',
    'client_rng',
    'local_update',
    'pfedme_update',
    'train_client',

    # Rounds
    'RoundResult',
    'init_states',
    'evaluated_models',
    'run_round',
    'run_experiment',
]
