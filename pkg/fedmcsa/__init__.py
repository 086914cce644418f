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
fedmcsa runs personalized federated learning experiments: model components
self-attention on the server, proximal local training on the clients, and
the baselines and ablations to compare them with.

.. code-block:: python

    from fedmcsa import RunConfig, run_experiment

    cfg = RunConfig.create(algorithm='fedmcsa', rounds=100, clients=20,
                           clients_per_round=10)
    series = run_experiment(cfg)
    print(series.bmta, series.bmta_round)

.. autofunction:: run_experiment
"""
from __future__ import absolute_import, unicode_literals, print_function

__version__ = '0.1.0.dev0'

from .config import RunConfig  # noqa: E402
from .engine import run_experiment, get_algorithm  # noqa: E402

__all__ = ['RunConfig', 'run_experiment', 'get_algorithm']
