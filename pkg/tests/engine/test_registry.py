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

from fedmcsa.engine.registry import (
    ALGORITHMS,
    COHORT_AVERAGE,
    GLOBAL_AVERAGE,
    MCSA,
    PFEDME,
    PROXIMAL,
    SGD,
    algorithm_names,
    get_algorithm,
)
from fedmcsa.errors import ConfigError


@pytest.mark.parametrize('name, server_rule, client_rule', [
    ('fedavg', GLOBAL_AVERAGE, SGD),
    ('fedmcsa', MCSA, PROXIMAL),
    ('fedmcsa-minus-mcsa', COHORT_AVERAGE, PROXIMAL),
    ('fedavg-plus-mcsa', MCSA, SGD),
    ('pfedme-plus-mcsa', MCSA, PFEDME),
])
def test_rules(name, server_rule, client_rule):
    algorithm = get_algorithm(name)
    assert algorithm.server_rule == server_rule
    assert algorithm.client_rule == client_rule


@pytest.mark.parametrize('name, expected', [
    ('FedMCSA', 'fedmcsa'),
    ('pfedme', 'pfedme-pm'),
    ('PFEDME-GM', 'pfedme-gm'),
])
def test_lookup_ignores_case_and_resolves_aliases(name, expected):
    assert get_algorithm(name).name == expected


def test_unknown_algorithm():
    with pytest.raises(ConfigError) as exc_info:
        get_algorithm('fedsgd')
    message = str(exc_info.value)
    assert 'Unknown algorithm "fedsgd"' in message
    for name in ALGORITHMS:
        assert name in message


def test_global_algorithms():
    assert [a.name for a in ALGORITHMS.values() if a.is_global] == [
        'fedavg', 'fedprox', 'pfedme-gm', 'pfedme-pm',
    ]
    assert algorithm_names()[0] == 'fedavg'
