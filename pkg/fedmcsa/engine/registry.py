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

from collections import namedtuple, OrderedDict

from ..errors import ConfigError

__all__ = [
    'Algorithm',
    'ALGORITHMS',
    'ALIASES',
    'get_algorithm',
    'algorithm_names',
]

# Server rules
GLOBAL_AVERAGE = 'global-average'
COHORT_AVERAGE = 'cohort-average'
MCSA = 'mcsa'
HEURFEDAMP = 'heurfedamp'

# Client rules
SGD = 'sgd'
PROXIMAL = 'proximal'
FEDPROX = 'fedprox'
PFEDME = 'pfedme'

# Which model a client is evaluated with
GLOBAL = 'global'
LOCAL = 'local'
PERSONAL = 'personal'


class Algorithm(namedtuple('Algorithm',
                           'name server_rule client_rule evaluates')):
    """A federated algorithm as a server rule paired with a client rule.

    .. py:attribute:: server_rule

        ``global-average`` keeps one global model that is sent to every
        sampled client and replaced by the average of their updates.
        ``cohort-average``, ``mcsa`` and ``heurfedamp`` combine the sampled
        clients' latest models into one model per client at the start of the
        round.

    .. py:attribute:: client_rule

        ``sgd``, ``proximal``, ``fedprox`` or ``pfedme``.

    .. py:attribute:: evaluates

        ``global`` (the server's global model), ``local`` (each client's
        latest local model) or ``personal`` (each client's personalized
        pFedMe model).
    """

    @property
    def is_global(self):
        return self.server_rule == GLOBAL_AVERAGE


ALGORITHMS = OrderedDict((a.name, a) for a in [
    Algorithm('fedavg', GLOBAL_AVERAGE, SGD, GLOBAL),
    Algorithm('fedprox', GLOBAL_AVERAGE, FEDPROX, GLOBAL),
    Algorithm('pfedme-gm', GLOBAL_AVERAGE, PFEDME, GLOBAL),
    Algorithm('pfedme-pm', GLOBAL_AVERAGE, PFEDME, PERSONAL),
    Algorithm('heurfedamp', HEURFEDAMP, PROXIMAL, LOCAL),
    Algorithm('fedmcsa', MCSA, PROXIMAL, LOCAL),
    Algorithm('fedmcsa-minus-mcsa', COHORT_AVERAGE, PROXIMAL, LOCAL),
    Algorithm('fedavg-plus-mcsa', MCSA, SGD, LOCAL),
    Algorithm('pfedme-plus-mcsa', MCSA, PFEDME, PERSONAL),
])

ALIASES = {
    'pfedme': 'pfedme-pm',
}


def algorithm_names():
    return list(ALGORITHMS)


def get_algorithm(name):
    """Look up an algorithm by name or alias, ignoring case.

    :raises fedmcsa.errors.ConfigError:
        If the name is unknown.
    """
    key = ALIASES.get(name.lower(), name.lower())
    try:
        return ALGORITHMS[key]
    except KeyError:
        raise ConfigError(
            'Unknown algorithm "%s". Expected one of: %s'
            % (name, ', '.join(ALGORITHMS))
        )
