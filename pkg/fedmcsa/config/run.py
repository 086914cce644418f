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
import math

from ..data.partition import SHARD_SIZE_RANGE
from ..data.sources import DATASETS, SYNTHETIC
from ..data.synthetic import SYNTHETIC_SIZE_RANGE
from ..engine.registry import get_algorithm
from ..errors import ConfigError
from ..nn.model import ARCHITECTURES, MLR

__all__ = ['RunConfig', 'FIELDS', 'DEFAULTS']

_STR, _INT, _FLOAT, _BOOL = 'a string', 'an integer', 'a number', 'a boolean'

#: Every field of :py:class:`RunConfig` with its type, in echo order.
FIELDS = OrderedDict([
    ('algorithm', _STR),
    ('dataset', _STR),
    ('model', _STR),
    ('clients', _INT),
    ('rounds', _INT),
    ('clients_per_round', _INT),
    ('local_epochs', _INT),
    ('batch_size', _INT),
    ('eta', _FLOAT),
    ('lam', _FLOAT),
    ('sigma', _FLOAT),
    ('mu', _FLOAT),
    ('pfedme_steps', _INT),
    ('personal_eta', _FLOAT),
    ('self_weight', _FLOAT),
    ('l2', _FLOAT),
    ('hidden', _INT),
    ('alpha', _FLOAT),
    ('beta', _FLOAT),
    ('classes_per_client', _INT),
    ('size_min', _INT),
    ('size_max', _INT),
    ('seed', _INT),
    ('repeats', _INT),
    ('threads', _INT),
    ('all_clients_train', _BOOL),
    ('sample_weighted', _BOOL),
    ('dump_attention', _BOOL),
    ('timings', _BOOL),
    ('data_dir', _STR),
    ('data_file', _STR),
    ('out', _STR),
])

#: Defaults that do not depend on the dataset or model. ``None`` entries are
#: filled in by :py:meth:`RunConfig.create`.
DEFAULTS = {
    'algorithm': 'fedmcsa',
    'dataset': SYNTHETIC,
    'model': MLR,
    'clients': None,
    'rounds': 800,
    'clients_per_round': None,
    'local_epochs': 20,
    'batch_size': 20,
    'eta': 0.02,
    'lam': 5.0,
    'sigma': 50.0,
    'mu': 0.001,
    'pfedme_steps': 5,
    'personal_eta': None,
    'self_weight': 0.5,
    'l2': None,
    'hidden': None,
    'alpha': 0.5,
    'beta': 0.5,
    'classes_per_client': 2,
    'size_min': None,
    'size_max': None,
    'seed': 0,
    'repeats': 1,
    'threads': 1,
    'all_clients_train': False,
    'sample_weighted': False,
    'dump_attention': False,
    'timings': True,
    'data_dir': None,
    'data_file': None,
    'out': 'runs',
}

# Fields never left as None after create().
_REQUIRED = frozenset(FIELDS) - {'data_dir', 'data_file'}


def _coerce(name, value):
    kind = FIELDS[name]
    if value is None:
        return None
    if kind == _STR:
        if isinstance(value, (bool, int, float, tuple, list)):
            raise ConfigError('"%s" expects %s, got %r' % (name, kind, value))
        return '%s' % value
    if kind == _BOOL:
        if isinstance(value, bool):
            return value
        if value in ('true', 'false'):
            return value == 'true'
        raise ConfigError('"%s" expects true or false, got %r' % (name, value))
    if isinstance(value, bool) or isinstance(value, (tuple, list)):
        raise ConfigError('"%s" expects %s, got %r' % (name, kind, value))
    try:
        number = float(value)
    except (TypeError, ValueError):
        raise ConfigError('"%s" expects %s, got %r' % (name, kind, value))
    if not math.isfinite(number):
        raise ConfigError('"%s" must be finite, got %r' % (name, value))
    if kind == _INT:
        if not number.is_integer():
            raise ConfigError('"%s" expects an integer, got %r'
                              % (name, value))
        return int(number)
    return number


def _derived_defaults(values):
    """Defaults that depend on the dataset, the model or ``eta``."""
    synthetic = values['dataset'] == SYNTHETIC
    sizes = SYNTHETIC_SIZE_RANGE if synthetic else SHARD_SIZE_RANGE
    return {
        'clients': 100 if synthetic else 20,
        'clients_per_round': 20 if synthetic else 10,
        'hidden': 20 if synthetic else 100,
        'l2': 1e-4 if values['model'] == MLR else 0.0,
        'personal_eta': values['eta'],
        'size_min': sizes[0],
        'size_max': sizes[1],
    }


class RunConfig(namedtuple('RunConfig', list(FIELDS))):
    """Every setting of one experiment.

    Build instances with :py:meth:`create`, which fills in defaults and
    validates the combination. The attribute names match the keys accepted
    in configuration files; ``lam`` is the proximal strength (spelled
    ``lambda`` in files and on the command line).
    """

    @classmethod
    def create(cls, **values):
        """Build a validated configuration.

        Dataset-dependent defaults: 100 clients with 20 sampled per round
        and a hidden width of 20 for the synthetic data; 20 clients with 10
        sampled per round and a hidden width of 100 otherwise. The
        ``l2`` coefficient defaults to ``1e-4`` for MLR and 0 for DNN and
        the personal learning rate to ``eta``.

        :raises fedmcsa.errors.ConfigError:
            Naming the first offending field.
        """
        unknown = sorted(set(values) - set(FIELDS))
        if unknown:
            raise ConfigError('Unknown setting(s): %s' % ', '.join(unknown))

        merged = dict(DEFAULTS)
        for name, value in values.items():
            if value is not None:
                merged[name] = value
        merged = dict((k, _coerce(k, v)) for k, v in merged.items())

        merged['algorithm'] = get_algorithm(merged['algorithm']).name
        merged['dataset'] = merged['dataset'].lower()
        merged['model'] = merged['model'].lower()

        for name, value in _derived_defaults(merged).items():
            if merged[name] is None:
                merged[name] = _coerce(name, value)

        config = cls(**merged)
        config.validate()
        return config

    def validate(self):
        if self.dataset not in DATASETS:
            raise ConfigError(
                'Unknown dataset "%s". Expected one of: %s'
                % (self.dataset, ', '.join(DATASETS))
            )
        if self.model not in ARCHITECTURES:
            raise ConfigError(
                'Unknown model "%s". Expected one of: %s'
                % (self.model, ', '.join(ARCHITECTURES))
            )
        for name in _REQUIRED:
            if getattr(self, name) is None:
                raise ConfigError('"%s" is not set' % name)

        for name in ('rounds', 'clients_per_round', 'local_epochs',
                     'batch_size', 'pfedme_steps', 'hidden', 'repeats',
                     'threads', 'clients', 'classes_per_client'):
            if getattr(self, name) < 1:
                raise ConfigError('"%s" must be at least 1, got %d'
                                  % (name, getattr(self, name)))
        for name in ('eta', 'lam', 'sigma', 'mu', 'personal_eta', 'l2',
                     'alpha', 'beta', 'seed'):
            if getattr(self, name) < 0:
                raise ConfigError('"%s" must be non-negative, got %r'
                                  % (name, getattr(self, name)))

        if self.clients_per_round > self.clients:
            raise ConfigError(
                'clients_per_round (%d) cannot exceed clients (%d)'
                % (self.clients_per_round, self.clients)
            )
        if self.dataset == SYNTHETIC and self.clients < 2:
            raise ConfigError('The synthetic dataset needs at least 2 '
                              'clients, got %d' % self.clients)
        if not 0 < self.self_weight <= 1:
            raise ConfigError('"self_weight" must lie in (0, 1], got %r'
                              % self.self_weight)
        if self.size_min < 1 or self.size_max < self.size_min:
            raise ConfigError('Invalid client size range [%d, %d]'
                              % (self.size_min, self.size_max))
        return self

    def replace(self, **changes):
        """Return a validated copy with some fields changed.

        Fields that hold their dataset, model or ``eta`` dependent default
        are derived again from the changed values.
        """
        values = self.to_dict()
        for name, value in _derived_defaults(values).items():
            if name not in changes and values[name] == value:
                values[name] = None
        values.update(changes)
        return RunConfig.create(**values)

    def to_dict(self):
        """The configuration as an ordered mapping, fields in echo order."""
        return OrderedDict(zip(self._fields, self))
