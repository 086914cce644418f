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

from ..errors import ConfigError, ShapeError

__all__ = [
    'MLR',
    'DNN',
    'WEIGHT',
    'BIAS',
    'Component',
    'ComponentizedModel',
    'Gradient',
    'init_model',
]

MLR = 'mlr'
DNN = 'dnn'

ARCHITECTURES = (MLR, DNN)

WEIGHT = 'weight'
BIAS = 'bias'

#: Roles of the components of each architecture, in order.
LAYOUTS = {
    MLR: (WEIGHT, BIAS),
    DNN: (WEIGHT, BIAS, WEIGHT, BIAS),
}


def _frozen(values):
    array = np.array(values, dtype=np.float64).ravel()
    array.setflags(write=False)
    return array


class Component(namedtuple('Component', 'values shape role')):
    """A single parameter tensor of a model.

    .. py:attribute:: values

        Read-only flat ``float64`` array holding the parameters.

    .. py:attribute:: shape

        Shape of the tensor. Weights are ``(fan_in, fan_out)``, biases are
        ``(fan_out,)``.

    .. py:attribute:: role

        :py:data:`WEIGHT` or :py:data:`BIAS`.
    """

    def __new__(cls, values, shape, role):
        values = _frozen(values)
        shape = tuple(int(d) for d in shape)
        if int(np.prod(shape)) != values.size:
            raise ShapeError(
                'Component values do not fill its shape',
                expected=shape,
                actual=values.size,
            )
        return super(Component, cls).__new__(cls, values, shape, role)

    @property
    def tensor(self):
        """The values reshaped to :py:attr:`shape`."""
        return self.values.reshape(self.shape)

    @property
    def size(self):
        return self.values.size

    def replace_values(self, values):
        return Component(values, self.shape, self.role)


class ComponentizedModel(namedtuple('ComponentizedModel',
                                    'architecture components')):
    """One client's parameters as an ordered list of components.

    The components are the unit of aggregation: MLR has two (``W``, ``b``),
    DNN has four (``W1``, ``b1``, ``W2``, ``b2``). Models are immutable;
    every operation returns a new model.

    ``architecture`` may be ``None`` for free-form models built directly
    from components, which skips the layout checks of :py:meth:`validate`.
    """

    def __new__(cls, architecture, components):
        return super(ComponentizedModel, cls).__new__(
            cls, architecture, tuple(components)
        )

    @classmethod
    def from_arrays(cls, arrays, architecture=None, roles=None):
        """Build a model from a sequence of arrays, keeping their shapes."""
        arrays = [np.asarray(a, dtype=np.float64) for a in arrays]
        if roles is None:
            roles = [WEIGHT if a.ndim > 1 else BIAS for a in arrays]
        return cls(architecture, [
            Component(a, a.shape, role) for a, role in zip(arrays, roles)
        ])

    @property
    def n_components(self):
        return len(self.components)

    @property
    def values(self):
        """Tuple of the flat value arrays of every component."""
        return tuple(c.values for c in self.components)

    @property
    def shapes(self):
        return tuple(c.shape for c in self.components)

    @property
    def input_dim(self):
        return self.components[0].shape[0]

    @property
    def n_classes(self):
        return self.components[-1].shape[-1]

    def flatten(self):
        """All parameters concatenated into one vector."""
        return np.concatenate(self.values)

    def with_values(self, values):
        """Return a model with the same layout and the given flat values."""
        values = list(values)
        if len(values) != len(self.components):
            raise ShapeError(
                'Wrong number of components',
                expected=len(self.components),
                actual=len(values),
            )
        return ComponentizedModel(self.architecture, [
            c.replace_values(v) for c, v in zip(self.components, values)
        ])

    def check_congruent(self, other):
        """Raise :py:class:`ShapeError` unless ``other`` has the same layout.

        ``other`` may be a model or a :py:class:`Gradient`.
        """
        if self.shapes != other.shapes:
            raise ShapeError(
                'Incongruent component shapes',
                expected=self.shapes,
                actual=other.shapes,
            )

    def is_finite(self):
        return all(np.all(np.isfinite(v)) for v in self.values)

    def validate(self):
        """Check the architecture layout and chained layer dimensions."""
        if self.architecture is not None:
            roles = tuple(c.role for c in self.components)
            if roles != LAYOUTS[self.architecture]:
                raise ShapeError(
                    'Component layout does not match %s' % self.architecture,
                    expected=LAYOUTS[self.architecture],
                    actual=roles,
                )
            fan_in = None
            for component in self.components:
                if component.role == WEIGHT:
                    if fan_in is not None and component.shape[0] != fan_in:
                        raise ShapeError(
                            'Layer fan-in does not match previous fan-out',
                            expected=fan_in,
                            actual=component.shape[0],
                        )
                    fan_in = component.shape[1]
                elif component.shape != (fan_in,):
                    raise ShapeError(
                        'Bias does not match layer fan-out',
                        expected=(fan_in,),
                        actual=component.shape,
                    )
        if not self.is_finite():
            raise ShapeError('Model contains non-finite parameters')
        return self

    def combine(self, other, scale):
        """Return ``self + scale * other``, componentwise."""
        self.check_congruent(other)
        return self.with_values(
            a + scale * b for a, b in zip(self.values, other.values)
        )


class Gradient(namedtuple('Gradient', 'values shapes')):
    """Gradient of a loss with respect to a :py:class:`ComponentizedModel`.

    One flat array per model component, in the same order.
    """

    def __new__(cls, values, shapes):
        values = tuple(np.asarray(v, dtype=np.float64).ravel() for v in values)
        return super(Gradient, cls).__new__(cls, values, tuple(shapes))

    @classmethod
    def zeros_like(cls, model):
        return cls([np.zeros(c.size) for c in model.components], model.shapes)

    def combine(self, other, scale):
        """Return ``self + scale * other`` where ``other`` is congruent."""
        if self.shapes != other.shapes:
            raise ShapeError(
                'Incongruent gradient shapes',
                expected=self.shapes,
                actual=other.shapes,
            )
        return Gradient(
            [a + scale * b for a, b in zip(self.values, other.values)],
            self.shapes,
        )


def _glorot(rng, fan_in, fan_out):
    limit = np.sqrt(6.0 / (fan_in + fan_out))
    return rng.uniform(-limit, limit, size=(fan_in, fan_out))


def init_model(architecture, input_dim, n_classes, hidden, rng):
    """Create a freshly initialized model.

    Weights are drawn uniformly from
    ``[-sqrt(6 / (fan_in + fan_out)), sqrt(6 / (fan_in + fan_out))]``;
    biases start at zero.

    :param str architecture:
        :py:data:`MLR` or :py:data:`DNN`.
    :param int input_dim:
        Feature width.
    :param int n_classes:
        Number of output classes.
    :param int hidden:
        Hidden layer width. Ignored for MLR.
    :param numpy.random.Generator rng:
        Source of randomness.
    """
    if architecture not in ARCHITECTURES:
        raise ConfigError(
            'Unknown model "%s". Expected one of: %s'
            % (architecture, ', '.join(ARCHITECTURES))
        )
    if input_dim < 1 or n_classes < 1:
        raise ShapeError(
            'Model dimensions must be positive',
            actual=(input_dim, n_classes),
        )

    if architecture == MLR:
        arrays = [_glorot(rng, input_dim, n_classes), np.zeros(n_classes)]
    else:
        if hidden is None or hidden < 1:
            raise ShapeError('Hidden width must be positive', actual=hidden)
        arrays = [
            _glorot(rng, input_dim, hidden),
            np.zeros(hidden),
            _glorot(rng, hidden, n_classes),
            np.zeros(n_classes),
        ]

    return ComponentizedModel.from_arrays(
        arrays, architecture=architecture, roles=LAYOUTS[architecture]
    ).validate()
