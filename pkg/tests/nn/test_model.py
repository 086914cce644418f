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

import numpy as np
import pytest

from fedmcsa.errors import ConfigError, ShapeError
from fedmcsa.nn import (
    BIAS,
    WEIGHT,
    Component,
    ComponentizedModel,
    Gradient,
    init_model,
)

from ..util.builders import mmodel, rmodel


@pytest.mark.parametrize('architecture, shapes', [
    ('mlr', [(60, 10), (10,)]),
    ('dnn', [(60, 20), (20,), (20, 10), (10,)]),
])
def test_init_model_layout(architecture, shapes):
    model = init_model(architecture, 60, 10, 20, np.random.default_rng(0))
    assert model.architecture == architecture
    assert list(model.shapes) == shapes
    assert model.input_dim == 60
    assert model.n_classes == 10


def test_init_model_glorot_range_and_zero_biases():
    model = init_model('dnn', 30, 10, 20, np.random.default_rng(3))
    w1, b1, w2, b2 = model.components
    assert np.all(np.abs(w1.values) <= np.sqrt(6.0 / 50))
    assert np.all(np.abs(w2.values) <= np.sqrt(6.0 / 30))
    assert not b1.values.any()
    assert not b2.values.any()
    assert [c.role for c in model.components] == [WEIGHT, BIAS, WEIGHT, BIAS]


def test_init_model_is_seeded():
    a = rmodel('dnn', seed=5)
    b = rmodel('dnn', seed=5)
    for x, y in zip(a.values, b.values):
        assert np.array_equal(x, y)


def test_init_model_unknown_architecture():
    with pytest.raises(ConfigError) as exc_info:
        init_model('cnn', 4, 2, 3, np.random.default_rng(0))
    assert 'Unknown model "cnn"' in str(exc_info.value)


@pytest.mark.parametrize('input_dim, n_classes, hidden', [
    (0, 2, 3),
    (4, 0, 3),
])
def test_init_model_bad_dimensions(input_dim, n_classes, hidden):
    with pytest.raises(ShapeError):
        init_model('mlr', input_dim, n_classes, hidden,
                   np.random.default_rng(0))


def test_component_is_read_only():
    component = Component([1.0, 2.0], (2,), BIAS)
    with pytest.raises(ValueError):
        component.values[0] = 3.0


def test_component_must_fill_shape():
    with pytest.raises(ShapeError) as exc_info:
        Component([1.0, 2.0, 3.0], (2, 2), WEIGHT)
    assert 'expected (2, 2), got 3' in str(exc_info.value)


def test_validate_rejects_broken_chain():
    model = ComponentizedModel.from_arrays(
        [np.zeros((4, 3)), np.zeros(3), np.zeros((5, 2)), np.zeros(2)],
        architecture='dnn',
    )
    with pytest.raises(ShapeError) as exc_info:
        model.validate()
    assert 'fan-in' in str(exc_info.value)


def test_validate_rejects_wrong_component_count():
    model = ComponentizedModel.from_arrays(
        [np.zeros((4, 3)), np.zeros(3), np.zeros((3, 2))],
        architecture='dnn',
    )
    with pytest.raises(ShapeError):
        model.validate()


def test_validate_rejects_non_finite():
    model = mmodel(np.array([[np.nan, 1.0]]), np.zeros(2))
    assert not model.is_finite()
    with pytest.raises(ShapeError):
        model.validate()


def test_flatten_and_with_values():
    model = mmodel(np.ones((2, 2)), np.array([5.0, 6.0]))
    assert list(model.flatten()) == [1.0, 1.0, 1.0, 1.0, 5.0, 6.0]

    changed = model.with_values([np.zeros(4), np.array([1.0, 2.0])])
    assert changed.shapes == model.shapes
    assert list(changed.flatten()) == [0.0, 0.0, 0.0, 0.0, 1.0, 2.0]
    # The original is untouched.
    assert list(model.values[1]) == [5.0, 6.0]


def test_with_values_wrong_count():
    model = mmodel(np.ones(2))
    with pytest.raises(ShapeError):
        model.with_values([np.ones(2), np.ones(2)])


def test_check_congruent():
    a = mmodel(np.ones((2, 3)), np.ones(3))
    b = mmodel(np.ones((3, 2)), np.ones(2))
    a.check_congruent(a)
    with pytest.raises(ShapeError):
        a.check_congruent(b)


def test_combine():
    a = mmodel(np.array([1.0, 2.0]))
    b = mmodel(np.array([10.0, 20.0]))
    assert list(a.combine(b, 0.5).values[0]) == [6.0, 12.0]


def test_gradient_zeros_like_and_combine():
    model = rmodel('dnn')
    zero = Gradient.zeros_like(model)
    assert zero.shapes == model.shapes
    assert all(not v.any() for v in zero.values)

    one = Gradient([np.ones(c.size) for c in model.components], model.shapes)
    total = zero.combine(one, 2.0)
    assert all(np.all(v == 2.0) for v in total.values)

    with pytest.raises(ShapeError):
        one.combine(Gradient([np.ones(1)], [(1,)]), 1.0)


@pytest.mark.parametrize('architecture', ['mlr', 'dnn'])
def test_replace_keeps_components(architecture):
    model = rmodel(architecture)
    renamed = model._replace(architecture=None)
    assert renamed.architecture is None
    assert renamed.components is model.components
    assert renamed.n_components == model.n_components
