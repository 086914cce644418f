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

from fedmcsa.errors import InvalidBatchError, ShapeError
from fedmcsa.nn import (
    Gradient,
    accuracy,
    cross_entropy,
    forward,
    init_model,
    loss_and_grad,
    predict,
    sgd_step,
)

from ..util.builders import mmodel, rmodel


def zero_mlr(width=4, n_classes=10):
    return mmodel(np.zeros((width, n_classes)), np.zeros(n_classes))


def test_zero_mlr_is_uniform(rng):
    probs = forward(zero_mlr(), rng.standard_normal((7, 4)))
    assert probs.shape == (7, 10)
    assert np.allclose(probs, 0.1)


def test_dnn_with_zero_hidden_weights_ignores_input(rng):
    model = rmodel('dnn', input_dim=6, n_classes=4, hidden=5, seed=2)
    values = list(model.values)
    values[0] = np.zeros_like(values[0])
    model = model.with_values(values)

    probs = forward(model, rng.standard_normal((5, 6)))
    assert np.allclose(probs, probs[0])


@pytest.mark.parametrize('architecture', ['mlr', 'dnn'])
def test_forward_rows_sum_to_one(architecture, rng):
    model = rmodel(architecture, input_dim=8, n_classes=5, hidden=6, seed=1)
    probs = forward(model, 10 * rng.standard_normal((20, 8)))
    assert np.all(probs >= 0) and np.all(probs <= 1)
    assert np.allclose(probs.sum(axis=1), 1.0, atol=1e-9, rtol=0)


def test_forward_large_logits_stay_finite():
    model = mmodel(np.array([[1000.0, -1000.0]]), np.zeros(2))
    probs = forward(model, np.array([[5.0]]))
    assert np.all(np.isfinite(probs))
    assert probs[0, 0] == pytest.approx(1.0)


def test_forward_width_mismatch():
    with pytest.raises(ShapeError) as exc_info:
        forward(zero_mlr(width=60), np.zeros((3, 784)))
    assert 'expected 60, got 784' in str(exc_info.value)


@pytest.mark.parametrize('batch', [np.zeros((0, 4)), np.zeros(4)])
def test_forward_bad_batch(batch):
    with pytest.raises(InvalidBatchError):
        forward(zero_mlr(), batch)


def test_zero_mlr_loss_is_log_classes(rng):
    loss, grad = loss_and_grad(
        zero_mlr(), rng.standard_normal((5, 4)), np.arange(5), l2=0.0
    )
    assert loss == pytest.approx(np.log(10), abs=1e-12)
    assert isinstance(grad, Gradient)
    assert grad.shapes == ((4, 10), (10,))


def test_l2_penalty_is_additive(rng):
    model = rmodel('dnn', seed=4)
    x, y = rng.standard_normal((6, 6)), rng.integers(0, 4, 6)
    penalty = sum(np.dot(c.values, c.values) for c in model.components
                  if c.role == 'weight')

    base, _ = loss_and_grad(model, x, y, l2=0.1)
    doubled, _ = loss_and_grad(model, x, y, l2=0.2)
    assert doubled - base == pytest.approx(0.05 * penalty, rel=1e-12)


def test_l2_leaves_biases_alone(rng):
    model = rmodel('mlr', seed=4)
    x, y = rng.standard_normal((6, 6)), rng.integers(0, 4, 6)
    _, plain = loss_and_grad(model, x, y, l2=0.0)
    _, decayed = loss_and_grad(model, x, y, l2=0.5)
    assert np.array_equal(plain.values[1], decayed.values[1])
    assert np.allclose(decayed.values[0] - plain.values[0],
                       0.5 * model.values[0])


def _numeric_gradient(model, x, y, l2, eps=1e-5):
    grads = []
    for index, values in enumerate(model.values):
        grad = np.zeros(values.size)
        for j in range(values.size):
            shifted = []
            for sign in (1.0, -1.0):
                bumped = values.copy()
                bumped[j] += sign * eps
                new = list(model.values)
                new[index] = bumped
                shifted.append(cross_entropy(model.with_values(new), x, y, l2))
            grad[j] = (shifted[0] - shifted[1]) / (2 * eps)
        grads.append(grad)
    return grads


@pytest.mark.parametrize('architecture', ['mlr', 'dnn'])
@pytest.mark.parametrize('seed', range(20))
def test_gradient_matches_finite_differences(architecture, seed):
    rng = np.random.default_rng(seed)
    width = int(rng.integers(2, 8))
    n_classes = int(rng.integers(2, 5))
    model = init_model(architecture, width, n_classes, 4, rng)
    # Push biases and weights away from zero so ReLU kinks are unlikely.
    model = model.with_values(
        v + 0.3 * rng.standard_normal(v.size) for v in model.values
    )
    x = rng.standard_normal((5, width))
    y = rng.integers(0, n_classes, 5)

    _, grad = loss_and_grad(model, x, y, l2=0.01)
    numeric = _numeric_gradient(model, x, y, 0.01)
    for analytic, approx in zip(grad.values, numeric):
        scale = np.maximum(np.maximum(np.abs(analytic), np.abs(approx)), 1e-3)
        assert np.max(np.abs(analytic - approx) / scale) < 1e-4


def test_cross_entropy_matches_loss_and_grad(rng):
    model = rmodel('dnn', seed=9)
    x, y = rng.standard_normal((7, 6)), rng.integers(0, 4, 7)
    loss, _ = loss_and_grad(model, x, y, l2=0.3)
    assert cross_entropy(model, x, y, l2=0.3) == pytest.approx(loss,
                                                              rel=1e-12)


@pytest.mark.parametrize('labels', [[0, 10], [-1, 0]])
def test_labels_out_of_range(labels):
    with pytest.raises(InvalidBatchError):
        loss_and_grad(zero_mlr(), np.zeros((2, 4)), np.array(labels))


def test_empty_batch():
    with pytest.raises(InvalidBatchError):
        loss_and_grad(zero_mlr(), np.zeros((0, 4)), np.zeros(0, dtype=int))


def test_sgd_step_arithmetic():
    model = mmodel(np.array([1.0, 1.0]))
    grad = Gradient([np.array([0.5, -0.5])], model.shapes)
    stepped = sgd_step(model, grad, 0.02)
    assert np.allclose(stepped.values[0], [0.99, 1.01], atol=1e-15)


def test_sgd_step_trivial_cases():
    model = rmodel('dnn')
    zero = Gradient.zeros_like(model)
    one = Gradient([np.ones(c.size) for c in model.components], model.shapes)
    for stepped in (sgd_step(model, zero, 0.1), sgd_step(model, one, 0.0)):
        for a, b in zip(stepped.values, model.values):
            assert np.array_equal(a, b)


def test_sgd_steps_compose(rng):
    model = rmodel('mlr', seed=2)
    grad = Gradient([rng.standard_normal(c.size) for c in model.components],
                    model.shapes)
    twice = sgd_step(sgd_step(model, grad, 0.25), grad, 0.5)
    once = sgd_step(model, grad, 0.75)
    for a, b in zip(twice.values, once.values):
        assert np.allclose(a, b, rtol=0, atol=1e-14)


def test_sgd_step_rejects_incongruent_gradient():
    with pytest.raises(ShapeError):
        sgd_step(rmodel('mlr'), Gradient.zeros_like(rmodel('dnn')), 0.1)


def test_accuracy_tie_goes_to_class_zero():
    labels = np.array([0, 0, 0, 1, 1, 1, 1, 2, 2, 2])
    assert accuracy(zero_mlr(n_classes=3), np.zeros((10, 4)), labels) == \
        pytest.approx(0.3)


def test_accuracy_perfect():
    model = mmodel(np.eye(3) * 10, np.zeros(3))
    x = np.eye(3)
    assert accuracy(model, x, np.array([0, 1, 2])) == 1.0


def test_accuracy_matches_per_sample_check(rng):
    model = rmodel('dnn', seed=7)
    x, y = rng.standard_normal((50, 6)), rng.integers(0, 4, 50)
    probs = forward(model, x)
    hits = sum(int(np.argmax(probs[i]) == y[i]) for i in range(50))
    assert accuracy(model, x, y) == hits / 50.0
    assert list(predict(model, x)) == list(np.argmax(probs, axis=1))


def test_accuracy_empty_set():
    with pytest.raises(InvalidBatchError):
        accuracy(zero_mlr(), np.zeros((0, 4)), np.zeros(0, dtype=int))


def test_forward_is_deterministic(rng):
    model = rmodel('dnn', seed=11)
    x = rng.standard_normal((9, 6))
    assert np.array_equal(forward(model, x), forward(model, x))
