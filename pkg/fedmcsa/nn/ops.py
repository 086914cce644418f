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

from .model import Gradient, WEIGHT
from ..errors import InvalidBatchError, ShapeError

__all__ = [
    'softmax',
    'forward',
    'predict',
    'loss_and_grad',
    'cross_entropy',
    'sgd_step',
    'accuracy',
]


def softmax(logits):
    """Row-wise softmax with max-subtraction."""
    shifted = logits - logits.max(axis=1, keepdims=True)
    exp = np.exp(shifted)
    return exp / exp.sum(axis=1, keepdims=True)


def _log_softmax(logits):
    shifted = logits - logits.max(axis=1, keepdims=True)
    return shifted - np.log(np.exp(shifted).sum(axis=1, keepdims=True))


def _layers(model):
    """Pairs of (weight matrix, bias vector) in order."""
    components = model.components
    if len(components) % 2:
        raise ShapeError(
            'Model must alternate weight and bias components',
            actual=len(components),
        )
    return [
        (components[i].tensor, components[i + 1].tensor)
        for i in range(0, len(components), 2)
    ]


def _check_batch(model, batch_x):
    batch_x = np.asarray(batch_x, dtype=np.float64)
    if batch_x.ndim != 2 or batch_x.shape[0] == 0:
        raise InvalidBatchError(
            'Expected a nonempty 2-D batch, got shape %r' % (batch_x.shape,)
        )
    if batch_x.shape[1] != model.input_dim:
        raise ShapeError(
            'Batch feature width does not match model input width',
            expected=model.input_dim,
            actual=batch_x.shape[1],
        )
    return batch_x


def _check_labels(batch_y, n_samples, n_classes):
    batch_y = np.asarray(batch_y)
    if batch_y.shape != (n_samples,):
        raise ShapeError(
            'Label count does not match batch size',
            expected=(n_samples,),
            actual=batch_y.shape,
        )
    if batch_y.size and (batch_y.min() < 0 or batch_y.max() >= n_classes):
        raise InvalidBatchError(
            'Labels must lie in [0, %d), got range [%d, %d]'
            % (n_classes, batch_y.min(), batch_y.max())
        )
    return batch_y.astype(np.intp)


def _logits(layers, batch_x):
    """Forward pass returning the logits and the cached activations."""
    activations = [batch_x]
    pre_activations = []
    out = batch_x
    for index, (weight, bias) in enumerate(layers):
        z = out @ weight + bias
        if index < len(layers) - 1:
            pre_activations.append(z)
            out = np.maximum(z, 0.0)
            activations.append(out)
        else:
            out = z
    return out, activations, pre_activations


def forward(model, batch_x):
    """Class probabilities for every row of ``batch_x``.

    Hidden layers use ReLU; the output layer is a softmax.

    :raises fedmcsa.errors.ShapeError:
        If the feature width does not match the model.
    """
    batch_x = _check_batch(model, batch_x)
    logits, _, _ = _logits(_layers(model), batch_x)
    return softmax(logits)


def predict(model, batch_x):
    """Predicted class of every row; ties go to the lowest class index."""
    batch_x = _check_batch(model, batch_x)
    logits, _, _ = _logits(_layers(model), batch_x)
    return np.argmax(logits, axis=1)


def loss_and_grad(model, batch_x, batch_y, l2=0.0):
    """Mean softmax cross-entropy over the batch and its gradient.

    The loss includes ``(l2 / 2) * sum(||W||^2)`` over weight components;
    biases are not regularized.

    :returns:
        ``(loss, gradient)`` where ``gradient`` is a
        :py:class:`~fedmcsa.nn.model.Gradient` congruent with ``model``.
    :raises fedmcsa.errors.InvalidBatchError:
        If the batch is empty or a label is out of range.
    """
    batch_x = _check_batch(model, batch_x)
    n = batch_x.shape[0]
    batch_y = _check_labels(batch_y, n, model.n_classes)
    layers = _layers(model)

    logits, activations, pre_activations = _logits(layers, batch_x)
    log_probs = _log_softmax(logits)
    rows = np.arange(n)
    loss = -log_probs[rows, batch_y].mean()

    delta = np.exp(log_probs)
    delta[rows, batch_y] -= 1.0
    delta /= n

    grads = []
    for index in range(len(layers) - 1, -1, -1):
        weight, _ = layers[index]
        grads.append(delta.sum(axis=0))
        grads.append(activations[index].T @ delta)
        if index > 0:
            delta = (delta @ weight.T) * (pre_activations[index - 1] > 0)
    grads.reverse()

    if l2:
        for position, component in enumerate(model.components):
            if component.role == WEIGHT:
                loss += 0.5 * l2 * np.dot(component.values, component.values)
                grads[position] = grads[position] + l2 * component.tensor

    return float(loss), Gradient(grads, model.shapes)


def cross_entropy(model, batch_x, batch_y, l2=0.0):
    """The loss of :py:func:`loss_and_grad` without the backward pass."""
    batch_x = _check_batch(model, batch_x)
    batch_y = _check_labels(batch_y, batch_x.shape[0], model.n_classes)
    logits, _, _ = _logits(_layers(model), batch_x)
    loss = -_log_softmax(logits)[np.arange(batch_y.size), batch_y].mean()
    if l2:
        for component in model.components:
            if component.role == WEIGHT:
                loss += 0.5 * l2 * np.dot(component.values, component.values)
    return float(loss)


def sgd_step(model, grad, eta):
    """Return ``model - eta * grad``, componentwise.

    :raises fedmcsa.errors.ShapeError:
        If ``grad`` is not congruent with ``model``.
    """
    if eta < 0:
        raise ValueError('Learning rate must be non-negative, got %r' % eta)
    return model.combine(grad, -eta)


def accuracy(model, test_x, test_y):
    """Fraction of rows whose predicted class matches the label."""
    test_x = np.asarray(test_x, dtype=np.float64)
    if test_x.ndim != 2 or test_x.shape[0] == 0:
        raise InvalidBatchError('Cannot compute accuracy on an empty test set')
    predictions = predict(model, test_x)
    test_y = _check_labels(test_y, test_x.shape[0], model.n_classes)
    return float(np.count_nonzero(predictions == test_y)) / test_y.size
