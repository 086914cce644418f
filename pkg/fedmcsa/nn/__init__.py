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
A small dense numerical core: multinomial logistic regression (MLR) and a
one-hidden-layer ReLU network (DNN), softmax cross-entropy with analytic
gradients, and plain SGD.

Models
------

.. autoclass:: ComponentizedModel
    :members:

.. autoclass:: Component
    :members:

.. autoclass:: Gradient
    :members:

.. autofunction:: init_model

Operations
----------

.. autofunction:: forward

.. autofunction:: predict

.. autofunction:: loss_and_grad

.. autofunction:: cross_entropy

.. autofunction:: sgd_step

.. autofunction:: accuracy
"""
from __future__ import absolute_import, unicode_literals, print_function

from .model import (
    MLR,
    DNN,
    WEIGHT,
    BIAS,
    Component,
    ComponentizedModel,
    Gradient,
    init_model,
)
from .ops import (
    softmax,
    forward,
    predict,
    loss_and_grad,
    cross_entropy,
    sgd_step,
    accuracy,
)

__all__ = [
    # Models
    'MLR',
    'DNN',
    'WEIGHT',
    'BIAS',
    'Component',
    'ComponentizedModel',
    'Gradient',
    'init_model',

    # Operations
    'softmax',
    'forward',
    'predict',
    'loss_and_grad',
    'cross_entropy',
    'sgd_step',
    'accuracy',
]
