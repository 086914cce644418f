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

from fedmcsa.aggregate import CohortMatrix, average_aggregate
from fedmcsa.aggregate.average import normalize_weights
from fedmcsa.errors import ShapeError

from ..util.builders import mmodel, perturbed, rmodel


def test_uniform_mean():
    model = average_aggregate([mmodel([0.0, 4.0]), mmodel([2.0, 0.0])])
    assert model.flatten().tolist() == [1.0, 2.0]


def test_sample_weighted_mean():
    model = average_aggregate([mmodel([0.0]), mmodel([2.0])], (1, 3))
    assert model.flatten().tolist() == [1.5]


def test_keeps_layout():
    base = rmodel('dnn')
    cohort = CohortMatrix([perturbed(base, 0.2, s) for s in range(4)])
    model = average_aggregate(cohort)
    assert model.architecture == 'dnn'
    assert model.shapes == base.shapes
    assert np.allclose(model.flatten(), cohort.flattened().mean(axis=0))


def test_single_model():
    model = rmodel('mlr')
    averaged = average_aggregate([model])
    for a, b in zip(averaged.values, model.values):
        assert np.array_equal(a, b)


@pytest.mark.parametrize('weights, exc', [
    ((1.0,), ShapeError),
    ((1.0, -1.0), ValueError),
    ((0.0, 0.0), ValueError),
])
def test_invalid_weights(weights, exc):
    with pytest.raises(exc):
        normalize_weights(weights, 2)


def test_normalize_weights():
    assert normalize_weights([1, 3], 2).tolist() == [0.25, 0.75]
