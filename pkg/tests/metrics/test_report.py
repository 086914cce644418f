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

import json

import pytest

from fedmcsa.errors import DataError
from fedmcsa.metrics import (
    ROUND_COLUMNS,
    MetricsSeries,
    RoundMetrics,
    run_id,
    summarize_repeats,
    summary,
    write_repeats_json,
    write_round_csv,
    write_summary_json,
)

from ..util.builders import small_config


def _series(cfg, accuracies):
    rounds = tuple(
        RoundMetrics(i + 1, (acc - 0.1, acc + 0.1), acc, acc, 2.0 - acc,
                     12.345)
        for i, acc in enumerate(accuracies)
    )
    return MetricsSeries(cfg, rounds, ())


def test_run_id_is_stable():
    assert run_id(small_config()) == run_id(small_config())
    assert len(run_id(small_config())) == 12


def test_run_id_tracks_results_only():
    base = run_id(small_config())
    assert run_id(small_config(threads=4, out='elsewhere')) == base
    assert run_id(small_config(timings=False)) == base
    assert run_id(small_config(sigma=10.0)) != base
    assert run_id(small_config(seed=1)) != base


def test_round_csv(tmpdir):
    path = str(tmpdir.join('metrics.csv'))
    write_round_csv(_series(small_config(), [0.5, 0.75]), path)
    lines = tmpdir.join('metrics.csv').read().splitlines()
    assert lines == [
        ','.join(ROUND_COLUMNS),
        '1,1.5000,0.5000,0.4000,0.6000,12.3',
        '2,1.2500,0.7500,0.6500,0.8500,12.3',
    ]


def test_round_csv_without_timings(tmpdir):
    path = str(tmpdir.join('metrics.csv'))
    write_round_csv(_series(small_config(timings=False), [0.5]), path)
    assert tmpdir.join('metrics.csv').read().splitlines()[1].endswith(',0.0')


def test_round_csv_unwritable(tmpdir):
    with pytest.raises(DataError):
        write_round_csv(_series(small_config(), [0.5]),
                        str(tmpdir.join('missing', 'metrics.csv')))


def test_summary(tmpdir):
    cfg = small_config()
    series = _series(cfg, [0.5, 0.9, 0.8])
    record = summary(series)
    assert record['run_id'] == run_id(cfg)
    assert record['rounds'] == 3
    assert record['bmta'] == 0.9
    assert record['bmta_pct'] == 90.0
    assert record['bmta_round'] == 2
    assert record['final_mean_test_acc'] == 0.8
    assert record['final_client_accuracies'] == [0.7, 0.9]
    assert record['config']['algorithm'] == 'fedmcsa'

    path = tmpdir.join('summary.json')
    write_summary_json(series, str(path))
    assert json.loads(path.read()) == json.loads(json.dumps(record))


def test_repeats(tmpdir):
    runs = [
        _series(small_config(seed=0), [0.5, 0.6]),
        _series(small_config(seed=1), [0.8]),
    ]
    record = summarize_repeats(runs)
    assert record['algorithm'] == 'fedmcsa'
    assert record['seeds'] == [0, 1]
    assert record['bmta'] == [0.6, 0.8]
    assert record['bmta_mean_pct'] == 70.0
    assert record['bmta_std_pct'] == 10.0

    path = tmpdir.join('repeats.json')
    write_repeats_json(runs, str(path))
    assert json.loads(path.read())['bmta_mean_pct'] == 70.0


def test_repeats_empty():
    with pytest.raises(ValueError):
        summarize_repeats([])
