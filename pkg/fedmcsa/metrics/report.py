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

from collections import OrderedDict
import csv
import hashlib
import json
import logging

import numpy as np

from ..errors import DataError

__all__ = [
    'ROUND_COLUMNS',
    'run_id',
    'round_rows',
    'write_round_csv',
    'summary',
    'write_summary_json',
    'summarize_repeats',
    'write_repeats_json',
]

logger = logging.getLogger(__name__)

ROUND_COLUMNS = (
    'round',
    'mean_train_loss',
    'mean_test_acc',
    'min_client_acc',
    'max_client_acc',
    'duration_ms',
)

# Settings that cannot change the metrics of a run.
_UNTRACKED = ('threads', 'out', 'dump_attention', 'timings')


def _acc(value):
    return '%.4f' % value


def _pct(value):
    return round(100.0 * value, 2)


def run_id(config):
    """Short stable identifier of a configuration.

    The first 12 hex digits of the SHA-1 of the canonical JSON of every
    setting that can affect the results.
    """
    values = dict(config.to_dict())
    for name in _UNTRACKED:
        values.pop(name, None)
    canonical = json.dumps(values, sort_keys=True, separators=(',', ':'))
    return hashlib.sha1(canonical.encode('utf-8')).hexdigest()[:12]


def round_rows(series, timings=True):
    """Per-round rows with the :py:data:`ROUND_COLUMNS` formatting."""
    for metrics in series.rounds:
        yield [
            metrics.round_index,
            '%.4f' % metrics.mean_train_loss,
            _acc(metrics.mean_test_acc),
            _acc(metrics.min_client_acc),
            _acc(metrics.max_client_acc),
            '%.1f' % (metrics.duration_ms if timings else 0.0),
        ]


def _open_for_write(path):
    try:
        return open(path, 'w')
    except (IOError, OSError) as e:
        raise DataError('Cannot write "%s": %s' % (path, e))


def write_round_csv(series, path):
    """Write one row per round to ``path``.

    ``duration_ms`` is written as 0 when the run was configured without
    timings, which makes the file a pure function of the configuration.
    """
    timings = getattr(series.config, 'timings', True)
    with _open_for_write(path) as f:
        writer = csv.writer(f, lineterminator='\n')
        writer.writerow(ROUND_COLUMNS)
        writer.writerows(round_rows(series, timings))
    logger.info('Wrote %s', path)


def summary(series, run=None):
    """The summary record of one run as an ordered mapping."""
    best, best_round = series.bmta, series.bmta_round
    last = series.rounds[-1]
    return OrderedDict([
        ('run_id', run or run_id(series.config)),
        ('config', series.config.to_dict()),
        ('rounds', series.n_rounds),
        ('bmta', round(best, 4)),
        ('bmta_pct', _pct(best)),
        ('bmta_round', best_round),
        ('final_mean_test_acc', round(last.mean_test_acc, 4)),
        ('final_weighted_test_acc', round(last.weighted_test_acc, 4)),
        ('final_mean_train_loss', round(last.mean_train_loss, 4)),
        ('final_client_accuracies',
         [round(a, 4) for a in last.client_accuracies]),
    ])


def write_summary_json(series, path, run=None):
    """Write :py:func:`summary` to ``path`` as JSON."""
    with _open_for_write(path) as f:
        json.dump(summary(series, run), f, indent=2)
        f.write('\n')
    logger.info('Wrote %s', path)


def summarize_repeats(all_series):
    """Mean and population standard deviation of BMTA over repeated runs.
    """
    if not all_series:
        raise ValueError('No runs to summarize')
    values = np.array([s.bmta for s in all_series])
    return OrderedDict([
        ('algorithm', all_series[0].config.algorithm),
        ('seeds', [s.config.seed for s in all_series]),
        ('bmta', [round(v, 4) for v in values]),
        ('bmta_mean_pct', _pct(values.mean())),
        ('bmta_std_pct', _pct(values.std())),
    ])


def write_repeats_json(all_series, path):
    with _open_for_write(path) as f:
        json.dump(summarize_repeats(all_series), f, indent=2)
        f.write('\n')
    logger.info('Wrote %s', path)
