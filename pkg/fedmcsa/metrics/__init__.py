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
Evaluation and reporting.

The mean test accuracy of a round is the unweighted average of every
client's test accuracy. The best mean test accuracy (BMTA) of a run is the
highest such mean over all rounds.

.. autoclass:: RoundMetrics
    :members:

.. autoclass:: MetricsSeries
    :members:

.. autofunction:: evaluate_cohort

.. autofunction:: bmta

Output files
------------

.. autofunction:: write_round_csv

.. autofunction:: write_summary_json

.. autofunction:: summarize_repeats

.. autofunction:: run_id
"""
from __future__ import absolute_import, unicode_literals, print_function

from .report import (
    ROUND_COLUMNS,
    run_id,
    summary,
    write_round_csv,
    write_summary_json,
    summarize_repeats,
    write_repeats_json,
)
from .series import (
    RoundMetrics,
    MetricsSeries,
    evaluate_client,
    evaluate_cohort,
    bmta,
)

__all__ = [
    'RoundMetrics',
    'MetricsSeries',
    'evaluate_client',
    'evaluate_cohort',
    'bmta',

    # Output files
    'ROUND_COLUMNS',
    'run_id',
    'summary',
    'write_round_csv',
    'write_summary_json',
    'summarize_repeats',
    'write_repeats_json',
]
