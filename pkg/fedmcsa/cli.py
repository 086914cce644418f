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

"""Command line interface.

::

    fedmcsa run --algorithm fedmcsa --dataset synthetic --rounds 100
    fedmcsa compare --algorithms fedavg,fedmcsa --rounds 100 --seed 7
    fedmcsa sweep --sigma 0,10,30,50,70
    fedmcsa ablate --dataset synthetic
    fedmcsa gen-data synthetic --clients 100 --seed 1

Every run writes ``config.txt``, ``metrics.csv`` and ``summary.json`` into
its own directory under ``--out``. Exit status is 0 on success, 2 for
configuration errors, 3 for data errors and 4 when training diverges.
"""
from __future__ import absolute_import, unicode_literals, print_function

import argparse
import csv
import logging
import os
import sys

from . import __version__
from .aggregate import write_attention_csv
from .config import FIELDS, Loader, RunConfig, dumps
from .data import build_federation, dump_federation
from .engine import algorithm_names, run_experiment
from .errors import DataError, FedError
from .metrics import (
    ROUND_COLUMNS,
    run_id,
    summarize_repeats,
    write_repeats_json,
    write_round_csv,
    write_summary_json,
)
from .metrics.report import round_rows

__all__ = ['main', 'build_parser', 'resolve_config']

logger = logging.getLogger(__name__)

LOG_FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'

DATA_DIR_ENV = 'FEDMCSA_DATA_DIR'

#: (flag, field, type, help) for every configuration flag.
FLAGS = [
    ('--algorithm', 'algorithm', str,
     'algorithm to run: ' + ', '.join(algorithm_names())),
    ('--dataset', 'dataset', str, 'synthetic, mnist, fmnist or cifar10'),
    ('--model', 'model', str, 'mlr or dnn'),
    ('--clients', 'clients', int, 'number of clients N'),
    ('--rounds', 'rounds', int, 'communication rounds T'),
    ('--clients-per-round', 'clients_per_round', int,
     'clients sampled per round S'),
    ('--local-epochs', 'local_epochs', int, 'local iterations R'),
    ('--batch-size', 'batch_size', int, 'mini-batch size'),
    ('--eta', 'eta', float, 'learning rate'),
    ('--lambda', 'lam', float, 'proximal strength'),
    ('--sigma', 'sigma', float, 'attention scale'),
    ('--mu', 'mu', float, 'FedProx proximal strength'),
    ('--pfedme-steps', 'pfedme_steps', int, 'pFedMe inner steps K'),
    ('--personal-eta', 'personal_eta', float,
     'pFedMe personal learning rate'),
    ('--self-weight', 'self_weight', float, 'HeurFedAMP self weight'),
    ('--l2', 'l2', float, 'weight decay on weight matrices'),
    ('--hidden', 'hidden', int, 'DNN hidden width'),
    ('--alpha', 'alpha', float, 'synthetic model heterogeneity'),
    ('--beta', 'beta', float, 'synthetic feature heterogeneity'),
    ('--classes-per-client', 'classes_per_client', int,
     'labels per client for image datasets'),
    ('--size-min', 'size_min', int, 'smallest client size'),
    ('--size-max', 'size_max', int, 'largest client size'),
    ('--seed', 'seed', int, 'random seed'),
    ('--repeats', 'repeats', int, 'runs with consecutive seeds'),
    ('--threads', 'threads', int, 'worker threads for client updates'),
    ('--data-dir', 'data_dir', str,
     'dataset directory (default: $%s)' % DATA_DIR_ENV),
    ('--data-file', 'data_file', str, 'federation exported by gen-data'),
    ('--out', 'out', str, 'output directory'),
]

SWITCHES = [
    ('--all-clients-train', 'all_clients_train', True,
     'unsampled clients also train every round'),
    ('--sample-weighted', 'sample_weighted', True,
     'weight averages by training set size'),
    ('--dump-attention', 'dump_attention', True,
     'write attention weights to attention.csv'),
    ('--no-timings', 'timings', False,
     'write 0 for durations so metrics.csv is reproducible byte for byte'),
]

ABLATIONS = [
    ('fedmcsa', None),
    ('fedmcsa-minus-mcsa', 'fedmcsa'),
    ('fedavg-plus-mcsa', 'fedavg'),
    ('pfedme-plus-mcsa', 'pfedme-pm'),
]


def _list_of(kind):
    def parse(text):
        try:
            return [kind(item) for item in text.split(',') if item.strip()]
        except ValueError:
            raise argparse.ArgumentTypeError('invalid list %r' % text)
    return parse


def _add_config_flags(parser, skip=()):
    parser.add_argument('--config', help='configuration file')
    for flag, field, kind, text in FLAGS:
        if field not in skip:
            parser.add_argument(flag, dest=field, type=kind, help=text)
    for flag, field, value, text in SWITCHES:
        parser.add_argument(flag, dest=field, action='store_const',
                            const=value, help=text)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        '--log-level', default=argparse.SUPPRESS,
        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'],
    )

    parser = argparse.ArgumentParser(
        prog='fedmcsa', parents=[common],
        description='Personalized federated learning experiments.',
    )
    parser.add_argument('--version', action='version',
                        version='%(prog)s ' + __version__)
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True

    run = commands.add_parser('run', parents=[common],
                              help='run one algorithm')
    _add_config_flags(run)

    compare = commands.add_parser('compare', parents=[common],
                                  help='run several algorithms')
    compare.add_argument('--algorithms', required=True, type=_list_of(str),
                         help='comma-separated algorithm names')
    _add_config_flags(compare, skip=('algorithm',))

    sweep = commands.add_parser('sweep', parents=[common],
                                help='grid over sigma and lambda')
    sweep.add_argument('--sigma', dest='sigmas', type=_list_of(float),
                       help='comma-separated attention scales')
    sweep.add_argument('--lambda', dest='lams', type=_list_of(float),
                       help='comma-separated proximal strengths')
    _add_config_flags(sweep, skip=('sigma', 'lam'))

    ablate = commands.add_parser('ablate', parents=[common],
                                 help='run the attention ablations')
    _add_config_flags(ablate, skip=('algorithm',))

    gen = commands.add_parser('gen-data', parents=[common],
                              help='export a federation')
    gen.add_argument('dataset', help='synthetic, mnist, fmnist or cifar10')
    gen.add_argument('--file', help='output path')
    _add_config_flags(gen, skip=('dataset', 'data_file'))
    return parser


def _file_values(args):
    if not getattr(args, 'config', None):
        return {}
    return Loader(fields=FIELDS).load(args.config)


def resolve_config(args, file_values=None, **overrides):
    """Merge defaults, the config file, flags and ``overrides``.

    ``$FEDMCSA_DATA_DIR`` is used when no data directory is set otherwise.
    """
    values = dict(_file_values(args) if file_values is None
                  else file_values)
    for field in FIELDS:
        value = getattr(args, field, None)
        if value is not None:
            values[field] = value
    values.update(overrides)
    if not values.get('data_dir') and os.environ.get(DATA_DIR_ENV):
        values['data_dir'] = os.environ[DATA_DIR_ENV]
    return RunConfig.create(**values)


def _makedirs(path):
    try:
        if not os.path.isdir(path):
            os.makedirs(path)
    except OSError as e:
        raise DataError('Cannot create directory "%s": %s' % (path, e))
    return path


class Workbench(object):
    """Runs configurations and writes their outputs under one directory.

    Federations are cached per data setting and seed so that every
    algorithm of a comparison sees the same clients.
    """

    __slots__ = ('out', '_federations')

    def __init__(self, out):
        self.out = _makedirs(out)
        self._federations = {}

    def federation(self, cfg):
        key = (cfg.dataset, cfg.data_file, cfg.data_dir, cfg.clients,
               cfg.alpha, cfg.beta, cfg.classes_per_client, cfg.size_min,
               cfg.size_max, cfg.seed)
        if key not in self._federations:
            self._federations[key] = build_federation(cfg)
        return self._federations[key]

    def run_once(self, cfg):
        """Run one configuration and write its run directory."""
        run = run_id(cfg)
        directory = _makedirs(
            os.path.join(self.out, '%s-%s' % (cfg.algorithm, run))
        )
        with open(os.path.join(directory, 'config.txt'), 'w') as f:
            f.write(dumps(cfg, header='fedmcsa %s, run %s'
                          % (__version__, run)))

        attention = None
        on_round = None
        if cfg.dump_attention:
            attention = open(os.path.join(directory, 'attention.csv'), 'w')
            writer = csv.writer(attention, lineterminator='\n')
            writer.writerow(['round', 'layer', 'i', 'k', 'psi'])

            def on_round(result):
                if result.attention is not None:
                    write_attention_csv(writer, result.metrics.round_index,
                                        result.attention, result.sampled)
        try:
            series = run_experiment(cfg, self.federation(cfg), on_round)
        finally:
            if attention is not None:
                attention.close()

        write_round_csv(series, os.path.join(directory, 'metrics.csv'))
        write_summary_json(series, os.path.join(directory, 'summary.json'),
                           run)
        return series

    def run(self, cfg):
        """Run every repeat of ``cfg``, with seeds ``seed, seed + 1, ...``.
        """
        all_series = [
            self.run_once(cfg.replace(seed=cfg.seed + r, repeats=1))
            for r in range(cfg.repeats)
        ]
        if cfg.repeats > 1:
            write_repeats_json(all_series, os.path.join(
                self.out, '%s-%s-repeats.json' % (cfg.algorithm, run_id(cfg))
            ))
        return all_series


def _mean_bmta(all_series):
    return summarize_repeats(all_series)['bmta_mean_pct']


def _write_csv(path, header, rows):
    with open(path, 'w') as f:
        writer = csv.writer(f, lineterminator='\n')
        writer.writerow(header)
        writer.writerows(rows)
    logger.info('Wrote %s', path)


def cmd_run(args):
    cfg = resolve_config(args)
    all_series = Workbench(cfg.out).run(cfg)
    summary = summarize_repeats(all_series)
    logger.info('%s: BMTA %.2f%% (std %.2f) over %d run(s)',
                cfg.algorithm, summary['bmta_mean_pct'],
                summary['bmta_std_pct'], len(all_series))


def cmd_compare(args):
    file_values = _file_values(args)
    configs = [resolve_config(args, file_values, algorithm=name)
               for name in args.algorithms]
    bench = Workbench(configs[0].out)

    rows = []
    for cfg in configs:
        for series in bench.run(cfg):
            rows.extend([cfg.algorithm, series.config.seed] + row
                        for row in round_rows(series, cfg.timings))
    _write_csv(os.path.join(bench.out, 'comparison.csv'),
               ('algorithm', 'seed') + ROUND_COLUMNS, rows)


def cmd_sweep(args):
    file_values = dict(_file_values(args))
    file_sigmas = _as_list(file_values.pop('sigma', None))
    file_lams = _as_list(file_values.pop('lam', None))
    sigmas = args.sigmas or file_sigmas
    lams = args.lams or file_lams

    rows = []
    bench = None
    for sigma in sigmas or [None]:
        for lam in lams or [None]:
            cfg = resolve_config(args, file_values, sigma=sigma, lam=lam)
            bench = bench or Workbench(cfg.out)
            all_series = bench.run(cfg)
            summary = summarize_repeats(all_series)
            rows.append([cfg.sigma, cfg.lam, summary['bmta_mean_pct'],
                         summary['bmta_std_pct']])
    _write_csv(os.path.join(bench.out, 'sweep.csv'),
               ('sigma', 'lambda', 'bmta_pct', 'bmta_std_pct'), rows)


def _as_list(value):
    if value is None:
        return None
    if isinstance(value, (tuple, list)):
        return list(value)
    return [value]


def cmd_ablate(args):
    file_values = _file_values(args)
    names = [name for name, _ in ABLATIONS]
    names += [ref for _, ref in ABLATIONS if ref and ref not in names]

    bench = None
    bmta = {}
    for name in names:
        cfg = resolve_config(args, file_values, algorithm=name)
        bench = bench or Workbench(cfg.out)
        bmta[name] = _mean_bmta(bench.run(cfg))

    rows = []
    for variant, reference in ABLATIONS:
        if reference is None:
            rows.append([variant, '', bmta[variant], '', ''])
        else:
            rows.append([variant, reference, bmta[variant], bmta[reference],
                         round(bmta[variant] - bmta[reference], 2)])
    _write_csv(os.path.join(bench.out, 'ablation.csv'),
               ('variant', 'reference', 'bmta_pct', 'reference_bmta_pct',
                'delta_pct'), rows)


def cmd_gen_data(args):
    cfg = resolve_config(args, dataset=args.dataset)
    federation = build_federation(cfg)
    path = args.file or os.path.join(
        _makedirs(cfg.out), '%s-%d.feds' % (cfg.dataset, cfg.seed)
    )
    dump_federation(federation, path)


COMMANDS = {
    'run': cmd_run,
    'compare': cmd_compare,
    'sweep': cmd_sweep,
    'ablate': cmd_ablate,
    'gen-data': cmd_gen_data,
}


def main(argv=None):
    """Entry point of the ``fedmcsa`` command.

    :returns:
        The process exit status.
    """
    args = build_parser().parse_args(argv)
    level = getattr(args, 'log_level', 'INFO')
    logging.basicConfig(level=getattr(logging, level), format=LOG_FORMAT)
    try:
        COMMANDS[args.command](args)
    except FedError as e:
        logger.debug('Command failed', exc_info=True)
        print('fedmcsa: error: %s' % e, file=sys.stderr)
        return e.exit_code
    except (IOError, OSError) as e:
        print('fedmcsa: error: %s' % e, file=sys.stderr)
        return DataError.exit_code
    return 0


if __name__ == '__main__':
    sys.exit(main())
