# -*- coding: utf-8 -*-

import multiprocessing as mp
import numpy as np
import os

import utils.data_loaders
import utils.metrics
import utils.writers

from collections import OrderedDict
from datetime import datetime as dt
from tensorboardX import SummaryWriter
from time import time

from models.peeling import peel_coreness, simple_iterative_labels
from models.sketch import SketchParams, run_sketch
from models.streaming import run_stream

BENCH_MODES = ('sketch', 'stream', 'baseline')
BASELINE_T0 = 4
BASELINE_GROWTH = 2
METERED_COLUMNS = ('median', 'p60', 'p70', 'p80', 'p90', 'max_edges', 'sum_edges', 'runtime_ms')


def _bench_jobs(cfg, graph_name):
    jobs = []
    for mode in cfg.BENCH.MODES:
        if mode not in BENCH_MODES:
            raise ValueError('Unknown bench mode: %s' % mode)
        if mode == 'baseline':
            jobs.append((graph_name, mode, BASELINE_T0, float(BASELINE_GROWTH), cfg.CONST.RNG_SEED))
            continue
        for T in cfg.BENCH.T_LIST:
            for M in cfg.BENCH.M_LIST:
                for run_idx in range(cfg.BENCH.RUNS):
                    jobs.append((graph_name, mode, T, float(M), cfg.CONST.RNG_SEED + run_idx))
    return jobs


def run_bench_job(g, exact, job, sketch_kwargs, min_core):
    """One cell run: labels the graph and measures the error against the exact coreness."""
    graph_name, mode, T, M, seed = job
    start_time = time()
    divergence = None
    if mode == 'baseline':
        labels, _ = simple_iterative_labels(g, T, M)
        max_edges = sum_edges = g.m
    else:
        params = SketchParams(mode='practical', T=T, M=M, seed=seed, **sketch_kwargs)
        if mode == 'sketch':
            labels, stats = run_sketch(g, params)
            max_edges, sum_edges = stats.max_level_edges, stats.sum_level_edges
        else:
            labels, stats, _ = run_stream(g.n, params, g.edges())
            max_edges, sum_edges = stats.extra['peak_edges'], stats.sum_level_edges
            batch_labels, _ = run_sketch(g, params)
            divergence = float(np.count_nonzero(~np.isclose(labels, batch_labels))) / g.n
    runtime_ms = (time() - start_time) * 1000

    report = utils.metrics.error_percentiles(exact, labels, min_core)
    row = OrderedDict([('graph', graph_name), ('mode', mode), ('T', T), ('M', M),
                       ('epsilon', sketch_kwargs['epsilon']), ('seed', seed)])
    row.update(report.percentiles())
    row.update([('max_edges', max_edges), ('sum_edges', sum_edges), ('runtime_ms', runtime_ms)])
    return row, divergence


def _run_bench_job(args):
    return run_bench_job(*args)


def _mean_rows(rows):
    cells = OrderedDict()
    for row in rows:
        key = (row['graph'], row['mode'], row['T'], row['M'])
        if key not in cells:
            cells[key] = (row['epsilon'], OrderedDict((k, utils.metrics.AverageMeter()) for k in METERED_COLUMNS))
        for k, meter in cells[key][1].items():
            meter.update(row[k])

    means = []
    for (graph_name, mode, T, M), (epsilon, meters) in cells.items():
        row = OrderedDict([('graph', graph_name), ('mode', mode), ('T', T), ('M', M), ('epsilon', epsilon),
                           ('seed', 'mean')])
        row.update((k, meter.avg if meter.count else None) for k, meter in meters.items())
        means.append(row)
    return means


def _print_results(means):
    print('============================ BENCH RESULTS ============================')
    print('Graph'.ljust(12), end='\t')
    for column in ('Mode', 'T', 'M') + METERED_COLUMNS:
        print(column, end='\t')
    print()
    for row in means:
        print(str(row['graph'])[:12].ljust(12), end='\t')
        print('%s\t%s\t%g' % (row['mode'], row['T'], row['M']), end='\t')
        for column in METERED_COLUMNS:
            value = row[column]
            print('N/a' if value is None else ('%.4f' % value if column in utils.metrics.PERCENTILE_NAMES else
                                               '%.0f' % value),
                  end='\t')
        print()
    print()


def bench_graphs(cfg):
    sketch_kwargs = {
        'epsilon': cfg.SKETCH.EPSILON,
        'profile': cfg.SKETCH.PROFILE,
        'p0': cfg.SKETCH.P0,
        'max_levels': cfg.SKETCH.MAX_LEVELS,
        'log_base': cfg.CONST.LOG_BASE,
    }

    bench_writer = None
    if cfg.BENCH.TENSORBOARD:
        bench_writer = SummaryWriter(os.path.join(cfg.DIR.OUT_PATH, 'logs', dt.now().isoformat()))

    rows = []
    divergences = []
    failures = []
    pool = mp.Pool(cfg.BENCH.NUM_WORKER) if cfg.BENCH.NUM_WORKER > 1 else None
    try:
        for graph_name in cfg.BENCH.GRAPHS:
            try:
                g = utils.data_loaders.get_graph(cfg, graph_name)
            except (IOError, ValueError) as ex:
                print('[WARN] %s Skip graph %s since it cannot be loaded: %s' % (dt.now(), graph_name, ex))
                failures.append(graph_name)
                continue

            exact = peel_coreness(g)
            jobs = _bench_jobs(cfg, graph_name)
            args = [(g, exact, job, sketch_kwargs, cfg.BENCH.MIN_CORE) for job in jobs]
            results = pool.imap(_run_bench_job, args) if pool is not None else map(_run_bench_job, args)
            for job_idx, (row, divergence) in enumerate(results):
                rows.append(row)
                print('[INFO] %s Bench[%d/%d] Graph = %s Mode = %s T = %s M = %g Seed = %d Median = %s P90 = %s '
                      'MaxEdges = %d SumEdges = %d (%.0f ms)' %
                      (dt.now(), job_idx + 1, len(jobs), graph_name, row['mode'], row['T'], row['M'], row['seed'],
                       row['median'], row['p90'], row['max_edges'], row['sum_edges'], row['runtime_ms']))
                if divergence is not None:
                    divergences.append(OrderedDict([('graph', graph_name), ('T', row['T']), ('M', row['M']),
                                                    ('seed', row['seed']), ('divergence', divergence)]))
                if bench_writer is not None:
                    tag = '%s/%s/T=%s,M=%g' % (graph_name, row['mode'], row['T'], row['M'])
                    step = row['seed'] - cfg.CONST.RNG_SEED
                    for column in ('median', 'p90'):
                        if row[column] is not None:
                            bench_writer.add_scalar('%s/%s' % (tag, column), row[column], step)
                    bench_writer.add_scalar('%s/sum_edges' % tag, row['sum_edges'], step)
                    bench_writer.add_scalar('%s/max_edges' % tag, row['max_edges'], step)
    finally:
        if pool is not None:
            pool.close()
            pool.join()
        if bench_writer is not None:
            bench_writer.close()

    means = _mean_rows(rows)
    _print_results(means)
    if failures:
        print('[WARN] %s %d graph(s) skipped: %s' % (dt.now(), len(failures), ', '.join(failures)))

    report_path = cfg.JOB.OUTPUT or os.path.join(cfg.DIR.OUT_PATH, cfg.BENCH.REPORT_FILE)
    report = utils.writers.emit_report(report_path, rows + means)
    if divergences:
        utils.writers.emit_divergence(os.path.splitext(report_path)[0] + '-divergence.csv', divergences)
    return report
