# -*- coding: utf-8 -*-

import numpy as np
import os

import utils.data_loaders
import utils.metrics
import utils.writers

from datetime import datetime as dt
from time import time

from models.mr_sim import ClusterConfig, run_mr_sketch
from models.peeling import graph_summary, peel_coreness
from models.sampler import rank_uniformity
from models.sketch import SketchParams, run_sketch
from models.streaming import run_stream
from models.turnstile import run_events
from utils.generators import gen_synthetic

COMMANDS = ('exact', 'sketch', 'stream', 'turnstile', 'mrsim', 'gen')


def _gen_params(cfg):
    if cfg.GEN.KIND == 'gnp':
        return {'n': cfg.GEN.N, 'p': cfg.GEN.P}
    elif cfg.GEN.KIND == 'regular-ish':
        return {'n': cfg.GEN.N, 'd': cfg.GEN.DEGREE}
    elif cfg.GEN.KIND == 'clique-chain':
        return {'cliques': cfg.GEN.CLIQUES, 'size': cfg.GEN.CLIQUE_SIZE}
    return {'n': cfg.GEN.N}


def _output_path(cfg, suffix):
    if cfg.JOB.OUTPUT is not None:
        return cfg.JOB.OUTPUT
    return os.path.join(cfg.DIR.OUT_PATH, '%s-%s' % (cfg.JOB.COMMAND, suffix))


def _stats_path(cfg):
    if cfg.JOB.STATS is not None:
        return cfg.JOB.STATS
    return os.path.join(cfg.DIR.OUT_PATH, '%s-stats.json' % cfg.JOB.COMMAND)


def _require(value, flag, command):
    if value is None:
        raise ValueError('The %s job needs %s.' % (command, flag))
    return value


def _report_error(g, labels, cfg, record):
    exact = peel_coreness(g)
    report = utils.metrics.error_percentiles(exact, labels, cfg.BENCH.MIN_CORE)
    record.update(('error_%s' % k, v) for k, v in report.to_record().items())
    record['within_bounds'] = utils.metrics.within_bounds(exact, labels, cfg.SKETCH.EPSILON)
    print('[INFO] %s Error over %d vertices with coreness >= %d: median = %s p90 = %s' %
          (dt.now(), report.count, cfg.BENCH.MIN_CORE, report.median, report.p90))


def label_graph(cfg):
    command = cfg.JOB.COMMAND
    if command not in COMMANDS:
        raise ValueError('Unknown job: %s' % command)

    if command == 'gen':
        g = gen_synthetic(cfg.GEN.KIND, _gen_params(cfg), cfg.CONST.RNG_SEED)
        utils.writers.emit_edge_list(_output_path(cfg, '%s.txt' % cfg.GEN.KIND), g)
        return g

    record = {'command': command, 'seed': cfg.CONST.RNG_SEED}
    start_time = time()
    if command == 'turnstile':
        events = utils.data_loaders.load_events_file(_require(cfg.JOB.EVENTS, '--events', command))
        n = cfg.JOB.NUM_VERTICES
        if n is None:
            n = 1 + max(max(u, v) for _, u, v in events) if events else 0
        params = SketchParams.from_cfg(cfg, profile=cfg.TURNSTILE.PROFILE)
        print('[INFO] %s Replaying %d events over %d vertices with %s ...' % (dt.now(), len(events), n, params))
        labels, stats, state = run_events(n, params, events, cfg.TURNSTILE.CAPACITY)
        record.update(stats.to_record())
        record.update({'n': n, 'surviving_edges': len(state.edges[state.last]) + state.recovery_occupancy()})
    elif command == 'stream':
        n, edges = utils.data_loaders.get_stream(cfg, _require(cfg.JOB.INPUT, '--input', command))
        if cfg.JOB.NUM_VERTICES is not None:
            n = max(n, cfg.JOB.NUM_VERTICES)
        params = SketchParams.from_cfg(cfg)
        print('[INFO] %s Streaming %d edges over %d vertices with %s ...' % (dt.now(), len(edges), n, params))
        labels, stats, _ = run_stream(n, params, edges, cfg.STREAM.RELABEL_GATE, cfg.STREAM.CHECKPOINTS)
        record.update(stats.to_record())
        record['n'] = n
    else:
        g = utils.data_loaders.get_graph(cfg, _require(cfg.JOB.INPUT, '--input', command),
                                         num_vertices=cfg.JOB.NUM_VERTICES)
        record.update(graph_summary(g))
        if command == 'exact':
            labels = peel_coreness(g)
        elif command == 'sketch':
            params = SketchParams.from_cfg(cfg)
            labels, stats = run_sketch(g, params)
            record.update(stats.to_record())
            record['rank_ks'] = rank_uniformity(g.edge_ranks(params.hasher))
        elif command == 'mrsim':
            params = SketchParams.from_cfg(cfg)
            labels, stats, trace = run_mr_sketch(g, params, ClusterConfig.from_cfg(cfg))
            record.update(stats.to_record())
            record.update(('mr_%s' % k, v) for k, v in trace.to_record().items())
            print('[INFO] %s MR simulation: %d rounds over %d levels, max load = %d, %d budget violations.' %
                  (dt.now(), trace.rounds, trace.levels, trace.max_load, len(trace.violations)))
        if command != 'exact':
            _report_error(g, labels, cfg, record)

    record['runtime_ms'] = (time() - start_time) * 1000
    print('[INFO] %s %s job done in %.1f ms, %d vertices labeled.' %
          (dt.now(), command, record['runtime_ms'], np.asarray(labels).size))

    utils.writers.emit_labels(_output_path(cfg, 'labels.tsv'), labels)
    utils.writers.emit_stats(_stats_path(cfg), record)
    return labels, record
