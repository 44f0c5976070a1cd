#!/usr/bin/python3
# -*- coding: utf-8 -*-

import logging
import multiprocessing as mp
import sys

from argparse import ArgumentParser, ArgumentTypeError
from datetime import datetime as dt
from pprint import pprint

from config import cfg
from core.bench import bench_graphs
from core.label import COMMANDS, label_graph


def positive_int(value):
    try:
        parsed = int(value)
    except ValueError:
        raise ArgumentTypeError('%r is not an integer' % value)
    if parsed < 1:
        raise ArgumentTypeError('%r must be a positive integer' % value)
    return parsed


def seed_value(value):
    try:
        parsed = int(value, 0)
    except ValueError:
        raise ArgumentTypeError('%r is not an integer seed' % value)
    if not 0 <= parsed < 2**64:
        raise ArgumentTypeError('seed %r must be a 64-bit unsigned integer' % value)
    return parsed


def epsilon_value(value):
    try:
        parsed = float(value)
    except ValueError:
        raise ArgumentTypeError('%r is not a number' % value)
    if not 0 < parsed <= 1:
        raise ArgumentTypeError('epsilon %r must lie in (0, 1]' % value)
    return parsed


def probability(value):
    try:
        parsed = float(value)
    except ValueError:
        raise ArgumentTypeError('%r is not a number' % value)
    if not 0 <= parsed <= 1:
        raise ArgumentTypeError('probability %r must lie in [0, 1]' % value)
    return parsed


def growth_value(value):
    try:
        parsed = float(value)
    except ValueError:
        raise ArgumentTypeError('%r is not a number' % value)
    if not parsed > 1:
        raise ArgumentTypeError('growth factor %r must be > 1' % value)
    return parsed


def comma_list(item_type):
    def parse(value):
        return [item_type(v) for v in value.split(',') if v.strip()]

    return parse


def get_args_from_command_line():
    parser = ArgumentParser(description='Parser of Runner of the k-core sketch toolkit')
    parser.add_argument('command', help='Job to run', choices=COMMANDS + ('bench', ))
    parser.add_argument('--input', dest='input', help='Edge list file, dataset name or gen:<kind>:k=v,...', default=None)
    parser.add_argument('--events', dest='events', help='Turnstile event file ("+ u v" / "- u v")', default=None)
    parser.add_argument('--num-vertices', dest='num_vertices', help='Vertex count', default=None, type=positive_int)
    parser.add_argument('--output', dest='output', help='Labels (TSV) or edge list output file', default=None)
    parser.add_argument('--stats', dest='stats', help='Stats (JSON) output file', default=None)
    parser.add_argument('--out', dest='out_path', help='Set output path', default=cfg.DIR.OUT_PATH)
    parser.add_argument('--seed', dest='seed', help='64-bit hash seed', default=cfg.CONST.RNG_SEED, type=seed_value)
    parser.add_argument('--epsilon', dest='epsilon', help='Accuracy', default=cfg.SKETCH.EPSILON, type=epsilon_value)
    parser.add_argument('--mode',
                        dest='mode',
                        help='Threshold mode',
                        default=cfg.SKETCH.MODE,
                        choices=('theory', 'practical'))
    parser.add_argument('--profile',
                        dest='profile',
                        help='Threshold profile',
                        default=None,
                        choices=('sketch', 'turnstile'))
    parser.add_argument('--t', dest='T', help='Practical threshold T', default=cfg.SKETCH.T, type=positive_int)
    parser.add_argument('--m', dest='M', help='Practical growth factor M', default=cfg.SKETCH.M, type=growth_value)
    parser.add_argument('--p0', dest='p0', help='Override of the first sampling probability', default=None, type=float)
    parser.add_argument('--max-levels', dest='max_levels', help='Level cap', default=None, type=positive_int)
    parser.add_argument('--capacity', dest='capacity', help='Sparse recovery capacity', default=None, type=positive_int)
    parser.add_argument('--min-core', dest='min_core', help='Error restriction', default=cfg.BENCH.MIN_CORE,
                        type=positive_int)
    parser.add_argument('--runs', dest='runs', help='Runs per bench cell', default=cfg.BENCH.RUNS, type=positive_int)
    parser.add_argument('--t-list', dest='t_list', help='Bench T values', default=None, type=comma_list(positive_int))
    parser.add_argument('--m-list', dest='m_list', help='Bench M values', default=None, type=comma_list(growth_value))
    parser.add_argument('--graphs', dest='graphs', help='Bench graphs', default=None, type=comma_list(str))
    parser.add_argument('--workers', dest='workers', help='Worker processes', default=None, type=positive_int)
    parser.add_argument('--machines', dest='machines', help='Simulated machines', default=cfg.CLUSTER.MACHINES,
                        type=positive_int)
    parser.add_argument('--budget', dest='budget', help='Per-machine edge budget', default=None, type=positive_int)
    parser.add_argument('--prune3', dest='prune3', help='Prune degree < 3 before round B', action='store_true')
    parser.add_argument('--no-tensorboard', dest='no_tensorboard', help='Do not log scalars', action='store_true')
    parser.add_argument('--kind', dest='kind', help='Synthetic graph kind', default=cfg.GEN.KIND)
    parser.add_argument('--n', dest='n', help='Synthetic vertex count', default=cfg.GEN.N, type=positive_int)
    parser.add_argument('--p', dest='p', help='Synthetic edge probability', default=cfg.GEN.P, type=probability)
    parser.add_argument('--degree', dest='degree', help='Synthetic degree', default=cfg.GEN.DEGREE, type=positive_int)
    parser.add_argument('--cliques', dest='cliques', help='Clique count', default=cfg.GEN.CLIQUES, type=positive_int)
    parser.add_argument('--clique-size',
                        dest='clique_size',
                        help='Clique size',
                        default=cfg.GEN.CLIQUE_SIZE,
                        type=positive_int)
    parser.add_argument('--modes', dest='modes', help='Bench modes (sketch, stream, baseline)', default=None,
                        type=comma_list(str))
    args = parser.parse_args()
    if args.p0 is not None and not 0 < args.p0 <= 1:
        parser.error('--p0 must lie in (0, 1]')
    return args


def main():
    # Get args from command line
    args = get_args_from_command_line()

    cfg.JOB.COMMAND = args.command
    cfg.JOB.INPUT = args.input
    cfg.JOB.EVENTS = args.events
    cfg.JOB.NUM_VERTICES = args.num_vertices
    cfg.JOB.OUTPUT = args.output
    cfg.JOB.STATS = args.stats
    cfg.DIR.OUT_PATH = args.out_path
    cfg.CONST.RNG_SEED = args.seed
    cfg.SKETCH.EPSILON = args.epsilon
    cfg.SKETCH.MODE = args.mode
    cfg.SKETCH.T = args.T
    cfg.SKETCH.M = args.M
    cfg.SKETCH.P0 = args.p0
    cfg.SKETCH.MAX_LEVELS = args.max_levels
    cfg.BENCH.MIN_CORE = args.min_core
    cfg.BENCH.RUNS = args.runs
    cfg.CLUSTER.MACHINES = args.machines
    cfg.CLUSTER.BUDGET = args.budget
    cfg.CLUSTER.PRUNE3 = args.prune3
    cfg.GEN.KIND = args.kind
    cfg.GEN.N = args.n
    cfg.GEN.P = args.p
    cfg.GEN.DEGREE = args.degree
    cfg.GEN.CLIQUES = args.cliques
    cfg.GEN.CLIQUE_SIZE = args.clique_size
    if args.profile is not None:
        cfg.SKETCH.PROFILE = args.profile
        cfg.TURNSTILE.PROFILE = args.profile
    if args.capacity is not None:
        cfg.TURNSTILE.CAPACITY = args.capacity
    if args.t_list is not None:
        cfg.BENCH.T_LIST = args.t_list
    if args.m_list is not None:
        cfg.BENCH.M_LIST = args.m_list
    if args.graphs is not None:
        cfg.BENCH.GRAPHS = args.graphs
    if args.modes is not None:
        cfg.BENCH.MODES = args.modes
    if args.workers is not None:
        cfg.BENCH.NUM_WORKER = args.workers
        cfg.CLUSTER.NUM_WORKER = args.workers
    if args.no_tensorboard:
        cfg.BENCH.TENSORBOARD = False

    # Print config
    print('Use config:')
    pprint(cfg)

    # Start the job
    try:
        if args.command == 'bench':
            bench_graphs(cfg)
        else:
            label_graph(cfg)
    except (IOError, ValueError) as ex:
        print('[FATAL] %s %s' % (dt.now(), ex))
        sys.exit(2)


if __name__ == '__main__':
    # Check python version
    if sys.version_info < (3, 0):
        raise Exception('Please run the toolkit with Python 3')

    # Setup logger
    mp.log_to_stderr()
    logger = mp.get_logger()
    logger.setLevel(logging.INFO)

    main()
