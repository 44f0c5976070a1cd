# -*- coding: utf-8 -*-

import math
import numpy as np

from datetime import datetime as dt
from multiprocessing.pool import ThreadPool

from models.peeling import exclusive_coreness_labeling
from models.sampler import EdgeHasher
from models.sketch import SpaceStats, assign_label, label_level

PRUNE_DEGREE = 3


class ClusterConfig(object):
    """Simulated cluster: P machines, optional per-machine edge budget, opt-in degree-3 pruning."""
    def __init__(self, machines=1, budget=None, prune3=False, workers=1):
        if int(machines) != machines or machines < 1:
            raise ValueError('Machine count must be a positive integer, got %s.' % machines)
        if budget is not None and budget < 1:
            raise ValueError('Machine budget must be positive, got %s.' % budget)
        if workers < 1:
            raise ValueError('Worker count must be positive, got %s.' % workers)

        self.machines = int(machines)
        self.budget = budget
        self.prune3 = bool(prune3)
        self.workers = int(workers)

    @classmethod
    def from_cfg(cls, cfg):
        return cls(cfg.CLUSTER.MACHINES, cfg.CLUSTER.BUDGET, cfg.CLUSTER.PRUNE3, cfg.CLUSTER.NUM_WORKER)


# ///////////////////////////// = End of ClusterConfig Class Definition = ///////////////////////////// #


class RoundTrace(object):
    def __init__(self, machines, budget):
        self.machines = machines
        self.budget = budget
        self.loads = []
        self.broadcast = []
        self.violations = []
        self.levels = 0
        self.prune_rounds = 0
        self.density_gamma = None

    @property
    def rounds(self):
        return len(self.loads)

    @property
    def max_load(self):
        return max(max(l) for l in self.loads) if self.loads else 0

    def round_b_loads(self):
        return [self.loads[r][0] for r in range(1, self.rounds, 2)]

    def record(self, loads):
        round_idx = len(self.loads)
        self.loads.append([int(l) for l in loads])
        if self.budget is None:
            return

        for machine, load in enumerate(loads):
            if load > self.budget:
                self.violations.append((round_idx, machine, int(load)))
                print('[WARN] %s Round %d: machine %d holds %d edges, over the budget of %d.' %
                      (dt.now(), round_idx, machine, load, self.budget))

    def to_record(self):
        return {
            'rounds': self.rounds,
            'levels': self.levels,
            'machines': self.machines,
            'max_load': self.max_load,
            'round_loads': [list(l) for l in self.loads],
            'broadcast': list(self.broadcast),
            'violations': list(self.violations),
            'prune_rounds': self.prune_rounds,
            'density_gamma': self.density_gamma,
        }


# ////////////////////////////// = End of RoundTrace Class Definition = ////////////////////////////// #


def _sample_partition(args):
    """Round A on one machine: drop edges induced by Lambda, keep ranks <= p_j."""
    edge_idx, src, dst, ranks, labeled, p_j = args
    eligible = edge_idx[~(labeled[src[edge_idx]] & labeled[dst[edge_idx]])]
    return eligible, eligible[ranks[eligible] <= p_j]


def _prune(h, excluded):
    """Parallel rounds deleting unprotected vertices of degree < 3; returns the pruned mask and round count."""
    alive = np.ones(h.n, dtype=np.bool_)
    rounds = 0
    while True:
        inside = alive[h.src] & alive[h.dst]
        deg = np.bincount(h.src[inside], minlength=h.n) + np.bincount(h.dst[inside], minlength=h.n)
        low = alive & ~excluded & (deg < PRUNE_DEGREE)
        if not low.any():
            break
        alive &= ~low
        rounds += 1

    return ~alive, rounds


def _label_pruned(h, excluded, j, p_j, n, params, trace):
    """Round B with pruning: survivors are labeled on machine 0, pruned vertices on the pruning side."""
    pruned, rounds = _prune(h, excluded)
    trace.prune_rounds += rounds
    kept = ~pruned
    core = h.edge_subgraph(kept[h.src] & kept[h.dst])
    fringe = h.edge_subgraph(pruned[h.src] | pruned[h.dst])

    _, promoted = label_level(core, excluded | pruned, j, p_j, n, params)
    lower, _ = params.thresholds(n)
    side = exclusive_coreness_labeling(fringe, kept)
    for v in side.order:
        l = side.labels[v]
        if p_j >= 1 or l >= lower:
            promoted.append((v, assign_label(l, p_j, j, n, params)))

    return core.m, promoted


def run_mr_sketch(g, params, cluster):
    """Simulated MapReduce run of the adaptive sketch, two rounds per level.

    Round A: edges hash-partitioned over P machines; each machine gets the Lambda
    broadcast, drops the edges it induces and samples by rank. Round B: the sampled
    edges go to machine 0, which labels and promotes exactly as the batch sketch.
    """
    n = g.n
    if n < 2:
        raise ValueError('The sketch needs at least 2 vertices, got n = %d.' % n)

    sched = params.schedule(n)
    ranks = g.edge_ranks(params.hasher)
    P = cluster.machines
    if P == 1:
        owners = np.zeros(g.m, dtype=np.int64)
    else:
        owners = np.minimum((g.edge_ranks(EdgeHasher(params.seed, salt=b'machine')) * P).astype(np.int64), P - 1)
    partitions = [np.flatnonzero(owners == machine) for machine in range(P)]

    trace = RoundTrace(P, cluster.budget)
    if n > 1 and g.m > 0:
        trace.density_gamma = math.log(g.m) / math.log(n) - 1

    labels = np.zeros(n, dtype=np.float64)
    labeled = np.zeros(n, dtype=np.bool_)
    per_level_edges = []
    pool = ThreadPool(cluster.workers) if cluster.workers > 1 and P > 1 else None
    try:
        for j in range(sched.levels):
            p_j = sched[j]
            trace.broadcast.append(int(np.count_nonzero(labeled)))
            jobs = [(part, g.src, g.dst, ranks, labeled, p_j) for part in partitions]
            results = pool.map(_sample_partition, jobs) if pool is not None else [_sample_partition(a) for a in jobs]
            trace.record([eligible.size for eligible, _ in results])

            sampled = np.zeros(g.m, dtype=np.bool_)
            for _, picked in results:
                sampled[picked] = True
            h = g.edge_subgraph(sampled)
            per_level_edges.append(h.m)

            if cluster.prune3:
                load, promoted = _label_pruned(h, labeled, j, p_j, n, params, trace)
            else:
                load = h.m
                _, promoted = label_level(h, labeled, j, p_j, n, params)
            trace.record([load] + [0] * (P - 1))
            trace.levels += 1

            for v, label in promoted:
                labels[v] = label
                labeled[v] = True
            print('[DEBUG] %s MR level %d/%d p = %.6f |H| = %d round B load = %d promoted = %d' %
                  (dt.now(), j + 1, sched.levels, p_j, h.m, load, len(promoted)))
            if labeled.all():
                break
    finally:
        if pool is not None:
            pool.close()
            pool.join()

    return labels, SpaceStats(per_level_edges), trace
