# -*- coding: utf-8 -*-

import numpy as np

from collections import defaultdict
from datetime import datetime as dt

from models.graph import Graph
from models.sketch import SpaceStats, label_level


class StreamState(object):
    """One-pass, insertion-only state of the adaptive sketch.

    Level j keeps the sampled edges H_j as canonical pairs plus an adjacency map.
    membership[v] is the level at which v was promoted (-1 while unlabeled);
    promotions are final, so the union of the Lambda levels only grows.
    """
    def __init__(self, n, params, relabel_gate=True):
        if n < 2:
            raise ValueError('A stream needs at least 2 vertices, got n = %d.' % n)

        self.n = n
        self.params = params
        self.hasher = params.hasher
        self.sched = params.schedule(n)
        self.lower, self.upper = params.thresholds(n)
        self.relabel_gate = relabel_gate

        levels = self.sched.levels
        self.edges = [set() for _ in range(levels)]
        self.adj = [defaultdict(set) for _ in range(levels)]
        # Vertices allowed to relabel at level j (not excluded there) whose H_j degree reaches L
        self.heavy = [set() for _ in range(levels)]
        self.membership = np.full(n, -1, dtype=np.int64)
        self.labels = np.zeros(n, dtype=np.float64)

        self.retained = 0
        self.peak_retained = 0
        self.per_level_peak = [0] * levels
        self.n_insertions = 0
        self.n_relabels = 0

    def excluded_at(self, j, v):
        level = self.membership[v]
        return 0 <= level < j

    def excluded_mask(self, j):
        return (self.membership >= 0) & (self.membership < j)

    def retained_edges(self):
        return self.retained

    def level_graph(self, j):
        return Graph(self.n, list(self.edges[j]))

    def _touch(self, j, v):
        if not self.excluded_at(j, v) and len(self.adj[j][v]) >= self.lower:
            self.heavy[j].add(v)
        else:
            self.heavy[j].discard(v)

    def _add_edge(self, j, u, v):
        self.edges[j].add((u, v))
        self.adj[j][u].add(v)
        self.adj[j][v].add(u)
        self.retained += 1
        self.peak_retained = max(self.peak_retained, self.retained)
        self.per_level_peak[j] = max(self.per_level_peak[j], len(self.edges[j]))
        self._touch(j, u)
        self._touch(j, v)

    def _drop_edge(self, j, u, v):
        self.edges[j].discard((u, v) if u < v else (v, u))
        self.adj[j][u].discard(v)
        self.adj[j][v].discard(u)
        self.retained -= 1
        self._touch(j, u)
        self._touch(j, v)

    def _relabel(self, j):
        if self.relabel_gate and not self.heavy[j]:
            return []

        self.n_relabels += 1
        _, promoted = label_level(self.level_graph(j),
                                  self.excluded_mask(j),
                                  j,
                                  self.sched[j],
                                  self.n,
                                  self.params,
                                  allow_final=False)
        promoted = [(v, label) for v, label in promoted if self.membership[v] < 0]
        for v, label in promoted:
            self.membership[v] = j
            self.labels[v] = label
        return [v for v, _ in promoted]

    def _purge_deeper(self, j, promoted):
        for k in range(j + 1, self.sched.levels):
            for v in promoted:
                self._touch(k, v)
                for u in list(self.adj[k].get(v, ())):
                    if 0 <= self.membership[u] <= j:
                        self._drop_edge(k, u, v)


# ////////////////////////////// = End of StreamState Class Definition = ////////////////////////////// #


def stream_new(n, params, relabel_gate=True):
    return StreamState(n, params, relabel_gate)


def stream_insert(state, u, v):
    """Feeds one arriving edge through every level it is sampled at."""
    if u == v:
        raise ValueError('Self-loop (%d, %d) in the stream.' % (u, v))
    if not (0 <= u < state.n and 0 <= v < state.n):
        raise ValueError('Edge (%d, %d) out of the vertex range [0, %d).' % (u, v, state.n))

    u, v = (u, v) if u < v else (v, u)
    state.n_insertions += 1
    r = state.hasher.rank(u, v)
    for j in range(state.sched.levels):
        if state.excluded_at(j, u) and state.excluded_at(j, v):
            break
        if r > state.sched[j] or (u, v) in state.edges[j]:
            continue

        state._add_edge(j, u, v)
        promoted = state._relabel(j)
        if promoted:
            state._purge_deeper(j, promoted)


def stream_finalize(state):
    """Labels of all n vertices: the promotions made during the pass, plus the
    still unlabeled vertices labeled from the last (p = 1) level. The state is
    left untouched."""
    labels = state.labels.copy()
    last = state.sched.levels - 1
    unlabeled = state.membership < 0
    if unlabeled.any():
        _, promoted = label_level(state.level_graph(last), state.excluded_mask(last), last, state.sched[last],
                                  state.n, state.params)
        for v, label in promoted:
            if unlabeled[v]:
                labels[v] = label

    stats = SpaceStats([len(e) for e in state.edges],
                       peak_edges=state.peak_retained,
                       per_level_peak=list(state.per_level_peak),
                       insertions=state.n_insertions,
                       relabels=state.n_relabels)
    return labels, stats


def run_stream(n, params, edges, relabel_gate=True, checkpoints=0):
    """Streams `edges` in order; optionally samples the retained-edge count at evenly spaced prefixes."""
    edges = list(edges)
    state = stream_new(n, params, relabel_gate)
    marks = set()
    if checkpoints > 0 and edges:
        marks = set(int(np.ceil(len(edges) * (i + 1) / checkpoints)) for i in range(checkpoints))

    trace = []
    for idx, (u, v) in enumerate(edges):
        stream_insert(state, u, v)
        if idx + 1 in marks:
            trace.append((idx + 1, state.retained_edges()))
            print('[INFO] %s Stream[%d/%d] retained = %d peak = %d labeled = %d' %
                  (dt.now(), idx + 1, len(edges), state.retained, state.peak_retained,
                   np.count_nonzero(state.membership >= 0)))

    labels, stats = stream_finalize(state)
    stats.extra['checkpoints'] = trace
    return labels, stats, state
