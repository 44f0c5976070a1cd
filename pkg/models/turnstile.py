# -*- coding: utf-8 -*-

import numpy as np

from collections import defaultdict

from models.graph import Graph
from models.sketch import InvariantViolation, SpaceStats, label_level
from models.sparse_recovery import RecoveryOverflow, SparseRecovery


class TurnstileState(object):
    """Insert/delete state of the adaptive sketch.

    Every sampled edge lives at each level j >= level_of(rank) either in H_j or, when
    both endpoints were excluded at level j at the last reconciliation, in the
    sparse recoveries of both endpoints. After each event the levels from the
    touched one downwards are reconciled, so the state only depends on the set of
    surviving edges.
    """
    def __init__(self, n, params, capacity=None):
        if n < 2:
            raise ValueError('A turnstile stream needs at least 2 vertices, got n = %d.' % n)

        self.n = n
        self.params = params
        self.hasher = params.hasher
        self.sched = params.schedule(n)
        self.lower, self.upper = params.thresholds(n)
        self.capacity = int(capacity) if capacity is not None else params.recovery_capacity(n)
        if self.capacity < 1:
            raise ValueError('Recovery capacity must be positive, got %s.' % self.capacity)

        levels = self.sched.levels
        self.edges = [set() for _ in range(levels)]
        self.adj = [defaultdict(set) for _ in range(levels)]
        self.deg = [np.zeros(n, dtype=np.int64) for _ in range(levels)]
        self.recoveries = [dict() for _ in range(levels)]
        self.excluded = [np.zeros(n, dtype=np.bool_) for _ in range(levels)]
        self.dirty = [False] * levels

        self.membership = np.full(n, -1, dtype=np.int64)
        self.removal_rank = np.zeros(n, dtype=np.int64)
        self.labels = np.zeros(n, dtype=np.float64)

        self.n_events = 0
        self.n_recoveries = 0
        self.max_recovered = 0
        self.peak_retained = 0

    @property
    def last(self):
        return self.sched.levels - 1

    def has_edge(self, u, v):
        e = (u, v) if u < v else (v, u)
        s = self.recoveries[self.last].get(e[0])
        return e in self.edges[self.last] or (s is not None and e in s)

    def recovery(self, j, v):
        if v not in self.recoveries[j]:
            self.recoveries[j][v] = SparseRecovery(self.capacity)
        return self.recoveries[j][v]

    def recovery_occupancy(self):
        return sum(len(s) for level in self.recoveries for s in level.values()) // 2

    def retained_edges(self):
        return sum(len(e) for e in self.edges) + self.recovery_occupancy()

    def _h_add(self, j, e):
        u, v = e
        self.edges[j].add(e)
        self.adj[j][u].add(v)
        self.adj[j][v].add(u)
        self.deg[j][u] += 1
        self.deg[j][v] += 1
        self.dirty[j] = True

    def _h_remove(self, j, e):
        u, v = e
        self.edges[j].remove(e)
        self.adj[j][u].discard(v)
        self.adj[j][v].discard(u)
        self.deg[j][u] -= 1
        self.deg[j][v] -= 1
        self.dirty[j] = True

    def _s_remove(self, j, e, endpoint):
        s = self.recoveries[j].get(endpoint)
        if s is None or e not in s:
            raise InvariantViolation('Edge %s missing from the level %d recovery of vertex %d.' % (e, j, endpoint))
        s.delete(e)
        if len(s) == 0:
            del self.recoveries[j][endpoint]

    def _place(self, j, e):
        u, v = e
        if self.excluded[j][u] and self.excluded[j][v]:
            self.recovery(j, u).insert(e)
            self.recovery(j, v).insert(e)
        else:
            self._h_add(j, e)

    def _displace(self, j, e):
        if e in self.edges[j]:
            self._h_remove(j, e)
        else:
            self._s_remove(j, e, e[0])
            self._s_remove(j, e, e[1])

    def _restore(self, j, v):
        """Moves the edges kept in v's level j recovery back into H_j."""
        s = self.recoveries[j].get(v)
        if s is None:
            return
        try:
            recovered = s.recover()
        except RecoveryOverflow as ex:
            raise InvariantViolation('Level %d recovery of demoted vertex %d overflowed: %s' % (j, v, ex))

        del self.recoveries[j][v]
        self.n_recoveries += 1
        self.max_recovered = max(self.max_recovered, len(recovered))
        for e in recovered:
            self._s_remove(j, e, e[1] if e[0] == v else e[0])
            self._h_add(j, e)

    def _stash(self, j, v, target):
        for u in list(self.adj[j].get(v, ())):
            if target[u]:
                e = (u, v) if u < v else (v, u)
                self._h_remove(j, e)
                self.recovery(j, u).insert(e)
                self.recovery(j, v).insert(e)

    def reconcile(self, start=0):
        previous = self.membership.copy()
        for j in range(start, self.sched.levels):
            target = (self.membership >= 0) & (self.membership < j)
            left = np.flatnonzero(self.excluded[j] & ~target)
            entered = np.flatnonzero(target & ~self.excluded[j])
            changed = self.dirty[j] or left.size > 0 or entered.size > 0

            # Demoted vertices are restored in (old level, greedy removal order)
            for v in sorted(left.tolist(), key=lambda v: (previous[v], self.removal_rank[v], v)):
                self._restore(j, v)
            self.excluded[j] = target
            for v in entered.tolist():
                self._stash(j, v, target)

            if j == self.last or not changed:
                continue
            self._relabel(j, target)

        self.peak_retained = max(self.peak_retained, self.retained_edges())

    def _relabel(self, j, target):
        promoted = []
        if np.any(self.deg[j][~target] >= self.lower):
            partial, promoted = label_level(Graph(self.n, list(self.edges[j])), target, j, self.sched[j], self.n,
                                            self.params)
            rank = dict((v, idx) for idx, v in enumerate(partial.order))
            for v, label in promoted:
                self.membership[v] = j
                self.labels[v] = label
                self.removal_rank[v] = rank[v]

        promoted = set(v for v, _ in promoted)
        for v in np.flatnonzero(self.membership == j).tolist():
            if v not in promoted:
                self.membership[v] = -1
        self.dirty[j] = False


# ///////////////////////////// = End of TurnstileState Class Definition = ///////////////////////////// #


def ts_new(n, params, capacity=None):
    return TurnstileState(n, params, capacity)


def _check_endpoints(state, u, v):
    if u == v:
        raise ValueError('Self-loop (%d, %d) in the event stream.' % (u, v))
    if not (0 <= u < state.n and 0 <= v < state.n):
        raise ValueError('Edge (%d, %d) out of the vertex range [0, %d).' % (u, v, state.n))


def ts_insert(state, u, v):
    _check_endpoints(state, u, v)
    if state.has_edge(u, v):
        raise ValueError('Edge (%d, %d) is already present.' % (u, v))

    e = (u, v) if u < v else (v, u)
    start = state.sched.level_of(state.hasher.rank(u, v))
    for j in range(start, state.sched.levels):
        state._place(j, e)
    state.n_events += 1
    state.reconcile(start)


def ts_delete(state, u, v):
    _check_endpoints(state, u, v)
    if not state.has_edge(u, v):
        raise ValueError('Edge (%d, %d) is not present.' % (u, v))

    e = (u, v) if u < v else (v, u)
    start = state.sched.level_of(state.hasher.rank(u, v))
    for j in range(start, state.sched.levels):
        state._displace(j, e)
    state.n_events += 1
    state.reconcile(start)


def ts_finalize(state):
    """Labels of all n vertices plus space stats; the state is left untouched."""
    labels = state.labels.copy()
    last = state.last
    target = state.excluded[last]
    labels[~target] = 0.
    _, promoted = label_level(Graph(state.n, list(state.edges[last])), target, last, state.sched[last], state.n,
                              state.params)
    for v, label in promoted:
        labels[v] = label

    stats = SpaceStats([len(e) for e in state.edges],
                       peak_edges=state.peak_retained,
                       recovery_edges=state.recovery_occupancy(),
                       recoveries=state.n_recoveries,
                       max_recovered=state.max_recovered,
                       capacity=state.capacity,
                       events=state.n_events)
    return labels, stats


def ts_check_invariants(state, live_edges):
    """Checks single residence and no edge loss against the surviving edges; raises InvariantViolation."""
    live = set((u, v) if u < v else (v, u) for u, v in live_edges)
    for j in range(state.sched.levels):
        sampled = set(e for e in live if state.hasher.rank(*e) <= state.sched[j])
        stashed = defaultdict(int)
        for v, s in state.recoveries[j].items():
            for e in s.recover() if len(s) <= s.capacity else s.elements.elements():
                if v not in e:
                    raise InvariantViolation('Level %d recovery of %d holds foreign edge %s.' % (j, v, e))
                stashed[e] += 1

        if any(c != 2 for c in stashed.values()):
            raise InvariantViolation('Level %d has an edge kept by only one endpoint recovery.' % j)
        if state.edges[j] & set(stashed):
            raise InvariantViolation('Level %d has an edge both in H and in the recoveries.' % j)
        if state.edges[j] | set(stashed) != sampled:
            raise InvariantViolation('Level %d lost or invented edges: %d kept, %d sampled.' %
                                     (j, len(state.edges[j]) + len(stashed), len(sampled)))

        excluded = state.excluded[j]
        if any(not (excluded[u] and excluded[v]) for u, v in stashed):
            raise InvariantViolation('Level %d recovery holds an edge with a non-excluded endpoint.' % j)
        if any(excluded[u] and excluded[v] for u, v in state.edges[j]):
            raise InvariantViolation('Level %d H keeps an edge induced by the excluded vertices.' % j)

    return True


def run_events(n, params, events, capacity=None):
    """Applies ('+' | '-', u, v) events in order and finalizes."""
    state = ts_new(n, params, capacity)
    for op, u, v in events:
        if op == '+':
            ts_insert(state, u, v)
        elif op == '-':
            ts_delete(state, u, v)
        else:
            raise ValueError('Unknown event operation: %s' % op)

    labels, stats = ts_finalize(state)
    return labels, stats, state
