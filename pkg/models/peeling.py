# -*- coding: utf-8 -*-

import heapq
import numpy as np

from models.graph import PartialLabels, as_vertex_mask

BRUTE_FORCE_MAX_N = 14


def peel_coreness(g):
    """Exact coreness of every vertex by bucket-queue peeling.

    Vertices are kept in an array sorted by current degree (`vert`) with the
    start of every degree bucket in `bins`; removing a vertex moves each
    higher-degree neighbor one bucket down in O(1).
    """
    n = g.n
    if n == 0:
        return np.zeros(0, dtype=np.int64)

    adj = g.adjacency()
    deg = g.degrees().tolist()
    max_deg = max(deg)

    bins = [0] * (max_deg + 1)
    for d in deg:
        bins[d] += 1
    start = 0
    for d in range(max_deg + 1):
        bins[d], start = start, start + bins[d]

    pos = [0] * n
    vert = [0] * n
    for v in range(n):
        pos[v] = bins[deg[v]]
        vert[pos[v]] = v
        bins[deg[v]] += 1
    for d in range(max_deg, 0, -1):
        bins[d] = bins[d - 1]
    bins[0] = 0

    for i in range(n):
        v = vert[i]
        for u in adj[v]:
            if deg[u] > deg[v]:
                du = deg[u]
                pu = pos[u]
                pw = bins[du]
                w = vert[pw]
                if u != w:
                    pos[u], pos[w] = pw, pu
                    vert[pu], vert[pw] = w, u
                bins[du] += 1
                deg[u] -= 1

    return np.asarray(deg, dtype=np.int64)


def brute_force_coreness(g, variant='exhaustive'):
    """Coreness straight from the definition, for cross-checking peel_coreness.

    exhaustive: max over every vertex subset S containing v of the minimum induced
                degree of S (n <= 14).
    fixpoint:   for each k on its own, delete vertices of induced degree < k until
                nothing changes; v's coreness is the largest k it survives.
    """
    if variant == 'exhaustive':
        return _brute_force_exhaustive(g)
    elif variant == 'fixpoint':
        return _brute_force_fixpoint(g)
    else:
        raise ValueError('Unknown brute force variant: %s' % variant)


def _brute_force_exhaustive(g):
    n = g.n
    if n > BRUTE_FORCE_MAX_N:
        raise ValueError('Exhaustive coreness supports n <= %d, got n = %d.' % (BRUTE_FORCE_MAX_N, n))

    nbr_bits = [0] * n
    for u, v in g.edges():
        nbr_bits[u] |= 1 << v
        nbr_bits[v] |= 1 << u

    best = [0] * n
    for subset in range(1, 1 << n):
        members = [v for v in range(n) if subset >> v & 1]
        min_deg = min(bin(nbr_bits[v] & subset).count('1') for v in members)
        for v in members:
            if min_deg > best[v]:
                best[v] = min_deg

    return np.asarray(best, dtype=np.int64)


def _brute_force_fixpoint(g):
    adj = [set(a) for a in g.adjacency()]
    labels = [0] * g.n
    k = 1
    while True:
        alive = set(range(g.n))
        changed = True
        while changed:
            changed = False
            for v in sorted(alive):
                if len(adj[v] & alive) < k:
                    alive.discard(v)
                    changed = True
        if not alive:
            break
        for v in alive:
            labels[v] = k
        k += 1

    return np.asarray(labels, dtype=np.int64)


def exclusive_coreness_labeling(h, excluded=()):
    """Greedy peeling of h that never removes the vertices of `excluded`.

    Excluded vertices keep contributing to their neighbors' degrees throughout.
    Among the unlabeled vertices the one of minimum current degree (smallest id on
    ties) is removed next and labeled with the running level max(level, degree).
    The returned PartialLabels records the removal order.
    """
    n = h.n
    excluded = as_vertex_mask(excluded, n)
    adj = h.adjacency()
    deg = h.degrees().tolist()
    is_excluded = excluded.tolist()

    heap = [(deg[v], v) for v in range(n) if not is_excluded[v]]
    heapq.heapify(heap)
    removed = [False] * n
    labels = [0] * n
    order = []
    level = 0
    while heap:
        d, v = heapq.heappop(heap)
        if removed[v] or d != deg[v]:
            continue
        if d > level:
            level = d
        labels[v] = level
        removed[v] = True
        order.append(v)
        for u in adj[v]:
            if not removed[u]:
                deg[u] -= 1
                if not is_excluded[u]:
                    heapq.heappush(heap, (deg[u], u))

    return PartialLabels(n, excluded.copy(), labels, order)


def kcore_vertices(g, k, coreness=None):
    if coreness is None:
        coreness = peel_coreness(g)
    return set(np.flatnonzero(coreness >= k).tolist())


def kcore_subgraph(g, k, coreness=None):
    """The k-core as an induced subgraph; vertex ids are kept, vertices outside the core are isolated."""
    if coreness is None:
        coreness = peel_coreness(g)
    return g.induced(coreness >= k)


def check_approx_kcore(g, h, k, epsilon, coreness=None):
    """True iff the vertex set h contains the k-core of g and induces min degree >= (1 - epsilon) * k."""
    in_h = as_vertex_mask(h, g.n)
    if coreness is None:
        coreness = peel_coreness(g)
    if np.any((coreness >= k) & ~in_h):
        return False

    inside = in_h[g.src] & in_h[g.dst]
    induced_deg = np.bincount(g.src[inside], minlength=g.n) + np.bincount(g.dst[inside], minlength=g.n)
    return bool(np.all(induced_deg[in_h] >= (1 - epsilon) * k))


def threshold_probe_rounds(g, d):
    """Parallel threshold probing.

    One round deletes, all at once, every remaining vertex of induced degree < d.
    Returns the number of rounds that deleted something and the surviving vertices.
    """
    alive = np.ones(g.n, dtype=np.bool_)
    rounds = 0
    while True:
        inside = alive[g.src] & alive[g.dst]
        deg = np.bincount(g.src[inside], minlength=g.n) + np.bincount(g.dst[inside], minlength=g.n)
        low = alive & (deg < d)
        if not low.any():
            break
        alive &= ~low
        rounds += 1

    return rounds, set(np.flatnonzero(alive).tolist())


def simple_iterative_labels(g, t0=4, growth=2):
    """Threshold-doubling baseline estimate of the coreness.

    All vertices of degree below T are removed in parallel and estimated as T;
    once none is left below T, T grows by `growth` and the loop goes on with the
    remaining graph. Returns the estimates and the number of parallel rounds.
    """
    if t0 <= 0 or growth <= 1:
        raise ValueError('Baseline needs t0 > 0 and growth > 1, got t0 = %s, growth = %s.' % (t0, growth))

    estimates = np.zeros(g.n, dtype=np.float64)
    alive = np.ones(g.n, dtype=np.bool_)
    threshold = float(t0)
    rounds = 0
    while alive.any():
        inside = alive[g.src] & alive[g.dst]
        deg = np.bincount(g.src[inside], minlength=g.n) + np.bincount(g.dst[inside], minlength=g.n)
        low = alive & (deg < threshold)
        if low.any():
            estimates[low] = threshold
            alive &= ~low
            rounds += 1
        else:
            threshold *= growth

    return estimates, rounds


def graph_summary(g, coreness=None):
    if coreness is None:
        coreness = peel_coreness(g)
    degrees = g.degrees()
    return {
        'n': g.n,
        'm': g.m,
        'max_degree': int(degrees.max()) if g.n else 0,
        'degeneracy': int(coreness.max()) if g.n else 0,
    }
