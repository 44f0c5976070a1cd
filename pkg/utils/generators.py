# -*- coding: utf-8 -*-

import networkx as nx
import numpy as np

from models.graph import Graph

SYNTHETIC_KINDS = ('gnp', 'regular-ish', 'clique-chain', 'hard')


def gen_hard_instance(n):
    """Chain of 5-vertex blocks ending in a K5 that forces threshold probing through every block.

    For block i (0 <= i <= (n - 10) / 5) and j in {1, 2, 3}: 5i+j is joined to 5i+4,
    5(i+1) and 5(i+1)+j, and 5i+4 is joined to 5(i+1). The last five vertices form a
    K5. Vertex 0 stays isolated.
    """
    if int(n) != n or n < 10 or n % 5 != 0:
        raise ValueError('The hard instance needs n to be a multiple of 5 with n >= 10, got %s.' % n)

    n = int(n)
    edges = []
    for i in range((n - 10) // 5 + 1):
        for j in (1, 2, 3):
            edges.append((5 * i + j, 5 * i + 4))
            edges.append((5 * i + j, 5 * (i + 1)))
            edges.append((5 * i + j, 5 * (i + 1) + j))
        edges.append((5 * i + 4, 5 * (i + 1)))

    tail = range(n - 5, n)
    edges.extend((u, v) for u in tail for v in tail if u < v)
    return Graph(n, edges)


REQUIRED_PARAMS = {
    'gnp': ('n', 'p'),
    'regular-ish': ('n', 'd'),
    'clique-chain': ('cliques', 'size'),
    'hard': ('n', ),
}


def _from_networkx(n, nx_graph):
    return Graph(n, list(nx_graph.edges()))


def gen_synthetic(kind, params, seed=0):
    """Seeded synthetic graphs.

    gnp:          G(n, p) via networkx.fast_gnp_random_graph (n, p)
    regular-ish:  random graph with every degree in {d - 1, d} (n, d); exactly d-regular when n * d is even
    clique-chain: `cliques` cliques of `size` vertices, consecutive ones joined by one edge,
                  vertex ids shuffled by the seed (cliques, size)
    hard:         the deterministic probing instance (n)
    """
    params = dict(params)
    seed = int(seed)
    if seed < 0:
        raise ValueError('Seed must be nonnegative, got %d.' % seed)
    missing = [key for key in REQUIRED_PARAMS.get(kind, ()) if key not in params]
    if missing:
        raise ValueError('Missing %s parameters: %s' % (kind, ', '.join(missing)))

    if kind == 'gnp':
        n, p = int(params['n']), float(params['p'])
        if n < 1 or not 0 <= p <= 1:
            raise ValueError('gnp needs n >= 1 and p in [0, 1], got n = %s, p = %s.' % (params['n'], params['p']))
        return _from_networkx(n, nx.fast_gnp_random_graph(n, p, seed=seed))
    elif kind == 'regular-ish':
        n, d = int(params['n']), int(params['d'])
        if n < 2 or not 0 <= d < n:
            raise ValueError('regular-ish needs n >= 2 and 0 <= d < n, got n = %s, d = %s.' % (n, d))
        if n * d % 2 == 0:
            return _from_networkx(n, nx.random_regular_graph(d, n, seed=seed))
        # Odd degree sum: build on n + 1 vertices and drop the extra one
        g = nx.random_regular_graph(d, n + 1, seed=seed)
        g.remove_node(n)
        return _from_networkx(n, g)
    elif kind == 'clique-chain':
        cliques, size = int(params['cliques']), int(params['size'])
        if cliques < 1 or size < 1:
            raise ValueError('clique-chain needs cliques >= 1 and size >= 1, got %s, %s.' % (cliques, size))
        n = cliques * size
        perm = np.random.default_rng(seed).permutation(n)
        edges = []
        for c in range(cliques):
            base = c * size
            edges.extend((base + a, base + b) for a in range(size) for b in range(a + 1, size))
            if c > 0:
                edges.append((base - 1, base))
        return Graph(n, [(perm[u], perm[v]) for u, v in edges])
    elif kind == 'hard':
        return gen_hard_instance(int(params['n']))
    else:
        raise ValueError('Unknown synthetic graph kind: %s' % kind)
