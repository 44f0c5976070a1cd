# -*- coding: utf-8 -*-

import numpy as np


def as_vertex_mask(vertices, n):
    """Turns a vertex collection (iterable of ids or a bool mask) into a bool mask of length n."""
    if isinstance(vertices, np.ndarray) and vertices.dtype == np.bool_:
        if vertices.shape != (n, ):
            raise ValueError('Vertex mask has shape %s, expected (%d,).' % (vertices.shape, n))
        return vertices

    mask = np.zeros(n, dtype=np.bool_)
    ids = np.fromiter((int(v) for v in vertices), dtype=np.int64)
    if ids.size:
        if ids.min() < 0 or ids.max() >= n:
            raise ValueError('Vertex set is not contained in the vertex range [0, %d).' % n)
        mask[ids] = True

    return mask


class Graph(object):
    """Immutable undirected simple graph on the vertex ids 0..n-1.

    Edges are stored once as canonical pairs (u < v) sorted lexicographically, and
    adjacency is kept in CSR form (indptr/indices). Self-loops and duplicate pairs
    given to the constructor are dropped and counted in n_self_loops / n_duplicates.
    """
    def __init__(self, n, edges=()):
        n = int(n)
        if n < 0:
            raise ValueError('Vertex count must be nonnegative, got %d.' % n)

        edges = np.asarray(edges if isinstance(edges, np.ndarray) else list(edges), dtype=np.int64).reshape(-1, 2)
        if edges.size and (edges.min() < 0 or edges.max() >= n):
            raise ValueError('Edge endpoint out of the vertex range [0, %d).' % n)

        lo = np.minimum(edges[:, 0], edges[:, 1])
        hi = np.maximum(edges[:, 0], edges[:, 1])
        proper = lo != hi
        keys = np.unique(lo[proper] * max(n, 1) + hi[proper])

        self.n_self_loops = int(edges.shape[0] - np.count_nonzero(proper))
        self.n_duplicates = int(np.count_nonzero(proper) - keys.size)
        self._build(n, keys // max(n, 1), keys % max(n, 1))

    @classmethod
    def _from_canonical(cls, n, src, dst):
        g = cls.__new__(cls)
        g.n_self_loops = 0
        g.n_duplicates = 0
        g._build(n, src, dst)
        return g

    def _build(self, n, src, dst):
        self.n = n
        self.src = np.ascontiguousarray(src, dtype=np.int64)
        self.dst = np.ascontiguousarray(dst, dtype=np.int64)
        self.m = int(self.src.size)
        self.src.flags.writeable = False
        self.dst.flags.writeable = False

        heads = np.concatenate([self.src, self.dst])
        tails = np.concatenate([self.dst, self.src])
        order = np.lexsort((tails, heads))
        self.indices = tails[order]
        self.indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(heads, minlength=n), out=self.indptr[1:])
        self.indices.flags.writeable = False
        self.indptr.flags.writeable = False

        self._adjacency = None
        self._ranks = {}

    def __len__(self):
        return self.n

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.src, other.src) and np.array_equal(self.dst, other.dst)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def __repr__(self):
        return 'Graph(n=%d, m=%d)' % (self.n, self.m)

    def degrees(self):
        return np.diff(self.indptr)

    def degree(self, v):
        return int(self.indptr[v + 1] - self.indptr[v])

    def neighbors(self, v):
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    def adjacency(self):
        """Per-vertex neighbor lists as plain Python lists, built once and cached."""
        if self._adjacency is None:
            flat = self.indices.tolist()
            bounds = self.indptr.tolist()
            self._adjacency = [flat[bounds[v]:bounds[v + 1]] for v in range(self.n)]

        return self._adjacency

    def has_edge(self, u, v):
        if u == v or not (0 <= u < self.n and 0 <= v < self.n):
            return False
        row = self.neighbors(u)
        idx = np.searchsorted(row, v)
        return bool(idx < row.size and row[idx] == v)

    def edges(self):
        return zip(self.src.tolist(), self.dst.tolist())

    def edge_array(self):
        return np.stack([self.src, self.dst], axis=1)

    def edge_ranks(self, hasher):
        """Per-edge ranks under the given hasher, aligned with edge_array(); cached per hasher key."""
        key = hasher.key
        if key not in self._ranks:
            ranks = hasher.ranks(self.src, self.dst)
            ranks.flags.writeable = False
            self._ranks[key] = ranks

        return self._ranks[key]

    def edge_subgraph(self, edge_mask):
        """Subgraph on the same vertex ids keeping the edges selected by a bool mask over edge_array()."""
        edge_mask = np.asarray(edge_mask, dtype=np.bool_)
        return Graph._from_canonical(self.n, self.src[edge_mask], self.dst[edge_mask])

    def induced_edge_mask(self, vertices):
        mask = as_vertex_mask(vertices, self.n)
        return mask[self.src] & mask[self.dst]

    def induced(self, vertices):
        """Subgraph induced by a vertex set; the vertex ids (and n) are unchanged."""
        return self.edge_subgraph(self.induced_edge_mask(vertices))


# /////////////////////////////// = End of Graph Class Definition = /////////////////////////////// #


class PartialLabels(object):
    """Labels for the vertices outside an exclusion set, as produced by the exclusive labeling.

    `order` lists the labeled vertices in removal order; indexing a vertex of the
    exclusion set raises KeyError.
    """
    def __init__(self, n, excluded, labels, order):
        self.n = n
        self.excluded = excluded
        self.labels = labels
        self.order = order

    def __getitem__(self, v):
        if self.excluded[v]:
            raise KeyError(v)
        return self.labels[v]

    def __contains__(self, v):
        return 0 <= v < self.n and not self.excluded[v]

    def __len__(self):
        return len(self.order)

    def __eq__(self, other):
        if isinstance(other, PartialLabels):
            return dict(self.items()) == dict(other.items())
        if isinstance(other, dict):
            return dict(self.items()) == other
        return NotImplemented

    __hash__ = None

    def items(self):
        return [(v, self.labels[v]) for v in sorted(self.order)]

    def to_array(self, fill=-1):
        labels = np.asarray(self.labels, dtype=np.int64).copy()
        labels[self.excluded] = fill
        return labels


# ////////////////////////////// = End of PartialLabels Class Definition = ////////////////////////////// #
