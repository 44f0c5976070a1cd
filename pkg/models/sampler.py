# -*- coding: utf-8 -*-

import bisect
import hashlib
import math
import numpy as np
import scipy.stats
import struct

from models.graph import as_vertex_mask

UINT64_MASK = (1 << 64) - 1


class EdgeHasher(object):
    """Seeded map from an undirected edge to a rank in [0, 1).

    The rank is a keyed 64-bit blake2b digest of the canonical pair (min, max),
    keeping its top 53 bits so the float is exact and strictly below 1. The
    optional salt derives independent hashers (e.g. for machine partitioning)
    from the same seed.
    """
    def __init__(self, seed=0, salt=b''):
        self.seed = int(seed) & UINT64_MASK
        self.salt = salt if isinstance(salt, bytes) else str(salt).encode('utf-8')
        if len(self.salt) > hashlib.blake2b.PERSON_SIZE:
            raise ValueError('Hasher salt is limited to %d bytes.' % hashlib.blake2b.PERSON_SIZE)
        self.key = (self.seed, self.salt)
        self._seed_bytes = struct.pack('<Q', self.seed)

    def __repr__(self):
        return 'EdgeHasher(seed=%d, salt=%r)' % (self.seed, self.salt)

    def hash64(self, u, v):
        if u == v:
            raise ValueError('Edge endpoints must differ, got (%d, %d).' % (u, v))
        lo, hi = (u, v) if u < v else (v, u)
        digest = hashlib.blake2b(struct.pack('<QQ', lo, hi), digest_size=8, key=self._seed_bytes,
                                 person=self.salt).digest()
        return struct.unpack('<Q', digest)[0]

    def rank(self, u, v):
        return (self.hash64(u, v) >> 11) * 2.0**-53

    def ranks(self, src, dst):
        src = np.asarray(src, dtype=np.int64).tolist()
        dst = np.asarray(dst, dtype=np.int64).tolist()
        return np.fromiter((self.rank(u, v) for u, v in zip(src, dst)), dtype=np.float64, count=len(src))


# ////////////////////////////// = End of EdgeHasher Class Definition = ////////////////////////////// #


def edge_rank(hasher, u, v):
    return hasher.rank(u, v)


def rank_uniformity(ranks):
    """Kolmogorov-Smirnov distance between a sample of ranks and U[0, 1)."""
    ranks = np.asarray(ranks, dtype=np.float64)
    if ranks.size == 0:
        return 0.
    return float(scipy.stats.kstest(ranks, 'uniform').statistic)


class LevelSchedule(object):
    """Geometric sampling probabilities p_j = min(1, p0 * growth^j).

    With `levels` unset the schedule runs until p_j first reaches 1. A shorter
    explicit `levels` cap forces the last level to p = 1 so that every vertex can
    still be labeled.
    """
    def __init__(self, p0, growth=2., levels=None):
        if not 0 < p0 <= 1:
            raise ValueError('p0 must lie in (0, 1], got %s.' % p0)
        if not growth > 1:
            raise ValueError('Growth factor must be > 1, got %s.' % growth)

        self.p0 = float(p0)
        self.growth = float(growth)

        probabilities = []
        j = 0
        while True:
            p = min(1., self.p0 * self.growth**j)
            probabilities.append(p)
            if p >= 1.:
                break
            j += 1

        if levels is not None:
            if levels < 1:
                raise ValueError('A schedule needs at least one level, got %d.' % levels)
            if levels < len(probabilities):
                probabilities = probabilities[:levels]
                probabilities[-1] = 1.
        self.probabilities = probabilities
        self.levels = len(probabilities)

    def __len__(self):
        return self.levels

    def __getitem__(self, j):
        return self.probabilities[j]

    def __repr__(self):
        return 'LevelSchedule(p0=%g, growth=%g, levels=%d)' % (self.p0, self.growth, self.levels)

    def level_of(self, r):
        return bisect.bisect_left(self.probabilities, r)

    def levels_of(self, ranks):
        return np.searchsorted(np.asarray(self.probabilities), ranks, side='left')


# ///////////////////////////// = End of LevelSchedule Class Definition = ///////////////////////////// #


def level_of(r, sched):
    """Smallest level j whose probability admits the rank r."""
    return sched.level_of(r)


def derived_levels(p0, growth):
    if p0 >= 1:
        return 1
    return int(math.ceil(math.log(1. / p0) / math.log(growth) - 1e-12)) + 1


def sample_level(g, hasher, sched, j, excluded=()):
    """Edges of g with rank <= p_j, minus those with both endpoints in `excluded`."""
    if not 0 <= j < sched.levels:
        raise ValueError('Level %d outside the schedule [0, %d).' % (j, sched.levels))

    excluded = as_vertex_mask(excluded, g.n)
    keep = g.edge_ranks(hasher) <= sched[j]
    keep &= ~(excluded[g.src] & excluded[g.dst])
    return g.edge_subgraph(keep)
