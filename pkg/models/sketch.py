# -*- coding: utf-8 -*-

import math
import numpy as np

from datetime import datetime as dt

from models.graph import as_vertex_mask
from models.peeling import exclusive_coreness_labeling
from models.sampler import EdgeHasher, LevelSchedule


class InvariantViolation(RuntimeError):
    pass


# Constants (p0, lower, upper) multiplying log(n) / eps^2; p0 is further divided by n
THRESHOLD_PROFILES = {
    'sketch': (96., 192., 384.),
    'turnstile': (12., 24., 48.),
}


class SketchParams(object):
    """Accuracy, threshold mode and seed of the adaptive sketch.

    theory:    p0 = a log n / (eps^2 n), L = b log n / eps^2, U = c log n / eps^2, growth 2,
               with (a, b, c) from the threshold profile.
    practical: L = T, U = 2T, growth M; p0 keeps the theory value unless overridden.
    """
    def __init__(self,
                 epsilon=.5,
                 mode='theory',
                 T=None,
                 M=2.,
                 seed=0,
                 profile='sketch',
                 p0=None,
                 max_levels=None,
                 log_base=None):
        if not 0 < epsilon <= 1:
            raise ValueError('epsilon must lie in (0, 1], got %s.' % epsilon)
        if mode not in ('theory', 'practical'):
            raise ValueError('Unknown sketch mode: %s' % mode)
        if profile not in THRESHOLD_PROFILES:
            raise ValueError('Unknown threshold profile: %s' % profile)
        if mode == 'practical':
            if T is None or int(T) != T or T < 1:
                raise ValueError('Practical mode needs a positive integer T, got %s.' % T)
            if not M > 1:
                raise ValueError('Practical mode needs M > 1, got %s.' % M)
        if p0 is not None and not 0 < p0 <= 1:
            raise ValueError('p0 override must lie in (0, 1], got %s.' % p0)
        if max_levels is not None and max_levels < 1:
            raise ValueError('max_levels must be positive, got %s.' % max_levels)
        if log_base is not None and not log_base > 1:
            raise ValueError('log_base must be > 1, got %s.' % log_base)

        self.epsilon = float(epsilon)
        self.mode = mode
        self.T = int(T) if T is not None else None
        self.M = float(M) if mode == 'practical' else 2.
        self.seed = int(seed)
        self.profile = profile
        self.p0 = p0
        self.max_levels = max_levels
        self.log_base = log_base
        self.hasher = EdgeHasher(self.seed)

    @classmethod
    def from_cfg(cls, cfg, **overrides):
        kwargs = {
            'epsilon': cfg.SKETCH.EPSILON,
            'mode': cfg.SKETCH.MODE,
            'T': cfg.SKETCH.T,
            'M': cfg.SKETCH.M,
            'seed': cfg.CONST.RNG_SEED,
            'profile': cfg.SKETCH.PROFILE,
            'p0': cfg.SKETCH.P0,
            'max_levels': cfg.SKETCH.MAX_LEVELS,
            'log_base': cfg.CONST.LOG_BASE,
        }
        kwargs.update(overrides)
        return cls(**kwargs)

    def replace(self, **overrides):
        kwargs = {
            'epsilon': self.epsilon,
            'mode': self.mode,
            'T': self.T,
            'M': self.M,
            'seed': self.seed,
            'profile': self.profile,
            'p0': self.p0,
            'max_levels': self.max_levels,
            'log_base': self.log_base,
        }
        kwargs.update(overrides)
        return SketchParams(**kwargs)

    def __repr__(self):
        if self.mode == 'theory':
            return 'SketchParams(epsilon=%g, theory, profile=%s, seed=%d)' % (self.epsilon, self.profile, self.seed)
        return 'SketchParams(epsilon=%g, practical, T=%d, M=%g, profile=%s, seed=%d)' % (
            self.epsilon, self.T, self.M, self.profile, self.seed)

    def log(self, n):
        return math.log(n) if self.log_base is None else math.log(n, self.log_base)

    def thresholds(self, n):
        """Lower (promotion) and upper (fallback) label thresholds L, U."""
        if self.mode == 'practical':
            return float(self.T), 2. * self.T

        _, lower, upper = THRESHOLD_PROFILES[self.profile]
        scale = self.log(n) / self.epsilon**2
        return lower * scale, upper * scale

    def base_probability(self, n):
        if self.p0 is not None:
            return float(self.p0)
        a, _, _ = THRESHOLD_PROFILES[self.profile]
        return min(1., a * self.log(n) / (self.epsilon**2 * n))

    def schedule(self, n):
        return LevelSchedule(self.base_probability(n), self.M, self.max_levels)

    def recovery_capacity(self, n):
        if self.mode == 'practical':
            return 2 * self.T
        _, lower, _ = THRESHOLD_PROFILES[self.profile]
        return int(math.ceil(lower * self.log(n) / self.epsilon**2))


# ///////////////////////////// = End of SketchParams Class Definition = ///////////////////////////// #


class SpaceStats(object):
    """Edges held by the sampled graphs H_j, level by level."""
    def __init__(self, per_level_edges, **extra):
        self.per_level_edges = [int(e) for e in per_level_edges]
        self.extra = extra

    @property
    def levels(self):
        return len(self.per_level_edges)

    @property
    def max_level_edges(self):
        return max(self.per_level_edges) if self.per_level_edges else 0

    @property
    def sum_level_edges(self):
        return sum(self.per_level_edges)

    def to_record(self):
        record = {
            'levels': self.levels,
            'per_level_edges': list(self.per_level_edges),
            'max_level_edges': self.max_level_edges,
            'sum_level_edges': self.sum_level_edges,
        }
        record.update(self.extra)
        return record


# ////////////////////////////// = End of SpaceStats Class Definition = ////////////////////////////// #


def assign_label(l, p_j, j, n, params):
    """Label of a vertex promoted at level j with exclusive label l.

    (1 - eps) l / p_j while l <= U; above U the label saturates at (1 - eps) U / p_j,
    which in theory mode is 2 (1 - eps) n / 2^(j - 1).
    """
    lower, upper = params.thresholds(n)
    if not (l >= lower or p_j >= 1):
        raise InvariantViolation('Vertex label %s at level %d is below the threshold %g with p = %g.' %
                                 (l, j, lower, p_j))

    if l <= upper:
        return (1 - params.epsilon) * l / p_j
    return (1 - params.epsilon) * upper / p_j


def label_level(h, excluded, j, p_j, n, params, allow_final=True):
    """Exclusive labeling of H_j followed by promotion of the threshold-crossers.

    Returns the exclusive labeling and the promoted (vertex, label) pairs in
    removal order. Vertices are promoted when their exclusive label reaches L,
    or unconditionally at p_j = 1 if `allow_final` is set. Below p = 1 the peeling is
    skipped (partial is None) when no candidate has H_j degree >= L, since the
    exclusive label never exceeds the degree.
    """
    lower, _ = params.thresholds(n)
    final = allow_final and p_j >= 1
    excluded = as_vertex_mask(excluded, h.n)
    if not final and not np.any(h.degrees()[~excluded] >= lower):
        return None, []

    partial = exclusive_coreness_labeling(h, excluded)

    promoted = []
    for v in partial.order:
        l = partial.labels[v]
        if final or l >= lower:
            promoted.append((v, assign_label(l, p_j, j, n, params)))

    return partial, promoted


def run_sketch(g, params, return_membership=False):
    """Batch adaptive sketch.

    Level j samples the edges with rank <= p_j that are not induced by the vertices
    already labeled, runs the exclusive labeling protecting those vertices, and
    labels every vertex that crossed the threshold. Stops once all vertices carry a
    label, which is at the latest at the p = 1 level.
    """
    n = g.n
    if n < 2:
        raise ValueError('The sketch needs at least 2 vertices, got n = %d.' % n)

    sched = params.schedule(n)
    ranks = g.edge_ranks(params.hasher)
    labels = np.zeros(n, dtype=np.float64)
    membership = np.full(n, -1, dtype=np.int64)
    labeled = np.zeros(n, dtype=np.bool_)

    per_level_edges = []
    for j in range(sched.levels):
        p_j = sched[j]
        h = g.edge_subgraph((ranks <= p_j) & ~(labeled[g.src] & labeled[g.dst]))
        per_level_edges.append(h.m)

        _, promoted = label_level(h, labeled, j, p_j, n, params)
        for v, label in promoted:
            labels[v] = label
            membership[v] = j
        labeled[membership == j] = True
        print('[DEBUG] %s Sketch level %d/%d p = %.6f |H| = %d promoted = %d remaining = %d' %
              (dt.now(), j + 1, sched.levels, p_j, h.m, len(promoted), n - np.count_nonzero(labeled)))
        if labeled.all():
            break

    stats = SpaceStats(per_level_edges)
    if return_membership:
        return labels, stats, membership
    return labels, stats
