# -*- coding: utf-8 -*-

import numpy as np

PERCENTILES = (50, 60, 70, 80, 90)
PERCENTILE_NAMES = ('median', 'p60', 'p70', 'p80', 'p90')


class AverageMeter(object):
    """Running mean of a scalar, e.g. one bench metric over the runs of a cell"""
    def __init__(self):
        self.reset()

    def reset(self):
        self.val = 0
        self.avg = 0
        self.sum = 0
        self.count = 0

    def update(self, val, n=1):
        if val is None:
            return
        self.val = val
        self.sum += val * n
        self.count += n
        self.avg = self.sum / self.count


# ////////////////////////////// = End of AverageMeter Class Definition = ////////////////////////////// #


class ErrorReport(object):
    """Relative label errors over the vertices of coreness >= min_core, summarized by nearest-rank percentiles.

    Percentiles are None when no vertex qualifies (`empty`).
    """
    def __init__(self, errors, min_core):
        self.errors = np.sort(np.asarray(errors, dtype=np.float64))
        self.min_core = min_core
        self.count = int(self.errors.size)
        self.empty = self.count == 0
        values = [nearest_rank(self.errors, q) for q in PERCENTILES]
        self.median, self.p60, self.p70, self.p80, self.p90 = values
        self.max = float(self.errors[-1]) if self.count else None

    def percentiles(self):
        return dict(zip(PERCENTILE_NAMES, (self.median, self.p60, self.p70, self.p80, self.p90)))

    def to_record(self):
        record = {'count': self.count, 'min_core': self.min_core, 'max': self.max}
        record.update(self.percentiles())
        return record

    def __repr__(self):
        if self.empty:
            return 'ErrorReport(empty)'
        return 'ErrorReport(count=%d, median=%.4f, p90=%.4f)' % (self.count, self.median, self.p90)


# ////////////////////////////// = End of ErrorReport Class Definition = ////////////////////////////// #


def nearest_rank(sorted_values, q):
    """The ceil(q/100 * N)-th smallest value (1-based); q is an integer percent."""
    N = len(sorted_values)
    if N == 0:
        return None
    rank = max(1, -(-q * N // 100))
    return float(sorted_values[rank - 1])


def relative_errors(exact, approx, min_core=5):
    exact = np.asarray(exact)
    approx = np.asarray(approx, dtype=np.float64)
    if exact.shape != approx.shape:
        raise ValueError('Label vectors differ in length: %d exact vs %d approximate.' % (exact.size, approx.size))
    if min_core < 1:
        raise ValueError('min_core must be >= 1, got %s.' % min_core)

    mask = exact >= min_core
    return np.abs(approx[mask] - exact[mask]) / exact[mask]


def error_percentiles(exact, approx, min_core=5):
    return ErrorReport(relative_errors(exact, approx, min_core), min_core)


def within_bounds(exact, approx, epsilon):
    """Fraction of vertices with (1 - 2 eps) C(v) <= label(v) <= C(v)."""
    exact = np.asarray(exact, dtype=np.float64)
    approx = np.asarray(approx, dtype=np.float64)
    if exact.size == 0:
        return 1.
    tol = 1e-9 * np.maximum(exact, 1.)
    ok = (approx >= (1 - 2 * epsilon) * exact - tol) & (approx <= exact + tol)
    return float(np.count_nonzero(ok)) / exact.size


def space_bound(n, epsilon, per_level=False):
    """384 (1 + eps)^2 / eps^2 * n * ln(n)^k with k = 2 (whole sketch) or 1 (a single level)."""
    log_n = np.log(n)
    return 384. * (1 + epsilon)**2 / epsilon**2 * n * (log_n if per_level else log_n**2)
