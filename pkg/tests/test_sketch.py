# -*- coding: utf-8 -*-

import math
import numpy as np
import pytest

from models.graph import Graph
from models.peeling import peel_coreness
from models.sampler import derived_levels, sample_level
from models.sketch import InvariantViolation, SketchParams, SpaceStats, assign_label, label_level, run_sketch
from utils.generators import gen_synthetic
from utils.metrics import space_bound, within_bounds


def _planted_clique(n, size, p, seed):
    g = gen_synthetic('gnp', {'n': n, 'p': p}, seed=seed)
    clique = [(u, v) for u in range(size) for v in range(u + 1, size)]
    return Graph(n, list(g.edges()) + clique)


def test_params_theory_thresholds():
    params = SketchParams(epsilon=.5)
    lower, upper = params.thresholds(1000)
    assert lower == pytest.approx(192 * math.log(1000) / .25)
    assert upper == pytest.approx(2 * lower)
    assert params.base_probability(10**6) == pytest.approx(96 * math.log(10**6) / (.25 * 10**6))
    assert params.base_probability(10) == 1.
    assert params.M == 2.


def test_params_practical_thresholds():
    params = SketchParams(epsilon=.5, mode='practical', T=3, M=4.)
    assert params.thresholds(10**6) == (3., 6.)
    assert params.schedule(10**6).growth == 4.
    assert params.recovery_capacity(10**6) == 6
    assert params.base_probability(10**6) == SketchParams(epsilon=.5).base_probability(10**6)


def test_params_turnstile_profile_and_overrides():
    params = SketchParams(epsilon=.5, profile='turnstile')
    assert params.thresholds(100) == pytest.approx((24 * math.log(100) / .25, 48 * math.log(100) / .25))
    assert params.recovery_capacity(100) == math.ceil(24 * math.log(100) / .25)
    assert SketchParams(p0=.2).schedule(10**6).probabilities == pytest.approx([.2, .4, .8, 1.])
    assert SketchParams(p0=.01, max_levels=2).schedule(10**6).probabilities == [.01, 1.]
    assert SketchParams(log_base=2).thresholds(1024)[0] == pytest.approx(192 * 10 / .25)
    assert params.replace(seed=5).seed == 5
    assert params.replace(seed=5).profile == 'turnstile'


@pytest.mark.parametrize('kwargs', [
    {'epsilon': 0},
    {'epsilon': 1.5},
    {'mode': 'fast'},
    {'mode': 'practical'},
    {'mode': 'practical', 'T': 3, 'M': 1.},
    {'profile': 'tiny'},
    {'p0': 0},
    {'max_levels': 0},
])
def test_params_reject_bad_values(kwargs):
    with pytest.raises(ValueError):
        SketchParams(**kwargs)


def test_params_from_cfg(cfg):
    cfg.SKETCH.MODE = 'practical'
    cfg.SKETCH.T = 4
    cfg.CONST.RNG_SEED = 9
    params = SketchParams.from_cfg(cfg, M=3.)
    assert (params.mode, params.T, params.M, params.seed) == ('practical', 4, 3., 9)


def test_assign_label_below_and_at_upper_threshold():
    params = SketchParams(epsilon=.5, mode='practical', T=3)
    assert assign_label(3, .5, 1, 100, params) == pytest.approx(3.)
    assert assign_label(6, .5, 1, 100, params) == pytest.approx(6.)
    assert assign_label(9, .5, 1, 100, params) == pytest.approx(6.)
    assert assign_label(1, 1., 2, 100, params) == pytest.approx(.5)
    with pytest.raises(InvariantViolation):
        assign_label(2, .5, 1, 100, params)


@pytest.mark.parametrize('j', range(6))
def test_fallback_label_matches_closed_form(j):
    n = 2**16
    params = SketchParams(epsilon=.5)
    p_j = params.base_probability(n) * 2**j
    _, upper = params.thresholds(n)
    label = assign_label(upper + 1, p_j, j, n, params)
    assert label == pytest.approx(2 * (1 - .5) * n / 2**(j - 1))


def test_fallback_label_vanishes_at_epsilon_one():
    params = SketchParams(epsilon=1.)
    _, upper = params.thresholds(1000)
    assert assign_label(upper + 1, .5, 0, 1000, params) == 0.


def test_label_level_gates_levels_without_candidates():
    params = SketchParams(epsilon=.5, mode='practical', T=3)
    path = Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert label_level(path, (), 0, .5, 4, params) == (None, [])
    partial, promoted = label_level(path, (), 1, 1., 4, params)
    assert [v for v, _ in promoted] == partial.order
    assert all(label == pytest.approx(.5) for _, label in promoted)


def test_triangle_in_theory_mode():
    g = Graph(3, [(0, 1), (1, 2), (0, 2)])
    labels, stats = run_sketch(g, SketchParams(epsilon=.5))
    assert labels.tolist() == [1., 1., 1.]
    assert stats.per_level_edges == [3]


def test_full_probability_gives_scaled_coreness():
    g = gen_synthetic('gnp', {'n': 60, 'p': .2}, seed=3)
    params = SketchParams(epsilon=.3)
    assert params.base_probability(g.n) == 1.
    labels, stats = run_sketch(g, params)
    assert np.allclose(labels, .7 * peel_coreness(g))
    assert stats.levels == 1


def test_sketch_rejects_tiny_graphs():
    with pytest.raises(ValueError):
        run_sketch(Graph(1), SketchParams())


@pytest.mark.parametrize('seed', range(5))
def test_sketch_is_deterministic(seed):
    g = gen_synthetic('gnp', {'n': 300, 'p': .05}, seed=seed)
    params = SketchParams(epsilon=.5, mode='practical', T=3, p0=.05, seed=seed)
    labels_a, stats_a = run_sketch(g, params)
    labels_b, stats_b = run_sketch(g, params.replace())
    assert np.array_equal(labels_a, labels_b)
    assert stats_a.per_level_edges == stats_b.per_level_edges


@pytest.mark.parametrize('seed', range(5))
def test_sketch_levels_and_labels(seed):
    g = gen_synthetic('gnp', {'n': 300, 'p': .05}, seed=100 + seed)
    params = SketchParams(epsilon=.5, mode='practical', T=3, p0=.05, seed=seed)
    sched = params.schedule(g.n)
    labels, stats, membership = run_sketch(g, params, return_membership=True)

    assert stats.levels <= derived_levels(.05, 2.)
    assert np.all(membership >= 0)
    assert np.all(membership < stats.levels)
    for j in range(stats.levels):
        h = sample_level(g, params.hasher, sched, j, np.flatnonzero(membership < j))
        assert h.m == stats.per_level_edges[j]

    early = membership < sched.levels - 1
    assert np.any(early)
    p = np.asarray(sched.probabilities)[membership]
    assert np.all(labels[early] >= (1 - .5) * 3 / p[early] - 1e-9)


def test_space_stats_record():
    stats = SpaceStats([4, 10, 7], peak_edges=12)
    assert (stats.levels, stats.max_level_edges, stats.sum_level_edges) == (3, 10, 21)
    assert stats.to_record() == {
        'levels': 3,
        'per_level_edges': [4, 10, 7],
        'max_level_edges': 10,
        'sum_level_edges': 21,
        'peak_edges': 12
    }


@pytest.mark.slow
def test_sketch_accuracy_and_space_on_random_graph():
    n, epsilon = 20000, .5
    g = gen_synthetic('gnp', {'n': n, 'p': .002}, seed=0)
    exact = peel_coreness(g)
    for seed in range(30):
        labels, stats = run_sketch(g, SketchParams(epsilon=epsilon, seed=seed))
        assert within_bounds(exact, labels, epsilon) >= .99
        assert stats.sum_level_edges <= space_bound(n, epsilon)
        assert stats.max_level_edges <= space_bound(n, epsilon, per_level=True)


@pytest.mark.slow
def test_early_labels_respect_level_bounds():
    n, epsilon = 3200, 1.
    g = _planted_clique(n, 1800, .002, seed=0)
    exact = peel_coreness(g)
    for seed in range(2):
        params = SketchParams(epsilon=epsilon, seed=seed)
        sched = params.schedule(n)
        _, _, membership = run_sketch(g, params, return_membership=True)
        early = np.flatnonzero(membership < sched.levels - 1)
        assert early.size > 0
        for v in early.tolist():
            j = int(membership[v])
            assert exact[v] < 2 * (1 + epsilon) * n / 2**(j - 1)
            assert exact[v] >= 2 * (1 - epsilon) * n / 2**j
