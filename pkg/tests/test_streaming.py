# -*- coding: utf-8 -*-

import numpy as np
import pytest
import random

from models.graph import Graph
from models.peeling import peel_coreness
from models.sketch import SketchParams, run_sketch
from models.streaming import run_stream, stream_finalize, stream_insert, stream_new
from utils.generators import gen_synthetic
from utils.metrics import space_bound, within_bounds

K5 = [(u, v) for u in range(5) for v in range(u + 1, 5)]


def _practical(seed=0, p0=.2):
    return SketchParams(epsilon=.5, mode='practical', T=3, p0=p0, seed=seed)


def test_empty_stream():
    state = stream_new(5, SketchParams())
    labels, stats = stream_finalize(state)
    assert labels.tolist() == [0.] * 5
    assert state.retained_edges() == 0
    assert stats.extra['peak_edges'] == 0


def test_single_edge_is_not_promoted_mid_stream():
    state = stream_new(2, SketchParams())
    stream_insert(state, 1, 0)
    assert state.membership.tolist() == [-1, -1]
    labels, _ = stream_finalize(state)
    assert labels.tolist() == [.5, .5]


def test_triangle():
    labels, stats, _ = run_stream(3, SketchParams(epsilon=.5), [(0, 1), (1, 2), (2, 0)])
    assert labels.tolist() == [1., 1., 1.]
    assert stats.extra['insertions'] == 3


@pytest.mark.parametrize('seed', range(10))
def test_clique_labels_do_not_depend_on_order(seed):
    edges = list(K5)
    random.Random(seed).shuffle(edges)
    labels, _, _ = run_stream(5, SketchParams(epsilon=.5), edges)
    assert labels.tolist() == [2.] * 5


def test_finalize_leaves_state_untouched():
    state = stream_new(5, SketchParams())
    for u, v in K5:
        stream_insert(state, u, v)
    first, _ = stream_finalize(state)
    second, _ = stream_finalize(state)
    assert np.array_equal(first, second)
    assert state.membership.tolist() == [-1] * 5


@pytest.mark.parametrize('seed', range(5))
def test_stream_matches_batch_when_sampling_everything(seed):
    g = gen_synthetic('gnp', {'n': 200, 'p': .05}, seed=seed)
    params = SketchParams(epsilon=.5, seed=seed)
    assert params.schedule(g.n).levels == 1
    edges = list(g.edges())
    random.Random(seed).shuffle(edges)
    labels, _, _ = run_stream(g.n, params, edges)
    batch, _ = run_sketch(g, params)
    assert np.array_equal(labels, batch)
    assert np.allclose(labels, .5 * peel_coreness(g))


def test_duplicate_insertions_change_nothing():
    g = gen_synthetic('gnp', {'n': 80, 'p': .25}, seed=1)
    state = stream_new(g.n, _practical())
    for u, v in g.edges():
        stream_insert(state, u, v)
    edges = [set(e) for e in state.edges]
    membership = state.membership.copy()
    labels = state.labels.copy()

    for u, v in g.edges():
        stream_insert(state, v, u)
    assert [set(e) for e in state.edges] == edges
    assert np.array_equal(state.membership, membership)
    assert np.array_equal(state.labels, labels)


@pytest.mark.parametrize('seed', range(3))
def test_promotions_are_final(seed):
    g = gen_synthetic('gnp', {'n': 60, 'p': .3}, seed=seed)
    state = stream_new(g.n, _practical(seed))
    first_level = np.full(g.n, -1, dtype=np.int64)
    first_label = np.zeros(g.n)
    for u, v in g.edges():
        stream_insert(state, u, v)
        fresh = (first_level < 0) & (state.membership >= 0)
        first_level[fresh] = state.membership[fresh]
        first_label[fresh] = state.labels[fresh]
        assert np.array_equal(state.membership[first_level >= 0], first_level[first_level >= 0])
        assert np.array_equal(state.labels[first_level >= 0], first_label[first_level >= 0])
    assert np.any(first_level >= 0)


@pytest.mark.parametrize('seed', range(3))
def test_retained_edges_respect_rank_and_exclusion(seed):
    g = gen_synthetic('gnp', {'n': 60, 'p': .3}, seed=10 + seed)
    _, _, state = run_stream(g.n, _practical(seed), g.edges())
    for j in range(state.sched.levels):
        for u, v in state.edges[j]:
            assert state.hasher.rank(u, v) <= state.sched[j]
            assert not (state.excluded_at(j, u) and state.excluded_at(j, v))
        degrees = Graph(g.n, list(state.edges[j])).degrees()
        assert all(len(state.adj[j].get(v, ())) == degrees[v] for v in range(g.n))
    assert state.retained_edges() == sum(len(e) for e in state.edges)


@pytest.mark.parametrize('seed', range(3))
def test_relabel_gate_does_not_change_results(seed):
    g = gen_synthetic('gnp', {'n': 60, 'p': .3}, seed=20 + seed)
    gated, _, gated_state = run_stream(g.n, _practical(seed), g.edges(), relabel_gate=True)
    plain, _, plain_state = run_stream(g.n, _practical(seed), g.edges(), relabel_gate=False)
    assert np.array_equal(gated, plain)
    assert np.array_equal(gated_state.membership, plain_state.membership)
    assert gated_state.n_relabels <= plain_state.n_relabels


def test_checkpoints_trace_retained_edges():
    g = gen_synthetic('gnp', {'n': 60, 'p': .3}, seed=0)
    _, stats, state = run_stream(g.n, _practical(), g.edges(), checkpoints=4)
    trace = stats.extra['checkpoints']
    assert len(trace) == 4
    assert trace[-1] == (g.m, state.retained_edges())
    assert all(retained <= stats.extra['peak_edges'] for _, retained in trace)


@pytest.mark.parametrize('u, v', [(3, 3), (0, 5), (-1, 2)])
def test_stream_rejects_bad_edges(u, v):
    state = stream_new(5, SketchParams())
    with pytest.raises(ValueError):
        stream_insert(state, u, v)


def test_stream_needs_two_vertices():
    with pytest.raises(ValueError):
        stream_new(1, SketchParams())


@pytest.mark.slow
def test_stream_accuracy_and_space_on_random_graph():
    n, epsilon = 20000, .5
    g = gen_synthetic('gnp', {'n': n, 'p': .002}, seed=0)
    exact = peel_coreness(g)
    edges = list(g.edges())
    for seed in range(3):
        random.Random(seed).shuffle(edges)
        labels, stats, _ = run_stream(n, SketchParams(epsilon=epsilon, seed=seed), edges, checkpoints=10)
        assert within_bounds(exact, labels, epsilon) >= .99
        assert all(retained <= space_bound(n, epsilon) for _, retained in stats.extra['checkpoints'])
