# -*- coding: utf-8 -*-

import io
import numpy as np
import pytest

from models.graph import Graph, as_vertex_mask
from models.peeling import peel_coreness
from utils.data_loaders import (EdgeListParseError, EventType, get_graph, get_stream, load_edge_list,
                                load_edge_list_file, load_events, parse_synthetic_spec)
from utils.generators import gen_hard_instance, gen_synthetic
from utils.writers import emit_edge_list


def test_graph_canonicalizes_and_counts_dropped_pairs():
    g = Graph(4, [(1, 0), (0, 1), (2, 2), (3, 1)])
    assert list(g.edges()) == [(0, 1), (1, 3)]
    assert g.m == 2
    assert g.n_self_loops == 1
    assert g.n_duplicates == 1
    assert g.degrees().tolist() == [1, 2, 0, 1]


def test_graph_adjacency_is_symmetric():
    g = gen_synthetic('gnp', {'n': 60, 'p': .1}, seed=3)
    adj = g.adjacency()
    for u, v in g.edges():
        assert v in adj[u] and u in adj[v]
    assert int(g.degrees().sum()) == 2 * g.m
    assert all(g.has_edge(v, u) for u, v in g.edges())
    assert not g.has_edge(0, 0)


def test_graph_rejects_out_of_range_endpoints():
    with pytest.raises(ValueError):
        Graph(3, [(0, 3)])
    with pytest.raises(ValueError):
        Graph(3, [(-1, 2)])


def test_graph_edge_arrays_are_read_only():
    g = Graph(3, [(0, 1)])
    with pytest.raises(ValueError):
        g.src[0] = 2


def test_induced_keeps_vertex_ids():
    g = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
    h = g.induced([1, 2, 3])
    assert h.n == 5
    assert list(h.edges()) == [(1, 2), (2, 3)]
    assert h == Graph(5, [(2, 3), (1, 2)])
    assert h != g


def test_as_vertex_mask():
    assert as_vertex_mask([0, 2], 3).tolist() == [True, False, True]
    assert as_vertex_mask((), 2).tolist() == [False, False]
    with pytest.raises(ValueError):
        as_vertex_mask([3], 3)
    with pytest.raises(ValueError):
        as_vertex_mask(np.zeros(2, dtype=np.bool_), 3)


def test_load_edge_list_triangle():
    g = load_edge_list('0 1\n1 2\n2 0\n')
    assert (g.n, g.m) == (3, 3)
    assert peel_coreness(g).tolist() == [2, 2, 2]


def test_load_edge_list_drops_comments_loops_and_duplicates():
    stats = {}
    g = load_edge_list('# FromNodeId ToNodeId\n0 1\n\n1 0\n2 2\n', stats=stats)
    assert (g.n, g.m) == (3, 1)
    assert stats == {'edge_lines': 3, 'self_loops': 1, 'duplicates': 1}


def test_load_edge_list_num_vertices():
    assert load_edge_list('0 1\n', num_vertices=5).n == 5
    with pytest.raises(ValueError):
        load_edge_list('0 4\n', num_vertices=3)


def test_load_edge_list_empty():
    g = load_edge_list('')
    assert (g.n, g.m) == (0, 0)


@pytest.mark.parametrize('text, line_no', [
    ('0 x\n', 1),
    ('0 1\n1 2 3\n', 2),
    ('# header\n0 1\n-1 2\n', 3),
    ('0 1\n\n7\n', 3),
])
def test_load_edge_list_reports_bad_line(text, line_no):
    with pytest.raises(EdgeListParseError) as ex:
        load_edge_list(text)
    assert ex.value.line_no == line_no
    assert isinstance(ex.value, ValueError)


def test_load_edge_list_accepts_tab_separated_file_objects():
    g = load_edge_list(io.StringIO('0\t1\n1\t2\n'))
    assert list(g.edges()) == [(0, 1), (1, 2)]


def test_load_events():
    events = load_events('+ 0 1\n# comment\n+ 1 2\n- 0 1\n')
    assert events == [('+', 0, 1), ('+', 1, 2), ('-', 0, 1)]
    assert EventType('-') is EventType.DELETE
    with pytest.raises(EdgeListParseError) as ex:
        load_events('+ 0 1\n* 1 2\n')
    assert ex.value.line_no == 2
    with pytest.raises(EdgeListParseError):
        load_events('+ 0\n')


def test_vertex_count_header_keeps_trailing_isolated_vertices(cfg, tmp_path):
    file_path = str(tmp_path / 'path.txt')
    emit_edge_list(file_path, Graph(6, [(0, 1), (1, 2)]))
    g = load_edge_list_file(file_path)
    assert (g.n, g.m) == (6, 2)
    assert get_stream(cfg, file_path)[0] == 6

    assert load_edge_list('# n = 5\n0 1\n').n == 5
    assert load_edge_list('# n = 5\n0 1\n', num_vertices=8).n == 8
    assert load_edge_list('# nodes 5\n0 1\n').n == 2
    with pytest.raises(ValueError):
        load_edge_list('# n = 2\n0 4\n')


def test_get_graph_takes_an_explicit_vertex_count(cfg, tmp_path):
    file_path = tmp_path / 'edge.txt'
    file_path.write_text('0 1\n')
    assert get_graph(cfg, str(file_path)).n == 2
    assert get_graph(cfg, str(file_path), num_vertices=4).n == 4


def test_parse_synthetic_spec():
    assert parse_synthetic_spec('gen:gnp:n=100,p=0.1') == ('gnp', {'n': '100', 'p': '0.1'})
    assert parse_synthetic_spec('gen:hard:n=20') == ('hard', {'n': '20'})
    with pytest.raises(ValueError):
        parse_synthetic_spec('gnp:n=100')
    with pytest.raises(ValueError):
        parse_synthetic_spec('gen:gnp:n100')


def test_loaders_read_files_and_specs(cfg, tmp_path):
    file_path = tmp_path / 'triangle.txt'
    file_path.write_text('# triangle\n2 0\n0 1\n1 2\n')
    assert get_graph(cfg, str(file_path)).m == 3
    n, edges = get_stream(cfg, str(file_path))
    assert n == 3
    assert edges == [(2, 0), (0, 1), (1, 2)]

    g = get_graph(cfg, 'gen:gnp:n=50,p=0.2', seed=7)
    assert g == get_graph(cfg, 'gen:gnp:n=50,p=0.2', seed=7)
    with pytest.raises(IOError):
        get_graph(cfg, str(tmp_path / 'missing.txt'))


def test_gen_synthetic_is_seeded():
    a = gen_synthetic('gnp', {'n': 200, 'p': .05}, seed=1)
    b = gen_synthetic('gnp', {'n': 200, 'p': .05}, seed=1)
    c = gen_synthetic('gnp', {'n': 200, 'p': .05}, seed=2)
    assert a == b
    assert a != c


@pytest.mark.parametrize('n, d', [(30, 4), (31, 3)])
def test_gen_regular_ish(n, d):
    g = gen_synthetic('regular-ish', {'n': n, 'd': d}, seed=0)
    assert g.n == n
    assert set(g.degrees().tolist()) <= {d - 1, d}


def test_gen_clique_chain():
    g = gen_synthetic('clique-chain', {'cliques': 4, 'size': 6}, seed=5)
    assert g.n == 24
    assert g.m == 4 * 15 + 3
    assert peel_coreness(g).tolist() == [5] * 24


@pytest.mark.parametrize('kind, params', [
    ('gnp', {'n': 10}),
    ('gnp', {'n': 10, 'p': 2}),
    ('regular-ish', {'n': 5, 'd': 5}),
    ('hard', {'n': 12}),
    ('smallworld', {'n': 10}),
])
def test_gen_synthetic_rejects_bad_parameters(kind, params):
    with pytest.raises(ValueError):
        gen_synthetic(kind, params)


def test_gen_hard_instance_shape():
    g = gen_hard_instance(10)
    assert g.degree(0) == 0
    assert sorted(g.edges())[-10:] == [(u, v) for u in range(5, 10) for v in range(u + 1, 10)]
    with pytest.raises(ValueError):
        gen_hard_instance(5)
