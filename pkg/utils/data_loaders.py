# -*- coding: utf-8 -*-

import io
import os
import re

from datetime import datetime as dt
from enum import Enum, unique

from models.graph import Graph
from utils.generators import gen_synthetic


class EdgeListParseError(ValueError):
    def __init__(self, line_no, line, reason):
        super(EdgeListParseError, self).__init__('Line %d: %s (%r)' % (line_no, reason, line.rstrip('\n')))
        self.line_no = line_no


@unique
class EventType(Enum):
    INSERT = '+'
    DELETE = '-'


# ///////////////////////////////// = End of EventType Class Definition = ///////////////////////////////// #


VERTEX_COUNT_HEADER = re.compile(r'^#\s*n\s*=\s*(\d+)')


def _as_stream(text):
    return io.StringIO(text) if isinstance(text, str) else text


def _parse_vertex(token, line_no, line):
    try:
        v = int(token)
    except ValueError:
        raise EdgeListParseError(line_no, line, 'vertex id %r is not an integer' % token)
    if v < 0:
        raise EdgeListParseError(line_no, line, 'vertex id %d is negative' % v)
    return v


def parse_edge_lines(text, header=None):
    """Yields the (u, v) pairs of an edge list in file order.

    A '# n = N' comment sets header['n'] when a `header` dict is given.
    """
    for line_no, line in enumerate(_as_stream(text), 1):
        content = line.strip()
        if content.startswith('#'):
            match = VERTEX_COUNT_HEADER.match(content)
            if match and header is not None:
                header['n'] = int(match.group(1))
            continue
        if not content:
            continue
        tokens = content.split()
        if len(tokens) != 2:
            raise EdgeListParseError(line_no, line, 'expected 2 vertex ids, got %d tokens' % len(tokens))
        yield _parse_vertex(tokens[0], line_no, line), _parse_vertex(tokens[1], line_no, line)


def load_edge_list(text, num_vertices=None, stats=None):
    """Parses an undirected edge list ("u v" per line, '#' comments) into a Graph.

    n is 1 + the largest id seen, or `num_vertices` when given (to keep isolated
    trailing ids). Without `num_vertices`, a '# n = N' header plays the same role.
    Self-loops and duplicate edges are dropped; their counts land in the optional
    `stats` dict together with the number of edge lines read.
    """
    header = {}
    edges = list(parse_edge_lines(text, header))
    max_id = max(max(e) for e in edges) if edges else -1
    n = max_id + 1
    if num_vertices is None:
        num_vertices = header.get('n')
    if num_vertices is not None:
        if num_vertices < n:
            raise ValueError('num_vertices = %d but the edge list uses vertex id %d.' % (num_vertices, max_id))
        n = num_vertices

    g = Graph(n, edges)
    if stats is not None:
        stats['edge_lines'] = len(edges)
        stats['self_loops'] = g.n_self_loops
        stats['duplicates'] = g.n_duplicates
    return g


def load_events(text):
    """Parses turnstile events ("+ u v" / "- u v" per line, '#' comments) into (op, u, v) tuples."""
    events = []
    for line_no, line in enumerate(_as_stream(text), 1):
        content = line.strip()
        if not content or content.startswith('#'):
            continue
        tokens = content.split()
        if len(tokens) != 3:
            raise EdgeListParseError(line_no, line, 'expected "+|- u v", got %d tokens' % len(tokens))
        try:
            op = EventType(tokens[0])
        except ValueError:
            raise EdgeListParseError(line_no, line, 'unknown event operation %r' % tokens[0])
        events.append((op.value, _parse_vertex(tokens[1], line_no, line), _parse_vertex(tokens[2], line_no, line)))

    return events


def load_edge_list_file(file_path, num_vertices=None, stats=None):
    with open(file_path, encoding='utf-8') as file:
        return load_edge_list(file, num_vertices, stats)


def load_events_file(file_path):
    with open(file_path, encoding='utf-8') as file:
        return load_events(file)


def parse_synthetic_spec(spec):
    """'gen:<kind>:k=v,k=v' -> (kind, params); seed is left to the caller."""
    parts = spec.split(':', 2)
    if len(parts) < 2 or parts[0] != 'gen':
        raise ValueError('Synthetic graph spec must look like gen:<kind>:k=v,..., got %r.' % spec)

    params = {}
    if len(parts) == 3 and parts[2]:
        for item in parts[2].split(','):
            key, sep, value = item.partition('=')
            if not sep:
                raise ValueError('Bad synthetic graph parameter %r in %r.' % (item, spec))
            params[key.strip()] = value.strip()
    return parts[1], params


class SnapDataLoader:
    """Edge lists on disk: a file path or a dataset name registered under cfg.DATASETS."""
    def __init__(self, cfg):
        self.cfg = cfg

    def resolve(self, name):
        key = name.upper()
        if key in self.cfg.DATASETS and not os.path.exists(name):
            return self.cfg.DATASETS[key].PATH
        return name

    def get_graph(self, name, seed=None, num_vertices=None):
        file_path = self.resolve(name)
        stats = {}
        print('[INFO] %s Loading edge list from %s ...' % (dt.now(), file_path))
        g = load_edge_list_file(file_path, num_vertices, stats)
        print('[INFO] %s Loaded %s: n = %d, m = %d, %d self-loops and %d duplicates dropped.' %
              (dt.now(), name, g.n, g.m, stats['self_loops'], stats['duplicates']))
        return g

    def get_stream(self, name, seed=None):
        """Edges in file order (the arrival order of a stream), self-loops dropped."""
        file_path = self.resolve(name)
        header = {}
        with open(file_path, encoding='utf-8') as file:
            edges = [(u, v) for u, v in parse_edge_lines(file, header) if u != v]
        n = max(max(e) for e in edges) + 1 if edges else 0
        n = max(n, header.get('n', 0))
        print('[INFO] %s Read %d stream edges over %d vertices from %s.' % (dt.now(), len(edges), n, file_path))
        return n, edges


class SyntheticDataLoader:
    """Seeded synthetic graphs from 'gen:<kind>:k=v,...' specs."""
    def __init__(self, cfg):
        self.cfg = cfg

    def get_graph(self, name, seed=None, num_vertices=None):
        kind, params = parse_synthetic_spec(name)
        seed = self.cfg.CONST.RNG_SEED if seed is None else seed
        g = gen_synthetic(kind, params, seed)
        print('[INFO] %s Generated %s with seed %d: n = %d, m = %d.' % (dt.now(), name, seed, g.n, g.m))
        return g

    def get_stream(self, name, seed=None):
        g = self.get_graph(name, seed)
        return g.n, list(g.edges())


DATASET_LOADER_MAPPING = {
    'snap': SnapDataLoader,
    'gen': SyntheticDataLoader
}  # yapf: disable


def get_graph(cfg, name, seed=None, num_vertices=None):
    loader_type = 'gen' if name.startswith('gen:') else 'snap'
    return DATASET_LOADER_MAPPING[loader_type](cfg).get_graph(name, seed, num_vertices)


def get_stream(cfg, name, seed=None):
    loader_type = 'gen' if name.startswith('gen:') else 'snap'
    return DATASET_LOADER_MAPPING[loader_type](cfg).get_stream(name, seed)
