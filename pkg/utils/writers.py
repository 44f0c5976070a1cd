# -*- coding: utf-8 -*-

import json
import numpy as np
import os
import pandas as pd

from datetime import datetime as dt

REPORT_COLUMNS = ('graph', 'mode', 'T', 'M', 'epsilon', 'seed', 'median', 'p60', 'p70', 'p80', 'p90', 'max_edges',
                  'sum_edges', 'runtime_ms')


def _ensure_parent(file_path):
    parent = os.path.dirname(file_path)
    if parent and not os.path.exists(parent):
        os.makedirs(parent)


def _format_label(value):
    if float(value).is_integer():
        return '%d' % value
    return '%.10g' % value


def emit_labels(file_path, labels):
    """TSV 'vertex<TAB>label' in ascending vertex order."""
    labels = np.asarray(labels)
    try:
        _ensure_parent(file_path)
        with open(file_path, 'w', encoding='utf-8') as file:
            for v, label in enumerate(labels.tolist()):
                file.write('%d\t%s\n' % (v, _format_label(label)))
    except (IOError, OSError) as ex:
        raise IOError('Cannot write labels to %s: %s' % (file_path, ex))
    print('[INFO] %s Wrote %d labels to %s.' % (dt.now(), labels.size, file_path))


def _jsonable(value):
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, np.ndarray):
        return value.tolist()
    raise TypeError('Unserializable stats value: %r' % (value, ))


def emit_stats(file_path, record):
    """Stats record as a flat JSON object with sorted keys."""
    try:
        _ensure_parent(file_path)
        with open(file_path, 'w', encoding='utf-8') as file:
            json.dump(record, file, sort_keys=True, indent=2, default=_jsonable)
            file.write('\n')
    except (IOError, OSError) as ex:
        raise IOError('Cannot write stats to %s: %s' % (file_path, ex))
    print('[INFO] %s Wrote stats to %s.' % (dt.now(), file_path))


def emit_report(file_path, rows):
    """Bench CSV: one row per run followed by the per-configuration means (seed = 'mean')."""
    report = pd.DataFrame(list(rows), columns=list(REPORT_COLUMNS))
    try:
        _ensure_parent(file_path)
        report.to_csv(file_path, index=False, float_format='%.6f')
    except (IOError, OSError) as ex:
        raise IOError('Cannot write report to %s: %s' % (file_path, ex))
    print('[INFO] %s Wrote %d report rows to %s.' % (dt.now(), len(report), file_path))
    return report


def emit_edge_list(file_path, g):
    try:
        _ensure_parent(file_path)
        with open(file_path, 'w', encoding='utf-8') as file:
            file.write('# n = %d m = %d\n' % (g.n, g.m))
            for u, v in g.edges():
                file.write('%d %d\n' % (u, v))
    except (IOError, OSError) as ex:
        raise IOError('Cannot write edge list to %s: %s' % (file_path, ex))
    print('[INFO] %s Wrote %d edges to %s.' % (dt.now(), g.m, file_path))


def emit_divergence(file_path, rows):
    """Share of vertices whose streamed label differs from the batch label, per stream run."""
    divergence = pd.DataFrame(list(rows), columns=['graph', 'T', 'M', 'seed', 'divergence'])
    try:
        _ensure_parent(file_path)
        divergence.to_csv(file_path, index=False, float_format='%.6f')
    except (IOError, OSError) as ex:
        raise IOError('Cannot write divergence report to %s: %s' % (file_path, ex))
    print('[INFO] %s Wrote %d divergence rows to %s.' % (dt.now(), len(divergence), file_path))
    return divergence
