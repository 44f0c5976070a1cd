# -*- coding: utf-8 -*-

import json
import os
import pytest

from easydict import EasyDict as edict

from config import cfg as default_cfg


@pytest.fixture
def cfg(tmp_path):
    """Private copy of the global config writing into a temporary output directory."""
    job_cfg = edict(json.loads(json.dumps(default_cfg)))
    job_cfg.DIR.OUT_PATH = str(tmp_path)
    job_cfg.BENCH.TENSORBOARD = False
    job_cfg.BENCH.NUM_WORKER = 1
    return job_cfg


@pytest.fixture
def enron_path():
    path = os.environ.get('KCORE_ENRON_PATH', default_cfg.DATASETS.ENRON.PATH)
    if not os.path.exists(path):
        pytest.skip('Enron edge list not found at %s' % path)
    return path
