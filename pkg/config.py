# -*- coding: utf-8 -*-

from easydict import EasyDict as edict

__C                                         = edict()
cfg                                         = __C

#
# Dataset Config
#
__C.DATASETS                                = edict()
__C.DATASETS.ENRON                          = edict()
__C.DATASETS.ENRON.PATH                     = './datasets/Email-Enron.txt'
__C.DATASETS.AMAZON                         = edict()
__C.DATASETS.AMAZON.PATH                    = './datasets/com-amazon.ungraph.txt'
__C.DATASETS.DBLP                           = edict()
__C.DATASETS.DBLP.PATH                      = './datasets/com-dblp.ungraph.txt'
__C.DATASETS.TWITTER                        = edict()
__C.DATASETS.TWITTER.PATH                   = './datasets/twitter_combined.txt'

#
# Common
#
__C.CONST                                   = edict()
__C.CONST.RNG_SEED                          = 0
__C.CONST.LOG_BASE                          = None      # None: natural log in every threshold constant

#
# Directories
#
__C.DIR                                     = edict()
__C.DIR.OUT_PATH                            = './output'

#
# Sketch
#
__C.SKETCH                                  = edict()
__C.SKETCH.EPSILON                          = .5
__C.SKETCH.MODE                             = 'theory'  # available options: theory, practical
__C.SKETCH.T                                = 3         # practical mode only: L = T, U = 2T
__C.SKETCH.M                                = 2.        # practical mode only: p_{j+1} = M * p_j
__C.SKETCH.P0                               = None      # None: 96 log n / (eps^2 n) for the sketch profile
__C.SKETCH.MAX_LEVELS                       = None      # None: run until p_j reaches 1
__C.SKETCH.PROFILE                          = 'sketch'  # available options: sketch, turnstile

#
# Streaming
#
__C.STREAM                                  = edict()
__C.STREAM.RELABEL_GATE                     = True      # skip relabels while no vertex can reach L
__C.STREAM.CHECKPOINTS                      = 10

#
# Turnstile
#
__C.TURNSTILE                               = edict()
__C.TURNSTILE.PROFILE                       = 'turnstile'
__C.TURNSTILE.CAPACITY                      = None      # None: 24 log n / eps^2 (theory) or 2T (practical)

#
# Simulated cluster
#
__C.CLUSTER                                 = edict()
__C.CLUSTER.MACHINES                        = 8
__C.CLUSTER.BUDGET                          = None      # per-machine edge budget, None disables the check
__C.CLUSTER.PRUNE3                          = False
__C.CLUSTER.NUM_WORKER                      = 1         # threads evaluating machine partitions

#
# Benchmark
#
__C.BENCH                                   = edict()
__C.BENCH.GRAPHS                            = ['Enron']
__C.BENCH.MODES                             = ['sketch']    # available options: sketch, baseline, stream
__C.BENCH.T_LIST                            = [2, 3, 4, 5]
__C.BENCH.M_LIST                            = [2.]
__C.BENCH.RUNS                              = 3
__C.BENCH.MIN_CORE                          = 5
__C.BENCH.NUM_WORKER                        = 1             # number of bench worker processes
__C.BENCH.TENSORBOARD                       = True
__C.BENCH.REPORT_FILE                       = 'report.csv'

#
# Synthetic graphs
#
__C.GEN                                     = edict()
__C.GEN.KIND                                = 'gnp'     # available options: gnp, regular-ish, clique-chain, hard
__C.GEN.N                                   = 1000
__C.GEN.P                                   = .01
__C.GEN.DEGREE                              = 10
__C.GEN.CLIQUES                             = 10
__C.GEN.CLIQUE_SIZE                         = 10

#
# Job (filled in by runner.py)
#
__C.JOB                                     = edict()
__C.JOB.COMMAND                             = 'sketch'  # exact, sketch, stream, turnstile, mrsim, bench, gen
__C.JOB.INPUT                               = None
__C.JOB.EVENTS                              = None
__C.JOB.NUM_VERTICES                        = None
__C.JOB.OUTPUT                              = None
__C.JOB.STATS                               = None
