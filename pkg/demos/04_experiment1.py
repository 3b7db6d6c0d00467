"""
Experiment 1: one random parameter
==================================

Compare surrogate statistics with a Monte Carlo reference. The reduced
sample size keeps this fast. Use ``--mc-samples 1000000`` on the command
line for the full reference.
"""
import numpy as np

from pceplast.analysis import mc_reference, r_squared, relative_error, sample_surrogate, column_stats
from pceplast.collocation import build_surrogate
from pceplast.material import experiment1_path
from pceplast.pce import analytic_mean, analytic_std
from pceplast.stochastic import table1_input

inp, path = table1_input(), experiment1_path()
n, seed = 50_000, 42
ref, archive = mc_reference(inp, path, n, seed)

print(" p   i   e(mean)   e(std)    e(q01)   min R2 (at T)")
for level in (5, 10, 18):
    for p in (1, 3, 5):
        sur, prov = build_surrogate(inp, path, p, level)
        q01 = column_stats(sample_surrogate(sur, n, seed)).q01
        r2 = r_squared(sur, archive)
        print(f"{p:2d} {prov.n_points:3d}  {relative_error(analytic_mean(sur), ref.mean):.2e}  "
              f"{relative_error(analytic_std(sur), ref.std):.2e}  {relative_error(q01, ref.q01):.2e}  "
              f"{r2.min():.3f} ({np.argmin(r2) + 1})")
