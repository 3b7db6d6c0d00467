"""
Experiment 2: four random parameters and a load cycle
=====================================================

All four material parameters are lognormal and the strain returns to zero.
This version uses the smaller grid and 10,000 Monte Carlo samples.
"""
from pceplast.analysis import column_stats, mc_reference, relative_error, sample_surrogate
from pceplast.collocation import build_surrogate, collect_snapshots
from pceplast.material import experiment2_path
from pceplast.pce import analytic_mean, analytic_std
from pceplast.sparse_grid import smolyak
from pceplast.stochastic import table3_input

inp, path = table3_input(), experiment2_path()
n, seed = 10_000, 7
ref, _ = mc_reference(inp, path, n, seed)

# the 201 model runs are shared by all degrees on one grid
snapshots = collect_snapshots(inp, path, smolyak(4, 5))
for p in (1, 3, 5):
    sur, prov = build_surrogate(inp, path, p, level=5, snapshots=snapshots)
    q01 = column_stats(sample_surrogate(sur, n, seed)).q01
    print(f"p={p} i={prov.n_points} R={prov.R}: "
          f"e(mean) {relative_error(analytic_mean(sur), ref.mean):.2e} "
          f"e(std) {relative_error(analytic_std(sur), ref.std):.2e} "
          f"e(q01) {relative_error(q01, ref.q01):.2e}")

print(f"residual stress after the cycle: mean {ref.mean[-1] / 1e6:.2f} MPa, std {ref.std[-1] / 1e6:.2f} MPa")
