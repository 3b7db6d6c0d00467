"""
Polynomial chaos by stochastic collocation
==========================================

Project the uncertain response onto Hermite polynomials with sparse-grid
quadrature. Its mean and standard deviation then follow from the
coefficients without any sampling.
"""
import numpy as np

from pceplast.collocation import build_surrogate
from pceplast.material import experiment1_path, run_uniaxial
from pceplast.pce import analytic_mean, analytic_std
from pceplast.stochastic import realize_parameters, sample_standard_normals, table1_input

inp, path = table1_input(), experiment1_path()

# one random input (Young's modulus), degree 5, 35-point rule
sur, prov = build_surrogate(inp, path, p=5, level=18)
print(prov)
print("coefficients at the last step:", sur.coefficients[-1])

mu, sd = analytic_mean(sur), analytic_std(sur)
for t in (10, 29, 34, 80):
    print(f"T={t:2d}: mean {mu[t - 1] / 1e6:8.3f} MPa   std {sd[t - 1] / 1e6:7.3f} MPa")

# the same numbers by brute-force sampling of the surrogate
xi = sample_standard_normals(1, 200_000, seed=1)
y = sur.evaluate(xi)
print("sampled mean/std at T=80:", y[:, -1].mean() / 1e6, y[:, -1].std(ddof=1) / 1e6)

# near the elastic limit the response has a kink in xi that a low degree
# polynomial cannot follow; a 1-D slice shows it
slice_xi = np.linspace(-3, 3, 7)[:, None]
model = run_uniaxial(realize_parameters(inp, slice_xi), path).sigma11[:, 33]
print(np.c_[slice_xi[:, 0], model / 1e6, sur.evaluate(slice_xi)[:, 33] / 1e6])
