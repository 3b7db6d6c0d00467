"""
A J2 material point under uniaxial stress
=========================================

Drive the mean-parameter steel point along both load paths and compare the
result with the bilinear 1D law it must reduce to.
"""
import numpy as np

from pceplast.material import MaterialParams, experiment1_path, experiment2_path, run_uniaxial_states

steel = MaterialParams(E=210e9, nu=0.3, sigma_y0=235e6, H=2.1e9)

# Experiment 1: 80 equal strain steps up to 2.8e-3
states = run_uniaxial_states(steel, experiment1_path())
sigma = np.array([s.stress[0] for s in states])
first = next(t for t, s in enumerate(states) if s.eps_p_eq > 0)
print(f"elastic limit eps_y = {steel.sigma_y0 / steel.E:.4e}")
print(f"first plastic step (1-based) = {first + 1}")
print(f"final stress = {sigma[-1] / 1e6:.3f} MPa")

# past yield the slope is the bilinear tangent E H / (E + H)
eps = experiment1_path().eps11
print(f"tangent from the last two steps = {(sigma[-1] - sigma[-2]) / (eps[-1] - eps[-2]):.5e}")
print(f"closed form E H / (E + H)       = {steel.E * steel.H / (steel.E + steel.H):.5e}")

# lateral strains: elastic contraction nu, plastic contraction 1/2
last = states[-1]
print("lateral strain", last.strain[1], "lateral stress", last.stress[1])
print("plastic strain trace", last.plastic_strain[:3].sum())

# Experiment 2: load to 2.8e-3 and back to zero strain
cycle = run_uniaxial_states(steel, experiment2_path())
s2 = np.array([s.stress[0] for s in cycle])
print(f"peak stress {s2.max() / 1e6:.2f} MPa, residual stress at zero strain {s2[-1] / 1e6:.2f} MPa")
print(f"accumulated plastic strain {cycle[-1].eps_p_eq:.4e}")

# a batch of materials runs in one call, one row per sample
batch = MaterialParams(E=np.array([190e9, 210e9, 230e9]), nu=0.3, sigma_y0=235e6, H=2.1e9)
print(np.array([s.stress[0] for s in run_uniaxial_states(batch, experiment1_path())])[-1] / 1e6)
