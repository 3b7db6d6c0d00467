"""
Nested rules and Smolyak grids
==============================

The 1D rules share their nodes, so higher levels reuse all earlier model
runs. Smolyak sums of tensor products keep the point count small in higher
dimensions.
"""
import numpy as np

from pceplast.sparse_grid import LEVEL_ORDER, integrate, kpn_rule, smolyak

for level in (1, 2, 5, 10, 18):
    rule = kpn_rule(level)
    print(f"level {level:2d}: {rule.size:2d} nodes, exact to degree {rule.exactness}")

# nestedness: the 9 nodes of level 5 sit inside the 19 nodes of level 10
print(set(kpn_rule(5).nodes) <= set(kpn_rule(10).nodes))

print("level -> nodes:", LEVEL_ORDER)

for s, levels in ((2, (5, 14, 25)), (4, (5, 10))):
    print(s, [smolyak(s, L).size for L in levels])

# E[xi_1^2 xi_2^2] = 1 and E[xi_1^4] = 3 under the standard normal measure
g = smolyak(2, 3)
print(integrate(g, lambda x: x[0] ** 2 * x[1] ** 2), integrate(g, lambda x: x[0] ** 4))

# a smooth non-polynomial integrand converges quickly with the level
exact = np.exp(0.5 * 0.3 ** 2) ** 2
for L in (2, 4, 6, 8):
    g = smolyak(2, L)
    approx = g.weights @ np.exp(0.3 * g.points.sum(axis=1))
    print(f"L={L}: {g.size:4d} points, error {abs(approx - exact):.2e}")
