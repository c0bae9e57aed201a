"""
How L'_Y(lam) bends away from 1 as p leaves 2
=============================================

Sweeps the constant over lam for a few planar lp norms and prints a table.
The Euclidean column is flat; the other columns rise toward the middle.
"""

import math

import numpy as np

from geomlab import lp_space, sweep_lprime_y

lambdas = np.round(np.linspace(0, 1, 11), 12)
ps = [2, 3, 4, 1.5, math.inf]

columns = {}
for p in ps:
    columns[p] = sweep_lprime_y(lp_space(p, 2), lambdas).values

print("lam    " + "".join(f"p={p:<8g}" for p in ps))
for i, lam in enumerate(lambdas):
    print(f"{lam:4.2f}   " + "".join(f"{columns[p][i]:<10.6f}" for p in ps))

# the square norm reaches the largest possible value 1 + 4 lam (1 - lam)
print("\nmax gap to 1+4lam(1-lam) for p=inf:",
      np.abs(columns[math.inf] - (1 + 4 * lambdas * (1 - lambdas))).max())
