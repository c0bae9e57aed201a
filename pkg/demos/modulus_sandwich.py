"""
Bracketing L'_Y with the modulus of convexity
=============================================

For the Euclidean plane the modulus of convexity is known in closed form,
so the lower and upper bounds built from it can be compared with the
estimated constant directly.
"""

import numpy as np

from geomlab import (estimate_delta, hilbert_delta, lp_space, ly_delta_lower_bound,
                     ly_delta_upper_bound, sweep_lprime_y)

l2 = lp_space(2, 2)

# first check the numerical modulus against the formula
for eps in (0.5, 1.0, 1.5):
    print(f"eps={eps}: estimated {estimate_delta(l2, eps).value:.12f}"
          f"  formula {float(hilbert_delta(eps)):.12f}")

lambdas = np.round(np.linspace(0, 1, 6), 12)
values = sweep_lprime_y(l2, lambdas).values
eps_grid = np.linspace(0.2, 1.8, 9)

# The upper bound is only sharp for lam <= 1/2; past the middle it grows
# quickly (9 at lam = 1).  Since L'_Y is symmetric in lam, the last column
# evaluates it at min(lam, 1 - lam) instead.
print("\nlam   lower     L'_Y      upper     upper(sym)")
for lam, v in zip(lambdas, values):
    lower = max(ly_delta_lower_bound(lam, e, float(hilbert_delta(e))) for e in eps_grid)
    upper = ly_delta_upper_bound(lam, hilbert_delta)
    folded = ly_delta_upper_bound(min(lam, 1 - lam), hilbert_delta)
    print(f"{lam:4.2f}  {lower:.6f}  {v:.6f}  {upper:<8.6f}  {folded:.6f}")
