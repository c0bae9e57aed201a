"""
The constant need not be convex in lam
======================================

On the plane with the l3 norm, L'_Y at lam = 1/2 lies above the chord
between lam = 0 and lam = 1 (both equal to 1).
"""

from geomlab import classify_space, estimate_lprime_y, lp_space, ly_objective

l3 = lp_space(3, 2)

# a single explicit pair is already enough to beat the chord
a = 2 ** (-1 / 3)
print("pair (1,0), (a,a):", ly_objective(l3, [1, 0], [a, a], 0.5))

# the optimized value is much larger: 2^(1/3)
est = estimate_lprime_y(l3, 0.5)
print("estimate at 1/2:  ", est.value, " witness", est.witness_x, est.witness_y)
print("2^(1/3):          ", 2 ** (1 / 3))

c = classify_space(l3)
print("convexity probe:  ", c.convexity_probe, c.convexity_witness)
