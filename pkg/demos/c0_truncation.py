"""
Finite truncations of max-plus-weighted-l2
==========================================

The norm ||x||_inf + sqrt(sum x_i^2 / 4^i) is studied here in dimensions
2, 4 and 8.  These are exploratory numbers: the multi-start search in
higher dimension is a heuristic and the convergence flag is reported
alongside each value.
"""

from geomlab import EstimatorConfig, c0_truncation, estimate_cnj_prime_and_E, estimate_lprime_y

cfg = EstimatorConfig(starts=32, local_iters=150)
for dim in (2, 4, 8):
    space = c0_truncation(dim)
    row = []
    for lam in (0.25, 0.5):
        r = estimate_lprime_y(space, lam, cfg)
        row.append(f"L({lam})={r.value:.5f}{'' if r.converged else '*'}")
    cnjp, _ = estimate_cnj_prime_and_E(space, cfg)
    print(f"dim={dim}: " + "  ".join(row) + f"  C'_NJ={cnjp.value:.5f}")
print("* = search did not meet its convergence tolerance")
