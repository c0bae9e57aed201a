"""Brute-force reference computations, independent of the geomlab estimators.

Norms are re-implemented inline; suprema are plain maxima over a dense
angular grid with no refinement.
"""

import numpy as np


def lp(p):
    if np.isinf(p):
        return lambda v: np.abs(v).max(-1)
    return lambda v: (np.abs(v) ** p).sum(-1) ** (1.0 / p)


def circle(norm, res):
    th = 2 * np.pi * np.arange(res) / res
    d = np.stack([np.cos(th), np.sin(th)], -1)
    return d / norm(d)[:, None]


def _rows(S, chunk=256):
    for i in range(0, len(S), chunk):
        yield S[i:i + chunk, None, :]


def brute_ly(norm, lam, res=4096):
    S = circle(norm, res)
    best = -np.inf
    for X in _rows(S):
        Y = S[None]
        v = norm(lam * X + (1 - lam) * Y) ** 2 + lam * (1 - lam) * norm(X - Y) ** 2
        best = max(best, v.max())
    return float(best)


def brute_delta(norm, eps, res=4096):
    S = circle(norm, res)
    best = np.inf
    for X in _rows(S):
        Y = S[None]
        ok = norm(X - Y) >= eps
        v = np.where(ok, 1 - norm(X + Y) / 2, np.inf)
        best = min(best, v.min())
    return float(best)


def brute_cnj(norm, res=4096, t_nodes=(1.0,)):
    """Max of the parallelogram ratio over x on the sphere and y = t v."""
    S = circle(norm, res)
    best = -np.inf
    for t in t_nodes:
        for X in _rows(S):
            Y = t * S[None]
            v = (norm(X + Y) ** 2 + norm(X - Y) ** 2) / (2 * (norm(X) ** 2 + norm(Y) ** 2))
            best = max(best, v.max())
    return float(best)
