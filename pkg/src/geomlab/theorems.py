"""Identities, inequalities and classification criteria run as machine checks.

Sup-type estimates are certified lower bounds.  A check that needs the
true value from above (squareness, the normal-structure condition) can
therefore only be supported by evidence, never certified; the
corresponding booleans are threshold decisions with recorded margins.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .constants import (
    EstimatorConfig,
    analytic_delta_profile,
    estimate_cnj,
    estimate_cnj_prime_and_E,
    estimate_delta,
    ly_delta_lower_bound,
    ly_delta_upper_bound,
    sweep_lprime_y,
)
from .errors import InfeasibleError
from .norms import NormedSpace, as_vector, sample_sphere, validate_norm_axioms
from .report import CheckItem, CheckReport, FAIL, PASS, VACUOUS, Timer, freeze_witness, leq_item

DEFAULT_LAMBDAS = tuple(round(0.05 * k, 12) for k in range(21))
DELTA_EPS = tuple(round(0.2 * k, 12) for k in range(1, 10))
INNER_PRODUCT_THRESHOLD = 1e-3
FRECHET_THRESHOLD = 1e-6
NONSQUARE_MARGIN = 1e-2


def frechet_residual(space: NormedSpace, x, y, z) -> float:
    """Absolute defect of the three-point identity
    ``|x+y|^2 + |y+z|^2 + |x+z|^2 = |x+y+z|^2 + |x|^2 + |y|^2 + |z|^2``."""
    x, y, z = (as_vector(space, v) for v in (x, y, z))
    return float(_frechet_batch(space, x, y, z))


def _frechet_batch(space, X, Y, Z):
    n = space.norm
    lhs = n(X + Y) ** 2 + n(Y + Z) ** 2 + n(X + Z) ** 2
    rhs = n(X + Y + Z) ** 2 + n(X) ** 2 + n(Y) ** 2 + n(Z) ** 2
    return np.abs(lhs - rhs)


def max_frechet_residual(space: NormedSpace, trials: int = 1000, seed: int = 0):
    """Largest three-point defect over seeded triples with radii in [1/2, 2].

    Returns ``(residual, (x, y, z))``.
    """
    pts = sample_sphere(space, 3 * trials, seed).reshape(3, trials, space.dim)
    radii = np.random.default_rng([seed, 1]).uniform(0.5, 2.0, (3, trials, 1))
    X, Y, Z = pts * radii
    r = _frechet_batch(space, X, Y, Z)
    k = int(np.argmax(r))
    return float(r[k]), (X[k], Y[k], Z[k])


def _lambda_closure(lambdas) -> np.ndarray:
    """The grid, its reflection ``1 - lam`` and 1/2, sorted without near-duplicates."""
    vals = sorted({round(float(v), 12) for v in lambdas} | {round(1.0 - float(v), 12) for v in lambdas} | {0.5})
    return np.array(vals)


def _lookup(lams, values, lam):
    k = int(np.argmin(np.abs(lams - lam)))
    return values[k]


def run_check_suite(space: NormedSpace, lambdas: Sequence[float] = DEFAULT_LAMBDAS,
                    cfg: EstimatorConfig = None, slack: float = 1e-3) -> CheckReport:
    """Run every applicable check on ``space``.

    ``slack`` is the accuracy budget of a single estimate; checks relating
    two estimates allow ``2 * slack``, the E-identity ``8 * slack``.
    Failures are recorded in the report, never raised.
    """
    cfg = cfg or EstimatorConfig()
    report = CheckReport(space.name, config=cfg)
    with Timer() as timer:
        _fill(report, space, lambdas, cfg, slack)
    report.wall_time = timer.elapsed
    report.sort()
    return report


def _fill(report, space, lambdas, cfg, slack):
    items = report.items
    items.extend(validate_norm_axioms(space, 1000, cfg.seed))

    grid = np.array(sorted({round(float(v), 12) for v in lambdas}))
    lams = _lambda_closure(grid)
    sweep = sweep_lprime_y(space, lams, cfg)
    L = sweep.values
    ests = sweep.estimates
    nonconverged = [e for e in ests if not e.converged]

    def wit(k):
        return (ests[k].witness_x, ests[k].witness_y, lams[k])

    for k, lam in enumerate(lams):
        if lam not in grid:
            continue
        items.append(leq_item("range_lower", 1.0, L[k], slack, wit(k), "1 <= L(lam)"))
        items.append(leq_item("range_upper", L[k], 1 + 4 * lam * (1 - lam), slack, wit(k),
                              "L(lam) <= -4lam^2+4lam+1"))
        if lam <= 0.5:
            other = _lookup(lams, L, 1.0 - lam)
            items.append(leq_item("symmetry", abs(L[k] - other), 0.0, 2 * slack, wit(k),
                                  "|L(lam) - L(1-lam)|"))

    for a, b in zip(grid[:-1], grid[1:]):
        ka = int(np.argmin(np.abs(lams - a)))
        kb = int(np.argmin(np.abs(lams - b)))
        items.append(leq_item("lipschitz", abs(L[kb] - L[ka]), 4 * (b - a), 2 * slack, wit(ka),
                              f"|L({b:g}) - L({a:g})| <= 4h"))

    cnjp, gao = estimate_cnj_prime_and_E(space, cfg)
    nonconverged += [e for e in (cnjp,) if not e.converged]
    C = cnjp.value
    cw = (cnjp.witness_x, cnjp.witness_y, None)
    L_half = _lookup(lams, L, 0.5)
    items.append(leq_item("half_identity", abs(L_half - C), 0.0, 2 * slack, cw, "|L(1/2) - C'_NJ|"))
    items.append(leq_item("gao_identity", abs(gao.value - 4 * C), 0.0, 8 * slack, cw, "|E - 4 C'_NJ|"))
    items.append(leq_item("cnjp_range_lower", 1.0, C, slack, cw, "1 <= C'_NJ"))
    items.append(leq_item("cnjp_range_upper", C, 2.0, slack, cw, "C'_NJ <= 2"))

    cnj = estimate_cnj(space, cfg)
    if not cnj.converged:
        nonconverged.append(cnj)
    nw = (cnj.witness_x, cnj.witness_y, None)
    items.append(leq_item("cnj_range_lower", 1.0, cnj.value, slack, nw, "1 <= C_NJ"))
    items.append(leq_item("cnj_range_upper", cnj.value, 2.0, slack, nw, "C_NJ <= 2"))

    for k, lam in enumerate(lams):
        if lam not in grid:
            continue
        items.append(leq_item("relation_lower", 2 * min(lam, 1 - lam) * C, L[k], 2 * slack, wit(k),
                              "2 min(lam,1-lam) C'_NJ <= L(lam)"))
        if 0 < lam < 1:
            factor = 1 - abs(1 - 2 * lam) / (2 * np.sqrt(lam * (1 - lam)))
        else:
            factor = -np.inf
        if factor > 0:
            items.append(leq_item("relation_upper", factor * L[k], C, 2 * slack, wit(k),
                                  f"(1 - |1-2lam|/(2 sqrt(lam(1-lam)))) L(lam) <= C'_NJ, factor={factor:.6g}"))
        else:
            items.append(CheckItem("relation_upper", VACUOUS, float(L[k]), C, 2 * slack, freeze_witness(wit(k)),
                                   "relation factor is not positive"))

    profile = analytic_delta_profile(space)
    if profile is None:
        report.converged = not nonconverged
        return

    eps_grid = np.linspace(0.0, 2.0, 513)
    dprof = profile(eps_grid)
    for k, lam in enumerate(lams):
        if lam not in grid:
            continue
        lows = np.array([ly_delta_lower_bound(lam, e, d) for e, d in zip(eps_grid, dprof)])
        j = int(np.argmax(lows))
        items.append(leq_item("delta_sandwich_lower", lows[j], L[k], 2 * slack, wit(k),
                              f"lower bound at eps={eps_grid[j]:.6g}"))
        upper = ly_delta_upper_bound(lam, profile, eps_grid)
        items.append(leq_item("delta_sandwich_upper", L[k], upper, 2 * slack, wit(k),
                              "L(lam) <= sup over eps of the upper term"))

    warm = None
    for eps in DELTA_EPS:
        try:
            d = estimate_delta(space, eps, cfg, warm_start=warm)
        except InfeasibleError:
            items.append(CheckItem("delta_oracle", FAIL, float("nan"), float(profile(eps)), slack,
                                   None, f"no feasible pair at eps={eps:g}"))
            continue
        warm = (d.witness_x, d.witness_y)
        exact = float(profile(eps))
        items.append(leq_item("delta_oracle", abs(d.value - exact), 0.0, slack,
                              (d.witness_x, d.witness_y, None), f"eps={eps:g}, exact={exact:.12g}"))
    report.converged = not nonconverged


@dataclass
class Classification:
    """Threshold decisions about a space, with the margins behind them.

    ``normal_structure_sufficient`` is evidence for the sufficient
    condition, not a certificate: it uses the last refinement gain as a
    heuristic upper slack on each estimate.
    """

    space: str
    inner_product_like: bool
    uniformly_nonsquare: bool
    normal_structure_sufficient: bool
    convexity_probe: str
    convexity_witness: Optional[tuple]
    margins: dict = field(default_factory=dict)
    lambdas: tuple = ()
    values: tuple = ()


def classify_space(space: NormedSpace, cfg: EstimatorConfig = None,
                   lambdas: Sequence[float] = DEFAULT_LAMBDAS,
                   frechet_trials: int = 1000) -> Classification:
    cfg = cfg or EstimatorConfig()
    lams = _lambda_closure(lambdas)
    sweep = sweep_lprime_y(space, lams, cfg)
    L = sweep.values
    gaps = np.array([e.gap for e in sweep.estimates])

    half = float(_lookup(lams, L, 0.5))
    fr, _ = max_frechet_residual(space, frechet_trials, cfg.seed)
    inner = half <= 1 + INNER_PRODUCT_THRESHOLD and fr <= FRECHET_THRESHOLD

    interior = (lams > 0) & (lams < 1)
    square_gap = (1 + 4 * lams * (1 - lams)) - L
    k_ns = int(np.argmax(np.where(interior, square_gap, -np.inf)))
    nonsquare = bool(square_gap[k_ns] > NONSQUARE_MARGIN)

    upper = (lams >= 0.5) & (lams <= 1)
    ns_gap = (1 + lams * (1 - lams)) - (L + gaps)
    k_nst = int(np.argmax(np.where(upper, ns_gap, -np.inf)))
    normal = bool(ns_gap[k_nst] > cfg.tol)

    probe, witness, violation = "convex-consistent", None, -np.inf
    for i in range(len(lams)):
        for j in range(i + 1, len(lams)):
            mid = (lams[i] + lams[j]) / 2
            k = int(np.argmin(np.abs(lams - mid)))
            if abs(lams[k] - mid) > 1e-12:
                continue
            v = L[k] - (L[i] + L[j]) / 2 - 3 * cfg.tol
            if v > violation:
                violation = v
                if v > 0:
                    witness = (float(lams[i]), float(lams[k]), float(lams[j]))
    if witness is not None:
        probe = "violated"

    margins = {
        "ly_half_minus_one": half - 1.0,
        "frechet_max_residual": fr,
        "nonsquare_margin": float(square_gap[k_ns]),
        "nonsquare_lambda": float(lams[k_ns]),
        "normal_structure_margin": float(ns_gap[k_nst]),
        "normal_structure_lambda": float(lams[k_nst]),
        "convexity_max_violation": float(violation),
    }
    return Classification(space.name, bool(inner), nonsquare, normal, probe, witness, margins,
                          tuple(float(v) for v in lams), tuple(float(v) for v in L))
