"""Objectives of the geometric constants and their numerical extremization.

All constants here are suprema (or, for the modulus of convexity, an
infimum) over pairs of unit vectors.  Two search strategies are used:

* ``dim == 2``: the pair is parametrized by two Euclidean angles.  An
  exhaustive product grid is followed by windowed refinement around the
  best cell.  The grid is run as a cascade over the resolutions
  ``N, N/2, N/4, ...`` (while even and at least 8) and the best certified
  candidate wins, so doubling the resolution can only improve the result.
  The modulus of convexity additionally runs a one-dimensional search
  along the constraint curve ``||x - y|| = eps``.
* ``dim >= 3``: seeded multi-start compass search on unnormalized
  directions.  Start ``k`` is drawn from ``default_rng([seed, k])`` so the
  start set for ``starts=m`` contains the one for any smaller count.

Every reported value is recomputed from its witness pair, so a value for a
supremum is a certified lower bound and a value for the modulus is a
certified upper bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Callable, Optional, Sequence

import numpy as np

from .errors import InfeasibleError, InputError
from .norms import NormedSpace, Lp, as_vector, ball_vertices, circle_points

SPHERE_TOL = 1e-9
# ||x - y|| >= eps is tested with this slack so antipodal grid pairs survive rounding
FEASIBILITY_SLACK = 1e-12
T_NODES = 64
REFINE_NODES = 17  # per axis; spacing is window/8, matching the shrink factor
SHRINK = 8.0
_INFEASIBLE = -10.0
_CHUNK = 1 << 20


@dataclass(frozen=True)
class EstimatorConfig:
    grid_resolution: int = 512
    refine_rounds: int = 3
    starts: int = 64
    local_iters: int = 200
    seed: int = 0
    tol: float = 1e-6

    def __post_init__(self):
        if self.grid_resolution < 8:
            raise InputError("grid_resolution must be at least 8")
        if self.refine_rounds < 0:
            raise InputError("refine_rounds must be non-negative")
        if self.starts < 1:
            raise InputError("starts must be at least 1")
        if self.local_iters < 1:
            raise InputError("local_iters must be at least 1")
        if not self.tol > 0:
            raise InputError("tol must be positive")


@dataclass(frozen=True)
class EstimateResult:
    """An extremal value together with the pair that attains it.

    ``gap`` is the improvement achieved by the final refinement stage; it
    doubles as a heuristic for how far the value may still be from the
    true extremum.  ``converged`` is ``gap <= config.tol``.
    """

    value: float
    witness_x: np.ndarray
    witness_y: np.ndarray
    evaluations: int
    config: EstimatorConfig
    converged: bool = True
    gap: float = 0.0
    quantity: str = ""
    parameter: Optional[float] = None


@dataclass(frozen=True)
class SweepResult:
    lambdas: np.ndarray
    estimates: tuple

    def __post_init__(self):
        if len(self.lambdas) != len(self.estimates):
            raise InputError("lambdas and estimates differ in length")

    @property
    def values(self) -> np.ndarray:
        return np.array([e.value for e in self.estimates])

    def __len__(self):
        return len(self.lambdas)


# -- objectives ---------------------------------------------------------------

def _check_lambda(lam: float) -> float:
    lam = float(lam)
    if not 0.0 <= lam <= 1.0:
        raise InputError(f"lambda must lie in [0, 1], got {lam}")
    return lam


def _on_sphere(space, v, what):
    v = as_vector(space, v)
    if abs(float(space.norm(v)) - 1.0) > SPHERE_TOL:
        raise InputError(f"{what} is not on the unit sphere (norm {float(space.norm(v))!r})")
    return v


def _ly_batch(space, X, Y, lam):
    return space.norm(lam * X + (1.0 - lam) * Y) ** 2 + lam * (1.0 - lam) * space.norm(X - Y) ** 2


def ly_objective(space: NormedSpace, x, y, lam: float) -> float:
    """``||lam x + (1-lam) y||^2 + lam (1-lam) ||x - y||^2`` for unit ``x, y``."""
    lam = _check_lambda(lam)
    x = _on_sphere(space, x, "x")
    y = _on_sphere(space, y, "y")
    return float(_ly_batch(space, x, y, lam))


def _gao_batch(space, X, Y):
    return (space.norm(X + Y) ** 2 + space.norm(X - Y) ** 2) / 4.0


def cnj_prime_objective(space: NormedSpace, x, y) -> float:
    """``(||x+y||^2 + ||x-y||^2) / 4`` for unit ``x, y``."""
    return float(_gao_batch(space, _on_sphere(space, x, "x"), _on_sphere(space, y, "y")))


def _cnj_batch(space, X, Y):
    num = space.norm(X + Y) ** 2 + space.norm(X - Y) ** 2
    den = 2.0 * (space.norm(X) ** 2 + space.norm(Y) ** 2)
    return num / den


def cnj_ratio(space: NormedSpace, x, y) -> float:
    """The parallelogram ratio ``(||x+y||^2+||x-y||^2) / (2(||x||^2+||y||^2))``."""
    x, y = as_vector(space, x), as_vector(space, y)
    if not (np.any(x) or np.any(y)):
        raise InputError("the ratio is undefined at (0, 0)")
    return float(_cnj_batch(space, x, y))


def delta_objective(space: NormedSpace, x, y) -> float:
    """Midpoint shortfall ``1 - ||x+y||/2`` for unit ``x, y``."""
    x = _on_sphere(space, x, "x")
    y = _on_sphere(space, y, "y")
    return float(1.0 - space.norm(x + y) / 2.0)


# -- search problems ----------------------------------------------------------

@dataclass
class _Problem:
    """A search target.  ``score`` is maximized and receives unit ``X``, unit
    direction ``Y`` and scale ``T`` (``None`` unless ``uses_t``)."""

    score: Callable
    certify: Callable  # (x, y) -> (user-facing value, feasible)
    sense: float  # +1 for sup-type, -1 for inf-type
    uses_t: bool = False
    # score is convex in each argument, so on a polyhedral ball the sup sits at a vertex pair
    vertex_exact: bool = False

    def pair(self, X, V, T):
        return X, (V if T is None else T[..., None] * V)


def _ly_problem(space, lam):
    return _Problem(lambda X, Y, T: _ly_batch(space, X, Y, lam),
                    lambda x, y: (ly_objective(space, x, y, lam), True), 1.0, vertex_exact=True)


def _gao_problem(space):
    return _Problem(lambda X, Y, T: _gao_batch(space, X, Y),
                    lambda x, y: (cnj_prime_objective(space, x, y), True), 1.0, vertex_exact=True)


def _cnj_problem(space):
    def score(X, V, T):
        return _cnj_batch(space, X, T[..., None] * V)

    # for fixed t the numerator is convex in x and in v while the denominator is constant
    return _Problem(score, lambda x, y: (cnj_ratio(space, x, y), True), 1.0, uses_t=True,
                    vertex_exact=True)


def _delta_problem(space, eps):
    def score(X, Y, T):
        d = space.norm(X - Y)
        short = 1.0 - space.norm(X + Y) / 2.0
        # infeasible pairs score below every feasible one and are pulled toward feasibility
        return np.where(d >= eps - FEASIBILITY_SLACK, -short, _INFEASIBLE - (eps - d))

    def certify(x, y):
        feasible = float(space.norm(x - y)) >= eps - FEASIBILITY_SLACK
        return delta_objective(space, x, y), feasible

    return _Problem(score, certify, -1.0)


# -- candidate bookkeeping ------------------------------------------------------

@dataclass
class _Candidate:
    x: np.ndarray
    y: np.ndarray
    value: float  # certified, in the user's sense
    feasible: bool
    gap: float

    def key(self, sense):
        # infeasible candidates always lose
        return (self.feasible, sense * self.value)


def _better(a: Optional[_Candidate], b: _Candidate, sense) -> bool:
    """True when ``b`` strictly beats the incumbent ``a``."""
    return a is None or b.key(sense) > a.key(sense)


def _certify(problem, x, y, gap) -> _Candidate:
    value, feasible = problem.certify(x, y)
    return _Candidate(np.array(x, dtype=float), np.array(y, dtype=float), value, feasible, gap)


# -- dim 2: grid cascade --------------------------------------------------------

class _PlanarSearch:
    def __init__(self, space, problem, cfg):
        self.space, self.problem, self.cfg = space, problem, cfg
        self.evaluations = 0

    def points(self, phi):
        X = circle_points(self.space, phi[..., 0])
        V = circle_points(self.space, phi[..., 1])
        T = np.clip(phi[..., 2], 0.0, 1.0) if self.problem.uses_t else None
        return X, V, T

    def score(self, phi):
        X, V, T = self.points(phi)
        self.evaluations += int(np.prod(phi.shape[:-1]))
        return self.problem.score(X, V, T)

    def coarse(self, res):
        """Best node of the product grid at ``res`` angles per axis.

        Ties resolve to the lexicographically smallest index tuple.
        """
        theta = 2 * np.pi * np.arange(res) / res
        S = circle_points(self.space, theta)
        t = np.linspace(0.0, 1.0, T_NODES) if self.problem.uses_t else None
        nt = 1 if t is None else T_NODES
        per_row = res * nt
        rows = max(1, _CHUNK // per_row)
        best_val, best_idx = -np.inf, None
        for i0 in range(0, res, rows):
            i1 = min(res, i0 + rows)
            X = S[i0:i1, None, :]
            V = S[None, :, :]
            if t is None:
                vals = self.problem.score(X, V, None)
            else:
                vals = self.problem.score(X[:, :, None, :], V[:, :, None, :], t[None, None, :])
            self.evaluations += vals.size
            k = int(np.argmax(vals))
            if vals.flat[k] > best_val:
                best_val = vals.flat[k]
                best_idx = (i0,) + (0,) * (vals.ndim - 1)
                best_idx = tuple(np.add(np.unravel_index(k, vals.shape), best_idx))
        phi = [theta[best_idx[0]], theta[best_idx[1]]]
        if t is not None:
            phi.append(t[best_idx[2]])
        return np.array(phi), float(best_val)

    def refine(self, phi, value, widths):
        """Shrinking local grids around ``phi``; returns the last-round gain too."""
        offsets = np.linspace(-1.0, 1.0, REFINE_NODES)
        gap = 0.0
        widths = np.array(widths, dtype=float)
        for _ in range(self.cfg.refine_rounds):
            axes = [phi[a] + widths[a] * offsets for a in range(len(phi))]
            if self.problem.uses_t:
                axes[2] = np.clip(axes[2], 0.0, 1.0)
            mesh = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1)
            vals = self.score(mesh)
            k = int(np.argmax(vals))
            gap = 0.0
            if vals.flat[k] > value:
                gap = float(vals.flat[k] - value)
                value = float(vals.flat[k])
                phi = mesh.reshape(-1, len(phi))[k].copy()
            widths = widths / SHRINK
        return phi, value, gap

    def candidate(self, phi, gap):
        X, V, T = self.points(phi)
        x, y = self.problem.pair(X, V, T)
        return _certify(self.problem, x, y, gap)

    def run(self, warm_start=None):
        res = self.cfg.grid_resolution
        best = None
        for level in _cascade_levels(res):
            phi, value = self.coarse(level)
            h = 2 * np.pi / level
            widths = [h, h] + ([1.0 / (T_NODES - 1)] if self.problem.uses_t else [])
            phi, value, gap = self.refine(phi, value, widths)
            cand = self.candidate(phi, gap)
            if _better(best, cand, self.problem.sense):
                best = cand
        if warm_start is not None:
            phi = self.angles_of(*warm_start)
            value = float(self.score(phi[None])[0])
            h = 2 * np.pi / res
            widths = [h, h] + ([1.0 / (T_NODES - 1)] if self.problem.uses_t else [])
            phi, value, gap = self.refine(phi, value, widths)
            cand = self.candidate(phi, gap)
            if _better(best, cand, self.problem.sense):
                best = cand
        return best

    def angles_of(self, x, y):
        phi = [math.atan2(x[1], x[0]), math.atan2(y[1], y[0])]
        if self.problem.uses_t:
            phi.append(min(1.0, float(self.space.norm(np.asarray(y)))))
        return np.array(phi)


# -- dim >= 3: multi-start compass search ---------------------------------------

class _MultiStartSearch:
    INIT_STEP = 0.25
    MIN_STEP = 1e-9

    def __init__(self, space, problem, cfg):
        self.space, self.problem, self.cfg = space, problem, cfg
        self.n = space.dim
        self.m = 2 * self.n + (1 if problem.uses_t else 0)
        self.evaluations = 0

    def split(self, Z):
        n = self.n
        U, W = Z[..., :n], Z[..., n:2 * n]
        X = U / self.space.norm(U)[..., None]
        V = W / self.space.norm(W)[..., None]
        T = np.clip(Z[..., 2 * n], 0.0, 1.0) if self.problem.uses_t else None
        return X, V, T

    def score(self, Z):
        self.evaluations += int(np.prod(Z.shape[:-1]))
        return self.problem.score(*self.split(Z))

    def start(self, k):
        rng = np.random.default_rng([self.cfg.seed, k])
        z = rng.standard_normal(self.m)
        if self.problem.uses_t:
            z[-1] = rng.uniform(0.0, 1.0)
        return z

    def _renormalize(self, Z):
        n = self.n
        for sl in (slice(0, n), slice(n, 2 * n)):
            block = Z[:, sl]
            r = np.linalg.norm(block, axis=1, keepdims=True)
            Z[:, sl] = block / np.where(r > 0, r, 1.0)
        return Z

    def compass(self, Z):
        """Vectorized compass search from every row of ``Z``.

        Each iteration polls the ``2m`` coordinate moves of every active
        start, takes the best improving one, and halves the step when none
        improves.  Returns final points, values, and per-start gap: the gain
        over the last tenth of that start's iterations.
        """
        S, m = Z.shape
        E = np.vstack([np.eye(m), -np.eye(m)])
        Z = self._renormalize(Z.copy())
        f = self.score(Z)
        step = np.full(S, self.INIT_STEP)
        history = [f.copy()]
        stopped_at = np.full(S, -1)
        for it in range(self.cfg.local_iters):
            active = np.flatnonzero(step >= self.MIN_STEP)
            stopped_at[(stopped_at < 0) & (step < self.MIN_STEP)] = it
            if active.size == 0:
                break
            C = Z[active, None, :] + step[active, None, None] * E[None]
            fc = self.score(C.reshape(-1, m)).reshape(active.size, 2 * m)
            j = np.argmax(fc, axis=1)
            fbest = fc[np.arange(active.size), j]
            up = fbest > f[active]
            mv = active[up]
            Z[mv] = self._renormalize(C[up, j[up]])
            f[mv] = fbest[up]
            step[active[~up]] *= 0.5
            history.append(f.copy())
        history = np.array(history)
        last = len(history) - 1
        end = np.where(stopped_at >= 0, stopped_at, last)
        window = max(1, self.cfg.local_iters // 10)
        begin = np.maximum(0, end - window)
        cols = np.arange(S)
        gap = history[end, cols] - history[begin, cols]
        return Z, f, gap

    def candidate(self, z, gap):
        X, V, T = self.split(z[None])
        x, y = self.problem.pair(X, V, T)
        return _certify(self.problem, x[0], y[0], float(gap))

    def run(self, warm_start=None):
        Z0 = np.array([self.start(k) for k in range(self.cfg.starts)])
        Z, f, gap = self.compass(Z0)
        best = None
        for k in range(len(Z)):
            cand = self.candidate(Z[k], gap[k])
            if _better(best, cand, self.problem.sense):
                best = cand
        if warm_start is not None:
            x, y = (np.asarray(v, dtype=float) for v in warm_start)
            z = np.concatenate([x, y])
            if self.problem.uses_t:
                ny = float(self.space.norm(y))
                z = np.concatenate([x, y / ny if ny > 0 else y, [min(1.0, ny)]])
            Zw, fw, gw = self.compass(z[None])
            cand = self.candidate(Zw[0], gw[0])
            if _better(best, cand, self.problem.sense):
                best = cand
        return best


def _vertex_candidate(space, problem):
    V = ball_vertices(space)
    if V is None or not problem.vertex_exact:
        return None, 0
    X, Y = V[:, None, :], V[None, :, :]
    if not problem.uses_t:
        vals = problem.score(X, Y, None)
        i, j = np.unravel_index(int(np.argmax(vals)), vals.shape)
        return _certify(problem, V[i], V[j], 0.0), int(vals.size)
    # exact in the vertex pair; a shrinking line search in the scale t
    t = np.linspace(0.0, 1.0, 1025)
    vals = problem.score(X[..., None, :], Y[..., None, :], t)
    evaluations = int(vals.size)
    i, j, k = np.unravel_index(int(np.argmax(vals)), vals.shape)
    x, v, t0, best = V[i], V[j], t[k], float(vals[i, j, k])
    width, gap = 1.0 / 1024, 0.0
    offsets = np.linspace(-1.0, 1.0, REFINE_NODES)
    for _ in range(8):
        ts = np.clip(t0 + width * offsets, 0.0, 1.0)
        f = problem.score(x, v, ts)
        evaluations += ts.size
        m = int(np.argmax(f))
        gap = max(0.0, float(f[m]) - best)
        if f[m] > best:
            best, t0 = float(f[m]), ts[m]
        width /= SHRINK
    return _certify(problem, x, t0 * v, gap), evaluations


def _cascade_levels(res):
    levels = [res]
    while levels[-1] % 2 == 0 and levels[-1] // 2 >= 8:
        levels.append(levels[-1] // 2)
    return levels


class _DeltaBoundarySearch:
    """Planar modulus search on the constraint curve ``||x - y|| = eps``.

    In a normed plane the distance from ``x`` to ``y`` is monotone as ``y``
    runs along the unit circle from ``x`` to ``-x``, so for every ``x`` a
    bisection over that half-turn finds the admissible partner nearest to
    ``x``.  The other half-turn gives the same pairs with roles swapped.
    The problem is then a one-dimensional minimization over the angle of ``x``.
    """

    BISECTIONS = 60

    def __init__(self, space, eps, cfg):
        self.space, self.eps, self.cfg = space, eps, cfg
        self.evaluations = 0

    def partners(self, theta):
        X = circle_points(self.space, theta)
        lo = np.zeros_like(theta)
        hi = np.full_like(theta, np.pi)
        # keep ||x - y(hi)|| >= eps throughout; hi = 0 when eps is already met at y = x
        hi = np.where(self.eps <= FEASIBILITY_SLACK, 0.0, hi)
        for _ in range(self.BISECTIONS):
            mid = (lo + hi) / 2
            ok = self.space.norm(X - circle_points(self.space, theta + mid)) >= self.eps
            lo, hi = np.where(ok, lo, mid), np.where(ok, mid, hi)
        self.evaluations += theta.size * self.BISECTIONS
        return X, circle_points(self.space, theta + hi)

    def score(self, theta):
        X, Y = self.partners(theta)
        return -(1.0 - self.space.norm(X + Y) / 2.0), X, Y

    def run(self):
        best = None
        problem = _delta_problem(self.space, self.eps)
        offsets = np.linspace(-1.0, 1.0, REFINE_NODES)
        for level in _cascade_levels(self.cfg.grid_resolution):
            theta = 2 * np.pi * np.arange(level) / level
            vals, X, Y = self.score(theta)
            k = int(np.argmax(vals))
            t0, value, x, y = theta[k], float(vals[k]), X[k], Y[k]
            width, gap = 2 * np.pi / level, 0.0
            for _ in range(self.cfg.refine_rounds):
                vals, X, Y = self.score(t0 + width * offsets)
                k = int(np.argmax(vals))
                gap = 0.0
                if vals[k] > value:
                    gap = float(vals[k] - value)
                    t0, value, x, y = t0 + width * offsets[k], float(vals[k]), X[k], Y[k]
                width /= SHRINK
            cand = _certify(problem, x, y, gap)
            if _better(best, cand, problem.sense):
                best = cand
        return best


def _search(space, problem, cfg, warm_start=None):
    engine = (_PlanarSearch if space.dim == 2 else _MultiStartSearch)(space, problem, cfg)
    best = engine.run(warm_start)
    cand, ev = _vertex_candidate(space, problem)
    if cand is not None and _better(best, cand, problem.sense):
        best = cand
    return best, engine.evaluations + ev


def _result(best, evaluations, cfg, quantity, parameter):
    return EstimateResult(value=float(best.value), witness_x=best.x, witness_y=best.y,
                          evaluations=int(evaluations), config=cfg,
                          converged=bool(best.gap <= cfg.tol), gap=float(best.gap),
                          quantity=quantity, parameter=parameter)


# -- public estimators -----------------------------------------------------------

def estimate_lprime_y(space: NormedSpace, lam: float, cfg: EstimatorConfig = None,
                      warm_start=None) -> EstimateResult:
    """Estimate ``sup ||lam x+(1-lam) y||^2 + lam(1-lam)||x-y||^2`` over unit pairs.

    At ``lam`` in {0, 1} the objective is identically 1, so the exact value
    is returned without searching.
    """
    cfg = cfg or EstimatorConfig()
    lam = _check_lambda(lam)
    if lam in (0.0, 1.0):
        e = np.zeros(space.dim)
        e[0] = 1.0
        e = e / float(space.norm(e))
        return EstimateResult(1.0, e, e.copy(), 0, cfg, True, 0.0, "ly", lam)
    best, ev = _search(space, _ly_problem(space, lam), cfg, warm_start)
    return _result(best, ev, cfg, "ly", lam)


def sweep_lprime_y(space: NormedSpace, lambdas: Sequence[float],
                   cfg: EstimatorConfig = None) -> SweepResult:
    """Estimate the constant along an increasing grid, warm-starting each
    node from the previous witness."""
    cfg = cfg or EstimatorConfig()
    lam = np.array([_check_lambda(v) for v in lambdas], dtype=float)
    if lam.size == 0:
        raise InputError("empty lambda grid")
    if np.any(np.diff(lam) <= 0):
        raise InputError("lambda grid must be strictly increasing")
    out, warm = [], None
    for v in lam:
        est = estimate_lprime_y(space, v, cfg, warm_start=warm)
        if est.evaluations:
            warm = (est.witness_x, est.witness_y)
        out.append(est)
    return SweepResult(lam, tuple(out))


def estimate_cnj(space: NormedSpace, cfg: EstimatorConfig = None) -> EstimateResult:
    """Estimate the von Neumann-Jordan constant.

    By homogeneity the search runs over ``x`` on the sphere and ``y = t v``
    with ``v`` on the sphere and ``t`` in [0, 1]; the returned ``witness_y``
    is the scaled vector ``t v``.
    """
    cfg = cfg or EstimatorConfig()
    best, ev = _search(space, _cnj_problem(space), cfg)
    return _result(best, ev, cfg, "cnj", None)


def estimate_cnj_prime_and_E(space: NormedSpace, cfg: EstimatorConfig = None):
    """Estimate the modified von Neumann-Jordan constant and Gao's E.

    Both come from one search; E is four times the first with the same witness.
    """
    cfg = cfg or EstimatorConfig()
    best, ev = _search(space, _gao_problem(space), cfg)
    cnjp = _result(best, ev, cfg, "cnjp", None)
    e_val = float((space.norm(best.x + best.y) ** 2 + space.norm(best.x - best.y) ** 2))
    gao = replace(cnjp, value=e_val, gap=4 * cnjp.gap, quantity="e")
    return cnjp, gao


def estimate_delta(space: NormedSpace, eps: float, cfg: EstimatorConfig = None,
                   warm_start=None) -> EstimateResult:
    """Upper estimate of the modulus of convexity at ``eps``.

    Pairs with ``||x - y|| < eps`` are discarded (up to a 1e-12 slack).
    Raises :class:`InfeasibleError` when no admissible pair was found.
    """
    cfg = cfg or EstimatorConfig()
    eps = float(eps)
    if not 0.0 <= eps <= 2.0:
        raise InputError(f"eps must lie in [0, 2], got {eps}")
    problem = _delta_problem(space, eps)
    best, ev = _search(space, problem, cfg, warm_start)
    if space.dim == 2:
        boundary = _DeltaBoundarySearch(space, eps, cfg)
        cand = boundary.run()
        ev += boundary.evaluations
        if _better(best, cand, problem.sense):
            best = cand
    if not best.feasible:
        raise InfeasibleError(f"no pair with ||x-y|| >= {eps} found at this resolution")
    return _result(best, ev, cfg, "delta", eps)


# -- bounds through the modulus of convexity -------------------------------------------

def hilbert_delta(eps):
    """Modulus of convexity of any inner product space."""
    eps = np.asarray(eps, dtype=float)
    return 1.0 - np.sqrt(np.maximum(0.0, 1.0 - eps ** 2 / 4.0))


def zero_delta(eps):
    return np.zeros_like(np.asarray(eps, dtype=float))


def analytic_delta_profile(space: NormedSpace) -> Optional[Callable]:
    """Exact modulus of convexity where it is known in closed form.

    l_2 gives the Hilbert profile; l_1 and l_inf contain an isometric copy of
    the square plane, so their modulus vanishes on all of [0, 2].
    """
    d = space.descriptor
    if isinstance(d, Lp):
        if d.p == 2:
            return hilbert_delta
        if d.p == 1 or math.isinf(d.p):
            return zero_delta
    return None


def _check_lam_eps(lam, eps):
    lam = _check_lambda(lam)
    eps = float(eps)
    if not 0.0 <= eps <= 2.0:
        raise InputError(f"eps must lie in [0, 2], got {eps}")
    return lam, eps


def ly_delta_lower_bound(lam: float, eps: float, delta: float) -> float:
    """Lower bound ``(2(1-delta) - |2lam-1| eps)^2 / 4 + lam(1-lam) eps^2``.

    Valid whenever ``delta`` is the modulus of convexity at ``eps``.  The
    cross term carries a minus sign: with a plus sign the expression exceeds
    1 at ``lam = 0`` for small ``eps``, where the constant is exactly 1.
    """
    lam, eps = _check_lam_eps(lam, eps)
    delta = float(delta)
    if not 0.0 <= delta <= 1.0:
        raise InputError(f"delta must lie in [0, 1], got {delta}")
    return 0.25 * (2.0 * (1.0 - delta) - abs(2.0 * lam - 1.0) * eps) ** 2 + lam * (1.0 - lam) * eps ** 2


def ly_delta_upper_term(lam: float, eps: float, delta: float) -> float:
    """``(2lam + |1-2lam| - 2lam delta)^2 + lam(1-lam) eps^2`` for pairs at distance ``eps``."""
    lam, eps = _check_lam_eps(lam, eps)
    return (2 * lam + abs(1 - 2 * lam) - 2 * lam * float(delta)) ** 2 + lam * (1 - lam) * eps ** 2


def ly_delta_upper_bound(lam: float, delta_profile: Callable, eps_grid=None) -> float:
    """Global upper bound on the constant from a modulus-of-convexity profile.

    Every unit pair sits at some distance ``e`` and its objective is at most
    :func:`ly_delta_upper_term` at ``e``; the bound is the largest term over
    ``eps_grid`` (default: step 1/256 on [0, 2]).  Between nodes this relies
    on the term varying continuously, so the grid must be fine.

    ``delta_profile`` must be non-decreasing and no larger than the true
    modulus; a non-monotone profile raises :class:`InputError`.
    """
    lam = _check_lambda(lam)
    grid = np.linspace(0.0, 2.0, 513) if eps_grid is None else np.asarray(eps_grid, dtype=float)
    if grid.ndim != 1 or grid.size == 0 or grid.min() < 0 or grid.max() > 2:
        raise InputError("eps grid must be a non-empty subset of [0, 2]")
    grid = np.unique(grid)
    d = np.asarray(delta_profile(grid), dtype=float) * np.ones_like(grid)
    if np.any(np.diff(d) < -1e-15):
        raise InputError("delta profile is not non-decreasing")
    terms = (2 * lam + abs(1 - 2 * lam) - 2 * lam * d) ** 2 + lam * (1 - lam) * grid ** 2
    return float(terms.max())
