"""Finite-dimensional normed spaces: the catalog, unit spheres, axiom checks.

Every space evaluates its norm along the last axis of an array, so a
``(..., dim)`` batch of vectors yields a ``(...)`` batch of norms.  The
checked single-vector entry point is :func:`norm_eval`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence, Union

import numpy as np
from scipy.spatial import ConvexHull, QhullError

from .errors import DegenerateDirectionError, InputError, UnsupportedDimensionError
from .report import CheckItem, FAIL, PASS

HOMOGENEITY_RTOL = 1e-9
TRIANGLE_SLACK = 1e-12


@dataclass(frozen=True)
class Lp:
    """``(sum |x_i|^p)^(1/p)``; ``p = math.inf`` is the max norm."""

    p: float
    dim: int

    def __post_init__(self):
        if not (self.p >= 1):
            raise InputError(f"l_p needs p >= 1, got {self.p}")
        if int(self.dim) != self.dim or self.dim < 2:
            raise InputError(f"l_p needs dim >= 2, got {self.dim}")

    def describe(self) -> str:
        p = "inf" if math.isinf(self.p) else format(self.p, "g")
        return f"lp:{p}:dim={self.dim}"

    def evaluate(self, a: np.ndarray) -> np.ndarray:
        a = np.abs(a)
        p = self.p
        if math.isinf(p):
            return a.max(axis=-1)
        if p == 1:
            return a.sum(axis=-1)
        if p == 2:
            return np.sqrt(np.einsum("...i,...i->...", a, a))
        # scale by the max entry so large p neither overflows nor underflows
        m = a.max(axis=-1)
        safe = np.where(m > 0, m, 1.0)
        r = a / safe[..., None]
        return m * np.sum(r ** p, axis=-1) ** (1.0 / p)


@dataclass(frozen=True)
class MaxPlusWeightedL2:
    """``max_i |x_i| + (sum_i |x_i|^2 / 4^i)^(1/2)``, coordinates indexed from 1.

    A ``dim``-coordinate truncation of the classical renorming of c0.
    """

    dim: int = 8

    def __post_init__(self):
        if int(self.dim) != self.dim or self.dim < 1:
            raise InputError(f"c0 truncation needs dim >= 1, got {self.dim}")

    def describe(self) -> str:
        return f"c0trunc:dim={self.dim}"

    def evaluate(self, a: np.ndarray) -> np.ndarray:
        w = 0.5 ** np.arange(1, self.dim + 1)  # sqrt(4^-i)
        wa = a * w
        return np.abs(a).max(axis=-1) + np.sqrt(np.einsum("...i,...i->...", wa, wa))


@dataclass(frozen=True)
class PolygonGauge:
    """Minkowski gauge of the absolutely convex hull of ``±vertices`` in the plane.

    The gauge is ``max_k <n_k, x> / c_k`` over the hull edges ``<n_k, z> = c_k``,
    which is exact for a polygon containing the origin in its interior.
    """

    vertices: tuple
    source: str = ""
    _normals: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        v = np.asarray(self.vertices, dtype=float)
        if v.ndim != 2 or v.shape[1] != 2:
            raise UnsupportedDimensionError("polygon gauges are only defined in the plane")
        if len(v) < 2:
            raise InputError("a polygon gauge needs at least 2 vertices")
        if not np.all(np.isfinite(v)):
            raise InputError("polygon vertices must be finite")
        object.__setattr__(self, "vertices", tuple(tuple(float(c) for c in row) for row in v))
        pts = np.vstack([v, -v])
        try:
            hull = ConvexHull(pts)
        except QhullError as exc:
            raise InputError("polygon has empty interior (vertices collinear through the origin)") from exc
        eq = hull.equations  # rows (a, b) with a.z + b <= 0 inside
        scale = np.abs(pts).max()
        c = -eq[:, 2]
        if np.any(c <= 1e-12 * scale):
            raise InputError("origin is not strictly inside the polygon")
        object.__setattr__(self, "_normals", eq[:, :2] / c[:, None])

    @property
    def dim(self) -> int:
        return 2

    def describe(self) -> str:
        if self.source:
            return f"polygon:{self.source}"
        return "polygon:[" + " ".join(f"{x:g},{y:g}" for x, y in self.vertices) + "]"

    def evaluate(self, a: np.ndarray) -> np.ndarray:
        g = np.einsum("...i,ki->...k", a, self._normals).max(axis=-1)
        return np.maximum(g, 0.0)


Descriptor = Union[Lp, MaxPlusWeightedL2, PolygonGauge]


@dataclass(frozen=True)
class NormedSpace:
    """A norm on R^dim, given by a declarative descriptor."""

    descriptor: Descriptor

    @property
    def dim(self) -> int:
        return self.descriptor.dim

    @property
    def name(self) -> str:
        return self.descriptor.describe()

    def norm(self, a) -> np.ndarray:
        """Unchecked batch evaluation along the last axis."""
        return self.descriptor.evaluate(np.asarray(a, dtype=float))

    def __str__(self) -> str:
        return self.name


def lp_space(p, dim: int = 2) -> NormedSpace:
    return NormedSpace(Lp(float(p), int(dim)))


def c0_truncation(dim: int = 8) -> NormedSpace:
    return NormedSpace(MaxPlusWeightedL2(int(dim)))


def polygon_space(vertices, source: str = "") -> NormedSpace:
    return NormedSpace(PolygonGauge(tuple(map(tuple, np.asarray(vertices, dtype=float))), source))


def regular_polygon_vertices(n: int, phase: float = 0.0) -> np.ndarray:
    """``n`` vertices spaced evenly on the Euclidean unit circle."""
    t = phase + 2 * np.pi * np.arange(n) / n
    return np.stack([np.cos(t), np.sin(t)], axis=-1)


def catalog() -> dict:
    """The built-in spaces, keyed by descriptor text."""
    spaces = [
        lp_space(2, 2), lp_space(2, 3), lp_space(1, 2), lp_space(math.inf, 2),
        lp_space(3, 2), lp_space(4, 2), lp_space(3, 3),
        polygon_space(regular_polygon_vertices(6), source="regular-hexagon"),
    ]
    return {s.name: s for s in spaces}


def ball_vertices(space: NormedSpace, limit: int = 512):
    """Extreme points of the unit ball for polyhedral norms, else ``None``.

    Covers l_1, l_inf (when ``2^dim <= limit``) and polygon gauges.
    """
    d = space.descriptor
    if isinstance(d, Lp) and d.p == 1:
        eye = np.eye(d.dim)
        return np.vstack([eye, -eye])
    if isinstance(d, Lp) and math.isinf(d.p) and 2 ** d.dim <= limit:
        signs = np.array(np.meshgrid(*[[1.0, -1.0]] * d.dim, indexing="ij")).reshape(d.dim, -1).T
        return signs
    if isinstance(d, PolygonGauge):
        v = np.asarray(d.vertices)
        pts = np.vstack([v, -v])
        hull = ConvexHull(pts)
        return _normalize_rows(space, pts[hull.vertices])
    return None


def as_vector(space: NormedSpace, x) -> np.ndarray:
    """Validate ``x`` as a point of ``space`` and return it as a float array."""
    v = np.asarray(x, dtype=float)
    if v.ndim != 1 or v.shape[0] != space.dim:
        raise InputError(f"expected a vector of length {space.dim}, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise InputError("vector has non-finite coordinates")
    return v


def norm_eval(space: NormedSpace, x) -> float:
    return float(space.norm(as_vector(space, x)))


def unit_vector(space: NormedSpace, u) -> np.ndarray:
    u = as_vector(space, u)
    n = float(space.norm(u))
    if n == 0.0:
        raise DegenerateDirectionError("cannot normalize the zero vector")
    return u / n


def _normalize_rows(space: NormedSpace, a: np.ndarray) -> np.ndarray:
    return a / space.norm(a)[..., None]


def circle_points(space: NormedSpace, theta) -> np.ndarray:
    """Points of the planar unit sphere in the Euclidean directions ``theta``."""
    theta = np.asarray(theta, dtype=float)
    d = np.stack([np.cos(theta), np.sin(theta)], axis=-1)
    return _normalize_rows(space, d)


def sphere_grid(space: NormedSpace, resolution: int) -> np.ndarray:
    """``resolution`` points of S_X at equally spaced Euclidean angles (dim 2)."""
    if space.dim != 2:
        raise UnsupportedDimensionError(f"sphere_grid needs dim 2, got {space.dim}")
    if resolution < 4:
        raise InputError("resolution must be at least 4")
    return circle_points(space, 2 * np.pi * np.arange(resolution) / resolution)


def sample_sphere(space: NormedSpace, count: int, seed: int) -> np.ndarray:
    """``count`` seeded points of S_X from normalized Gaussian directions."""
    if count < 1:
        raise InputError("count must be positive")
    rng = np.random.default_rng(seed)
    d = rng.standard_normal((count, space.dim))
    # a Gaussian draw of exact zeros has probability zero, but stay total
    zero = ~np.any(d, axis=-1)
    d[zero, 0] = 1.0
    return _normalize_rows(space, d)


def validate_norm_axioms(space: NormedSpace, trials: int = 1000, seed: int = 0) -> list:
    """Spot-check homogeneity, the triangle inequality and definiteness.

    Returns one :class:`CheckItem` per axiom; a failed item carries the
    worst offending pair as its witness.
    """
    if trials < 1:
        raise InputError("trials must be positive")
    rng = np.random.default_rng(seed)
    n = space.dim
    x = rng.standard_normal((trials, n)) * np.exp(rng.uniform(-2, 2, (trials, 1)))
    y = rng.standard_normal((trials, n)) * np.exp(rng.uniform(-2, 2, (trials, 1)))
    t = rng.uniform(-10, 10, trials)
    nx, ny = space.norm(x), space.norm(y)
    items = []

    lhs = space.norm(t[:, None] * x)
    rhs = np.abs(t) * nx
    rel = np.abs(lhs - rhs) / np.maximum(rhs, np.finfo(float).tiny)
    k = int(np.argmax(rel))
    items.append(CheckItem("axiom_homogeneity", PASS if rel[k] <= HOMOGENEITY_RTOL else FAIL,
                           float(rel[k]), 0.0, HOMOGENEITY_RTOL, (tuple(x[k]), None, None),
                           f"relative error of ||t x|| = |t| ||x|| at t={t[k]:.6g}"))

    excess = space.norm(x + y) - (nx + ny)
    k = int(np.argmax(excess))
    items.append(CheckItem("axiom_triangle", PASS if excess[k] <= TRIANGLE_SLACK else FAIL,
                           float(nx[k] + ny[k] + excess[k]), float(nx[k] + ny[k]), TRIANGLE_SLACK,
                           (tuple(x[k]), tuple(y[k]), None), "||x+y|| against ||x||+||y||"))

    zero = float(space.norm(np.zeros(n)))
    positive = float(nx.min())
    ok = zero == 0.0 and positive > 0.0
    items.append(CheckItem("axiom_definite", PASS if ok else FAIL, zero, positive, 0.0, None,
                           "lhs=||0||, rhs=min ||x|| over nonzero samples"))
    return items
