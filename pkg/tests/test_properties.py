"""Seeded invariants over every catalog space.

Each space gets 10^3 trials of coarse-versus-doubled estimates.  In the
plane the doubled knob is the grid resolution; in higher dimension it is
the number of starts, whose start sets are nested.
"""

import io

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from geomlab import (
    EstimateResult,
    EstimatorConfig,
    delta_objective,
    estimate_delta,
    estimate_lprime_y,
    hilbert_delta,
    ly_delta_lower_bound,
    ly_delta_upper_bound,
    ly_objective,
    sample_sphere,
    validate_norm_axioms,
)
from geomlab.constants import FEASIBILITY_SLACK, zero_delta
from geomlab.report import read_sweep_rows, write_sweep_rows

from conftest import CATALOG

TRIALS = 1000
COARSE = EstimatorConfig(grid_resolution=16, refine_rounds=1, starts=2, local_iters=10)
FINE = EstimatorConfig(grid_resolution=32, refine_rounds=1, starts=4, local_iters=10)

_cache = {}


def trials(name):
    """(quantity, parameter, coarse estimate, fine estimate) for each seeded trial."""
    if name in _cache:
        return _cache[name]
    space = CATALOG[name]
    rng = np.random.default_rng([7, sorted(CATALOG).index(name)])
    out = []
    for _ in range(TRIALS):
        if space.dim == 2 and rng.random() < 0.2:
            eps = float(rng.uniform(0, 2))
            out.append(("delta", eps, estimate_delta(space, eps, COARSE), estimate_delta(space, eps, FINE)))
        else:
            lam = float(rng.uniform(0, 1))
            out.append(("ly", lam, estimate_lprime_y(space, lam, COARSE), estimate_lprime_y(space, lam, FINE)))
    _cache[name] = out
    return out


names = pytest.mark.parametrize("name", sorted(CATALOG))


@names
def test_monotone_refinement(name):
    bad = []
    for quantity, param, coarse, fine in trials(name):
        if quantity == "ly" and fine.value < coarse.value:
            bad.append((param, coarse.value, fine.value))
        if quantity == "delta" and fine.value > coarse.value:
            bad.append((param, coarse.value, fine.value))
    assert not bad, bad[:5]


@names
def test_witness_certification(name):
    space = CATALOG[name]
    worst = 0.0
    for quantity, param, *ests in trials(name):
        for est in ests:
            if quantity == "ly":
                again = ly_objective(space, est.witness_x, est.witness_y, param)
            else:
                again = delta_objective(space, est.witness_x, est.witness_y)
                assert space.norm(est.witness_x - est.witness_y) >= param - FEASIBILITY_SLACK
            worst = max(worst, abs(again - est.value))
    assert worst <= 1e-12


@names
def test_norm_axioms(name):
    items = validate_norm_axioms(CATALOG[name], TRIALS, seed=3)
    assert [it.status for it in items] == ["pass"] * len(items)


@names
def test_csv_round_trip(name):
    space = CATALOG[name]
    rng = np.random.default_rng(99)
    X = sample_sphere(space, TRIALS, 1) * rng.uniform(1e-3, 1, (TRIALS, 1))
    Y = sample_sphere(space, TRIALS, 2)
    values = rng.standard_normal(TRIALS) * 10.0 ** rng.integers(-300, 300, TRIALS)
    values[:4] = [1.0, 0.1, 5e-324, np.nextafter(2.0, 0)]
    lambdas = np.sort(rng.uniform(0, 1, TRIALS))
    ests = [EstimateResult(float(v), x, y, int(e), COARSE)
            for v, x, y, e in zip(values, X, Y, rng.integers(0, 10 ** 9, TRIALS))]
    buf = io.StringIO()
    write_sweep_rows(buf, lambdas, ests)
    buf.seek(0)
    rows = read_sweep_rows(buf)
    assert len(rows) == TRIALS
    for (lam, value, x, y, ev), l0, est in zip(rows, lambdas, ests):
        assert lam == l0 and value == est.value and ev == est.evaluations
        assert np.array_equal(x, est.witness_x) and np.array_equal(y, est.witness_y)


unit = st.floats(0.0, 1.0)
eps_st = st.floats(0.0, 2.0)


@settings(max_examples=300, deadline=None)
@given(unit, eps_st)
def test_lower_bound_below_hilbert_value(lam, eps):
    assert ly_delta_lower_bound(lam, eps, float(hilbert_delta(eps))) <= 1.0 + 1e-12


@settings(max_examples=300, deadline=None)
@given(unit, eps_st)
def test_lower_bound_below_square_value(lam, eps):
    assert ly_delta_lower_bound(lam, eps, 0.0) <= 1 + 4 * lam * (1 - lam) + 1e-12


@settings(max_examples=100, deadline=None)
@given(unit)
def test_upper_bound_covers_known_values(lam):
    assert ly_delta_upper_bound(lam, hilbert_delta) >= 1.0 - 1e-12
    assert ly_delta_upper_bound(lam, zero_delta) >= 1 + 4 * lam * (1 - lam) - 1e-12


@settings(max_examples=50, deadline=None)
@given(st.floats(0.01, 0.99))
def test_sandwich_contains_planar_hilbert_estimate(lam):
    l2 = CATALOG["lp:2:dim=2"]
    value = estimate_lprime_y(l2, lam, COARSE).value
    for eps in (0.5, 1.0, 1.5):
        assert ly_delta_lower_bound(lam, eps, float(hilbert_delta(eps))) <= value + 1e-9
    assert value <= ly_delta_upper_bound(lam, hilbert_delta) + 1e-9
