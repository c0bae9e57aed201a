"""The brute-force references agree with closed forms and with the estimators."""

import math

import numpy as np
import pytest

from geomlab import estimate_cnj, estimate_delta, estimate_lprime_y, hilbert_delta, lp_space

from oracles import brute_cnj, brute_delta, brute_ly, lp

# frozen outputs of the oracles at resolution 4096
FROZEN_L3_HALF = 1.2599210498948732
FROZEN_L3_085 = 1.1074128255732305


def test_l3_half_is_cube_root_of_two():
    assert brute_ly(lp(3), 0.5, res=4096) == pytest.approx(2 ** (1 / 3), abs=1e-15)
    assert FROZEN_L3_HALF == pytest.approx(2 ** (1 / 3), abs=1e-15)


def test_l3_085_frozen():
    assert brute_ly(lp(3), 0.85, res=4096) == FROZEN_L3_085


@pytest.mark.parametrize("lam", [0.1, 0.25, 0.5, 0.8])
def test_square_saturation(lam):
    assert brute_ly(lp(np.inf), lam, res=256) == pytest.approx(1 + 4 * lam * (1 - lam), abs=1e-14)
    assert brute_ly(lp(1), lam, res=256) == pytest.approx(1 + 4 * lam * (1 - lam), abs=1e-14)


def test_hilbert_flat():
    for lam in (0.2, 0.5, 0.7):
        assert brute_ly(lp(2), lam, res=512) == pytest.approx(1.0, abs=1e-14)


@pytest.mark.parametrize("eps", [0.4, 1.0, 1.6])
def test_hilbert_modulus(eps):
    # grid pairs overshoot eps slightly, so the brute value sits just above the formula
    b = brute_delta(lp(2), eps, res=1024)
    assert 0.0 <= b - float(hilbert_delta(eps)) <= 5e-3


def test_l4_cnj():
    assert brute_cnj(lp(4), res=1024) == pytest.approx(math.sqrt(2), abs=1e-12)


@pytest.mark.parametrize("lam", [0.15, 0.4, 0.85])
def test_estimator_dominates_l3_grid(lam):
    est = estimate_lprime_y(lp_space(3, 2), lam).value
    ref = brute_ly(lp(3), lam, res=1024)
    assert ref - 1e-12 <= est <= ref + 1e-4


def test_estimator_modulus_below_grid():
    for eps in (0.5, 1.3):
        est = estimate_delta(lp_space(3, 2), eps).value
        ref = brute_delta(lp(3), eps, res=1024)
        assert ref - 5e-3 <= est <= ref + 1e-12


def test_estimator_cnj_matches_l3():
    assert estimate_cnj(lp_space(3, 2)).value == pytest.approx(brute_cnj(lp(3), res=1024), abs=1e-6)
