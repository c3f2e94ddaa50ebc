"""Residual and derivative properties of the transformed friction relation."""

import math
import random

import mpmath
import pytest

from colebrook.core import (
    ColebrookParams,
    DomainError,
    first_derivative,
    lambda_of_x,
    residual,
    second_derivative,
    x_of_lambda,
)

mpmath.mp.dps = 50


def mp_residual(re, eps, x):
    re, eps, x = mpmath.mpf(re), mpmath.mpf(eps), mpmath.mpf(x)
    return x + 2 * mpmath.log(mpmath.mpf("2.51") * x / re + eps / mpmath.mpf("3.71")) / mpmath.log(10)


def fd_first(re, eps, x, h="1e-12"):
    h = mpmath.mpf(h)
    return float((mp_residual(re, eps, x + h) - mp_residual(re, eps, x - h)) / (2 * h))


def fd_second(re, eps, x, h="1e-10"):
    h = mpmath.mpf(h)
    num = mp_residual(re, eps, x + h) - 2 * mp_residual(re, eps, x) + mp_residual(re, eps, x - h)
    return float(num / (h * h))


def sample_points(n, seed=20260823):
    rng = random.Random(seed)
    pts = []
    for _ in range(n):
        re = math.exp(rng.uniform(math.log(4e3), math.log(1e8)))
        eps = math.exp(rng.uniform(math.log(1e-6), math.log(0.05)))
        x = rng.uniform(1.0, 15.0)
        pts.append((re, eps, x))
    return pts


class TestParamsValidation:
    def test_accepts_domain_interior(self):
        ColebrookParams(1e6, 0.01)

    def test_accepts_smooth_pipe(self):
        ColebrookParams(1e6, 0.0)

    def test_accepts_boundary(self):
        ColebrookParams(4e3, 1e-6)
        ColebrookParams(1e8, 0.05)

    @pytest.mark.parametrize("re,eps", [
        (100.0, 0.01),
        (2e8, 0.01),
        (1e6, -1e-3),
        (1e6, 0.06),
        (float("nan"), 0.01),
        (1e6, float("inf")),
    ])
    def test_rejects_out_of_domain(self, re, eps):
        with pytest.raises(DomainError):
            ColebrookParams(re, eps)

    def test_rejects_nonpositive_log_argument(self):
        p = ColebrookParams(1e6, 0.0)
        with pytest.raises(DomainError):
            residual(p, -1.0)


class TestDerivatives:
    def test_first_derivative_matches_central_differences(self):
        for re, eps, x in sample_points(200):
            p = ColebrookParams(re, eps)
            got = first_derivative(p, x)
            ref = fd_first(re, eps, x)
            assert abs(got - ref) / abs(ref) < 1e-6

    def test_second_derivative_matches_central_differences(self):
        for re, eps, x in sample_points(200, seed=7):
            p = ColebrookParams(re, eps)
            got = second_derivative(p, x)
            ref = fd_second(re, eps, x)
            assert abs(got - ref) / abs(ref) < 1e-5

    def test_first_derivative_exceeds_one(self):
        for re, eps, x in sample_points(100, seed=3):
            assert first_derivative(ColebrookParams(re, eps), x) > 1.0

    def test_second_derivative_negative(self):
        for re, eps, x in sample_points(100, seed=4):
            assert second_derivative(ColebrookParams(re, eps), x) < 0.0


class TestResidualShape:
    def test_strictly_increasing_in_x(self):
        p = ColebrookParams(6.23e4, 0.012)
        xs = [1.0 + 0.5 * i for i in range(28)]
        vals = [residual(p, x) for x in xs]
        assert all(b > a for a, b in zip(vals, vals[1:]))

    def test_increasing_in_roughness(self):
        # larger roughness raises the log argument, so the residual rises
        # and the root falls
        for re in (4e3, 1e6, 1e8):
            for x in (2.0, 7.0, 12.0):
                lo = residual(ColebrookParams(re, 1e-4), x)
                hi = residual(ColebrookParams(re, 1e-2), x)
                assert hi > lo

    def test_sign_change_over_bracket(self):
        for re, eps, _ in sample_points(50, seed=5):
            p = ColebrookParams(re, eps)
            assert residual(p, 1.0) < 0.0 < residual(p, 15.0)


class TestTransforms:
    def test_round_trip(self):
        for x in (1.0, 4.0, 7.273626085, 15.0):
            assert abs(x_of_lambda(lambda_of_x(x)) - x) <= 1e-15 * x
        for lam in (0.008, 0.02, 0.1):
            assert abs(lambda_of_x(x_of_lambda(lam)) - lam) <= 1e-15 * lam

    def test_rejects_nonpositive(self):
        with pytest.raises(DomainError):
            lambda_of_x(0.0)
        with pytest.raises(DomainError):
            x_of_lambda(-1.0)
