"""Self-checks for the brute-force reference implementation."""

import mpmath as mp
import pytest

from oracle import (
    bisect_zero,
    certify_sign_change,
    oracle_cylinder,
    oracle_cylinder_prime,
    oracle_j,
    oracle_y,
    oracle_zeros,
)


def test_j_half_integer_closed_form():
    # J_{1/2}(x) = sqrt(2/(pi x)) sin x
    with mp.workdps(40):
        for x in (mp.mpf("0.5"), mp.mpf(3), mp.pi, mp.mpf(20)):
            ref = mp.sqrt(2 / (mp.pi * x)) * mp.sin(x)
            assert abs(oracle_j(0.5, x) - ref) < mp.mpf("1e-35")


def test_y_half_integer_closed_form():
    # Y_{1/2}(x) = -sqrt(2/(pi x)) cos x
    with mp.workdps(40):
        for x in (mp.mpf(1), mp.pi, mp.mpf(10)):
            ref = -mp.sqrt(2 / (mp.pi * x)) * mp.cos(x)
            assert abs(oracle_y(0.5, x) - ref) < mp.mpf("1e-35")


def test_wronskian_identity_pins_j_and_y():
    # J_nu(x) Y'_nu(x) - J'_nu(x) Y_nu(x) = 2/(pi x), a cross-check that
    # couples the series and the reflection/limiting forms
    with mp.workdps(50):
        for nu in (mp.mpf(0), mp.mpf("0.3"), mp.mpf(2), mp.mpf("4.7")):
            for x in (mp.mpf(1), mp.mpf(7), mp.mpf(23)):
                j = oracle_j(nu, x)
                y = oracle_y(nu, x)
                jp = -oracle_j(nu + 1, x) + nu / x * j
                yp = -oracle_y(nu + 1, x) + nu / x * y
                assert abs(j * yp - jp * y - 2 / (mp.pi * x)) < mp.mpf("1e-30")


def test_cylinder_prime_matches_high_precision_diff():
    with mp.workdps(80):
        x = mp.mpf("3.7")
        h = mp.mpf("1e-20")
        num = (
            oracle_cylinder("1.5", mp.pi / 3, x + h, dps=90)
            - oracle_cylinder("1.5", mp.pi / 3, x - h, dps=90)
        ) / (2 * h)
        assert abs(oracle_cylinder_prime("1.5", mp.pi / 3, x) - num) < mp.mpf("1e-25")


def test_bisection_needs_sign_change():
    with pytest.raises(ValueError):
        bisect_zero(lambda t: t * t + 1, 0, 1)


def test_zero_enumeration_and_certification():
    zs = oracle_zeros(0.5, 0, 4)
    with mp.workdps(40):
        for s, z in enumerate(zs, start=1):
            assert abs(z - s * mp.pi) < mp.mpf("1e-25")
    assert certify_sign_change(lambda t: oracle_j(0.5, t), zs[0])
