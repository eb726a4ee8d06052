import cmath
import math

import pytest

import dunkl


def test_bessel_and_kernel():
    assert dunkl.bessel_j(0.5, 2.0) == pytest.approx(math.sqrt(2 / (math.pi * 2.0)) * math.sin(2.0), abs=1e-14)
    assert abs(dunkl.dunkl_kernel(-0.5, 3.0) - cmath.exp(3j)) < 1e-13
    assert dunkl.gamma(5.0) == pytest.approx(24.0)


def test_gaussian_fixed_point_from_battery_id():
    y = dunkl.frequency_grid(21, 4.0)
    values = dunkl.dunkl_transform(1.3, "gaussian_unit", y)
    for t, v in zip(y, values):
        assert abs(v - math.exp(-t * t / 2)) < 1e-10


def test_python_callable_matches_battery():
    y = dunkl.frequency_grid(9, 3.0)
    a = dunkl.dunkl_transform(0.5, lambda x: math.exp(-((x - 1) ** 2)), y)
    b = dunkl.dunkl_via_hankel(0.5, "shifted_gaussian", y)
    assert max(abs(u - v) for u, v in zip(a, b)) < 1e-12


def test_partial_sums_converge():
    sums = dunkl.partial_sums(0.0, "gaussian", [2.0, 8.0, 16.0], 0.4, spectrum_n=1025)
    errors = [abs(s - math.exp(-0.16)) for s in sums]
    assert errors[0] > errors[1] > errors[2]
    assert errors[2] < 1e-9
    assert dunkl.maximal_operator(0.0, "gaussian", 0.4, r_max=8.0, log_radii=8, linear_radii=8,
                                  spectrum_n=257) >= abs(sums[1]) - 1e-9


def test_norms_and_range():
    assert dunkl.endpoint_exponents(0.0) == pytest.approx((4 / 3, 4.0))
    assert math.isinf(dunkl.endpoint_exponents(-0.5)[1])
    assert dunkl.ap_power_weight_check(0.0, 2.0)
    assert not dunkl.ap_power_weight_check(0.0, 5.0)
    grid = [-0.5, 0.5]
    assert dunkl.lp_norm(0.0, grid, [1.0, 1.0], 1.0) == pytest.approx(0.5)
    assert dunkl.lorentz_norm(0.0, grid, [1.0, 1.0], 2.0, math.inf) == pytest.approx(math.sqrt(0.5))


def test_errors_map_to_value_error():
    with pytest.raises(ValueError):
        dunkl.bessel_j(-0.6, 1.0)
    with pytest.raises(ValueError):
        dunkl.dunkl_transform(0.0, "no_such_function", [0.0])
    with pytest.raises(ValueError):
        dunkl.run_experiment("transform", {"unknown_key": 1})


def test_run_experiment():
    code, report, files = dunkl.run_experiment("transform", {"alpha": 0.0, "freq_n": 9})
    assert code == 0
    assert report["summary"]["decomposition_residual_sup"] < 1e-7
    assert report["parameters"]["freq_n"] == 9
    assert files["spectrum.csv"].startswith("y,re,im\n")
