import cmath
import math

import pytest

qtate = pytest.importorskip("qtate")

H_STANDARD = -5.948985929717782


def test_unitarity_on_critical_line():
    for n in range(4):
        for tau in (-30.0, -1.5, 0.0, 0.25, 12.0):
            assert abs(abs(qtate.gamma_multiplier(n, tau)) - 1.0) < 1e-12


def test_gamma_N_closed_form():
    s = complex(0.3, 0.7)
    for n in range(3):
        expected = (1j) ** n * cmath.exp(
            (2 - 4 * s) * math.log(2 * math.pi)
            + qtate.log_gamma(2 * s + n / 2)
            - qtate.log_gamma(2 * (1 - s) + n / 2)
        )
        assert abs(qtate.gamma_N(n, s) - expected) < 1e-12 * abs(expected)


def test_strip_is_enforced():
    with pytest.raises(ValueError):
        qtate.gamma_N(0, complex(1.2, 0.0))


def test_h_minimum_and_k_parity():
    assert abs(qtate.h_N(0, 0.0) + 9.660370925243514) < 1e-10
    assert qtate.k_N(3, 0.0) == 0.0
    assert abs(qtate.h_N(2, 1.7) - qtate.h_N(2, -1.7)) < 1e-13


def test_g_constant():
    coefficients, _ = qtate.gamma0_expansion()
    assert abs(coefficients[0] - 1.0) < 1e-8
    assert abs(coefficients[1] - qtate.g_distribution_constant()) < 1e-6


def test_functional_equation():
    for n in range(3):
        assert qtate.functional_equation_residual(n, complex(0.2, 1.0)) < 1e-10


def test_callable_profile_matches_builtin_gaussian():
    f = qtate.IsotypicFunction.from_log_profile(0, lambda v: math.exp(-0.5 * v * v))
    g = qtate.IsotypicFunction.gaussian(0)
    assert qtate.spectral_discrepancy(f, g) < 1e-15
    assert abs(f.value_at_one() - 1.0) < 1e-12
    assert abs(f([0.0, 0.0, 0.0, 1.0]) - 1.0) < 1e-12


def test_operator_identities():
    f = qtate.IsotypicFunction.gaussian(1)
    assert qtate.spectral_discrepancy(qtate.op_H(f), qtate.op_A(f) + qtate.op_B(f)) < 1e-6
    commutator = 1j * (qtate.op_B(qtate.op_A(f)) - qtate.op_A(qtate.op_B(f)))
    assert qtate.spectral_discrepancy(commutator, qtate.op_K(f)) < 1e-6


def test_h_at_one_and_G_route():
    f = qtate.IsotypicFunction.gaussian(0)
    assert abs(qtate.op_H(f).value_at_one() - H_STANDARD) < 1e-9
    b = qtate.op_B(f).value_at_one()
    assert abs(qtate.op_B_at_one_via_G(f) - b) < 1e-3 * abs(b)


def test_trace_routes_and_fit():
    f = qtate.IsotypicFunction.gaussian(0)
    rows = qtate.residual_sweep(f, [2.0, 4.0])
    for row in rows:
        assert abs(row["trace_direct"] - row["trace_spectral"]) < 1e-4 * abs(row["trace_direct"])
    assert abs(rows[1]["residual"]) < abs(rows[0]["residual"])
    with pytest.raises(ValueError):
        qtate.residual_sweep(f, [4.0, 2.0])


def test_zero_function_trace():
    z = qtate.IsotypicFunction.zero(2)
    assert qtate.trace_spectral(3.0, z) == 0


def test_self_dual_gaussian_small_grid():
    probes = [[0.1, 0.2, -0.3, 0.05], [0.5, 0.0, 0.0, 0.0]]
    assert qtate.self_dual_error(2.0, 17, probes) < 1e-3
