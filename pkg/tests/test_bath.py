"""Ohmic-bath weights, X tables, rates, and the calibration round trip."""
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from floquet_probe.bath import (BathParams, bath_weights, calibrate_kappa,
                                gamma_and_populations, rates_for_solution,
                                reference_gamma, x_elements)
from floquet_probe.errors import ZeroDenominator
from floquet_probe.floquet import solve_qubit
from floquet_probe.hamiltonian import QubitParams
from floquet_probe.units import beta_from_physical


@given(st.floats(-8, 8), st.floats(0.1, 20), st.floats(1e-4, 1.0))
def test_bath_weights_positive_and_kms(x, beta, kappa):
    bath = BathParams(kappa=kappa, beta=beta)
    g, n = bath_weights(x, bath)
    assert n >= -1e-15
    g2, n2 = bath_weights(-x, bath)
    # thermal weight satisfies N(-x) = N(x) + G(x)
    assert n2 == pytest.approx(n + g, rel=1e-9, abs=1e-12)


def test_thermal_weight_zero_energy_limit():
    bath = BathParams(kappa=0.4, beta=2.5)
    _, n = bath_weights(0.0, bath)
    assert n == pytest.approx(0.4 / 2.5, rel=1e-12)


def test_x_table_hermitian_structure():
    sol = solve_qubit(QubitParams(1.05, 0.37, 3.3))
    table = x_elements(sol, sol.photon_cutoff)
    for n in range(-4, 5):
        assert table.element(0, 1, n) == pytest.approx(
            np.conj(table.element(1, 0, -n)), abs=1e-10)


def test_detailed_balance_undriven():
    p = QubitParams(0.3, 0.4, 0.0)
    for beta in (0.5, 2.24, 10.0):
        rates = rates_for_solution(solve_qubit(p), BathParams(1e-3, beta))
        assert rates.p_plus / rates.p_minus == pytest.approx(
            math.exp(-beta * p.omega0), rel=1e-9)


@settings(deadline=None, max_examples=15)
@given(st.floats(0.1, 3.0), st.floats(0.0, 5.0),
       st.sampled_from([0.37, 0.84]), st.floats(0.5, 5.0))
def test_populations_normalized_and_rate_positive(eps0, amp, delta, beta):
    sol = solve_qubit(QubitParams(eps0, delta, amp))
    rates = rates_for_solution(sol, BathParams(kappa=2e-3, beta=beta))
    assert 0.0 <= rates.p_minus <= 1.0
    assert rates.p_minus + rates.p_plus == pytest.approx(1.0, abs=1e-12)
    assert rates.gamma > 0.0


def test_gamma_linear_in_kappa():
    sol = solve_qubit(QubitParams(1.05, 0.37, 3.3))
    table = x_elements(sol, sol.photon_cutoff)
    g1 = gamma_and_populations(table, BathParams(1e-3, 2.24)).gamma
    g2 = gamma_and_populations(table, BathParams(7e-3, 2.24)).gamma
    assert g2 / g1 == pytest.approx(7.0, rel=1e-10)


def test_zero_coupling_rejected():
    sol = solve_qubit(QubitParams(1.05, 0.37, 3.3))
    table = x_elements(sol, sol.photon_cutoff)
    with pytest.raises(ZeroDenominator):
        gamma_and_populations(table, BathParams(0.0, 2.24))


def test_kappa_calibration_round_trip():
    cases = [(0.016, 0.37, 2.24),
             (0.045, 0.37, beta_from_physical(7.0, 150.0)),
             (0.17, 0.84, beta_from_physical(4.15, 70.0))]
    for target, delta, beta in cases:
        kappa = calibrate_kappa(target, delta, beta)
        back = reference_gamma(delta, beta, kappa)
        assert back == pytest.approx(target, rel=1e-8)


def test_calibration_anchor_value():
    kappa = calibrate_kappa(0.016, 0.37, 2.24)
    assert kappa == pytest.approx(0.0029769956204384797, rel=1e-12)
