"""Integration oracles: monodromy propagator and driven-Lindblad spectrum."""
import numpy as np
import pytest

from floquet_probe.floquet import solve_qubit, zone_distance
from floquet_probe.hamiltonian import QubitParams, qubit_hamiltonian
from floquet_probe.oracles import (_static_eigenbasis_dissipator,
                                   _step_matrices, lindblad_sigma_z_spectrum,
                                   monodromy_quasienergies,
                                   one_period_propagator)


def test_propagator_unitary():
    res = one_period_propagator(qubit_hamiltonian(QubitParams(1.3, 0.84, 2.7)))
    u = res.propagator
    assert np.allclose(u @ u.conj().T, np.eye(2), atol=1e-9)


def test_monodromy_matches_floquet_solver():
    for p in [QubitParams(0.2, 0.10, 0.6), QubitParams(1.05, 0.37, 3.3),
              QubitParams(4.8, 1.50, 5.9)]:
        ref = monodromy_quasienergies(qubit_hamiltonian(p))
        eps = solve_qubit(p).quasienergies
        assert max(zone_distance(e, ref).min() for e in eps) < 1e-7


def test_static_limit_quasienergies():
    p = QubitParams(0.45, 0.28, 0.0)
    ref = monodromy_quasienergies(qubit_hamiltonian(p))
    w0 = p.omega0
    expected = {(-w0 / 2) % 1.0, (w0 / 2) % 1.0}
    for e in expected:
        assert min(abs(ref - e)) < 1e-9


def test_lindblad_evolution_preserves_trace_and_positivity():
    p = QubitParams(0.9, 0.37, 1.5)
    diss = _static_eigenbasis_dissipator(p, t1=20.0, t2=10.0)
    mats = _step_matrices(p, diss, 128)
    rho = np.array([[0.8, 0.3 - 0.1j], [0.3 + 0.1j, 0.2]], dtype=complex)
    v = rho.reshape(-1, order="F")
    for cycle in range(50):
        for m in mats:
            v = m @ v
        r = v.reshape(2, 2, order="F")
        assert abs(np.trace(r).real - 1.0) < 1e-10
        assert np.min(np.linalg.eigvalsh(0.5 * (r + r.conj().T))) > -1e-9


def test_spectrum_peaks_at_static_splitting_when_undriven():
    p = QubitParams(0.4, 0.3, 0.0)
    grid = np.linspace(0.3, 0.7, 41)
    spec = lindblad_sigma_z_spectrum(p, omega_p_grid=grid, t1=10.0, t2=5.0,
                                     horizon=120.0)
    peak = grid[int(np.argmax(spec.values))]
    assert peak == pytest.approx(p.omega0, abs=0.05)


def test_spectrum_stable_under_horizon_doubling():
    p = QubitParams(1.05, 0.37, 1.2)
    grid = np.linspace(0.05, 0.8, 31)
    kwargs = dict(omega_p_grid=grid, t1=10.0, t2=5.0)
    s1 = lindblad_sigma_z_spectrum(p, horizon=160.0, **kwargs)
    s2 = lindblad_sigma_z_spectrum(p, horizon=320.0, **kwargs)
    total1 = np.trapezoid(s1.values, grid)
    total2 = np.trapezoid(s2.values, grid)
    assert total2 == pytest.approx(total1, rel=0.01)
