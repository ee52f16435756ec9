"""Brute-force verifiers that avoid the Sambe-space machinery.

Two independent routes: (a) the one-period propagator, whose eigenphases give
the quasienergies directly from an ODE integration; (b) the driven-Lindblad
steady state sigma_z correlator, whose Fourier transform is the probe
absorption spectrum up to the approximations of the dissipation model.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.integrate import solve_ivp
from scipy.linalg import expm

from .errors import (
    HorizonTooShort,
    IntegratorFailure,
    SteadyStateNotReached,
)
from .floquet import fold_to_zone
from .hamiltonian import SIGMA_X, SIGMA_Z, AtomicHamiltonian, QubitParams, qubit_hamiltonian


@dataclass(frozen=True)
class PropagatorResult:
    """One-period propagator and the quasienergies it encodes."""

    propagator: np.ndarray
    quasienergies: np.ndarray  # folded into [0, hbar*omega)
    unitarity_defect: float


@dataclass(frozen=True)
class CorrelatorSpectrum:
    """Steady-state sigma_z correlator spectrum on a probe-frequency grid."""

    omega_p: np.ndarray
    values: np.ndarray
    periodicity_residual: float


def one_period_propagator(h: AtomicHamiltonian, drive_frequency: float = 1.0,
                          integrator_tol: float = 1e-12) -> PropagatorResult:
    """Integrate i dU/ds = H(s) U over one drive period from the identity.

    s = omega * t is the drive phase; H is in units of hbar*omega, so the
    equation is already dimensionless.
    """
    if not (1e-14 <= integrator_tol <= 1e-6):
        raise ValueError("integrator_tol outside [1e-14, 1e-6]")
    d = h.dimension

    def rhs(s, y):
        u = y.reshape(d, d)
        return (-1j * h.time_domain(s) @ u).ravel()

    y0 = np.eye(d, dtype=complex).ravel()
    res = solve_ivp(rhs, (0.0, 2.0 * np.pi), y0, method="DOP853",
                    rtol=integrator_tol, atol=integrator_tol)
    if not res.success:
        raise IntegratorFailure(res.message)
    u = res.y[:, -1].reshape(d, d)
    defect = float(np.max(np.abs(u.conj().T @ u - np.eye(d))))
    if defect > 1e-8:
        raise IntegratorFailure(f"propagator unitarity defect {defect:.3e}")
    # eigenvalues exp(-i * eps * tau / hbar) = exp(-2 pi i eps / (hbar omega))
    phases = np.angle(np.linalg.eigvals(u))
    quasis = fold_to_zone(-phases / (2.0 * np.pi) * drive_frequency, drive_frequency)
    return PropagatorResult(propagator=u, quasienergies=np.sort(quasis),
                            unitarity_defect=defect)


def monodromy_quasienergies(h: AtomicHamiltonian, drive_frequency: float = 1.0,
                            integrator_tol: float = 1e-12) -> np.ndarray:
    """Folded quasienergies from the monodromy propagator eigenphases."""
    return one_period_propagator(h, drive_frequency, integrator_tol).quasienergies


# ---------------------------------------------------------------------------
# Driven Lindblad steady state and quantum-regression correlator
# ---------------------------------------------------------------------------

def _dissipator_superop(lindblad_op: np.ndarray) -> np.ndarray:
    """Column-stacking superoperator of D[L]rho = L rho L+ - {L+L, rho}/2."""
    d = lindblad_op.shape[0]
    eye = np.eye(d)
    ll = lindblad_op.conj().T @ lindblad_op
    return (np.kron(lindblad_op.conj(), lindblad_op)
            - 0.5 * np.kron(eye, ll) - 0.5 * np.kron(ll.T, eye))


def _hamiltonian_superop(h: np.ndarray) -> np.ndarray:
    eye = np.eye(h.shape[0])
    return -1j * (np.kron(eye, h) - np.kron(h.T, eye))


def _step_matrices(p: QubitParams, dissipator: np.ndarray, steps: int) -> list[np.ndarray]:
    """Fourth-order commutator-free Magnus step maps over one drive period."""
    h = qubit_hamiltonian(p)
    dt = 2.0 * np.pi / steps
    c1 = 0.5 - np.sqrt(3.0) / 6.0
    c2 = 0.5 + np.sqrt(3.0) / 6.0
    a1 = (3.0 - 2.0 * np.sqrt(3.0)) / 12.0
    a2 = (3.0 + 2.0 * np.sqrt(3.0)) / 12.0
    mats = []
    for j in range(steps):
        t0 = j * dt
        l1 = _hamiltonian_superop(h.time_domain(t0 + c1 * dt)) + dissipator
        l2 = _hamiltonian_superop(h.time_domain(t0 + c2 * dt)) + dissipator
        m = expm(dt * (a1 * l1 + a2 * l2)) @ expm(dt * (a2 * l1 + a1 * l2))
        mats.append(m)
    return mats


def _static_eigenbasis_dissipator(p: QubitParams, t1: float, t2: float) -> np.ndarray:
    """Relaxation 1/T1 plus pure dephasing, in the eigenbasis of H0."""
    if t1 <= 0 or t2 <= 0:
        raise ValueError("T1 and T2 must be positive")
    gamma_phi = 1.0 / t2 - 0.5 / t1
    if gamma_phi < -1e-12:
        raise ValueError("need 1/T2 >= 1/(2 T1) for a positive dephasing channel")
    gamma_phi = max(gamma_phi, 0.0)
    h0 = 0.5 * (p.eps0 * SIGMA_Z + p.delta * SIGMA_X)
    _, v = np.linalg.eigh(h0)  # columns: ground, excited
    ground, excited = v[:, 0], v[:, 1]
    lower = np.outer(ground, excited.conj())
    sz_eig = np.outer(excited, excited.conj()) - np.outer(ground, ground.conj())
    diss = (1.0 / t1) * _dissipator_superop(lower)
    if gamma_phi > 0:
        diss = diss + 0.5 * gamma_phi * _dissipator_superop(sz_eig)
    return diss


def lindblad_sigma_z_spectrum(p: QubitParams, drive_frequency: float = 1.0,
                              omega_p_grid=None, t1: float = 1.0, t2: float = 1.0,
                              horizon: float | None = None, amp_p: float = 1.0,
                              steps_per_period: int = 256,
                              n_t0: int = 16) -> CorrelatorSpectrum:
    """Probe absorption spectrum from the driven-Lindblad sigma_z correlator.

    Finds the time-periodic steady state as the unit eigenvector of the
    one-period Lindblad propagator, applies quantum regression from a grid of
    phases t0 within one period, averages, and Fourier-transforms the
    connected correlator with a cosine taper over the last 10% of the horizon.
    """
    if drive_frequency != 1.0:
        raise ValueError("oracle operates in units with omega = 1")
    omega_p_grid = np.atleast_1d(np.asarray(omega_p_grid, dtype=float))
    rate = 1.0 / t2
    if horizon is None:
        horizon = 8.0 / rate
    if np.pi / horizon > rate / 4.0:
        raise HorizonTooShort(
            f"horizon {horizon:.1f} resolves only {np.pi / horizon:.2e} > gamma/4")

    diss = _static_eigenbasis_dissipator(p, t1, t2)
    mats = _step_matrices(p, diss, steps_per_period)
    period_map = np.eye(4, dtype=complex)
    for m in mats:
        period_map = m @ period_map

    vals, vecs = np.linalg.eig(period_map)
    idx = int(np.argmin(np.abs(vals - 1.0)))
    if abs(vals[idx] - 1.0) > 1e-8:
        raise SteadyStateNotReached(
            f"no unit eigenvalue of the period map (closest {vals[idx]:.6f})")
    rho_ss = vecs[:, idx].reshape(2, 2, order="F")
    rho_ss = rho_ss / np.trace(rho_ss)
    residual = float(np.linalg.norm(
        (period_map @ rho_ss.reshape(-1, order="F")).reshape(2, 2, order="F") - rho_ss))
    if residual > 1e-8:
        raise SteadyStateNotReached(f"periodicity residual {residual:.3e}")

    steps = steps_per_period
    dt = 2.0 * np.pi / steps
    n_s = int(np.ceil(horizon / dt))
    if n_t0 < 1 or steps % n_t0 != 0:
        raise ValueError("n_t0 must divide steps_per_period")
    stride = steps // n_t0

    # steady state at each step within one period
    rho_t = [rho_ss.reshape(-1, order="F")]
    for m in mats:
        rho_t.append(m @ rho_t[-1])

    corr = np.zeros(n_s + 1, dtype=complex)
    for k in range(n_t0):
        j0 = k * stride
        rho0 = rho_t[j0].reshape(2, 2, order="F")
        mean0 = np.real(np.trace(SIGMA_Z @ rho0))
        b = (SIGMA_Z @ rho0).reshape(-1, order="F")
        rho = rho_t[j0].copy()
        track = np.empty(n_s + 1, dtype=complex)
        means = np.empty(n_s + 1)
        track[0] = np.trace(SIGMA_Z @ (SIGMA_Z @ rho0))
        means[0] = mean0
        for s in range(1, n_s + 1):
            m = mats[(j0 + s - 1) % steps]
            b = m @ b
            rho = m @ rho
            track[s] = np.trace(SIGMA_Z @ b.reshape(2, 2, order="F"))
            means[s] = np.real(np.trace(SIGMA_Z @ rho.reshape(2, 2, order="F")))
        corr += track - means * mean0
    corr /= n_t0

    # cosine taper over the final 10% of the horizon
    s_axis = np.arange(n_s + 1) * dt
    window = np.ones(n_s + 1)
    tail = s_axis > 0.9 * horizon
    window[tail] = 0.5 * (1.0 + np.cos(
        np.pi * (s_axis[tail] - 0.9 * horizon) / (0.1 * horizon)))
    cw = corr * window
    cw[0] *= 0.5  # trapezoid endpoint
    # S = prefactor * 2 Re int_0^inf C(s) exp(i w s) ds
    phases = np.exp(1j * np.outer(omega_p_grid, s_axis))
    spectrum = (amp_p ** 2 / 16.0) * 2.0 * np.real(phases @ cw) * dt
    return CorrelatorSpectrum(omega_p=omega_p_grid, values=spectrum,
                              periodicity_residual=residual)
