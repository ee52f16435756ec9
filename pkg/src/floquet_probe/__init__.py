"""Quasienergy spectroscopy of strongly driven two-level systems.

Core layers: a truncated Floquet solver with zone folding, closed-form
rotating-wave approximations with second-order shifts, Ohmic-bath dephasing
rates and steady-state populations, golden-rule probe absorption with
Kramers-Kronig dispersion, a bichromatic (drive + probe) Floquet solver, and
brute-force integration oracles used for verification.  All energies are in
units of the drive quantum and all rates in units of the drive frequency.
"""

from .errors import FloquetProbeError
from .hamiltonian import AtomicHamiltonian, QubitParams, qubit_hamiltonian
from .floquet import (QuasienergySolution, TruncationSpec, fold_to_zone,
                      labeled_states, quasienergy_gap, solve_qubit,
                      solve_quasienergies, zone_distance)
from .analytic import (INAPPLICABLE, Basis, adiabatic_quasienergy_gap,
                       bessel_root, choose_basis, corrected_quasienergy_gap,
                       lz_probability, rwa_quasienergy_gap,
                       rwa_transition_amplitude)
from .bath import (BathParams, RateSet, calibrate_kappa, rates_for_solution,
                   reference_gamma, x_elements)
from .probe import (ProbeSpec, golden_rule_rate, golden_rule_spectrum,
                    kramers_kronig, resonance_condition)
from .twomode import (TwoModeTruncation, measure_anticrossing,
                      qubit_probe_blocks, solve_two_mode)
from .oracles import lindblad_sigma_z_spectrum, monodromy_quasienergies
from .sweep import AxisSpec, SweepConfig, run_sweep
from .datasets import SpectrumDataset, read_dataset, write_dataset

__all__ = [
    "AtomicHamiltonian", "AxisSpec", "BathParams", "Basis",
    "FloquetProbeError", "INAPPLICABLE", "ProbeSpec", "QuasienergySolution",
    "QubitParams", "RateSet", "SpectrumDataset", "SweepConfig",
    "TruncationSpec", "TwoModeTruncation", "adiabatic_quasienergy_gap",
    "bessel_root", "calibrate_kappa", "choose_basis",
    "corrected_quasienergy_gap", "fold_to_zone", "golden_rule_rate",
    "golden_rule_spectrum", "kramers_kronig", "labeled_states",
    "lindblad_sigma_z_spectrum", "lz_probability", "measure_anticrossing",
    "monodromy_quasienergies", "qubit_hamiltonian", "qubit_probe_blocks",
    "quasienergy_gap", "rates_for_solution", "read_dataset",
    "reference_gamma", "resonance_condition", "run_sweep",
    "rwa_quasienergy_gap", "rwa_transition_amplitude", "solve_qubit",
    "solve_quasienergies", "solve_two_mode", "write_dataset",
    "x_elements", "zone_distance",
]

__version__ = "0.1.0"
