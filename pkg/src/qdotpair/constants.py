"""Physical constants in the canonical unit system used throughout qdotpair.

Canonical units, fixed package-wide:

    energy           meV
    length           nm
    time             ps
    electric field   kV/cm
    dipole moment    e*nm   (1 e*Angstrom = 0.1 e*nm)
    dielectric       dimensionless relative permittivity

All public functions accept and return these units only; any conversion
happens at the CLI/config boundary.
"""

import math

# Coulomb coupling k*e^2 = e^2 / (4 pi eps0)
K_E2_EV_NM = 1.43996          # eV*nm
K_E2_MEV_NM = 1439.96         # meV*nm

HBAR_MEV_PS = 0.6582119       # reduced Planck constant, meV*ps
PLANCK_H_MEV_PS = 4.135668    # Planck constant, meV*ps

# hbar^2 / (2 m0): kinetic-energy prefactor for effective-mass Hamiltonians
HBAR2_OVER_2M0_MEV_NM2 = 38.0998

# e * (1 kV/cm) * (1 nm) = 0.1 meV; exact unit identity, not a measured value
FIELD_MEV_PER_KV_CM_NM = 0.1

# Exported for CSV metadata headers so output files are self-describing.
CONSTANT_VALUES = {
    "k_e2_mev_nm": K_E2_MEV_NM,
    "hbar_mev_ps": HBAR_MEV_PS,
    "planck_h_mev_ps": PLANCK_H_MEV_PS,
    "hbar2_over_2m0_mev_nm2": HBAR2_OVER_2M0_MEV_NM2,
    "field_mev_per_kv_cm_nm": FIELD_MEV_PER_KV_CM_NM,
}


def _consistency_check():
    # h = 2*pi*hbar must hold to 6 significant figures
    assert abs(PLANCK_H_MEV_PS - 2.0 * math.pi * HBAR_MEV_PS) < 1e-5 * PLANCK_H_MEV_PS


_consistency_check()
