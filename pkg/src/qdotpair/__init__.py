"""qdotpair: exciton couplings and two-qubit logic in coupled quantum dots.

Envelope-function models of cuboidal dots feed point-dipole biexciton and
transfer couplings, which drive a 4x4 two-qubit Hamiltonian supporting
free and laser-driven gate protocols (CNOT, Bell-state generation) plus a
decoherence-free-subspace dephasing check.
"""

from ._version import __version__
from .constants import (
    FIELD_MEV_PER_KV_CM_NM,
    HBAR2_OVER_2M0_MEV_NM2,
    HBAR_MEV_PS,
    K_E2_MEV_NM,
    PLANCK_H_MEV_PS,
)
from .coupling import (
    CouplingSet,
    PairGeometry,
    TransferTime,
    build_coupling_set,
    kp_atomic_dipole,
    large_field_dipole_limit,
    transfer_time,
    vf_dipole,
    vxx_point_dipole,
)
from .dynamics import (
    ALL_TRANSITIONS,
    BASIS_LABELS,
    EigenSystem,
    PulseSpec,
    TwoQubitHamiltonian,
    TwoQubitState,
    bell_via_biexciton,
    bell_via_forster,
    biexciton_scheme_fidelity,
    cnot12,
    concurrence,
    dfs_dephasing_check,
    eigensystem,
    evolve_driven,
    evolve_free,
    mixing_coefficient,
)
from .envelope import (
    BasisSpec,
    DotSpec,
    EnvelopeState,
    ParticleSpec,
    delta0,
    eh_overlap,
    exciton_dipole,
    exciton_energy,
    solve_axis,
    solve_particle,
)
from .errors import (
    ConfigError,
    ContractViolationError,
    IntegrationError,
    InvalidGeometryError,
    NoTransferError,
    NothingToPlotError,
    PhysicsError,
    QDotPairError,
    ResolutionError,
    SingularGeometryError,
    SubspaceError,
    UnboundStateError,
)
from .linalg import eigh, expm_i_h_t
from .scenario import (
    ResultTable,
    Scenario,
    SweepAxis,
    emit_plot_script,
    figure,
    parse_scenario,
    run_scenario,
    scenario_digest,
    serialize_scenario,
)

__all__ = [name for name in dir() if not name.startswith("_")]
