"""Two-qubit exciton Hamiltonian, its closed-form eigensystem, and gate protocols.

Basis order is (|00>, |01>, |10>, |11>) with the first digit the exciton
number on dot I. The interacting Hamiltonian is

    [[w0,      0,      0,    0            ],
     [0,   w0+w2,    V_F,    0            ],
     [0,     V_F,  w0+w1,    0            ],
     [0,       0,      0,  w0+w1+w2+V_XX ]]

Free evolution uses the exact spectral propagator. Driven evolution
integrates the time-dependent Schroedinger equation with a semiclassical
dipole drive of equal Rabi amplitude on every single-exciton transition;
spectral selectivity comes from detuning alone, which is the mechanism
the energy-selective gate scheme relies on.

Pulse carriers are phase-referenced to the start of their own pulse, and
the multi-pulse protocols return the state with the free diagonal phases
unwound (interaction picture), so target-state phases are deterministic.
"""

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .constants import HBAR_MEV_PS
from .errors import (
    ContractViolationError,
    IntegrationError,
    NoTransferError,
    PhysicsError,
    SubspaceError,
)
from .linalg import expm_i_h_t

BASIS_LABELS = ("00", "01", "10", "11")
_INDEX = {label: i for i, label in enumerate(BASIS_LABELS)}

# single-exciton transitions: (lower, upper) pairs differing in one qubit
ALL_TRANSITIONS = (("00", "01"), ("00", "10"), ("01", "11"), ("10", "11"))

_NORM_TOL = 1e-10
_STEP_DRIFT_TOL = 1e-8
_MAX_STEPS = 20_000_000


@dataclass(frozen=True)
class TwoQubitHamiltonian:
    """Parameters of the interacting two-qubit Hamiltonian (all meV)."""

    omega0_mev: float
    omega1_mev: float
    omega2_mev: float
    v_f_mev: float
    v_xx_mev: float

    def __post_init__(self):
        for name in ("omega0_mev", "omega1_mev", "omega2_mev", "v_f_mev", "v_xx_mev"):
            if not math.isfinite(getattr(self, name)):
                raise ContractViolationError(f"{name} must be finite")

    @property
    def delta0_mev(self):
        return self.omega1_mev - self.omega2_mev

    def matrix(self):
        w0, w1, w2 = self.omega0_mev, self.omega1_mev, self.omega2_mev
        h = np.zeros((4, 4))
        h[0, 0] = w0
        h[1, 1] = w0 + w2
        h[2, 2] = w0 + w1
        h[3, 3] = w0 + w1 + w2 + self.v_xx_mev
        h[1, 2] = h[2, 1] = self.v_f_mev
        return h


@dataclass(frozen=True, eq=False)
class TwoQubitState:
    """Normalized 4-component amplitude vector over the computational basis."""

    amplitudes: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.amplitudes, dtype=complex).reshape(4).copy()
        norm = np.linalg.norm(a)
        if abs(norm - 1.0) > _NORM_TOL:
            raise ContractViolationError(f"state norm {norm!r} is not 1 within {_NORM_TOL}")
        a.setflags(write=False)
        object.__setattr__(self, "amplitudes", a)

    @classmethod
    def basis(cls, label):
        a = np.zeros(4, dtype=complex)
        a[_INDEX[label]] = 1.0
        return cls(a)

    @classmethod
    def normalized(cls, amplitudes):
        a = np.asarray(amplitudes, dtype=complex).reshape(4)
        norm = np.linalg.norm(a)
        if norm == 0:
            raise ContractViolationError("cannot normalize the zero vector")
        return cls(a / norm)

    def population(self, label):
        return float(abs(self.amplitudes[_INDEX[label]]) ** 2)

    def populations(self):
        return {label: self.population(label) for label in BASIS_LABELS}

    def fidelity_to(self, other):
        other_a = other.amplitudes if isinstance(other, TwoQubitState) else np.asarray(other)
        return float(abs(np.vdot(other_a, self.amplitudes)) ** 2)


@dataclass(frozen=True)
class PulseSpec:
    """Semiclassical square drive pulse.

    rwa=True keeps only the co-rotating term (coupling Omega/2 * e^{-i(wt+phi)}
    on each raising transition); rwa=False drives the full cosine. The pulse
    area is Omega*duration/hbar.
    """

    carrier_mev: float
    rabi_mev: float
    duration_ps: float
    phase_rad: float = 0.0
    rwa: bool = True

    def __post_init__(self):
        if self.duration_ps <= 0:
            raise ContractViolationError(f"duration must be positive, got {self.duration_ps}")
        if self.rabi_mev <= 0:
            raise ContractViolationError(f"rabi amplitude must be positive, got {self.rabi_mev}")

    @property
    def area_rad(self):
        return self.rabi_mev * self.duration_ps / HBAR_MEV_PS


@dataclass(frozen=True, eq=False)
class EigenSystem:
    """Closed-form eigensystem of the interacting Hamiltonian.

    a_factor = sqrt(1 + 4 (V_F/Delta0)^2); on resonance (Delta0 = 0 with
    V_F != 0) it is reported as inf and the degenerate branch
    (|10> +- |01>)/sqrt(2) is taken analytically. c1 is the large
    one-exciton component, c2 = sqrt((A-1)/2A) the small (mixing) one;
    c1^2 + c2^2 = 1.
    """

    a_factor: float
    c1: float
    c2: float
    e00_mev: float
    e01_mev: float
    e10_mev: float
    e11_mev: float
    eigenvectors: np.ndarray  # columns: Psi00, Psi01, Psi10, Psi11


def mixing_coefficient(v_f_mev, delta0_mev):
    """Small one-exciton eigenvector component c_mix = sqrt((A-1)/2A).

    Approaches |V_F/Delta0| for small ratio and 1/sqrt(2) on resonance.
    """
    if v_f_mev == 0.0 and delta0_mev == 0.0:
        raise ContractViolationError("mixing coefficient needs v_f or delta0 nonzero")
    if v_f_mev == 0.0:
        return 0.0
    if delta0_mev == 0.0:
        return 1.0 / math.sqrt(2.0)
    # 1/A = |Delta0| / hypot(Delta0, 2 V_F); stable for any ratio
    inv_a = abs(delta0_mev) / math.hypot(delta0_mev, 2.0 * v_f_mev)
    return math.sqrt((1.0 - inv_a) / 2.0)


def eigensystem(ham):
    """Closed-form energies and eigenvectors, exact for every parameter value."""
    w0, w1, w2 = ham.omega0_mev, ham.omega1_mev, ham.omega2_mev
    v_f, d0 = ham.v_f_mev, ham.delta0_mev
    mean = w0 + 0.5 * (w1 + w2)
    e00 = w0
    e11 = w0 + w1 + w2 + ham.v_xx_mev
    vecs = np.zeros((4, 4))
    vecs[0, 0] = 1.0
    vecs[3, 3] = 1.0
    if v_f == 0.0 and d0 == 0.0:
        a_factor, c1, c2 = 1.0, 1.0, 0.0
        e01 = e10 = mean
        vecs[2, 1] = 1.0   # Psi01 = |10>
        vecs[1, 2] = -1.0  # Psi10 = -|01>
    elif d0 == 0.0:
        a_factor = math.inf
        c1 = c2 = 1.0 / math.sqrt(2.0)
        s = 1.0 if v_f > 0 else -1.0
        e01 = mean + abs(v_f)
        e10 = mean - abs(v_f)
        vecs[2, 1] = c1
        vecs[1, 1] = s * c2
        vecs[2, 2] = s * c2
        vecs[1, 2] = -c1
    else:
        half_gap = 0.5 * math.copysign(math.hypot(d0, 2.0 * v_f), d0)  # Delta0*A/2
        a_factor = abs(2.0 * half_gap / d0)
        inv_a = 1.0 / a_factor
        c1 = math.sqrt((1.0 + inv_a) / 2.0)
        c2 = math.sqrt((1.0 - inv_a) / 2.0)
        s = 1.0 if v_f * d0 >= 0 else -1.0
        e01 = mean + half_gap
        e10 = mean - half_gap
        vecs[2, 1] = c1       # Psi01 = c1|10> + s c2|01>
        vecs[1, 1] = s * c2
        vecs[2, 2] = s * c2   # Psi10 = s c2|10> - c1|01>
        vecs[1, 2] = -c1
    return EigenSystem(a_factor, c1, c2, e00, e01, e10, e11, vecs)


def concurrence(state):
    """Entanglement monotone C = 2|a00*a11 - a01*a10| of a pure state."""
    if isinstance(state, TwoQubitState):
        a = state.amplitudes
    else:
        a = np.asarray(state, dtype=complex).reshape(4)
        if abs(np.linalg.norm(a) - 1.0) > _NORM_TOL:
            raise ContractViolationError("concurrence needs a normalized state")
    return float(2.0 * abs(a[0] * a[3] - a[1] * a[2]))


def evolve_free(state, ham, t_ps):
    """Propagate under the static Hamiltonian for t_ps picoseconds."""
    u = expm_i_h_t(ham.matrix(), t_ps)
    return TwoQubitState.normalized(u @ state.amplitudes)


def _raising_matrix(dipole_pattern):
    mp = np.zeros((4, 4), dtype=complex)
    for lower, upper in dipole_pattern:
        if lower not in _INDEX or upper not in _INDEX:
            raise ContractViolationError(f"unknown basis label in {(lower, upper)!r}")
        flips = sum(a != b for a, b in zip(lower, upper))
        if flips != 1:
            raise ContractViolationError(
                f"transition {(lower, upper)!r} does not flip exactly one qubit"
            )
        mp[_INDEX[upper], _INDEX[lower]] = 1.0
    return mp


def _propagate_block(block, ham, pulse, dipole_pattern):
    """Fixed-step RK4 on i hbar dY/dt = (H + H_drive(t)) Y for a 4xM block."""
    h_static = ham.matrix().astype(complex)
    mp = _raising_matrix(dipole_pattern)
    mm = mp.conj().T
    spectral = float(np.max(np.abs(np.linalg.eigvalsh(ham.matrix()))))
    e_max = max(spectral, abs(pulse.carrier_mev)) + pulse.rabi_mev
    step = min(HBAR_MEV_PS / (50.0 * e_max), pulse.duration_ps / 1000.0)
    n_steps = int(math.ceil(pulse.duration_ps / step))
    if n_steps > _MAX_STEPS:
        raise IntegrationError(
            f"pulse needs {n_steps} steps (> {_MAX_STEPS}); energy scale "
            f"{e_max:.3g} meV is too large for duration {pulse.duration_ps:.3g} ps"
        )
    step = pulse.duration_ps / n_steps
    w = pulse.carrier_mev / HBAR_MEV_PS
    phi = pulse.phase_rad
    omega = pulse.rabi_mev
    coeff = -1j / HBAR_MEV_PS
    full_m = mp + mm

    if pulse.rwa:
        def rhs(t, y):
            ph = np.exp(-1j * (w * t + phi))
            return coeff * (h_static @ y + 0.5 * omega * (ph * (mp @ y) + np.conj(ph) * (mm @ y)))
    else:
        def rhs(t, y):
            return coeff * (h_static @ y + omega * math.cos(w * t + phi) * (full_m @ y))

    y = np.array(block, dtype=complex)
    scalar = y.ndim == 1
    if scalar:
        y = y[:, None]
    t = 0.0
    half = 0.5 * step
    sixth = step / 6.0
    for _ in range(n_steps):
        k1 = rhs(t, y)
        k2 = rhs(t + half, y + half * k1)
        k3 = rhs(t + half, y + half * k2)
        k4 = rhs(t + step, y + step * k3)
        y = y + sixth * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        norms = np.linalg.norm(y, axis=0)
        if np.max(np.abs(norms - 1.0)) > _STEP_DRIFT_TOL:
            raise IntegrationError("norm drift exceeded 1e-8 in one step; step size too large")
        y = y / norms
        t += step
    return y[:, 0] if scalar else y


def evolve_driven(state, ham, pulse, dipole_pattern=ALL_TRANSITIONS):
    """Integrate the driven Schroedinger equation over one pulse.

    dipole_pattern lists the (lower, upper) computational-basis pairs the
    drive couples; by default every pair differing in exactly one qubit,
    all with the same Rabi amplitude.
    """
    final = _propagate_block(state.amplitudes, ham, pulse, dipole_pattern)
    return TwoQubitState.normalized(final)


def _unwind_free_phases(amplitudes, ham, t_ps):
    return np.exp(1j * np.diag(ham.matrix()) * t_ps / HBAR_MEV_PS) * amplitudes


def _check_mixing(ham):
    if ham.v_f_mev == 0.0 and ham.delta0_mev == 0.0:
        return
    c = mixing_coefficient(ham.v_f_mev, ham.delta0_mev)
    if c * c > 0.1:
        raise PhysicsError(
            f"basis-state mixing c^2 = {c * c:.3f} > 0.1; the energy-selective "
            "scheme needs V_F/Delta0 small"
        )
    if c * c > 0.01:
        warnings.warn(f"basis-state mixing c^2 = {c * c:.3f} exceeds 0.01", stacklevel=3)


def _conditional_carrier(ham):
    """eps12 = omega2 + V_XX - delta, the |10> -> |11> transition energy."""
    if ham.v_f_mev == 0.0:
        delta = 0.0
    else:
        delta = ham.v_f_mev**2 / ham.delta0_mev
    return ham.omega2_mev + ham.v_xx_mev - delta


def cnot12(ham, omega_rabi_mev):
    """Pi pulse at eps12 implementing CNOT with dot I as control.

    Returns the pulse and the average population-transfer fidelity over
    the four computational basis inputs against the ideal truth table
    (00->00, 01->01, 10->11, 11->10).
    """
    if ham.v_xx_mev == 0.0:
        raise PhysicsError(
            "V_XX = 0: the conditional transition is degenerate with the "
            "unconditional one and the gate cannot be addressed"
        )
    _check_mixing(ham)
    pulse = PulseSpec(
        carrier_mev=_conditional_carrier(ham),
        rabi_mev=omega_rabi_mev,
        duration_ps=math.pi * HBAR_MEV_PS / omega_rabi_mev,
    )
    propagator = _propagate_block(np.eye(4, dtype=complex), ham, pulse, ALL_TRANSITIONS)
    targets = (0, 1, 3, 2)
    fidelity = float(np.mean([abs(propagator[targets[i], i]) ** 2 for i in range(4)]))
    return pulse, fidelity


def bell_via_forster(ham):
    """Free evolution of |10> to the Bell state (|10> - i|01>)/sqrt(2).

    Requires transfer coupling; meant for (near-)resonant dots. Returns
    (state, t_star) with t_star = pi hbar / (4 |V_F|).
    """
    if ham.v_f_mev == 0.0:
        raise NoTransferError("no transfer coupling: free evolution cannot entangle")
    if ham.delta0_mev != 0.0 and abs(ham.delta0_mev) > 0.1 * abs(ham.v_f_mev):
        warnings.warn(
            f"detuning Delta0 = {ham.delta0_mev:.3g} meV is not small against "
            f"V_F = {ham.v_f_mev:.3g} meV; entanglement will be imperfect",
            stacklevel=2,
        )
    t_star = math.pi * HBAR_MEV_PS / (4.0 * abs(ham.v_f_mev))
    return evolve_free(TwoQubitState.basis("10"), ham, t_star), t_star


def bell_via_biexciton(ham, omega_rabi_mev, sign="+"):
    """Two-pulse sequence |00> -> (|00> +- |11>)/sqrt(2).

    A pi/2 (or 3pi/2 for '-') pulse at omega1 creates (|00> -+ |10>)/sqrt(2),
    then a pi pulse at eps12 lifts |10> to |11>. Pulse phases are fixed so
    the returned interaction-picture state matches the target Bell state
    with a + (or -) relative sign. Returns (state, (pulse1, pulse2)).
    """
    if sign not in ("+", "-"):
        raise ContractViolationError(f"sign must be '+' or '-', got {sign!r}")
    if ham.v_xx_mev == 0.0:
        raise PhysicsError("V_XX = 0: conditional pulse cannot be addressed")
    _check_mixing(ham)
    area1 = math.pi / 2.0 if sign == "+" else 3.0 * math.pi / 2.0
    pulse1 = PulseSpec(
        carrier_mev=ham.omega1_mev,
        rabi_mev=omega_rabi_mev,
        duration_ps=area1 * HBAR_MEV_PS / omega_rabi_mev,
        phase_rad=math.pi / 2.0,
    )
    pulse2 = PulseSpec(
        carrier_mev=_conditional_carrier(ham),
        rabi_mev=omega_rabi_mev,
        duration_ps=math.pi * HBAR_MEV_PS / omega_rabi_mev,
        phase_rad=math.pi / 2.0,
    )
    amps = TwoQubitState.basis("00").amplitudes
    for pulse in (pulse1, pulse2):
        amps = _propagate_block(amps, ham, pulse, ALL_TRANSITIONS)
        amps = _unwind_free_phases(amps, ham, pulse.duration_ps)
    return TwoQubitState.normalized(amps), (pulse1, pulse2)


def biexciton_scheme_fidelity(v_f_mev, delta0_mev):
    """Fidelity bound 1 - c_mix^2 of a conditional operation under residual mixing."""
    if v_f_mev == 0.0 and delta0_mev == 0.0:
        raise ContractViolationError("fidelity bound needs v_f or delta0 nonzero")
    if v_f_mev == 0.0:
        return 1.0
    c = mixing_coefficient(v_f_mev, delta0_mev)
    return 1.0 - c * c


def dfs_dephasing_check(state, phi_rad, enforce_subspace=True):
    """Fidelity of a state under collective dephasing exp(-i phi (sz x 1 + 1 x sz)/2).

    States supported on {|01>, |10>} carry one excitation each and pick up
    only a common phase, so the fidelity is exactly 1 for any phi. Pass
    enforce_subspace=False to probe states outside the logical subspace
    (e.g. (|00>+|11>)/sqrt(2), whose fidelity is cos^2(phi))."""
    a = state.amplitudes
    if enforce_subspace:
        outside = abs(a[0]) ** 2 + abs(a[3]) ** 2
        if outside > 1e-12:
            raise SubspaceError(
                f"population {outside:.3g} outside the logical {{|01>,|10>}} subspace"
            )
    # sz|0> = +|0>: eigenvalues of (sz x 1 + 1 x sz) are (2, 0, 0, -2)
    dephased = np.exp(-1j * phi_rad * np.array([1.0, 0.0, 0.0, -1.0])) * a
    return float(abs(np.vdot(a, dephased)) ** 2)
