"""Independent reference computations for the test suite.

Everything here deliberately avoids the package's sine-basis route:
transcendental root finding for the field-free finite well, dense-grid
finite differences for tilted wells on the same hard-wall box, direct
quadrature for overlap and dipole integrals, and closed-form two-level
Rabi dynamics. Agreement between these and the package is the point of
the tests, so none of this may import solver internals.
"""

import math

import numpy as np
from scipy.integrate import quad
from scipy.linalg import eigh_tridiagonal

HB2_2M0 = 38.0998  # meV nm^2, duplicated on purpose


def finite_well_ground(mass, depth_mev, width_nm):
    """Ground energy of the infinite-domain finite square well via u*tan(u) root.

    Returns the energy from the well bottom (meV). The even ground root
    always exists for this 1-D potential.
    """
    u0 = math.sqrt(depth_mev * (width_nm / 2.0) ** 2 * mass / HB2_2M0)
    hi = min(math.pi / 2.0 - 1e-13, u0)

    def f(u):
        return u * math.tan(u) - math.sqrt(max(u0 * u0 - u * u, 0.0))

    lo = 1e-13
    if f(hi) < 0.0:  # root squeezed against u0 itself
        return depth_mev * (1.0 - 1e-12)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if f(mid) > 0.0:
            hi = mid
        else:
            lo = mid
    u = 0.5 * (lo + hi)
    return HB2_2M0 / mass * (2.0 * u / width_nm) ** 2


def finite_well_wavefunction(mass, depth_mev, width_nm):
    """Normalized piecewise ground wavefunction (callable) on the infinite domain."""
    energy = finite_well_ground(mass, depth_mev, width_nm)
    k = math.sqrt(energy * mass / HB2_2M0)
    kappa = math.sqrt((depth_mev - energy) * mass / HB2_2M0)
    half = width_nm / 2.0
    edge = math.cos(k * half)
    # norm: inside cos^2 + two exponential tails matched at the edge
    inside = half + math.sin(k * width_nm) / (2.0 * k)
    outside = edge * edge / kappa
    norm = math.sqrt(inside + outside)

    def psi(x):
        ax = abs(x)
        if ax <= half:
            return math.cos(k * ax) / norm
        return edge * math.exp(-kappa * (ax - half)) / norm

    return psi


def fd_ground(mass, depth_mev, width_nm, slope_mev_per_nm=0.0, box_nm=None, n=6000):
    """Dense finite-difference ground state on the hard-wall box.

    Same physical model as the package's sine-basis route (well + linear
    tilt inside a box), solved by an unrelated discretization. Returns
    (energy_mev, <x>_nm).
    """
    if box_nm is None:
        box_nm = 3.0 * width_nm
    x = np.linspace(-box_nm / 2.0, box_nm / 2.0, n + 2)[1:-1]
    dx = box_nm / (n + 1)
    v = np.where(np.abs(x) <= width_nm / 2.0, 0.0, depth_mev) + slope_mev_per_nm * x
    t = HB2_2M0 / mass / dx**2
    diag = 2.0 * t + v
    off = -t * np.ones(n - 1)
    vals, vecs = eigh_tridiagonal(diag, off, select="i", select_range=(0, 0))
    ground = vecs[:, 0]
    ground /= np.linalg.norm(ground)
    return float(vals[0]), float(np.sum(ground * x * ground))


def eh_overlap_quad(me, mh, depth_mev, width_nm):
    """Electron-hole ground overlap by quadrature of the analytic wavefunctions."""
    psi_e = finite_well_wavefunction(me, depth_mev, width_nm)
    psi_h = finite_well_wavefunction(mh, depth_mev, width_nm)
    value, _ = quad(lambda x: psi_e(x) * psi_h(x), -6.0 * width_nm, 6.0 * width_nm,
                    limit=400)
    return value


def kp_dipole_quad(x_nm):
    """<1|x|2> of an infinite well of width 2x by direct quadrature."""
    length = 2.0 * x_nm
    if length == 0.0:
        return 0.0

    def integrand(u):
        return (2.0 / length) * math.sin(math.pi * u / length) * (u - length / 2.0) \
            * math.sin(2.0 * math.pi * u / length)

    value, _ = quad(integrand, 0.0, length, limit=200)
    return abs(value)


def rabi_populations(v_mev, delta_mev, t_ps, hbar=0.6582119):
    """Two-level populations under coupling v and detuning delta, starting in level 1.

    Returns (p_stay, p_transfer) from the generalized Rabi formula.
    """
    omega_g = math.hypot(v_mev, delta_mev / 2.0)
    if omega_g == 0.0:
        return 1.0, 0.0
    amp2 = (v_mev / omega_g) ** 2 * math.sin(omega_g * t_ps / hbar) ** 2
    return 1.0 - amp2, amp2


def rwa_rotating_frame_propagator(h_static, carrier_mev, rabi_mev, phase_rad,
                                  duration_ps, raising, hbar=0.6582119):
    """Exact propagator for the co-rotating drive via the excitation-number frame.

    With N the excitation-number operator, H_rot = H - carrier*N +
    (rabi/2)(e^{-i phase} M+ + h.c.) is time independent, and
    U(T) = e^{-i carrier N T/hbar} e^{-i H_rot T/hbar}."""
    number = np.diag([0.0, 1.0, 1.0, 2.0])
    h_rot = h_static - carrier_mev * number + 0.5 * rabi_mev * (
        np.exp(-1j * phase_rad) * raising + np.exp(1j * phase_rad) * raising.conj().T
    )
    vals, vecs = np.linalg.eigh(h_rot)
    u_rot = (vecs * np.exp(-1j * vals * duration_ps / hbar)) @ vecs.conj().T
    frame = np.diag(np.exp(-1j * np.diag(number) * carrier_mev * duration_ps / hbar))
    return frame @ u_rot
