"""Shared numeric primitives: symmetric eigensolve and the 4x4 propagator.

Both are thin, contract-checking wrappers over LAPACK (numpy.linalg.eigh):
the matrices here are small and dense, and the spectral route makes the
propagator exactly unitary up to eigensolver precision.
"""

import numpy as np

from .constants import HBAR_MEV_PS
from .errors import ContractViolationError

_SYMMETRY_RTOL = 1e-10
_MAX_DIM = 4096


def eigh(matrix):
    """Eigendecomposition of a real symmetric matrix.

    Returns (eigenvalues ascending, eigenvectors as columns), orthonormal
    to ~1e-14. Raises ContractViolationError for non-finite entries or
    asymmetry beyond 1e-10 relative.
    """
    a = np.asarray(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ContractViolationError(f"expected a square matrix, got shape {a.shape}")
    n = a.shape[0]
    if not 1 <= n <= _MAX_DIM:
        raise ContractViolationError(f"dimension {n} outside [1, {_MAX_DIM}]")
    if not np.all(np.isfinite(a)):
        raise ContractViolationError("matrix has non-finite entries")
    scale = max(np.abs(a).max(), 1.0)
    if np.abs(a - a.T).max() > _SYMMETRY_RTOL * scale:
        raise ContractViolationError("matrix is not symmetric within 1e-10 relative")
    vals, vecs = np.linalg.eigh(a)
    return vals, vecs


def expm_i_h_t(h_matrix, t_ps):
    """U = exp(-i H t / hbar) for a hermitian H (meV) and time t (ps).

    Built from the spectral decomposition, so U is unitary to eigensolver
    precision for arbitrarily large |t|.
    """
    h = np.asarray(h_matrix)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise ContractViolationError(f"expected a square matrix, got shape {h.shape}")
    if not np.all(np.isfinite(h)):
        raise ContractViolationError("matrix has non-finite entries")
    if not np.isfinite(t_ps):
        raise ContractViolationError("time must be finite")
    scale = max(np.abs(h).max(), 1.0)
    if np.abs(h - h.conj().T).max() > _SYMMETRY_RTOL * scale:
        raise ContractViolationError("matrix is not hermitian within 1e-10 relative")
    vals, vecs = np.linalg.eigh(h)
    phases = np.exp(-1j * vals * t_ps / HBAR_MEV_PS)
    return (vecs * phases) @ vecs.conj().T
