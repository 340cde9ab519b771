"""Exception hierarchy.

PhysicsError groups the conditions that are legitimate physical outcomes
(an unbound ground state, coincident dot centers, a vanishing coupling):
sweeps record them per-row instead of aborting, and the CLI maps them to
exit code 3 for single-point runs.
"""


class QDotPairError(Exception):
    """Base class for all package errors."""


class ContractViolationError(QDotPairError, ValueError):
    """An input violates a numeric precondition (asymmetry, non-finite, unnormalized)."""


class InvalidGeometryError(QDotPairError, ValueError):
    """Non-positive lengths, masses or depths."""


class ResolutionError(QDotPairError):
    """The basis cannot resolve the requested problem (box too large for n_basis)."""


class IntegrationError(QDotPairError):
    """Time stepping cannot meet its accuracy contract for the requested pulse."""


class PhysicsError(QDotPairError):
    """Base for physically meaningful no-go outcomes."""


class UnboundStateError(PhysicsError):
    """Ground state of some axis lies at or above the well depth."""

    def __init__(self, particle, axis, energy_mev, depth_mev):
        self.particle = particle
        self.axis = axis
        self.energy_mev = energy_mev
        self.depth_mev = depth_mev
        super().__init__(
            f"{particle} ground state unbound along {axis}: "
            f"{energy_mev:.3f} meV >= depth {depth_mev:.3f} meV"
        )


class SingularGeometryError(PhysicsError):
    """Dot separation vector has zero length."""


class NoTransferError(PhysicsError):
    """Transfer time requested for a vanishing coupling."""


class SubspaceError(PhysicsError):
    """State has support outside the logical {|01>,|10>} subspace."""


class ConfigError(QDotPairError):
    """Scenario file is malformed or fails validation."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NothingToPlotError(QDotPairError):
    """Plot script requested for an empty result table."""
