"""Exception hierarchy shared by all numerical kernels."""


class IsingMapsError(Exception):
    """Base class for all errors raised by this package."""


class OutOfDomain(IsingMapsError, ValueError):
    """A parameter lies outside the mathematical domain of the operation."""


class NoConvergence(IsingMapsError):
    """An iterative solver or adaptive rule exhausted its budget."""


class DerivativeVanished(NoConvergence):
    """Newton hit a stationary point; the caller must switch to a branch-point method."""


class SingularJacobian(NoConvergence):
    """The 2-d Newton Jacobian is numerically singular."""


class OutOfBranch(OutOfDomain):
    """Requested point lies outside the principal branch of an inverse map."""


class PoleHit(IsingMapsError, ZeroDivisionError):
    """A rational parametrization was evaluated at one of its poles."""


class CutHit(OutOfDomain):
    """A disk function was evaluated on its branch cut."""


class RootClassificationError(IsingMapsError):
    """Roots of the stationary-point quartic do not follow the expected interval pattern."""


class AliasingError(IsingMapsError):
    """Trailing Fourier coefficients fail the decay test; radius or sample count is off."""


class DegenerateWindow(IsingMapsError, ValueError):
    """A fit window is too short or contains non-positive data."""


class BranchCancellationFailure(IsingMapsError):
    """The half-power term of a singular expansion did not cancel; wrong branch data."""


class FixedPointViolation(IsingMapsError):
    """The admissibility fixed-point system is not satisfied at the computed solution."""


class TailMassTooLarge(IsingMapsError):
    """A truncated offspring table leaves more mass in the tail than tolerated."""


class IntegrandSingular(IsingMapsError):
    """An integrand is evaluated exactly on a non-integrable singularity."""


class RejectionBudgetExceeded(NoConvergence):
    """The conditioned sampler exceeded its rejection budget."""
