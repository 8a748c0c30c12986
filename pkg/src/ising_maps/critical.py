"""Phase diagram of the Ising-decorated triangulation model.

Computes the critical coupling, regime classification, the value ``U_nu`` of
the algebraic parametrization at its radius, the radius ``t_nu^3`` itself, and
the low-temperature parameter ``K_nu``.  All of it is cross-checkable against
two explicit polynomials whose positive branches vanish at the radius.

The coupling ``nu`` weighs monochromatic edges (``nu = exp(2/T)``); ``nu = 1``
is the independent-spin case, ``nu_c = 1 + 1/sqrt(7)`` the critical coupling
separating the high-temperature regime (percolation-like cluster geometry)
from the low-temperature one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from . import _rational as rat
from ._jets import Jet, derivatives
from .errors import NoConvergence, OutOfDomain

NU_CRITICAL = 1.0 + 1.0 / math.sqrt(7.0)
K_CRITICAL = (math.sqrt(7.0) - 2.0) / 3.0
U_CRITICAL = (5.0 - math.sqrt(7.0)) / 9.0
K_INFINITY = math.sqrt(3.0)

REGIME_TOL = 1e-14

HIGH, CRITICAL, LOW = "High", "Critical", "Low"


def nu_critical() -> float:
    """The critical coupling ``1 + 1/sqrt(7)``."""
    return NU_CRITICAL


def regime(nu: float) -> str:
    """Classify a coupling; the window around the critical point is 1e-14 wide.

    Exponents jump at the critical coupling, so silent rounding must never
    flip a regime; callers wanting the critical branch exactly should pass
    ``nu_critical()`` (or use the CLI's ``--at-critical``).
    """
    if not nu > 0:
        raise OutOfDomain(f"coupling must be positive, got {nu}")
    if abs(nu - NU_CRITICAL) <= REGIME_TOL:
        return CRITICAL
    return HIGH if nu < NU_CRITICAL else LOW


def eta_hat(K):
    """The increasing map from K in [K_c, sqrt(3)) onto couplings >= nu_c."""
    return -(K ** 3 + 3 * K ** 2 + 9 * K + 11) / ((K + 3) * (K ** 2 - 3))


def k_nu(nu: float) -> float:
    """Unique K in [K_c, sqrt(3)) with ``eta_hat(K) = nu``; low-temperature only."""
    if regime(nu) == HIGH:
        raise OutOfDomain(f"K_nu is defined for nu >= nu_c, got {nu}")
    if abs(nu - NU_CRITICAL) <= REGIME_TOL:
        return K_CRITICAL
    lo, hi = K_CRITICAL, K_INFINITY - 1e-15
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if eta_hat(mid) < nu:
            lo = mid
        else:
            hi = mid
        if hi - lo < 1e-16 * max(1.0, hi):
            break
    K = 0.5 * (lo + hi)
    # Newton polish through a first-order jet of eta_hat
    for _ in range(4):
        j = eta_hat(Jet.variable(K, 1))
        f, df = j.coeffs[0] - nu, j.coeffs[1]
        if df == 0:
            break
        K -= f / df
    if abs(eta_hat(K) - nu) > 1e-13 * max(1.0, abs(nu)):
        raise NoConvergence(f"k_nu bisection stalled at K={K}")
    return K


def u_nu(nu: float) -> float:
    """Value of the series U at its radius of convergence.

    Closed form in the high-temperature regime; through the K parametrization
    in the low-temperature one.  Both branches meet at ``(5 - sqrt 7)/9``.
    """
    reg = regime(nu)
    if reg == CRITICAL:
        return U_CRITICAL
    if reg == HIGH:
        return (3 * nu + 3 - math.sqrt(-3 * nu ** 2 + 6 * nu + 9)) / (6 * (nu + 1))
    K = k_nu(nu)
    return (3 - K * K) / (6 * K + 10)


def t_nu3(nu: float) -> float:
    """Cube of the radius of convergence in the edge-weight variable."""
    return rat.weight_map_R(nu, u_nu(nu))


def u_of_t3(nu: float, t3: float, tol: float = 1e-13) -> float:
    """Principal branch of U at a point strictly inside the radius.

    Solves ``R(nu, U) = t3`` by Newton on the increasing branch from 0.  At
    the radius itself the equation has a double root; a deflated solve on
    ``sqrt(R(U_nu) - R(U))`` keeps full accuracy there.
    """
    tn3 = t_nu3(nu)
    un = u_nu(nu)
    if not 0 <= t3 <= tn3 * (1 + 1e-12):
        raise OutOfDomain(f"t3={t3} outside (0, t_nu^3={tn3}]")
    if t3 == 0:
        return 0.0
    if t3 >= tn3 * (1 - 1e-13):
        # deflated Newton: h(U) = sqrt(t_nu^3 - R(U)) has a simple zero at U_nu
        x = un * (1 - 1e-6)
        for _ in range(80):
            j = rat.weight_map_R(nu, Jet.variable(x, 1))
            r, dr = tn3 - j.coeffs[0], -j.coeffs[1]
            if r <= 0:
                x = 0.5 * (x + un)
                continue
            h = math.sqrt(r)
            dh = dr / (2 * h)
            if dh == 0:
                break
            step = (h - math.sqrt(max(tn3 - t3, 0.0))) / dh
            x -= step
            if abs(step) < 1e-16 * max(1.0, abs(x)):
                break
        return x
    # plain Newton with a continuation-friendly seed
    x = un * min(0.999, math.sqrt(t3 / tn3))
    for _ in range(100):
        j = rat.weight_map_R(nu, Jet.variable(x, 1))
        f, df = j.coeffs[0] - t3, j.coeffs[1]
        step = f / df
        x -= step
        if abs(step) <= 1e-16 * max(1.0, abs(x)):
            break
    if abs(rat.weight_map_R(nu, x) - t3) > tol * max(tn3, abs(t3)):
        raise NoConvergence(f"u_of_t3 residual too large at nu={nu}, t3={t3}")
    return x


@dataclass(frozen=True)
class IsingPoint:
    """A validated coupling/edge-weight pair with its regime."""

    nu: float
    t3: float

    def __post_init__(self):
        if not self.nu > 0:
            raise OutOfDomain(f"coupling must be positive, got {self.nu}")
        tn3 = t_nu3(self.nu)
        if not 0 < self.t3 <= tn3 * (1 + 1e-12):
            raise OutOfDomain(f"t3={self.t3} outside (0, {tn3}]")

    @property
    def regime(self):
        return regime(self.nu)


@dataclass(frozen=True)
class CriticalData:
    """Everything attached to a coupling at its radius of convergence.

    ``y_nu`` is the boundary-variable radius of the general-boundary series
    (2 up to the critical coupling, larger beyond), ``x_nu`` the radius of the
    simple-boundary series, ``K_nu`` the low-temperature parameter (None in
    the high-temperature regime).
    """

    nu: float
    regime: str
    t_nu3: float
    U_nu: float
    K_nu: float | None
    y_nu: float
    x_nu: float

    @property
    def t_nu(self):
        return self.t_nu3 ** (1.0 / 3.0)

    @property
    def sqrt_nu_t3(self):
        return math.sqrt(self.nu * self.t_nu3)


@lru_cache(maxsize=None)
def critical_data(nu: float) -> CriticalData:
    """Assemble the cached critical data for a coupling."""
    reg = regime(nu)
    U = u_nu(nu)
    tn3 = rat.weight_map_R(nu, U)
    K = None if reg == HIGH else k_nu(nu)
    _, v_plus = rat.stationary_pair(nu, U)
    y = rat.Y(nu, U, v_plus)
    w_end = rat.w_plus_branch_end(nu, U, K=None if reg != LOW else K)
    x = rat.X(nu, U, w_end)
    return CriticalData(nu=nu, regime=reg, t_nu3=tn3, U_nu=U, K_nu=K, y_nu=y, x_nu=x)


def weight_map_derivatives(nu: float, U: float, order: int = 4):
    """Derivatives of ``R(nu, .)`` at ``U`` up to ``order`` (jet-exact)."""
    jet = rat.weight_map_R(nu, Jet.variable(U, order))
    return derivatives(jet)
