"""Rational building blocks of the triangulation/Ising generating functions.

All functions here are plain rational expressions in (nu, U, V/W) evaluated
with ``+ - * /`` only, so they accept floats, complex numbers, numpy arrays
and :class:`~ising_maps._jets.Jet` values alike.  The map ``t^3 = R(nu, U)``
parametrizes the edge-weight variable, ``y = Y(nu, U, V)`` the boundary-length
variable of the general-boundary series, and ``x = X(nu, U, W)`` that of the
simple-boundary series; ``Q(nu, U, V)`` is the common value function.

The antiferromagnetic/ferromagnetic expressions are regular at ``nu = 1``:
the apparent ``1/(1-nu)`` poles of the printed parametrizations cancel against
the quadratic factor and are multiplied out here once and for all.
"""

from __future__ import annotations

import numpy as np


def poly_P(nu, U):
    """Cubic in U tied to the edge-weight parametrization."""
    return (8 * (nu + 1) ** 2 * U ** 3
            - (11 * nu + 13) * (nu + 1) * U ** 2
            + 2 * (nu + 3) * (2 * nu + 1) * U
            - 4 * nu)


def weight_map_R(nu, U):
    """The map U -> t^3 whose principal inverse is the series U(nu, t^3)."""
    return U * ((1 + nu) * U - 2) * poly_P(nu, U) / (32 * nu ** 3 * (1 - 2 * U) ** 2)


def poly_P1_coeffs(nu):
    """Ascending coefficients of the low-temperature critical polynomial in rho = t^3."""
    return (
        (nu - 1) * (4 * nu ** 2 - 8 * nu - 23),
        -48 * nu ** 3 * (nu - 1) ** 2,
        -192 * nu ** 6 * (3 * nu + 5) * (nu - 1) * (3 * nu - 11),
        131072 * nu ** 9,
    )


def poly_P2_coeffs(nu):
    """Ascending coefficients of the high-temperature critical polynomial in rho = t^3."""
    return (
        (7 * nu ** 2 - 14 * nu - 9) * (nu - 2) ** 2,
        864 * nu * (nu - 1) * (nu ** 2 - 2 * nu - 1),
        27648 * nu ** 4,
    )


def poly_P1(nu, rho):
    c0, c1, c2, c3 = poly_P1_coeffs(nu)
    return c0 + rho * (c1 + rho * (c2 + rho * c3))


def poly_P2(nu, rho):
    c0, c1, c2 = poly_P2_coeffs(nu)
    return c0 + rho * (c1 + rho * c2)


# ---------------------------------------------------------------------------
# boundary-length parametrizations
# ---------------------------------------------------------------------------

def _denU(nu, U):
    return U * ((1 + nu) * U - 2)


def cubic_den_coeffs(nu, U):
    """Coefficients (d0, d1, d2) of the cubic V^3 + d2 V^2 + d1 V + d0 under Y.

    The linear coefficient is pinned by two independent identities: the sum
    ``-d1 + d2`` must reproduce the stationary-point quartic's middle
    coefficient, and the cubic must reduce to the closed subcritical form at
    the radius.  (A naive transcription with an extra 1/U factor on d1 fails
    both.)
    """
    den = _denU(nu, U)
    d2 = (9 * (1 + nu) * U ** 2 - 2 * (3 + 10 * nu) * U + 8 * nu) / den
    d1 = -(9 * (1 + nu) * U - 2 * (2 * nu + 3)) / ((1 + nu) * U - 2)
    return -1.0, d1, d2


def Y(nu, U, V):
    """Rational map whose principal inverse in V parametrizes the boundary variable y."""
    d0, d1, d2 = cubic_den_coeffs(nu, U)
    den = d0 + V * (d1 + V * (d2 + V))
    pref = 8 * nu * (1 - 2 * U) / _denU(nu, U)
    return pref * V * (V + 1) / den


def dY_dV(nu, U, V):
    d0, d1, d2 = cubic_den_coeffs(nu, U)
    den = d0 + V * (d1 + V * (d2 + V))
    dden = d1 + V * (2 * d2 + 3 * V)
    pref = 8 * nu * (1 - 2 * U) / _denU(nu, U)
    return pref * ((2 * V + 1) * den - V * (V + 1) * dden) / (den * den)


def y_cubic_coeffs(nu, U, y):
    """Monic-free coefficients of the cubic in V solved by the inverse of Y.

    ``Y(nu,U,V) = y`` is ``y*(V^3 + d2 V^2 + d1 V + d0) - A V (V+1) = 0``;
    returns ascending coefficients (c0, c1, c2, c3).
    """
    d0, d1, d2 = cubic_den_coeffs(nu, U)
    A = 8 * nu * (1 - 2 * U) / _denU(nu, U)
    return y * d0, y * d1 - A, y * d2 - A, y + 0.0 * U


def _quad_E(nu, U, V):
    """Quadratic factor shared by Q and X, with the 1/(1-nu) pole multiplied out."""
    den = _denU(nu, U)
    c3 = (5 * (1 + nu) * U ** 2 - 2 * (3 * nu + 2) * U + 2 * nu) / den
    return (1 - nu) * V * V + 2 * (1 - nu) * c3 * V - poly_P(nu, U) / den


def _quad_E_prime(nu, U, V):
    den = _denU(nu, U)
    c3 = (5 * (1 + nu) * U ** 2 - 2 * (3 * nu + 2) * U + 2 * nu) / den
    return 2 * (1 - nu) * V + 2 * (1 - nu) * c3


def Q(nu, U, V):
    """Value function of the general-boundary series along the V parametrization."""
    d0, d1, d2 = cubic_den_coeffs(nu, U)
    den = d0 + V * (d1 + V * (d2 + V))
    vp1 = V + 1
    return _denU(nu, U) * den * _quad_E(nu, U, V) / (vp1 * vp1 * vp1 * poly_P(nu, U))


def X(nu, U, W):
    """Rational map whose principal inverse in W parametrizes the simple-boundary variable x."""
    wp1 = W + 1
    return 8 * nu * (1 - 2 * U) * W * _quad_E(nu, U, W) / (poly_P(nu, U) * wp1 * wp1)


def dX_dW(nu, U, W):
    wp1 = W + 1
    E = _quad_E(nu, U, W)
    Ep = _quad_E_prime(nu, U, W)
    pref = 8 * nu * (1 - 2 * U) / poly_P(nu, U)
    return pref * ((E + W * Ep) * wp1 - 2 * W * E) / (wp1 * wp1 * wp1)


def x_cubic_coeffs(nu, U, x):
    """Ascending coefficients of the cubic in W solved by the inverse of X.

    ``X = x`` reads ``B*W*E(W) - x*(W+1)^2 = 0`` with ``B`` the prefactor over
    ``poly_P``; E is quadratic, so this is a cubic in W.
    """
    den = _denU(nu, U)
    c3 = (5 * (1 + nu) * U ** 2 - 2 * (3 * nu + 2) * U + 2 * nu) / den
    e2 = (1 - nu)
    e1 = 2 * (1 - nu) * c3
    e0 = -poly_P(nu, U) / den
    B = 8 * nu * (1 - 2 * U) / poly_P(nu, U)
    return -x, B * e0 - 2 * x, B * e1 - x, B * e2 + 0.0 * U


# ---------------------------------------------------------------------------
# stationary points of Y (the y_+/y_- structure)
# ---------------------------------------------------------------------------

def stationary_quartic_c(nu, U):
    """Middle coefficient of the palindromic quartic of stationary points of Y."""
    return 2 * (3 * U - 2) * (3 * U * (nu + 1) - 2 * nu) / _denU(nu, U)


def stationary_pair(nu, U):
    """(V_minus, V_plus): the largest negative and smallest positive stationary V.

    Exploits that the quartic ``V^4 + 2V^3 + cV^2 + 2V + 1`` is palindromic:
    with ``mu = V + 1/V`` it factors through ``mu^2 + 2mu + (c - 2) = 0``.
    Real arithmetic with clamping so that the exactly-double root ``V = 1``
    (reached at the radius for subcritical coupling) comes out as 1.
    """
    c = stationary_quartic_c(nu, U)
    disc = 3.0 - c
    if disc < 0:
        from .errors import RootClassificationError
        raise RootClassificationError(f"stationary quartic has no real mu (c={c})")
    s = np.sqrt(disc)
    mu_plus = -1.0 + s
    mu_minus = -1.0 - s
    dp = max(mu_plus * mu_plus - 4.0, 0.0)
    dm = max(mu_minus * mu_minus - 4.0, 0.0)
    v_plus = (mu_plus - np.sqrt(dp)) / 2.0
    v_minus = (mu_minus + np.sqrt(dm)) / 2.0
    from .errors import RootClassificationError
    if not (0 < v_plus <= 1.0 + 1e-12):
        raise RootClassificationError(f"V_plus={v_plus} not in (0,1]")
    if not (-1.0 < v_minus < 0):
        raise RootClassificationError(f"V_minus={v_minus} not in (-1,0)")
    return v_minus, min(v_plus, 1.0)


def stationary_pair_complex(nu, U, prev=None):
    """Stationary pair continued to complex U by nearest-branch tracking.

    ``prev`` is the pair at the previous point of a sweep; the square-root
    branches are chosen to keep both components continuous along the path.
    """
    c = stationary_quartic_c(nu, U)
    s = np.sqrt(3.0 - c + 0j)
    out = []
    for mu, pick in ((-1.0 - s, "minus"), (-1.0 + s, "plus")):
        r = np.sqrt(mu * mu - 4.0 + 0j)
        cands = ((mu + r) / 2.0, (mu - r) / 2.0)
        if prev is None:
            # real start: reproduce the real selection
            v = cands[1] if pick == "plus" else cands[0]
        else:
            ref = prev[0] if pick == "minus" else prev[1]
            v = min(cands, key=lambda z: abs(z - ref))
        out.append(v)
    return out[0], out[1]


# ---------------------------------------------------------------------------
# stationary points of X (the x_nu structure)
# ---------------------------------------------------------------------------

def w_plus_branch_end(nu, U, K=None):
    """Endpoint of the principal W branch: 1 below the critical coupling,
    else the (0,1) root of the low-temperature stationary quadratic."""
    if K is None:
        return 1.0
    m = -4.0 * (K + 1) ** 2 / (K * K - 3.0)
    d = max(m * m - 4.0, 0.0)
    return (m - np.sqrt(d)) / 2.0
