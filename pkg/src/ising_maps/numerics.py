"""Language-agnostic numeric kernel.

Polynomial root isolation, Newton solvers with continuation hooks, quadrature
for integrands with inverse-square-root or square-root endpoint weights,
Fourier/Cauchy extraction of power-series coefficients from pointwise samples,
and power-law fitting of coefficient tails.  Everything is pure and reentrant:
no global state, safe to call from many workers.

Working precision is binary64 throughout.  Callers are expected to rescale
their variables so that the quantities handled here stay O(1); the higher
level modules extract coefficients in variables rescaled by the relevant
radius of convergence for exactly this reason.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    AliasingError,
    DegenerateWindow,
    DerivativeVanished,
    NoConvergence,
    SingularJacobian,
)

_COMPLEX_STEP = 1e-30


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Polynomial:
    """Real polynomial with coefficients in ascending degree order."""

    coefficients: tuple

    def __post_init__(self):
        c = np.asarray(self.coefficients, dtype=float)
        c = np.trim_zeros(c, "b")
        if c.size == 0:
            c = np.zeros(1)
        object.__setattr__(self, "coefficients", tuple(c))

    @property
    def degree(self):
        return len(self.coefficients) - 1

    def __call__(self, x):
        return np.polynomial.polynomial.polyval(x, np.asarray(self.coefficients))

    def derivative(self):
        c = np.asarray(self.coefficients)
        if len(c) == 1:
            return Polynomial((0.0,))
        return Polynomial(tuple(c[1:] * np.arange(1, len(c))))

    def scale(self):
        return max(abs(c) for c in self.coefficients)


def real_roots(p: Polynomial, lo: float, hi: float, tol: float = 1e-12):
    """Real roots of ``p`` in ``[lo, hi]``, sorted, multiplicities collapsed.

    Companion-matrix roots polished by Newton; roots closer than 1e-8 are
    merged into one representative (a double root of the stationary quartic
    sits exactly at 1 at the critical coupling, so clustering is required).
    """
    if not tol > 0:
        raise ValueError("tol must be positive")
    if not lo < hi:
        raise ValueError("need lo < hi")
    c = np.asarray(p.coefficients)
    if p.degree == 0:
        return []
    rts = np.polynomial.polynomial.polyroots(c)
    dp = p.derivative()
    out = []
    for r in rts:
        if abs(r.imag) > 1e-7 * max(1.0, abs(r)):
            continue
        x = float(r.real)
        for _ in range(50):
            fx = p(x)
            dfx = dp(x)
            if dfx == 0.0:
                break
            step = fx / dfx
            x -= step
            if abs(step) <= 1e-16 * max(1.0, abs(x)):
                break
        if lo - 1e-12 * max(1.0, abs(lo)) <= x <= hi + 1e-12 * max(1.0, abs(hi)):
            if abs(p(x)) > tol * max(p.scale(), 1e-300):
                raise NoConvergence(f"root polish left residual {p(x):g} at {x:g}")
            out.append(min(max(x, lo), hi))
    out.sort()
    merged = []
    for x in out:
        if merged and abs(x - merged[-1]) <= 1e-8 * max(1.0, abs(x)):
            continue
        merged.append(x)
    return merged


def sturm_root_count(p: Polynomial, lo: float, hi: float):
    """Number of distinct real roots in ``(lo, hi]`` by a Sturm sequence."""
    seq = [np.asarray(p.coefficients, dtype=float)]
    seq.append(np.asarray(p.derivative().coefficients, dtype=float))
    while len(seq[-1]) > 1 or seq[-1][0] != 0.0:
        _, rem = np.polynomial.polynomial.polydiv(seq[-2], seq[-1])
        rem = np.trim_zeros(rem, "b")
        if rem.size == 0:
            break
        seq.append(-rem)

    def changes(x):
        vals = [np.polynomial.polynomial.polyval(x, c) for c in seq]
        signs = [v for v in vals if abs(v) > 1e-300]
        return sum(1 for a, b in zip(signs, signs[1:]) if a * b < 0)

    return changes(lo) - changes(hi)


# ---------------------------------------------------------------------------
# Newton solvers
# ---------------------------------------------------------------------------

def newton_1d(f, seed, tol=1e-13, max_iter=80, dfdx=None):
    """Scalar Newton iteration with complex-step differentiation.

    ``f`` must accept complex arguments when ``dfdx`` is not supplied; the
    derivative is then ``Im f(x + ih)/h`` with ``h = 1e-30``, which has no
    subtractive cancellation.  Raises :class:`DerivativeVanished` when the
    derivative underflows relative to the residual (a branch point: the caller
    must switch to a Puiseux method).
    """
    x = seed
    for _ in range(max_iter):
        fx = f(x)
        if abs(fx) <= tol:
            return x
        if dfdx is not None:
            d = dfdx(x)
        elif isinstance(x, complex) or isinstance(fx, complex):
            d = _complex_secant(f, x, fx)
        else:
            d = f(complex(x, _COMPLEX_STEP)).imag / _COMPLEX_STEP
        if d == 0 or abs(d) < 1e-14 * abs(fx):
            raise DerivativeVanished(f"derivative {d!r} too small at {x!r}")
        x = x - fx / d
    fx = f(x)
    if abs(fx) <= tol:
        return x
    raise NoConvergence(f"newton_1d residual {abs(fx):g} > tol after {max_iter} iterations")


def _complex_secant(f, x, fx):
    h = 1e-7 * max(1.0, abs(x))
    return (f(x + h) - fx) / h


def newton_2d(F, seed, tol=1e-12, max_iter=60):
    """Damped 2-d Newton with finite-difference Jacobian.

    Convergence criterion is the sup-norm of the residual.  Step halving keeps
    the residual non-increasing; a Jacobian with condition beyond 1/eps raises
    :class:`SingularJacobian` (expected as the volume-generating parameter
    approaches 1 in the subcritical temperature range).
    """
    x = np.array(seed, dtype=float)
    for _ in range(max_iter):
        r = np.asarray(F(x), dtype=float)
        if np.max(np.abs(r)) <= tol:
            return tuple(x)
        J = np.empty((2, 2))
        for j in range(2):
            h = 1e-7 * max(1.0, abs(x[j]))
            xp = x.copy()
            xp[j] += h
            J[:, j] = (np.asarray(F(xp)) - r) / h
        try:
            if np.linalg.cond(J) > 1e15:
                raise SingularJacobian("Jacobian numerically singular")
            step = np.linalg.solve(J, r)
        except np.linalg.LinAlgError as exc:
            raise SingularJacobian(str(exc)) from exc
        lam = 1.0
        base = np.max(np.abs(r))
        while lam > 1e-6:
            trial = x - lam * step
            if np.max(np.abs(F(trial))) <= base:
                break
            lam *= 0.5
        x = x - lam * step
    r = np.asarray(F(x))
    if np.max(np.abs(r)) <= tol:
        return tuple(x)
    raise NoConvergence(f"newton_2d residual {np.max(np.abs(r)):g} > tol")


# ---------------------------------------------------------------------------
# quadrature with square-root endpoint weights
# ---------------------------------------------------------------------------

def chebyshev_nodes(a, b, n):
    """Gauss-Chebyshev (first kind) nodes for weight 1/sqrt((b-z)(z-a))."""
    theta = (np.arange(n) + 0.5) * np.pi / n
    return 0.5 * (a + b) + 0.5 * (b - a) * np.cos(theta)


def quad_sqrt_endpoints(f, a, b, n=64, weight="inv_sqrt", rel_tol=1e-10,
                        max_doublings=14):
    """Integrate ``f`` against an endpoint square-root weight on ``[a, b]``.

    ``weight='inv_sqrt'`` computes ``\\int f(z)/sqrt((b-z)(z-a)) dz`` with the
    Gauss-Chebyshev rule (exactly pi*f at collapsed intervals); ``'sqrt'``
    computes ``\\int f(z)*sqrt((b-z)(z-a)) dz`` with the second-kind rule.
    ``f`` may be vectorized over a node array.  The node count doubles until
    two successive rules agree to ``rel_tol``; integrands whose analytic
    continuation has a singularity at an endpoint converge algebraically and
    may exhaust the budget, which signals non-integrable behavior to the
    caller via :class:`NoConvergence`.
    """
    if n < 4:
        raise ValueError("need n >= 4")
    if b < a:
        raise ValueError("need a <= b")
    if b == a:
        return np.pi * f(np.array([a]))[0] if weight == "inv_sqrt" else 0.0
    h = 0.5 * (b - a)
    m = 0.5 * (a + b)

    def rule(k):
        if weight == "inv_sqrt":
            theta = (np.arange(k) + 0.5) * np.pi / k
            z = m + h * np.cos(theta)
            return (np.pi / k) * np.sum(f(z))
        theta = (np.arange(1, k + 1)) * np.pi / (k + 1)
        z = m + h * np.cos(theta)
        return (np.pi / (k + 1)) * np.sum(f(z) * (h * np.sin(theta)) ** 2)

    prev = rule(n)
    for _ in range(max_doublings):
        n *= 2
        cur = rule(n)
        if abs(cur - prev) <= rel_tol * max(abs(cur), 1e-300) + 1e-300:
            return cur
        prev = cur
    raise NoConvergence("quad_sqrt_endpoints did not stabilize; integrand likely singular")


# ---------------------------------------------------------------------------
# Cauchy coefficient extraction
# ---------------------------------------------------------------------------

def cauchy_coefficients(f, radius, n_max, n_samples=None, check_decay=True,
                        imag_tol=1e-9):
    """First ``n_max + 1`` Taylor coefficients of an analytic ``f`` from circle samples.

    ``coefficient_n = (1/M) * sum_j f(r e^{i theta_j}) e^{-i n theta_j} / r^n``.
    ``f`` is either a vectorized callable or a precomputed array of samples at
    ``radius * exp(2 pi i j / M)``.  The series must have real coefficients;
    imaginary residue beyond ``imag_tol`` times the magnitude, or trailing
    coefficients that fail to decay, raise :class:`AliasingError`.
    """
    M = n_samples or max(4 * n_max, 128)
    if M < 4 * n_max and n_max > 1:
        raise ValueError("need at least 4*n_max samples")
    if callable(f):
        w = radius * np.exp(2j * np.pi * np.arange(M) / M)
        vals = np.asarray(f(w), dtype=complex)
    else:
        vals = np.asarray(f, dtype=complex)
        M = vals.size
    coeffs = np.fft.fft(vals) / M
    scale = np.max(np.abs(coeffs)) or 1.0
    if check_decay:
        tail = np.abs(coeffs[M // 2 - M // 16: M // 2])
        if tail.size and np.min(tail) > 1e-7 * scale:
            raise AliasingError("trailing coefficients do not decay; enlarge M or shrink radius")
    head = coeffs[: n_max + 1]
    if np.max(np.abs(head.imag)) > imag_tol * max(np.max(np.abs(head)), 1e-300):
        raise AliasingError("imaginary residue too large for a real-coefficient series")
    return head.real / radius ** np.arange(n_max + 1)


# ---------------------------------------------------------------------------
# power-law fitting
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FitResult:
    """Fitted ``values ~ amplitude * indices**exponent`` over a window."""

    exponent: float
    amplitude: float
    residual: float
    window: tuple

    def __post_init__(self):
        if self.residual < 0:
            raise ValueError("residual must be nonnegative")


def fit_power_law(indices, values, window=None, rate=None, correction_exponents=()):
    """Least-squares power-law fit of a positive sequence on a log-log scale.

    ``rate`` divides out a known exponential factor ``rate**n`` first.
    ``correction_exponents`` adds regressors ``n**e`` to the linear model for
    known sub-leading singular corrections (e.g. ``(-1/3,)`` when the next
    singular exponent sits a third above the leading one); they soak up
    curvature without changing the reported leading exponent's meaning.
    Residual is the RMS of the log-space fit.
    """
    idx = np.asarray(indices, dtype=float)
    val = np.asarray(values, dtype=float)
    if window is not None:
        lo, hi = window
        mask = (idx >= lo) & (idx <= hi)
        idx, val = idx[mask], val[mask]
    if rate is not None:
        val = val / rate ** idx
    if idx.size < 8:
        raise DegenerateWindow("need at least 8 points in the fit window")
    if np.any(val <= 0):
        raise DegenerateWindow("values must be positive on the window")
    x = np.log(idx)
    y = np.log(val)
    cols = [np.ones_like(x), x]
    for e in correction_exponents:
        cols.append(idx ** e)
    A = np.column_stack(cols)
    sol, *_ = np.linalg.lstsq(A, y, rcond=None)
    resid = y - A @ sol
    rms = float(np.sqrt(np.mean(resid ** 2)))
    lo = int(round(idx[0]))
    hi = int(round(idx[-1]))
    return FitResult(exponent=float(sol[1]), amplitude=float(np.exp(sol[0])),
                     residual=rms, window=(lo, hi))


def fit_ratio_exponent(indices, values, rate=None):
    """Exponent from Richardson-extrapolated successive ratios.

    For ``v_n ~ C rho^n n^alpha`` the doubling ratios
    ``log2(v_{2n}/v_n) - n log2 rho -> alpha`` with O(1/n) bias; one Richardson
    step removes it.  Input must contain index pairs (n, 2n).
    """
    idx = list(np.asarray(indices, dtype=float))
    val = np.asarray(values, dtype=float)
    if rate is not None:
        val = val / rate ** np.asarray(idx)
    lookup = {int(n): v for n, v in zip(idx, val)}
    ests = []
    for n in sorted(lookup):
        if 2 * n in lookup and lookup[n] > 0 and lookup[2 * n] > 0:
            ests.append((n, np.log2(lookup[2 * n] / lookup[n])))
    if len(ests) < 2:
        raise DegenerateWindow("need at least two (n, 2n) pairs")
    (n1, a1), (n2, a2) = ests[-2], ests[-1]
    # one Richardson step assuming O(1/n) bias
    return a2 + (a2 - a1) * n1 / (n2 - n1) if n2 != n1 else a2
