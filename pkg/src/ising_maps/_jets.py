"""Truncated Taylor ("jet") arithmetic up to a fixed order.

A :class:`Jet` stores the coefficients ``f(x0), f'(x0), f''(x0)/2!, ...`` of a
function along a single perturbation direction and propagates them exactly
through ``+ - * /``.  Coefficients may be scalars or numpy arrays, so one jet
can carry a whole batch of expansion points at once.  This is how every
singular expansion in the package obtains high-order derivatives of the
rational parametrizations without finite differences.
"""

from __future__ import annotations

DEFAULT_ORDER = 4


class Jet:
    """Taylor coefficients ``c[k] = f^{(k)}(x0)/k!`` for ``k <= order``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = list(coeffs)

    # -- constructors -------------------------------------------------
    @classmethod
    def constant(cls, value, order=DEFAULT_ORDER):
        return cls([value] + [0.0] * order)

    @classmethod
    def variable(cls, value, order=DEFAULT_ORDER):
        """The identity function ``x`` expanded at ``value``."""
        c = [value, 1.0] + [0.0] * (order - 1)
        return cls(c)

    @property
    def order(self):
        return len(self.coeffs) - 1

    def __repr__(self):
        return f"Jet({self.coeffs!r})"

    # -- ring operations ----------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Jet):
            return other
        return Jet.constant(other, self.order)

    def __add__(self, other):
        o = self._coerce(other)
        return Jet([a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Jet([-a for a in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        return Jet([a - b for a, b in zip(self.coeffs, o.coeffs)])

    def __rsub__(self, other):
        o = self._coerce(other)
        return Jet([b - a for a, b in zip(self.coeffs, o.coeffs)])

    def __mul__(self, other):
        if not isinstance(other, Jet):
            return Jet([a * other for a in self.coeffs])
        n = self.order
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(n + 1):
            s = a[0] * b[k]
            for i in range(1, k + 1):
                s = s + a[i] * b[k - i]
            out.append(s)
        return Jet(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, Jet):
            return Jet([a / other for a in self.coeffs])
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        return self.reciprocal() * other

    def reciprocal(self):
        """Series inverse; the constant term must be nonzero."""
        n = self.order
        a = self.coeffs
        inv0 = 1.0 / a[0]
        out = [inv0]
        for k in range(1, n + 1):
            s = a[1] * out[k - 1]
            for i in range(2, k + 1):
                s = s + a[i] * out[k - i]
            out.append(-inv0 * s)
        return Jet(out)

    def __pow__(self, m):
        if not isinstance(m, int) or m < 0:
            raise TypeError("jets support nonnegative integer powers only")
        r = Jet.constant(1.0, self.order)
        b = self
        while m:
            if m & 1:
                r = r * b
            b = b * b
            m >>= 1
        return r

    # -- access ---------------------------------------------------------
    def derivative(self, k):
        """Return ``f^{(k)}(x0)`` (not the Taylor coefficient)."""
        return self.coeffs[k] * _factorial(k)


def _factorial(k):
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


def derivatives(jet, up_to=None):
    """List ``[f(x0), f'(x0), f''(x0), ...]`` recovered from Taylor coefficients."""
    m = jet.order if up_to is None else up_to
    return [jet.coeffs[k] * _factorial(k) for k in range(m + 1)]
