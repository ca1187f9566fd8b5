"""Truncated power-series arithmetic on the unit disk.

A function F analytic on the disk is represented by the finite
coefficient vector (a_0, ..., a_N) of its power series at 0.  The
truncation is the function: operations treat the stored coefficients
as exact and never invent terms beyond the stored degree, except for
:func:`divide_conjugate_linear`, which must extend because division by
(1 - conj(alpha) z) produces an infinite series.
"""

from __future__ import annotations

import numpy as np
from scipy.signal import lfilter

from .errors import DomainError, InvalidSeries

# Tolerances used by the tolerant equality test: absolute per
# coefficient, plus relative to the largest magnitude across both
# operands.
EQ_ABS_TOL = 1e-10
EQ_REL_TOL = 1e-10


class CoefficientSeries:
    """Immutable dense vector of power-series coefficients a_0..a_N.

    The empty series (no coefficients) is allowed and represents the
    zero function; it shows up naturally as the quotient when a
    constant is deflated.

    Parameters
    ----------
    coeffs : array_like of complex
        Coefficients in increasing order of degree.  Must be finite.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=()):
        arr = np.array(coeffs, dtype=np.complex128, copy=True).reshape(-1)
        if arr.size and not np.all(np.isfinite(arr.view(np.float64))):
            raise InvalidSeries("coefficients must be finite")
        arr.setflags(write=False)
        self._coeffs = arr

    @property
    def coeffs(self) -> np.ndarray:
        """Read-only coefficient array, ascending degree."""
        return self._coeffs

    @property
    def degree_cap(self) -> int:
        """Index of the last stored coefficient (-1 for the empty series)."""
        return len(self._coeffs) - 1

    @property
    def constant(self) -> complex:
        """a_0, or 0 for the empty series."""
        return complex(self._coeffs[0]) if len(self._coeffs) else 0j

    def is_zero(self) -> bool:
        return bool(np.all(self._coeffs == 0))

    def trim(self) -> "CoefficientSeries":
        """Drop trailing coefficients that are exactly zero."""
        nz = np.nonzero(self._coeffs)[0]
        if len(nz) == 0:
            return CoefficientSeries()
        return CoefficientSeries(self._coeffs[: nz[-1] + 1])

    def padded(self, length: int) -> np.ndarray:
        """Coefficients zero-padded (or truncated) to the given length."""
        out = np.zeros(length, dtype=np.complex128)
        n = min(length, len(self._coeffs))
        out[:n] = self._coeffs[:n]
        return out

    def __len__(self) -> int:
        return len(self._coeffs)

    def __iter__(self):
        return iter(self._coeffs)

    def __repr__(self) -> str:
        return f"CoefficientSeries({np.array2string(self._coeffs, separator=', ')})"

    def __eq__(self, other) -> bool:
        """Tolerant equality: trim trailing zeros, then compare
        coefficientwise within EQ_ABS_TOL plus EQ_REL_TOL times the
        largest coefficient magnitude of either operand."""
        if not isinstance(other, CoefficientSeries):
            return NotImplemented
        a = self.trim().coeffs
        b = other.trim().coeffs
        n = max(len(a), len(b))
        if n == 0:
            return True
        pa = np.zeros(n, dtype=np.complex128)
        pb = np.zeros(n, dtype=np.complex128)
        pa[: len(a)] = a
        pb[: len(b)] = b
        scale = max(np.max(np.abs(pa)), np.max(np.abs(pb)))
        return bool(np.all(np.abs(pa - pb) <= EQ_ABS_TOL + EQ_REL_TOL * scale))

    __hash__ = None  # tolerant equality is incompatible with hashing

    def to_json_dict(self) -> dict:
        """JSON form: {"coeffs": [[re, im], ...]}."""
        return {"coeffs": [[float(c.real), float(c.imag)] for c in self._coeffs]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "CoefficientSeries":
        try:
            pairs = data["coeffs"]
            arr = [complex(float(re), float(im)) for re, im in pairs]
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidSeries(f"malformed coefficient JSON: {exc}") from exc
        return cls(arr)


def as_series(f) -> CoefficientSeries:
    """Coerce array_like input to a CoefficientSeries (validating it)."""
    if isinstance(f, CoefficientSeries):
        return f
    return CoefficientSeries(f)


def _first_order_recurrence(mult: complex, x: np.ndarray) -> np.ndarray:
    """y[n] = x[n] + mult * y[n-1], vectorized through an IIR filter."""
    b = np.array([1.0 + 0j])
    a = np.array([1.0 + 0j, -complex(mult)])
    return lfilter(b, a, x.astype(np.complex128))


def _horner(coeffs: np.ndarray, z: complex) -> complex:
    acc = 0j
    for c in coeffs[::-1]:
        acc = acc * z + c
    return acc


def evaluate(f, z) -> complex:
    """Evaluate f at a point of the closed unit disk by Horner's rule.

    Raises DomainError if |z| > 1 (a hair of slack covers rounding in
    boundary points like exp(i theta)).
    """
    f = as_series(f)
    z = complex(z)
    if not (np.isfinite(z.real) and np.isfinite(z.imag)):
        raise DomainError("evaluation point must be finite")
    if abs(z) > 1 + 1e-12:
        raise DomainError(f"|z| = {abs(z)} lies outside the closed unit disk")
    return complex(_horner(f.coeffs, z))


def evaluate_many(f, points) -> np.ndarray:
    """Vectorized Horner evaluation at an array of points (no domain check)."""
    f = as_series(f)
    z = np.asarray(points, dtype=np.complex128)
    acc = np.zeros_like(z)
    for c in f.coeffs[::-1]:
        acc = acc * z + c
    return acc


def multiply(f, g, cap: int) -> CoefficientSeries:
    """Cauchy product truncated to degree cap.

    The result always has exactly cap + 1 coefficients, padded with
    zeros when the true product is shorter.
    """
    f = as_series(f)
    g = as_series(g)
    if cap < 0:
        raise ValueError("cap must be nonnegative")
    out = np.zeros(cap + 1, dtype=np.complex128)
    if len(f) and len(g):
        prod = np.convolve(f.coeffs, g.coeffs)
        n = min(cap + 1, len(prod))
        out[:n] = prod[:n]
    return CoefficientSeries(out)


def add(f, g) -> CoefficientSeries:
    """Coefficientwise sum, padded to the longer operand."""
    f = as_series(f)
    g = as_series(g)
    n = max(len(f), len(g))
    return CoefficientSeries(f.padded(n) + g.padded(n))


def scale(f, c) -> CoefficientSeries:
    f = as_series(f)
    return CoefficientSeries(f.coeffs * complex(c))


def deflate(f, alpha) -> tuple[CoefficientSeries, complex]:
    """Synthetic division of f by the monomial (z - alpha).

    Returns (quotient, remainder) with f = (z - alpha) * quotient +
    remainder exactly in exact arithmetic.  The remainder equals
    f(alpha), so it is the residual of alpha as a root.  Division runs
    from the top coefficient down, which is the numerically stable
    direction for |alpha| < 1.
    """
    f = as_series(f)
    alpha = complex(alpha)
    n = len(f)
    if n == 0:
        return CoefficientSeries(), 0j
    if n == 1:
        return CoefficientSeries(), complex(f.coeffs[0])
    # b_k = a_k + alpha * b_{k+1}, computed top-down; the b_k for k >= 1
    # are the quotient coefficients shifted by one, b_0 is the remainder.
    x = f.coeffs[::-1]
    y = _first_order_recurrence(alpha, x)
    quotient = y[:-1][::-1].copy()
    remainder = complex(y[-1])
    return CoefficientSeries(quotient), remainder


def multiply_conjugate_linear(f, alpha) -> CoefficientSeries:
    """Product (1 - conj(alpha) z) * f, exact.

    Output is one coefficient longer than f (same length when
    alpha == 0, where the factor is identically 1).
    """
    f = as_series(f)
    alpha = complex(alpha)
    if len(f) == 0:
        return CoefficientSeries()
    if alpha == 0:
        return CoefficientSeries(f.coeffs)
    return CoefficientSeries(np.convolve(f.coeffs, [1.0, -np.conj(alpha)]))


def divide_conjugate_linear(f, alpha, cap: int) -> CoefficientSeries:
    """Expansion of f / (1 - conj(alpha) z) through degree cap.

    The quotient has an infinite series (geometric in conj(alpha) z);
    coefficients up to cap are exact: d_n = a_n + conj(alpha) d_{n-1}.
    The caller chooses cap large enough that the discarded geometric
    tail is negligible for its purpose.
    """
    f = as_series(f)
    alpha = complex(alpha)
    if abs(alpha) >= 1:
        raise DomainError("divisor root must lie inside the open unit disk")
    if cap < 0:
        raise ValueError("cap must be nonnegative")
    x = f.padded(cap + 1)
    if alpha == 0:
        return CoefficientSeries(x)
    return CoefficientSeries(_first_order_recurrence(np.conj(alpha), x))


def h2_norm_sq(f) -> float:
    """Squared Hardy space norm: sum of |a_n|^2."""
    f = as_series(f)
    return float(np.sum(np.abs(f.coeffs) ** 2))


def geometric_extension_cap(base_len: int, alphas, target: float = 1e-18) -> int:
    """Truncation length for series divided by factors (1 - conj(a) z).

    Picks T so that |a|^(2 (T - base_len)) * (T + 2)^2 <= target for the
    largest |a|, i.e. the discarded tail is negligible even against
    polynomially growing weights.
    """
    mags = [abs(complex(a)) for a in alphas]
    a = max(mags) if mags else 0.0
    if a < 1e-12:
        return max(base_len, 1)
    if a >= 1:
        raise DomainError("extension requires |alpha| < 1")
    t = base_len + 8
    while a ** (2 * (t - base_len)) * (t + 2) ** 2 > target and t < 2_000_000:
        t = int(t * 1.5) + 8
    return t
