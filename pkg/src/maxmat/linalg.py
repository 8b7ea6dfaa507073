"""Complex scalars, 4-vectors and 4x4 matrices in exact or approximate mode.

Exact mode uses :class:`Gaussian` (rational real and imaginary parts) held in
``dtype=object`` numpy arrays. Approximate mode uses plain ``complex`` and
``complex128`` arrays. The two modes never mix silently: every public
operation checks its arguments and raises :class:`ModeError`.

Index 0 is always the time axis and the metric is ``diag(-1, 1, 1, 1)``.
"""

from __future__ import annotations

import math
import numbers
from fractions import Fraction

import numpy as np

EXACT = "exact"
APPROX = "approx"

DEFAULT_TOL = 1e-10


class ModeError(TypeError):
    """Exact and approximate values were combined in one operation."""


def _rat(q):
    # Keep integral values as int: int arithmetic is far cheaper than Fraction.
    if type(q) is int:
        return q
    if isinstance(q, bool):
        return int(q)
    if isinstance(q, Fraction):
        return q.numerator if q.denominator == 1 else q
    if isinstance(q, numbers.Integral):
        return int(q)
    if isinstance(q, numbers.Rational):
        return _rat(Fraction(q.numerator, q.denominator))
    if isinstance(q, str):
        if any(ch in q for ch in ".eE"):
            raise ValueError(f"decimal literal {q!r} is not an exact rational")
        return _rat(Fraction(q))
    raise ModeError(f"{type(q).__name__} is not an exact rational")


class Gaussian:
    """Gaussian rational ``re + i*im`` with arbitrary-precision parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _rat(re)
        self.im = _rat(im)

    @classmethod
    def coerce(cls, value) -> "Gaussian":
        if isinstance(value, Gaussian):
            return value
        if isinstance(value, (float, complex, np.floating, np.complexfloating)):
            raise ModeError("approximate value used in exact mode")
        return cls(value, 0)

    # arithmetic -----------------------------------------------------------
    def _other(self, other):
        if isinstance(other, Gaussian):
            return other
        if isinstance(other, (int, Fraction, numbers.Rational)) and not isinstance(other, bool):
            return Gaussian(other, 0)
        if isinstance(other, (float, complex, np.floating, np.complexfloating)):
            raise ModeError("cannot combine an exact Gaussian with a float/complex")
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Gaussian(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Gaussian(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Gaussian(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        a, b, c, d = self.re, self.im, o.re, o.im
        if b == 0 and d == 0:
            return Gaussian(a * c, 0)
        return Gaussian(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        den = o.re * o.re + o.im * o.im
        if den == 0:
            raise ZeroDivisionError("Gaussian division by zero")
        num = self * o.conjugate()
        return Gaussian(Fraction(num.re) / den, Fraction(num.im) / den)

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return o / self

    def __neg__(self):
        return Gaussian(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers")
        out, base = Gaussian(1), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugate(self) -> "Gaussian":
        return Gaussian(self.re, -self.im)

    def times_i(self) -> "Gaussian":
        return Gaussian(-self.im, self.re)

    def abs2(self):
        return self.re * self.re + self.im * self.im

    # comparison -------------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Gaussian):
            return self.re == other.re and self.im == other.im
        if isinstance(other, numbers.Rational):
            return self.im == 0 and self.re == other
        if isinstance(other, (float, complex)):
            raise ModeError("exact/approximate equality test")
        return NotImplemented

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        return hash(self.re) if self.im == 0 else hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return format_gaussian(self)

    def __str__(self):
        return format_gaussian(self)


I = Gaussian(0, 1)


def format_rational(q, always_fraction: bool = False) -> str:
    """Render a rational as ``p/q`` (integers as ``p`` unless forced)."""
    q = Fraction(q)
    if q.denominator == 1 and not always_fraction:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_gaussian(z: Gaussian) -> str:
    re, im = z.re, z.im
    if im == 0:
        return format_rational(re)
    if im == 1:
        ims = "i"
    elif im == -1:
        ims = "-i"
    else:
        ims = format_rational(im) + "i"
    if re == 0:
        return ims
    sign = "" if ims.startswith("-") else "+"
    return f"({format_rational(re)}{sign}{ims})"


def gaussian_sqrt(z: Gaussian) -> Gaussian | None:
    """Exact principal square root of ``z`` or ``None`` if it is irrational."""
    z = Gaussian.coerce(z)
    a, b = Fraction(z.re), Fraction(z.im)
    mod = _rational_sqrt(a * a + b * b)
    if mod is None:
        return None
    x = _rational_sqrt((mod + a) / 2)
    y = _rational_sqrt((mod - a) / 2)
    if x is None or y is None:
        return None
    if b < 0:
        y = -y
    root = Gaussian(x, y)
    if root.re < 0 or (root.re == 0 and root.im < 0):
        root = -root
    return root


def _rational_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn != n or rd * rd != d:
        return None
    return Fraction(rn, rd)


# mode handling --------------------------------------------------------------

def mode_of(x) -> str:
    """Mode of a scalar, sequence or array."""
    if isinstance(x, np.ndarray):
        if x.dtype == object:
            modes = {mode_of(v) for v in x.flat}
            if len(modes) > 1:
                raise ModeError("array mixes exact and approximate entries")
            return modes.pop() if modes else EXACT
        return APPROX
    if isinstance(x, (list, tuple)):
        return _common_mode([mode_of(v) for v in x])
    if isinstance(x, (bool, float, complex, np.floating, np.complexfloating)):
        return APPROX
    if isinstance(x, (Gaussian, numbers.Rational)):
        return EXACT
    if getattr(x, "is_exact", False):
        return EXACT
    raise ModeError(f"cannot determine mode of {type(x).__name__}")


def _common_mode(modes) -> str:
    modes = set(modes)
    if len(modes) > 1:
        raise ModeError("operands mix exact and approximate mode")
    return modes.pop() if modes else EXACT


def check_same_mode(*xs) -> str:
    return _common_mode(mode_of(x) for x in xs)


def to_exact(values) -> np.ndarray:
    """Convert ints, Fractions, ``p/q`` strings or Gaussians to an exact array."""
    arr = np.asarray(values, dtype=object)
    out = np.empty(arr.shape, dtype=object)
    for idx, v in np.ndenumerate(arr):
        out[idx] = Gaussian.coerce(v)
    return out


def to_approx(values) -> np.ndarray:
    arr = np.asarray(values, dtype=object) if not isinstance(values, np.ndarray) else values
    if arr.dtype != object:
        return arr.astype(complex)
    out = np.empty(arr.shape, dtype=complex)
    for idx, v in np.ndenumerate(arr):
        out[idx] = complex(v)
    return out


def vec(*components, mode: str = EXACT) -> np.ndarray:
    return to_exact(components) if mode == EXACT else to_approx(components)


def unit(i: int, n: int = 4, mode: str = EXACT) -> np.ndarray:
    return vec(*[1 if k == i else 0 for k in range(n)], mode=mode)


def identity(mode: str = EXACT) -> np.ndarray:
    return to_exact(np.eye(4, dtype=int)) if mode == EXACT else np.eye(4, dtype=complex)


def zeros(mode: str = EXACT) -> np.ndarray:
    return to_exact(np.zeros((4, 4), dtype=int)) if mode == EXACT else np.zeros((4, 4), dtype=complex)


def eta(mode: str = EXACT) -> np.ndarray:
    """The Minkowski metric ``diag(-1, 1, 1, 1)``."""
    m = np.diag([-1, 1, 1, 1])
    return to_exact(m) if mode == EXACT else m.astype(complex)


ETA = eta(EXACT)


# scalar products -----------------------------------------------------------

def bilinear3(u, v):
    """Complex-bilinear (not Hermitian) dot product of two 3-vectors."""
    check_same_mode(u, v)
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def mink4(u, v):
    """Minkowski product ``-u0 v0 + u1 v1 + u2 v2 + u3 v3``."""
    check_same_mode(u, v)
    return -(u[0] * v[0]) + u[1] * v[1] + u[2] * v[2] + u[3] * v[3]


# matrix algebra ------------------------------------------------------------

def mat_mul(a, b):
    check_same_mode(a, b)
    return np.asarray(a) @ np.asarray(b)


def mat_add(a, b):
    check_same_mode(a, b)
    return np.asarray(a) + np.asarray(b)


def mat_scale(c, a):
    check_same_mode(c, a)
    return np.asarray(a) * c


def trace(a):
    a = np.asarray(a)
    return a[0, 0] + a[1, 1] + a[2, 2] + a[3, 3]


def transpose(a):
    return np.asarray(a).T.copy()


def entry_conj(a):
    return np.conjugate(np.asarray(a))


def dagger(a):
    return entry_conj(a).T.copy()


def minkowski_adjoint(m):
    """``eta @ m.T @ eta``: the adjoint with respect to ``mink4``."""
    m = np.asarray(m)
    # eta is diagonal +-1, so flip signs of row 0 and column 0 of the transpose
    out = m.T.copy()
    out[0, 1:] = -out[0, 1:]
    out[1:, 0] = -out[1:, 0]
    return out


def mat_exp_series(m, terms: int = 40) -> np.ndarray:
    """Truncated Taylor series ``sum_{k<terms} m^k / k!`` in approximate mode."""
    if terms < 1:
        raise ValueError("terms must be >= 1")
    m = to_approx(m)
    out = np.eye(m.shape[0], dtype=complex)
    term = np.eye(m.shape[0], dtype=complex)
    for k in range(1, terms):
        term = term @ m / k
        out = out + term
    return out


# comparisons ---------------------------------------------------------------

def is_zero(x) -> bool:
    """True for a zero scalar, symbolic value or array of them."""
    if isinstance(x, np.ndarray):
        return all(is_zero(v) for v in x.flat)
    if hasattr(x, "is_zero"):
        return x.is_zero()
    return x == 0


def exact_equal(a, b) -> bool:
    a, b = np.asarray(a, dtype=object), np.asarray(b, dtype=object)
    if a.shape != b.shape:
        return False
    return all(is_zero(x - y) for x, y in zip(a.flat, b.flat))


def max_abs_diff(a, b) -> float:
    return float(np.max(np.abs(to_approx(a) - to_approx(b))))


def allclose(a, b, tol: float = DEFAULT_TOL) -> bool:
    """Entrywise agreement within ``tol`` relative to ``max(1, |entries|)``."""
    a, b = to_approx(a), to_approx(b)
    scale = max(1.0, float(np.max(np.abs(a))), float(np.max(np.abs(b))))
    return float(np.max(np.abs(a - b))) <= tol * scale


def mul_i(x):
    """Multiply by the imaginary unit in the mode of ``x``."""
    if hasattr(x, "times_i"):
        return x.times_i()
    if isinstance(x, np.ndarray):
        if x.dtype == object:
            out = np.empty(x.shape, dtype=object)
            for idx, v in np.ndenumerate(x):
                out[idx] = mul_i(v)
            return out
        return x * 1j
    if isinstance(x, numbers.Rational):
        return Gaussian(0, x)
    return x * 1j


def conj(x):
    return x.conjugate()


def zero_like(x):
    """A zero of the same scalar kind as ``x``."""
    return x * 0
