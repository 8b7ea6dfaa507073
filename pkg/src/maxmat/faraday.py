"""Faraday matrices, their duals, complexification and exponentials.

The builders are generic over the entry type: they accept exact Gaussians,
Python complex numbers or symbolic :class:`~maxmat.symfield.SymScalar` fields,
so the same code produces numeric and symbolic matrices.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from dataclasses import dataclass

import numpy as np

from . import linalg
from .linalg import APPROX, EXACT, Gaussian, mul_i, zero_like

# |<A,A>| below this triggers the lambda -> 0 limit in approximate mode
NULL_THRESHOLD = 1e-14


def _coerce3(v):
    v = list(v)
    if len(v) != 3:
        raise ValueError("expected a 3-vector")
    if all(isinstance(c, (int, float, complex, np.number)) and not isinstance(c, bool) for c in v):
        if any(isinstance(c, (float, complex, np.floating, np.complexfloating)) for c in v):
            return [complex(c) for c in v]
        return [Gaussian(c) for c in v]
    sym = next((c for c in v if not isinstance(c, (int, Fraction, Gaussian))), None)
    if sym is None:
        return [Gaussian.coerce(c) for c in v]
    return [type(sym).coerce(c) for c in v]


def _block(top, col, lower, zero):
    m = np.empty((4, 4), dtype=object)
    m[0, 0] = zero
    for k in range(3):
        m[0, k + 1] = top[k]
        m[k + 1, 0] = col[k]
        for j in range(3):
            m[k + 1, j + 1] = lower[k][j]
    if all(isinstance(x, complex) for x in m.flat):
        return m.astype(complex)
    return m


def cross_matrix(b):
    """3x3 matrix ``X`` with ``X @ v == cross(v, b)``."""
    b1, b2, b3 = b
    z = zero_like(b1)
    return [[z, b3, -b2], [-b3, z, b1], [b2, -b1, z]]


@dataclass(frozen=True)
class EMFieldValue:
    """Constant electric and magnetic field vectors."""

    E: tuple
    B: tuple

    def __init__(self, E, B):
        object.__setattr__(self, "E", tuple(_coerce3(E)))
        object.__setattr__(self, "B", tuple(_coerce3(B)))
        linalg.check_same_mode(list(self.E), list(self.B))

    @property
    def mode(self) -> str:
        return linalg.mode_of(list(self.E))

    def complex_vector(self):
        """``A = E + iB``."""
        return tuple(e + mul_i(b) for e, b in zip(self.E, self.B))


def build_F(f: EMFieldValue):
    """Faraday matrix ``[[0, E^t], [E, xB]]``."""
    z = zero_like(f.E[0])
    return _block(f.E, f.E, cross_matrix(f.B), z)


def hodge_dual(f: EMFieldValue):
    """Matrix of the dual field, ``(E, B) -> (-B, E)``."""
    nb = [-b for b in f.B]
    z = zero_like(f.E[0])
    return _block(nb, nb, cross_matrix(f.E), z)


def dual_field(f: EMFieldValue) -> EMFieldValue:
    return EMFieldValue([-b for b in f.B], list(f.E))


def cf_matrix(a, conjugate: bool = False):
    """The complexified shape ``[[0, A^t], [A, x(-iA)]]`` for a complex 3-vector.

    With ``conjugate=True`` the entrywise conjugate (the cbar form) is returned.
    """
    a = list(a)
    if conjugate:
        a = [linalg.conj(c) for c in a]
        c = [mul_i(x) for x in a]
    else:
        c = [-mul_i(x) for x in a]
    return _block(a, a, cross_matrix(c), zero_like(a[0]))


@dataclass(frozen=True)
class ComplexFaraday:
    """``cF`` (or its conjugate ``cbar F``) determined by ``A = E + iB``."""

    A: tuple
    conjugate: bool = False

    @classmethod
    def from_field(cls, f: EMFieldValue, conjugate: bool = False) -> "ComplexFaraday":
        return cls(tuple(f.complex_vector()), conjugate)

    @property
    def vector(self):
        """The complex 3-vector sitting in row 0 of the matrix."""
        return tuple(linalg.conj(c) for c in self.A) if self.conjugate else self.A

    def matrix(self):
        return cf_matrix(self.A, self.conjugate)

    def invariant(self):
        """``<A, A>`` (complex bilinear), the square of the eigenvalue."""
        v = self.vector
        return v[0] * v[0] + v[1] * v[1] + v[2] * v[2]

    def scaled(self, c) -> "ComplexFaraday":
        return ComplexFaraday(tuple(x * c for x in self.A), self.conjugate)


def complexify(F_or_field, conjugate: bool = False) -> ComplexFaraday:
    """``cF = F - i F*`` as a :class:`ComplexFaraday`."""
    if isinstance(F_or_field, EMFieldValue):
        return ComplexFaraday.from_field(F_or_field, conjugate)
    return ComplexFaraday.from_field(field_from_F(F_or_field), conjugate)


def field_from_F(m) -> EMFieldValue:
    """Read E and B back off a Faraday matrix."""
    m = np.asarray(m)
    E = [m[0, 1], m[0, 2], m[0, 3]]
    B = [m[2, 3], m[3, 1], m[1, 2]]
    return EMFieldValue(E, B)


def eigenvalue(cf: ComplexFaraday):
    """Principal square root of ``<A, A>``; the spectrum of ``cF`` is ``{+l, -l}``.

    Branch: non-negative real part, and non-negative imaginary part when the
    real part vanishes. Exact inputs need a perfect-square invariant.
    """
    inv = cf.invariant()
    if linalg.mode_of(inv) == EXACT:
        root = linalg.gaussian_sqrt(inv)
        if root is None:
            raise ValueError(f"<A,A> = {inv} is not a perfect square; use approximate mode")
        return root
    root = cmath.sqrt(complex(inv))
    if root.real < 0 or (root.real == 0 and root.imag < 0):
        root = -root
    return complex(root.real + 0.0, root.imag + 0.0)


def _approx(cf: ComplexFaraday) -> ComplexFaraday:
    return ComplexFaraday(tuple(complex(c) for c in cf.A), cf.conjugate)


def _cosh_sinhc(cf: ComplexFaraday):
    inv = complex(cf.invariant())
    if abs(inv) < NULL_THRESHOLD:
        return 1.0 + 0j, 1.0 + 0j
    lam = eigenvalue(cf)
    return cmath.cosh(lam), cmath.sinh(lam) / lam


def exp_cF(cf: ComplexFaraday) -> np.ndarray:
    """``cosh(l) I + sinh(l)/l cF``; reduces to ``I + cF`` for null fields."""
    cf = _approx(cf)
    ch, sc = _cosh_sinhc(cf)
    return ch * np.eye(4, dtype=complex) + sc * cf.matrix()


def exp_F(f: EMFieldValue) -> np.ndarray:
    """Real Lorentz matrix ``e^F = e^{cF/2} e^{cbar F/2}``."""
    half = _approx(ComplexFaraday.from_field(f)).scaled(0.5)
    u = exp_cF(half)
    # cbar F/2 is the entrywise conjugate of cF/2, so its exponential is too
    return np.real(u @ np.conj(u))


def stress_energy(f: EMFieldValue):
    """``T_F = 1/2 cF cbar F``.

    Real for real fields and self-adjoint under the Minkowski metric; it is
    Hermitian only when ``E x B = 0``.
    """
    cf = cf_matrix(f.complex_vector())
    cbf = cf_matrix(f.complex_vector(), conjugate=True)
    half = 0.5 if f.mode == APPROX else Fraction(1, 2)
    return (cf @ cbf) * half


def lorentz_deviation(L) -> tuple[float, float]:
    """``(max |L^t eta L - eta|, |det L - 1|)``."""
    L = np.asarray(L, dtype=complex)
    g = np.diag([-1.0, 1.0, 1.0, 1.0])
    metric = float(np.max(np.abs(L.T @ g @ L - g)))
    return metric, float(abs(np.linalg.det(L) - 1))
