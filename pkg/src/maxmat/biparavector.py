"""Biparavectors: 4x4 coefficient arrays against the basis ``cE_i (x) cbar E_j``."""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import linalg
from .biquaternion import P, Paravector, basis_set
from .faraday import NULL_THRESHOLD, ComplexFaraday, EMFieldValue, eigenvalue
from .linalg import EXACT


@dataclass(frozen=True, eq=False)
class Biparavector:
    """Coefficients ``a[i, j]`` of ``cE_i (x) cbar E_j``, ``i, j`` in 0..3."""

    a: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.a)
        if a.shape != (4, 4):
            raise ValueError("biparavector coefficients form a 4x4 array")
        if linalg.mode_of(a) == EXACT:
            a = linalg.to_exact(a)
        else:
            a = linalg.to_approx(a)
        object.__setattr__(self, "a", a)

    @property
    def mode(self) -> str:
        return linalg.mode_of(self.a)

    @classmethod
    def identity(cls, mode: str = EXACT) -> "Biparavector":
        a = np.zeros((4, 4), dtype=int)
        a[0, 0] = 1
        return cls(linalg.to_exact(a) if mode == EXACT else a.astype(complex))

    def __eq__(self, other):
        if not isinstance(other, Biparavector):
            return NotImplemented
        return linalg.exact_equal(self.a, other.a)

    def __hash__(self):
        return hash(tuple(self.a.flat))


def to_matrix(bp: Biparavector) -> np.ndarray:
    """``sum a_ij cE_i cbar E_j``."""
    basis = basis_set(bp.mode)
    m = linalg.zeros(bp.mode)
    for (i, j), b in basis.items():
        m = m + b * bp.a[i, j]
    return m


def decompose(m) -> Biparavector:
    """Coefficients ``a_ij = 1/4 trace(M cE_i cbar E_j)``."""
    m = np.asarray(m)
    mode = linalg.mode_of(m)
    quarter = Fraction(1, 4) if mode == EXACT else 0.25
    basis = basis_set(mode)
    a = np.empty((4, 4), dtype=object if mode == EXACT else complex)
    for (i, j), b in basis.items():
        a[i, j] = linalg.trace(m @ b) * quarter
    return Biparavector(a)


def apply(bp: Biparavector, x: Paravector) -> Paravector:
    """``X -> sum a_ij e_i X e_j`` evaluated in the paravector algebra."""
    if x.tag != P:
        raise TypeError("biparavectors act on paravectors tagged P")
    linalg.check_same_mode(bp.a, list(x.coeffs))
    e = [Paravector.basis(i) for i in range(4)]
    if x.mode != EXACT:
        e = [Paravector(tuple(complex(c) for c in b.coeffs)) for b in e]
    out = x * 0
    for i in range(4):
        for j in range(4):
            coef = bp.a[i, j]
            if coef != 0:
                out = out + (e[i] * x * e[j]) * coef
    return out


def operator_matrix(bp: Biparavector) -> np.ndarray:
    """Matrix of ``apply(bp, .)`` in the ``phi_iso`` coordinates, column by column."""
    cols = []
    for k in range(4):
        basis = Paravector.basis(k)
        if bp.mode != EXACT:
            basis = Paravector(tuple(complex(c) for c in basis.coeffs))
        cols.append(list(apply(bp, basis).coeffs))
    return np.array(cols, dtype=object if bp.mode == EXACT else complex).T


def stress_biparavector(f: EMFieldValue) -> Biparavector:
    """``a_jk = 1/2 A_j conj(A_k)`` for ``j, k`` in 1..3, with ``A = E + iB``."""
    A = f.complex_vector()
    exact = f.mode == EXACT
    half = Fraction(1, 2) if exact else 0.5
    a = np.empty((4, 4), dtype=object if exact else complex)
    zero = A[0] * 0
    for i in range(4):
        for j in range(4):
            if i == 0 or j == 0:
                a[i, j] = zero
            else:
                a[i, j] = A[i - 1] * A[j - 1].conjugate() * half
    return Biparavector(a)


def lorentz_paravector(f: EMFieldValue) -> Paravector:
    """The paravector ``u`` with ``represent_left(u) = e^{cF/2}``."""
    A = tuple(complex(c) for c in f.complex_vector())
    cf = ComplexFaraday(A)
    if abs(complex(cf.invariant())) < NULL_THRESHOLD:
        c0, ck = 1.0 + 0j, 0.5 + 0j
    else:
        lam = eigenvalue(cf)
        c0, ck = cmath.cosh(lam / 2), cmath.sinh(lam / 2) / lam
    return Paravector((c0, ck * A[0], ck * A[1], ck * A[2]))


def lorentz_biparavector(f: EMFieldValue) -> Biparavector:
    """``e^{cF/2} (x) e^{cF^dagger/2}`` with coefficients ``u_i conj(u_j)``."""
    u = np.array(lorentz_paravector(f).coeffs, dtype=complex)
    return Biparavector(np.outer(u, np.conj(u)))

