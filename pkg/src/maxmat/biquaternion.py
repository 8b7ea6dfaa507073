"""Paravector algebras P and Pbar and their 4x4 matrix representations.

In ``P`` the basis satisfies ``e1 e2 = i e3``; ``Pbar`` is the opposite
orientation ``e1 e2 = -i e3``. Products are computed from structure constants
so that the matrix representations can serve as an independent check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from . import linalg
from .faraday import cf_matrix
from .linalg import EXACT, Gaussian, mul_i

Tag = Literal["P", "Pbar"]
P: Tag = "P"
PBAR: Tag = "Pbar"

HODGE_MATRIX = "matrix"
HODGE_RIGHT = "right"

INVOLUTIONS = ("clifford_bar", "dagger", "complex_conj", "grade_plus", "hodge")


class AlgebraMismatch(TypeError):
    """Paravectors from P and Pbar were combined."""


def _opposite(tag: Tag) -> Tag:
    return PBAR if tag == P else P


def basis_matrix(i: int, tag: Tag = P, mode: str = EXACT) -> np.ndarray:
    """``cE_i`` (tag P) or ``cbar E_i`` (tag Pbar); index 0 is the identity."""
    if i not in (0, 1, 2, 3):
        raise IndexError(f"basis index {i} out of range 0..3")
    if tag not in (P, PBAR):
        raise ValueError(f"unknown algebra tag {tag!r}")
    if i == 0:
        return linalg.identity(mode)
    e = linalg.unit(i - 1, 3, mode)
    return cf_matrix(list(e), conjugate=(tag == PBAR))


def _levi_civita(i, j, k):
    return (i - j) * (j - k) * (k - i) // 2


@dataclass(frozen=True)
class Paravector:
    """``a0 e0 + a1 e1 + a2 e2 + a3 e3`` in the algebra named by ``tag``."""

    coeffs: tuple
    tag: Tag = P

    def __post_init__(self):
        c = tuple(self.coeffs)
        if len(c) != 4:
            raise ValueError("a paravector has four coefficients")
        # bare ints fit either mode; anything else decides it
        decided = [x for x in c if not isinstance(x, int) or isinstance(x, bool)]
        if not decided or linalg.mode_of(decided) == EXACT:
            c = tuple(Gaussian.coerce(x) for x in c)
        else:
            c = tuple(complex(x) for x in c)
        object.__setattr__(self, "coeffs", c)
        if self.tag not in (P, PBAR):
            raise ValueError(f"unknown algebra tag {self.tag!r}")

    @classmethod
    def basis(cls, i: int, tag: Tag = P) -> "Paravector":
        return cls(tuple(1 if k == i else 0 for k in range(4)), tag)

    @classmethod
    def scalar(cls, a, tag: Tag = P) -> "Paravector":
        return cls((a, 0, 0, 0), tag)

    @property
    def mode(self) -> str:
        return linalg.mode_of(list(self.coeffs))

    def _check(self, other: "Paravector"):
        if not isinstance(other, Paravector):
            raise TypeError("expected a Paravector")
        if other.tag != self.tag:
            raise AlgebraMismatch(f"cannot combine {self.tag} with {other.tag}")
        linalg.check_same_mode(list(self.coeffs), list(other.coeffs))

    def __add__(self, other):
        self._check(other)
        return Paravector(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), self.tag)

    def __sub__(self, other):
        self._check(other)
        return Paravector(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)), self.tag)

    def __neg__(self):
        return Paravector(tuple(-a for a in self.coeffs), self.tag)

    def __mul__(self, other):
        if isinstance(other, Paravector):
            return pv_mul(self, other)
        return Paravector(tuple(a * other for a in self.coeffs), self.tag)

    def __rmul__(self, other):
        return Paravector(tuple(other * a for a in self.coeffs), self.tag)

    def __eq__(self, other):
        if not isinstance(other, Paravector):
            return NotImplemented
        return self.tag == other.tag and all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash((self.coeffs, self.tag))


def pv_mul(x: Paravector, y: Paravector) -> Paravector:
    """Product via ``e_i e_j = delta_ij e0 + s i eps_ijk e_k`` (s = +1 in P, -1 in Pbar)."""
    x._check(y)
    a, b = x.coeffs, y.coeffs
    out = [a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3]]
    for k in (1, 2, 3):
        s = a[0] * b[k] + a[k] * b[0]
        wedge = 0 * a[0]
        for i in (1, 2, 3):
            for j in (1, 2, 3):
                eps = _levi_civita(i, j, k)
                if eps:
                    wedge = wedge + eps * (a[i] * b[j])
        wedge = mul_i(wedge)
        out.append(s + wedge if x.tag == P else s - wedge)
    return Paravector(tuple(out), x.tag)


def represent_left(x: Paravector) -> np.ndarray:
    """Matrix of ``Y -> X Y``: ``sum a_i cE_i`` (``cbar E_i`` for Pbar)."""
    mode = x.mode
    m = linalg.zeros(mode)
    for i, a in enumerate(x.coeffs):
        m = m + basis_matrix(i, x.tag, mode) * a
    return m


def represent_right(x: Paravector) -> np.ndarray:
    """Matrix of ``Y -> Y X``: the transpose of the left representation."""
    return linalg.transpose(represent_left(x))


def phi_iso(x: Paravector) -> np.ndarray:
    """Coordinate vector ``(a0, a1, a2, a3)``."""
    return linalg.vec(*x.coeffs, mode=x.mode)


def theta_iso(x: Paravector, v, tol: float = linalg.DEFAULT_TOL) -> np.ndarray:
    """Evaluation ``X -> L_X v`` at a non-null vector ``v``."""
    v = np.asarray(v)
    linalg.check_same_mode(list(x.coeffs), v)
    norm = linalg.mink4(v, v)
    if linalg.mode_of(v) == EXACT:
        null = norm == 0
    else:
        null = abs(norm) <= tol
    if null:
        raise ValueError("evaluation at a null vector is not an isomorphism")
    return represent_left(x) @ v


def from_left_matrix(m, tag: Tag = P) -> Paravector:
    """Recover X from ``represent_left(X)``; the first column is ``phi_iso(X)``."""
    m = np.asarray(m)
    return Paravector(tuple(m[:, 0]), tag)


def involution(kind: str, x: Paravector, hodge_convention: str = HODGE_MATRIX) -> Paravector:
    """Apply one of the algebra involutions.

    ``clifford_bar`` negates the vector part (Minkowski adjoint on matrices),
    ``dagger`` conjugates coefficients (Hermitian adjoint), ``complex_conj``
    conjugates coefficients and moves to the opposite algebra, ``grade_plus``
    is ``dagger`` followed by ``clifford_bar``, and ``hodge`` multiplies by
    ``i`` in P (``-i`` in Pbar) or, with ``HODGE_RIGHT``, right-multiplies
    by ``e3 e2 e1``.
    """
    a = x.coeffs
    if kind == "clifford_bar":
        return Paravector((a[0], -a[1], -a[2], -a[3]), x.tag)
    if kind == "dagger":
        return Paravector(tuple(c.conjugate() for c in a), x.tag)
    if kind == "complex_conj":
        return Paravector(tuple(c.conjugate() for c in a), _opposite(x.tag))
    if kind == "grade_plus":
        return involution("clifford_bar", involution("dagger", x))
    if kind == "hodge":
        if hodge_convention == HODGE_RIGHT:
            e = [Paravector.basis(i, x.tag) for i in range(4)]
            if x.mode != EXACT:
                e = [Paravector(tuple(complex(c) for c in b.coeffs), x.tag) for b in e]
            return x * e[3] * e[2] * e[1]
        if hodge_convention != HODGE_MATRIX:
            raise ValueError(f"unknown Hodge convention {hodge_convention!r}")
        out = tuple(mul_i(c) for c in a)
        return Paravector(out if x.tag == P else tuple(-c for c in out), x.tag)
    raise ValueError(f"unknown involution {kind!r}; expected one of {INVOLUTIONS}")


def basis_set(mode: str = EXACT) -> dict[tuple[int, int], np.ndarray]:
    """The sixteen products ``cE_i cbar E_j`` keyed by ``(i, j)``."""
    return {
        (i, j): basis_matrix(i, P, mode) @ basis_matrix(j, PBAR, mode)
        for i in range(4)
        for j in range(4)
    }
