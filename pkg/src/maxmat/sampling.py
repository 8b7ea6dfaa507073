"""Seeded random inputs for the property suites.

Every case is a flat tuple of numbers so a failing case can be shrunk
generically; the ``*_from_*`` helpers turn such tuples into library objects.
"""

from __future__ import annotations

import itertools
import zlib

import numpy as np

from .biquaternion import Paravector
from .faraday import EMFieldValue
from .linalg import Gaussian, to_exact
from .symfield import VARS, FourPotential, LinPhase, SymEMField, SymScalar


def rng_for(seed: int, label: str) -> np.random.Generator:
    """Independent generator for one suite, derived from ``(seed, label)``."""
    return np.random.default_rng(np.random.SeedSequence([seed & (2**64 - 1), zlib.crc32(label.encode())]))


def monomials(max_degree: int) -> list[tuple[int, int, int, int]]:
    out = [e for e in itertools.product(range(max_degree + 1), repeat=4) if sum(e) <= max_degree]
    return sorted(out, key=lambda e: (sum(e), e))


MONOMIALS_3 = monomials(3)
MONOMIALS_1 = monomials(1)


def ints(rng: np.random.Generator, n: int, lo: int = -5, hi: int = 5) -> tuple[int, ...]:
    return tuple(int(v) for v in rng.integers(lo, hi + 1, size=n))


def poly_from_ints(coeffs, monos=MONOMIALS_3) -> SymScalar:
    out = {}
    for c, e in zip(coeffs, monos):
        if c:
            out[e] = c
    s = SymScalar()
    for e, c in out.items():
        s = s + SymScalar.monomial(c, e)
    return s


def complex_poly_from_ints(coeffs, monos=MONOMIALS_1) -> SymScalar:
    n = len(monos)
    re, im = coeffs[:n], coeffs[n:2 * n]
    return poly_from_ints(re, monos) + poly_from_ints(im, monos).times_i()


POTENTIAL_SIZE = 4 * len(MONOMIALS_3)


def potential_from_ints(case) -> FourPotential:
    """Four-potential whose components are dense degree-<=3 polynomials."""
    n = len(MONOMIALS_3)
    comps = [poly_from_ints(case[i * n:(i + 1) * n]) for i in range(4)]
    return FourPotential(comps[0], tuple(comps[1:]))


def random_potential(rng) -> tuple[int, ...]:
    return ints(rng, POTENTIAL_SIZE)


NON_MAXWELL_SIZE = POTENTIAL_SIZE + 2


def non_maxwell_from_ints(case) -> SymEMField:
    """A potential-derived field with a deliberate violation of the homogeneous pair.

    kind 0 adds ``(k x, 0, 0)`` to B (``div B = k``), kind 1 adds ``(0, 0, k y)``
    to E (``curl E`` gains ``(k, 0, 0)``), kind 2 does both.
    """
    from .maxwell import derive_fields

    f = derive_fields(potential_from_ints(case[:POTENTIAL_SIZE]))
    kind, k = case[POTENTIAL_SIZE] % 3, case[POTENTIAL_SIZE + 1] or 1
    E, B = list(f.E), list(f.B)
    if kind in (0, 2):
        B[0] = B[0] + SymScalar.var("x") * k
    if kind in (1, 2):
        E[2] = E[2] + SymScalar.var("y") * k
    return SymEMField(tuple(E), tuple(B))


def random_non_maxwell(rng) -> tuple[int, ...]:
    return random_potential(rng) + (int(rng.integers(0, 3)), int(rng.choice([-3, -2, -1, 1, 2, 3])))


PLANE_WAVE_SIZE = 24


def plane_wave_from_ints(case) -> FourPotential:
    """Trig potential ``a cos L + b sin L`` plus linear polynomial parts in A."""
    phase = LinPhase(*case[0:4])
    amps = case[4:12]
    lin = case[12:24]
    c = SymScalar.cos(phase)
    s = SymScalar.sin(phase)
    phi = c * amps[0] + s * amps[1]
    A = []
    for i in range(3):
        comp = c * amps[2 + 2 * i] + s * amps[3 + 2 * i]
        for j, v in enumerate(VARS):
            comp = comp + SymScalar.var(v) * lin[4 * i + j]
        A.append(comp)
    return FourPotential(phi, tuple(A))


def random_plane_wave(rng) -> tuple[int, ...]:
    return ints(rng, 4, -3, 3) + ints(rng, 20, -4, 4)


def field_from_ints(case) -> EMFieldValue:
    return EMFieldValue(list(case[0:3]), list(case[3:6]))


def field_from_floats(case) -> EMFieldValue:
    return EMFieldValue([float(v) for v in case[0:3]], [float(v) for v in case[3:6]])


def random_small_field(rng, radius: float = 2.0) -> tuple[float, ...]:
    """E and B each uniform in the ball of the given radius."""
    out = []
    for _ in range(2):
        v = rng.normal(size=3)
        v = v / np.linalg.norm(v) * radius * rng.random() ** (1 / 3)
        out.extend(float(c) for c in v)
    return tuple(out)


def gaussians_from_ints(case) -> list[Gaussian]:
    """Pairs ``(re, im)`` to Gaussians."""
    return [Gaussian(case[2 * i], case[2 * i + 1]) for i in range(len(case) // 2)]


def matrix_from_ints(case) -> np.ndarray:
    """Exact 4x4 complex matrix from 32 integers."""
    return to_exact(np.array(gaussians_from_ints(case[:32]), dtype=object).reshape(4, 4))


def vec_from_ints(case, n: int) -> np.ndarray:
    return to_exact(np.array(gaussians_from_ints(case[:2 * n]), dtype=object))


def paravector_from_ints(case, tag="P") -> Paravector:
    return Paravector(tuple(gaussians_from_ints(case[:8])), tag)


def sym_field4_from_ints(case) -> list[SymScalar]:
    """Four complex symbolic components; each is a degree-<=1 polynomial plus a trig term."""
    out = []
    block = 2 * len(MONOMIALS_1) + 6
    for i in range(4):
        c = case[i * block:(i + 1) * block]
        poly = complex_poly_from_ints(c[: 2 * len(MONOMIALS_1)])
        ph = LinPhase(*c[-6:-2])
        trig = SymScalar.cos(ph, poly_from_ints([c[-2]], [(0, 0, 0, 0)])) + SymScalar.sin(
            ph, poly_from_ints([c[-1]], [(1, 0, 0, 0)])
        )
        out.append(poly + trig)
    return out


SYM_FIELD4_SIZE = 4 * (2 * len(MONOMIALS_1) + 6)


def random_sym_field4(rng) -> tuple[int, ...]:
    return ints(rng, SYM_FIELD4_SIZE, -3, 3)
