"""Executable checks for the matrix forms of Maxwell's equations.

Every check works on exact symbolic fields; a check passes only when its
residual is literally zero. Each equation keeps its own operator-column sign:
``(-d_t, grad)`` for the divergence forms and ``(+d_t, grad)`` for the
potential form.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import faraday
from .symfield import (
    MINUS_DT,
    PLUS_DT,
    ZERO,
    FourPotential,
    SymEMField,
    SymScalar,
    curl,
    div,
    dt,
    dt_plus_cbar_nabla,
    grad,
    matrix_divergence,
    vec_equal,
    vec_is_zero,
    vec_to_json,
    wave_op,
)

VARIANTS = ("F8", "Fstar9", "cF10", "conj22", "dual15")


class NotMaxwellError(ValueError):
    """A check that is only claimed for Maxwell fields got a non-Maxwell field."""


def _i(s: SymScalar) -> SymScalar:
    return s.times_i()


def _sub(a, b) -> list:
    return [p - q for p, q in zip(a, b)]


def _field_value(f: SymEMField) -> faraday.EMFieldValue:
    return faraday.EMFieldValue(list(f.E), list(f.B))


def derive_fields(p: FourPotential) -> SymEMField:
    """``B = curl A`` and ``E = -d_t A - grad phi``."""
    B = curl(p.A)
    g = grad(p.phi)
    E = [-a - b for a, b in zip(dt(p.A), g)]
    return SymEMField(tuple(E), tuple(B))


def sources(f: SymEMField) -> tuple[SymScalar, list]:
    """Charge ``rho = div E`` and current ``J = curl B - d_t E``."""
    rho = div(f.E)
    J = _sub(curl(f.B), dt(f.E))
    return rho, J


def homogeneous_residuals(f: SymEMField) -> tuple[list, SymScalar]:
    """``(curl E + d_t B, div B)``; both vanish for a Maxwell field."""
    faraday_res = [a + b for a, b in zip(curl(f.E), dt(f.B))]
    return faraday_res, div(f.B)


def is_maxwell(f: SymEMField) -> bool:
    fr, gb = homogeneous_residuals(f)
    return vec_is_zero(fr) and gb.is_zero()


def four_current(f: SymEMField) -> list:
    rho, J = sources(f)
    return [rho, *J]


def divergence_form_current(f: SymEMField, variant: str) -> list:
    """The 4-vector produced by one of the one-equation forms.

    ``F8``, ``cF10``, ``conj22`` and ``dual15`` return ``(rho, J)`` exactly
    when Maxwell's equations hold; ``Fstar9`` returns zero.
    """
    fv = _field_value(f)
    if variant == "F8":
        return matrix_divergence(faraday.build_F(fv), MINUS_DT)
    if variant == "Fstar9":
        return matrix_divergence(faraday.hodge_dual(fv), MINUS_DT)
    if variant == "cF10":
        return matrix_divergence(faraday.cf_matrix(fv.complex_vector()), MINUS_DT)
    if variant == "conj22":
        return matrix_divergence(faraday.cf_matrix(fv.complex_vector(), conjugate=True), MINUS_DT)
    if variant == "dual15":
        w = [ZERO] + [-e - _i(b) for e, b in zip(f.E, f.B)]
        return dt_plus_cbar_nabla(w, sign=-1)
    raise ValueError(f"unknown variant {variant!r}; expected one of {VARIANTS}")


def macroscopic_current(E, B, D, H) -> list:
    """Divergence ``(-d_t, grad)`` of ``[[0, (D+iB)^t], [D+iB, x(-i(E+iH))]]``.

    Real part ``(div D, curl H - d_t D)``, imaginary part ``(div B, -d_t B - curl E)``.
    """
    top = [SymScalar.coerce(d) + _i(SymScalar.coerce(b)) for d, b in zip(D, B)]
    c = [-_i(SymScalar.coerce(e) + _i(SymScalar.coerce(h))) for e, h in zip(E, H)]
    m = np.empty((4, 4), dtype=object)
    m[0, 0] = ZERO
    lower = faraday.cross_matrix(c)
    for k in range(3):
        m[0, k + 1] = top[k]
        m[k + 1, 0] = top[k]
        for j in range(3):
            m[k + 1, j + 1] = lower[k][j]
    return matrix_divergence(m, MINUS_DT)


@dataclass
class PotentialForms:
    lhs13: list
    lhs14: list
    g: SymScalar
    cfield: list


def gauge_function(p: FourPotential) -> SymScalar:
    """``d_t phi + div A``."""
    return p.phi.partial("t") + div(p.A)


def potential_forms(p: FourPotential) -> PotentialForms:
    """Both sides of the potential/field duality.

    ``lhs13 = (phi I + [[0, A^t], [A, -i x A]]) (d_t, grad)`` and
    ``lhs14 = (d_t I + cbar_nabla) (phi, A)``; ``cfield`` is the expected
    right-hand side ``(g, -E - iB)``.
    """
    m = faraday.cf_matrix(list(p.A))
    for k in range(4):
        m[k, k] = m[k, k] + p.phi
    lhs13 = matrix_divergence(m, PLUS_DT)
    lhs14 = dt_plus_cbar_nabla([p.phi, *p.A], sign=1)
    f = derive_fields(p)
    g = gauge_function(p)
    cfield = [g] + [-e - _i(b) for e, b in zip(f.E, f.B)]
    return PotentialForms(lhs13, lhs14, g, cfield)


def _require_maxwell(f: SymEMField, what: str):
    if not is_maxwell(f):
        raise NotMaxwellError(f"{what} is only claimed for fields satisfying the homogeneous equations")


def wave_identity_19(f: SymEMField) -> list:
    """Residual of ``(d_t^2 - lap)(0, -E - iB) = (0, grad rho + d_t J - i curl J)``.

    The time component of the residual is ``-(d_t rho + div J)``.
    """
    _require_maxwell(f, "the wave identity")
    rho, J = sources(f)
    w = [ZERO] + [-e - _i(b) for e, b in zip(f.E, f.B)]
    lhs = [wave_op(c) for c in w]
    cj = curl(J)
    rhs_space = [gr + dj - _i(c) for gr, dj, c in zip(grad(rho), dt(J), cj)]
    # time row: the wave operator of 0 against the continuity expression
    rhs_time = rho.partial("t") + div(J)
    return [lhs[0] - rhs_time] + _sub(lhs[1:], rhs_space)


@dataclass
class GaugeWave:
    residual20: list
    gauge_extra: list
    g: SymScalar


def gauge_wave_20_21(p: FourPotential) -> GaugeWave:
    """``(d_t^2 - lap)(phi, A) - (rho, J) - (d_t g, -grad g)``, identically zero."""
    f = derive_fields(p)
    rho, J = sources(f)
    g = gauge_function(p)
    extra = [g.partial("t")] + [-c for c in grad(g)]
    wave = [wave_op(c) for c in (p.phi, *p.A)]
    res = [w - s - e for w, s, e in zip(wave, [rho, *J], extra)]
    return GaugeWave(res, extra, g)


def stress_energy_sym(f: SymEMField) -> np.ndarray:
    """Symbolic ``T_F = 1/2 cF cbar F``."""
    return faraday.stress_energy(_field_value(f))


def theorem2_lorentz_law(f: SymEMField) -> list:
    """Residual of ``T_F (-d_t, grad) = F (rho, J)``."""
    _require_maxwell(f, "the Lorentz-law identity")
    T = stress_energy_sym(f)
    lhs = matrix_divergence(T, MINUS_DT)
    F = faraday.build_F(_field_value(f))
    rhs = list(F @ np.array(four_current(f), dtype=object))
    return _sub(lhs, rhs)


def lorentz_force_density(f: SymEMField) -> list:
    """``F (rho, J)``: ``(E.J, rho E + J x B)``."""
    F = faraday.build_F(_field_value(f))
    return list(F @ np.array(four_current(f), dtype=object))


# reports ---------------------------------------------------------------------

def _sym_json(x):
    if isinstance(x, SymScalar):
        return x.to_json()
    if isinstance(x, (list, tuple)):
        return vec_to_json(x)
    return x


@dataclass
class MaxwellReport:
    """All identity checks for one field (and optionally its potential)."""

    rho: SymScalar
    J: list
    faraday_residual: list
    gauss_b_residual: SymScalar
    charge_conservation: SymScalar
    currents: dict
    checks: dict = field(default_factory=dict)
    residuals: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    @property
    def homogeneous_ok(self) -> bool:
        return vec_is_zero(self.faraday_residual) and self.gauss_b_residual.is_zero()

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "homogeneous_ok": self.homogeneous_ok,
            "rho": self.rho.to_json(),
            "J": vec_to_json(self.J),
            "faraday_residual": vec_to_json(self.faraday_residual),
            "gauss_b_residual": self.gauss_b_residual.to_json(),
            "charge_conservation": self.charge_conservation.to_json(),
            "currents": {k: vec_to_json(v) for k, v in self.currents.items()},
            "residuals": {k: _sym_json(v) for k, v in self.residuals.items()},
            "checks": dict(self.checks),
            "notes": list(self.notes),
        }

    def lines(self) -> list[str]:
        out = [
            f"rho = {self.rho}",
            "J = (" + ", ".join(str(c) for c in self.J) + ")",
            "curl E + dt B = (" + ", ".join(str(c) for c in self.faraday_residual) + ")",
            f"div B = {self.gauss_b_residual}",
            f"dt rho + div J = {self.charge_conservation}",
        ]
        for name, vec in self.currents.items():
            out.append(f"{name}: (" + ", ".join(str(c) for c in vec) + ")")
        for name, ok in self.checks.items():
            out.append(f"[{'PASS' if ok else 'FAIL'}] {name}")
        out.extend(f"note: {n}" for n in self.notes)
        out.append("RESULT: " + ("PASS" if self.passed else "FAIL"))
        return out


def maxwell_residuals(f: SymEMField, D=None, H=None) -> MaxwellReport:
    """Sources, homogeneous residuals and every one-equation form for ``f``."""
    rho, J = sources(f)
    fr, gb = homogeneous_residuals(f)
    cons = rho.partial("t") + div(J)
    currents = {v: divergence_form_current(f, v) for v in VARIANTS}
    rep = MaxwellReport(rho, J, fr, gb, cons, currents)
    rj = [rho, *J]
    hom = rep.homogeneous_ok
    rep.checks["homogeneous equations (curl E + dt B = 0, div B = 0)"] = hom
    agree = all(vec_equal(currents[v], rj) for v in ("F8", "cF10", "conj22", "dual15"))
    rep.checks["divergence forms F8/cF10/conj22/dual15 all equal (rho, J)"] = agree
    rep.checks["dual form Fstar9 vanishes"] = vec_is_zero(currents["Fstar9"])
    rep.checks["charge conservation"] = cons.is_zero()
    if D is not None and H is not None:
        mac = macroscopic_current(f.E, f.B, D, H)
        rep.currents["macroscopic"] = mac
        # real part reduces to (div D, curl H - dt D), imaginary part to the homogeneous pair
        expect = [div(D) + _i(div(f.B))] + [
            (c - d) + _i(-b - e) for c, d, b, e in zip(curl(H), dt(D), dt(f.B), curl(f.E))
        ]
        rep.checks["macroscopic form matches its component expansion"] = vec_equal(mac, expect)
    if hom:
        r19 = wave_identity_19(f)
        rep.residuals["wave"] = r19
        rep.checks["wave identity residual is zero"] = vec_is_zero(r19)
        t2 = theorem2_lorentz_law(f)
        rep.residuals["lorentz_law"] = t2
        rep.checks["div T_F = F (rho, J)"] = vec_is_zero(t2)
    else:
        rep.notes.append("field violates the homogeneous equations; wave and Lorentz-law identities not applicable")
    return rep


def verify_potential(p: FourPotential) -> MaxwellReport:
    """Full report for the field derived from a potential, plus potential identities."""
    f = derive_fields(p)
    rep = maxwell_residuals(f)
    forms = potential_forms(p)
    rep.residuals["lhs13"] = forms.lhs13
    rep.residuals["lhs14"] = forms.lhs14
    rep.residuals["gauge"] = forms.g
    rep.checks["potential forms lhs13 = lhs14"] = vec_equal(forms.lhs13, forms.lhs14)
    rep.checks["lhs13 = (g, -E - iB)"] = vec_equal(forms.lhs13, forms.cfield)
    gw = gauge_wave_20_21(p)
    rep.residuals["gauge_wave"] = gw.residual20
    rep.residuals["gauge_extra"] = gw.gauge_extra
    rep.checks["gauge wave residual is zero"] = vec_is_zero(gw.residual20)
    if gw.g.is_zero():
        rep.notes.append("covariant gauge holds: (dt^2 - lap)(phi, A) = (rho, J)")
    return rep

