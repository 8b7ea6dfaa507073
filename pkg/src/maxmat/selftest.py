"""Deterministic property suites driven by one seeded generator per suite."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from . import biparavector as bpv
from . import biquaternion as bq
from . import faraday as fd
from . import linalg as la
from . import maxwell as mw
from . import sampling as sm
from . import symfield as sf
from .linalg import Gaussian


@dataclass(frozen=True)
class Suite:
    name: str
    generate: Callable[[np.random.Generator], tuple]
    check: Callable[[tuple], bool]
    fixed: bool = False  # runs once regardless of count


# linalg -------------------------------------------------------------------

def _gen_linalg(rng):
    return sm.ints(rng, 80)


def _check_linalg(case):
    A, B = sm.matrix_from_ints(case[:32]), sm.matrix_from_ints(case[32:64])
    v, w = sm.vec_from_ints(case[64:72], 4), sm.vec_from_ints(case[72:80], 4)
    adj = la.minkowski_adjoint
    return (
        la.exact_equal(adj(adj(A)), A)
        and la.exact_equal(adj(A @ B), adj(B) @ adj(A))
        and la.trace(A @ B) == la.trace(B @ A)
        and la.mink4(adj(A) @ v, w) == la.mink4(v, A @ w)
        and la.mink4(v, w) == la.mink4(w, v)
        and la.bilinear3(v[1:], w[1:]) == la.bilinear3(w[1:], v[1:])
        and la.bilinear3(la.mul_i(v[1:]), w[1:]) == la.bilinear3(v[1:], w[1:]) * la.I
    )


# faraday -------------------------------------------------------------------

def _gen_anticommutator(rng):
    return sm.ints(rng, 12)


def _check_anticommutator(case):
    f1, f2 = sm.field_from_ints(case[:6]), sm.field_from_ints(case[6:])
    c1, c2 = fd.complexify(f1).matrix(), fd.complexify(f2).matrix()
    b1, b2 = fd.complexify(f1, True).matrix(), fd.complexify(f2, True).matrix()
    A1, A2 = f1.complex_vector(), f2.complex_vector()
    Id = la.identity()
    ip = la.bilinear3(A1, A2)
    F1 = fd.build_F(f1)
    T = fd.stress_energy(f1)
    return (
        la.exact_equal(c1 @ c2 + c2 @ c1, Id * (2 * ip))
        and la.exact_equal(b1 @ b2 + b2 @ b1, Id * (2 * la.bilinear3(A1, A2).conjugate()))
        and la.exact_equal(c1 @ b2, b2 @ c1)
        and la.exact_equal(c1 @ c1, Id * la.bilinear3(A1, A1))
        and la.exact_equal(la.minkowski_adjoint(F1), -F1)
        and la.exact_equal(c1, F1 - la.mul_i(fd.hodge_dual(f1)))
        and la.exact_equal(fd.hodge_dual(fd.dual_field(f1)), -F1)
        and la.exact_equal(c1 + b1, F1 * 2)
        and la.exact_equal(T, la.minkowski_adjoint(T))
        and all(v.im == 0 for v in T.flat)
        and la.exact_equal(T, (b1 @ c1) * Gaussian(1) / 2)
    )


def _gen_scalar_square(rng):
    return sm.ints(rng, 12)


def _check_scalar_square(case):
    A = sm.gaussians_from_ints(case[:6])
    C = sm.gaussians_from_ints(case[6:])
    iA = [a.times_i() for a in A]
    if C == iA or C == [-a for a in iA]:
        return True  # excluded by construction
    m = fd._block(A, A, fd.cross_matrix(C), Gaussian(0))
    sq = m @ m
    diag = sq[0, 0]
    return not la.exact_equal(sq, la.identity() * diag)


def _gen_exp(rng):
    return sm.random_small_field(rng)


def _check_exp(case):
    f = sm.field_from_floats(case)
    L = fd.exp_F(f)
    series = la.mat_exp_series(fd.build_F(f), 40)
    metric, det = fd.lorentz_deviation(L)
    return la.max_abs_diff(L, series) <= 1e-10 and metric <= 1e-9 and det <= 1e-9


# biquaternion -----------------------------------------------------------------

def _gen_rep(rng):
    return sm.ints(rng, 24)


def _check_rep(case):
    X = sm.paravector_from_ints(case[:8])
    Y = sm.paravector_from_ints(case[8:16])
    Z = sm.paravector_from_ints(case[16:24])
    L, R = bq.represent_left, bq.represent_right
    inv = bq.involution
    ok = (
        la.exact_equal(L(X * Y), L(X) @ L(Y))
        and la.exact_equal(R(X * Y), R(Y) @ R(X))
        and la.exact_equal(L(X) @ R(Y), R(Y) @ L(X))
        and (X * Y) * Z == X * (Y * Z)
        and inv("clifford_bar", X * Y) == inv("clifford_bar", Y) * inv("clifford_bar", X)
        and inv("dagger", X * Y) == inv("dagger", Y) * inv("dagger", X)
        and inv("grade_plus", X * Y) == inv("grade_plus", X) * inv("grade_plus", Y)
        and inv("complex_conj", X * Y) == inv("complex_conj", X) * inv("complex_conj", Y)
        and la.exact_equal(L(inv("clifford_bar", X)), la.minkowski_adjoint(L(X)))
        and la.exact_equal(L(inv("dagger", X)), la.dagger(L(X)))
        and la.exact_equal(L(inv("complex_conj", X)), la.entry_conj(L(X)))
        and la.exact_equal(bq.theta_iso(X, la.unit(0)), bq.phi_iso(X))
    )
    Xb, Yb = sm.paravector_from_ints(case[:8], bq.PBAR), sm.paravector_from_ints(case[8:16], bq.PBAR)
    ok = ok and la.exact_equal(L(Xb * Yb), L(Xb) @ L(Yb))
    # Y -> X Y Z has matrix L_X R_Z
    op = np.array([list((X * bq.Paravector.basis(k) * Z).coeffs) for k in range(4)], dtype=object).T
    return ok and la.exact_equal(op, L(X) @ R(Z))


# biparavector --------------------------------------------------------------------

def _gen_roundtrip(rng):
    return sm.ints(rng, 40)


def _check_roundtrip(case):
    M = sm.matrix_from_ints(case[:32])
    X = sm.paravector_from_ints(case[32:40])
    d = bpv.decompose(M)
    if not la.exact_equal(bpv.to_matrix(d), M):
        return False
    if bpv.decompose(bpv.to_matrix(d)) != d:
        return False
    x = bq.theta_iso(X, la.unit(0))
    return la.exact_equal(M @ x, bq.phi_iso(bpv.apply(d, X)))


def _gen_stress(rng):
    return sm.ints(rng, 6)


def _check_stress(case):
    f = sm.field_from_ints(case)
    return la.exact_equal(bpv.to_matrix(bpv.stress_biparavector(f)), fd.stress_energy(f))


def _check_lorentz(case):
    f = sm.field_from_floats(case)
    return la.max_abs_diff(bpv.to_matrix(bpv.lorentz_biparavector(f)), fd.exp_F(f)) <= 1e-9


# symfield --------------------------------------------------------------------------

def _check_ring(case):
    a, b, c, _ = sm.sym_field4_from_ints(case)
    return (
        (a * b) * c == a * (b * c)
        and a * (b + c) == a * b + a * c
        and a * b == b * a
        and a.partial("x").partial("y") == a.partial("y").partial("x")
        and (a * b).partial("t") == a.partial("t") * b + a * b.partial("t")
        and sf.SymScalar.from_json(a.to_json()) == a
    )


def _check_cbar_nabla(case):
    w = sm.sym_field4_from_ints(case)
    twice = sf.cbar_nabla(sf.cbar_nabla(w))
    lap = [sf.laplacian(c) for c in w]
    fact1 = sf.dt_plus_cbar_nabla(sf.dt_plus_cbar_nabla(w, 1), -1)
    fact2 = sf.dt_plus_cbar_nabla(sf.dt_plus_cbar_nabla(w, -1), 1)
    wave = [sf.wave_op(c) for c in w]
    return sf.vec_equal(twice, lap) and sf.vec_equal(fact1, wave) and sf.vec_equal(fact2, wave)


def _gen_leibniz(rng):
    return sm.ints(rng, 2 * 16 * len(sm.MONOMIALS_1), -3, 3)


def _check_leibniz(case):
    n = len(sm.MONOMIALS_1)
    ents = [sm.poly_from_ints(case[i * n:(i + 1) * n], sm.MONOMIALS_1) for i in range(32)]
    A = sf.sym_matrix([ents[4 * r:4 * r + 4] for r in range(4)])
    B = sf.sym_matrix([ents[16 + 4 * r:16 + 4 * r + 4] for r in range(4)])
    for v in sf.VARS:
        lhs = sf.matrix_partial(A @ B, v)
        rhs = sf.matrix_partial(A, v) @ B + A @ sf.matrix_partial(B, v)
        if not la.exact_equal(lhs, rhs):
            return False
    return True


# maxwell ---------------------------------------------------------------------------

def check_equivalence(p: sf.FourPotential) -> bool:
    """Invariants (a)-(e) for the field derived from ``p``."""
    f = mw.derive_fields(p)
    if not mw.is_maxwell(f):
        return False
    rho, J = mw.sources(f)
    rj = [rho, *J]
    cur = {v: mw.divergence_form_current(f, v) for v in mw.VARIANTS}
    if not all(sf.vec_equal(cur[v], rj) for v in ("F8", "cF10", "conj22", "dual15")):
        return False
    if not sf.vec_is_zero(cur["Fstar9"]):
        return False
    forms = mw.potential_forms(p)
    if not (sf.vec_equal(forms.lhs13, forms.lhs14) and sf.vec_equal(forms.lhs13, forms.cfield)):
        return False
    if not sf.vec_is_zero(mw.wave_identity_19(f)):
        return False
    if not sf.vec_is_zero(mw.gauge_wave_20_21(p).residual20):
        return False
    if not sf.vec_is_zero(mw.theorem2_lorentz_law(f)):
        return False
    return (rho.partial("t") + sf.div(J)).is_zero()


def _check_falsify(case):
    f = sm.non_maxwell_from_ints(case)
    return not mw.maxwell_residuals(f).passed


def _check_anchors(_case):
    x, t = sf.x, sf.t
    Z = sf.ZERO
    p = sf.FourPotential(Z, (Z, Z, -t * x))
    f = mw.derive_fields(p)
    ok = sf.vec_equal(f.E, [Z, Z, x]) and sf.vec_equal(f.B, [Z, t, Z])
    f2 = sf.SymEMField((2 * x, Z, Z), (Z, Z, Z))
    ok = ok and sf.vec_equal(mw.lorentz_force_density(f2), [Z, 4 * x, Z, Z])
    ok = ok and sf.vec_is_zero(mw.theorem2_lorentz_law(f2))
    L = sf.LinPhase(1, 0, 0, 1)
    wave = sf.SymEMField((sf.SymScalar.cos(L), Z, Z), (Z, sf.SymScalar.cos(L), Z))
    ok = ok and mw.maxwell_residuals(wave).passed
    ok = ok and not mw.maxwell_residuals(sf.SymEMField((Z, Z, Z), (x, Z, Z))).passed
    null = fd.EMFieldValue([1.0, 0.0, 0.0], [0.0, 1.0, 0.0])
    cf = fd.complexify(null)
    ok = ok and la.max_abs_diff(fd.exp_cF(cf), np.eye(4) + la.to_approx(cf.matrix())) == 0
    ok = ok and la.max_abs_diff(fd.exp_F(null), la.mat_exp_series(fd.build_F(null), 40)) <= 1e-10
    # basis matrices: Hermitian, traceless, square to I, 1/4 trace orthonormal
    basis = bq.basis_set()
    Id = la.identity()
    for (i, j), m in basis.items():
        ok = ok and la.exact_equal(m, la.dagger(m)) and la.exact_equal(m @ m, Id)
        ok = ok and (la.trace(m) == (4 if (i, j) == (0, 0) else 0))
        for (k, l), n in basis.items():
            ok = ok and la.trace(m @ n) * Gaussian(1) / 4 == (1 if (i, j) == (k, l) else 0)
    cE = [bq.basis_matrix(i) for i in range(4)]
    cbE = [bq.basis_matrix(i, bq.PBAR) for i in range(4)]
    ok = ok and la.exact_equal(cE[1] @ cE[2], cE[3] * la.I)
    ok = ok and la.exact_equal(cbE[1] @ cbE[2], cbE[3] * (-la.I))
    return ok


def _ints_gen(n, lo=-5, hi=5):
    return lambda rng: sm.ints(rng, n, lo, hi)


SUITES: Sequence[Suite] = (
    Suite("anchors", lambda rng: (), _check_anchors, fixed=True),
    Suite("linalg.adjoint", _gen_linalg, _check_linalg),
    Suite("faraday.anticommutator", _gen_anticommutator, _check_anticommutator),
    Suite("faraday.scalar_square", _gen_scalar_square, _check_scalar_square),
    Suite("faraday.exponential", _gen_exp, _check_exp),
    Suite("biquaternion.representation", _gen_rep, _check_rep),
    Suite("biparavector.roundtrip", _gen_roundtrip, _check_roundtrip),
    Suite("biparavector.stress", _gen_stress, _check_stress),
    Suite("biparavector.lorentz", _gen_exp, _check_lorentz),
    Suite("symfield.ring", sm.random_sym_field4, _check_ring),
    Suite("symfield.cbar_nabla_squared", sm.random_sym_field4, _check_cbar_nabla),
    Suite("symfield.leibniz", _gen_leibniz, _check_leibniz),
    Suite("maxwell.equivalence", sm.random_potential, lambda c: check_equivalence(sm.potential_from_ints(c))),
    Suite("maxwell.plane_wave", sm.random_plane_wave, lambda c: check_equivalence(sm.plane_wave_from_ints(c))),
    Suite("maxwell.falsification", sm.random_non_maxwell, _check_falsify),
)


def _safe(check, case) -> bool:
    try:
        return bool(check(case))
    except sf.ResourceLimitError:
        raise
    except Exception:
        return False


def shrink(check, case: tuple, max_rounds: int = 20) -> tuple:
    """Greedy shrink of a failing case toward zeros while it keeps failing."""
    case = tuple(case)
    for _ in range(max_rounds):
        progress = False
        for i, v in enumerate(case):
            if v == 0:
                continue
            half = v // 2 if isinstance(v, int) else v / 2
            for cand in (0, half):
                if cand == v:
                    continue
                trial = case[:i] + (type(v)(cand),) + case[i + 1:]
                if not _safe(check, trial):
                    case, progress = trial, True
                    break
        if not progress:
            break
    return case


@dataclass
class SuiteResult:
    name: str
    passed: int
    total: int
    counterexample: tuple | None = None


def run_suite(suite: Suite, seed: int, count: int) -> SuiteResult:
    rng = sm.rng_for(seed, suite.name)
    n = (1 if count > 0 else 0) if suite.fixed else count
    passed = 0
    for _ in range(n):
        case = suite.generate(rng)
        if _safe(suite.check, case):
            passed += 1
        else:
            return SuiteResult(suite.name, passed, n, shrink(suite.check, case))
    return SuiteResult(suite.name, passed, n)


def run_selftest(seed: int = 42, count: int = 100, out=print, suites: Sequence[Suite] = SUITES) -> int:
    """Run every suite; print one line per suite and return the exit code."""
    out(f"selftest seed={seed} count={count}")
    if count == 0:
        out("warning: count=0, no cases were run")
    failed = False
    for suite in sorted(suites, key=lambda s: s.name):
        res = run_suite(suite, seed, count)
        status = "ok" if res.counterexample is None else "FAIL"
        out(f"{res.name}: {res.passed}/{res.total} passed [{status}]")
        if res.counterexample is not None:
            failed = True
            out(f"  counterexample (seed={seed}, suite={res.name}): {list(res.counterexample)}")
    out("selftest: " + ("FAIL" if failed else "PASS"))
    return 1 if failed else 0
