"""Acceptance criteria, one test each, at the stated counts and tolerances.

Every test records a PASS/FAIL line that is repeated in the terminal summary.
"""

import numpy as np

from maxmat import biparavector as bpv
from maxmat import biquaternion as bq
from maxmat import faraday as fd
from maxmat import linalg as la
from maxmat import maxwell as mw
from maxmat import sampling as sm
from maxmat import symfield as sf
from maxmat.biquaternion import PBAR, Paravector
from maxmat.linalg import Gaussian

SEED = 20251015


def rng(label):
    return sm.rng_for(SEED, "acceptance." + label)


def equivalence_failures(p):
    """Names of the invariants (a)-(e) that do not hold for potential ``p``."""
    f = mw.derive_fields(p)
    bad = []
    curl_res, div_res = mw.homogeneous_residuals(f)
    if not (sf.vec_is_zero(curl_res) and div_res.is_zero()):
        bad.append("a")
    cur = {v: mw.divergence_form_current(f, v) for v in mw.VARIANTS}
    ref = cur["F8"]
    if not all(sf.vec_equal(cur[v], ref) for v in ("cF10", "conj22", "dual15")) or not sf.vec_is_zero(cur["Fstar9"]):
        bad.append("b")
    forms = mw.potential_forms(p)
    if not sf.vec_equal(forms.lhs13, forms.lhs14):
        bad.append("c")
    if not (sf.vec_is_zero(mw.wave_identity_19(f)) and sf.vec_is_zero(mw.gauge_wave_20_21(p).residual20)
            and sf.vec_is_zero(mw.theorem2_lorentz_law(f))):
        bad.append("d")
    rho, J = mw.sources(f)
    if not (rho.partial("t") + sf.div(J)).is_zero():
        bad.append("e")
    return bad


def test_1_exact_equivalence(record):
    r, n, failures = rng("1"), 100, []
    for k in range(n):
        bad = equivalence_failures(sm.potential_from_ints(sm.random_potential(r)))
        if bad:
            failures.append((k, bad))
    ok = not failures
    record("1. exact equivalence", ok, f"{n - len(failures)}/{n} degree-3 potentials satisfy (a)-(e) exactly")
    assert ok, failures[:5]


def test_2_falsification(record):
    r, n = rng("2"), 100
    false_passes = 0
    for _ in range(n):
        f = sm.non_maxwell_from_ints(sm.random_non_maxwell(r))
        assert not mw.is_maxwell(f)
        rep = mw.maxwell_residuals(f)
        cur = [mw.divergence_form_current(f, v) for v in ("F8", "cF10", "conj22", "dual15")]
        variants_agree = all(sf.vec_equal(c, cur[0]) for c in cur)
        if rep.passed or variants_agree:
            false_passes += 1
    ok = false_passes == 0
    record("2. falsification", ok, f"{false_passes} false passes among {n} non-Maxwell fields")
    assert ok


def test_3_anticommutator_and_scalar_square(record):
    r = rng("3")
    n1, bad1 = 200, 0
    for _ in range(n1):
        f1, f2 = sm.field_from_ints(sm.ints(r, 6)), sm.field_from_ints(sm.ints(r, 6))
        c1, c2 = fd.complexify(f1).matrix(), fd.complexify(f2).matrix()
        b2 = fd.complexify(f2, True).matrix()
        ip = la.bilinear3(f1.complex_vector(), f2.complex_vector())
        if not (la.exact_equal(c1 @ c2 + c2 @ c1, la.identity() * (2 * ip)) and la.exact_equal(c1 @ b2, b2 @ c1)):
            bad1 += 1
    n2, bad2 = 200, 0
    done = 0
    while done < n2:
        A = sm.gaussians_from_ints(sm.ints(r, 6))
        C = sm.gaussians_from_ints(sm.ints(r, 6))
        iA = [a.times_i() for a in A]
        if C == iA or C == [-a for a in iA]:
            continue
        done += 1
        m = fd._block(A, A, fd.cross_matrix(C), Gaussian(0))
        sq = m @ m
        if la.exact_equal(sq, la.identity() * sq[0, 0]):
            bad2 += 1
    ok = bad1 == 0 and bad2 == 0
    record("3. anticommutator and scalar square", ok,
           f"{n1 - bad1}/{n1} pairs satisfy both identities; {n2 - bad2}/{n2} (A, C) with C != +-iA fail the scalar square")
    assert ok


def test_4_stress_divergence(record):
    r, n, bad = rng("4"), 50, 0
    for _ in range(n):
        f = mw.derive_fields(sm.potential_from_ints(sm.random_potential(r)))
        T = mw.stress_energy_sym(f)
        lhs = sf.matrix_divergence(T, sf.MINUS_DT)
        F = fd.build_F(mw._field_value(f))
        rhs = list(F @ np.array(mw.four_current(f), dtype=object))
        if not sf.vec_equal(lhs, rhs):
            bad += 1
    x, Z = sf.x, sf.ZERO
    anchor = sf.SymEMField((2 * x, Z, Z), (Z, Z, Z))
    T = mw.stress_energy_sym(anchor)
    expect = [Z, 4 * x, Z, Z]
    anchor_ok = sf.vec_equal(sf.matrix_divergence(T, sf.MINUS_DT), expect) and sf.vec_equal(
        mw.lorentz_force_density(anchor), expect)
    ok = bad == 0 and anchor_ok
    record("4. divergence of T_F", ok, f"{n - bad}/{n} fields exact; anchor E=(2x,0,0) gives (0,4x,0,0) on both sides: {anchor_ok}")
    assert ok


def basis_checks():
    cE = [bq.basis_matrix(i) for i in range(4)]
    cbE = [bq.basis_matrix(i, PBAR) for i in range(4)]
    Id = la.identity()
    ok = True
    for m in cE[1:] + cbE[1:]:
        ok &= la.exact_equal(m, la.dagger(m)) and la.trace(m) == 0 and la.exact_equal(m @ m, Id)
    products = bq.basis_set()
    # linear independence: the 16 flattened matrices have full rank over Q(i)
    flat = np.array([[complex(v) for v in m.flat] for m in products.values()])
    ok &= np.linalg.matrix_rank(flat) == 16
    for (i, j), m in products.items():
        for (k, l), n in products.items():
            ok &= la.trace(m @ n) * Gaussian(1) / 4 == (1 if (i, j) == (k, l) else 0)
    ok &= la.exact_equal(cE[1] @ cE[2], cE[3] * la.I) and la.exact_equal(cbE[1] @ cbE[2], cbE[3] * (-la.I))
    for i in range(1, 4):
        for j in range(1, 4):
            if i != j:
                ok &= la.exact_equal(cE[i] @ cE[j], -(cE[j] @ cE[i]))
    for i in range(4):
        for j in range(4):
            ok &= la.exact_equal(cE[i] @ cbE[j], cbE[j] @ cE[i])
    return bool(ok)


def test_5_representation(record):
    r, n, bad = rng("5"), 200, 0
    L, R = bq.represent_left, bq.represent_right
    for _ in range(n):
        X, Y = sm.paravector_from_ints(sm.ints(r, 8)), sm.paravector_from_ints(sm.ints(r, 8))
        if not (la.exact_equal(L(X * Y), L(X) @ L(Y)) and la.exact_equal(R(X * Y), R(Y) @ R(X))
                and la.exact_equal(L(X) @ R(Y), R(Y) @ L(X))):
            bad += 1
    basis_ok = basis_checks()
    ok = bad == 0 and basis_ok
    record("5. representations", ok, f"{n - bad}/{n} paravector pairs; basis checks: {basis_ok}")
    assert ok


def test_6_roundtrip(record):
    r, n, bad_rt, bad_eval = rng("6"), 100, 0, 0
    for _ in range(n):
        M = sm.matrix_from_ints(sm.ints(r, 32))
        X = sm.paravector_from_ints(sm.ints(r, 8))
        d = bpv.decompose(M)
        if not la.exact_equal(bpv.to_matrix(d), M):
            bad_rt += 1
        if not la.exact_equal(M @ bq.theta_iso(X, la.unit(0)), bq.phi_iso(bpv.apply(d, X))):
            bad_eval += 1
    ok = bad_rt == 0 and bad_eval == 0
    record("6. biparavector round trip", ok, f"{n - bad_rt}/{n} exact round trips; {n - bad_eval}/{n} evaluations at e0 agree")
    assert ok


def test_7_exponential(record):
    r, n = rng("7"), 100
    cases = [sm.random_small_field(r) for _ in range(n)] + [(1.0, 0.0, 0.0, 0.0, 1.0, 0.0)]
    worst = [0.0, 0.0, 0.0]
    for case in cases:
        f = sm.field_from_floats(case)
        assert max(np.linalg.norm(case[:3]), np.linalg.norm(case[3:])) <= 2
        L = fd.exp_F(f)
        metric, det = fd.lorentz_deviation(L)
        series = la.max_abs_diff(L, la.mat_exp_series(fd.build_F(f), 40))
        worst = [max(worst[0], series), max(worst[1], metric), max(worst[2], det)]
    null = fd.complexify(sm.field_from_floats(cases[-1]))
    null_ok = complex(null.invariant()) == 0 and la.max_abs_diff(fd.exp_cF(null), np.eye(4) + la.to_approx(null.matrix())) == 0
    ok = worst[0] <= 1e-10 and worst[1] <= 1e-9 and worst[2] <= 1e-9 and null_ok
    record("7. exponential", ok,
           f"{len(cases)} fields (null included: {null_ok}); max series diff {worst[0]:.1e} (tol 1e-10), "
           f"max metric dev {worst[1]:.1e}, max |det-1| {worst[2]:.1e} (tol 1e-9)")
    assert ok


def test_8_biparavector_forms(record):
    r, n, bad = rng("8"), 50, 0
    for _ in range(n):
        f = sm.field_from_ints(sm.ints(r, 6))
        if not la.exact_equal(bpv.to_matrix(bpv.stress_biparavector(f)), fd.stress_energy(f)):
            bad += 1
    worst = 0.0
    for _ in range(n):
        f = sm.field_from_floats(sm.random_small_field(r))
        worst = max(worst, la.max_abs_diff(bpv.to_matrix(bpv.lorentz_biparavector(f)), fd.exp_F(f)))
    ok = bad == 0 and worst <= 1e-9
    record("8. stress and Lorentz biparavectors", ok,
           f"{n - bad}/{n} exact stress matches; Lorentz max diff {worst:.1e} over {n} fields (tol 1e-9)")
    assert ok


def test_9_operator_identity(record):
    r, n, bad = rng("9"), 50, 0
    for _ in range(n):
        w = sm.sym_field4_from_ints(sm.random_sym_field4(r))
        twice = sf.cbar_nabla(sf.cbar_nabla(w))
        wave = [sf.wave_op(c) for c in w]
        if not (sf.vec_equal(twice, [sf.laplacian(c) for c in w])
                and sf.vec_equal(sf.dt_plus_cbar_nabla(sf.dt_plus_cbar_nabla(w, 1), -1), wave)):
            bad += 1
    ok = bad == 0
    record("9. cbar-nabla squared", ok, f"{n - bad}/{n} symbolic 4-fields satisfy both operator identities exactly")
    assert ok
