import numpy as np
from hypothesis import given
from hypothesis import strategies as st

from maxmat import biparavector as bpv
from maxmat import biquaternion as bq
from maxmat import faraday as fd
from maxmat import linalg as la
from maxmat.biparavector import Biparavector
from maxmat.biquaternion import Paravector
from maxmat.linalg import Gaussian

small = st.integers(-5, 5)
gauss = st.builds(Gaussian, small, small)
matrices = st.lists(gauss, min_size=16, max_size=16).map(lambda v: la.to_exact(np.array(v, dtype=object).reshape(4, 4)))
paravectors = st.lists(gauss, min_size=4, max_size=4).map(lambda c: Paravector(tuple(c)))
ints3 = st.lists(st.integers(-5, 5), min_size=3, max_size=3)
fields = st.builds(fd.EMFieldValue, ints3, ints3)
f3 = st.lists(st.floats(-2, 2, allow_nan=False), min_size=3, max_size=3)
float_fields = st.builds(fd.EMFieldValue, f3, f3)


def single(i, j, c=1):
    a = la.zeros()
    a[i, j] = Gaussian(c)
    return Biparavector(a)


def test_to_matrix_examples():
    assert la.exact_equal(bpv.to_matrix(Biparavector.identity()), la.identity())
    assert la.exact_equal(bpv.to_matrix(single(1, 0)), bq.basis_matrix(1))
    assert la.exact_equal(bpv.to_matrix(single(1, 1)), la.to_exact(np.diag([1, 1, -1, -1]).astype(object)))


def test_decompose_examples():
    assert bpv.decompose(la.identity()) == Biparavector.identity()
    assert bpv.decompose(bq.basis_matrix(2)) == single(2, 0)


@given(matrices)
def test_roundtrip(m):
    d = bpv.decompose(m)
    assert la.exact_equal(bpv.to_matrix(d), m)
    assert bpv.decompose(bpv.to_matrix(d)) == d


@given(matrices, paravectors)
def test_evaluation_at_e0(m, x):
    d = bpv.decompose(m)
    assert la.exact_equal(m @ bq.theta_iso(x, la.unit(0)), bq.phi_iso(bpv.apply(d, x)))
    assert la.exact_equal(bpv.operator_matrix(d), m)


def test_apply_examples():
    x = Paravector((1, 2, Gaussian(0, 3), 4))
    assert bpv.apply(Biparavector.identity(), x) == x
    e0 = Paravector.basis(0)
    assert bpv.apply(single(1, 1), e0) == e0


def test_stress_examples():
    assert la.is_zero(bpv.stress_biparavector(fd.EMFieldValue([0] * 3, [0] * 3)).a)
    bp = bpv.stress_biparavector(fd.EMFieldValue([1, 0, 0], [0] * 3))
    assert bp.a[1, 1] == Gaussian(1) / 2
    assert sum(1 for v in bp.a.flat if v != 0) == 1


@given(fields)
def test_stress_matches_matrix(f):
    assert la.exact_equal(bpv.to_matrix(bpv.stress_biparavector(f)), fd.stress_energy(f))


def test_lorentz_zero_field():
    bp = bpv.lorentz_biparavector(fd.EMFieldValue([0.0] * 3, [0.0] * 3))
    assert la.max_abs_diff(bp.a, np.diag([1, 0, 0, 0])) == 0


def test_lorentz_boost_matches_series():
    for a in (0.4, 1.5):
        f = fd.EMFieldValue([a, 0.0, 0.0], [0.0] * 3)
        got = bpv.to_matrix(bpv.lorentz_biparavector(f))
        assert la.max_abs_diff(got, la.mat_exp_series(fd.build_F(f), 40)) <= 1e-10


@given(float_fields)
def test_lorentz_matches_exp(f):
    u = bpv.lorentz_paravector(f)
    assert la.max_abs_diff(bq.represent_left(u), fd.exp_cF(fd.complexify(f).scaled(0.5))) <= 1e-12
    assert la.max_abs_diff(bpv.to_matrix(bpv.lorentz_biparavector(f)), fd.exp_F(f)) <= 1e-9


@given(fields)
def test_transpose_of_cbar_is_dagger(f):
    assert la.exact_equal(la.transpose(fd.complexify(f, True).matrix()), la.dagger(fd.complexify(f).matrix()))
