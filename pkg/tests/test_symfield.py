import json
import math
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from _oracles import SYMS, sympy_equal, to_sympy
from maxmat import linalg as la
from maxmat import sampling as sm
from maxmat import symfield as sf
from maxmat.linalg import Gaussian, ModeError
from maxmat.symfield import LinPhase, SymScalar, ResourceLimitError

t, x, y, z = sf.t, sf.x, sf.y, sf.z
L = LinPhase(2, 1, 0, -3)

phases = st.tuples(*[st.integers(-2, 2)] * 4).filter(any).map(lambda p: LinPhase(*p))
polys = st.lists(st.integers(-3, 3), min_size=5, max_size=5).map(lambda c: sm.poly_from_ints(c, sm.MONOMIALS_1))


@st.composite
def scalars(draw):
    s = draw(polys)
    for _ in range(draw(st.integers(0, 2))):
        kind = draw(st.sampled_from(["cos", "sin"]))
        s = s + SymScalar.trig(kind, draw(phases), draw(polys)) * Gaussian(draw(st.integers(-2, 2)), draw(st.integers(-2, 2)))
    return s


class TestCanonicalForm:
    def test_double_angle(self):
        c = SymScalar.cos(L)
        assert c * c == SymScalar.const(Fraction(1, 2)) + SymScalar.cos(L + L) / 2

    def test_difference_of_squares(self):
        assert (x + t) * (x - t) == x * x - t * t

    def test_idempotent(self):
        s = x * SymScalar.cos(L)
        assert s + 0 == s
        assert s.to_json() == (s + sf.ZERO).to_json()

    def test_phase_sign_folded(self):
        assert SymScalar.cos(-L) == SymScalar.cos(L)
        assert SymScalar.sin(-L) == -SymScalar.sin(L)
        assert all(key is None or key[1].is_canonical() for key, _, _ in (SymScalar.sin(-L) * x).terms())

    def test_zero_phase_absorbed(self):
        zero = LinPhase(0, 0, 0, 0)
        assert SymScalar.cos(zero) == sf.ONE
        assert SymScalar.sin(zero).is_zero()

    def test_sin_cos_cancel(self):
        s, c = SymScalar.sin(L), SymScalar.cos(L)
        assert (s * s + c * c) == sf.ONE

    @given(scalars(), scalars(), scalars())
    def test_ring_axioms(self, a, b, c):
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        assert a - a == sf.ZERO

    @given(scalars(), scalars())
    def test_product_matches_sympy(self, a, b):
        assert sympy_equal(to_sympy(a * b), to_sympy(a) * to_sympy(b))


class TestCalculus:
    def test_examples(self):
        assert sf.partial(x * x * y, "x") == 2 * x * y
        wave = LinPhase(3, 0, 0, 2)  # 2z - 3t
        assert sf.dt(SymScalar.cos(wave)) == SymScalar.sin(wave) * 3
        k1 = L.coefficient("x")
        assert sf.partial(x * SymScalar.cos(L), "x") == SymScalar.cos(L) - x * SymScalar.sin(L) * k1

    def test_vector_calculus_examples(self):
        assert sf.vec_equal(sf.curl([sf.ZERO, sf.ZERO, -t * x]), [sf.ZERO, t, sf.ZERO])

    @given(scalars())
    def test_partials_match_sympy(self, a):
        ref = to_sympy(a)
        for v, sym in zip(sf.VARS, SYMS):
            assert sympy_equal(to_sympy(a.partial(v)), sp.diff(ref, sym))

    @given(scalars())
    def test_mixed_partials_commute(self, a):
        assert a.partial("x").partial("t") == a.partial("t").partial("x")

    @given(st.lists(st.integers(-5, 5), min_size=35, max_size=35))
    def test_curl_grad_zero(self, c):
        f = sm.poly_from_ints(c)
        assert sf.vec_is_zero(sf.curl(sf.grad(f)))

    @given(scalars(), scalars(), scalars())
    def test_div_curl_zero(self, a, b, c):
        assert sf.div(sf.curl([a, b, c])).is_zero()

    def test_wave_op_examples(self):
        assert sf.wave_op(t * t + x * x + y * y + z * z) == SymScalar.const(-4)
        assert sf.wave_op(SymScalar.cos(LinPhase(1, 0, 0, 1))).is_zero()
        assert sf.wave_op(SymScalar.const(7)).is_zero()


class TestOperators:
    def test_matrix_divergence_constant(self):
        m = sf.sym_matrix([[SymScalar.const(i + j) for j in range(4)] for i in range(4)])
        for opvec in (sf.MINUS_DT, sf.PLUS_DT):
            assert sf.vec_is_zero(sf.matrix_divergence(m, opvec))

    def test_matrix_divergence_faraday(self):
        from maxmat import faraday as fd

        F = fd.build_F(fd.EMFieldValue([sf.ZERO, sf.ZERO, x], [sf.ZERO, t, sf.ZERO]))
        assert sf.vec_is_zero(sf.matrix_divergence(F, sf.MINUS_DT))

    def test_matrix_divergence_index_rule(self):
        # component i is sum_j sign_j d_j M_ij
        m = sf.sym_matrix([[sf.ZERO] * 4 for _ in range(4)])
        m[2, 0] = t * t
        m[2, 3] = z * x
        assert sf.vec_equal(sf.matrix_divergence(m, sf.MINUS_DT), [sf.ZERO, sf.ZERO, -2 * t + x, sf.ZERO])

    @given(st.lists(st.integers(-3, 3), min_size=sm.SYM_FIELD4_SIZE, max_size=sm.SYM_FIELD4_SIZE))
    def test_cbar_nabla_squared(self, case):
        w = sm.sym_field4_from_ints(case)
        assert sf.vec_equal(sf.cbar_nabla(sf.cbar_nabla(w)), [sf.laplacian(c) for c in w])
        wave = [sf.wave_op(c) for c in w]
        assert sf.vec_equal(sf.dt_plus_cbar_nabla(sf.dt_plus_cbar_nabla(w, 1), -1), wave)


class TestEval:
    def test_examples(self):
        assert (x * x + t).eval((1, 2, 0, 0)) == 5
        assert SymScalar.cos(L).eval((0, 3, 0, 1)) == 1
        got = SymScalar.cos(LinPhase(1, 0, 0, 1)).eval((0, 0, 0, 1), la.APPROX)
        assert abs(got - 0.5403023059) < 1e-10

    def test_exact_rejects_transcendental(self):
        with pytest.raises(ModeError):
            SymScalar.cos(L).eval((0, 1, 0, 0))

    @given(scalars(), st.tuples(*[st.integers(-3, 3)] * 4))
    def test_matches_sympy(self, a, ev):
        ref = complex(to_sympy(a).subs(dict(zip(SYMS, ev))).evalf())
        assert abs(complex(a.eval(ev, la.APPROX)) - ref) <= 1e-9 * max(1.0, abs(ref))


class TestJson:
    @given(scalars())
    def test_roundtrip(self, a):
        assert SymScalar.from_json(json.loads(json.dumps(a.to_json()))) == a

    def test_schema(self):
        data = (x * Fraction(1, 3) + SymScalar.sin(L, t)).to_json()
        assert data["poly_terms"] == [{"exp": [0, 1, 0, 0], "re": "1/3", "im": "0/1"}]
        (trig,) = data["trig_terms"]
        assert trig["kind"] == "sin" and trig["phase"] == ["2/1", "1/1", "0/1", "-3/1"]

    @pytest.mark.parametrize("bad", [
        {"poly_terms": [{"exp": [0, 0, 0, 0], "re": "0.5", "im": "0"}], "trig_terms": []},
        {"poly_terms": [{"exp": [0, 0, 0, 0], "re": 0.5, "im": "0"}], "trig_terms": []},
        {"poly_terms": [{"exp": [0, 0, 0], "re": "1", "im": "0"}], "trig_terms": []},
        {"poly_terms": [], "trig_terms": [{"kind": "tan", "phase": ["1", "0", "0", "0"], "poly": []}]},
        {"poly_terms": [], "trig_terms": [{"kind": "cos", "phase": ["1", "0", "0", "0"], "poly": {}}]},
        {"poly_terms": ["x"], "trig_terms": []},
        {"poly_terms": [{"re": "1"}], "trig_terms": []},
        [1, 2],
    ])
    def test_rejects_malformed(self, bad):
        with pytest.raises(ValueError):
            SymScalar.from_json(bad)

    def test_containers(self):
        p = sf.FourPotential(x * x, (t, sf.ZERO, SymScalar.cos(L)))
        assert sf.FourPotential.from_json(json.loads(json.dumps(p.to_json()))) == p
        f = sf.SymEMField((x, y, z), (t, sf.ZERO, sf.ZERO))
        assert sf.SymEMField.from_json(f.to_json()) == f

    def test_field_must_be_real(self):
        with pytest.raises(ValueError):
            sf.SymEMField((x * la.I, sf.ZERO, sf.ZERO), (sf.ZERO,) * 3)


class TestGuardrail:
    def test_term_limit(self):
        s = sum((SymScalar.var(v) for v in sf.VARS), sf.ZERO) + 1
        with sf.term_limit(50):
            with pytest.raises(ResourceLimitError):
                s ** 4
        assert (s ** 4).n_terms() == 70
        assert sf.get_term_limit() == sf.DEFAULT_TERM_LIMIT

    def test_degree_overflow(self):
        big = SymScalar.monomial(1, (0, 40000, 0, 0))
        with pytest.raises(ResourceLimitError):
            big * big

    def test_str_order(self):
        assert str(x * t + Fraction(1, 2) * z) == str(t * x + z / 2)
        assert "1/2" in str(z / 2)
