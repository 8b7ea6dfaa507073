from maxmat import sampling as sm
from maxmat import selftest as stt


def test_rng_streams_are_independent_and_reproducible():
    a = sm.ints(sm.rng_for(42, "x"), 10)
    assert a == sm.ints(sm.rng_for(42, "x"), 10)
    assert a != sm.ints(sm.rng_for(42, "y"), 10)
    assert a != sm.ints(sm.rng_for(43, "x"), 10)


def test_monomial_counts():
    assert len(sm.MONOMIALS_3) == 35 and len(sm.MONOMIALS_1) == 5


def test_output_sorted_by_label():
    lines = []
    stt.run_selftest(1, 1, out=lines.append)
    names = [ln.split(":")[0] for ln in lines if "passed [" in ln]
    assert names == sorted(names) and len(names) == len(stt.SUITES)


def test_failure_is_reported_and_shrunk():
    bad = stt.Suite("demo.bad", lambda rng: sm.ints(rng, 5, 1, 9), lambda case: sum(case) < 3)
    lines = []
    code = stt.run_selftest(0, 5, out=lines.append, suites=[bad])
    assert code == 1 and lines[-1] == "selftest: FAIL"
    ce = [ln for ln in lines if "counterexample" in ln]
    assert ce and "seed=0" in ce[0]
    shrunk = stt.shrink(bad.check, (9, 9, 9, 9, 9))
    assert sum(shrunk) >= 3 and sum(shrunk) <= 5


def test_exceptions_count_as_failures():
    def boom(case):
        raise ZeroDivisionError

    res = stt.run_suite(stt.Suite("demo.boom", lambda rng: (1,), boom), 0, 3)
    assert res.counterexample is not None and res.passed == 0
