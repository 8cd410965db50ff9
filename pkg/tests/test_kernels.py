import os
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from laurentmed import kernels
from laurentmed.laurent import LaurentPoly

compiled = pytest.mark.skipif(kernels.BACKEND != "cython", reason="extension not built")


def _flat(f):
    exps, coefs = [], []
    for e, c in f.integer_form()[0].items():
        exps.extend(e)
        coefs.append(c)
    return exps, coefs


def _pair(n, a, b):
    ea, ca = _flat(a)
    eb, cb = _flat(b)
    return n, ea, ca, eb, cb


@st.composite
def int_polys(draw, n, lo=-30, hi=30, cmax=10**6):
    exps = st.tuples(*[st.integers(lo, hi)] * n)
    coefs = st.integers(-cmax, cmax).filter(bool)
    return LaurentPoly(n, draw(st.dictionaries(exps, coefs, max_size=12)))


@st.composite
def poly_pairs(draw):
    n = draw(st.integers(1, 4))
    return n, draw(int_polys(n)), draw(int_polys(n))


@compiled
@settings(max_examples=300, deadline=None)
@given(poly_pairs())
def test_backends_agree(data):
    n, a, b = data
    args = _pair(n, a, b)
    assert kernels.compiled_convolve(*args) == kernels.pure_convolve(*args)


@given(poly_pairs())
@settings(max_examples=100, deadline=None)
def test_pure_kernel_matches_schoolbook(data):
    n, a, b = data
    out_e, out_c = kernels.pure_convolve(*_pair(n, a, b))
    expected = {}
    ia, _ = a.integer_form()
    ib, _ = b.integer_form()
    for ea, ca in ia.items():
        for eb, cb in ib.items():
            key = tuple(x + y for x, y in zip(ea, eb))
            expected[key] = expected.get(key, 0) + ca * cb
    expected = {k: v for k, v in sorted(expected.items(), reverse=True) if v}
    got = dict(zip(zip(*[iter(out_e)] * n), out_c))
    assert list(got) == list(expected)
    assert got == expected


@compiled
def test_compiled_declines_on_coefficient_overflow():
    big = LaurentPoly(1, {(1,): 2**40, (0,): 1})
    args = _pair(1, big, big)
    assert kernels.compiled_convolve(*args) is None
    # the dispatching entry point falls back to exact arithmetic
    assert kernels.convolve(*args) == kernels.pure_convolve(*args)
    assert (big * big).coeff((2,)) == 2**80


@compiled
def test_compiled_declines_on_wide_exponents():
    a = LaurentPoly(3, {(2**30, -(2**30), 5): 1, (0, 0, 0): 1})
    args = _pair(3, a, a)
    assert kernels.compiled_convolve(*args) is None
    assert (a * a).coeff((2**31, -(2**31), 10)) == 1


def test_zero_variable_products():
    assert kernels.pure_convolve(0, [], [3], [], [4]) == ([], [12])
    assert LaurentPoly.constant(0, 3) * LaurentPoly.constant(0, 4) == LaurentPoly.constant(0, 12)


def test_pure_backend_forced_by_environment():
    env = dict(os.environ, LAURENTMED_PURE="1")
    out = subprocess.run(
        [sys.executable, "-c", "import laurentmed.kernels as k; print(k.BACKEND)"],
        capture_output=True, text=True, env=env, check=True,
    )
    assert out.stdout.strip() == "python"
