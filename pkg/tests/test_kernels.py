"""The compiled and pure-Python kernels must agree on every operation."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mulspec.algebra import _pykernels as py
from mulspec.algebra import kernels

c = kernels.c
needs_c = pytest.mark.skipif(c is None, reason="compiled kernels not built")

PRIMES = [2, 3, 101, 65537, 2147483629]


def polys(p, max_len=12):
    return st.lists(st.integers(0, p - 1), max_size=max_len).map(py._strip)


@st.composite
def prime_and_pair(draw):
    p = draw(st.sampled_from(PRIMES))
    return p, draw(polys(p)), draw(polys(p))


def _naive_mul(a, b, p):
    out = [0] * (len(a) + len(b))
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return py._strip(out)


@given(prime_and_pair())
def test_python_mul_matches_schoolbook(data):
    p, a, b = data
    assert py.mul(a, b, p) == _naive_mul(a, b, p)


@given(prime_and_pair())
def test_python_divmod_identity(data):
    p, a, b = data
    if not b:
        return
    q, r = py.divmod_(a, b, p)
    assert len(r) < len(b)
    assert py.add(py.mul(q, b, p), r, p) == a


@needs_c
@given(prime_and_pair())
def test_backends_agree_on_ring_ops(data):
    p, a, b = data
    for name in ("add", "sub", "mul"):
        assert getattr(c, name)(a, b, p) == getattr(py, name)(a, b, p)
    assert c.scale(a, 7 % p, p) == py.scale(a, 7 % p, p)


@needs_c
@given(prime_and_pair())
def test_backends_agree_on_division(data):
    p, a, b = data
    if not b:
        return
    assert c.divmod_(a, b, p) == py.divmod_(a, b, p)
    assert c.rem(a, b, p) == py.rem(a, b, p)


@needs_c
@given(prime_and_pair(), st.integers(0, 300))
def test_backends_agree_on_powmod(data, e):
    p, a, m = data
    if len(m) < 2:
        return
    assert c.powmod(a, e, m, p) == py.powmod(a, e, m, p)
    assert c.mulmod(a, a, m, p) == py.mulmod(a, a, m, p)


@needs_c
@given(prime_and_pair(), st.integers(0, 10 ** 6))
def test_backends_agree_on_evaluate(data, x):
    p, a, _ = data
    assert c.evaluate(a, x % p, p) == py.evaluate(a, x % p, p)


@needs_c
def test_degree_zero_divisor():
    # regression: a constant divisor used to read past the quotient buffer
    assert c.divmod_([1, 2, 3], [5], 7) == py.divmod_([1, 2, 3], [5], 7)


def test_large_modulus_routes_to_python():
    assert kernels.backend_for(2 ** 61 - 1) is py
    p = 2 ** 61 - 1
    assert kernels.mul([p - 1, 1], [p - 1, 1], p) == py.mul([p - 1, 1], [p - 1, 1], p)


def test_backend_flag():
    assert kernels.BACKEND in ("cython", "python")
    assert (kernels.BACKEND == "cython") == (c is not None)
