from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from mulspec.algebra import GF, QQ, ZZ, CyclotomicField, DomainError, ExtField, PrimeField
from mulspec.algebra import cyclotomic_poly, is_prime


def test_is_prime_matches_sympy():
    for n in range(-3, 3000):
        assert is_prime(n) == sympy.isprime(n)
    assert is_prime(2 ** 61 - 1)


def test_prime_field_basics():
    F = PrimeField(101)
    assert F.convert(-5) == 96
    assert F.convert(Fraction(1, 2)) == 51
    assert F.mul(F.inv(7), 7) == 1
    with pytest.raises(ZeroDivisionError):
        F.inv(0)
    with pytest.raises(DomainError):
        PrimeField(100)


@given(st.integers(0, 100), st.integers(1, 100))
def test_prime_field_division(a, b):
    F = PrimeField(101)
    assert F.mul(F.div(a, b), b) == a


def test_extension_field_axioms():
    F = GF(7, 3, seed=1)
    assert isinstance(F, ExtField) and F.order == 343
    els = list(F.elements())
    assert len(els) == 343
    for a in [e for e in els if e != F.zero][:40]:
        assert F.mul(a, F.inv(a)) == F.one
        assert F.pow(a, F.order - 1) == F.one
    w = F.gen()
    assert F.frobenius(w, 3) == w
    assert F.in_prime_field(F.convert(5)) and F.to_prime(F.convert(5)) == 5


def test_extension_rejects_reducible_modulus():
    with pytest.raises(DomainError):
        ExtField(7, [6, 0, 1])  # x^2 - 1


def test_seeded_extensions_differ_but_have_equal_order():
    A, B = GF(101, 8, seed=0), GF(101, 8, seed=1)
    assert A.order == B.order
    assert A.modulus != B.modulus


@pytest.mark.parametrize("n", list(range(1, 31)))
def test_cyclotomic_poly_matches_sympy(n):
    x = sympy.symbols("x")
    expect = sympy.Poly(sympy.cyclotomic_poly(n, x), x).all_coeffs()[::-1]
    assert cyclotomic_poly(n) == [int(c) for c in expect]


def test_cyclotomic_field_roots():
    Z = CyclotomicField(6)
    z = Z.root(1)
    assert Z.pow(z, 6) == Z.one
    assert Z.pow(z, 3) == Z.convert(-1)
    s = Z.zero
    for k in range(6):
        s = Z.add(s, Z.root(k))
    assert Z.is_rational(s) and Z.to_rational(s) == 0
    assert Z.mul(z, Z.inv(z)) == Z.one


def test_zz_and_qq():
    assert ZZ.exact_quo(12, 4) == 3
    with pytest.raises(DomainError):
        ZZ.exact_quo(7, 2)
    assert QQ.div(Fraction(1), Fraction(3)) == Fraction(1, 3)
