from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from mulspec.algebra import (QQ, ZZ, DomainError, PolyRing, PrimeField, UniPoly, gcd, gcdex,
                             interpolate, resultant, resultant_bareiss, resultant_binary_forms,
                             resultant_euclid, squarefree_part)

from sympy.polys.subresultants_qq_zz import sylvester

X = sympy.symbols("x")


def sympy_res(f, g):
    # sympy.resultant flips the sign when deg f < deg g and the degree
    # product is odd; its Sylvester determinant follows the standard sign
    return sylvester(to_sympy(f).as_expr(), to_sympy(g).as_expr(), X).det()
small = st.lists(st.integers(-9, 9), min_size=1, max_size=6)


def to_sympy(f):
    return sympy.Poly(list(reversed([sympy.Rational(c.numerator, c.denominator)
                                     if isinstance(c, Fraction) else c for c in f.coeffs])) or [0], X)


def test_sign_convention():
    a, b = 3, 7
    f = UniPoly([-a, 1], ZZ)
    g = UniPoly([-b, 1], ZZ)
    assert resultant(f, g) == a - b


@given(small, small)
def test_resultant_matches_sympy_over_qq(a, b):
    f, g = UniPoly(a, QQ), UniPoly(b, QQ)
    if f.deg < 1 or g.deg < 1:
        return
    expect = sympy_res(f, g)
    assert resultant_euclid(f, g) == Fraction(int(expect))
    assert resultant_bareiss(f, g) == Fraction(int(expect))


@given(small, small)
def test_resultant_bareiss_over_zz(a, b):
    f, g = UniPoly(a, ZZ), UniPoly(b, ZZ)
    if f.deg < 1 or g.deg < 1:
        return
    assert resultant(f, g) == int(sympy_res(f, g))


@given(small, small)
def test_resultant_mod_p_routes_agree(a, b):
    F = PrimeField(101)
    f, g = UniPoly(a, F), UniPoly(b, F)
    if f.deg < 1 or g.deg < 1:
        return
    assert resultant_euclid(f, g) == resultant_bareiss(f, g)


def test_resultant_over_polynomial_ring():
    # res_x(x^2 - a, x - 1) = 1 - a over GF(101)[a]
    F = PrimeField(101)
    R = PolyRing(F, "a")
    a = R.gen()
    f = UniPoly([R.neg(a), R.zero, R.one], R, convert=False)
    g = UniPoly([R.convert(-1), R.one], R, convert=False)
    assert resultant(f, g) == UniPoly([1, -1], F)


def test_binary_forms_keep_roots_at_infinity():
    # F = z0*z1 (roots 0, inf), G = z0 (root inf): common root at infinity
    F = UniPoly([0, 1], QQ)
    G = UniPoly([1], QQ)
    assert resultant_binary_forms(F, G, 2, 1) == 0
    # G = z1 (root 0): shares 0 as well
    assert resultant_binary_forms(F, UniPoly([0, 1], QQ), 2, 1) == 0
    # G = z0 + z1 (root -1): none shared
    assert resultant_binary_forms(F, UniPoly([1, 1], QQ), 2, 1) != 0


@given(small, small)
def test_divmod_identity(a, b):
    f, g = UniPoly(a, QQ), UniPoly(b, QQ)
    if not g:
        return
    q, r = divmod(f, g)
    assert q * g + r == f and r.deg < g.deg


@given(small, small)
def test_gcdex(a, b):
    f, g = UniPoly(a, QQ), UniPoly(b, QQ)
    if not f and not g:
        return
    s, t, d = gcdex(f, g)
    assert s * f + t * g == d
    assert d == gcd(f, g)
    assert d.lc == 1
    expect = sympy.gcd(to_sympy(f), to_sympy(g)).monic()
    assert to_sympy(d).as_expr() == expect.as_expr()


def test_gcd_of_zeros_is_an_error():
    with pytest.raises(DomainError):
        gcd(UniPoly([], QQ), UniPoly([], QQ))


def test_squarefree_part():
    f = UniPoly([1, -1], QQ) ** 3 * UniPoly([2, 0, 1], QQ)
    assert squarefree_part(f) == (UniPoly([1, -1], QQ) * UniPoly([2, 0, 1], QQ)).monic()


@given(st.lists(st.integers(-20, 20), min_size=1, max_size=7))
def test_interpolation_roundtrip(c):
    f = UniPoly(c, QQ)
    pts = list(range(len(c)))
    assert interpolate(pts, [f(x) for x in pts], QQ) == f


def test_compose_and_derivative():
    f = UniPoly([1, 2, 3], QQ)
    g = UniPoly([0, 1, 1], QQ)
    assert f.compose(g)(2) == f(g(2))
    assert f.derivative() == UniPoly([2, 6], QQ)
    assert f.to_str() == "3*x^2 + 2*x + 1"
