import random

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from mulspec.algebra import (GF, PrimeField, UniPoly, factor, is_irreducible, minimal_polynomial,
                             random_irreducible, roots_in_field, squarefree_decomposition)

X = sympy.symbols("x")


def _expand(unit, facs, K):
    f = UniPoly([unit], K, convert=False)
    for g, m in facs:
        f = f * g ** m
    return f


@pytest.mark.parametrize("p", [2, 3, 5, 101])
@given(st.lists(st.integers(0, 10 ** 6), min_size=2, max_size=12))
def test_factor_reconstructs_and_matches_sympy(p, c):
    F = PrimeField(p)
    f = UniPoly(c, F)
    if f.deg < 1:
        return
    unit, facs = factor(f, seed=3)
    assert _expand(unit, facs, F) == f
    assert all(is_irreducible(g) and g.lc == 1 for g, _ in facs)
    _, sym = sympy.factor_list(sympy.Poly(list(reversed(f.coeffs)), X, modulus=p))
    got = sorted((g.deg, m) for g, m in facs)
    want = sorted((q.degree(), m) for q, m in sym)
    assert got == want


def test_squarefree_in_characteristic_p():
    F = PrimeField(3)
    # x^3 - x^... (x^3 + 1) = (x + 1)^3 in char 3
    f = UniPoly([1, 0, 0, 1], F) * UniPoly([1, 1, 1], F)
    pieces = squarefree_decomposition(f)
    rebuilt = UniPoly([1], F)
    for g, m in pieces:
        rebuilt = rebuilt * g ** m
    assert rebuilt == f.monic()


def test_factor_over_extension():
    F = GF(5, 2, seed=4)
    x = UniPoly.x(F)
    f = x ** 4 - UniPoly([1], F)
    unit, facs = factor(f)
    assert all(g.deg == 1 for g, _ in facs) and len(facs) == 4
    assert sorted(roots_in_field(f)) == sorted(-g[0] if False else F.neg(g[0]) for g, _ in facs)


def test_char_two_extension_uses_trace_split():
    F = GF(2, 4, seed=0)
    x = UniPoly.x(F)
    f = x ** 16 - x
    assert len(roots_in_field(f)) == 16


@pytest.mark.parametrize("k", [2, 3, 4, 8])
def test_random_irreducible(k):
    f = random_irreducible(101, k, seed=k)
    assert f.deg == k and is_irreducible(f)
    assert sympy.Poly(list(reversed(f.coeffs)), X, modulus=101).is_irreducible


def test_rabin_rejects_products():
    F = PrimeField(7)
    f = UniPoly([1, 0, 1], F) * UniPoly([3, 1, 1], F)
    assert not is_irreducible(f)


def test_minimal_polynomial():
    F = GF(101, 8, seed=2)
    rng = random.Random(0)
    for _ in range(5):
        a = F.random_element(rng)
        m = minimal_polynomial(a, F)
        assert 8 % m.deg == 0 and is_irreducible(m)
        assert m.change_domain(F)(a) == F.zero
    assert minimal_polynomial(F.convert(5), F).coeffs == [96, 1]


def test_roots_with_multiplicity():
    F = PrimeField(101)
    f = UniPoly([-4, 1], F) ** 2 * UniPoly([5, 1], F) * UniPoly([-2, 0, 1], F)
    # 2 is a non-residue mod 101 (101 = 5 mod 8)
    assert roots_in_field(f) == [4, 4, 96]
