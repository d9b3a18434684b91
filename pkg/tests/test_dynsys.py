import random
from fractions import Fraction
from math import lcm

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mulspec.algebra import GF, QQ, MPolyRing, PrimeField, UniPoly, factor
from mulspec.dynsys import (INFINITY, Correspondence, CubicCovariants, DynamicsError,
                            SpectrumForm, compose, correspondences_proportional, cubic_covariants,
                            degree_formulas, discriminant_resultants, divisors, iterate, mobius,
                            multiplier_multiset, multiplier_spectrum, nth_root_form, nu, nu_str,
                            nu_value, per_form, per_star_form, proportional)

SQ = Correspondence.graph([0, 0, 1], [1])      # z -> z^2
CUBE = Correspondence.graph([0, 0, 0, 1], [1])  # z -> z^3


def qq(*v):
    return [Fraction(x) for x in v]


# -- embedding and iteration --------------------------------------------------

def test_graph_orientation():
    assert SQ.to_str() == "x0*y1^2 - x1*y0^2"
    assert SQ.bidegree == (1, 2)


def test_json_roundtrip():
    c = Correspondence.graph([1, 2, 3], [4, 0, 1], PrimeField(7))
    assert Correspondence.from_json(c.to_json()) == c
    assert Correspondence.from_json(SQ.to_json()) == SQ


def test_iterate_square_map():
    assert correspondences_proportional(iterate(SQ, 2), Correspondence.graph([0, 0, 0, 0, 1], [1]))
    assert iterate(SQ, 1) is SQ


@pytest.mark.parametrize("num,den,m,n", [
    ([1, 0, 1], [0, 1], 2, 2),
    ([0, 1, 0, 1], [1, 0, 2], 1, 2),
    ([0, 1, 0, 1], [1, 0, 2], 2, 1),
])
def test_iterate_composition_law(num, den, m, n):
    c = Correspondence.graph(num, den)
    lhs = iterate(c, m * n)
    rhs = iterate(iterate(c, n), m) if m > 1 else iterate(c, n)
    assert correspondences_proportional(lhs, rhs)


def test_iterate_general_bidegree():
    # a (2, 1) correspondence (not a graph)
    c = Correspondence(2, 1, {(0, 0): 1, (1, 1): 2, (2, 0): -1, (2, 1): 3, (0, 1): 1}, QQ)
    c4 = iterate(c, 4)
    assert c4.bidegree == (16, 1)
    assert correspondences_proportional(c4, iterate(iterate(c, 2), 2))
    assert correspondences_proportional(iterate(c, 2), compose(c, c))


def test_universal_coefficient_degree():
    R = MPolyRing(QQ, 6)
    g = R.gens()
    terms = {(i, j): g[2 * i + j] for i in range(3) for j in range(2)}
    c2 = iterate(Correspondence(2, 1, terms, R), 2)
    assert c2.bidegree == (4, 1)
    # (d^2 - e^2)/(d - e) = 3
    assert {v.total_degree() for v in c2.terms.values()} == {3}
    assert degree_formulas(2, 1, 2)["iterate_coeff_deg"] == 3


# -- periodic points -----------------------------------------------------------

def test_per_forms_of_square_map():
    p1 = per_form(SQ, 1)
    assert p1.degree == 3 and p1.to_str() == "-z0^2*z1 + z0*z1^2"
    p2 = per_form(SQ, 2)
    assert p2.degree == 5
    star = per_star_form(SQ, 2)
    assert star.degree == 2 and star.to_str() == "z0^2 + z0*z1 + z1^2"
    assert per_star_form(SQ, 1).poly == p1.poly


def test_diagonal_component_rejected():
    # (x0*y1 - x1*y0) * (x0 + x1): contains the diagonal
    c = Correspondence(2, 1, {(0, 1): 1, (1, 1): 1, (1, 0): -1, (2, 0): -1}, QQ)
    with pytest.raises(DynamicsError):
        per_form(c, 1)
    with pytest.raises(DynamicsError):
        Correspondence(2, 1, {(0, 1): 1, (1, 1): 1, (1, 0): -1, (2, 0): -1}, QQ,
                       diagonal_free=True)


def test_per_star_degree_for_random_cubic():
    rng = random.Random(5)
    c = Correspondence(1, 3, {(i, j): rng.randint(-9, 9) for i in range(2) for j in range(4)}, QQ)
    assert per_star_form(c, 2).degree == 6 == nu_value(2, 1) + nu_value(2, 3)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_per_star_degrees_sum(n):
    c = Correspondence.graph([1, 0, 1], [0, 1, 1], PrimeField(10007))
    total = sum(per_star_form(c, m).degree for m in divisors(n))
    assert total == per_form(c, n).degree == 2 ** n + 1


def test_nu_values():
    assert nu(1) == [0, 1]
    assert nu(2) == [0, -1, 1]
    assert nu_str(6) == "x^6 - x^3 - x^2 + x"
    assert [mobius(n) for n in range(1, 11)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]


@pytest.mark.parametrize("n", range(1, 25))
def test_nu_mobius_inversion(n):
    total = [0] * (n + 1)
    for m in divisors(n):
        for k, c in enumerate(nu(m)):
            total[k] += c
    assert total == [0] * n + [1]


def _nu_recursive(n, memo={}):
    if n not in memo:
        out = [0] * (n + 1)
        out[n] = 1
        for m in divisors(n):
            if m < n:
                for k, c in enumerate(_nu_recursive(m)):
                    out[k] -= c
        while out and out[-1] == 0:
            out.pop()
        memo[n] = out
    return memo[n]


@pytest.mark.parametrize("n", range(1, 25))
def test_nu_matches_recursion(n):
    assert nu(n) == _nu_recursive(n)


@pytest.mark.parametrize("d,e,n,expect", [(1, 3, 2, (4, 10, 6)), (2, 1, 2, (3, 5, 2)),
                                          (2, 3, 1, (1, 5, 5))])
def test_degree_formulas(d, e, n, expect):
    r = degree_formulas(d, e, n)
    assert (r["iterate_coeff_deg"], r["per_deg"], r["per_star_deg"]) == expect


# -- multipliers ---------------------------------------------------------------

def test_fixed_point_multipliers():
    assert multiplier_multiset(multiplier_spectrum(SQ, 1)) == [0, 0, 2]
    assert multiplier_multiset(multiplier_spectrum(CUBE, 1)) == [0, 0, 3, 3]


def test_period_two_of_square_map():
    s = multiplier_spectrum(SQ, 2)
    assert proportional(s.coeffs, qq(1, 8, 16), QQ)
    r = nth_root_form(s, 2)
    assert r.to_str() == "dx + 4*dy"
    assert multiplier_multiset(r) == [4]


def test_period_three_multipliers():
    # the 3-cycles of z^2 all have multiplier 2^3
    s = multiplier_spectrum(SQ, 3)
    r = nth_root_form(s, 3)
    assert multiplier_multiset(r) == [8, 8]


def test_nth_root_examples():
    K = QQ
    s = SpectrumForm(qq(1, 0, -2, 0, 1), 4, K)  # (dx^2 - dy^2)^2
    r = nth_root_form(s, 2)
    assert proportional(r.coeffs, qq(1, 0, -1), K)
    assert nth_root_form(s, 1) is s
    with pytest.raises(DynamicsError):
        nth_root_form(SpectrumForm(qq(1, 0, 1, 0, 1), 4, K), 2)


def test_infinity_and_zero_multiplicities():
    s = SpectrumForm(qq(1, 0, 0), 2, QQ)  # dx^2
    assert multiplier_multiset(s) == [0, 0]
    s = SpectrumForm(qq(0, 1, 3), 2, QQ)  # dx dy + 3 dy^2 = dy (dx + 3 dy)
    assert multiplier_multiset(s) == [3, INFINITY]


def test_non_split_spectrum_reports_degrees():
    F = PrimeField(101)
    s = SpectrumForm([1, 0, 98], 2, F)  # dx^2 - 3 dy^2; 3 is a non-residue mod 101
    with pytest.raises(DynamicsError, match="degrees"):
        multiplier_multiset(s)


def _direct_multipliers(num, den, K):
    """phi'(z) at the fixed points, found in a splitting field."""
    N, D = UniPoly(num, K), UniPoly(den, K)
    fix = N - UniPoly.x(K) * D
    k = 1
    for g, _ in factor(fix)[1]:
        k = lcm(k, g.deg)
    L = GF(K.p, k, seed=1) if k > 1 else K
    from mulspec.algebra.factor import roots_in_field
    roots = roots_in_field(fix.change_domain(L))
    Nl, Dl = N.change_domain(L), D.change_domain(L)
    out = []
    for z in roots:
        num_d = L.sub(L.mul(Nl.derivative().evaluate_in(z, L), Dl.evaluate_in(z, L)),
                      L.mul(Nl.evaluate_in(z, L), Dl.derivative().evaluate_in(z, L)))
        out.append(L.div(num_d, L.pow(Dl.evaluate_in(z, L), 2)))
    return L, sorted(out, key=lambda x: x if isinstance(x, tuple) else (x,))


@given(st.integers(2, 3), st.integers(0, 10 ** 6))
def test_multipliers_match_direct_derivative(e, seed):
    K = PrimeField(101)
    rng = random.Random(seed)
    num = [rng.randrange(101) for _ in range(e)] + [rng.randrange(1, 101)]
    den = [rng.randrange(101) for _ in range(e)] + [rng.randrange(1, 101)]
    if num[-1] == den[-1]:
        return  # keep infinity off the fixed locus
    N, D = UniPoly(num, K), UniPoly(den, K)
    from mulspec.algebra import gcd
    fix = N - UniPoly.x(K) * D
    if gcd(N, D).deg > 0 or gcd(fix, fix.derivative()).deg > 0:
        return  # degenerate map or repeated fixed point
    c = Correspondence.graph(num, den, K)
    L, direct = _direct_multipliers(num, den, K)
    got = multiplier_multiset(multiplier_spectrum(c, 1), L)
    assert sorted(got, key=lambda x: x if isinstance(x, tuple) else (x,)) == direct


def test_power_structure_over_finite_field():
    K = PrimeField(10007)
    c = Correspondence.graph([3, 1, 2], [1, 5, 0, 1], K)
    for n in (2, 3):
        s = multiplier_spectrum(c, n)
        r = nth_root_form(s, n)
        assert UniPoly(r.coeffs, K) ** n == UniPoly(s.coeffs, K)


def test_singular_periodic_point_detected():
    # x0*y1^2 - 2*x1*y0*y1: all four partials vanish at x = y = (1 : 0)
    c = Correspondence(1, 2, {(0, 2): 1, (1, 1): -2}, QQ)
    with pytest.raises(DynamicsError, match="singular"):
        multiplier_spectrum(c, 1)


# -- cubic covariants ----------------------------------------------------------

def test_covariants_of_cube_map():
    cv = cubic_covariants(CUBE)
    assert cv.to_json() == {"f4": "-z0^3*z1 + z0*z1^3", "f2": "z0^2 + z1^2"}
    a = discriminant_resultants(cv, "expand")
    b = discriminant_resultants(cv, "interpolate")
    assert a == b
    assert a["sigma"] == {0: 0, 2: 0, 3: -4, 4: 0}
    assert a["t1_coefficient"] == 4


def test_covariant_f2_of_monomial():
    c = Correspondence(1, 3, {(0, 3): 1}, QQ)  # x0*y1^3
    assert cubic_covariants(c).f2.coeffs == [0, 0, 1]  # (1/3) * 3 z1^2


def test_covariants_wrong_bidegree():
    with pytest.raises(DynamicsError):
        cubic_covariants(Correspondence(2, 2, {(1, 1): 1}, QQ))


def test_zero_f2_leaves_only_sigma0():
    f4 = UniPoly(qq(1, 2, 0, 3, 1), QQ)
    cv = CubicCovariants(f4, UniPoly([], QQ))
    dr = discriminant_resultants(cv)
    assert dr["sigma"][2] == dr["sigma"][3] == dr["sigma"][4] == dr["t1_coefficient"] == 0
    from mulspec.algebra import resultant_binary_forms
    assert dr["sigma"][0] == resultant_binary_forms(f4, f4.derivative(), 4, 3)


@given(st.lists(st.integers(-5, 5), min_size=8, max_size=8))
def test_discriminant_routes_agree(c):
    cv = CubicCovariants(UniPoly(c[:5], QQ), UniPoly(c[5:], QQ))
    if not cv.f4:
        return
    assert discriminant_resultants(cv, "expand") == discriminant_resultants(cv, "interpolate")


def test_sigma_bidegrees():
    S = MPolyRing(QQ, 8)
    h = S.gens()
    cv = CubicCovariants(UniPoly(h[:5], S, convert=False), UniPoly(h[5:], S, convert=False))
    dr = discriminant_resultants(cv)
    for r, v in dr["sigma"].items():
        assert {(sum(e[:5]), sum(e[5:])) for e in v.terms} == {(7 - r, r)}
    # the t^1 coefficient does not vanish for general input
    assert {(sum(e[:5]), sum(e[5:])) for e in dr["t1_coefficient"].terms} == {(6, 1)}
