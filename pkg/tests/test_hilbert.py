from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from mulspec.hilbert import (HilbertError, HilbertSeries, asymptotic_check, extension_degree_bound,
                             invariants_v1_v3, multiplier_subalgebra_b2, saturator,
                             series_coefficients, veronese_section, veronese_section_lifted, volume)


def _count_generator_monomials(degrees, N, relation=None):
    """Dimension of each degree in a polynomial ring on generators of the given
    degrees, modulo a hypersurface of degree ``relation`` (if any)."""
    c = [0] * (N + 1)
    c[0] = 1
    for a in degrees:
        for i in range(a, N + 1):
            c[i] += c[i - a]
    if relation:
        c = [c[i] - (c[i - relation] if i >= relation else 0) for i in range(N + 1)]
    return c


def test_invariant_series_coefficients():
    H = invariants_v1_v3()
    # generators in degrees 2, 2, 3, 3, 4, 6 with one relation in degree 12
    brute = _count_generator_monomials([2, 2, 3, 3, 4, 6], 60, relation=12)
    assert series_coefficients(H, 60) == brute
    assert series_coefficients(H, 10) == [1, 0, 2, 2, 4, 4, 10, 8, 17, 18, 28]


def test_canonical_form():
    H = invariants_v1_v3()
    assert H == HilbertSeries([1, 0, 0, 0, 0, 0, 1], [2, 2, 3, 3, 4])
    assert H.to_json() == {"numerator": [1, 0, -1, 0, 1], "denominator_exponents": [2, 2, 2, 3, 3]}
    assert HilbertSeries.from_json(H.to_json()) == H


def test_volumes():
    H = invariants_v1_v3()
    rep = volume(H)
    assert (rep.pole_order, rep.volume, rep.saturator) == (5, Fraction(1, 72), 1)
    assert volume(HilbertSeries([1], [1, 1, 1])).volume == 1
    B = multiplier_subalgebra_b2()
    rb = volume(B)
    assert (rb.pole_order, rb.volume, rb.saturator) == (5, Fraction(10, 6 ** 5), 6)
    assert series_coefficients(B, 6)[6] == 6


def test_saturator():
    assert saturator(HilbertSeries([1], [2])) == 2
    with pytest.raises(HilbertError):
        saturator(HilbertSeries([1], []))


def test_veronese_sections():
    assert veronese_section(HilbertSeries([1], [1]), 2) == HilbertSeries([1], [1])
    VB = veronese_section(multiplier_subalgebra_b2(), 6)
    num = [1] + [0] * 9 + [-1]
    assert VB == HilbertSeries(num, [1] * 6)
    VA = veronese_section(invariants_v1_v3(), 6)
    assert VA == HilbertSeries([1, 5, 8, 4], [1] * 5)
    assert volume(VA).volume == 18
    printed = HilbertSeries([1, 6, 14, 13, 4], [1, 1, 1, 1, 2])  # (1+t)(1+5t+9t^2+4t^3)
    assert volume(printed).volume == 19
    assert VA != printed


def test_extension_degree_bound():
    VA = veronese_section(invariants_v1_v3(), 6)
    VB = veronese_section(multiplier_subalgebra_b2(), 6)
    ratio = extension_degree_bound(VA, VB)
    assert ratio == Fraction(9, 5) and ratio < 2
    H = HilbertSeries([1], [1, 1])
    assert extension_degree_bound(H, H) == 1
    assert extension_degree_bound(H, HilbertSeries([1], [2, 2])) == 2
    with pytest.raises(HilbertError, match="dimension mismatch"):
        extension_degree_bound(H, HilbertSeries([1], [1, 1, 1]))


def test_asymptotics():
    rep = asymptotic_check(HilbertSeries([1], [1, 1, 1]), 100)
    assert rep["volume"] == 1 and rep["converging"]
    rep = asymptotic_check(invariants_v1_v3(), 200)
    assert rep["volume"] == Fraction(1, 72) and rep["converging"]
    assert abs(rep["ratio_at_max"] - Fraction(1, 72)) < Fraction(1, 100)
    with pytest.raises(HilbertError, match="Veronese"):
        asymptotic_check(HilbertSeries([1], [2, 2]), 50)


series = st.tuples(st.lists(st.integers(0, 3), min_size=1, max_size=5),
                   st.lists(st.integers(1, 6), min_size=1, max_size=4)).filter(
    lambda t: any(t[0]))


@settings(max_examples=30)
@given(series, st.integers(1, 6))
def test_veronese_coefficients(data, n):
    num, exps = data
    H = HilbertSeries(num, exps)
    assume(any(series_coefficients(H, n * 40)[::n]))
    V = veronese_section(H, n)
    N = 50
    big = series_coefficients(H, n * N)
    assert series_coefficients(V, N) == big[::n]
    assert V == veronese_section_lifted(H, n)


@settings(max_examples=30)
@given(series, st.integers(1, 5))
def test_veronese_volume_scaling(data, n):
    num, exps = data
    H = HilbertSeries(num, exps + [1])  # force saturator 1
    rep = volume(H)
    V = volume(veronese_section(H, n))
    assert V.pole_order == rep.pole_order
    assert V.volume == n ** (rep.pole_order - 1) * rep.volume


def _dominated_pair(k):
    # B = polynomial ring on k degree-1 generators, A = B plus one more
    # generator of degree 1 killed by a relation of degree 2: A_i >= B_i
    A = HilbertSeries([1, 1], [1] * k)
    B = HilbertSeries([1], [1] * k)
    return A, B


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_extension_bound_at_least_one(k):
    A, B = _dominated_pair(k)
    cA, cB = series_coefficients(A, 30), series_coefficients(B, 30)
    assert all(a >= b for a, b in zip(cA, cB))
    assert extension_degree_bound(A, B) >= 1
