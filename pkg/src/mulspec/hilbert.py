"""Hilbert series N(t) / prod(1 - t^a_i) with exact invariants.

Writing 1 - t^a = (1 - t)(1 + t + ... + t^(a-1)) and N = (1 - t)^k N'
with N'(1) != 0 gives the pole order r - k at t = 1 and the volume
N'(1) / prod a_i directly, with no floating point anywhere.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, gcd

from .algebra.domains import ZZ, CyclotomicField, cyclotomic_poly
from .algebra.upoly import UniPoly


class HilbertError(ValueError):
    pass


def _strip(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _pmul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _strip(out)


def _exact_div(a, b):
    """Integer polynomial quotient a / b, or None when not exact."""
    a = list(a)
    db = len(b) - 1
    if len(a) - 1 < db:
        return None
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c, r = divmod(a[k], b[-1])
        if r:
            return None
        q[k - db] = c
        for i in range(db + 1):
            a[k - db + i] -= c * b[i]
    return _strip(q) if not any(a[:db]) else None


def _cyclotomic_factor(d):
    # 1 - t for d = 1 so that 1 - t^a is the product over d | a.
    return [1, -1] if d == 1 else cyclotomic_poly(d)


def _canonicalize(num, exps):
    """Cancel cyclotomic factors shared by numerator and denominator.

    The remaining denominator is rewritten as a product of 1 - t^a taking
    the largest available order first; divisors it needs but the
    denominator lacks are multiplied back into the numerator.
    """
    mult = {}
    for a in exps:
        for d in range(1, a + 1):
            if a % d == 0:
                mult[d] = mult.get(d, 0) + 1
    for d in sorted(mult):
        while mult[d]:
            q = _exact_div(num, _cyclotomic_factor(d))
            if q is None:
                break
            num = q
            mult[d] -= 1
    out = []
    while any(mult.values()):
        a = max(d for d, m in mult.items() if m)
        for d in range(1, a + 1):
            if a % d == 0:
                if mult.get(d, 0):
                    mult[d] -= 1
                else:
                    num = _pmul(num, _cyclotomic_factor(d))
        out.append(a)
    return num, sorted(out)


def _one_minus(a):
    """Coefficients of 1 - t^a."""
    c = [0] * (a + 1)
    c[0] = 1
    c[a] -= 1
    return c


class HilbertSeries:
    """numerator (integers, low degree first) over prod(1 - t^a) for a in exponents."""

    def __init__(self, numerator, denominator_exponents, krull_dim=None):
        num = _strip(int(c) for c in numerator)
        exps = sorted(int(a) for a in denominator_exponents)
        if any(a <= 0 for a in exps):
            raise HilbertError("denominator exponents must be positive")
        if not num:
            raise HilbertError("zero Hilbert series")
        self.numerator, self.exponents = _canonicalize(num, exps)
        self.krull_dim = krull_dim

    def denominator(self):
        d = [1]
        for a in self.exponents:
            d = _pmul(d, _one_minus(a))
        return d

    def __eq__(self, other):
        if not isinstance(other, HilbertSeries):
            return NotImplemented
        return (_pmul(self.numerator, other.denominator())
                == _pmul(other.numerator, self.denominator()))

    def __hash__(self):
        return hash(self.volume_report().volume)

    def coefficients(self, N):
        return series_coefficients(self, N)

    def to_json(self):
        return {"numerator": list(self.numerator),
                "denominator_exponents": list(self.exponents)}

    @classmethod
    def from_json(cls, doc):
        return cls(doc["numerator"], doc["denominator_exponents"])

    def to_str(self, var="t"):
        num = UniPoly(self.numerator, ZZ).to_str(var)
        groups = {}
        for a in self.exponents:
            groups[a] = groups.get(a, 0) + 1
        den = "*".join(f"(1 - {var}^{a})" + (f"^{m}" if m > 1 else "")
                       if a > 1 else f"(1 - {var})" + (f"^{m}" if m > 1 else "")
                       for a, m in sorted(groups.items()))
        return f"({num}) / ({den})" if den else num

    def __repr__(self):
        return f"HilbertSeries({self.to_str()})"

    def volume_report(self):
        return volume(self)


@dataclass(frozen=True)
class VolumeReport:
    pole_order: int
    volume: Fraction
    saturator: int

    def to_json(self):
        return {"pole_order": self.pole_order, "volume": str(self.volume),
                "saturator": self.saturator}


def series_coefficients(H, N):
    """The first N + 1 power-series coefficients."""
    if N < 0:
        raise HilbertError("N must be nonnegative")
    c = [H.numerator[i] if i < len(H.numerator) else 0 for i in range(N + 1)]
    for a in H.exponents:
        for i in range(a, N + 1):
            c[i] += c[i - a]
    return c


def _divide_by_one_minus_t(c):
    """Exact quotient of c by (1 - t); None if t = 1 is not a root."""
    if sum(c) != 0:
        return None
    q = []
    acc = 0
    for x in c[:-1]:
        acc += x
        q.append(acc)
    return _strip(q)


def pole_order_and_volume(H):
    num = list(H.numerator)
    k = 0
    while True:
        q = _divide_by_one_minus_t(num)
        if q is None:
            break
        num = q
        k += 1
    order = len(H.exponents) - k
    denom = 1
    for a in H.exponents:
        denom *= a
    return order, Fraction(sum(num), denom)


def saturator(H):
    """gcd of the degrees carrying nonzero coefficients (window deg N + sum a)."""
    window = len(H.numerator) - 1 + sum(H.exponents)
    coeffs = series_coefficients(H, window)
    g = 0
    for i in range(1, window + 1):
        if coeffs[i]:
            g = gcd(g, i)
    if g == 0:
        raise HilbertError("zero-dimensional: no nonzero positive degree")
    return g


def volume(H):
    order, vol = pole_order_and_volume(H)
    if vol == 0:
        raise HilbertError("zero volume")
    try:
        sat = saturator(H)
    except HilbertError:
        sat = 0
    return VolumeReport(order, vol, sat)


def veronese_section(H, n):
    """Series of the degree-n Veronese subalgebra, regraded, by a root-of-unity filter.

    sum_i c_{ni} s^i = (1/n) sum_j H(zeta^j u) with s = u^n.  Over the
    common denominator prod_i (1 - u^(a_i n/g_i))^(g_i), g_i = gcd(a_i, n),
    the filtered numerator is a rational polynomial in u^n.
    """
    if n < 1:
        raise HilbertError("n must be at least 1")
    if n == 1:
        return HilbertSeries(H.numerator, H.exponents)
    Z = CyclotomicField(n)
    zero = Z.zero

    def upoly(coeffs):
        return UniPoly(coeffs, Z, convert=False)

    # Factor prod_i (1 - zeta^{j a_i} u^{a_i}) for each branch j.
    branch = []
    for j in range(n):
        P = upoly([Z.one])
        for a in H.exponents:
            c = [zero] * (a + 1)
            c[0] = Z.one
            c[a] = Z.neg(Z.root(j * a))
            P = P * upoly(c)
        branch.append(P)
    total = upoly([])
    for j in range(n):
        Nj = upoly([Z.mul(Z.convert(c), Z.root(j * i)) for i, c in enumerate(H.numerator)])
        term = Nj
        for jj in range(n):
            if jj != j:
                term = term * branch[jj]
        total = total + term
    num = []
    for i, c in enumerate(total.coeffs):
        if Z.is_zero(c):
            continue
        if i % n or not Z.is_rational(c):
            raise HilbertError("root-of-unity filter produced a non-invariant term")
    for i in range(0, len(total.coeffs), n):
        q = Z.to_rational(total[i]) / n
        if q.denominator != 1:
            raise HilbertError("non-integral section coefficient")
        num.append(int(q))
    exps = []
    for a in H.exponents:
        g = gcd(a, n)
        exps.extend([a // g] * g)
    return HilbertSeries(num, exps)


def veronese_section_lifted(H, n):
    """Same section by lifting each 1 - t^a to 1 - t^(a n/g) first."""
    num = list(H.numerator)
    exps = []
    for a in H.exponents:
        g = gcd(a, n)
        m = n // g
        # (1 - t^(a m)) / (1 - t^a) = 1 + t^a + ... + t^(a(m-1))
        geo = [0] * (a * (m - 1) + 1)
        for k in range(m):
            geo[a * k] = 1
        num = _pmul(num, geo)
        exps.append(a * m // n)
    return HilbertSeries(num[::n] if num else [], exps)


def extension_degree_bound(HA, HB):
    """s_A Vol(A) / (s_B Vol(B)); requires equal pole orders."""
    ra, rb = volume(HA), volume(HB)
    if ra.pole_order != rb.pole_order:
        raise HilbertError("dimension mismatch: pole orders "
                           f"{ra.pole_order} and {rb.pole_order}")
    return Fraction(ra.saturator) * ra.volume / (rb.saturator * rb.volume)


def asymptotic_check(H, i_max):
    """Compare dim A_i (r-1)!/i^(r-1) with the volume on [i_max/2, i_max]."""
    if saturator(H) != 1:
        raise HilbertError("saturator is not 1; take the Veronese section first")
    rep = volume(H)
    r = rep.pole_order
    coeffs = series_coefficients(H, i_max)

    def err(i):
        return abs(Fraction(coeffs[i] * factorial(r - 1), i ** (r - 1)) - rep.volume)

    lo = max(1, i_max // 2)
    C = max(err(i) * i for i in range(lo, i_max + 1))
    outer = max(err(i) for i in range(lo, i_max + 1))
    inner = max(err(i) for i in range(max(1, lo // 2), lo + 1))
    return {"volume": rep.volume, "pole_order": r, "constant": C,
            "ratio_at_max": Fraction(coeffs[i_max] * factorial(r - 1), i_max ** (r - 1)),
            "error_at_max": err(i_max), "converging": outer <= inner}


def invariants_v1_v3():
    """Series of the SL2-invariants of V1 (x) V3, generators in degrees 2,2,3,3,4,6."""
    return HilbertSeries([1, 0, 0, 0, 0, 0, 1], [2, 2, 3, 3, 4])


def multiplier_subalgebra_b2():
    """Six generators of degree 6 with one relation in degree 60."""
    num = [0] * 61
    num[0], num[60] = 1, -1
    return HilbertSeries(num, [6] * 6)
