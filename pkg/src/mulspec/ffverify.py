"""Finite-field certificate that a fiber of the combined multiplier map is a point.

A one-parameter family of cubic maps phi_a = f(x, 1) / g(x, 1) over GF(p)
has fixed points 0, 1 and infinity with prescribed multipliers.  Asking
for a period-2 orbit with multiplier ``lam`` gives two equations in the
parameter a and the orbit point B; eliminating B leaves a univariate
eliminant in a.  Its roots are located in GF(p^k), the orbit points are
recovered by gcd, and for each surviving parameter the remaining period-2
multipliers are computed.  Pairwise distinct triples certify that the
fixed-point data together with all period-2 multipliers separate the maps
on this fiber.
"""

import json
from dataclasses import dataclass, field
from math import lcm

from .algebra.domains import GF, DomainError, ExtField, PrimeField, is_prime
from .algebra.factor import factor, minimal_polynomial, roots_in_field, squarefree_decomposition
from .algebra.mpoly import MultiPoly
from .algebra.upoly import PolyRing, UniPoly, gcd, resultant_bareiss


class FiberError(ValueError):
    pass


# ----------------------------------------------------------------------
# the family

def _num(x, y, a, l0, l1, l8):
    return ((((l0 - 1) * l1 + (-l0 + 1)) * x ** 3
             + ((a * l0 * l1 + (-l0 + (-a + 1))) * l8
                + (((-a - 1) * l0 + 1) * l1 + (2 * l0 + (a - 2)))) * x ** 2 * y
             + ((-a * l0 * l1 + a * l0) * l8 + (a * l0 * l1 - a * l0)) * x * y ** 2))


def _den(x, y, a, l0, l1, l8):
    return ((((l0 - 1) * l1 + (-l0 + 1)) * l8 * x ** 2 * y
             + (((-l0 + (a + 1)) * l1 + (a * l0 - 2 * a)) * l8
                + (-a * l1 + ((-a + 1) * l0 + (2 * a - 1)))) * x * y ** 2
             + ((-a * l1 + a) * l8 + (a * l1 - a)) * y ** 3))


@dataclass
class CubicFamily:
    """phi_a(x) = f(x, 1)/g(x, 1); f and g live in GF(p)[a, x, y]."""

    p: int
    l0: int
    l1: int
    l8: int
    f: MultiPoly
    g: MultiPoly

    @property
    def field(self):
        return self.f.K

    def numerator(self, x, y, a):
        return _num(x, y, a, self.l0, self.l1, self.l8)

    def denominator(self, x, y, a):
        return _den(x, y, a, self.l0, self.l1, self.l8)

    def map_polys(self, a0, L):
        """(f(x,1), g(x,1)) as UniPoly over L at parameter a0 in L."""
        x = UniPoly.x(L)
        one = UniPoly.const(L.one, L)
        a = UniPoly.const(a0, L)
        return self.numerator(x, one, a), self.denominator(x, one, a)

    def degree_at(self, a0, L):
        """Degree of phi_a0 (less than 3 on the degenerate parameters)."""
        F, G = self.map_polys(a0, L)
        if not F and not G:
            return -1
        if not F or not G:
            return max(F.deg, G.deg)
        return max(F.deg, G.deg) - gcd(F, G).deg


def build_family(p=101, l0=3, l1=2, l8=4):
    if not is_prime(p):
        raise FiberError(f"{p} is not prime")
    K = PrimeField(p)
    a, x, y = MultiPoly.gens(K, 3)
    l0, l1, l8 = (K.convert(v) for v in (l0, l1, l8))
    f = _num(x, y, a, l0, l1, l8)
    g = _den(x, y, a, l0, l1, l8)
    if not f or not g:
        raise FiberError("degenerate multiplier choice: f or g vanishes identically")
    return CubicFamily(p, l0, l1, l8, f, g)


def _derivative_at(F, G, b, L):
    """phi'(b) for phi = F/G, given as UniPolys over L."""
    num = L.sub(L.mul(F.derivative().evaluate_in(b, L), G.evaluate_in(b, L)),
                L.mul(F.evaluate_in(b, L), G.derivative().evaluate_in(b, L)))
    den = G.evaluate_in(b, L)
    return L.div(num, L.mul(den, den))


def fixed_point_multipliers(fam, a0, L=None):
    """Multipliers at 0, 1 and infinity of phi_a0 by direct differentiation."""
    L = L or fam.field
    F, G = fam.map_polys(L.convert(a0), L)
    at0 = _derivative_at(F, G, L.zero, L)
    at1 = _derivative_at(F, G, L.one, L)
    # u = 1/x: psi(u) = G(1/u)u^3 / F(1/u)u^3, reversed coefficient lists
    Fr, Gr = F.reverse(3), G.reverse(3)
    at_inf = _derivative_at(Gr, Fr, L.zero, L)
    return at0, at1, at_inf


# ----------------------------------------------------------------------
# the period-2 system

@dataclass
class SecondPeriodSystem:
    """F1 = f1 - B g1 and F2 = g1 f1' - f1 g1' - lam g1^2 in GF(p)[a, B]."""

    fam: CubicFamily
    lam: int
    fB: MultiPoly
    gB: MultiPoly
    f1: MultiPoly
    g1: MultiPoly
    F1: MultiPoly
    F2: MultiPoly

    @property
    def degrees(self):
        return self.F1.total_degree(), self.F2.total_degree()

    def homogenized(self):
        """G1, G2 in (a, B, z) with the degrees of the source program."""
        return self.F1.homogenize(9), self.F2.homogenize(16)

    def fixed_factor(self):
        return self.fB - self.gB * MultiPoly.gens(self.fam.field, 2)[1]

    def reduced_F1(self):
        """F1 with the fixed-point factor removed (degree 6 in B)."""
        try:
            return self.F1.exact_div(self.fixed_factor())
        except DomainError as exc:
            raise FiberError("unexpected fiber structure: fixed factor does not divide") from exc


def second_period_system(fam, lam=-5):
    K = fam.field
    lam = K.convert(lam)
    a, B = MultiPoly.gens(K, 2)
    one = MultiPoly.const(K.one, K, 2)
    fB = fam.numerator(B, one, a)
    gB = fam.denominator(B, one, a)
    f1 = fam.numerator(fB, gB, a)
    g1 = fam.denominator(fB, gB, a)
    F1 = f1 - B * g1
    F2 = g1 * f1.derivative(1) - f1 * g1.derivative(1) - (g1 * g1).scale(lam)
    if not F1 or not F2:
        raise FiberError("family degenerate at this lambda")
    return SecondPeriodSystem(fam, lam, fB, gB, f1, g1, F1, F2)


def _in_B(P, K):
    """UniPoly in B with coefficients in GF(p)[a]."""
    return P.to_univariate(1, inner=PolyRing(K, "a"))


def eliminant(system):
    """res_B(F1, F2) in GF(p)[a] by the Bareiss Sylvester determinant."""
    K = system.fam.field
    R = resultant_bareiss(_in_B(system.F1, K), _in_B(system.F2, K))
    if not R:
        raise FiberError("family degenerate at this lambda: eliminant vanishes")
    return R


def _specialize(P, a0, L):
    """P(a0, B) as a UniPoly in B over L."""
    deg = P.degree(1)
    coeffs = [L.zero] * (deg + 1)
    for (i, j), c in P.terms.items():
        coeffs[j] = L.add(coeffs[j], L.mul(L.convert(c), L.pow(a0, i)))
    return UniPoly(coeffs, L, convert=False)


def points_at_infinity(system):
    """Common zeros (a : B : 0) of the top-degree parts of G1 and G2."""
    K = system.fam.field
    tops = []
    for P, D in ((system.F1, 9), (system.F2, 16)):
        tops.append({e: c for e, c in P.terms.items() if sum(e) == D})
    out = []
    # B = 0 direction: (1 : 0 : 0)
    if all(top.get((D, 0), 0) == 0 for top, D in zip(tops, (9, 16))):
        out.append((K.one, K.zero))
    # B = 1: roots of gcd of the dehomogenized tops in t = a/B
    polys = []
    for top, D in zip(tops, (9, 16)):
        c = [K.zero] * (D + 1)
        for (i, _), v in top.items():
            c[i] = v
        polys.append(UniPoly(c, K, convert=False))
    if all(not q for q in polys):
        raise FiberError("top-degree parts vanish identically")
    h = gcd(*[q for q in polys if q]) if all(polys) else next(q for q in polys if q)
    for r in sorted(set(roots_in_field(h))):
        out.append((r, K.one))
    return out


# ----------------------------------------------------------------------
# solving the fiber

@dataclass
class FiberPoint:
    a: object
    b: object
    kind: str  # "at_infinity", "fixed", "degenerate_map" or "genuine"


@dataclass
class FiberCertificate:
    p: int
    multipliers: tuple
    lam: int
    seed: int
    extension_degree: int
    extension_modulus: tuple
    eliminant_degree: int
    eliminant_factors: list
    bezout_bound: int
    support_points: int
    affine_points: int
    infinity_points: list
    genuine_points: int
    kind_counts: dict
    parameters: list = field(default_factory=list)
    triples: list = field(default_factory=list)
    invariants: list = field(default_factory=list)
    checks: dict = field(default_factory=dict)
    distinct: bool = False

    @property
    def verdict(self):
        return "injective-on-fiber" if self.distinct else "not-separated"

    def to_json(self):
        out = {k: v for k, v in self.__dict__.items()}
        out["multipliers"] = list(self.multipliers)
        out["extension_modulus"] = list(self.extension_modulus)
        out["verdict"] = self.verdict
        return out

    def dumps(self, pretty=False):
        return json.dumps(self.to_json(), sort_keys=True, indent=2 if pretty else None)


def _ext_field(p, k, seed, modulus=None):
    if modulus is not None:
        L = ExtField(p, modulus)
        if L.degree % k:
            raise FiberError(f"modulus degree {L.degree} is not a multiple of {k}")
        return L
    return GF(p, k, seed=seed) if k > 1 else PrimeField(p)


def solve_fiber(fam, lam=-5, k_cap=8, seed=0, system=None, modulus=None):
    """Locate every point of the period-2 scheme and classify it.

    Returns (points, context) where context holds the extension field,
    the eliminant and its factorization.  ``modulus`` fixes the defining
    polynomial of the working field instead of a seeded random one.
    """
    system = system or second_period_system(fam, lam)
    R = eliminant(system)
    unit, facs = factor(R, seed)
    k = 1
    for g, _ in facs:
        k = lcm(k, g.deg)
    if k > k_cap:
        raise FiberError(f"splitting field degree {k} exceeds cap {k_cap}")
    # the point coordinates b may need a further extension; the source run
    # works in GF(p^8), so use the cap itself when it is a multiple of k
    k = k_cap if k_cap % k == 0 else k
    L = _ext_field(fam.p, k, seed, modulus)
    F1, F2 = system.F1, system.F2
    fixed = system.fixed_factor()
    points = []
    avals = []
    for g, _ in facs:
        avals.extend(roots_in_field(g.change_domain(L), seed))
    for a0 in avals:
        h1, h2 = _specialize(F1, a0, L), _specialize(F2, a0, L)
        if not h1 and not h2:
            raise FiberError("a whole line of solutions: fiber is not finite")
        h = gcd(h1, h2) if h1 and h2 else (h1 or h2)
        bs = sorted(set(roots_in_field(h, seed)), key=_key)
        deg_a0 = fam.degree_at(a0, L)
        for b in bs:
            if not L.is_zero(_specialize(fixed, a0, L).evaluate_in(b, L)):
                kind = "genuine" if deg_a0 == 3 else "degenerate_map"
            else:
                kind = "fixed"
            points.append(FiberPoint(a0, b, kind))
    inf = points_at_infinity(system)
    for a, b in inf:
        points.append(FiberPoint(L.convert(a), L.convert(b), "at_infinity"))
    ctx = {"field": L, "eliminant": R, "unit": unit, "factors": facs, "system": system,
           "infinity": inf}
    return points, ctx


def _key(c):
    return c if isinstance(c, tuple) else (c,)


def verify_point(fam, a0, b, lam, L):
    """Direct check phi(phi(b)) = b, phi(b) != b and (phi^2)'(b) = lam."""
    F, G = fam.map_polys(a0, L)
    gb = G.evaluate_in(b, L)
    if L.is_zero(gb):
        return False
    c = L.div(F.evaluate_in(b, L), gb)
    gc = G.evaluate_in(c, L)
    if L.is_zero(gc) or c == b:
        return False
    back = L.div(F.evaluate_in(c, L), gc)
    mult = L.mul(_derivative_at(F, G, b, L), _derivative_at(F, G, c, L))
    return back == b and mult == L.convert(lam), c


def other_multipliers(fam, a0, lam=-5, L=None, system=None):
    """The three period-2 orbit multipliers of phi_a0 (one of them is lam).

    res_B(redF2(a0, B), g1 f1' - f1 g1' - z g1^2) is a degree-6 polynomial
    in z; each orbit contributes its multiplier twice (once per point).
    """
    system = system or second_period_system(fam, lam)
    L = L or fam.field
    a0 = L.convert(a0)
    red = _specialize(system.reduced_F1(), a0, L)
    Z = PolyRing(L, "z")
    f1 = _specialize(system.f1, a0, L)
    g1 = _specialize(system.g1, a0, L)
    base = g1 * f1.derivative() - f1 * g1.derivative()
    sq = g1 * g1
    zt = UniPoly([L.zero, L.one], L, convert=False)
    cols = max(base.deg, sq.deg) + 1
    dF2 = UniPoly([UniPoly([base[i]], L) - zt.scale(sq[i]) for i in range(cols)], Z,
                  convert=False)
    redZ = UniPoly([UniPoly([c], L) for c in red.coeffs], Z, convert=False)
    poly = resultant_bareiss(redZ, dF2)
    if poly.deg != 6:
        raise FiberError(f"unexpected fiber structure: z-degree {poly.deg}")
    pieces = squarefree_decomposition(poly)
    if len(pieces) != 1 or pieces[0][1] != 2 or pieces[0][0].deg != 3:
        raise FiberError("unexpected fiber structure: not three double roots")
    roots = roots_in_field(pieces[0][0])
    if len(roots) != 3:
        raise FiberError("multipliers do not split over the working field")
    return sorted(roots, key=_key), poly


def _coords_over_prime(c, a0, k, L):
    """r with sum r_i a0^i = c, 0 <= i < k; a0 generates a degree-k subfield."""
    P = L.prime_field if isinstance(L, ExtField) else L
    if not isinstance(L, ExtField):
        return [c]
    n = L.degree
    powers = [L.one]
    for _ in range(k - 1):
        powers.append(L.mul(powers[-1], a0))

    def vec(x):
        x = list(x)
        return x + [0] * (n - len(x))

    # rows: field coordinates; columns: powers of a0, plus right-hand side
    A = [[vec(pw)[r] for pw in powers] + [vec(c)[r]] for r in range(n)]
    row = 0
    piv_cols = []
    for col in range(k):
        piv = next((i for i in range(row, n) if A[i][col] % P.p), None)
        if piv is None:
            continue
        A[row], A[piv] = A[piv], A[row]
        inv = P.inv(A[row][col])
        A[row] = [P.mul(inv, v) for v in A[row]]
        for i in range(n):
            if i != row and A[i][col]:
                m = A[i][col]
                A[i] = [P.sub(v, P.mul(m, w)) for v, w in zip(A[i], A[row])]
        piv_cols.append(col)
        row += 1
    if row < k or any(A[i][k] for i in range(row, n)):
        raise FiberError("value does not lie in the field generated by the parameter")
    out = [0] * k
    for i, col in enumerate(piv_cols):
        out[col] = A[i][k]
    return out


def parameter_invariant(a0, triple, L):
    """Representation-free description of (a0, triple).

    The minimal polynomial m of a0 over GF(p), and the coefficients of
    prod (z - mu) written as polynomials in a0 of degree < deg m (all of
    them lie in GF(p)(a0) because the multipliers are conjugation-stable).
    """
    m = minimal_polynomial(a0, L)
    k = m.deg
    poly = UniPoly([L.one], L, convert=False)
    for mu in triple:
        poly = poly * UniPoly([L.neg(mu), L.one], L, convert=False)
    return {"minpoly": list(m.coeffs),
            "z_poly": [_coords_over_prime(c, a0, k, L) for c in poly.coeffs]}


def injectivity_report(fam=None, lam=-5, seed=0, k_cap=8, modulus=None):
    fam = fam or build_family()
    system = second_period_system(fam, lam)
    points, ctx = solve_fiber(fam, lam, k_cap, seed, system, modulus)
    L = ctx["field"]
    R = ctx["eliminant"]
    kinds = {}
    for pt in points:
        kinds[pt.kind] = kinds.get(pt.kind, 0) + 1
    genuine = [pt for pt in points if pt.kind == "genuine"]
    checks = {"point_equations": True, "orbit_pairing": True,
              "fixed_factor_divides": True, "triples_contain_lambda": True}
    gen_set = {(pt.a, pt.b) for pt in genuine}
    for pt in genuine:
        res = verify_point(fam, pt.a, pt.b, lam, L)
        if not res:
            checks["point_equations"] = False
            continue
        if (pt.a, res[1]) not in gen_set:
            checks["orbit_pairing"] = False
    system.reduced_F1()
    params = sorted({pt.a for pt in genuine}, key=_key)
    triples = []
    invs = []
    for a0 in params:
        triple, _ = other_multipliers(fam, a0, lam, L, system)
        if L.convert(lam) not in triple:
            checks["triples_contain_lambda"] = False
        triples.append(triple)
        invs.append(parameter_invariant(a0, triple, L))
    distinct = len({tuple(t) for t in triples}) == len(triples)
    # conjugate parameters share one invariant; keep one per Galois orbit
    uniq = []
    for inv in invs:
        if inv not in uniq:
            uniq.append(inv)
    P = fam.field
    return FiberCertificate(
        p=fam.p, multipliers=(fam.l0, fam.l1, fam.l8), lam=P.convert(lam), seed=seed,
        extension_degree=getattr(L, "degree", 1),
        extension_modulus=tuple(getattr(L, "modulus", ())),
        eliminant_degree=R.deg,
        eliminant_factors=[[list(g.coeffs), m] for g, m in ctx["factors"]],
        bezout_bound=9 * 16,
        support_points=len(points),
        affine_points=len(points) - len(ctx["infinity"]),
        infinity_points=[[_show(L, L.convert(a)), _show(L, L.convert(b)), 0]
                         for a, b in ctx["infinity"]],
        genuine_points=len(genuine),
        kind_counts=dict(sorted(kinds.items())),
        parameters=[_show(L, a) for a in params],
        triples=[[_show(L, m) for m in t] for t in triples],
        invariants=sorted(uniq, key=lambda d: (len(d["minpoly"]), d["minpoly"], d["z_poly"])),
        checks=checks,
        distinct=distinct,
    )


def _show(L, c):
    """Prime-field values as integers, others as strings in the working modulus."""
    if isinstance(L, ExtField):
        return L.to_prime(c) if L.in_prime_field(c) else L.to_str(c)
    return c
