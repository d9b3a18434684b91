"""Correspondences on P^1 x P^1: iteration, periodic points, multiplier spectra.

A correspondence of bidegree (d, e) is a form f(x0, x1; y0, y1) stored as
``{(i, j): coeff}`` where i is the exponent of x1 (so x0 has d - i) and j
the exponent of y1.  A rational map z -> phi(z) = H(z)/G(z) is embedded as
x0*H(y) - x1*G(y): its zero set is {x = phi(y)}, and the fixed-point
multiplier -d_y f / d_x f equals phi'(z).

Binary forms in z = (z0 : z1) are carried as a ``UniPoly`` in z = z1/z0
together with a formal degree; the gap between the two is the multiplicity
of the root at infinity.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra.domains import QQ, ExtField, PrimeField
from .algebra.factor import factor, roots_in_field
from .algebra.mpoly import MPolyRing, MultiPoly
from .algebra.upoly import (PolyRing, UniPoly, gcd, interpolate,
                            resultant_bareiss, resultant_binary_forms)


class DynamicsError(ArithmeticError):
    pass


class Correspondence:
    def __init__(self, d, e, terms, K, diagonal_free=False):
        if d < 0 or e < 0 or d + e == 0:
            raise DynamicsError("bidegree must be nonnegative and not (0, 0)")
        clean = {}
        for (i, j), c in terms.items():
            if not (0 <= i <= d and 0 <= j <= e):
                raise DynamicsError(f"term ({i}, {j}) outside bidegree ({d}, {e})")
            c = K.convert(c)
            if not K.is_zero(c):
                clean[(i, j)] = c
        if not clean:
            raise DynamicsError("the zero form is not a correspondence")
        self.d, self.e, self.K = d, e, K
        self.terms = clean
        self._iterates = {1: self}
        if diagonal_free and not diagonal_restriction(self):
            raise DynamicsError("form is divisible by the diagonal x0*y1 - x1*y0")

    @property
    def bidegree(self):
        return (self.d, self.e)

    @classmethod
    def graph(cls, num, den, K=QQ):
        """Embedding of z -> num(z)/den(z); coefficient lists, low degree first."""
        num = UniPoly(num, K)
        den = UniPoly(den, K)
        e = max(num.deg, den.deg)
        if e < 1:
            raise DynamicsError("map must be nonconstant")
        terms = {}
        for j in range(e + 1):
            terms[(0, j)] = num[j]
            terms[(1, j)] = K.neg(den[j])
        return cls(1, e, terms, K)

    def coeff(self, i, j):
        return self.terms.get((i, j), self.K.zero)

    def to_multipoly(self):
        """Form in the four variables (x0, x1, y0, y1)."""
        d, e = self.d, self.e
        return MultiPoly({(d - i, i, e - j, j): c for (i, j), c in self.terms.items()},
                         self.K, 4, convert=False)

    @classmethod
    def from_multipoly(cls, F, d, e):
        terms = {}
        for (a0, a1, b0, b1), c in F.terms.items():
            if a0 + a1 != d or b0 + b1 != e:
                raise DynamicsError("form is not bihomogeneous of the stated bidegree")
            terms[(a1, b1)] = c
        return cls(d, e, terms, F.K)

    def __eq__(self, other):
        return (isinstance(other, Correspondence) and self.bidegree == other.bidegree
                and self.K == other.K and self.terms == other.terms)

    def __hash__(self):
        return hash((self.d, self.e, tuple(sorted(self.terms.items()))))

    def to_str(self):
        names = ["x0", "x1", "y0", "y1"]
        return self.to_multipoly().to_str(names)

    def __repr__(self):
        return f"Correspondence({self.d}, {self.e}: {self.to_str()})"

    def to_json(self):
        return {"bidegree": [self.d, self.e], "field": field_to_json(self.K),
                "terms": [[i, j, self.K.to_str(c)]
                          for (i, j), c in sorted(self.terms.items())]}

    @classmethod
    def from_json(cls, doc):
        d, e = doc["bidegree"]
        K = field_from_json(doc.get("field", "Q"))
        terms = {(int(i), int(j)): parse_element(K, c) for i, j, c in doc["terms"]}
        return cls(int(d), int(e), terms, K)


def field_to_json(K):
    if K == QQ:
        return "Q"
    if isinstance(K, PrimeField):
        return {"p": K.p}
    if isinstance(K, ExtField):
        return {"p": K.p, "k": K.degree, "modulus": list(K.modulus)}
    raise DynamicsError(f"no JSON form for {K!r}")


def field_from_json(spec):
    if spec in ("Q", "QQ", "q"):
        return QQ
    if isinstance(spec, dict):
        p = int(spec["p"])
        if "k" in spec and int(spec["k"]) > 1:
            return ExtField(p, spec["modulus"])
        return PrimeField(p)
    raise DynamicsError(f"unknown field descriptor {spec!r}")


def parse_element(K, s):
    """Parse a coefficient; extension elements accept a list or text in w."""
    if isinstance(K, ExtField):
        if isinstance(s, (list, tuple)):
            return K.convert(list(s))
        text = str(s).replace(" ", "").replace("-", "+-")
        coeffs = [0] * K.degree
        for tok in filter(None, text.split("+")):
            sign = -1 if tok.startswith("-") else 1
            tok = tok.lstrip("-")
            if K.var in tok:
                c, _, mono = tok.rpartition("*") if "*" in tok else ("1", "", tok)
                k = int(mono.split("^")[1]) if "^" in mono else 1
            else:
                c, k = tok, 0
            while len(coeffs) <= k:
                coeffs.append(0)
            coeffs[k] += sign * int(c)
        return K.convert(coeffs)
    if isinstance(s, str):
        return K.convert(Fraction(s.replace(" ", "")))
    return K.convert(s)


# -- binary forms -------------------------------------------------------------

@dataclass(frozen=True)
class DiagonalForm:
    """Binary form sum poly[k] z0^(degree-k) z1^k."""

    poly: UniPoly
    degree: int
    origin: str = "generic"

    @property
    def infinity_multiplicity(self):
        return self.degree - self.poly.deg

    def coefficients(self):
        return [self.poly[k] for k in range(self.degree + 1)]

    def to_str(self):
        return form_to_str(self.poly, self.degree, ("z0", "z1"))

    def to_json(self):
        K = self.poly.K
        return {"degree": self.degree, "origin": self.origin, "form": self.to_str(),
                "coefficients": [K.to_str(c) for c in self.coefficients()]}


def form_to_str(poly, degree, names):
    K = poly.K
    parts = []
    for k in range(degree + 1):
        c = poly[k]
        if K.is_zero(c):
            continue
        a, b = degree - k, k
        mono = "*".join(n if p == 1 else f"{n}^{p}"
                        for n, p in ((names[0], a), (names[1], b)) if p)
        s = K.to_str(c)
        if K.needs_parens(c):
            s = f"({s})"
        if not mono:
            parts.append(s)
        elif s == "1":
            parts.append(mono)
        elif s == "-1":
            parts.append("-" + mono)
        else:
            parts.append(f"{s}*{mono}")
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += (" - " + p[1:]) if p.startswith("-") else (" + " + p)
    return out


def proportional(a, b, K):
    """True when coefficient sequences a and b agree up to a nonzero scalar."""
    a, b = list(a), list(b)
    n = max(len(a), len(b))
    a += [K.zero] * (n - len(a))
    b += [K.zero] * (n - len(b))
    piv = next((i for i in range(n) if not K.is_zero(a[i])), None)
    if piv is None or K.is_zero(b[piv]):
        return False
    return all(K.sub(K.mul(a[i], b[piv]), K.mul(b[i], a[piv])) == K.zero
               for i in range(n))


def correspondences_proportional(c1, c2):
    if c1.bidegree != c2.bidegree:
        return False
    keys = sorted(set(c1.terms) | set(c2.terms))
    return proportional([c1.coeff(*k) for k in keys], [c2.coeff(*k) for k in keys], c1.K)


# -- iteration ----------------------------------------------------------------

def compose(c1, c2):
    """res_w(c1(x, w), c2(w, y)): the correspondence c1 after c2.

    With the graph embedding, compose(graph(phi), graph(psi)) is the graph
    of phi(psi(z)).  The result has bidegree (d1*d2, e1*e2).
    """
    if c1.K != c2.K:
        raise DynamicsError("correspondences over different fields")
    K = c1.K
    R = MPolyRing(K, 4, ["x0", "x1", "y0", "y1"])
    # c1(x, w) as a form in w of degree e1 with coefficients in x.
    left = []
    for j in range(c1.e + 1):
        t = {(c1.d - i, i, 0, 0): c for (i, jj), c in c1.terms.items() if jj == j}
        left.append(MultiPoly._raw(t, K, 4))
    # c2(w, y) as a form in w of degree d2 with coefficients in y.
    right = []
    for i in range(c2.d + 1):
        t = {(0, 0, c2.e - j, j): c for (ii, j), c in c2.terms.items() if ii == i}
        right.append(MultiPoly._raw(t, K, 4))
    F = UniPoly(left, R, convert=False)
    G = UniPoly(right, R, convert=False)
    res = resultant_binary_forms(F, G, c1.e, c2.d)
    if not res:
        raise DynamicsError("degenerate composition")
    return Correspondence.from_multipoly(res, c1.d * c2.d, c1.e * c2.e)


def iterate(c, n):
    """n-th iterate, bidegree (d^n, e^n), by repeated composition with c."""
    if n < 1:
        raise DynamicsError("n must be at least 1")
    cache = c._iterates
    m = max(k for k in cache if k <= n)
    cur = cache[m]
    while m < n:
        cur = compose(cur, c)
        m += 1
        cache[m] = cur
    return cur


def diagonal_restriction(c):
    """f(z, z) as (UniPoly in z1/z0, formal degree d + e)."""
    K = c.K
    coeffs = [K.zero] * (c.d + c.e + 1)
    for (i, j), v in c.terms.items():
        coeffs[i + j] = K.add(coeffs[i + j], v)
    return UniPoly(coeffs, K, convert=False)


def per_form(c, n):
    psi = iterate(c, n)
    poly = diagonal_restriction(psi)
    if not poly:
        raise DynamicsError("diagonal component: the iterate contains the diagonal")
    return DiagonalForm(poly, psi.d + psi.e, f"Per_{n}")


def mobius(n):
    result, m, q = 1, n, 2
    while q * q <= m:
        if m % q == 0:
            m //= q
            if m % q == 0:
                return 0
            result = -result
        q += 1
    if m > 1:
        result = -result
    return result


def divisors(n):
    return [m for m in range(1, n + 1) if n % m == 0]


def nu(n):
    """Integer coefficients (low first) of sum over m | n of mu(n/m) x^m."""
    if n < 1:
        raise ValueError("n must be at least 1")
    coeffs = [0] * (n + 1)
    for m in divisors(n):
        coeffs[m] += mobius(n // m)
    return coeffs


def nu_value(n, x):
    return sum(c * x ** k for k, c in enumerate(nu(n)))


def nu_str(n):
    from .algebra.domains import ZZ
    return UniPoly(nu(n), ZZ).to_str("x")


def per_star_form(c, n):
    """Per_n divided by the formal-period forms of all proper divisors."""
    per = per_form(c, n)
    if n == 1:
        return DiagonalForm(per.poly, per.degree, "Per*_1")
    poly, degree = per.poly, per.degree
    for m in divisors(n)[:-1]:
        sub = per_star_form(c, m)
        q, r = divmod(poly, sub.poly)
        if r or sub.infinity_multiplicity > degree - poly.deg:
            raise DynamicsError("non-generic correspondence: Per divisors not "
                                "in general position")
        poly, degree = q, degree - sub.degree
    expected = nu_value(n, c.d) + nu_value(n, c.e)
    if degree != expected:
        raise DynamicsError(f"Per*_{n} has degree {degree}, expected {expected}")
    return DiagonalForm(poly, degree, f"Per*_{n}")


def degree_formulas(d, e, n):
    coeff_deg = sum(d ** (n - 1 - k) * e ** k for k in range(n))
    return {"iterate_coeff_deg": coeff_deg, "per_deg": d ** n + e ** n,
            "per_star_deg": nu_value(n, d) + nu_value(n, e)}


# -- multipliers --------------------------------------------------------------

@dataclass
class SpectrumForm:
    """Binary form sum coeffs[k] dx^(degree-k) dy^k.

    When ``scale`` is set the stored coefficients were divided by it, so
    the raw form equals scale times this one.
    """

    coeffs: list
    degree: int
    K: object
    scale: object = None
    note: str = ""
    period: int = 0
    extra: dict = field(default_factory=dict)

    def poly_in_t(self):
        """The form at dx = 1, dy = t."""
        return UniPoly(self.coeffs, self.K, convert=False)

    def to_str(self):
        return form_to_str(self.poly_in_t(), self.degree, ("dx", "dy"))

    def to_json(self):
        K = self.K
        out = {"degree": self.degree, "form": self.to_str(),
               "coefficients": [K.to_str(c) for c in self.coeffs],
               "note": self.note}
        if self.scale is not None:
            out["scale"] = K.to_str(self.scale)
        return out


def _diag_partials(psi):
    """The four partial derivatives of psi restricted to x = y = z."""
    F = psi.to_multipoly()
    K = psi.K
    out = []
    for var in range(4):
        D = F.derivative(var)
        coeffs = [K.zero] * (psi.d + psi.e)
        for (a0, a1, b0, b1), v in D.terms.items():
            coeffs[a1 + b1] = K.add(coeffs[a1 + b1], v)
        out.append(UniPoly(coeffs, K, convert=False))
    return out


def _evaluate_form(poly, degree, w0, w1, K):
    acc = K.zero
    for k in range(degree + 1):
        acc = K.add(acc, K.mul(poly[k], K.mul(K.pow(w0, degree - k), K.pow(w1, k))))
    return acc


def _has_common_root(forms):
    """Common zero on P^1 of (poly, formal degree) forms over a field."""
    g = None
    for poly, _ in forms:
        if not poly:
            continue
        g = poly if g is None else gcd(g, poly)
    if g is not None and g.deg > 0:
        return True
    # root at infinity shared by all
    return all(poly.deg < deg for poly, deg in forms)


def multiplier_spectrum(c, n, normalize=True):
    """lambda-bullet form: prod over formal-period-n points of (dx + lambda dy)."""
    K = c.K
    star = per_star_form(c, n)
    psi = iterate(c, n)
    Fx0, Fx1, Fy0, Fy1 = _diag_partials(psi)
    M = star.degree
    D = psi.d + psi.e - 1
    # Tangent direction w must not be a periodic point.
    candidates = [(K.zero, K.one)] + [(K.one, K.convert(k)) for k in range(M + 2)]
    for w0, w1 in candidates:
        if not K.is_zero(_evaluate_form(star.poly, M, w0, w1, K)):
            break
    else:
        raise DynamicsError("no admissible tangent direction")
    Lx = Fx0.scale(w0) + Fx1.scale(w1)
    Ly = Fy0.scale(w0) + Fy1.scale(w1)
    if K.is_field and _has_common_root([(star.poly, M), (Lx, D), (Ly, D)]):
        raise DynamicsError("multiplier undefined at singular periodic point")
    T = PolyRing(K, "t")
    A = UniPoly([T.convert(v) for v in star.coefficients()], T, convert=False)
    B = UniPoly([UniPoly([Lx[k], K.neg(Ly[k])], K, convert=False) for k in range(D + 1)],
                T, convert=False)
    res = resultant_binary_forms(A, B, M, D) if M and D else (
        T.pow(A[0], D) if M == 0 else T.pow(B[0], M))
    if not res:
        raise DynamicsError("multiplier undefined at singular periodic point")
    coeffs = [res[k] for k in range(M + 1)]
    form = SpectrumForm(coeffs, M, K, note="raw", period=n)
    return normalize_form(form) if normalize and K.is_field else form


def normalize_form(s):
    """Divide by the first nonzero coefficient (lex order dx > dy)."""
    K = s.K
    j = next(k for k, v in enumerate(s.coeffs) if not K.is_zero(v))
    lead = s.coeffs[j]
    inv = K.inv(lead)
    coeffs = [K.mul(inv, v) for v in s.coeffs]
    scale = lead if s.scale is None else K.mul(lead, s.scale)
    return SpectrumForm(coeffs, s.degree, K, scale=scale,
                        note="first nonzero coefficient normalized to 1",
                        period=s.period)


def _series_root(q, n, terms, K):
    """First ``terms`` coefficients of q^(1/n) for a series with q[0] = 1."""
    alpha = K.div(K.one, K.convert(n))
    r = [K.one]
    for k in range(1, terms):
        acc = K.zero
        for i in range(1, min(k, len(q) - 1) + 1):
            w = K.sub(K.mul(K.add(alpha, K.one), K.convert(i)), K.convert(k))
            acc = K.add(acc, K.mul(w, K.mul(q[i], r[k - i])))
        r.append(K.div(acc, K.convert(k)))
    return r


def nth_root_form(s, n):
    """lambda-circle form r with r^n = s up to the recorded scalar."""
    if n == 1:
        return s
    K = s.K
    if not K.is_field:
        raise DynamicsError("n-th root needs field coefficients")
    if s.degree % n:
        raise DynamicsError("spectrum not a perfect power: degree not divisible")
    char = K.characteristic
    if char and (n % char == 0 or s.degree // n >= char):
        raise DynamicsError("n-th root needs n and the root degree below the characteristic")
    s = normalize_form(s)
    j = next(k for k, v in enumerate(s.coeffs) if not K.is_zero(v))
    if j % n:
        raise DynamicsError("spectrum not a perfect power")
    q = s.coeffs[j:]
    m = s.degree // n
    r = _series_root(q, n, m - j // n + 1, K)
    root = UniPoly([K.zero] * (j // n) + r, K, convert=False)
    if (root ** n).coeffs != UniPoly(s.coeffs, K, convert=False).coeffs:
        raise DynamicsError("spectrum not a perfect power")
    coeffs = [root[k] for k in range(m + 1)]
    return SpectrumForm(coeffs, m, K, scale=s.scale,
                        note=f"{n}-th root; raw form = scale * root^{n}",
                        period=s.period)


INFINITY = "inf"


def _rational_roots(poly):
    """Rational roots with multiplicity of a polynomial over QQ."""
    from math import gcd as igcd
    roots = []
    p = poly
    while p.deg > 0:
        den = 1
        for c in p.coeffs:
            den = den * c.denominator // igcd(den, c.denominator)
        ints = [int(c * den) for c in p.coeffs]
        if ints[0] == 0:
            roots.append(Fraction(0))
            p = UniPoly(p.coeffs[1:], QQ, convert=False)
            continue
        found = None
        for a in _divisors_abs(ints[0]):
            for b in _divisors_abs(ints[-1]):
                for cand in (Fraction(a, b), Fraction(-a, b)):
                    if p(cand) == 0:
                        found = cand
                        break
                if found is not None:
                    break
            if found is not None:
                break
        if found is None:
            raise DynamicsError(f"non-split over QQ: residual factor of degree {p.deg}")
        roots.append(found)
        p = p // UniPoly([-found, 1], QQ, convert=False)
    return roots


def _divisors_abs(n):
    n = abs(n)
    return [d for d in range(1, n + 1) if n % d == 0]


def multiplier_multiset(s, F=None):
    """Multipliers (and ``"inf"``) encoded by a spectrum form, sorted."""
    K = s.K
    F = F or K
    coeffs = [F.convert(v) for v in s.coeffs]
    j = next((k for k, v in enumerate(coeffs) if not F.is_zero(v)), None)
    if j is None:
        raise DynamicsError("zero spectrum form")
    # sum c_k u^(M-k) = C prod (u + lambda_i); dy factors give lambda = inf.
    rev = UniPoly(coeffs[::-1], F, convert=False)
    if getattr(F, "is_finite", False):
        roots = roots_in_field(rev)
        if len(roots) != rev.deg:
            _, facs = factor(rev)
            degs = sorted(g.deg for g, m in facs if g.deg > 1)
            raise DynamicsError(f"non-split spectrum: irreducible factor degrees {degs}")
    elif F == QQ:
        roots = _rational_roots(rev)
    else:
        raise DynamicsError(f"cannot find roots over {F!r}")
    mults = sorted((F.neg(r) for r in roots), key=_element_key)
    return mults + [INFINITY] * j


def _element_key(x):
    return x if not isinstance(x, tuple) else (len(x), x)


# -- cubic covariants ---------------------------------------------------------

@dataclass
class CubicCovariants:
    f4: UniPoly
    f2: UniPoly

    def to_json(self):
        return {"f4": form_to_str(self.f4, 4, ("z0", "z1")),
                "f2": form_to_str(self.f2, 2, ("z0", "z1"))}


def cubic_covariants(c):
    """Quartic f(z, z) and the omega-process quadratic (scaled by 1/3)."""
    if c.bidegree != (1, 3):
        raise DynamicsError(f"cubic covariants need bidegree (1, 3), got {c.bidegree}")
    K = c.K
    f4 = diagonal_restriction(c)
    third = K.inv(K.convert(3))
    f2 = []
    for k in range(3):
        a = K.mul(K.convert(k + 1), c.coeff(0, k + 1))
        b = K.mul(K.convert(3 - k), c.coeff(1, k))
        f2.append(K.mul(third, K.sub(a, b)))
    return CubicCovariants(f4, UniPoly(f2, K, convert=False))


def _dr_second_form(cv, t, K):
    # d f4 / d z1 + t * z1 * f2, a form of degree 3
    df4 = cv.f4.derivative()
    zf2 = UniPoly([K.zero] + [cv.f2[k] for k in range(3)], K, convert=False)
    return df4 + zf2.scale(t)


def discriminant_resultants(cv, route="expand"):
    """Coefficients of t^r in res_z(f4, d_z f4 + z f2 t) and the sums Sigma_+-.

    ``route="expand"`` computes over K[t]; ``route="interpolate"`` evaluates
    at t = 0..4 and interpolates.  Both must agree.
    """
    K = cv.f4.K
    if not cv.f4:
        raise DynamicsError("f4 is identically zero")
    if route == "expand":
        T = PolyRing(K, "t")
        A = UniPoly([T.convert(cv.f4[k]) for k in range(5)], T, convert=False)
        df4 = cv.f4.derivative()
        B = UniPoly([UniPoly([df4[k], cv.f2[k - 1] if k else K.zero], K, convert=False)
                     for k in range(4)], T, convert=False)
        res = resultant_bareiss(A, B, 4, 3)
        coeffs = [res[r] for r in range(5)]
    elif route == "interpolate":
        pts = [K.convert(v) for v in range(5)]
        vals = []
        for t in pts:
            B = _dr_second_form(cv, t, K)
            vals.append(resultant_binary_forms(cv.f4, B, 4, 3))
        poly = interpolate(pts, vals, K)
        coeffs = [poly[r] for r in range(5)]
    else:
        raise ValueError(f"unknown route {route!r}")
    s0, s1, s2, s3, s4 = coeffs
    base = K.add(K.add(s0, s2), s4)
    return {"sigma": {0: s0, 2: s2, 3: s3, 4: s4}, "t1_coefficient": s1,
            "Sigma_plus": K.add(base, s3), "Sigma_minus": K.sub(base, s3)}
