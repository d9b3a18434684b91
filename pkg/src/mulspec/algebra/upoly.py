"""Dense univariate polynomials over a domain, and resultants."""

from . import kernels
from .domains import Domain, DomainError
from .linalg import bareiss_det


class UniPoly:
    """Polynomial with coefficients ``coeffs`` (lowest degree first) in ``K``.

    Trailing zeros are always stripped, so ``deg`` of the zero polynomial
    is -1.  Instances are treated as immutable.
    """

    __slots__ = ("coeffs", "K")

    def __init__(self, coeffs, K, convert=True):
        if convert:
            coeffs = [K.convert(c) for c in coeffs]
        else:
            coeffs = list(coeffs)
        z = K.zero
        while coeffs and coeffs[-1] == z:
            coeffs.pop()
        self.coeffs = coeffs
        self.K = K

    @classmethod
    def _raw(cls, coeffs, K):
        # coeffs already normalized and stripped
        obj = cls.__new__(cls)
        obj.coeffs = coeffs
        obj.K = K
        return obj

    @classmethod
    def x(cls, K):
        return cls._raw([K.zero, K.one], K)

    @classmethod
    def const(cls, c, K):
        return cls([c], K)

    @classmethod
    def monomial(cls, n, c, K):
        return cls([K.zero] * n + [c], K)

    @property
    def deg(self):
        return len(self.coeffs) - 1

    def degree(self):
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else self.K.zero

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.K.zero

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def is_const(self):
        return len(self.coeffs) <= 1

    def _coerce(self, other):
        if isinstance(other, UniPoly):
            if other.K != self.K:
                raise DomainError(f"mixed domains {self.K} and {other.K}")
            return other
        return UniPoly([other], self.K)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.K == other.K and self.coeffs == other.coeffs
        try:
            return self.coeffs == UniPoly([other], self.K).coeffs
        except (TypeError, ValueError, DomainError):
            return NotImplemented

    def __hash__(self):
        return hash((tuple(self.coeffs), self.K))

    def __add__(self, other):
        other = self._coerce(other)
        K = self.K
        if K.is_prime_field:
            return UniPoly._raw(kernels.add(self.coeffs, other.coeffs, K.p), K)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = K.add(out[i], c)
        return UniPoly(out, K, convert=False)

    __radd__ = __add__

    def __neg__(self):
        K = self.K
        return UniPoly._raw([K.neg(c) for c in self.coeffs], K)

    def __sub__(self, other):
        other = self._coerce(other)
        K = self.K
        if K.is_prime_field:
            return UniPoly._raw(kernels.sub(self.coeffs, other.coeffs, K.p), K)
        return self + (-other)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            return self.scale(self.K.convert(other))
        other = self._coerce(other)
        K = self.K
        if K.is_prime_field:
            return UniPoly._raw(kernels.mul(self.coeffs, other.coeffs, K.p), K)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly._raw([], K)
        out = [K.zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if K.is_zero(x):
                continue
            for j, y in enumerate(b):
                out[i + j] = K.add(out[i + j], K.mul(x, y))
        return UniPoly(out, K, convert=False)

    __rmul__ = __mul__

    def scale(self, c):
        K = self.K
        if K.is_prime_field:
            return UniPoly._raw(kernels.scale(self.coeffs, c, K.p), K)
        return UniPoly([K.mul(c, x) for x in self.coeffs], K, convert=False)

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = UniPoly([self.K.one], self.K, convert=False)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __divmod__(self, other):
        other = self._coerce(other)
        K = self.K
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        if K.is_prime_field:
            q, r = kernels.divmod_(self.coeffs, other.coeffs, K.p)
            return UniPoly._raw(q, K), UniPoly._raw(r, K)
        b = other.coeffs
        db = len(b) - 1
        r = list(self.coeffs)
        if len(r) - 1 < db:
            return UniPoly._raw([], K), UniPoly._raw(r, K)
        lc = b[-1]
        q = [K.zero] * (len(r) - db)
        one_lc = K.is_one(lc)
        for k in range(len(r) - 1, db - 1, -1):
            c = r[k]
            if K.is_zero(c):
                continue
            if not one_lc:
                c = K.exact_quo(c, lc)
            q[k - db] = c
            for i in range(db + 1):
                r[k - db + i] = K.sub(r[k - db + i], K.mul(c, b[i]))
        return UniPoly(q, K, convert=False), UniPoly(r[:db], K, convert=False)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        q, r = divmod(self, other)
        if r:
            raise DomainError("polynomial division is not exact")
        return q

    def __call__(self, x):
        K = self.K
        if K.is_prime_field and isinstance(x, int):
            return kernels.evaluate(self.coeffs, x, K.p)
        acc = K.zero
        for c in reversed(self.coeffs):
            acc = K.add(K.mul(acc, x), c)
        return acc

    def evaluate_in(self, x, L):
        """Evaluate at x in a domain L that the coefficients convert into."""
        acc = L.zero
        for c in reversed(self.coeffs):
            acc = L.add(L.mul(acc, x), L.convert(c))
        return acc

    def compose(self, g):
        """self(g(x))."""
        result = UniPoly._raw([], self.K)
        for c in reversed(self.coeffs):
            result = result * g + UniPoly([c], self.K, convert=False)
        return result

    def derivative(self):
        K = self.K
        return UniPoly([K.mul(K.convert(i), c) for i, c in enumerate(self.coeffs)][1:],
                       K, convert=False)

    def monic(self):
        if not self.coeffs:
            return self
        K = self.K
        lc = self.coeffs[-1]
        if K.is_one(lc):
            return self
        return self.scale(K.inv(lc))

    def map_coeffs(self, fn, L):
        return UniPoly([fn(c) for c in self.coeffs], L, convert=False)

    def change_domain(self, L):
        return UniPoly([L.convert(c) for c in self.coeffs], L, convert=False)

    def reverse(self, n=None):
        """x^n * self(1/x) with n defaulting to the degree."""
        n = self.deg if n is None else n
        c = list(self.coeffs) + [self.K.zero] * (n + 1 - len(self.coeffs))
        return UniPoly(c[: n + 1][::-1], self.K, convert=False)

    def to_str(self, var="x"):
        K = self.K
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if K.is_zero(c):
                continue
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            parts.append(_term(K, c, mono))
        return _join(parts)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"UniPoly({self.to_str()}, {self.K!r})"


def _term(K, c, mono):
    s = K.to_str(c)
    if K.needs_parens(c):
        s = f"({s})"
    if not mono:
        return s
    if s == "1":
        return mono
    if s == "-1":
        return "-" + mono
    return f"{s}*{mono}"


def _join(parts):
    out = parts[0]
    for p in parts[1:]:
        if p.startswith("-"):
            out += " - " + p[1:]
        else:
            out += " + " + p
    return out


class PolyRing(Domain):
    """K[x] as a coefficient domain, elements are ``UniPoly``."""

    def __init__(self, K, var="x"):
        self.K = K
        self.var = var
        self.characteristic = K.characteristic
        self.zero = UniPoly._raw([], K)
        self.one = UniPoly([K.one], K, convert=False)

    def convert(self, x):
        if isinstance(x, UniPoly):
            if x.K != self.K:
                return x.change_domain(self.K)
            return x
        return UniPoly([self.K.convert(x)], self.K, convert=False)

    def gen(self):
        return UniPoly.x(self.K)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def pow(self, a, n):
        return a ** n

    def is_zero(self, a):
        return not a.coeffs

    def is_one(self, a):
        return len(a.coeffs) == 1 and self.K.is_one(a.coeffs[0])

    def exact_quo(self, a, b):
        return a.exact_div(b)

    def to_str(self, a):
        return a.to_str(self.var)

    def needs_parens(self, a):
        return sum(1 for c in a.coeffs if not self.K.is_zero(c)) > 1

    def __eq__(self, other):
        return isinstance(other, PolyRing) and other.K == self.K

    def __hash__(self):
        return hash(("PolyRing", self.K))

    def __repr__(self):
        return f"{self.K!r}[{self.var}]"


def gcd(f, g):
    """Monic gcd over a field (Euclid)."""
    if not f and not g:
        raise DomainError("gcd of two zero polynomials")
    K = f.K
    if not K.is_field:
        raise DomainError("gcd requires coefficients in a field")
    while g:
        f, g = g, f % g
    return f.monic()


def gcdex(f, g):
    """(s, t, h) with s*f + t*g = h = gcd(f, g) monic."""
    K = f.K
    r0, r1 = f, g
    s0, s1 = UniPoly([K.one], K, convert=False), UniPoly._raw([], K)
    t0, t1 = UniPoly._raw([], K), UniPoly([K.one], K, convert=False)
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if not r0:
        raise DomainError("gcd of two zero polynomials")
    inv = K.inv(r0.lc)
    return s0.scale(inv), t0.scale(inv), r0.scale(inv)


def sylvester_matrix(f, g, m=None, n=None):
    """Sylvester matrix for coefficient lists of formal degrees m and n.

    Rows hold the coefficients highest degree first: n shifted copies of f
    followed by m shifted copies of g.
    """
    K = f.K
    m = f.deg if m is None else m
    n = g.deg if n is None else n
    fc = [f[i] for i in range(m, -1, -1)]
    gc = [g[i] for i in range(n, -1, -1)]
    size = m + n
    rows = []
    for i in range(n):
        rows.append([K.zero] * i + fc + [K.zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([K.zero] * i + gc + [K.zero] * (size - n - 1 - i))
    return rows


def resultant(f, g):
    """det Sylvester(f, g), so that res(x - a, x - b) = a - b.

    Over a field the Euclidean recurrence is used; otherwise (e.g. over
    K[a]) the Sylvester determinant by fraction-free Bareiss.
    """
    if not f and not g:
        raise DomainError("undefined resultant")
    if not f or not g:
        return f.K.zero
    if f.K.is_field:
        return resultant_euclid(f, g)
    return resultant_bareiss(f, g)


def resultant_bareiss(f, g, m=None, n=None):
    K = f.K
    m = f.deg if m is None else m
    n = g.deg if n is None else n
    if m == 0 and n == 0:
        return K.one
    if m == 0:
        return K.pow(f[0], n)
    if n == 0:
        return K.pow(g[0], m)
    return bareiss_det(sylvester_matrix(f, g, m, n), K)


def resultant_euclid(f, g):
    """Resultant over a field by the Euclidean remainder sequence."""
    K = f.K
    if not f or not g:
        return K.zero
    acc = K.one
    while True:
        m, n = f.deg, g.deg
        if n == 0:
            return K.mul(acc, K.pow(g.lc, m))
        r = f % g
        if not r:
            return K.zero
        # res(f, g) = (-1)^{mn} lc(g)^{m - deg r} res(g, r)
        if (m * n) % 2:
            acc = K.neg(acc)
        acc = K.mul(acc, K.pow(g.lc, m - r.deg))
        f, g = g, r


def resultant_binary_forms(F, G, m, n):
    """Resultant of binary forms with formal degrees m and n.

    ``F`` and ``G`` are given dehomogenized as polynomials in z = z1/z0,
    so ``F[i]`` is the coefficient of z0^(m-i) z1^i.  Vanishing leading
    coefficients encode roots at infinity and are kept in the matrix.
    """
    if F.deg > m or G.deg > n:
        raise DomainError("form exceeds its formal degree")
    K = F.K
    if m == 0 and n == 0:
        return K.one
    if m == 0:
        return K.pow(F[0], n)
    if n == 0:
        return K.pow(G[0], m)
    if not F or not G:
        return K.zero
    if F.deg == m and G.deg == n and K.is_field:
        return resultant_euclid(F, G)
    return bareiss_det(sylvester_matrix(F, G, m, n), K)


def squarefree_part(f):
    """f / gcd(f, f') made monic."""
    if not f:
        raise DomainError("squarefree part of zero")
    df = f.derivative()
    if not df:
        if f.deg <= 0:
            return f.monic()
        raise DomainError("inseparable input")
    return (f // gcd(f, df)).monic()


def interpolate(points, values, K):
    """Lagrange interpolation over a field."""
    n = len(points)
    result = UniPoly._raw([], K)
    for i in range(n):
        num = UniPoly([K.one], K, convert=False)
        den = K.one
        for j in range(n):
            if i != j:
                num = num * UniPoly([K.neg(points[j]), K.one], K, convert=False)
                den = K.mul(den, K.sub(points[i], points[j]))
        result = result + num.scale(K.div(values[i], den))
    return result
