"""Sparse multivariate polynomials in graded-lex order."""

from .domains import Domain, DomainError
from .upoly import UniPoly, _join, _term


def _grlex(e):
    return (sum(e), e)


class MultiPoly:
    """Polynomial in ``nvars`` variables as ``{exponent tuple: coeff}``.

    Zero coefficients are never stored.  Treated as immutable.
    """

    __slots__ = ("terms", "K", "nvars")

    def __init__(self, terms, K, nvars, convert=True):
        clean = {}
        for e, c in terms.items():
            if convert:
                c = K.convert(c)
            if not K.is_zero(c):
                if len(e) != nvars:
                    raise DomainError("exponent length does not match nvars")
                clean[tuple(e)] = c
        self.terms = clean
        self.K = K
        self.nvars = nvars

    @classmethod
    def _raw(cls, terms, K, nvars):
        obj = cls.__new__(cls)
        obj.terms = terms
        obj.K = K
        obj.nvars = nvars
        return obj

    @classmethod
    def gens(cls, K, nvars):
        out = []
        for i in range(nvars):
            e = [0] * nvars
            e[i] = 1
            out.append(cls._raw({tuple(e): K.one}, K, nvars))
        return out

    @classmethod
    def const(cls, c, K, nvars):
        return cls({(0,) * nvars: c}, K, nvars)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.K != self.K or other.nvars != self.nvars:
                raise DomainError("mixed polynomial rings")
            return other
        return MultiPoly({(0,) * self.nvars: other}, self.K, self.nvars)

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return (self.nvars == other.nvars and self.K == other.K
                    and self.terms == other.terms)
        try:
            return self.terms == self._coerce(other).terms
        except (TypeError, ValueError, DomainError):
            return NotImplemented

    def __hash__(self):
        return hash((tuple(sorted(self.terms.items(), key=lambda t: _grlex(t[0]))),
                     self.nvars))

    def __add__(self, other):
        other = self._coerce(other)
        K = self.K
        out = dict(self.terms)
        for e, c in other.terms.items():
            if e in out:
                s = K.add(out[e], c)
                if K.is_zero(s):
                    del out[e]
                else:
                    out[e] = s
            else:
                out[e] = c
        return MultiPoly._raw(out, K, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        K = self.K
        return MultiPoly._raw({e: K.neg(c) for e, c in self.terms.items()}, K, self.nvars)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            return self.scale(self.K.convert(other))
        other = self._coerce(other)
        K = self.K
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = K.mul(c1, c2)
                if e in out:
                    out[e] = K.add(out[e], c)
                else:
                    out[e] = c
        return MultiPoly._raw({e: c for e, c in out.items() if not K.is_zero(c)},
                              K, self.nvars)

    __rmul__ = __mul__

    def scale(self, c):
        K = self.K
        if K.is_zero(c):
            return MultiPoly._raw({}, K, self.nvars)
        out = {}
        for e, x in self.terms.items():
            y = K.mul(c, x)
            if not K.is_zero(y):
                out[e] = y
        return MultiPoly._raw(out, K, self.nvars)

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = MultiPoly.const(self.K.one, self.K, self.nvars)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def leading_term(self):
        e = max(self.terms, key=_grlex)
        return e, self.terms[e]

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree(self, var):
        if not self.terms:
            return -1
        return max(e[var] for e in self.terms)

    def is_homogeneous(self, weights=None):
        weights = weights or (1,) * self.nvars
        degs = {sum(w * a for w, a in zip(weights, e)) for e in self.terms}
        return len(degs) <= 1

    def divmod(self, other):
        """Multivariate division by a single divisor in grlex order."""
        K = self.K
        other = self._coerce(other)
        if not other.terms:
            raise ZeroDivisionError("polynomial division by zero")
        le, lc = other.leading_term()
        one_lc = K.is_one(lc)
        q = {}
        r = {}
        p = self
        while p.terms:
            e, c = p.leading_term()
            if all(a >= b for a, b in zip(e, le)):
                coeff = c if one_lc else K.exact_quo(c, lc)
                m = tuple(a - b for a, b in zip(e, le))
                q[m] = coeff
                p = p - other * MultiPoly._raw({m: coeff}, K, self.nvars)
            else:
                r[e] = c
                p = MultiPoly._raw({k: v for k, v in p.terms.items() if k != e},
                                   K, self.nvars)
        return MultiPoly._raw(q, K, self.nvars), MultiPoly._raw(r, K, self.nvars)

    def exact_div(self, other):
        q, r = self.divmod(other)
        if r:
            raise DomainError("multivariate division is not exact")
        return q

    def derivative(self, var):
        K = self.K
        out = {}
        for e, c in self.terms.items():
            if e[var]:
                d = list(e)
                d[var] -= 1
                y = K.mul(K.convert(e[var]), c)
                if not K.is_zero(y):
                    out[tuple(d)] = y
        return MultiPoly._raw(out, K, self.nvars)

    def subs(self, mapping):
        """Substitute K-values for some variables; keeps the arity."""
        K = self.K
        out = {}
        for e, c in self.terms.items():
            d = list(e)
            for var, val in mapping.items():
                if e[var]:
                    c = K.mul(c, K.pow(val, e[var]))
                d[var] = 0
            d = tuple(d)
            out[d] = K.add(out[d], c) if d in out else c
        return MultiPoly._raw({e: c for e, c in out.items() if not K.is_zero(c)},
                              K, self.nvars)

    def evaluate(self, values, L=None):
        """Full evaluation at a point; values in K or in a domain L."""
        L = L or self.K
        acc = L.zero
        for e, c in self.terms.items():
            t = L.convert(c)
            for v, a in zip(values, e):
                if a:
                    t = L.mul(t, L.pow(v, a))
            acc = L.add(acc, t)
        return acc

    def compose(self, values, ring):
        """Substitute ring elements (supporting + and *) for every variable."""
        acc = ring.zero
        cache = {}
        for e, c in self.terms.items():
            t = ring.convert(c)
            for i, a in enumerate(e):
                if a:
                    key = (i, a)
                    if key not in cache:
                        cache[key] = ring.pow(values[i], a)
                    t = ring.mul(t, cache[key])
            acc = ring.add(acc, t)
        return acc

    def to_univariate(self, var, inner=None):
        """UniPoly in ``var`` with coefficients in ``inner``.

        The default inner ring keeps all variables (``var`` exponent zero).
        Passing ``inner=PolyRing(K)`` is allowed when exactly one other
        variable remains.
        """
        from .upoly import PolyRing
        K = self.K
        if inner is None:
            inner = MPolyRing(K, self.nvars)
        buckets = {}
        for e, c in self.terms.items():
            d = list(e)
            k = d[var]
            d[var] = 0
            buckets.setdefault(k, {})[tuple(d)] = c
        n = max(buckets) + 1 if buckets else 0
        coeffs = []
        for k in range(n):
            terms = buckets.get(k, {})
            if isinstance(inner, PolyRing):
                others = [i for i in range(self.nvars) if i != var]
                if len(others) != 1:
                    raise DomainError("PolyRing coefficients need one remaining variable")
                j = others[0]
                deg = max((e[j] for e in terms), default=-1)
                cl = [K.zero] * (deg + 1)
                for e, c in terms.items():
                    cl[e[j]] = c
                coeffs.append(UniPoly(cl, K, convert=False))
            else:
                coeffs.append(MultiPoly._raw(terms, K, self.nvars))
        return UniPoly(coeffs, inner, convert=False)

    def homogenize(self, degree=None):
        """Append a homogenizing variable at the end."""
        D = self.total_degree() if degree is None else degree
        out = {}
        for e, c in self.terms.items():
            s = sum(e)
            if s > D:
                raise DomainError("degree exceeds homogenization degree")
            out[e + (D - s,)] = c
        return MultiPoly._raw(out, self.K, self.nvars + 1)

    def change_domain(self, L):
        return MultiPoly({e: L.convert(c) for e, c in self.terms.items()}, L,
                         self.nvars, convert=False)

    def map_coeffs(self, fn, L):
        return MultiPoly({e: fn(c) for e, c in self.terms.items()}, L, self.nvars,
                         convert=False)

    def coeff(self, e):
        return self.terms.get(tuple(e), self.K.zero)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: _grlex(t[0]), reverse=True)

    def to_str(self, names=None):
        names = names or [f"x{i}" for i in range(self.nvars)]
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(n if a == 1 else f"{n}^{a}"
                            for n, a in zip(names, e) if a)
            parts.append(_term(self.K, c, mono))
        return _join(parts)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"MultiPoly({self.to_str()}, {self.K!r})"


class MPolyRing(Domain):
    """K[x_0, ..., x_{n-1}] as a coefficient domain."""

    def __init__(self, K, nvars, names=None):
        self.K = K
        self.nvars = nvars
        self.names = list(names) if names else [f"x{i}" for i in range(nvars)]
        self.characteristic = K.characteristic
        self.zero = MultiPoly._raw({}, K, nvars)
        self.one = MultiPoly._raw({(0,) * nvars: K.one}, K, nvars)

    def gens(self):
        return MultiPoly.gens(self.K, self.nvars)

    def convert(self, x):
        if isinstance(x, MultiPoly):
            if x.nvars != self.nvars:
                raise DomainError("arity mismatch")
            return x if x.K == self.K else x.change_domain(self.K)
        return MultiPoly({(0,) * self.nvars: self.K.convert(x)}, self.K, self.nvars,
                         convert=False)

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
        return not a.terms

    def is_one(self, a):
        return a == self.one

    def exact_quo(self, a, b):
        return a.exact_div(b)

    def to_str(self, a):
        return a.to_str(self.names)

    def needs_parens(self, a):
        return len(a.terms) > 1

    def __eq__(self, other):
        return (isinstance(other, MPolyRing) and other.K == self.K
                and other.nvars == self.nvars)

    def __hash__(self):
        return hash(("MPolyRing", self.K, self.nvars))

    def __repr__(self):
        return f"{self.K!r}[{','.join(self.names)}]"
