"""Univariate factorization over finite fields.

Squarefree decomposition, distinct-degree factorization and
Cantor-Zassenhaus equal-degree splitting (trace map in characteristic 2).
Works for any finite-field domain exposing ``order`` and
``characteristic``; prime fields go through the compiled kernels.
"""

import random

from . import kernels
from .domains import DomainError
from .upoly import UniPoly, gcd


def _check_finite(K):
    if not getattr(K, "is_finite", False):
        raise DomainError(f"{K!r} is not a finite field")


def _one(K):
    return UniPoly([K.one], K, convert=False)


def powmod(f, e, m):
    """f^e mod m."""
    K = f.K
    if K.is_prime_field:
        return UniPoly._raw(kernels.powmod(f.coeffs, e, m.coeffs, K.p), K)
    result = _one(K) % m
    base = f % m
    while e:
        if e & 1:
            result = (result * base) % m
        e >>= 1
        if e:
            base = (base * base) % m
    return result


def _frobenius_power(K, f, times):
    """x^(q^times) mod f by repeated q-th powering."""
    h = UniPoly.x(K) % f
    for _ in range(times):
        h = powmod(h, K.order, f)
    return h


def _pth_root_coeff(K, c):
    # In GF(p^k) the p-th root is c^(p^(k-1)).
    if K.is_prime_field:
        return c
    return K.pow(c, K.order // K.characteristic)


def _pth_root(f):
    K = f.K
    p = K.characteristic
    coeffs = f.coeffs[::p]
    return UniPoly([_pth_root_coeff(K, c) for c in coeffs], K, convert=False)


def squarefree_decomposition(f):
    """Monic squarefree pieces [(g, m)] with prod g^m = monic(f)."""
    _check_finite(f.K)
    if not f:
        raise DomainError("squarefree decomposition of zero")
    f = f.monic()
    if f.deg <= 0:
        return []
    p = f.K.characteristic
    out = []
    c = gcd(f, f.derivative())
    w = f // c
    i = 1
    while w.deg > 0:
        y = gcd(w, c)
        z = w // y
        if z.deg > 0:
            out.append((z, i))
        i += 1
        w = y
        c = c // y
    if c.deg > 0:
        for g, m in squarefree_decomposition(_pth_root(c)):
            out.append((g, m * p))
    return out


def distinct_degree(f):
    """For squarefree monic f: [(g_d, d)] with g_d the product of degree-d factors."""
    K = f.K
    x = UniPoly.x(K)
    out = []
    h = x % f
    g = f
    d = 0
    while g.deg >= 2 * (d + 1):
        d += 1
        h = powmod(h, K.order, g)
        c = gcd(g, h - x)
        if c.deg > 0:
            out.append((c, d))
            g = g // c
            h = h % g
    if g.deg > 0:
        out.append((g, g.deg))
    return out


def _random_poly(K, n, rng):
    return UniPoly([K.random_element(rng) for _ in range(n)], K, convert=False)


def equal_degree(f, d, rng):
    """Split squarefree monic f whose irreducible factors all have degree d."""
    K = f.K
    if f.deg == d:
        return [f]
    if f.deg < d or f.deg % d:
        raise DomainError("equal-degree splitting got an inconsistent degree")
    q = K.order
    p = K.characteristic
    while True:
        a = _random_poly(K, f.deg, rng)
        if a.deg <= 0:
            continue
        if p == 2:
            # Absolute trace to GF(2): a + a^2 + ... + a^(2^(kd - 1)).
            k = K.degree * d
            t = a % f
            b = t
            for _ in range(k - 1):
                t = (t * t) % f
                b = b + t
        else:
            b = powmod(a, (q ** d - 1) // 2, f) - _one(K)
        g = gcd(f, b) if b else f
        if 0 < g.deg < f.deg:
            return equal_degree(g, d, rng) + equal_degree(f // g, d, rng)


def _sort_key(f):
    return (f.deg, [_coeff_key(c) for c in reversed(f.coeffs)])


def _coeff_key(c):
    return c if isinstance(c, tuple) else (c,)


def factor(f, seed=0):
    """(unit, [(monic irreducible, multiplicity), ...]) over a finite field."""
    K = f.K
    _check_finite(K)
    if not f:
        raise DomainError("cannot factor the zero polynomial")
    unit = f.lc
    if f.deg == 0:
        return unit, []
    rng = random.Random(seed)
    out = []
    for g, m in squarefree_decomposition(f):
        for h, d in distinct_degree(g):
            for piece in equal_degree(h, d, rng):
                out.append((piece, m))
    out.sort(key=lambda t: (_sort_key(t[0]), t[1]))
    return unit, out


def factor_list(f, seed=0):
    return factor(f, seed)[1]


def is_irreducible(f):
    """Rabin's test over a finite field."""
    K = f.K
    _check_finite(K)
    n = f.deg
    if n < 1:
        return False
    if n == 1:
        return True
    f = f.monic()
    x = UniPoly.x(K)
    if _frobenius_power(K, f, n) != x % f:
        return False
    for r in _prime_divisors(n):
        h = _frobenius_power(K, f, n // r)
        if gcd(f, h - x).deg > 0:
            return False
    return True


def _prime_divisors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def random_irreducible(p, k, seed=0):
    """Seeded random monic irreducible polynomial of degree k over GF(p)."""
    from .domains import PrimeField
    if k < 1:
        raise ValueError("degree must be at least 1")
    F = PrimeField(p)
    rng = random.Random(seed)
    while True:
        coeffs = [rng.randrange(p) for _ in range(k)] + [1]
        f = UniPoly(coeffs, F, convert=False)
        if k == 1 or (coeffs[0] and is_irreducible(f)):
            return f


def roots_in_field(f, seed=0):
    """Roots of f in its coefficient field, repeated by multiplicity, sorted."""
    K = f.K
    _check_finite(K)
    if not f:
        raise DomainError("roots of the zero polynomial")
    if f.deg <= 0:
        return []
    rng = random.Random(seed)
    x = UniPoly.x(K)
    roots = []
    for g, m in squarefree_decomposition(f):
        h = powmod(x, K.order, g)
        lin = gcd(g, h - x)
        if lin.deg <= 0:
            continue
        for piece in equal_degree(lin, 1, rng):
            roots.extend([K.neg(piece[0])] * m)
    roots.sort(key=_coeff_key)
    return roots


def minimal_polynomial(a, F):
    """Minimal polynomial over the prime field of an element of GF(p^k)."""
    from .domains import PrimeField
    P = PrimeField(F.characteristic)
    if F.is_prime_field:
        return UniPoly([-a % F.p, 1], P, convert=False)
    conj = [a]
    b = F.pow(a, F.p)
    while b != a:
        conj.append(b)
        b = F.pow(b, F.p)
    poly = UniPoly([F.one], F, convert=False)
    for c in conj:
        poly = poly * UniPoly([F.neg(c), F.one], F, convert=False)
    return UniPoly([F.to_prime(c) for c in poly.coeffs], P, convert=False)
