"""Coefficient domains.

A domain object knows how to do arithmetic on its elements; the elements
themselves are plain Python values (``int``, ``Fraction``, tuples).  This
keeps the hot paths free of wrapper allocation and lets prime-field
polynomials hand their coefficient lists straight to the mod-p kernels.

Shared interface: ``zero``, ``one``, ``convert``, ``add``, ``sub``, ``mul``,
``neg``, ``pow``, ``is_zero``, ``exact_quo`` and ``to_str``.  Fields also
provide ``inv`` and ``div``; finite fields provide ``order``,
``characteristic`` and ``elements``.
"""

from fractions import Fraction
from math import gcd

from . import kernels


class DomainError(ArithmeticError):
    pass


def is_prime(n):
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # Deterministic for n < 3.3e24.
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Domain:
    is_field = False
    is_finite = False
    is_prime_field = False
    characteristic = 0

    def neg(self, a):
        return self.sub(self.zero, a)

    def pow(self, a, n):
        if n < 0:
            return self.pow(self.inv(a), -n)
        result = self.one
        while n:
            if n & 1:
                result = self.mul(result, a)
            n >>= 1
            if n:
                a = self.mul(a, a)
        return result

    def is_zero(self, a):
        return a == self.zero

    def is_one(self, a):
        return a == self.one

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def exact_quo(self, a, b):
        return self.div(a, b)

    def from_int(self, n):
        return self.convert(n)

    def sum(self, items):
        acc = self.zero
        for x in items:
            acc = self.add(acc, x)
        return acc

    def prod(self, items):
        acc = self.one
        for x in items:
            acc = self.mul(acc, x)
        return acc

    def needs_parens(self, a):
        return False

    def __ne__(self, other):
        return not self == other


class IntegerRing(Domain):
    zero = 0
    one = 1

    def convert(self, x):
        if isinstance(x, Fraction):
            if x.denominator != 1:
                raise DomainError(f"{x} is not an integer")
            return x.numerator
        return int(x)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def exact_quo(self, a, b):
        q, r = divmod(a, b)
        if r:
            raise DomainError(f"{b} does not divide {a}")
        return q

    def gcd(self, a, b):
        return gcd(a, b)

    def to_str(self, a):
        return str(a)

    def __eq__(self, other):
        return isinstance(other, IntegerRing)

    def __hash__(self):
        return hash("ZZ")

    def __repr__(self):
        return "ZZ"


class RationalField(Domain):
    is_field = True

    zero = Fraction(0)
    one = Fraction(1)

    def convert(self, x):
        if isinstance(x, str):
            return Fraction(x.replace(" ", ""))
        return Fraction(x)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("division by zero in QQ")
        return 1 / a

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in QQ")
        return a / b

    def to_str(self, a):
        return str(a)

    def needs_parens(self, a):
        return a.denominator != 1

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


ZZ = IntegerRing()
QQ = RationalField()


class PrimeField(Domain):
    is_field = True
    is_finite = True
    is_prime_field = True

    zero = 0
    one = 1

    def __init__(self, p):
        if not is_prime(p):
            raise DomainError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.order = p
        self.degree = 1

    def convert(self, x):
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        if isinstance(x, str):
            return self.convert(Fraction(x))
        return int(x) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def pow(self, a, n):
        return pow(a, n, self.p)

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def elements(self):
        return range(self.p)

    def random_element(self, rng):
        return rng.randrange(self.p)

    def to_str(self, a):
        return str(a)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


class ExtField(Domain):
    """GF(p^k) as GF(p)[w]/(m(w)).

    Elements are tuples of residues, lowest power first, with trailing
    zeros stripped (zero is ``()``).  Prime-field integers passed to
    ``convert`` embed as constants.
    """

    is_field = True
    is_finite = True

    zero = ()
    one = (1,)

    def __init__(self, p, modulus, check=True, var="w"):
        if not is_prime(p):
            raise DomainError(f"{p} is not prime")
        modulus = [int(c) % p for c in modulus]
        while modulus and modulus[-1] == 0:
            modulus.pop()
        if len(modulus) < 2:
            raise DomainError("extension modulus must have degree >= 1")
        if modulus[-1] != 1:
            inv = pow(modulus[-1], -1, p)
            modulus = [c * inv % p for c in modulus]
        self.p = p
        self.characteristic = p
        self.degree = len(modulus) - 1
        self.order = p ** self.degree
        self.modulus = tuple(modulus)
        self._mod = list(modulus)
        self.var = var
        self.prime_field = PrimeField(p)
        if check:
            from .factor import is_irreducible
            from .upoly import UniPoly
            if not is_irreducible(UniPoly(list(modulus), self.prime_field)):
                raise DomainError("extension modulus is not irreducible")

    def _norm(self, coeffs):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        return tuple(kernels.rem(c, self._mod, self.p))

    def convert(self, x):
        if isinstance(x, tuple):
            return self._norm([c % self.p for c in x])
        if isinstance(x, list):
            return self._norm([int(c) % self.p for c in x])
        c = self.prime_field.convert(x)
        return (c,) if c else ()

    def gen(self):
        return self._norm([0, 1])

    def add(self, a, b):
        return tuple(kernels.add(list(a), list(b), self.p))

    def sub(self, a, b):
        return tuple(kernels.sub(list(a), list(b), self.p))

    def neg(self, a):
        return tuple((-c) % self.p for c in a)

    def mul(self, a, b):
        if not a or not b:
            return ()
        return tuple(kernels.mulmod(list(a), list(b), self._mod, self.p))

    def pow(self, a, n):
        if n < 0:
            a, n = self.inv(a), -n
        return tuple(kernels.powmod(list(a), n, self._mod, self.p))

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("division by zero in extension field")
        # Extended Euclid in GF(p)[w].
        p = self.p
        r0, r1 = list(self._mod), list(a)
        s0, s1 = [], [1]
        while r1:
            q, r = kernels.divmod_(r0, r1, p)
            r0, r1 = r1, r
            s0, s1 = s1, kernels.sub(s0, kernels.mul(q, s1, p), p)
        if len(r0) != 1:
            raise ZeroDivisionError("modulus is not irreducible")
        return self._norm(kernels.scale(s0, pow(r0[0], -1, p), p))

    def frobenius(self, a, times=1):
        return self.pow(a, self.p ** times)

    def in_prime_field(self, a):
        return len(a) <= 1

    def to_prime(self, a):
        if len(a) > 1:
            raise DomainError("element is not in the prime field")
        return a[0] if a else 0

    def elements(self):
        from itertools import product
        for digits in product(range(self.p), repeat=self.degree):
            yield self._norm(list(digits))

    def random_element(self, rng):
        return self._norm([rng.randrange(self.p) for _ in range(self.degree)])

    def to_str(self, a):
        if not a:
            return "0"
        terms = []
        for i in range(len(a) - 1, -1, -1):
            c = a[i]
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = self.var if i == 1 else f"{self.var}^{i}"
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms)

    def needs_parens(self, a):
        return len([c for c in a if c]) > 1

    def __eq__(self, other):
        return (isinstance(other, ExtField) and other.p == self.p
                and other.modulus == self.modulus)

    def __hash__(self):
        return hash(("GFext", self.p, self.modulus))

    def __repr__(self):
        return f"GF({self.p}^{self.degree})"


def _qq_strip(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _qq_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _qq_strip(out)


def _qq_divmod(a, b):
    a = list(a)
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], a
    q = [Fraction(0)] * (len(a) - db)
    lc = b[-1]
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k]
        if c:
            c = c / lc
            q[k - db] = c
            for i in range(db + 1):
                a[k - db + i] -= c * b[i]
    return _qq_strip(q), _qq_strip(a[:db])


def cyclotomic_poly(n):
    """Integer coefficients of the n-th cyclotomic polynomial, low first."""
    if n < 1:
        raise ValueError("n must be positive")
    num = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]
    for d in range(1, n):
        if n % d == 0:
            num, r = _qq_divmod(num, [Fraction(c) for c in cyclotomic_poly(d)])
            assert not r
    return [int(c) for c in num]


class CyclotomicField(Domain):
    """Q(zeta_n) with elements as coefficient tuples in zeta, reduced mod Phi_n."""

    is_field = True

    zero = ()

    def __init__(self, n, var="zeta"):
        self.n = n
        self.var = var
        self._mod = [Fraction(c) for c in cyclotomic_poly(n)]
        self.degree = len(self._mod) - 1
        self.one = (Fraction(1),)

    def _norm(self, coeffs):
        coeffs = _qq_strip([Fraction(c) for c in coeffs])
        if len(coeffs) > self.degree:
            coeffs = _qq_divmod(coeffs, self._mod)[1]
        return tuple(coeffs)

    def convert(self, x):
        if isinstance(x, (tuple, list)):
            return self._norm(x)
        x = Fraction(x)
        return (x,) if x else ()

    def gen(self):
        return self._norm([0, 1])

    def root(self, k):
        """zeta^k."""
        k %= self.n
        return self._norm([0] * k + [1])

    def add(self, a, b):
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return tuple(_qq_strip(out))

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def neg(self, a):
        return tuple(-c for c in a)

    def mul(self, a, b):
        return self._norm(_qq_mul(list(a), list(b)))

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("division by zero in cyclotomic field")
        r0, r1 = list(self._mod), list(a)
        s0, s1 = [], [Fraction(1)]
        while r1:
            q, r = _qq_divmod(r0, r1)
            r0, r1 = r1, r
            qs = _qq_mul(q, s1)
            n = max(len(s0), len(qs))
            s0, s1 = s1, _qq_strip([(s0[i] if i < len(s0) else 0)
                                    - (qs[i] if i < len(qs) else 0)
                                    for i in range(n)])
        c = r0[0]
        return self._norm([x / c for x in s0])

    def is_rational(self, a):
        return len(a) <= 1

    def to_rational(self, a):
        if len(a) > 1:
            raise DomainError("element is not rational")
        return a[0] if a else Fraction(0)

    def to_str(self, a):
        if not a:
            return "0"
        terms = []
        for i in range(len(a) - 1, -1, -1):
            c = a[i]
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = self.var if i == 1 else f"{self.var}^{i}"
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms)

    def needs_parens(self, a):
        return len(a) > 1 or (len(a) == 1 and a[0].denominator != 1)

    def __eq__(self, other):
        return isinstance(other, CyclotomicField) and other.n == self.n

    def __hash__(self):
        return hash(("QQzeta", self.n))

    def __repr__(self):
        return f"QQ(zeta_{self.n})"


def GF(p, k=1, modulus=None, seed=0):
    """GF(p) for k == 1, else GF(p^k) with a given or seeded random modulus."""
    if k == 1 and modulus is None:
        return PrimeField(p)
    if modulus is None:
        from .factor import random_irreducible
        modulus = random_irreducible(p, k, seed).coeffs
        return ExtField(p, modulus, check=False)
    return ExtField(p, modulus)
