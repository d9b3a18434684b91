"""Dense polynomial arithmetic over Z/pZ, pure-Python reference backend.

Polynomials are lists of ints in ``[0, p)``, lowest degree first, with no
trailing zeros (the zero polynomial is ``[]``).  Every function returns a
fresh normalized list and never mutates its arguments.  The compiled
backend in ``_ckernels.pyx`` implements exactly the same functions.
"""


def _strip(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def add(a, b, p):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return _strip(out)


def sub(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return _strip(out)


def scale(a, c, p):
    c %= p
    if c == 0:
        return []
    return [(x * c) % p for x in a]


def mul(a, b, p):
    if not a or not b:
        return []
    if len(a) < len(b):
        a, b = b, a
    out = [0] * (len(a) + len(b) - 1)
    # Python ints do not overflow; reduce once at the end.
    for j, bj in enumerate(b):
        if bj:
            for i, ai in enumerate(a):
                out[i + j] += ai * bj
    return _strip([c % p for c in out])


def divmod_(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], list(a)
    inv = pow(b[-1], -1, p)
    r = list(a)
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = r[k] % p
        if c:
            c = (c * inv) % p
            q[k - db] = c
            off = k - db
            for i in range(db + 1):
                r[off + i] -= c * b[i]
    r = [x % p for x in r[:db]]
    return _strip(q), _strip(r)


def rem(a, b, p):
    return divmod_(a, b, p)[1]


def mulmod(a, b, m, p):
    return rem(mul(a, b, p), m, p)


def powmod(a, e, m, p):
    if e < 0:
        raise ValueError("negative exponent")
    result = rem([1], m, p)
    base = rem(a, m, p)
    while e:
        if e & 1:
            result = mulmod(result, base, m, p)
        e >>= 1
        if e:
            base = mulmod(base, base, m, p)
    return result


def evaluate(a, x, p):
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc
