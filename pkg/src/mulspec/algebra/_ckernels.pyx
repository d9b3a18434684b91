# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled dense polynomial arithmetic over Z/pZ.

Same contract as ``_pykernels``: int lists, lowest degree first, no
trailing zeros.  Requires ``p < 2**31`` so that a product of two reduced
residues fits in a signed 64-bit accumulator; the dispatcher in
``kernels.py`` routes larger moduli to the Python backend.
"""

from libc.stdlib cimport malloc, free

ctypedef long long i64


cdef inline i64 _inv(i64 a, i64 p):
    cdef i64 t = 0, newt = 1, r = p, newr = a % p, q, tmp
    if newr < 0:
        newr += p
    while newr != 0:
        q = r // newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if r != 1:
        raise ZeroDivisionError("not invertible mod p")
    if t < 0:
        t += p
    return t


cdef i64* _load(list a, Py_ssize_t n, i64 p) except NULL:
    cdef i64* buf = <i64*> malloc((n if n > 0 else 1) * sizeof(i64))
    cdef Py_ssize_t i
    if buf == NULL:
        raise MemoryError()
    for i in range(n):
        buf[i] = (<i64> a[i]) % p
        if buf[i] < 0:
            buf[i] += p
    return buf


cdef list _dump(i64* buf, Py_ssize_t n):
    while n > 0 and buf[n - 1] == 0:
        n -= 1
    return [buf[i] for i in range(n)]


def add(list a, list b, i64 p):
    if len(a) < len(b):
        a, b = b, a
    cdef Py_ssize_t na = len(a), nb = len(b), i
    cdef i64* x = _load(a, na, p)
    try:
        for i in range(nb):
            x[i] = (x[i] + (<i64> b[i])) % p
        return _dump(x, na)
    finally:
        free(x)


def sub(list a, list b, i64 p):
    cdef Py_ssize_t na = len(a), nb = len(b), n = max(na, nb), i
    cdef i64* x = <i64*> malloc((n if n > 0 else 1) * sizeof(i64))
    if x == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            x[i] = 0
        for i in range(na):
            x[i] = (<i64> a[i]) % p
        for i in range(nb):
            x[i] = (x[i] - (<i64> b[i])) % p
            if x[i] < 0:
                x[i] += p
        return _dump(x, n)
    finally:
        free(x)


def scale(list a, i64 c, i64 p):
    c %= p
    if c < 0:
        c += p
    if c == 0:
        return []
    return [((<i64> v) * c) % p for v in a]


def mul(list a, list b, i64 p):
    cdef Py_ssize_t na = len(a), nb = len(b), i, j
    if na == 0 or nb == 0:
        return []
    cdef i64* x = _load(a, na, p)
    cdef i64* y = NULL
    cdef i64* out = NULL
    cdef i64 yj
    try:
        y = _load(b, nb, p)
        out = <i64*> malloc((na + nb - 1) * sizeof(i64))
        if out == NULL:
            raise MemoryError()
        for i in range(na + nb - 1):
            out[i] = 0
        for j in range(nb):
            yj = y[j]
            if yj:
                for i in range(na):
                    out[i + j] = (out[i + j] + x[i] * yj) % p
        return _dump(out, na + nb - 1)
    finally:
        free(x)
        if y != NULL:
            free(y)
        if out != NULL:
            free(out)


cdef tuple _divmod(i64* r, Py_ssize_t na, i64* y, Py_ssize_t nb, i64 p):
    # Reduces r in place; returns (quotient list, remainder length).
    cdef Py_ssize_t db = nb - 1, k, i, off
    cdef i64 inv = _inv(y[db], p), c
    cdef list q = [0] * (na - db)
    for k in range(na - 1, db - 1, -1):
        c = r[k]
        if c:
            c = (c * inv) % p
            q[k - db] = c
            off = k - db
            for i in range(db + 1):
                r[off + i] = (r[off + i] - c * y[i]) % p
                if r[off + i] < 0:
                    r[off + i] += p
    while len(q) > 0 and q[len(q) - 1] == 0:
        q.pop()
    return q, db


def divmod_(list a, list b, i64 p):
    cdef Py_ssize_t na = len(a), nb = len(b)
    if nb == 0:
        raise ZeroDivisionError("polynomial division by zero")
    if na < nb:
        return [], [(<i64> v) % p for v in a]
    cdef i64* r = _load(a, na, p)
    cdef i64* y = NULL
    try:
        y = _load(b, nb, p)
        q, db = _divmod(r, na, y, nb, p)
        return q, _dump(r, db)
    finally:
        free(r)
        if y != NULL:
            free(y)


def rem(list a, list b, i64 p):
    return divmod_(a, b, p)[1]


cdef Py_ssize_t _mulmod_buf(i64* x, Py_ssize_t nx, i64* y, Py_ssize_t ny,
                            i64* m, Py_ssize_t nm, i64* out, i64 p):
    # out must hold nx + ny - 1 entries; returns length of the reduced result.
    cdef Py_ssize_t i, j, n = nx + ny - 1, k, off, dm = nm - 1
    cdef i64 c, inv
    if nx == 0 or ny == 0:
        return 0
    for i in range(n):
        out[i] = 0
    for j in range(ny):
        if y[j]:
            for i in range(nx):
                out[i + j] = (out[i + j] + x[i] * y[j]) % p
    if n >= nm:
        inv = _inv(m[dm], p)
        for k in range(n - 1, dm - 1, -1):
            c = out[k]
            if c:
                c = (c * inv) % p
                off = k - dm
                for i in range(dm + 1):
                    out[off + i] = (out[off + i] - c * m[i]) % p
                    if out[off + i] < 0:
                        out[off + i] += p
        n = dm
    while n > 0 and out[n - 1] == 0:
        n -= 1
    return n


def mulmod(list a, list b, list m, i64 p):
    return rem(mul(a, b, p), m, p)


def powmod(list a, object e, list m, i64 p):
    if e < 0:
        raise ValueError("negative exponent")
    cdef Py_ssize_t nm = len(m), dm, nb, nr, cap, i
    if nm == 0:
        raise ZeroDivisionError("polynomial division by zero")
    dm = nm - 1
    if dm == 0:
        return []
    cdef list base0 = rem(a, m, p)
    cap = 2 * dm + 1
    cdef i64* mm = _load(m, nm, p)
    cdef i64* base = <i64*> malloc(cap * sizeof(i64))
    cdef i64* res = <i64*> malloc(cap * sizeof(i64))
    cdef i64* tmp = <i64*> malloc(cap * sizeof(i64))
    try:
        if base == NULL or res == NULL or tmp == NULL:
            raise MemoryError()
        nb = len(base0)
        for i in range(nb):
            base[i] = base0[i]
        res[0] = 1
        nr = 1
        while e:
            if e & 1:
                nr = _mulmod_buf(res, nr, base, nb, mm, nm, tmp, p)
                for i in range(nr):
                    res[i] = tmp[i]
            e >>= 1
            if e:
                nb = _mulmod_buf(base, nb, base, nb, mm, nm, tmp, p)
                for i in range(nb):
                    base[i] = tmp[i]
        return _dump(res, nr)
    finally:
        free(mm)
        if base != NULL:
            free(base)
        if res != NULL:
            free(res)
        if tmp != NULL:
            free(tmp)


def evaluate(list a, i64 x, i64 p):
    cdef i64 acc = 0
    cdef Py_ssize_t i
    x %= p
    if x < 0:
        x += p
    for i in range(len(a) - 1, -1, -1):
        acc = (acc * x + (<i64> a[i])) % p
    return acc
