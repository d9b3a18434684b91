"""Exact linear algebra over domains: Bareiss determinant and linear solve."""


class RankDeficient(ArithmeticError):
    """Singular square system; ``rank`` is the rank found by elimination."""

    def __init__(self, rank, message=None):
        self.rank = rank
        super().__init__(message or f"rank-deficient system (rank {rank})")


class Inconsistent(ArithmeticError):
    pass


def bareiss_det(M, K):
    """Determinant of a square matrix over an integral domain K.

    Fraction-free Bareiss elimination with row pivoting; every division is
    exact (``K.exact_quo``), so coefficient growth stays polynomial.
    """
    n = len(M)
    if n == 0:
        return K.one
    A = [list(row) for row in M]
    sign = False
    prev = K.one
    for k in range(n - 1):
        if K.is_zero(A[k][k]):
            for i in range(k + 1, n):
                if not K.is_zero(A[i][k]):
                    A[k], A[i] = A[i], A[k]
                    sign = not sign
                    break
            else:
                return K.zero
        akk = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            row_i, row_k = A[i], A[k]
            for j in range(k + 1, n):
                t = K.sub(K.mul(akk, row_i[j]), K.mul(aik, row_k[j]))
                row_i[j] = K.exact_quo(t, prev) if not K.is_one(prev) else t
            row_i[k] = K.zero
        prev = akk
    det = A[n - 1][n - 1]
    return K.neg(det) if sign else det


def solve(M, b, K):
    """Solve the square system M x = b over a field K.

    Returns the unique solution, raises ``RankDeficient`` (carrying the
    rank) when M is singular.  Plain Gauss-Jordan elimination; the field
    elements are exact so there is no pivoting strategy beyond nonzero.
    """
    n = len(M)
    if any(len(row) != n for row in M) or len(b) != n:
        raise ValueError("solve expects a square system")
    A = [list(row) + [b[i]] for i, row in enumerate(M)]
    rank = 0
    pivots = []
    for col in range(n):
        piv = None
        for r in range(rank, n):
            if not K.is_zero(A[r][col]):
                piv = r
                break
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        inv = K.inv(A[rank][col])
        A[rank] = [K.mul(inv, x) for x in A[rank]]
        for r in range(n):
            if r != rank and not K.is_zero(A[r][col]):
                c = A[r][col]
                A[r] = [K.sub(x, K.mul(c, y)) for x, y in zip(A[r], A[rank])]
        pivots.append(col)
        rank += 1
    if rank < n:
        for r in range(rank, n):
            if not K.is_zero(A[r][n]):
                raise Inconsistent(f"inconsistent system (rank {rank})")
        raise RankDeficient(rank)
    return [A[i][n] for i in range(n)]


def rank(M, K):
    A = [list(row) for row in M]
    if not A:
        return 0
    rows, cols = len(A), len(A[0])
    r = 0
    for col in range(cols):
        piv = next((i for i in range(r, rows) if not K.is_zero(A[i][col])), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = K.inv(A[r][col])
        for i in range(r + 1, rows):
            if not K.is_zero(A[i][col]):
                c = K.mul(A[i][col], inv)
                A[i] = [K.sub(x, K.mul(c, y)) for x, y in zip(A[i], A[r])]
        r += 1
        if r == rows:
            break
    return r


def mat_vec(M, x, K):
    return [K.sum(K.mul(a, b) for a, b in zip(row, x)) for row in M]
