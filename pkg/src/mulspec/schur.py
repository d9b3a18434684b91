"""Partitions, semistandard tableaux and Schur polynomial evaluation.

Two independent evaluation routes:

* ``schur_eval_kostka`` sums monomials over semistandard tableaux.  The
  sum is organised by the branching rule (removing the entries equal to
  the largest letter leaves a horizontal strip), memoised on the
  remaining shape, so repeated values such as (4, 2, 2) are fine.
* ``schur_eval_bialternant`` is the ratio of alternants and requires
  pairwise distinct values.

``schur_eval_jacobi_trudi`` is a third route used as a cross-check.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import product

from .algebra.domains import QQ
from .algebra.linalg import bareiss_det


class SchurError(ValueError):
    pass


def partition(parts):
    """Validated partition with trailing zeros removed."""
    parts = [int(p) for p in parts]
    if any(p < 0 for p in parts):
        raise SchurError("partition parts must be nonnegative")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise SchurError(f"{parts} is not weakly decreasing")
    while parts and parts[-1] == 0:
        parts.pop()
    return tuple(parts)


def conjugate(shape):
    shape = partition(shape)
    return tuple(sum(1 for p in shape if p > j) for j in range(shape[0])) if shape else ()


def ssyt_enumerate(shape, n):
    """All semistandard tableaux of ``shape`` with entries 1..n.

    A tableau is a tuple of rows; rows weakly increase left to right and
    columns strictly increase downward.  Tableaux come out in lexicographic
    order of their row reading word.
    """
    if n < 1:
        raise SchurError("entry bound must be at least 1")
    shape = partition(shape)
    if len(shape) > n:
        return
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    cols = conjugate(shape)
    grid = [[0] * length for length in shape]

    def fill(k):
        if k == len(cells):
            yield tuple(tuple(row) for row in grid)
            return
        r, c = cells[k]
        lo = max(grid[r][c - 1] if c else 1, grid[r - 1][c] + 1 if r else 1)
        hi = n - (cols[c] - 1 - r)
        for v in range(lo, hi + 1):
            grid[r][c] = v
            yield from fill(k + 1)
        grid[r][c] = 0

    yield from fill(0)


def is_semistandard(tableau):
    for row in tableau:
        if any(a > b for a, b in zip(row, row[1:])):
            return False
    for r in range(1, len(tableau)):
        if len(tableau[r]) > len(tableau[r - 1]):
            return False
        if any(tableau[r][c] <= tableau[r - 1][c] for c in range(len(tableau[r]))):
            return False
    return True


def schur_eval_naive(shape, values):
    """Literal sum over tableaux (small cases only)."""
    total = 0
    for t in ssyt_enumerate(shape, len(values)):
        m = 1
        for row in t:
            for v in row:
                m *= values[v - 1]
        total += m
    return total


def _interlacing(lam, k):
    """Partitions mu with at most k parts and lam/mu a horizontal strip."""
    lam = list(lam) + [0]
    ranges = []
    for i in range(min(len(lam) - 1, k)):
        ranges.append(range(lam[i + 1], lam[i] + 1))
    for mu in product(*ranges):
        yield partition(mu)


def schur_eval_kostka(shape, values):
    """Sum over tableaux of prod x_{T(cell)}, exact for any values."""
    shape = partition(shape)
    values = list(values)
    n = len(values)
    if len(shape) > n:
        return 0

    @lru_cache(maxsize=None)
    def s(lam, k):
        # s_lam(values[0], ..., values[k-1])
        if not lam:
            return 1
        if len(lam) > k:
            return 0
        if k == 1:
            return values[0] ** lam[0]
        x = values[k - 1]
        size = sum(lam)
        total = 0
        for mu in _interlacing(lam, k - 1):
            sub = s(mu, k - 1)
            if sub:
                total += sub * x ** (size - sum(mu))
        return total

    return s(shape, n)


def schur_eval_bialternant(shape, values):
    """det(x_i^(lam_j + l - j)) / det(x_i^(l - j)) for distinct values."""
    shape = partition(shape)
    values = [Fraction(v) for v in values]
    l = len(values)
    if len(set(values)) != l:
        raise SchurError("degenerate alternant; use Kostka route")
    if len(shape) > l:
        return Fraction(0)
    lam = list(shape) + [0] * (l - len(shape))
    num = [[x ** (lam[j] + l - 1 - j) for j in range(l)] for x in values]
    den = [[x ** (l - 1 - j) for j in range(l)] for x in values]
    return bareiss_det(num, QQ) / bareiss_det(den, QQ)


def complete_homogeneous(k, values):
    """h_0..h_k at the given values."""
    h = [1] + [0] * k
    for x in values:
        for i in range(1, k + 1):
            h[i] = h[i] + x * h[i - 1]
    return h


def schur_eval_jacobi_trudi(shape, values):
    """det(h_{lam_i - i + j}) evaluated at the values."""
    shape = partition(shape)
    if not shape:
        return 1
    if len(shape) > len(values):
        return 0
    l = len(shape)
    h = complete_homogeneous(shape[0] + l, values)

    def hk(k):
        return h[k] if 0 <= k < len(h) else 0

    M = [[Fraction(hk(shape[i] - i + j)) for j in range(l)] for i in range(l)]
    return bareiss_det(M, QQ)


def sl2_weights(m):
    return list(range(m, -m - 1, -2))


def tensor_positive_weights(d, e):
    """Positive weights of V_d (x) V_e with multiplicity, largest first."""
    if d < 0 or e < 0:
        raise SchurError("d and e must be nonnegative")
    w = [a + b for a in sl2_weights(d) for b in sl2_weights(e) if a + b > 0]
    return sorted(w, reverse=True)
