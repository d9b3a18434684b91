"""Block-wise random-sampling interpolation of h with H = h(g_1, ..., g_beta).

The substitution x_i -> a_i x_sigma(i) turns every g_i into a single term
g_i(a) x^(e_i), so a candidate monomial y^d contributes only to the
x-multidegree sum_i d_i e_i of H(a x_sigma).  Grouping the candidates by
that multidegree splits one large linear system into independent blocks.
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra.domains import QQ
from .algebra.linalg import Inconsistent, RankDeficient, solve
from .algebra.mpoly import MultiPoly


class InterpError(ValueError):
    pass


def _product(g_values, d):
    out = Fraction(1)
    for g, k in zip(g_values, d):
        if k:
            out *= g ** k
    return out


def _rng(seed, attempt, j):
    # string seeds go through sha512, so this is stable across runs
    return random.Random(f"{seed}:{attempt}:{j}")


@dataclass
class InterpProblem:
    """Black-box generators and target on n variables.

    ``generators`` and ``target`` are callables taking a list of n ring
    elements (Fractions or MultiPolys) and using only + - * and integer
    powers.  ``support`` lists candidate exponent vectors d of length beta.
    ``sigma`` maps the n input variables to m substitution variables.
    """

    generators: list
    target: object
    n: int
    support: list
    sigma: list
    extra_rows: int = 5
    bound: int = 10 ** 4
    retries: int = 3
    exponents: list = field(default=None)

    def __post_init__(self):
        self.support = [tuple(int(k) for k in d) for d in self.support]
        if len(set(self.support)) != len(self.support):
            raise InterpError("repeated monomial in support")
        beta = len(self.generators)
        if any(len(d) != beta for d in self.support):
            raise InterpError("support exponents must have one entry per generator")
        if len(self.sigma) != self.n:
            raise InterpError("sigma must assign a variable to every input")
        self.m = max(self.sigma) + 1 if self.sigma else 0
        if self.exponents is None:
            self.exponents = self._induced_exponents()

    def substituted(self, a):
        """The inputs a_i x_sigma(i) as MultiPolys over QQ."""
        xs = MultiPoly.gens(QQ, self.m)
        return [xs[s].scale(Fraction(ai)) for s, ai in zip(self.sigma, a)]

    def _induced_exponents(self):
        """x-exponent of each g_i(a x_sigma); checked on two random a."""
        found = None
        for j in range(2):
            rng = _rng("construct", 0, j)
            a = [_nonzero(rng, self.bound) for _ in range(self.n)]
            xa = self.substituted(a)
            exps = []
            for g in self.generators:
                val = g(xa)
                if not isinstance(val, MultiPoly) or len(val.terms) != 1:
                    raise InterpError("sigma substitution does not give a single term")
                exps.append(next(iter(val.terms)))
            if found is not None and exps != found:
                raise InterpError("sigma substitution exponents depend on the sample")
            found = exps
        return found

    def block_degree(self, d):
        out = [0] * self.m
        for k, e in zip(d, self.exponents):
            for i, v in enumerate(e):
                out[i] += k * v
        return tuple(out)


def _nonzero(rng, bound):
    while True:
        v = rng.randint(-bound, bound)
        if v:
            return v


def plan_blocks(prob):
    """{multidegree: [d, ...]} in first-appearance order of the support."""
    blocks = {}
    for d in prob.support:
        blocks.setdefault(prob.block_degree(d), []).append(d)
    return blocks


def complexity_report(prob):
    blocks = plan_blocks(prob)
    sizes = [len(v) for v in blocks.values()]
    lp = max(sizes, default=0)
    return {"l_p": lp, "blocks": len(blocks), "extra_rows": prob.extra_rows,
            "samples": lp + prob.extra_rows if lp else 0,
            "block_sizes": sorted(sizes, reverse=True)}


@dataclass
class InterpSolution:
    coefficients: dict
    residuals: int
    blocks: int
    samples: int
    attempts: int
    seed: int

    def nonzero(self):
        return {d: c for d, c in self.coefficients.items() if c}

    def to_json(self):
        return {"coefficients": {",".join(map(str, d)): str(c)
                                 for d, c in sorted(self.coefficients.items())},
                "residuals": self.residuals, "blocks": self.blocks,
                "samples": self.samples, "attempts": self.attempts, "seed": self.seed}


def _draw(prob, seed, attempt, count):
    """Rows (g(a), H(a x_sigma)) for ``count`` fresh random points."""
    rows = []
    for j in range(count):
        rng = _rng(seed, attempt, j)
        a = [Fraction(_nonzero(rng, prob.bound)) for _ in range(prob.n)]
        g_values = [Fraction(g(a)) for g in prob.generators]
        rows.append((g_values, prob.target(prob.substituted(a))))
    return rows


def _coefficient(Hx, degree):
    if isinstance(Hx, MultiPoly):
        return Hx.terms.get(degree, Fraction(0))
    # a constant target
    return Fraction(Hx) if not any(degree) else Fraction(0)


def run_interpolation(prob, seed=0):
    blocks = plan_blocks(prob)
    info = complexity_report(prob)
    if not blocks:
        return InterpSolution({}, 0, 0, 0, 0, seed)
    count = info["samples"]
    coeffs = {}
    pending = dict(blocks)
    attempt = 0
    residuals = 0
    rows = None
    while pending:
        if attempt > prob.retries:
            raise InterpError("support hypothesis violated or unlucky grading")
        rows = _draw(prob, seed, attempt, count)
        for degree in list(pending):
            members = pending[degree]
            s = len(members)
            A = [[_product(g, d) for d in members] for g, _ in rows]
            b = [_coefficient(Hx, degree) for _, Hx in rows]
            try:
                sol = solve(A[:s], b[:s], QQ)
            except (RankDeficient, Inconsistent):
                continue
            for r in range(s, count):
                if sum(x * y for x, y in zip(A[r], sol)) != b[r]:
                    residuals += 1
            if residuals:
                raise InterpError(f"support set M too small: {residuals} "
                                  "verification rows disagree")
            coeffs.update(zip(members, sol))
            del pending[degree]
        attempt += 1
    _check_uncovered(prob, blocks, rows)
    return InterpSolution(coeffs, residuals, len(blocks), count, attempt, seed)


def _check_uncovered(prob, blocks, rows):
    """H(a x_sigma) must vanish in multidegrees no candidate can reach."""
    for _, Hx in rows:
        terms = Hx.terms if isinstance(Hx, MultiPoly) else {(0,) * prob.m: Fraction(Hx)}
        for e, c in terms.items():
            if c and e not in blocks:
                raise InterpError(f"support set M too small: H has a term in multidegree {e}")


def solve_whole(prob, seed=0):
    """One |M| x |M| system on the values H(a) (no grading), for comparison."""
    M = prob.support
    for attempt in range(prob.retries + 1):
        A, b = [], []
        for j in range(len(M)):
            rng = _rng(seed, ("whole", attempt), j)
            a = [Fraction(_nonzero(rng, prob.bound)) for _ in range(prob.n)]
            g_values = [Fraction(g(a)) for g in prob.generators]
            A.append([_product(g_values, d) for d in M])
            b.append(Fraction(prob.target(a)))
        try:
            return dict(zip(M, solve(A, b, QQ)))
        except (RankDeficient, Inconsistent):
            continue
    raise InterpError("support hypothesis violated or unlucky grading")


def evaluate_h(coefficients, y):
    return sum((c * _product(y, d) for d, c in coefficients.items()), Fraction(0))


# ----------------------------------------------------------------------
# built-in symmetric-function examples

def _elementary(k):
    def e(v):
        n = len(v)
        acc = [v[0] - v[0] + 1] + [v[0] - v[0]] * k
        for x in v[:n]:
            for i in range(k, 0, -1):
                acc[i] = acc[i] + acc[i - 1] * x
        return acc[k]
    return e


def _power_sum(k):
    def p(v):
        acc = v[0] ** k
        for x in v[1:]:
            acc = acc + x ** k
        return acc
    return p


def power_sum_problem(k, n=None, extra_rows=5):
    """p_k in n variables through e_1..e_k, every degree collapsed onto one x."""
    n = n or k
    gens = [_elementary(i) for i in range(1, k + 1)]
    support = [d for d in _exponents_of_weight(k, list(range(1, k + 1)))]
    return InterpProblem(gens, _power_sum(k), n, support, [0] * n, extra_rows)


def _exponents_of_weight(total, weights):
    if not weights:
        if total == 0:
            yield ()
        return
    w = weights[0]
    for k in range(total // w + 1):
        for rest in _exponents_of_weight(total - k * w, weights[1:]):
            yield (k,) + rest


def newton_expected(k):
    """Coefficients of p_k in e_1..e_k from Newton's identities (k <= n)."""
    # p_k = sum_{i=1}^{k-1} (-1)^(i-1) e_i p_{k-i} + (-1)^(k-1) k e_k
    memo = {}

    def p(m):
        if m in memo:
            return memo[m]
        out = {}
        for i in range(1, m):
            for d, c in p(m - i).items():
                dd = list(d)
                dd[i - 1] += 1
                dd = tuple(dd)
                out[dd] = out.get(dd, 0) + (-1) ** (i - 1) * c
        top = [0] * k
        top[m - 1] = 1
        out[tuple(top)] = out.get(tuple(top), 0) + (-1) ** (m - 1) * m
        memo[m] = {d: c for d, c in out.items() if c}
        return memo[m]

    return {d: Fraction(c) for d, c in p(k).items()}


def demo(seed=0):
    """Recover p_2 = e_1^2 - 2 e_2 in two variables."""
    prob = power_sum_problem(2, 2)
    sol = run_interpolation(prob, seed)
    return {"problem": "p2 from e1, e2 in 2 variables",
            "support": [list(d) for d in prob.support],
            "complexity": complexity_report(prob),
            "solution": sol.to_json(),
            "expected": {",".join(map(str, d)): str(c) for d, c in sorted(newton_expected(2).items())},
            "matches_newton": sol.nonzero() == newton_expected(2)}
