import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mulspec import interp
from mulspec.interp import (InterpError, InterpProblem, complexity_report, evaluate_h,
                            newton_expected, plan_blocks, power_sum_problem, run_interpolation,
                            solve_whole)

E = [interp._elementary(k) for k in (1, 2, 3)]
WEIGHTS = [1, 2, 3]


def _support(max_weight):
    return [d for w in range(max_weight + 1) for d in interp._exponents_of_weight(w, WEIGHTS)]


def _target_from(h):
    def H(v):
        ys = [g(v) for g in E]
        acc = None
        for d, c in h.items():
            term = c
            for y, k in zip(ys, d):
                if k:
                    term = term * y ** k
            acc = term if acc is None else acc + term
        return acc if acc is not None else v[0] - v[0]
    return H


def _random_h(rng, support):
    chosen = rng.sample(support, rng.randint(1, len(support)))
    return {d: Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for d in chosen}


def test_random_round_trips():
    rng = random.Random(2024)
    support = _support(4)
    for trial in range(100):
        h = _random_h(rng, support)
        prob = InterpProblem(E, _target_from(h), 3, support, [0, 0, 0])
        sol = run_interpolation(prob, seed=trial)
        assert sol.nonzero() == {d: c for d, c in h.items() if c}
        assert sol.residuals == 0


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_newton_identities(k):
    sol = run_interpolation(power_sum_problem(k), seed=1)
    assert sol.nonzero() == newton_expected(k)


def test_newton_oracle_small():
    # p3 = e1^3 - 3 e1 e2 + 3 e3
    assert newton_expected(3) == {(3, 0, 0): 1, (1, 1, 0): -3, (0, 0, 1): 3}


@pytest.mark.parametrize("seed", [0, 1, 7])
def test_blocked_equals_whole(seed):
    prob = power_sum_problem(4)
    blocked = run_interpolation(prob, seed).coefficients
    whole = solve_whole(prob, seed)
    assert blocked == whole


def test_determinism():
    prob = power_sum_problem(4)
    a = run_interpolation(prob, 11).to_json()
    b = run_interpolation(power_sum_problem(4), 11).to_json()
    assert a == b
    assert interp.demo(3) == interp.demo(3)


def test_complexity():
    prob = power_sum_problem(4)
    rep = complexity_report(prob)
    # weight-4 partitions into parts 1..4: five candidates, one block
    assert rep == {"l_p": 5, "blocks": 1, "extra_rows": 5, "samples": 10, "block_sizes": [5]}
    prob = InterpProblem(E, _target_from({(0, 0, 0): 1}), 3, _support(3), [0, 0, 0])
    rep = complexity_report(prob)
    assert rep["block_sizes"] == [3, 2, 1, 1]
    assert rep["samples"] == 3 + 5
    empty = InterpProblem(E, _target_from({}), 3, [], [0, 0, 0])
    assert complexity_report(empty)["samples"] == 0
    assert run_interpolation(empty).coefficients == {}


def test_multigraded_blocks():
    # generators x0*x1, x2, x0 with x1 and x2 both sent to the second variable
    gens = [lambda v: v[0] * v[1], lambda v: v[2], lambda v: v[0]]
    h = {(1, 0, 1): Fraction(3), (0, 1, 2): Fraction(-2), (2, 0, 0): Fraction(1, 2)}

    def H(v):
        y = [g(v) for g in gens]
        return 3 * y[0] * y[2] - 2 * y[1] * y[2] ** 2 + Fraction(1, 2) * y[0] ** 2

    support = [(1, 0, 1), (0, 1, 2), (2, 0, 0), (0, 0, 2), (1, 1, 1)]
    prob = InterpProblem(gens, H, 3, support, [0, 1, 1])
    assert prob.exponents == [(1, 1), (0, 1), (1, 0)]
    blocks = plan_blocks(prob)
    assert blocks[(2, 1)] == [(1, 0, 1), (0, 1, 2)]
    assert blocks[(2, 2)] == [(2, 0, 0), (1, 1, 1)]
    sol = run_interpolation(prob, 4)
    assert sol.nonzero() == h
    assert sol.blocks == 3


def test_support_too_small():
    prob = power_sum_problem(4)
    truncated = [d for d in prob.support if d != (0, 0, 0, 1)]
    bad = InterpProblem(prob.generators, prob.target, 4, truncated, [0] * 4)
    with pytest.raises(InterpError, match="support set M too small"):
        run_interpolation(bad)


def test_uncovered_degree_is_flagged():
    prob = InterpProblem(E, _target_from({(0, 1, 0): 1}), 3, [(1, 0, 0)], [0, 0, 0])
    with pytest.raises(InterpError, match="too small"):
        run_interpolation(prob)


def test_invalid_problems():
    with pytest.raises(InterpError, match="single term"):
        InterpProblem(E, E[0], 3, [(1, 0, 0)], [0, 1, 2])
    with pytest.raises(InterpError, match="repeated"):
        InterpProblem(E, E[0], 3, [(1, 0, 0), (1, 0, 0)], [0, 0, 0])
    with pytest.raises(InterpError):
        InterpProblem(E, E[0], 3, [(1, 0)], [0, 0, 0])


@settings(max_examples=25)
@given(st.dictionaries(st.sampled_from(_support(3)), st.integers(-20, 20).map(Fraction),
                       min_size=1), st.integers(0, 10 ** 6))
def test_recovered_h_reproduces_target(h, seed):
    prob = InterpProblem(E, _target_from(h), 3, _support(3), [0, 0, 0])
    sol = run_interpolation(prob, seed)
    rng = random.Random(seed)
    v = [Fraction(rng.randint(-50, 50)) for _ in range(3)]
    y = [g(v) for g in E]
    assert evaluate_h(sol.coefficients, y) == Fraction(_target_from(h)(v))
