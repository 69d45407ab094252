"""Parity between the compiled and pure-Python counting kernels."""

import numpy as np
import pytest

from threecolor import _purecount, pentagon_tower, dodecahedron
from threecolor.coloring import _plan_for, kernel_backend

fast = pytest.importorskip("threecolor._fastcount",
                           reason="compiled kernel not built")


def run_both(g, fixed_map=None, start=0, budget=10 ** 9, limit=0, preset_map=None):
    plan = _plan_for(g)
    n = len(plan.order)
    fixed = np.zeros(n, dtype=np.int8)
    for v, c in (fixed_map or {}).items():
        fixed[plan.pos_of[v]] = c
    preset = np.zeros(n, dtype=np.int8)
    for v, c in (preset_map or {}).items():
        preset[plan.pos_of[v]] = c
    args = (plan.indptr, plan.flat, fixed, preset, start, budget, limit)
    return _purecount.count_colorings(*args), fast.count_colorings(*args)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_full_count_parity_on_towers(k):
    pure, compiled = run_both(pentagon_tower(k))
    assert pure == compiled
    assert pure[0] == 30 * 6 ** (k - 1)


def test_parity_on_dodecahedron():
    pure, compiled = run_both(dodecahedron())
    assert pure == compiled


def test_parity_with_fixed_boundary():
    g = pentagon_tower(2)
    fixed = {g.index(f"v1.{j}"): c for j, c in enumerate((1, 2, 1, 2, 3))}
    pure, compiled = run_both(g, fixed_map=fixed)
    assert pure == compiled
    assert pure[0] == 6


def test_parity_under_budget_exhaustion():
    g = pentagon_tower(3)
    for budget in (0, 1, 17, 500, 10 ** 6):
        pure, compiled = run_both(g, budget=budget)
        assert pure == compiled


def test_parity_with_limit():
    g = pentagon_tower(3)
    for limit in (1, 5, 100):
        pure, compiled = run_both(g, limit=limit)
        assert pure == compiled
        assert pure[0] == limit


def test_parity_with_prefix_start():
    g = pentagon_tower(2)
    plan = _plan_for(g)
    # preset the first three positions with a valid partial coloring
    preset = {plan.order[0]: 1, plan.order[1]: 2, plan.order[2]: 3}
    pure, compiled = run_both(g, start=3, preset_map=preset)
    assert pure == compiled


def test_backend_reports_compiled():
    assert kernel_backend() in ("compiled", "python")
