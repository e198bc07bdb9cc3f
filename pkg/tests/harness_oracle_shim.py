"""Thin wrapper exposing the exact-rational division solve for tests."""

from fractions import Fraction

from padic_tate.harness import _solve_division_exact


def solve_division(g: dict, f: dict, nvars: int, active: int, d: int, cap: int = 8):
    solved = _solve_division_exact(g, f, nvars, active, d, cap)
    assert solved is not None
    q_sol, r_sol = solved
    return ({k: Fraction(v) for k, v in q_sol.items()},
            {k: Fraction(v) for k, v in r_sol.items()})
