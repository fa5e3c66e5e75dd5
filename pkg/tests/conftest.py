"""Shared fixtures.

The reproduction suite (``run_papercheck``) takes ~20s, so it runs once per
session and every test that needs a check result reads from the cached dict.
"""
import pytest

from ograph_pursuit.papercheck import run_papercheck
from ograph_pursuit.solver import GameSpec, solve_game


@pytest.fixture(scope="session")
def papercheck_results():
    """All thirteen checks, keyed by check id.  Deterministic at seed 0."""
    return {r.check_id: r for r in run_papercheck(jobs=2, seed=0)}


@pytest.fixture
def audited_solve():
    """Solve and then audit the fixpoint equations before returning the table."""
    def run(D, k, **kwargs):
        table = solve_game(D, GameSpec(k=k, **kwargs))
        table.verify_recurrence()
        return table
    return run
