from __future__ import annotations

import pytest

from heckestab.errors import DomainError
from heckestab.verify import SUITES, run_suite


def test_all_suites_pass_at_desk_rank():
    for suite in SUITES:
        results = run_suite(suite, n_max=2)
        assert results, suite
        assert all(r.passed for r in results), [
            (r.name, r.detail) for r in results if not r.passed
        ]
        assert {r.suite for r in results} == {suite}


def test_unknown_suite_rejected():
    with pytest.raises(DomainError):
        run_suite("vibes")


def test_suite_is_seed_deterministic():
    a = run_suite("supports", n_max=2, seed=5)
    b = run_suite("supports", n_max=2, seed=5)
    assert [(r.name, r.passed, r.detail) for r in a] == [
        (r.name, r.passed, r.detail) for r in b
    ]
