from __future__ import annotations

import random

from heckestab.hyperoct import (
    enumerate_B,
    generators_B,
    is_in_B,
    partner,
    random_B,
    t_n,
)
from heckestab.perms import Permutation, compose

from conftest import oracle_B, oracle_in_B


def test_partner_is_the_couple_mate():
    assert [partner(k) for k in range(1, 7)] == [2, 1, 4, 3, 6, 5]


def test_t_n_is_the_couple_product():
    assert t_n(3) == Permutation.parse("(1 2)(3 4)(5 6)")


def test_membership_matches_couple_oracle_exhaustive():
    for n in (1, 2):
        got = {p.images0 for p in enumerate_B(n)}
        assert got == {p for p in oracle_B(n)}
        # and the predicate agrees pointwise on the whole of S_2n
        import itertools

        for v in itertools.permutations(range(2 * n)):
            assert is_in_B(Permutation.from_images0(v), n) == oracle_in_B(v)


def test_order_is_2n_n_factorial():
    assert sum(1 for _ in enumerate_B(3)) == 48
    assert sum(1 for _ in enumerate_B(4)) == 384


def test_membership_is_centralizer_condition(rng):
    # x lies in B_n exactly when it commutes with t_n
    t = t_n(4)
    pts = list(range(1, 9))
    for _ in range(200):
        rng.shuffle(pts)
        x = Permutation(tuple(pts))
        commutes = compose(x, t) == compose(t, x)
        assert is_in_B(x, 4) == commutes


def test_generators_generate():
    gens = generators_B(3)
    frontier = {Permutation.identity(6).images0}
    group = set(frontier)
    while frontier:
        nxt = set()
        for u in frontier:
            for g in gens:
                w = compose(g, Permutation.from_images0(u)).pad(6).images0
                if w not in group:
                    group.add(w)
                    nxt.add(w)
        frontier = nxt
    assert len(group) == 48


def test_random_B_closure_and_determinism():
    for seed in range(50):
        assert is_in_B(random_B(6, seed=seed), 6)
    a = random_B(5, rng=random.Random(7))
    b = random_B(5, rng=random.Random(7))
    assert a == b
