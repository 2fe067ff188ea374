from __future__ import annotations

import itertools

from heckestab.hyperoct import is_in_B, random_B
from heckestab.perms import Permutation, compose
from heckestab.supports import (
    completed_support,
    compress,
    magnitude,
    profile,
    shrink,
    straighten,
)

from conftest import oracle_broken_points, oracle_support


def _perm0(v):
    return Permutation.from_images0(v)


def test_profile_pinned_example():
    # couple {1,2} maps onto couple {3,4}; the other two couples break
    x = Permutation.from_cycles([(1, 3, 2, 4, 5)])
    pr = profile(x)
    assert pr.support == frozenset({1, 2, 3, 4, 5})
    assert pr.broken == frozenset({2, 3})
    assert pr.broken_points == frozenset({3, 4, 5, 6})


def test_profile_matches_oracles_exhaustive_s4():
    for v in itertools.permutations(range(4)):
        pr = profile(_perm0(v))
        assert {p - 1 for p in pr.support} == oracle_support(v)
        assert {p - 1 for p in pr.broken_points} == oracle_broken_points(v)
        # two points per broken couple, always
        assert 2 * len(pr.broken) == len(pr.broken_points)


def test_broken_size_constant_on_double_cosets(rng):
    for _ in range(300):
        pts = list(range(1, 13))
        rng.shuffle(pts)
        x = Permutation(tuple(pts))
        a, b = random_B(6, rng=rng), random_B(6, rng=rng)
        moved = compose(a, compose(x, b))
        assert len(profile(moved).broken_points) == len(profile(x).broken_points)


def test_straighten_pinned_example():
    x = Permutation.from_cycles([(1, 3, 2)])
    r = straighten(x, 2)
    assert r.result == Permutation.from_cycles([(1, 3, 4, 2)])
    assert r.left.is_identity()
    assert r.right == Permutation.from_cycles([(3, 4)])


def test_straighten_postconditions(rng):
    for _ in range(200):
        pts = list(range(1, 11))
        rng.shuffle(pts)
        x = Permutation(tuple(pts))
        r = straighten(x, 5)
        assert is_in_B(r.left, 5) and is_in_B(r.right, 5)
        assert r.result.pad(10) == compose(r.left, compose(x, r.right)).pad(10)
        pr = profile(r.result)
        # everything still moved is now inside a broken couple
        assert pr.support == pr.broken_points
        assert pr.broken == profile(x).broken


def test_shrink_keeps_product_and_clears_outside(rng):
    for _ in range(200):
        pts = list(range(1, 11))
        rng.shuffle(pts)
        x = Permutation(tuple(pts))
        y = random_B(5, rng=rng) if rng.random() < 0.3 else _shuffled(rng, 10)
        s = shrink(x, y, 5)
        cs = completed_support(x, y)
        assert compose(s.x, s.y).pad(10) == compose(x, y).pad(10)
        assert profile(s.x).support <= cs
        assert profile(s.y).support <= cs
        assert completed_support(s.x, s.y) == cs


def _shuffled(rng, deg):
    pts = list(range(1, deg + 1))
    rng.shuffle(pts)
    return Permutation(tuple(pts))


def test_compress_pinned_example():
    c = compress(
        Permutation.from_cycles([(5, 7)]), Permutation.from_cycles([(5, 7)])
    )
    assert c.x == Permutation.from_cycles([(1, 3)])
    assert c.y == Permutation.from_cycles([(1, 3)])


def test_compress_postconditions(rng):
    for _ in range(200):
        x = _shuffled(rng, 12)
        y = _shuffled(rng, 12)
        m = magnitude(x, y)
        c = compress(x, y)
        assert c.x.degree <= 2 * m and c.y.degree <= 2 * m
        assert magnitude(c.x, c.y) == m
        # the witnesses realize the move back on the original pair
        assert c.x == compose(c.left, compose(x, c.right.inverse())).trim()
        assert c.y == compose(c.right, compose(y, c.left.inverse())).trim()


def test_magnitude_values():
    e = Permutation.identity()
    flip = Permutation.from_cycles([(1, 2)])
    cross = Permutation.from_cycles([(1, 3)])
    assert magnitude(e, e) == 0
    assert magnitude(flip, e) == 2
    assert magnitude(cross, e) == 4
    assert magnitude(cross, cross) == 4


def test_completed_support_couple_closed(rng):
    for _ in range(100):
        x = _shuffled(rng, 10)
        y = _shuffled(rng, 10)
        cs = completed_support(x, y)
        assert all((p - 1 ^ 1) + 1 in cs for p in cs)


def test_cs_outside_point_identities(rng):
    # the three membership identities for points beyond CS(x, y)
    for _ in range(200):
        x = _shuffled(rng, 12)
        y = _shuffled(rng, 12)
        cs = completed_support(x, y)
        for i in range(1, 15):
            if i in cs:
                continue
            j = y.pad(14)(i)
            assert x.pad(14)(j) == i
            assert (i in profile(x).support) == (i in profile(y).support)
            tj = (j - 1 ^ 1) + 1
            ti = (i - 1 ^ 1) + 1
            assert y.pad(14)(ti) == tj
            assert x.pad(14)(tj) == ti
