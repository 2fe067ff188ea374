from __future__ import annotations

import math

import pytest

from heckestab.errors import DomainError
from heckestab.hyperoct import enumerate_B, random_B
from heckestab.orbits import (
    act,
    count_orbits,
    find_orbits,
    k_constant,
    orbit_of,
    phi,
    predict_orbit_size,
)
from heckestab.partitions import Partition
from heckestab.perms import Permutation, compose


def _pair(cx, cy):
    return (Permutation.from_cycles(cx), Permutation.from_cycles(cy))


def test_act_composition_law(rng):
    for action in ("revert", "straight"):
        pair = _pair([(1, 3, 5)], [(2, 4)])
        for _ in range(50):
            a1, b1 = random_B(3, rng=rng), random_B(3, rng=rng)
            a2, b2 = random_B(3, rng=rng), random_B(3, rng=rng)
            one = act(act(pair, (a1, b1), 3, action), (a2, b2), 3, action)
            both = act(pair, (compose(a2, a1), compose(b2, b1)), 3, action)
            assert one == both


def test_phi_is_involutive_intertwiner(rng):
    pair = _pair([(1, 4)], [(2, 3)])
    for _ in range(50):
        a, b = random_B(2, rng=rng), random_B(2, rng=rng)
        left = phi(act(pair, (a, b), 2, "straight"))
        right = act(phi(pair), (a, b), 2, "revert")
        assert left == right
        assert phi(phi(pair)) == pair


def test_identity_pair_orbit_is_the_group_graph():
    res = orbit_of((Permutation.identity(), Permutation.identity()), 2)
    assert res.record.size_at[2] == 8
    assert res.members == frozenset(
        (u.pad(4), u.inverse().pad(4)) for u in enumerate_B(2)
    )


def test_couple_flip_orbit():
    pair = _pair([(1, 2)], [])
    res = orbit_of(pair, 2)
    assert res.record.magnitude == 2
    assert res.record.split_rank == 1
    assert res.record.size_at[2] == 16
    assert predict_orbit_size(res.record, 3) == 144
    assert res.record.k_constant == 2
    assert orbit_of(pair, 3).record.size_at[3] == 144
    assert orbit_of(pair, 4).record.size_at[4] == 1536
    assert predict_orbit_size(res.record, 4) == 1536


def _brute_centralizer_order(x, n):
    xp = x.pad(2 * n)
    return sum(1 for a in enumerate_B(n) if compose(a, xp) == compose(xp, a))


def test_cross_transposition_orbit_matches_stabilizer_count():
    # y = e makes the joint stabilizer a centralizer, countable directly
    pair = _pair([(1, 3)], [])
    sizes = {}
    for n in (2, 3, 4):
        sizes[n] = orbit_of(pair, n).record.size_at[n]
        order = 2**n * math.factorial(n)
        assert sizes[n] * _brute_centralizer_order(pair[0], n) == order * order

    assert sizes == {2: 32, 3: 576, 4: 9216}
    rec = orbit_of(pair, 4).record
    assert rec.magnitude == 4
    assert rec.split_rank == 2
    assert k_constant(rec) == 2
    assert predict_orbit_size(rec, 5) == 153600


def test_prediction_refused_below_magnitude():
    rec = orbit_of(_pair([(1, 3)], []), 2).record
    assert rec.magnitude == 4
    with pytest.raises(DomainError):
        predict_orbit_size(rec, 3)


def test_double_cross_orbit():
    pair = _pair([(1, 3)], [(1, 3)])
    res = orbit_of(pair, 4)
    rec = res.record
    assert rec.magnitude == 4
    assert rec.split_rank == 2
    assert rec.size_at[4] == 4608
    assert rec.product_weight == 0
    assert k_constant(rec) == 4
    assert predict_orbit_size(rec, 5) == 76800


def test_find_orbits_restricted_single():
    p1 = Partition((1,))
    emp = Partition(())
    for n in (2, 3):
        recs = find_orbits(p1, p1, emp, n)
        assert len(recs) == 1
        assert recs[0].size_at[n] == (16 if n == 2 else 288)
    assert count_orbits(p1, p1, emp, 2) == 1


def test_find_orbits_full_target_counts():
    p1 = Partition((1,))
    two = find_orbits(p1, p1, p1, 2, target="full")
    assert sorted(r.size_at[2] for r in two) == [32, 32, 64]
    three = find_orbits(p1, p1, p1, 3, target="full")
    assert len(three) == 10
    assert sum(r.size_at[3] for r in three) == 13824


def test_find_orbits_empty_when_weight_exceeds_rank():
    assert find_orbits(Partition((3,)), Partition(()), Partition(()), 2) == []
