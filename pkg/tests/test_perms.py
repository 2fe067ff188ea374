from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from heckestab.errors import DomainError
from heckestab.partitions import Partition
from heckestab.perms import Permutation, compose, in_conjugacy_class

from conftest import compose0, iter_s


def test_compose_right_factor_first():
    # hand evaluation on 1..4: y = (3 4) first, then x = (1 3 2)
    x = Permutation.from_cycles([(1, 3, 2)])
    y = Permutation.from_cycles([(3, 4)])
    assert compose(x, y) == Permutation.from_cycles([(1, 3, 4, 2)])


def test_compose_involution_and_identity():
    s = Permutation.from_cycles([(1, 2)])
    assert compose(s, s).is_identity()
    x = Permutation.from_cycles([(1, 4, 2)])
    assert compose(x, Permutation.identity()) == x
    assert compose(Permutation.identity(), x) == x


def test_parse_both_grammars():
    assert Permutation.parse("(1 3 5)(2 4)") == Permutation.from_cycles(
        [(1, 3, 5), (2, 4)]
    )
    assert Permutation.parse("3 2 5 4 1").images == (3, 2, 5, 4, 1)
    assert Permutation.parse("()").is_identity()
    with pytest.raises(DomainError):
        Permutation.parse("(1 2)(2 3)")  # not disjoint
    with pytest.raises(DomainError):
        Permutation.parse("1 1 2")


def test_cycle_string_canonical():
    x = Permutation.parse("(15 17)(9 11 13)(1 3 5 7)")
    assert x.cycle_string() == "(1 3 5 7)(9 11 13)(15 17)"
    assert Permutation.identity().cycle_string() == "()"


def test_pad_trim_support():
    x = Permutation.from_cycles([(2, 3)])
    padded = x.pad(6)
    assert padded.degree == 6
    assert padded.trim() == x
    assert x.support() == frozenset({2, 3})


def test_stable_cycle_type():
    assert Permutation.from_cycles([(1, 2)]).stable_cycle_type() == Partition((1,))
    assert Permutation.identity().stable_cycle_type() == Partition(())
    x = Permutation.from_cycles([(1, 2, 3), (5, 6)])
    assert x.stable_cycle_type() == Partition((2, 1))
    # padding with fixed points never changes the stable type
    assert x.pad(12).stable_cycle_type() == Partition((2, 1))


def test_in_conjugacy_class():
    # the six transpositions of S_4 are exactly C_(1)(4)
    hits = [
        p
        for p in iter_s(4)
        if in_conjugacy_class(Permutation.from_images0(p), Partition((1,)), 4)
    ]
    assert len(hits) == 6


@given(st.permutations(list(range(5))), st.permutations(list(range(5))))
def test_compose_matches_tuple_oracle(a, b):
    x = Permutation.from_images0(a)
    y = Permutation.from_images0(b)
    assert compose(x, y).images0 == compose0(tuple(a), tuple(b))


@given(st.permutations(list(range(6))))
def test_inverse_round_trip(a):
    x = Permutation.from_images0(a)
    assert compose(x, x.inverse()).is_identity()
    assert x.inverse().inverse() == x
