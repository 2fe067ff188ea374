"""Shared fixtures and from-scratch oracles.

The oracles here deliberately avoid the package's own primitives: coset
types come from a DFS on the couple graph, group membership from the
couple-preservation predicate, convolution counts from literal double
loops over the full symmetric group.  Slow but transparently correct at
the scales the tests apply them.
"""

from __future__ import annotations

import itertools
import random

import pytest


def iter_s(two_n: int):
    """All of S_two_n as 0-indexed image tuples, lexicographic."""
    return itertools.permutations(range(two_n))


def compose0(x, y):
    # (xy)(i) = x(y(i)), right factor first
    return tuple(x[j] for j in y)


def inverse0(x):
    out = [0] * len(x)
    for i, v in enumerate(x):
        out[v] = i
    return tuple(out)


def oracle_in_B(images0) -> bool:
    """Couple preservation: the image of every couple is a couple."""
    x = images0
    return all(x[i ^ 1] == x[i] ^ 1 for i in range(len(x)))


def oracle_B(n: int):
    return [p for p in iter_s(2 * n) if oracle_in_B(p)]


def oracle_type(images0, n: int) -> tuple[int, ...]:
    """Ambient coset type by DFS on the couple graph.

    Vertices 0..2n-1.  Straight edges join couple mates; curved edges
    join the images of couple mates.  Every component has even order,
    and half the component orders, sorted, form the type.
    """
    x = list(images0) + list(range(len(images0), 2 * n))
    adj: list[list[int]] = [[] for _ in range(2 * n)]
    for i in range(n):
        a, b = 2 * i, 2 * i + 1
        adj[a].append(b)
        adj[b].append(a)
        u, v = x[a], x[b]
        adj[u].append(v)
        adj[v].append(u)
    seen = [False] * (2 * n)
    halves = []
    for s in range(2 * n):
        if seen[s]:
            continue
        seen[s] = True
        stack, size = [s], 0
        while stack:
            p = stack.pop()
            size += 1
            for q in adj[p]:
                if not seen[q]:
                    seen[q] = True
                    stack.append(q)
        assert size % 2 == 0
        halves.append(size // 2)
    return tuple(sorted(halves, reverse=True))


def stable(parts) -> tuple[int, ...]:
    """Drop one from each part, discard what vanishes."""
    return tuple(p - 1 for p in parts if p > 1)


def oracle_support(images0) -> set[int]:
    return {i for i, v in enumerate(images0) if v != i}


def oracle_broken_points(images0) -> set[int]:
    """Union of the couples whose image fails to be a couple."""
    x = images0
    pts: set[int] = set()
    for i in range(0, len(x), 2):
        if x[i ^ 1] != x[i] ^ 1:
            pts.update((i, i ^ 1))
    return pts


def brute_double_cosets(n: int):
    """All B_n-double cosets of S_2n as frozensets of image tuples."""
    b = oracle_B(n)
    cosets = []
    placed: set[tuple[int, ...]] = set()
    for x in iter_s(2 * n):
        if x in placed:
            continue
        coset = frozenset(compose0(a, compose0(x, c)) for a in b for c in b)
        placed.update(coset)
        cosets.append(coset)
    return cosets


def brute_conv(mu_st, lam_st, nu_st, n: int) -> int:
    """Structure constant by the defining count, literal double loop.

    Fixes the lexicographically least member z0 of the nu coset and
    counts ordered pairs (x, y) with x in K_mu, y in K_lam, xy = z0.
    Only sane for n = 2.
    """
    mu_st, lam_st, nu_st = tuple(mu_st), tuple(lam_st), tuple(nu_st)
    z0 = min(
        p for p in iter_s(2 * n) if stable(oracle_type(p, n)) == nu_st
    )
    hits = 0
    for x in iter_s(2 * n):
        for y in iter_s(2 * n):
            if compose0(x, y) != z0:
                continue
            if stable(oracle_type(x, n)) != mu_st:
                continue
            if stable(oracle_type(y, n)) == lam_st:
                hits += 1
    return hits


@pytest.fixture
def rng() -> random.Random:
    return random.Random(99173)
