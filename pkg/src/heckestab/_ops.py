"""Zero-indexed one-line kernels shared by counting passes and orbit BFS.

Everything in this module works on plain tuples (or bytes) of 0-indexed
images: ``u[i]`` is the image of point ``i``.  The public ``Permutation``
class is 1-indexed and converts at the boundary; the hot loops stay down
here to avoid object overhead.  In 0-indexed form the partner of a point
is ``point ^ 1`` and couple ``j`` covers points ``2j`` and ``2j + 1``.

Composition follows the package convention: ``compose0(x, y)[i] = x[y[i]]``,
the right factor acts first.
"""

from __future__ import annotations

import itertools
from typing import Iterator

_FACT = [1]
for _i in range(1, 21):
    _FACT.append(_FACT[-1] * _i)


def factorial(m: int) -> int:
    return _FACT[m] if m < len(_FACT) else _slow_factorial(m)


def _slow_factorial(m: int) -> int:
    out = _FACT[-1]
    for i in range(len(_FACT), m + 1):
        out *= i
    return out


def identity0(m: int) -> tuple[int, ...]:
    return tuple(range(m))


def pad0(u, m: int) -> tuple[int, ...]:
    if len(u) >= m:
        return tuple(u)
    return tuple(u) + tuple(range(len(u), m))


def compose0(x, y) -> tuple[int, ...]:
    """(x y)(i) = x(y(i)); inputs must have equal length."""
    return tuple(x[v] for v in y)


def inverse0(u) -> tuple[int, ...]:
    inv = [0] * len(u)
    for i, v in enumerate(u):
        inv[v] = i
    return tuple(inv)


def support_size0(u) -> int:
    return sum(1 for i, v in enumerate(u) if i != v)


def broken_couples0(u) -> list[int]:
    """0-indexed couple ids j whose image pair {u[2j], u[2j+1]} is not a couple.

    The length of u must be even."""
    out = []
    for j in range(len(u) // 2):
        if u[2 * j] ^ 1 != u[2 * j + 1]:
            out.append(j)
    return out


def pack_type_key(sizes) -> int:
    """Pack a multiset of component sizes into an int key (4 bits per size,
    ascending).  Valid for ranks up to 15; mirrored by the JIT kernels."""
    key = 0
    for s in sorted(sizes, reverse=True):
        key = (key << 4) | s
    return key


def type_sizes_from_inv0(v, n: int) -> list[int]:
    """Component sizes (unsorted) of the couple graph read off from v,
    where v must be the one-line form of the INVERSE of the permutation
    whose coset type is wanted.  v must cover 2n points."""
    parent = list(range(n))
    size = [1] * n

    for j in range(n):
        a = v[2 * j] >> 1
        b = v[2 * j + 1] >> 1
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        while parent[b] != b:
            parent[b] = parent[parent[b]]
            b = parent[b]
        if a != b:
            if size[a] < size[b]:
                a, b = b, a
            parent[b] = a
            size[a] += size[b]
    return [size[r] for r in range(n) if parent[r] == r]


def coset_type_sizes0(u, n: int) -> list[int]:
    """Component sizes of the couple graph of u at rank n (u padded as needed)."""
    return type_sizes_from_inv0(inverse0(pad0(u, 2 * n)), n)


def iter_perms0(m: int) -> Iterator[tuple[int, ...]]:
    """All of S_m as 0-indexed tuples, lexicographic order."""
    return itertools.permutations(range(m))


def unrank0(rank: int, m: int) -> list[int]:
    """Permutation of {0..m-1} with the given lexicographic rank."""
    avail = list(range(m))
    out = []
    for i in range(m, 0, -1):
        f = factorial(i - 1)
        d, rank = divmod(rank, f)
        out.append(avail.pop(d))
    return out


def next_perm0(arr: list[int]) -> bool:
    """Advance arr to its lexicographic successor in place; False at the end."""
    i = len(arr) - 2
    while i >= 0 and arr[i] >= arr[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = len(arr) - 1
    while arr[j] <= arr[i]:
        j -= 1
    arr[i], arr[j] = arr[j], arr[i]
    arr[i + 1:] = arr[len(arr) - 1:i:-1]
    return True


def count_pass_py(two_n: int, start: int, stop: int, z0inv, mu_key: int,
                  lam_key: int, supp_filter: int) -> int:
    """Reference counting pass over the lexicographic rank range [start, stop).

    Counts permutations x of S_two_n satisfying all enabled criteria:
    coset type key of x equals mu_key; if lam_key >= 0, the coset type key
    of x^-1 z0 equals lam_key (z0inv is the one-line inverse of the target);
    if supp_filter >= 0, the support size of x equals supp_filter.

    The JIT kernel in _fastops mirrors this loop exactly; tests compare
    full passes of both."""
    n = two_n // 2
    x = unrank0(start, two_n)
    count = 0
    r = start
    while r < stop:
        ok = True
        if supp_filter >= 0:
            s = 0
            for i in range(two_n):
                if x[i] != i:
                    s += 1
            ok = s == supp_filter
        if ok:
            xinv = [0] * two_n
            for i in range(two_n):
                xinv[x[i]] = i
            if pack_type_key(type_sizes_from_inv0(xinv, n)) == mu_key:
                if lam_key < 0:
                    count += 1
                else:
                    v = [z0inv[x[i]] for i in range(two_n)]
                    if pack_type_key(type_sizes_from_inv0(v, n)) == lam_key:
                        count += 1
        r += 1
        if r < stop and not next_perm0(x):
            break
    return count
