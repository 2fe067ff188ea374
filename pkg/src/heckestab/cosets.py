"""Coset types, the couple graph, double cosets K_mu(n), and class sizes.

The couple graph of x at rank n has vertices 1..2n; straight edges join
the points of each couple, curved edges join the preimages of each
couple.  Every vertex lies on one straight and one curved edge, so the
components are even cycles; half their sizes, sorted, form the coset
type of x, a partition of n.  Subtracting 1 from every part gives the
stable coset type, which does not change under padding and indexes the
double cosets B_n \\ S_2n / B_n uniformly in n.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator

from . import _ops
from .config import DEFAULT_BUDGET
from .errors import ConsistencyError, DomainError, ResourceBudgetError
from .hyperoct import generators_B
from .partitions import Partition
from .perms import Permutation


def coset_type(x: Permutation, n: int) -> Partition:
    """Half-sizes of the couple-graph components; a partition of n."""
    if x.degree > 2 * n:
        raise DomainError(f"degree {x.degree} exceeds 2n = {2 * n}")
    return Partition(_ops.coset_type_sizes0(x.images0, n))


def stable_coset_type(x: Permutation) -> Partition:
    n = (x.degree + 1) // 2
    return coset_type(x, n).stable_form()


@dataclass(frozen=True)
class CosetGraph:
    """Materialized couple graph, mainly for inspection and tests."""

    vertices: tuple[tuple[int, int], ...]  # (i, x(i)) for i = 1..2n
    straight: tuple[tuple[int, int], ...]
    curved: tuple[tuple[int, int], ...]
    components: tuple[tuple[int, ...], ...]


def coset_graph(x: Permutation, n: int) -> CosetGraph:
    if x.degree > 2 * n:
        raise DomainError(f"degree {x.degree} exceeds 2n = {2 * n}")
    xp = x.pad(2 * n)
    inv = xp.inverse()
    vertices = tuple((i, xp(i)) for i in range(1, 2 * n + 1))
    straight = tuple((2 * i - 1, 2 * i) for i in range(1, n + 1))
    curved = tuple(
        tuple(sorted((inv(2 * i - 1), inv(2 * i)))) for i in range(1, n + 1)
    )
    adj: dict[int, list[int]] = {i: [] for i in range(1, 2 * n + 1)}
    for a, b in straight + curved:
        adj[a].append(b)
        adj[b].append(a)
    seen: set[int] = set()
    comps = []
    for start in range(1, 2 * n + 1):
        if start in seen:
            continue
        comp = []
        stack = [start]
        seen.add(start)
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(tuple(sorted(comp)))
    return CosetGraph(vertices, straight, curved, tuple(comps))


def canonical_rep(mu: Partition) -> Permutation:
    """The standard small-support member of the mu double coset.

    Cycle i runs over consecutive odd integers and has length mu_i + 1;
    the result lives in S_{2w}, has support size w = weight(mu), and its
    stable coset type is mu.  All three facts are rechecked on every call.
    """
    cycles = []
    offset = 0
    for part in mu.parts:
        length = part + 1
        cycles.append(tuple(offset + 2 * j + 1 for j in range(length)))
        offset += 2 * length
    rep = Permutation.from_cycles(cycles)
    w = mu.weight
    if (
        len(rep.support()) != w
        or rep.degree > 2 * w
        or stable_coset_type(rep) != mu
    ):
        raise ConsistencyError(f"canonical representative postconditions fail for {mu}")
    return rep


def enumerate_K(
    mu: Partition,
    n: int,
    mode: str = "filter",
    budget: int | None = None,
) -> Iterator[Permutation]:
    """All x in S_2n with stable coset type mu.

    filter mode scans S_2n; closure mode grows the double coset from the
    canonical representative by one-sided generator multiplications.
    Empty (not an error) when weight(mu) > n.
    """
    if mode not in ("filter", "closure"):
        raise DomainError(f"unknown enumeration mode {mode!r}")
    if mu.weight > n:
        return
    limit = DEFAULT_BUDGET if budget is None else budget
    if mode == "filter":
        total = _ops.factorial(2 * n)
        if total > limit:
            raise ResourceBudgetError(
                f"filter enumeration needs {total} elements",
                cost=total,
                budget=limit,
            )
        want = _ops.pack_type_key(mu.ambient_type(n).parts)
        for u in _ops.iter_perms0(2 * n):
            if _ops.pack_type_key(_ops.type_sizes_from_inv0(u, n)) == want:
                # u is the inverse's one-line, but types are inverse-invariant
                yield Permutation.from_images0(u)
    else:
        gens = [_ops.pad0(g.images0, 2 * n) for g in generators_B(n)]
        start = _ops.pad0(canonical_rep(mu).images0, 2 * n)
        seen = {start}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            yield Permutation.from_images0(u)
            for g in gens:
                for v in (_ops.compose0(g, u), _ops.compose0(u, g)):
                    if v not in seen:
                        if len(seen) >= limit:
                            raise ResourceBudgetError(
                                f"double-coset closure exceeded {limit} elements",
                                cost=len(seen) + 1,
                                budget=limit,
                            )
                        seen.add(v)
                        queue.append(v)


def restricted_K(
    mu: Partition,
    m: int,
    n: int,
    mode: str = "filter",
    budget: int | None = None,
) -> Iterator[Permutation]:
    """Members of the mu double coset with support size exactly m."""
    for x in enumerate_K(mu, n, mode=mode, budget=budget):
        if len(x.support()) == m:
            yield x


def conjugacy_class_B(
    x: Permutation, n: int, budget: int | None = None
) -> frozenset[Permutation]:
    """BFS closure of x under conjugation by B_n."""
    if x.degree > 2 * n:
        raise DomainError(f"degree {x.degree} exceeds 2n = {2 * n}")
    limit = DEFAULT_BUDGET if budget is None else budget
    gens = [_ops.pad0(g.images0, 2 * n) for g in generators_B(n)]
    start = _ops.pad0(x.images0, 2 * n)
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for g in gens:
            v = _ops.compose0(g, _ops.compose0(u, g))  # generators are involutions
            if v not in seen:
                if len(seen) >= limit:
                    raise ResourceBudgetError(
                        f"conjugation closure exceeded {limit} elements",
                        cost=len(seen) + 1,
                        budget=limit,
                    )
                seen.add(v)
                queue.append(v)
    return frozenset(Permutation.from_images0(u) for u in seen)


_CLASS_CACHE: dict[tuple[tuple[int, ...], int], tuple[tuple[int, ...], ...]] = {}


def class_members0(
    mu: Partition, n: int, budget: int | None = None
) -> tuple[tuple[int, ...], ...]:
    """The mu double coset in S_2n as 0-indexed one-line tuples, lex order.

    Memoized; counting loops reuse it heavily, so it deliberately
    bypasses the Permutation wrapper.  Small ranks come from one scan of
    S_2n, larger ones from the coset closure whose cost tracks the class
    size instead of (2n)!.
    """
    key = (mu.parts, n)
    hit = _CLASS_CACHE.get(key)
    if hit is not None:
        return hit
    if mu.weight > n:
        _CLASS_CACHE[key] = ()
        return ()
    limit = DEFAULT_BUDGET if budget is None else budget
    total = _ops.factorial(2 * n)
    if total <= 50_000:
        if total > limit:
            raise ResourceBudgetError(
                f"class materialization scans {total} elements",
                cost=total,
                budget=limit,
            )
        want = _ops.pack_type_key(mu.ambient_type(n).parts)
        members = tuple(
            u
            for u in _ops.iter_perms0(2 * n)
            if _ops.pack_type_key(_ops.type_sizes_from_inv0(u, n)) == want
        )
    else:
        members = tuple(
            sorted(
                _ops.pad0(p.images0, 2 * n)
                for p in enumerate_K(mu, n, mode="closure", budget=budget)
            )
        )
    _CLASS_CACHE[key] = members
    return members


_K_FACTOR_CACHE: dict[tuple[int, ...], int] = {}


def k_factor(nu: Partition) -> int:
    """Order of the centralizer of canonical_rep(nu) in B_{w(nu)}.

    Obtained by orbit-stabilizer from the conjugation orbit; this is the
    constant k_nu in the restricted class size formula.
    """
    key = nu.parts
    if key in _K_FACTOR_CACHE:
        return _K_FACTOR_CACHE[key]
    w = nu.weight
    order_b = _ops.factorial(w) << w
    orbit = conjugacy_class_B(canonical_rep(nu), w)
    if order_b % len(orbit):
        raise ConsistencyError(
            f"orbit size {len(orbit)} does not divide |B_{w}| = {order_b}"
        )
    k = order_b // len(orbit)
    _K_FACTOR_CACHE[key] = k
    return k


def restricted_class_size(nu: Partition, n: int) -> int:
    """|K^{w(nu)}_nu(n)| by the closed formula; 0 when the class is empty."""
    w = nu.weight
    if n < w:
        return 0
    k = k_factor(nu)
    num = _ops.factorial(n) << n
    den = k * (_ops.factorial(n - w) << (n - w))
    if num % den:
        raise ConsistencyError(
            f"restricted class size formula is not integral for {nu} at n={n}"
        )
    return num // den


def restricted_members0(
    nu: Partition, n: int, budget: int | None = None
) -> tuple[tuple[int, ...], ...]:
    """K^{w(nu)}_nu(n) as sorted 0-indexed one-line tuples padded to 2n.

    Built by conjugation closure from the canonical representative and
    cross-checked against the closed size formula, so a transitivity
    failure cannot pass silently.
    """
    if nu.weight > n:
        return ()
    cls = conjugacy_class_B(canonical_rep(nu), n, budget=budget)
    members = tuple(sorted(_ops.pad0(p.images0, 2 * n) for p in cls))
    expect = restricted_class_size(nu, n)
    if len(members) != expect:
        raise ConsistencyError(
            f"restricted class of {nu} at n={n}: conjugation closure has "
            f"{len(members)} members, size formula says {expect}"
        )
    return members
