"""Two-sided hyperoctahedral actions on pairs and their orbits.

B_n x B_n acts on pairs of permutations of {1..2n} two ways:

* straightforward: (a, b) . (x, y) = (a x b^-1, a y b^-1)
* reverted:        (a, b) . (x, y) = (a x b^-1, b y a^-1)

The map (x, y) -> (x, y^-1) swaps the two, so all size bookkeeping is
shared.  Orbits are explored by BFS over the involutive generator set of
B_n; pairs are stored as concatenated 0-indexed one-line strings, or for
2n <= 8 packed into one uint64 per pair so whole frontiers move through
numpy at once.

An orbit at rank n determines a record carrying its magnitude m, product
weight, exact BFS sizes, and two derived constants:

* split_rank s: half the smallest completed-support size over the orbit
  members.  |CS| is not constant along an orbit (couples can be broken
  apart and rejoined by two-sided moves), so the minimum is what the
  stabilizer actually preserves; it drives the growth factor below.
* k_constant k: extracted at rank m by
      k = (2^m m!)^2 / (|L(m)| * 2^(m-s) (m-s)!)
  after which |L(n)| = (2^n n!)^2 / (k * 2^(n-s) (n-s)!) for n >= m.
  Predictions below rank m are refused: small ranks are served by BFS.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import numpy as np

from . import _ops
from .config import DEFAULT_BUDGET
from .cosets import enumerate_K, restricted_members0
from .errors import ConsistencyError, DomainError, ResourceBudgetError
from .hyperoct import generators_B, is_in_B
from .partitions import Partition
from .perms import Permutation
from .supports import completed_support, compress, magnitude

Pair = tuple[Permutation, Permutation]

ACTIONS = ("straight", "revert")


def act(pair: Pair, ab: Pair, n: int, action: str = "revert") -> Pair:
    """Apply (a, b) to (x, y) under the chosen action."""
    if action not in ACTIONS:
        raise DomainError(f"unknown action {action!r}")
    a, b = ab
    if not is_in_B(a, n) or not is_in_B(b, n):
        raise DomainError(f"multipliers must lie in B_{n}")
    x, y = pair
    if x.degree > 2 * n or y.degree > 2 * n:
        raise DomainError(f"pair degrees exceed 2n = {2 * n}")
    binv = b.inverse()
    if action == "straight":
        return ((a * x * binv).trim(), (a * y * binv).trim())
    return ((a * x * binv).trim(), (b * y * a.inverse()).trim())


def phi(pair: Pair) -> Pair:
    """The involution (x, y) -> (x, y^-1) intertwining the two actions."""
    return (pair[0], pair[1].inverse())


@dataclass
class OrbitRecord:
    representative: Pair  # compressed, lexicographically minimal member
    magnitude: int
    product_weight: int
    action: str
    size_at: dict[int, int] = field(default_factory=dict)
    split_rank: int | None = None
    k_constant: int | None = None


@dataclass
class OrbitResult:
    members: frozenset[Pair]
    record: OrbitRecord


def _moves0(n: int, action: str) -> list[tuple[str, tuple[int, ...]]]:
    """Generator moves as (kind, g) with kind encoding which side acts where.

    Every generator g of B_n is an involution, so acting by (g, e) and
    (e, g) for all g covers a full generating set of B_n x B_n.
    kind "lr": x <- g x, y <- y g;  kind "rl": x <- x g, y <- g y
    (reverted), while straight uses "ll" (both left) and "rr" (both right).
    """
    gens = [_ops.pad0(g.images0, 2 * n) for g in generators_B(n)]
    if action == "revert":
        return [("lr", g) for g in gens] + [("rl", g) for g in gens]
    return [("ll", g) for g in gens] + [("rr", g) for g in gens]


def _apply_move0(x0, y0, kind: str, g):
    if kind == "lr":
        return _ops.compose0(g, x0), _ops.compose0(y0, g)
    if kind == "rl":
        return _ops.compose0(x0, g), _ops.compose0(g, y0)
    if kind == "ll":
        return _ops.compose0(g, x0), _ops.compose0(g, y0)
    return _ops.compose0(x0, g), _ops.compose0(y0, g)


def _pair_cs_half(x0, y0) -> int:
    """|CS(x, y)| / 2 computed directly on 0-indexed one-line forms."""
    two_n = len(x0)
    cs = set()
    for i in range(two_n):
        v = x0[y0[i]]
        if v != i:
            cs.add(i)
            cs.add(i ^ 1)
    for u in (x0, y0):
        for j in range(two_n // 2):
            if u[2 * j] ^ 1 != u[2 * j + 1]:
                cs.add(2 * j)
                cs.add(2 * j + 1)
    return len(cs) // 2


def orbit_of(
    pair: Pair,
    n: int,
    action: str = "revert",
    budget: int | None = None,
) -> OrbitResult:
    """BFS closure of the pair under B_n x B_n; exact size and record.

    The record's split_rank is filled only when n equals the orbit
    magnitude, which is the rank constants are extracted at.
    """
    if action not in ACTIONS:
        raise DomainError(f"unknown action {action!r}")
    x, y = pair
    if x.degree > 2 * n or y.degree > 2 * n:
        raise DomainError(f"pair degrees exceed 2n = {2 * n}")
    limit = DEFAULT_BUDGET if budget is None else budget
    two_n = 2 * n
    moves = _moves0(n, action)
    start = (_ops.pad0(x.images0, two_n), _ops.pad0(y.images0, two_n))
    seen: set[tuple[tuple[int, ...], tuple[int, ...]]] = {start}
    queue = deque([start])
    best = start
    min_cs = _pair_cs_half(*start)
    while queue:
        x0, y0 = queue.popleft()
        for kind, g in moves:
            nxt = _apply_move0(x0, y0, kind, g)
            if nxt not in seen:
                if len(seen) >= limit:
                    raise ResourceBudgetError(
                        f"orbit BFS exceeded budget with {len(seen)} members found",
                        cost=len(seen) + 1,
                        budget=limit,
                    )
                seen.add(nxt)
                queue.append(nxt)
                if nxt < best:
                    best = nxt
                cs = _pair_cs_half(*nxt)
                if cs < min_cs:
                    min_cs = cs
    best_pair = (Permutation.from_images0(best[0]), Permutation.from_images0(best[1]))
    comp = compress(*best_pair)
    record = OrbitRecord(
        representative=(comp.x, comp.y),
        magnitude=magnitude(*best_pair),
        product_weight=len((best_pair[0] * best_pair[1]).support()),
        action=action,
        size_at={n: len(seen)},
    )
    if n == record.magnitude:
        record.split_rank = min_cs
    members = frozenset(
        (Permutation.from_images0(u).trim(), Permutation.from_images0(v).trim())
        for u, v in seen
    )
    return OrbitResult(members=members, record=record)


def k_constant(record: OrbitRecord, budget: int | None = None) -> int:
    """The orbit constant k, extracted at rank m = magnitude.

    Requires a BFS at rank m (reused if the record already carries it
    along with the split rank).  Integrality and positivity are hard
    requirements; violations raise rather than round.
    """
    if record.k_constant is not None:
        return record.k_constant
    m = record.magnitude
    if m not in record.size_at or record.split_rank is None:
        res = orbit_of(record.representative, m, record.action, budget=budget)
        if res.record.magnitude != m:
            raise ConsistencyError(
                "compressed representative changed magnitude: "
                f"{res.record.magnitude} != {m}"
            )
        record.size_at[m] = res.record.size_at[m]
        record.split_rank = res.record.split_rank
    size_m = record.size_at[m]
    s = record.split_rank
    num = (_ops.factorial(m) << m) ** 2
    den = size_m * (_ops.factorial(m - s) << (m - s))
    if num % den:
        raise ConsistencyError(
            f"orbit constant is not integral: (2^{m} {m}!)^2 / "
            f"({size_m} * 2^{m - s} ({m - s})!)"
        )
    k = num // den
    if k <= 0:
        raise ConsistencyError(f"orbit constant must be positive, got {k}")
    record.k_constant = k
    return k


def predict_orbit_size(record: OrbitRecord, n: int, budget: int | None = None) -> int:
    """Formula size of the orbit at rank n; refuses n below the magnitude."""
    if n < record.magnitude:
        raise DomainError(
            f"orbit size formula is only trusted for n >= magnitude "
            f"({record.magnitude}); BFS serves smaller ranks"
        )
    k = k_constant(record, budget=budget)
    s = record.split_rank
    num = (_ops.factorial(n) << n) ** 2
    den = k * (_ops.factorial(n - s) << (n - s))
    if num % den:
        raise ConsistencyError(f"predicted orbit size at n={n} is not integral")
    return num // den


def _pack0(u) -> int:
    """High-nibble-first packing, so integer order equals lexicographic order."""
    key = 0
    for v in u:
        key = (key << 4) | v
    return key


def _unpack0(key: int, two_n: int) -> tuple[int, ...]:
    out = [0] * two_n
    for i in range(two_n - 1, -1, -1):
        out[i] = key & 15
        key >>= 4
    return tuple(out)


def _np_value_map(arr, table, shifts):
    """x -> g x on packed perms: remap every nibble through the 16-entry table."""
    out = np.zeros_like(arr)
    f15 = np.uint64(15)
    for sh in shifts:
        out |= table[(arr >> sh) & f15] << sh
    return out


def _np_field_gather(arr, g, shifts):
    """x -> x g on packed perms: nibble i of the result is nibble g[i]."""
    out = np.zeros_like(arr)
    f15 = np.uint64(15)
    for i, gi in enumerate(g):
        out |= ((arr >> shifts[gi]) & f15) << shifts[i]
    return out


class _PackedMover:
    """Vectorized generator moves on uint64-packed pairs (needs 2n <= 8)."""

    def __init__(self, n: int, action: str):
        two_n = 2 * n
        if 4 * two_n > 32:
            raise DomainError("packed pair moves need 2n <= 8")
        self.two_n = two_n
        self.half = np.uint64(4 * two_n)
        self.mask = np.uint64((1 << (4 * two_n)) - 1)
        self.shifts = tuple(np.uint64(4 * (two_n - 1 - i)) for i in range(two_n))
        self.moves = []
        for kind, g in _moves0(n, action):
            table = np.arange(16, dtype=np.uint64)
            table[: two_n] = g
            self.moves.append((kind, g, table))

    def pack_pair(self, x0, y0) -> int:
        return (_pack0(x0) << int(self.half)) | _pack0(y0)

    def unpack_pair(self, key: int):
        return (
            _unpack0(key >> int(self.half), self.two_n),
            _unpack0(key & int(self.mask), self.two_n),
        )

    def neighbors(self, keys):
        x = keys >> self.half
        y = keys & self.mask
        out = []
        for kind, g, table in self.moves:
            if kind == "lr":
                nx = _np_value_map(x, table, self.shifts)
                ny = _np_field_gather(y, g, self.shifts)
            elif kind == "rl":
                nx = _np_field_gather(x, g, self.shifts)
                ny = _np_value_map(y, table, self.shifts)
            elif kind == "ll":
                nx = _np_value_map(x, table, self.shifts)
                ny = _np_value_map(y, table, self.shifts)
            else:
                nx = _np_field_gather(x, g, self.shifts)
                ny = _np_field_gather(y, g, self.shifts)
            out.append((nx << self.half) | ny)
        return out


def _targets0(nu: Partition, n: int, target: str, budget: int | None):
    """Target product list for V, as 0-indexed one-line tuples, sorted."""
    if target == "restricted":
        return list(restricted_members0(nu, n, budget=budget))
    return [
        _ops.pad0(p.images0, 2 * n)
        for p in enumerate_K(nu, n, mode="filter", budget=budget)
    ]


def _generate_V(mu, lam, nu, n, target, budget):
    """All pairs (x, y) with x in K_mu, y in K_lam, xy in the target set.

    Returns packed uint64 keys (one per pair) in a list of numpy chunks.
    """
    from .cosets import class_members0

    two_n = 2 * n
    limit = DEFAULT_BUDGET if budget is None else budget
    targets = _targets0(nu, n, target, budget)
    kmu = class_members0(mu, n, budget=budget)
    klam = class_members0(lam, n, budget=budget)
    cost = len(targets) * len(kmu)
    if cost > limit:
        raise ResourceBudgetError(
            f"pair generation needs {cost} candidate factorizations",
            cost=cost,
            budget=limit,
        )
    lam_keys = {_pack0(u) for u in klam}
    mu_data = [(_pack0(u) << (4 * two_n), _ops.inverse0(u)) for u in kmu]
    chunk_cap = 1 << 20
    buf = np.empty(chunk_cap, dtype=np.uint64)
    fill = 0
    chunks = []
    for z in targets:
        for xkey_hi, xinv in mu_data:
            yk = 0
            for v in z:
                yk = (yk << 4) | xinv[v]
            if yk in lam_keys:
                buf[fill] = xkey_hi | yk
                fill += 1
                if fill == chunk_cap:
                    chunks.append(buf.copy())
                    fill = 0
    if fill:
        chunks.append(buf[:fill].copy())
    return chunks


def _record_from_member(x0, y0, n: int, size: int, min_cs: int | None) -> OrbitRecord:
    xp = Permutation.from_images0(x0).trim()
    yp = Permutation.from_images0(y0).trim()
    comp = compress(xp, yp)
    rec = OrbitRecord(
        representative=(comp.x, comp.y),
        magnitude=magnitude(xp, yp),
        product_weight=len((xp * yp).support()),
        action="revert",
        size_at={n: size},
    )
    if min_cs is not None and n == rec.magnitude:
        rec.split_rank = min_cs
    return rec


def find_orbits(
    mu: Partition,
    lam: Partition,
    nu: Partition,
    n: int,
    target: str = "restricted",
    budget: int | None = None,
) -> list[OrbitRecord]:
    """Partition V(K_mu x K_lam; T) into reverted orbits; records per orbit.

    T is the full nu double coset or its minimal-support slice.  Orbits
    are reported in order of their lexicographically least member; sizes
    come from exhaustive BFS and must add up to |V| exactly.
    """
    if target not in ("restricted", "full"):
        raise DomainError(f"unknown target kind {target!r}")
    if mu.weight > n or lam.weight > n or nu.weight > n:
        return []
    if 2 * n <= 8:
        return _find_orbits_packed(mu, lam, nu, n, target, budget)
    return _find_orbits_generic(mu, lam, nu, n, target, budget)


def _find_orbits_packed(mu, lam, nu, n, target, budget) -> list[OrbitRecord]:
    mover = _PackedMover(n, "revert")
    chunks = _generate_V(mu, lam, nu, n, target, budget)
    total = sum(c.size for c in chunks)
    if total == 0:
        return []
    master = np.unique(np.concatenate(chunks))
    del chunks
    if master.size != total:
        raise ConsistencyError("duplicate pairs generated for V")
    visited = np.zeros(master.size, dtype=bool)
    want_cs = target == "restricted"
    records = []
    covered = 0
    ptr = 0
    while ptr < master.size:
        if visited[ptr]:
            ptr += 1
            continue
        visited[ptr] = True
        frontier = master[ptr : ptr + 1].copy()
        idx_chunks = [np.array([ptr], dtype=np.int64)]
        size = 1
        while frontier.size:
            stepped = mover.neighbors(frontier)
            if not stepped:  # rank 0: no generators, orbits are singletons
                break
            nb = np.unique(np.concatenate(stepped))
            idx = np.searchsorted(master, nb)
            idx = np.minimum(idx, master.size - 1)
            if not np.array_equal(master[idx], nb):
                raise ConsistencyError(
                    "orbit stepped outside the generated pair set; "
                    "V is not action-closed"
                )
            fresh = ~visited[idx]
            new_idx = np.unique(idx[fresh])
            visited[new_idx] = True
            idx_chunks.append(new_idx)
            size += new_idx.size
            frontier = master[new_idx]
        seed_x, seed_y = mover.unpack_pair(int(master[ptr]))
        min_cs = None
        if want_cs:
            all_idx = np.concatenate(idx_chunks)
            min_cs = min(
                _pair_cs_half(*mover.unpack_pair(int(master[i]))) for i in all_idx
            )
        records.append(_record_from_member(seed_x, seed_y, n, size, min_cs))
        covered += size
        ptr += 1
    if covered != master.size:
        raise ConsistencyError("orbit sizes do not add up to |V|")
    return records


def _find_orbits_generic(mu, lam, nu, n, target, budget) -> list[OrbitRecord]:
    """Set-based fallback for ranks the packed representation cannot hold."""
    from .cosets import class_members0

    two_n = 2 * n
    limit = DEFAULT_BUDGET if budget is None else budget
    targets = _targets0(nu, n, target, budget)
    kmu = class_members0(mu, n, budget=budget)
    klam = {bytes(u) for u in class_members0(lam, n, budget=budget)}
    cost = len(targets) * len(kmu)
    if cost > limit:
        raise ResourceBudgetError(
            f"pair generation needs {cost} candidate factorizations",
            cost=cost,
            budget=limit,
        )
    remaining: set[bytes] = set()
    for z in targets:
        for x in kmu:
            xinv = _ops.inverse0(x)
            y = bytes(xinv[v] for v in z)
            if y in klam:
                remaining.add(bytes(x) + y)
    total = len(remaining)
    moves = _moves0(n, "revert")
    want_cs = target == "restricted"
    records = []
    covered = 0
    while remaining:
        seed = min(remaining)
        remaining.discard(seed)
        start = (tuple(seed[:two_n]), tuple(seed[two_n:]))
        seen = {start}
        queue = deque([start])
        min_cs = _pair_cs_half(*start) if want_cs else None
        while queue:
            x0, y0 = queue.popleft()
            for kind, g in moves:
                nxt = _apply_move0(x0, y0, kind, g)
                if nxt not in seen:
                    key = bytes(nxt[0]) + bytes(nxt[1])
                    if key not in remaining:
                        raise ConsistencyError(
                            "orbit stepped outside the generated pair set; "
                            "V is not action-closed"
                        )
                    remaining.discard(key)
                    seen.add(nxt)
                    queue.append(nxt)
                    if want_cs:
                        cs = _pair_cs_half(*nxt)
                        if cs < min_cs:
                            min_cs = cs
        records.append(_record_from_member(start[0], start[1], n, len(seen), min_cs))
        covered += len(seen)
    if covered != total:
        raise ConsistencyError("orbit sizes do not add up to |V|")
    return records


def count_orbits(
    mu: Partition,
    lam: Partition,
    nu: Partition,
    n: int,
    target: str = "restricted",
    budget: int | None = None,
) -> int:
    """Number of reverted orbits in V(K_mu x K_lam; T)."""
    return len(find_orbits(mu, lam, nu, n, target=target, budget=budget))
