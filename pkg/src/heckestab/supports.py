"""Support notions for pairs of permutations acting on couples.

Three nested notions are tracked for a permutation x of {1, ..., 2n}:

* plain support S(x), the moved points;
* broken couples D(x), couples whose image pair is not a couple, and
  their point set DS(x) (so |DS| = 2|D| always);
* for a pair (x, y), the completed support
  CS(x, y) = S(xy) ∪ t(S(xy)) ∪ DS(x) ∪ DS(y),
  a union of couples that controls where the pair can be normalized.

The constructive routines ``straighten``, ``shrink`` and ``compress``
return witnesses so callers can re-check membership claims directly.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _ops
from .errors import ConsistencyError, DomainError
from .hyperoct import is_in_B, partner
from .perms import Permutation


@dataclass(frozen=True)
class SupportProfile:
    """Moved points, broken couples, and broken-couple points of one permutation."""

    support: frozenset[int]
    broken: frozenset[int]
    broken_points: frozenset[int]

    def __post_init__(self):
        if 2 * len(self.broken) != len(self.broken_points):
            raise ConsistencyError(
                f"broken-couple bookkeeping off: {len(self.broken)} couples, "
                f"{len(self.broken_points)} points"
            )


def _even_images0(x: Permutation) -> tuple[int, ...]:
    m = x.degree
    return _ops.pad0(x.images0, m + (m & 1))


def profile(x: Permutation) -> SupportProfile:
    x0 = _even_images0(x)
    support = frozenset(i + 1 for i, v in enumerate(x0) if v != i)
    broken = frozenset(i + 1 for i in _ops.broken_couples0(x0))
    points = frozenset(p for i in broken for p in (2 * i - 1, 2 * i))
    return SupportProfile(support, broken, points)


def completed_support(x: Permutation, y: Permutation) -> frozenset[int]:
    """CS(x, y) = S(xy) ∪ t(S(xy)) ∪ DS(x) ∪ DS(y); always a union of couples."""
    prod_support = (x * y).support()
    out = set(prod_support)
    out.update(partner(p) for p in prod_support)
    out.update(profile(x).broken_points)
    out.update(profile(y).broken_points)
    return frozenset(out)


def magnitude(x: Permutation, y: Permutation) -> int:
    """Half of |S(xy)| + |t(S(xy))| + |DS(x)| + |DS(y)|."""
    s = len((x * y).support())
    total = 2 * s + len(profile(x).broken_points) + len(profile(y).broken_points)
    if total % 2:
        raise ConsistencyError(f"odd support sum {total} for ({x}, {y})")
    return total // 2


@dataclass(frozen=True)
class StraightenResult:
    result: Permutation
    left: Permutation
    right: Permutation


def straighten(x: Permutation, n: int) -> StraightenResult:
    """Normalize x within its double coset so its support is exactly DS(x).

    Returns y = left * x * right with left, right in B_n, D(y) = D(x)
    and S(y) = DS(y).  Couples mapped onto couples are sent home first
    (one left multiplier), then couples broken by x but with one fixed
    point get that point stirred by a right couple-flip.
    """
    if x.degree > 2 * n:
        raise DomainError(f"degree {x.degree} exceeds 2n = {2 * n}")
    x0 = _ops.pad0(x.images0, 2 * n)
    broken = set(_ops.broken_couples0(x0))

    # Left multiplier: image couple of every unbroken couple goes back to it;
    # the leftover image couples land on the broken couples in order.
    a0 = [-1] * (2 * n)
    hit = set()
    for i in range(n):
        if i in broken:
            continue
        a0[x0[2 * i]] = 2 * i
        a0[x0[2 * i + 1]] = 2 * i + 1
        hit.add(x0[2 * i] >> 1)
    for src, dst in zip(sorted(set(range(n)) - hit), sorted(broken)):
        a0[2 * src] = 2 * dst
        a0[2 * src + 1] = 2 * dst + 1
    y0 = list(_ops.compose0(tuple(a0), x0))

    # Right multipliers: a broken couple may still have one fixed point.
    b0 = list(range(2 * n))
    for i in broken:
        p, q = 2 * i, 2 * i + 1
        if y0[p] == p or y0[q] == q:
            y0[p], y0[q] = y0[q], y0[p]
            b0[p], b0[q] = q, p

    left = Permutation.from_images0(a0)
    right = Permutation.from_images0(b0)
    if not (is_in_B(left, n) and is_in_B(right, n)):
        raise ConsistencyError("straighten produced a multiplier outside B_n")
    result = Permutation.from_images0(y0)
    if result != left * x * right:
        raise ConsistencyError("straighten witness does not reproduce its result")
    return StraightenResult(result, left, right)


@dataclass(frozen=True)
class ShrinkResult:
    x: Permutation
    y: Permutation
    left: Permutation
    right: Permutation


def shrink(x: Permutation, y: Permutation, n: int) -> ShrinkResult:
    """Clear the supports of x and y off the complement of CS(x, y).

    One ascending scan over points outside CS; a point still moved there
    is absorbed by the reverted action of (e, b) with b a couple-respecting
    involution.  The product xy never changes, and the result pair has
    S(x') ∪ S(y') ⊆ CS(x', y') = CS(x, y).
    """
    if x.degree > 2 * n or y.degree > 2 * n:
        raise DomainError(f"degrees ({x.degree}, {y.degree}) exceed 2n = {2 * n}")
    cs = completed_support(x, y)
    x0 = _ops.pad0(x.images0, 2 * n)
    y0 = _ops.pad0(y.images0, 2 * n)
    acc = _ops.identity0(2 * n)  # accumulated right witness B, steps compose as B <- b B

    for p in range(2 * n):
        if p + 1 in cs or y0[p] == p:
            continue
        j = y0[p]
        # j may lie inside CS; the couple swap still preserves D on both
        # sides because j and t(j) have unique y-preimages p and t(p)
        swaps = [(p, j)] if j == (p ^ 1) else [(p, j), (p ^ 1, j ^ 1)]
        b0 = list(range(2 * n))
        for u, v in swaps:
            b0[u], b0[v] = v, u
        b0 = tuple(b0)
        x0 = _ops.compose0(x0, b0)
        y0 = _ops.compose0(b0, y0)
        acc = _ops.compose0(b0, acc)

    left = Permutation.identity()
    right = Permutation.from_images0(acc)
    return ShrinkResult(
        Permutation.from_images0(x0), Permutation.from_images0(y0), left, right
    )


@dataclass(frozen=True)
class CompressResult:
    x: Permutation
    y: Permutation
    left: Permutation
    right: Permutation
    relabel: Permutation


def compress(x: Permutation, y: Permutation) -> CompressResult:
    """Move (x, y) within its reverted orbit onto {1, ..., 2m}, m = magnitude.

    First shrinks the pair into its completed support, then conjugates by
    the couple relabeling u that packs the CS couples onto the initial
    couples in order.  The returned pair is (left, right)-reverted-acted
    from the input: x' = left x right^-1, y' = right y left^-1.
    """
    n = (max(x.degree, y.degree) + 1) // 2
    sh = shrink(x, y, n)
    cs_couples = sorted({(p - 1) >> 1 for p in completed_support(x, y)})
    rest = [c for c in range(n) if c not in set(cs_couples)]
    u0 = [0] * (2 * n)
    for slot, c in enumerate(cs_couples + rest):
        u0[2 * c] = 2 * slot
        u0[2 * c + 1] = 2 * slot + 1
    u = Permutation.from_images0(u0)

    x2 = (u * sh.x * u.inverse()).trim()
    y2 = (u * sh.y * u.inverse()).trim()
    left = u
    right = (u * sh.right).trim()
    if x2 != left * x * right.inverse() or y2 != right * y * left.inverse():
        raise ConsistencyError("compress witness does not reproduce its result")
    m = magnitude(x, y)
    if x2.degree > 2 * m or y2.degree > 2 * m:
        raise ConsistencyError(
            f"compressed pair has degree ({x2.degree}, {y2.degree}) beyond 2m = {2 * m}"
        )
    return CompressResult(x2, y2, left, right, u)
