"""Structure constants of the double coset algebra, computed four ways.

For stable coset types mu, lam, nu and a rank n, the constant
b(mu, lam, nu; n) counts factorizations z0 = x y with x in K_mu(n) and
y in K_lam(n), where z0 is a fixed member of K_nu(n); the count does
not depend on the choice, and the canonical representative is used.

The methods share as little code as possible, on purpose:

* conv       loops over K_lam and classifies the cofactor z0 y^-1.
* factor     scans all of S_2n once, classifying x and x^-1 z0
             (compiled kernel when available).
* mainlemma  sums factorization counts over the minimal-support slice
             of K_nu and divides by the slice size, exactly.
* orbit      decomposes the pair set over the slice into two-sided
             orbits at the threshold rank m = w(mu)+w(lam)+w(nu) and
             sums each orbit's size formula evaluated at n.

fit_stability turns a run of values (n, b(n)) into the exact polynomial
g with b(n) = 2^(n - w(nu)) n! g(n), found on the largest suffix window
that one polynomial explains with at least one point to spare.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import _ops
from ._fastops import run_count
from .config import DEFAULT_BUDGET
from .cosets import (
    canonical_rep,
    class_members0,
    restricted_class_size,
    restricted_members0,
)
from .errors import ConsistencyError, DomainError, ResourceBudgetError
from .orbits import find_orbits, predict_orbit_size
from .partitions import Partition
from .ratpoly import RationalPolynomial, interpolate

METHODS = ("conv", "factor", "mainlemma", "orbit")


@dataclass(frozen=True)
class StructEntry:
    mu: Partition
    lam: Partition
    nu: Partition
    n: int
    b: int
    method: str


def _key(p: Partition, n: int) -> int:
    return _ops.pack_type_key(p.ambient_type(n).parts)


def _empty(mu: Partition, lam: Partition, nu: Partition, n: int) -> bool:
    # a class with weight above n is empty, so every count involving it is 0
    return mu.weight > n or lam.weight > n or nu.weight > n


def _check_scan(cost: int, budget: int | None) -> None:
    limit = DEFAULT_BUDGET if budget is None else budget
    if cost > limit:
        raise ResourceBudgetError(
            f"scan enumerates {cost} elements", cost=cost, budget=limit
        )


def _cofactor_hits(z, lam_members, mu_key: int, n: int) -> int:
    """#{y in lam_members : type(z y^-1) == mu_key}.

    Works entirely on inverse one-line forms: z y^-1 has inverse
    y z^-1, whose one-line form is y gathered along z^-1.
    """
    zinv = _ops.inverse0(z)
    hits = 0
    for y in lam_members:
        v = tuple(y[j] for j in zinv)
        if _ops.pack_type_key(_ops.type_sizes_from_inv0(v, n)) == mu_key:
            hits += 1
    return hits


def b_conv(
    mu: Partition, lam: Partition, nu: Partition, n: int, budget: int | None = None
) -> int:
    """Structure constant by the class convolution loop."""
    if _empty(mu, lam, nu, n):
        return 0
    z0 = _ops.pad0(canonical_rep(nu).images0, 2 * n)
    lam_members = class_members0(lam, n, budget=budget)
    return _cofactor_hits(z0, lam_members, _key(mu, n), n)


def b_factor(
    mu: Partition,
    lam: Partition,
    nu: Partition,
    n: int,
    budget: int | None = None,
    shards: int = 1,
    engine: str = "auto",
) -> int:
    """Structure constant by one classifying scan of S_2n."""
    if _empty(mu, lam, nu, n):
        return 0
    z0 = canonical_rep(nu).images0
    return run_count(
        2 * n,
        z0,
        _key(mu, n),
        _key(lam, n),
        supp_filter=-1,
        budget=budget,
        shards=shards,
        engine=engine,
    )


def b_mainlemma(
    mu: Partition, lam: Partition, nu: Partition, n: int, budget: int | None = None
) -> int:
    """Structure constant averaged over the minimal-support slice of K_nu.

    The total factorization count over the slice must be an exact
    multiple of the slice size; a remainder means a broken invariant,
    not a rounding case.
    """
    if _empty(mu, lam, nu, n):
        return 0
    targets = restricted_members0(nu, n, budget=budget)
    lam_members = class_members0(lam, n, budget=budget)
    _check_scan(len(targets) * max(len(lam_members), 1), budget)
    mu_key = _key(mu, n)
    numer = sum(_cofactor_hits(z, lam_members, mu_key, n) for z in targets)
    if numer % len(targets):
        raise ConsistencyError(
            f"factorization total {numer} is not a multiple of the slice "
            f"size {len(targets)} for ({mu}; {lam}; {nu}) at n={n}"
        )
    return numer // len(targets)


def b_orbit(
    mu: Partition, lam: Partition, nu: Partition, n: int, budget: int | None = None
) -> int:
    """Structure constant from the two-sided orbit decomposition.

    Orbits are found once at the threshold rank m = w(mu)+w(lam)+w(nu)
    and their sizes extrapolated to n; each extrapolation must first
    reproduce the exhaustive size at m before it is trusted at n.
    """
    if _empty(mu, lam, nu, n):
        return 0
    m_v = mu.weight + lam.weight + nu.weight
    if n < m_v:
        raise DomainError(
            f"orbit method needs n >= w(mu)+w(lam)+w(nu) = {m_v}; "
            f"smaller ranks are served by the other methods"
        )
    records = find_orbits(mu, lam, nu, m_v, target="restricted", budget=budget)
    if not records:
        return 0
    total = 0
    for rec in records:
        # over the minimal-support slice the magnitude sum is forced:
        # |S(z)| = w(nu) and |DS| = 2w on each class, so 2m = 2(w+w+w)
        if rec.magnitude != m_v:
            raise ConsistencyError(
                f"orbit magnitude {rec.magnitude} differs from the "
                f"threshold {m_v}"
            )
        check = predict_orbit_size(rec, m_v, budget=budget)
        if check != rec.size_at[m_v]:
            raise ConsistencyError(
                "orbit size formula disagrees with exhaustive search at "
                f"rank {m_v}: {check} != {rec.size_at[m_v]}"
            )
        total += predict_orbit_size(rec, n, budget=budget)
    slice_size = restricted_class_size(nu, n)
    if total % slice_size:
        raise ConsistencyError(
            f"orbit total {total} is not a multiple of the slice size "
            f"{slice_size} at n={n}"
        )
    return total // slice_size


def structconst(
    mu: Partition,
    lam: Partition,
    nu: Partition,
    n: int,
    method: str = "auto",
    budget: int | None = None,
    shards: int = 1,
    engine: str = "auto",
) -> StructEntry:
    """One constant by one method; "auto" is conv through n=3, then factor."""
    if method == "auto":
        method = "conv" if n <= 3 else "factor"
    if method == "conv":
        b = b_conv(mu, lam, nu, n, budget=budget)
    elif method == "factor":
        b = b_factor(mu, lam, nu, n, budget=budget, shards=shards, engine=engine)
    elif method == "mainlemma":
        b = b_mainlemma(mu, lam, nu, n, budget=budget)
    elif method == "orbit":
        b = b_orbit(mu, lam, nu, n, budget=budget)
    else:
        raise DomainError(f"unknown method {method!r}")
    return StructEntry(mu=mu, lam=lam, nu=nu, n=n, b=b, method=method)


def compute_all(
    mu: Partition,
    lam: Partition,
    nu: Partition,
    n: int,
    budget: int | None = None,
    shards: int = 1,
    engine: str = "auto",
) -> dict[str, int]:
    """Every applicable method; raises if any two disagree.

    The orbit method joins in only at ranks where its threshold allows.
    """
    values = {
        "conv": b_conv(mu, lam, nu, n, budget=budget),
        "factor": b_factor(mu, lam, nu, n, budget=budget, shards=shards, engine=engine),
        "mainlemma": b_mainlemma(mu, lam, nu, n, budget=budget),
    }
    if n >= mu.weight + lam.weight + nu.weight:
        values["orbit"] = b_orbit(mu, lam, nu, n, budget=budget)
    if len(set(values.values())) > 1:
        raise ConsistencyError(
            f"methods disagree for ({mu}; {lam}; {nu}) at n={n}: {values}"
        )
    return values


# ---------------------------------------------------------------------------
# batched tables: one scan classifies every (mu, lam) cell at once


def joint_factor_table(
    nu: Partition, n: int, budget: int | None = None
) -> dict[tuple[int, int], int]:
    """Histogram of (type(x), type(x^-1 z0)) over one scan of S_2n.

    Cell (key(mu), key(lam)) holds b(mu, lam, nu; n), for every mu and
    lam simultaneously; keys are packed ambient types.
    """
    if nu.weight > n:
        return {}
    _check_scan(_ops.factorial(2 * n), budget)
    z0inv = _ops.inverse0(_ops.pad0(canonical_rep(nu).images0, 2 * n))
    table: dict[tuple[int, int], int] = {}
    for x in _ops.iter_perms0(2 * n):
        xinv = _ops.inverse0(x)
        kx = _ops.pack_type_key(_ops.type_sizes_from_inv0(xinv, n))
        v = tuple(z0inv[p] for p in x)
        ky = _ops.pack_type_key(_ops.type_sizes_from_inv0(v, n))
        cell = (kx, ky)
        table[cell] = table.get(cell, 0) + 1
    return table


def joint_conv_table(
    nu: Partition, n: int, budget: int | None = None
) -> dict[tuple[int, int], int]:
    """Histogram of (type(z0 y^-1), type(y)) over y in S_2n.

    Same cells as joint_factor_table through the transposed loop; the
    two tables agreeing is a genuine two-route check.
    """
    if nu.weight > n:
        return {}
    _check_scan(_ops.factorial(2 * n), budget)
    zinv = _ops.inverse0(_ops.pad0(canonical_rep(nu).images0, 2 * n))
    table: dict[tuple[int, int], int] = {}
    for y in _ops.iter_perms0(2 * n):
        ky = _ops.pack_type_key(_ops.type_sizes_from_inv0(y, n))
        v = tuple(y[j] for j in zinv)
        kx = _ops.pack_type_key(_ops.type_sizes_from_inv0(v, n))
        cell = (kx, ky)
        table[cell] = table.get(cell, 0) + 1
    return table


_YKEY_CACHE: dict[int, tuple[int, ...]] = {}


def _all_type_keys(n: int, budget: int | None = None) -> tuple[int, ...]:
    """Packed type key of every element of S_2n, by lexicographic rank."""
    hit = _YKEY_CACHE.get(n)
    if hit is None:
        _check_scan(_ops.factorial(2 * n), budget)
        hit = tuple(
            _ops.pack_type_key(_ops.type_sizes_from_inv0(u, n))
            for u in _ops.iter_perms0(2 * n)
        )
        _YKEY_CACHE[n] = hit
    return hit


def joint_mainlemma_table(
    nu: Partition, n: int, budget: int | None = None
) -> dict[tuple[int, int], int]:
    """Slice-averaged factorization counts for every (mu, lam) cell.

    Sums the joint histogram over the minimal-support slice of K_nu and
    divides each cell by the slice size; any cell failing to divide
    evenly raises.
    """
    if nu.weight > n:
        return {}
    targets = restricted_members0(nu, n, budget=budget)
    _check_scan(len(targets) * _ops.factorial(2 * n), budget)
    ykeys = _all_type_keys(n, budget=budget)
    counter: dict[tuple[int, int], int] = {}
    for z in targets:
        zinv = _ops.inverse0(z)
        for rank, y in enumerate(_ops.iter_perms0(2 * n)):
            v = tuple(y[j] for j in zinv)
            kx = _ops.pack_type_key(_ops.type_sizes_from_inv0(v, n))
            cell = (kx, ykeys[rank])
            counter[cell] = counter.get(cell, 0) + 1
    table: dict[tuple[int, int], int] = {}
    for cell, c in counter.items():
        if c % len(targets):
            raise ConsistencyError(
                f"cell {cell} total {c} is not a multiple of the slice "
                f"size {len(targets)} for nu={nu} at n={n}"
            )
        table[cell] = c // len(targets)
    return table


def ambient_key(p: Partition, n: int) -> int:
    """Packed ambient type key, the cell coordinate of the joint tables."""
    return _key(p, n)


# ---------------------------------------------------------------------------
# stability fitting


@dataclass(frozen=True)
class StabilityFit:
    stable: bool
    polynomial: RationalPolynomial | None
    window_start: int | None
    degree: int | None
    residuals: tuple[Fraction, ...]
    normalized: tuple[tuple[int, Fraction], ...]
    is_integral: bool | None
    remark_scaled: RationalPolynomial | None


def normalize_b(n: int, b: int, w_nu: int) -> Fraction:
    """g(n) with b = 2^(n - w_nu) n! g(n), exactly."""
    return Fraction(b * (1 << w_nu), (1 << n) * _ops.factorial(n))


def fit_stability(
    points,
    w_nu: int,
    mu: Partition | None = None,
    lam: Partition | None = None,
) -> StabilityFit:
    """Largest-suffix exact polynomial fit of the normalized values.

    points is a sequence of (n, b).  A suffix window is stable when the
    interpolant through its normalized values has degree at most window
    length minus two, so at least one point is explained rather than
    consumed.  Residuals report the fit error at the points before the
    window.  When mu and lam are supplied the fitted degree must not
    exceed w(mu) + w(lam).
    """
    pts = sorted(points)
    if len({p[0] for p in pts}) != len(pts):
        raise DomainError("duplicate ranks in stability input")
    if len(pts) < 2:
        raise DomainError("stability fitting needs at least two points")
    norm = tuple((int(nn), normalize_b(int(nn), int(bb), w_nu)) for nn, bb in pts)
    for start in range(len(norm) - 1):
        window = norm[start:]
        f = interpolate(window)
        if f.degree <= len(window) - 2:
            if mu is not None and lam is not None:
                bound = mu.weight + lam.weight
                if f.degree > bound:
                    raise ConsistencyError(
                        f"stable fit has degree {f.degree}, above the bound "
                        f"w(mu) + w(lam) = {bound}"
                    )
            return StabilityFit(
                stable=True,
                polynomial=f,
                window_start=window[0][0],
                degree=f.degree,
                residuals=tuple(g - f(nn) for nn, g in norm[:start]),
                normalized=norm,
                is_integral=f.is_integral,
                remark_scaled=f.scale(Fraction(2, 1 << w_nu)),
            )
    return StabilityFit(
        stable=False,
        polynomial=None,
        window_start=None,
        degree=None,
        residuals=(),
        normalized=norm,
        is_integral=None,
        remark_scaled=None,
    )
