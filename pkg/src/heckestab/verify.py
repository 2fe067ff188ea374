"""Self-check suites: exhaustive at tiny ranks, randomized above.

Each check restates a theorem the library leans on (class constancy of
supports and types, action invariants, agreement of the independent
counting methods), so a failing row localizes a broken assumption.
Nothing here prints; the CLI renders the rows.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import _ops
from .config import DEFAULT_SEED
from .constants import b_conv, compute_all
from .cosets import (
    canonical_rep,
    class_members0,
    coset_graph,
    coset_type,
    enumerate_K,
    restricted_class_size,
    stable_coset_type,
)
from .errors import DomainError
from .hyperoct import random_B
from .orbits import act, count_orbits, orbit_of, phi, predict_orbit_size
from .partitions import Partition
from .perms import Permutation
from .supports import (
    compress,
    completed_support,
    magnitude,
    profile,
    shrink,
    straighten,
)

SUITES = ("supports", "cosets", "orbits", "hecke")


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    passed: bool
    detail: str = ""


def _row(rows, suite, name, passed, detail=""):
    rows.append(CheckResult(suite, name, bool(passed), "" if passed else detail))


def _random_perm(two_n: int, rng: random.Random) -> Permutation:
    imgs = list(range(1, two_n + 1))
    rng.shuffle(imgs)
    return Permutation(imgs)


def _partitions_of(s: int, cap: int | None = None):
    if s == 0:
        yield ()
        return
    top = s if cap is None else min(s, cap)
    for p in range(top, 0, -1):
        for rest in _partitions_of(s - p, p):
            yield (p,) + rest


def stable_types(max_weight: int) -> list[Partition]:
    """All stable types of weight (size + length) at most max_weight."""
    out = []
    for s in range(max_weight + 1):
        for parts in _partitions_of(s):
            if s + len(parts) <= max_weight:
                out.append(Partition(parts))
    out.sort(key=lambda p: (p.weight, p.parts))
    return out


def _suite_supports(n_max: int, rng: random.Random) -> list[CheckResult]:
    rows: list[CheckResult] = []
    suite = "supports"

    ok, detail = True, ""
    for x0 in _ops.iter_perms0(4):
        x = Permutation.from_images0(x0)
        if len(profile(x.pad(4)).broken_points) != 2 * stable_coset_type(x).weight:
            ok, detail = False, f"x = {x.cycle_string()}"
            break
    _row(rows, suite, "broken-size-is-2w-exhaustive", ok, detail)

    ok, detail = True, ""
    for _ in range(24):
        n = rng.randint(2, max(2, n_max))
        x = _random_perm(2 * n, rng)
        a, b = random_B(n, rng=rng), random_B(n, rng=rng)
        if len(profile((a * x * b).pad(2 * n)).broken_points) != len(
            profile(x).broken_points
        ):
            ok, detail = False, f"n={n} x={x.cycle_string()}"
            break
    _row(rows, suite, "broken-size-class-constant", ok, detail)

    ok, detail = True, ""
    for _ in range(16):
        n = rng.randint(1, max(1, n_max))
        x = _random_perm(2 * n, rng)
        st = straighten(x, n)
        y = st.result.pad(2 * n)
        if y.support() != profile(y).broken_points:
            ok, detail = False, f"support {sorted(y.support())} after straighten"
            break
        if stable_coset_type(st.result) != stable_coset_type(x):
            ok, detail = False, "straighten left the double coset"
            break
    _row(rows, suite, "straighten-support-equals-broken", ok, detail)

    ok, detail = True, ""
    for _ in range(16):
        n = rng.randint(1, max(1, n_max))
        x, y = _random_perm(2 * n, rng), _random_perm(2 * n, rng)
        sh = shrink(x, y, n)
        cs = completed_support(sh.x, sh.y)
        if not (sh.x.support() <= cs and sh.y.support() <= cs):
            ok, detail = False, f"n={n}: support escaped the completed support"
            break
        if sh.x * sh.y != x * y:
            ok, detail = False, "shrink changed the product"
            break
        if cs != completed_support(x, y):
            ok, detail = False, "shrink changed the completed support"
            break
    _row(rows, suite, "shrink-clears-outside", ok, detail)

    ok, detail = True, ""
    for _ in range(16):
        n = rng.randint(1, max(1, n_max))
        x, y = _random_perm(2 * n, rng), _random_perm(2 * n, rng)
        m = magnitude(x, y)
        comp = compress(x, y)
        if max(comp.x.degree, comp.y.degree) > 2 * m:
            ok, detail = False, f"compressed degree above 2m = {2 * m}"
            break
        if comp.x != (comp.left * x * comp.right.inverse()).trim():
            ok, detail = False, "compress witness identity failed"
            break
        if magnitude(comp.x, comp.y) != m:
            ok, detail = False, "compress changed the magnitude"
            break
        if stable_coset_type(comp.x * comp.y) != stable_coset_type(x * y):
            ok, detail = False, "compress changed the product type"
            break
    _row(rows, suite, "compress-window-and-witness", ok, detail)

    ok, detail = True, ""
    for _ in range(16):
        n = rng.randint(1, max(1, n_max))
        x, y = _random_perm(2 * n, rng), _random_perm(2 * n, rng)
        cs = completed_support(x, y)
        paired = all((p + 1 if p % 2 else p - 1) in cs for p in cs)
        covered = (x * y).support() <= cs and profile(x).broken_points <= cs
        if not (paired and covered):
            ok, detail = False, f"n={n} x={x.cycle_string()} y={y.cycle_string()}"
            break
    _row(rows, suite, "completed-support-couple-closed", ok, detail)

    ok, detail = True, ""
    for _ in range(16):
        n = rng.randint(1, max(1, n_max))
        x, y = _random_perm(2 * n, rng), _random_perm(2 * n, rng)
        ab = (random_B(n, rng=rng), random_B(n, rng=rng))
        if magnitude(*act((x, y), ab, n, "revert")) != magnitude(x, y):
            ok, detail = False, f"n={n}"
            break
    _row(rows, suite, "magnitude-orbit-constant", ok, detail)
    return rows


def _suite_cosets(n_max: int, rng: random.Random) -> list[CheckResult]:
    rows: list[CheckResult] = []
    suite = "cosets"

    ok, detail = True, ""
    for x0 in _ops.iter_perms0(4):
        x = Permutation.from_images0(x0)
        if coset_type(x, 2) != coset_type(x.inverse(), 2):
            ok, detail = False, f"x = {x.cycle_string()}"
            break
    _row(rows, suite, "type-of-inverse-exhaustive", ok, detail)

    ok, detail = True, ""
    for _ in range(24):
        n = rng.randint(1, max(1, n_max))
        x = _random_perm(2 * n, rng)
        a, b = random_B(n, rng=rng), random_B(n, rng=rng)
        if coset_type(a * x * b, n) != coset_type(x, n):
            ok, detail = False, f"n={n} x={x.cycle_string()}"
            break
    _row(rows, suite, "type-class-constant", ok, detail)

    ok, detail = True, ""
    for mu in stable_types(max(2, n_max)):
        if stable_coset_type(canonical_rep(mu)) != mu:
            ok, detail = False, f"mu = {mu}"
            break
    _row(rows, suite, "canonical-rep-type", ok, detail)

    n = min(max(2, n_max), 3)
    sizes = [len(class_members0(mu, n)) for mu in stable_types(n)]
    _row(
        rows,
        suite,
        "classes-partition-group",
        sum(sizes) == _ops.factorial(2 * n),
        f"sum {sum(sizes)} != (2n)! at n={n}",
    )

    ok, detail = True, ""
    for mu in stable_types(n):
        brute = sum(
            1 for u in class_members0(mu, n) if _ops.support_size0(u) == mu.weight
        )
        if brute != restricted_class_size(mu, n):
            ok, detail = False, f"mu={mu} n={n}: {brute} by filter"
            break
    _row(rows, suite, "restricted-size-brute", ok, detail)

    ok, detail = True, ""
    for mu in stable_types(2):
        a = set(enumerate_K(mu, 2, mode="filter"))
        b = set(enumerate_K(mu, 2, mode="closure"))
        if a != b:
            ok, detail = False, f"mu = {mu}"
            break
    _row(rows, suite, "filter-closure-agree", ok, detail)

    ok, detail = True, ""
    for _ in range(16):
        nn = rng.randint(1, max(1, n_max))
        x = _random_perm(2 * nn, rng)
        g = coset_graph(x, nn)
        if len(g.components) != coset_type(x, nn).length:
            ok, detail = False, f"n={nn} x={x.cycle_string()}"
            break
    _row(rows, suite, "graph-components-match-type", ok, detail)
    return rows


def _suite_orbits(n_max: int, rng: random.Random) -> list[CheckResult]:
    rows: list[CheckResult] = []
    suite = "orbits"

    ok, detail = True, ""
    for action in ("straight", "revert"):
        for _ in range(12):
            n = rng.randint(1, max(1, n_max))
            pair = (_random_perm(2 * n, rng), _random_perm(2 * n, rng))
            a1, b1 = random_B(n, rng=rng), random_B(n, rng=rng)
            a2, b2 = random_B(n, rng=rng), random_B(n, rng=rng)
            stepped = act(act(pair, (a1, b1), n, action), (a2, b2), n, action)
            fused = act(pair, (a2 * a1, b2 * b1), n, action)
            if stepped != fused:
                ok, detail = False, f"{action} n={n}"
                break
    _row(rows, suite, "action-composition-law", ok, detail)

    ok, detail = True, ""
    for _ in range(12):
        n = rng.randint(1, max(1, n_max))
        pair = (_random_perm(2 * n, rng), _random_perm(2 * n, rng))
        ab = (random_B(n, rng=rng), random_B(n, rng=rng))
        if phi(act(pair, ab, n, "straight")) != act(phi(pair), ab, n, "revert"):
            ok, detail = False, f"n={n}"
            break
    _row(rows, suite, "phi-intertwines-actions", ok, detail)

    ok, detail = True, ""
    for n in range(1, min(n_max, 3) + 1):
        e = Permutation.identity()
        res = orbit_of((e, e), n)
        if res.record.size_at[n] != _ops.factorial(n) << n:
            ok, detail = False, f"n={n}: size {res.record.size_at[n]}"
            break
    _row(rows, suite, "identity-pair-orbit-size", ok, detail)

    ok, detail = True, ""
    for _ in range(12):
        n = rng.randint(1, max(1, n_max))
        pair = (_random_perm(2 * n, rng), _random_perm(2 * n, rng))
        ab = (random_B(n, rng=rng), random_B(n, rng=rng))
        x2, y2 = act(pair, ab, n, "revert")
        if stable_coset_type(x2 * y2) != stable_coset_type(pair[0] * pair[1]):
            ok, detail = False, f"n={n}"
            break
    _row(rows, suite, "product-type-constant", ok, detail)

    if n_max >= 3:
        # couple flip against identity: magnitude 2, so rank 2 extracts
        pair = (Permutation.from_cycles([(1, 2)]), Permutation.identity())
        res2 = orbit_of(pair, 2)
        predicted = predict_orbit_size(res2.record, 3)
        res3 = orbit_of(pair, 3)
        _row(
            rows,
            suite,
            "size-formula-vs-bfs",
            predicted == res3.record.size_at[3],
            f"predicted {predicted}, found {res3.record.size_at[3]}",
        )

    one = Partition((1,))
    _row(
        rows,
        suite,
        "single-orbit-pair-set",
        count_orbits(one, one, Partition(), 2) == 1,
        "expected one orbit",
    )
    return rows


def _suite_hecke(n_max: int, rng: random.Random) -> list[CheckResult]:
    rows: list[CheckResult] = []
    suite = "hecke"
    engine = "python" if n_max <= 3 else "auto"
    small = stable_types(2)

    ok, detail = True, ""
    for n in range(2, max(2, n_max) + 1):
        for mu in small:
            for lam in small:
                for nu in small:
                    try:
                        compute_all(mu, lam, nu, n, engine=engine)
                    except DomainError:
                        raise
                    except Exception as exc:  # ConsistencyError carries the mismatch
                        ok, detail = False, f"({mu}; {lam}; {nu}) n={n}: {exc}"
                        break
    _row(rows, suite, "methods-agree", ok, detail)

    ok, detail = True, ""
    n = max(2, min(n_max, 3))
    for mu in small:
        for nu in small:
            want = (_ops.factorial(n) << n) if mu == nu else 0
            got = b_conv(mu, Partition(), nu, n)
            if got != want:
                ok, detail = False, f"b({mu}; -; {nu}) = {got}, want {want}"
                break
    _row(rows, suite, "identity-factor-column", ok, detail)

    ok, detail = True, ""
    for mu in small:
        for lam in small:
            for nu in small:
                if b_conv(mu, lam, nu, n) != b_conv(lam, mu, nu, n):
                    ok, detail = False, f"({mu}; {lam}; {nu}) n={n}"
                    break
    _row(rows, suite, "commutative", ok, detail)

    ok, detail = True, ""
    for mu in small:
        for lam in small:
            for nu in small:
                lhs = b_conv(mu, lam, nu, n) * len(class_members0(nu, n))
                rhs = b_conv(nu, lam, mu, n) * len(class_members0(mu, n))
                if lhs != rhs:
                    ok, detail = False, f"({mu}; {lam}; {nu}) n={n}"
                    break
    _row(rows, suite, "transpose-balance", ok, detail)

    ok, detail = True, ""
    for mu in small:
        for lam in small:
            for nu in small:
                if nu.size > mu.size + lam.size and b_conv(mu, lam, nu, n):
                    ok, detail = False, f"({mu}; {lam}; {nu}) n={n}"
                    break
    _row(rows, suite, "size-grading-vanishing", ok, detail)
    return rows


def run_suite(
    name: str, n_max: int = 2, seed: int = DEFAULT_SEED
) -> list[CheckResult]:
    """Run one suite (or "all"); returns rows in a deterministic order."""
    if name != "all" and name not in SUITES:
        raise DomainError(f"unknown suite {name!r}; choose from {SUITES} or all")
    if n_max < 1:
        raise DomainError(f"n_max must be positive, got {n_max}")
    chosen = SUITES if name == "all" else (name,)
    table = {
        "supports": _suite_supports,
        "cosets": _suite_cosets,
        "orbits": _suite_orbits,
        "hecke": _suite_hecke,
    }
    rows: list[CheckResult] = []
    for suite in chosen:
        # string seeding is hashed with sha512, stable across processes
        rng = random.Random(f"{seed}:{suite}")
        rows.extend(table[suite](n_max, rng))
    return rows
