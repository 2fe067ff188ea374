"""Compiled counting kernel and the block runner for full-group scans.

The kernel is a line-for-line mirror of ``_ops.count_pass_py``; tests
compare the two on complete symmetric groups.  Scans are split into
fixed-size rank blocks (config.RANK_BLOCK) and the per-block counts are
added in block order, so the total is identical no matter how many
worker threads execute the blocks.  The JIT path needs numba; without it
the pure-Python twin runs the same blocks.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

from . import _ops
from .config import DEFAULT_BUDGET, RANK_BLOCK
from .errors import DomainError, ResourceBudgetError

try:
    import numpy as np
    from numba import njit

    HAVE_JIT = True
except ImportError:  # pragma: no cover - numba is a hard dependency normally
    HAVE_JIT = False


if HAVE_JIT:

    @njit(cache=True, nogil=True)
    def _type_key(v, n, parent, size, sizes):
        for i in range(n):
            parent[i] = i
            size[i] = 1
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
        cnt = 0
        for r in range(n):
            if parent[r] == r:
                sizes[cnt] = size[r]
                cnt += 1
        for i in range(1, cnt):
            t = sizes[i]
            j = i - 1
            while j >= 0 and sizes[j] < t:
                sizes[j + 1] = sizes[j]
                j -= 1
            sizes[j + 1] = t
        key = 0
        for i in range(cnt):
            key = (key << 4) | sizes[i]
        return key

    @njit(cache=True, nogil=True)
    def _count_pass(two_n, start, stop, z0inv, mu_key, lam_key, supp_filter):
        n = two_n // 2
        fact = np.empty(two_n + 1, np.int64)
        fact[0] = 1
        for i in range(1, two_n + 1):
            fact[i] = fact[i - 1] * i
        x = np.empty(two_n, np.int64)
        avail = np.empty(two_n, np.int64)
        for i in range(two_n):
            avail[i] = i
        r = start
        for i in range(two_n, 0, -1):
            f = fact[i - 1]
            d = r // f
            r = r % f
            x[two_n - i] = avail[d]
            for j in range(d, i - 1):
                avail[j] = avail[j + 1]
        parent = np.empty(n, np.int64)
        size = np.empty(n, np.int64)
        sizes = np.empty(n, np.int64)
        xinv = np.empty(two_n, np.int64)
        v = np.empty(two_n, np.int64)
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
                for i in range(two_n):
                    xinv[x[i]] = i
                if _type_key(xinv, n, parent, size, sizes) == mu_key:
                    if lam_key < 0:
                        count += 1
                    else:
                        for i in range(two_n):
                            v[i] = z0inv[x[i]]
                        if _type_key(v, n, parent, size, sizes) == lam_key:
                            count += 1
            r += 1
            if r < stop:
                i = two_n - 2
                while i >= 0 and x[i] >= x[i + 1]:
                    i -= 1
                if i < 0:
                    break
                j = two_n - 1
                while x[j] <= x[i]:
                    j -= 1
                x[i], x[j] = x[j], x[i]
                lo = i + 1
                hi = two_n - 1
                while lo < hi:
                    x[lo], x[hi] = x[hi], x[lo]
                    lo += 1
                    hi -= 1
        return count


def run_count(
    two_n: int,
    z0: tuple[int, ...],
    mu_key: int,
    lam_key: int,
    supp_filter: int = -1,
    budget: int | None = None,
    shards: int = 1,
    engine: str = "auto",
) -> int:
    """Count over all of S_two_n in fixed rank blocks; see count_pass_py.

    z0 is the 0-indexed target (padded here); engine is "auto", "jit" or
    "python".  The block split is the unit of parallelism: totals do not
    depend on the shard count because blocks are summed in block order.
    """
    if engine not in ("auto", "jit", "python"):
        raise DomainError(f"unknown engine {engine!r}")
    total = _ops.factorial(two_n)
    limit = DEFAULT_BUDGET if budget is None else budget
    if total > limit:
        raise ResourceBudgetError(
            f"full scan of S_{two_n} enumerates {total} elements",
            cost=total,
            budget=limit,
        )
    z0inv = _ops.inverse0(_ops.pad0(z0, two_n))
    use_jit = HAVE_JIT if engine == "auto" else engine == "jit"
    if engine == "jit" and not HAVE_JIT:
        raise ResourceBudgetError("jit engine requested but numba is unavailable")
    blocks = [
        (b, min(b + RANK_BLOCK, total)) for b in range(0, total, RANK_BLOCK)
    ]
    if use_jit:
        z0inv_arr = np.asarray(z0inv, dtype=np.int64)

        def work(block):
            return _count_pass(
                two_n, block[0], block[1], z0inv_arr, mu_key, lam_key, supp_filter
            )

    else:

        def work(block):
            return _ops.count_pass_py(
                two_n, block[0], block[1], z0inv, mu_key, lam_key, supp_filter
            )

    if shards <= 1 or len(blocks) == 1:
        return sum(work(block) for block in blocks)
    with ThreadPoolExecutor(max_workers=shards) as pool:
        return sum(pool.map(work, blocks))
