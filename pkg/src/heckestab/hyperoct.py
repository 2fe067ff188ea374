"""The hyperoctahedral group B_n inside S_2n.

B_n is the subgroup of S_2n preserving the set of couples
D_i = {2i-1, 2i}.  Equivalently it is the centralizer of the fixed
involution t_n = (1 2)(3 4)...(2n-1 2n).  Its order is 2^n n!.

All public entry points speak 1-indexed ``Permutation``; internal loops
work on 0-indexed tuples where the partner of p is ``p ^ 1``.
"""

from __future__ import annotations

import random
from typing import Iterator

from . import _ops
from .config import DEFAULT_SEED
from .errors import DomainError, ResourceBudgetError
from .perms import Permutation

ENUM_RANK_LIMIT = 8


def partner(k: int) -> int:
    """The other point of k's couple: 2i-1 <-> 2i."""
    if k < 1:
        raise DomainError(f"points are 1-indexed, got {k}")
    return k + 1 if k % 2 else k - 1


def t_n(n: int) -> Permutation:
    """The product of all couple transpositions (1 2)(3 4)...(2n-1 2n)."""
    if n < 0:
        raise DomainError(f"rank must be nonnegative, got {n}")
    return Permutation.from_cycles([(2 * i - 1, 2 * i) for i in range(1, n + 1)])


def is_in_B(x: Permutation, n: int) -> bool:
    """Whether x preserves the couples of {1, ..., 2n}."""
    if x.degree > 2 * n:
        raise DomainError(f"degree {x.degree} exceeds 2n = {2 * n}")
    for i in range(1, n + 1):
        a, b = x(2 * i - 1), x(2 * i)
        if (a - 1) ^ (b - 1) != 1:  # 0-indexed partners differ in the last bit only
            return False
    return True


def _block_perm0(sigma: tuple[int, ...], bits: int) -> tuple[int, ...]:
    """0-indexed element of B_n: couple i -> couple sigma[i], flipped if bit i set."""
    n = len(sigma)
    img = [0] * (2 * n)
    for i in range(n):
        j = sigma[i]
        if bits >> i & 1:
            img[2 * i] = 2 * j + 1
            img[2 * i + 1] = 2 * j
        else:
            img[2 * i] = 2 * j
            img[2 * i + 1] = 2 * j + 1
    return tuple(img)


def enumerate_B(n: int, force: bool = False) -> Iterator[Permutation]:
    """All 2^n n! elements of B_n, couple permutation outer, sign bits inner."""
    if n < 0:
        raise DomainError(f"rank must be nonnegative, got {n}")
    if n > ENUM_RANK_LIMIT and not force:
        raise ResourceBudgetError(
            f"enumerate_B({n}) would yield {_ops.factorial(n) << n} elements; "
            f"pass force=True to override",
        )
    import itertools

    for sigma in itertools.permutations(range(n)):
        for bits in range(1 << n):
            yield Permutation.from_images0(_block_perm0(sigma, bits))


def generators_B(n: int) -> list[Permutation]:
    """Couple flips then adjacent couple swaps; every generator is an involution."""
    if n < 0:
        raise DomainError(f"rank must be nonnegative, got {n}")
    gens = [Permutation.from_cycles([(2 * i - 1, 2 * i)]) for i in range(1, n + 1)]
    for i in range(1, n):
        gens.append(
            Permutation.from_cycles([(2 * i - 1, 2 * i + 1), (2 * i, 2 * i + 2)])
        )
    return gens


def random_B(n: int, rng: random.Random | None = None, seed: int | None = None) -> Permutation:
    """Uniform element of B_n: random couple permutation plus fair flips."""
    if n < 1:
        raise DomainError(f"rank must be positive, got {n}")
    if rng is None:
        rng = random.Random(DEFAULT_SEED if seed is None else seed)
    sigma = list(range(n))
    rng.shuffle(sigma)
    bits = rng.getrandbits(n)
    return Permutation.from_images0(_block_perm0(tuple(sigma), bits))
