"""Permutations in one-line notation on {1, ..., degree}.

A ``Permutation`` is immutable and 1-indexed: ``images[i - 1]`` is the
image of ``i``.  Points above the degree are fixed, so S_m embeds in S_n
for m <= n; equality and hashing ignore trailing fixed points to make the
embedding invisible.

Composition: ``(x * y)(i) = x(y(i))``.  The right factor acts first.
This is the convention every support and coset identity in the package
relies on; do not flip it.

Parsing accepts cycle form ``"(1 3 5)(2 4)"`` and one-line form
``"3 2 5 4 1"`` (whitespace separated images of 1..m).
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

from . import _ops
from .errors import DomainError
from .partitions import Partition

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


class Permutation:
    """An element of a finite symmetric group, padding-aware."""

    __slots__ = ("_images", "_trimlen")

    def __init__(self, images: Iterable[int] = ()):
        imgs = tuple(int(v) for v in images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise DomainError(f"not a bijection of 1..{len(imgs)}: {imgs}")
        self._images = imgs
        k = len(imgs)
        while k and imgs[k - 1] == k:
            k -= 1
        self._trimlen = k

    @property
    def images(self) -> tuple[int, ...]:
        return self._images

    @property
    def degree(self) -> int:
        return len(self._images)

    @property
    def images0(self) -> tuple[int, ...]:
        """0-indexed one-line form (kernel representation)."""
        return tuple(v - 1 for v in self._images)

    @classmethod
    def from_images0(cls, images0: Sequence[int]) -> "Permutation":
        return cls(v + 1 for v in images0)

    @classmethod
    def identity(cls, degree: int = 0) -> "Permutation":
        return cls(range(1, degree + 1))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int = 0) -> "Permutation":
        """Build from disjoint cycles of 1-indexed points."""
        cycles = [tuple(int(p) for p in c) for c in cycles]
        m = max([degree] + [max(c) for c in cycles if c])
        imgs = list(range(1, m + 1))
        seen: set[int] = set()
        for c in cycles:
            for p in c:
                if p < 1:
                    raise DomainError(f"cycle point must be positive: {p}")
                if p in seen:
                    raise DomainError(f"cycles are not disjoint at point {p}")
                seen.add(p)
            for i, p in enumerate(c):
                imgs[p - 1] = c[(i + 1) % len(c)]
        return cls(imgs)

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Parse cycle form or one-line form."""
        text = text.strip()
        if not text:
            raise DomainError("empty permutation literal")
        if text.startswith("("):
            stripped = _CYCLE_RE.sub("", text)
            if stripped.strip():
                raise DomainError(f"stray characters in cycle form: {text!r}")
            cycles = []
            for group in _CYCLE_RE.findall(text):
                toks = group.split()
                if not toks:
                    continue
                try:
                    cycles.append(tuple(int(t) for t in toks))
                except ValueError:
                    raise DomainError(f"bad cycle {group!r} in {text!r}") from None
            return cls.from_cycles(cycles)
        try:
            imgs = [int(t) for t in text.split()]
        except ValueError:
            raise DomainError(f"cannot parse permutation from {text!r}") from None
        return cls(imgs)

    def __call__(self, point: int) -> int:
        if point < 1:
            raise DomainError(f"points are 1-indexed, got {point}")
        if point <= len(self._images):
            return self._images[point - 1]
        return point

    def __mul__(self, other: "Permutation") -> "Permutation":
        if not isinstance(other, Permutation):
            return NotImplemented
        m = max(len(self._images), len(other._images))
        x = _ops.pad0(self.images0, m)
        y = _ops.pad0(other.images0, m)
        return Permutation.from_images0(_ops.compose0(x, y))

    def inverse(self) -> "Permutation":
        return Permutation.from_images0(_ops.inverse0(self.images0))

    def pad(self, degree: int) -> "Permutation":
        if degree <= len(self._images):
            return self
        return Permutation(self._images + tuple(range(len(self._images) + 1, degree + 1)))

    def trim(self) -> "Permutation":
        if self._trimlen == len(self._images):
            return self
        return Permutation(self._images[: self._trimlen])

    def support(self) -> frozenset[int]:
        return frozenset(i + 1 for i, v in enumerate(self._images) if v != i + 1)

    def is_identity(self) -> bool:
        return self._trimlen == 0

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its minimal point, sorted by it."""
        seen: set[int] = set()
        out: list[tuple[int, ...]] = []
        for start in range(1, len(self._images) + 1):
            if start in seen or self(start) == start:
                continue
            cyc = [start]
            seen.add(start)
            p = self(start)
            while p != start:
                cyc.append(p)
                seen.add(p)
                p = self(p)
            out.append(tuple(cyc))
        return out

    def stable_cycle_type(self) -> Partition:
        """Cycle lengths each reduced by one; singleton cycles vanish."""
        return Partition(len(c) - 1 for c in self.cycles())

    def cycle_string(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(str(p) for p in c) + ")" for c in cycs)

    def one_line_string(self) -> str:
        return " ".join(str(v) for v in self._images) if self._images else ""

    def __eq__(self, other) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._images[: self._trimlen] == other._images[: other._trimlen]

    def __hash__(self) -> int:
        return hash(self._images[: self._trimlen])

    def __bool__(self) -> bool:
        return self._trimlen != 0

    def __str__(self) -> str:
        return self.cycle_string()

    def __repr__(self) -> str:
        return f"Permutation({self._images!r})"


def compose(x: Permutation, y: Permutation) -> Permutation:
    """(x y)(i) = x(y(i)); degrees are padded to the larger one."""
    return x * y


def in_conjugacy_class(x: Permutation, lam: Partition, n: int) -> bool:
    """Whether x lies in the S_n conjugacy class with stable cycle type lam."""
    if x.degree > n:
        raise DomainError(f"degree {x.degree} exceeds ambient rank {n}")
    return x.stable_cycle_type() == lam
