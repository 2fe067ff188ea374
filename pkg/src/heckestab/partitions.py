"""Integer partitions and the weight statistic used throughout the package.

A partition is a weakly decreasing tuple of positive integers.  Its
*weight* is ``length + size``.  Weight, not size, is the natural scale
here: a permutation whose stable cycle type is ``lam`` occupies
``weight(lam)`` points, and the canonical coset representative of type
``mu`` occupies ``2 * weight(mu)`` points.

Two conversions connect stable and ambient types.  ``stable_form`` drops
one from every part (discarding what becomes zero); ``ambient_type(n)``
adds one to every part and pads with singleton parts up to total size n.
They are mutually inverse on the ranks where both are defined.

Text grammar: comma-separated parts such as ``"3,2,1"``; the empty
partition is written ``"-"``.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import DomainError


class Partition:
    """Immutable integer partition, parts sorted decreasingly."""

    __slots__ = ("_parts",)

    def __init__(self, parts: Iterable[int] = ()):
        ps = tuple(sorted((int(p) for p in parts), reverse=True))
        if ps and ps[-1] <= 0:
            raise DomainError(f"partition parts must be positive, got {ps}")
        self._parts = ps

    @property
    def parts(self) -> tuple[int, ...]:
        return self._parts

    @property
    def length(self) -> int:
        return len(self._parts)

    @property
    def size(self) -> int:
        return sum(self._parts)

    @property
    def weight(self) -> int:
        """length + size; the number of points a stable type of this shape occupies."""
        return len(self._parts) + sum(self._parts)

    def multiplicity(self, part: int) -> int:
        return self._parts.count(part)

    def union(self, other: "Partition") -> "Partition":
        """Multiset union (all parts of both, re-sorted)."""
        return Partition(self._parts + other.parts)

    def __add__(self, other: "Partition") -> "Partition":
        """Componentwise sum after zero-padding the shorter."""
        a, b = self._parts, other.parts
        if len(a) < len(b):
            a, b = b, a
        b = b + (0,) * (len(a) - len(b))
        return Partition(x + y for x, y in zip(a, b))

    def difference(self, other: "Partition") -> "Partition":
        """Multiset difference; other must be a sub-multiset of self."""
        remaining = list(self._parts)
        for p in other.parts:
            try:
                remaining.remove(p)
            except ValueError:
                raise DomainError(f"{other} is not a sub-multiset of {self}") from None
        return Partition(remaining)

    def completion(self, n: int) -> "Partition":
        """The n-completion: union with 1^(n - size).  Requires n >= size."""
        if n < self.size:
            raise DomainError(f"completion rank {n} is below partition size {self.size}")
        return Partition(self._parts + (1,) * (n - self.size))

    def stable_form(self) -> "Partition":
        """Subtract one from every part and drop the zeros.

        Maps an ambient (cycle or coset) type to the stable type."""
        return Partition(p - 1 for p in self._parts if p > 1)

    def ambient_type(self, n: int) -> "Partition":
        """The ambient type, at rank n, of an element with this stable type.

        Adds one to every part and pads with singletons: the result is a
        partition of n.  Requires weight <= n."""
        w = self.weight
        if w > n:
            raise DomainError(f"stable type of weight {w} does not embed at rank {n}")
        return Partition(tuple(p + 1 for p in self._parts) + (1,) * (n - w))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"3,2,1"`` or ``"-"`` (empty)."""
        text = text.strip()
        if text == "-" or text == "":
            return cls()
        try:
            parts = tuple(int(tok) for tok in text.split(","))
        except ValueError:
            raise DomainError(f"cannot parse partition from {text!r}") from None
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise DomainError(f"partition parts must be weakly decreasing: {text!r}")
        return cls(parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self._parts)

    def __len__(self) -> int:
        return len(self._parts)

    def __getitem__(self, i):
        return self._parts[i]

    def __bool__(self) -> bool:
        return bool(self._parts)

    def __eq__(self, other) -> bool:
        if isinstance(other, Partition):
            return self._parts == other.parts
        if isinstance(other, tuple):
            return self._parts == other
        return NotImplemented

    def __lt__(self, other: "Partition") -> bool:
        return self._parts < other.parts

    def __hash__(self) -> int:
        return hash(self._parts)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self._parts) if self._parts else "-"

    def __repr__(self) -> str:
        return f"Partition({self._parts!r})"
