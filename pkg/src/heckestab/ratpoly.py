"""Exact rational polynomials and Newton interpolation.

Everything here is Fraction arithmetic; no floats.  Coefficients are
stored ascending, trailing zeros trimmed, so the zero polynomial has no
coefficients and degree -1.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DomainError


class RationalPolynomial:
    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Iterable[Fraction | int] = ()):
        coeffs = [Fraction(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self._coeffs = tuple(coeffs)

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def is_integral(self) -> bool:
        """True when every coefficient is an integer."""
        return all(c.denominator == 1 for c in self._coeffs)

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def scale(self, factor) -> "RationalPolynomial":
        f = Fraction(factor)
        return RationalPolynomial(c * f for c in self._coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"RationalPolynomial({list(self._coeffs)!r})"

    def format(self, var: str = "n") -> str:
        if not self._coeffs:
            return "0"
        pieces = []
        for power in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[power]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if power == 0:
                body = str(mag)
            else:
                unit = var if power == 1 else f"{var}^{power}"
                body = unit if mag == 1 else f"{mag}*{unit}"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out


def interpolate(points: Sequence[tuple[int, Fraction | int]]) -> RationalPolynomial:
    """The unique polynomial of degree < len(points) through the points."""
    if not points:
        raise DomainError("at least one point is required")
    xs = [Fraction(p[0]) for p in points]
    if len(set(xs)) != len(xs):
        raise DomainError("interpolation nodes must be distinct")
    diffs = [Fraction(p[1]) for p in points]
    # divided-difference table, one level at a time
    newton = [diffs[0]]
    for level in range(1, len(points)):
        diffs = [
            (diffs[i + 1] - diffs[i]) / (xs[i + level] - xs[i])
            for i in range(len(diffs) - 1)
        ]
        newton.append(diffs[0])
    # expand sum_j newton[j] * prod_{i<j} (x - xs[i])
    coeffs = [Fraction(0)] * len(points)
    basis = [Fraction(1)]
    for j, c in enumerate(newton):
        for power, b in enumerate(basis):
            coeffs[power] += c * b
        # basis <- basis * (x - xs[j])
        nxt = [Fraction(0)] * (len(basis) + 1)
        for power, b in enumerate(basis):
            nxt[power] -= b * xs[j]
            nxt[power + 1] += b
        basis = nxt
    return RationalPolynomial(coeffs)
