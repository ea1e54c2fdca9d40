"""Boundary combinatorics of the moduli space of b-pointed rational
curves, and the symmetric divisor classes psi, kappa, delta and the
canonical class restricted to the generators that matter for branch
divisors of the covers studied here (T2 and the T3j).

A boundary divisor is labelled by a subset L of {1..b} with
2 <= #L <= b-2, up to complement.  The normal form keeps the
representative meeting {1, 2, 3} in at most one point; exactly one of
L, complement(L) satisfies this.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator

from .bases import DivisorClass, T2, T3j, m0b_sym_basis


class MarkedSetError(ValueError):
    """Invalid boundary label data (size range or mismatched b)."""


@dataclass(frozen=True)
class MarkedSet:
    """A normalized boundary-divisor label for b-pointed rational curves."""

    b: int
    members: frozenset[int]

    def __post_init__(self) -> None:
        if self.b < 4:
            raise MarkedSetError(f"need b >= 4 marked points, got b={self.b}")
        if not self.members <= frozenset(range(1, self.b + 1)):
            raise MarkedSetError(f"members {set(self.members)} not within 1..{self.b}")
        n = len(self.members)
        if not 2 <= n <= self.b - 2:
            raise MarkedSetError(
                f"label size must satisfy 2 <= size <= b-2, got {n} with b={self.b}"
            )
        if len(self.members & {1, 2, 3}) > 1:
            raise MarkedSetError(
                f"label {set(self.members)} is not normalized; "
                "use normalize() to build MarkedSets"
            )

    def complement(self) -> frozenset[int]:
        return frozenset(range(1, self.b + 1)) - self.members

    def __str__(self) -> str:
        return "{" + ",".join(str(i) for i in sorted(self.members)) + "}"


def normalize(b: int, s: Iterable[int]) -> MarkedSet:
    """Return the normalized representative of the label s (or its
    complement), the one meeting {1,2,3} in at most one point."""
    members = frozenset(s)
    if not 2 <= len(members) <= b - 2:
        raise MarkedSetError(
            f"label size must satisfy 2 <= size <= b-2, got {len(members)} with b={b}"
        )
    if not members <= frozenset(range(1, b + 1)):
        raise MarkedSetError(f"members {set(members)} not within 1..{b}")
    if len(members & {1, 2, 3}) > 1:
        members = frozenset(range(1, b + 1)) - members
    return MarkedSet(b, members)


def intersect_nonempty(a: MarkedSet, b: MarkedSet) -> bool:
    """Whether the two labelled boundary divisors have nonempty
    intersection: true exactly when the labels are nested, disjoint, or
    jointly exhaustive (equivalently, when the size of their union lies
    in {#A, #B, #A + #B, b}).  The answer does not depend on which
    representative of either label is used."""
    if a.b != b.b:
        raise MarkedSetError(f"mismatched number of marked points: {a.b} != {b.b}")
    sa, sb = a.members, b.members
    return (
        sa <= sb
        or sb <= sa
        or not (sa & sb)
        or sa | sb == frozenset(range(1, a.b + 1))
    )


def forgetful_pullback(s: MarkedSet) -> tuple[MarkedSet, MarkedSet]:
    """The two boundary labels over b+1 points lying over s under the
    map that forgets the last point."""
    b1 = s.b + 1
    return normalize(b1, s.members), normalize(b1, s.members | {b1})


def count_boundary(b: int) -> int:
    """Number of boundary divisors, 2^(b-1) - b - 1."""
    if b < 4:
        raise MarkedSetError(f"need b >= 4, got {b}")
    return 2 ** (b - 1) - b - 1


def enumerate_boundary(b: int) -> Iterator[MarkedSet]:
    """All normalized boundary labels, by exhaustive enumeration."""
    if b < 4:
        raise MarkedSetError(f"need b >= 4, got {b}")
    points = range(1, b + 1)
    for size in range(2, b - 1):
        for combo in combinations(points, size):
            members = frozenset(combo)
            if len(members & {1, 2, 3}) <= 1:
                yield MarkedSet(b, members)


def psi_full(b: int) -> dict[int, Fraction]:
    """Coefficients of the total cotangent class on the full symmetric
    boundary basis: j -> (b-j)j/(b-1) for 2 <= j <= floor(b/2)."""
    if b < 4:
        raise MarkedSetError(f"need b >= 4, got {b}")
    return {j: Fraction((b - j) * j, b - 1) for j in range(2, b // 2 + 1)}


@lru_cache(maxsize=None)
def psi_restricted(k: int) -> DivisorClass:
    """The total cotangent class restricted to {T2, T3j}, with b = 6k."""
    b = 6 * k
    coeffs = {T2: Fraction(2 * (b - 2), b - 1)}
    for j in range(1, k + 1):
        coeffs[T3j(j)] = Fraction(3 * j * (b - 3 * j), b - 1)
    return DivisorClass(m0b_sym_basis(k), coeffs)


@lru_cache(maxsize=None)
def delta_restricted(k: int) -> DivisorClass:
    """The total boundary class restricted to {T2, T3j}."""
    coeffs = {T2: Fraction(1)}
    for j in range(1, k + 1):
        coeffs[T3j(j)] = Fraction(1)
    return DivisorClass(m0b_sym_basis(k), coeffs)


@lru_cache(maxsize=None)
def kappa_class(k: int) -> DivisorClass:
    """The ample class psi - delta on the restricted basis: the T2
    coefficient is (b-3)/(b-1) and the T3j coefficient is
    (3j-1)(b-3j-1)/(b-1), with b = 6k."""
    b = 6 * k
    coeffs = {T2: Fraction(b - 3, b - 1)}
    for j in range(1, k + 1):
        coeffs[T3j(j)] = Fraction((3 * j - 1) * (b - 3 * j - 1), b - 1)
    return DivisorClass(m0b_sym_basis(k), coeffs)


@lru_cache(maxsize=None)
def canonical_class(k: int) -> DivisorClass:
    """The canonical class of the b-pointed rational moduli space
    restricted to {T2, T3j}; the other symmetric generators pull back to
    zero on the Hurwitz space, so they are dropped."""
    b = 6 * k
    coeffs = {T2: Fraction(-2, b - 1)}
    for j in range(1, k + 1):
        coeffs[T3j(j)] = Fraction(3 * j * (b - 3 * j), b - 1) - 2
    return DivisorClass(m0b_sym_basis(k), coeffs)
