"""Exact arithmetic layer: rationals, binomial coefficients, and the
affine-linear symbolic expressions in the external coefficients c_j, b_j.

Every value is immutable and every operation is exact; no floating point
is used anywhere in the package.  Rationals are ``fractions.Fraction``,
which already keeps gcd-reduced canonical form with a positive
denominator and arbitrary-precision integer parts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Mapping, Union

Rational = Fraction

RationalLike = Union[int, Fraction]


def parse_rational(text: str) -> Fraction:
    """Parse a rational literal "p/q"; a bare integer "p" means p/1."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational literal: {text!r}") from exc


def format_rational(x: RationalLike) -> str:
    """Render a rational as "p/q" with the sign carried by the numerator."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def binomial(n: int, m: int) -> Fraction:
    """Binomial coefficient C(n, m) as a Rational; 0 when m < 0 or m > n."""
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got n={n}")
    if m < 0 or m > n:
        return Fraction(0)
    return Fraction(comb(n, m))


@dataclass(frozen=True, order=True)
class ExtSymbol:
    """An external coefficient symbol: family "c" models c_j, "b" models b_j."""

    family: str
    index: int

    def __post_init__(self) -> None:
        if self.family not in ("c", "b"):
            raise ValueError(f"symbol family must be 'c' or 'b', got {self.family!r}")
        if self.index < 1:
            raise ValueError(f"symbol index must be >= 1, got {self.index}")

    def __str__(self) -> str:
        return f"{self.family}_{self.index}"


def c_sym(j: int) -> ExtSymbol:
    return ExtSymbol("c", j)


def b_sym(j: int) -> ExtSymbol:
    return ExtSymbol("b", j)


def _display_key(s: ExtSymbol) -> tuple[int, int]:
    # c_j before b_j, then by index
    return (0 if s.family == "c" else 1, s.index)


class AffineExpr:
    """An exact affine-linear combination ``const + sum coef_s * s`` over
    the external symbols.

    The symbols only ever occur linearly, so multiplying two expressions
    that both carry symbols is rejected.  Instances are immutable; all
    arithmetic returns new objects.
    """

    __slots__ = ("_const", "_terms")

    def __init__(
        self,
        const: RationalLike = 0,
        terms: Mapping[ExtSymbol, RationalLike] | None = None,
    ):
        self._const = Fraction(const)
        cleaned: dict[ExtSymbol, Fraction] = {}
        if terms:
            for sym, coef in terms.items():
                coef = Fraction(coef)
                if coef:
                    cleaned[sym] = coef
        self._terms = cleaned

    @property
    def const(self) -> Fraction:
        return self._const

    @property
    def terms(self) -> dict[ExtSymbol, Fraction]:
        return dict(self._terms)

    def is_constant(self) -> bool:
        return not self._terms

    def constant_value(self) -> Fraction:
        if self._terms:
            raise ValueError(f"expression is not constant: {self}")
        return self._const

    def coefficient(self, sym: ExtSymbol) -> Fraction:
        return self._terms.get(sym, Fraction(0))

    def substitute(self, values: Mapping[ExtSymbol, RationalLike]) -> "AffineExpr":
        """Replace every symbol present in ``values``; others stay symbolic."""
        const = self._const
        terms: dict[ExtSymbol, Fraction] = {}
        for sym, coef in self._terms.items():
            if sym in values:
                const += coef * Fraction(values[sym])
            else:
                terms[sym] = coef
        return AffineExpr(const, terms)

    def __add__(self, other) -> "AffineExpr":
        other = as_affine(other)
        terms = dict(self._terms)
        for sym, coef in other._terms.items():
            terms[sym] = terms.get(sym, Fraction(0)) + coef
        return AffineExpr(self._const + other._const, terms)

    __radd__ = __add__

    def __neg__(self) -> "AffineExpr":
        return AffineExpr(-self._const, {s: -c for s, c in self._terms.items()})

    def __sub__(self, other) -> "AffineExpr":
        return self + (-as_affine(other))

    def __rsub__(self, other) -> "AffineExpr":
        return as_affine(other) + (-self)

    def __mul__(self, other) -> "AffineExpr":
        other = as_affine(other)
        if self._terms and other._terms:
            raise ValueError(
                "product of two non-constant affine expressions is not affine"
            )
        if other._terms:
            self, other = other, self
        scalar = other._const
        return AffineExpr(
            self._const * scalar, {s: c * scalar for s, c in self._terms.items()}
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "AffineExpr":
        other = as_affine(other)
        scalar = other.constant_value()
        if scalar == 0:
            raise ZeroDivisionError("division of affine expression by zero")
        return AffineExpr(
            self._const / scalar, {s: c / scalar for s, c in self._terms.items()}
        )

    def __bool__(self) -> bool:
        return bool(self._const) or bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = AffineExpr(other)
        if not isinstance(other, AffineExpr):
            return NotImplemented
        return self._const == other._const and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self._const, frozenset(self._terms.items())))

    def __str__(self) -> str:
        if self.is_constant():
            return format_rational(self._const)
        parts: list[str] = []
        if self._const:
            parts.append(format_rational(self._const))
        for sym in sorted(self._terms, key=_display_key):
            coef = self._terms[sym]
            piece = f"{format_rational(abs(coef))}*{sym}"
            if not parts:
                parts.append(piece if coef > 0 else f"-{piece}")
            else:
                parts.append(f"+ {piece}" if coef > 0 else f"- {piece}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"AffineExpr({self})"


AffineLike = Union[int, Fraction, AffineExpr]


def as_affine(x: AffineLike) -> AffineExpr:
    if isinstance(x, AffineExpr):
        return x
    if isinstance(x, (int, Fraction)):
        return AffineExpr(x)
    raise TypeError(f"cannot interpret {type(x).__name__} as an affine expression")


def substitute(e: AffineExpr, values: Mapping[ExtSymbol, RationalLike]) -> AffineExpr:
    """Functional form of :meth:`AffineExpr.substitute`."""
    return e.substitute(values)
