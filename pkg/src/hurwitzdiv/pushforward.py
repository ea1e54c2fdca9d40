"""Push-forward of Hurwitz classes to the moduli space of genus-2k
curves, the composite correspondence actions, the branch divisor of the
covering map, and the Prym pullback classes.

Push-forward results exist in two normalizations: ``raw`` carries the
(6k)! factor that the degree of the covering-space map contributes,
``per-factorial-b`` divides it out so tables stay readable.  The
coefficients of delta_j for j >= 1 involve the external symbols c_j and
b_j, which stay symbolic unless an :class:`ExternalCoeffs` table is
supplied; the lambda and delta_0 coefficients are always symbol-free.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from math import factorial
from typing import Mapping, NamedTuple

from .bases import (
    ClassMap,
    DivisorClass,
    E0,
    E2,
    E3,
    Ejc,
    LAMBDA,
    T3j,
    T2,
    delta,
    hurwitz_basis,
    mg_basis,
)
from .core import AffineExpr, ExtSymbol, b_sym, c_sym
from .m0b import kappa_class
from .trace import (
    alpha_coeff,
    catalan_number,
    d_coeff,
    a_coeff,
    e_coeff,
    phi_pull_boundary,
    phi_pull_lambda,
    phihat_pull_boundary,
    phihat_pull_lambda,
    q_pullback,
    u_coeff,
)

RAW = "raw"
PER_FACTORIAL_B = "per-factorial-b"

_NORMALIZATIONS = (RAW, PER_FACTORIAL_B)


def factorial_b(k: int) -> int:
    """(6k)!, the branch-point labelling factor."""
    return factorial(6 * k)


def _check_normalization(normalization: str) -> str:
    if normalization not in _NORMALIZATIONS:
        raise ValueError(f"unknown normalization {normalization!r}")
    return normalization


def convert_normalization(
    d: DivisorClass, k: int, source: str, target: str
) -> DivisorClass:
    """Exact conversion between the two normalizations."""
    _check_normalization(source)
    _check_normalization(target)
    if source == target:
        return d
    if target == RAW:
        return d * factorial_b(k)
    return d / factorial_b(k)


@dataclass(frozen=True)
class ExternalCoeffs:
    """A complete table of the external coefficients c_1..c_k and
    b_1..b_k for one value of k.  Partial tables are rejected."""

    k: int
    c: Mapping[int, Fraction]
    b: Mapping[int, Fraction]

    def __post_init__(self) -> None:
        expected = set(range(1, self.k + 1))
        for label, table in (("c", self.c), ("b", self.b)):
            if set(table) != expected:
                raise ValueError(
                    f"external table {label!r} must cover exactly 1..{self.k}, "
                    f"got indices {sorted(table)}"
                )

    def substitution(self) -> dict[ExtSymbol, Fraction]:
        values: dict[ExtSymbol, Fraction] = {}
        for j, value in self.c.items():
            values[c_sym(j)] = Fraction(value)
        for j, value in self.b.items():
            values[b_sym(j)] = Fraction(value)
        return values

    def apply(self, d: DivisorClass) -> DivisorClass:
        return d.substitute(self.substitution())


@lru_cache(maxsize=None)
def p_push(k: int, normalization: str = PER_FACTORIAL_B) -> ClassMap:
    """The push-forward map from the Hurwitz basis to the genus-2k
    moduli basis, row by generator."""
    _check_normalization(normalization)
    n = catalan_number(k)
    mg = mg_basis(k)
    rows: dict[str, DivisorClass] = {
        E0: DivisorClass(mg, {delta(0): n / 2})
    }
    if k >= 3:
        lead = Fraction(k - 2, 2 * k - 1) * n
        coeffs: dict[str, AffineExpr] = {
            LAMBDA: AffineExpr(lead * (18 * k * k + 51 * k - 9)),
            delta(0): AffineExpr(-lead * (3 * k * k + 4 * k - 1)),
        }
        for j in range(1, k + 1):
            coeffs[delta(j)] = AffineExpr(0, {c_sym(j): Fraction(1, 2)})
        rows[E2] = DivisorClass(mg, coeffs)
    if k >= 2:
        lead = Fraction(3, 2 * (2 * k - 1)) * n
        coeffs = {
            LAMBDA: AffineExpr(lead * (12 * k * k + 46 * k - 8)),
            delta(0): AffineExpr(-lead * (2 * k * k + 4 * k - 1)),
        }
        for j in range(1, k + 1):
            coeffs[delta(j)] = AffineExpr(0, {b_sym(j): -lead})
        rows[E3] = DivisorClass(mg, coeffs)
    for j in range(1, k + 1):
        for c in range(j // 2 + 1):
            rows[Ejc(j, c)] = DivisorClass(mg, {delta(j): e_coeff(k, j, c)})
    pushed = ClassMap(hurwitz_basis(k), mg, rows)
    if normalization == RAW:
        pushed = pushed.scale(factorial_b(k))
    return pushed


@lru_cache(maxsize=None)
def p_phi_lambda(k: int, normalization: str = PER_FACTORIAL_B) -> DivisorClass:
    """Push-forward of the pulled-back Hodge class of the trace-curve
    moduli space."""
    return p_push(k, normalization).apply(phi_pull_lambda(k))


@lru_cache(maxsize=None)
def p_phihat_lambda(k: int, normalization: str = PER_FACTORIAL_B) -> DivisorClass:
    """Push-forward of the pulled-back Hodge class of the reduced-trace
    moduli space."""
    return p_push(k, normalization).apply(phihat_pull_lambda(k))


@lru_cache(maxsize=None)
def p_phi_delta(k: int, j_prime: int, normalization: str = RAW) -> DivisorClass:
    """Correspondence action on the boundary class delta'_{j'}."""
    return p_push(k, normalization).apply(phi_pull_boundary(k, j_prime))


@lru_cache(maxsize=None)
def p_phihat_delta(k: int, j_hat: int, normalization: str = RAW) -> DivisorClass:
    """Correspondence action on the reduced-trace boundary class."""
    return p_push(k, normalization).apply(phihat_pull_boundary(k, j_hat))


def p_phi_lambda_closed_coeffs(k: int) -> tuple[Fraction, Fraction]:
    """Closed-form (lambda, delta_0) coefficients of
    :func:`p_phi_lambda` in per-factorial-b normalization; valid for
    k >= 3 (below that the E2/E3 generators are missing)."""
    n = catalan_number(k)
    lam = n * Fraction(18 * k**3 + 31 * k * k - 69 * k + 11, 2 * k - 1)
    d0 = -n * Fraction(3 * k**3 - 5 * k + 1, 2 * k - 1)
    return lam, d0


def p_phihat_lambda_closed_coeffs(k: int) -> tuple[Fraction, Fraction]:
    """Closed-form (lambda, delta_0) coefficients of
    :func:`p_phihat_lambda`, stated for k >= 3."""
    n = catalan_number(k)
    lam = n * Fraction(18 * k**3 + 19 * k * k - 117 * k + 20, 2 * (2 * k - 1))
    d0 = -n * Fraction((k - 2) * (3 * k * k + 4 * k - 1), 2 * (2 * k - 1))
    return lam, d0


def p_phi_delta0_closed_coeffs(k: int) -> tuple[Fraction, Fraction]:
    """Closed-form (lambda, delta_0) coefficients of the pushed
    boundary class delta'_0, per-factorial-b."""
    n = catalan_number(k)
    lam = 6 * n * Fraction((6 * k - 1) * (2 * k * k + 3 * k - 8), 2 * k - 1)
    d0 = -2 * n * Fraction(6 * k**3 - 3 * k * k - 10 * k + 2, 2 * k - 1)
    return lam, d0


def p_phihat_delta0_closed_coeffs(k: int) -> tuple[Fraction, Fraction]:
    """Closed-form (lambda, delta_0) coefficients of the pushed
    reduced-trace boundary class, per-factorial-b."""
    n = catalan_number(k)
    lam = 6 * n * Fraction((6 * k - 1) * (k + 3) * (k - 2), 2 * k - 1)
    d0 = -n * Fraction(6 * k**3 - 6 * k * k - 15 * k + 3, 2 * k - 1)
    return lam, d0


def p_phi_lambda_delta_expected(k: int, j: int) -> AffineExpr:
    """The delta_j coefficient of :func:`p_phi_lambda` predicted by the
    row structure of the push-forward: the c_j part carries
    (10k-1)/(4(6k-1)), the b_j part carries the E3 weight, and the
    constant is one twelfth of sum e_{j,c} (a_{j,c} + d_{j,c})."""
    n = catalan_number(k)
    const = sum(
        (
            e_coeff(k, j, c) * (a_coeff(k, j, c) + d_coeff(k, j, c))
            for c in range(j // 2 + 1)
        ),
        Fraction(0),
    ) / 12
    terms: dict[ExtSymbol, Fraction] = {}
    if k >= 3:
        terms[c_sym(j)] = Fraction(10 * k - 1, 4 * (6 * k - 1))
    if k >= 2:
        terms[b_sym(j)] = -n * Fraction(
            6 * k * k + 11 * k + 1, 4 * (12 * k * k - 8 * k + 1)
        )
    return AffineExpr(const, terms)


def p_phihat_lambda_delta_expected(k: int, j: int) -> AffineExpr:
    """The delta_j coefficient of :func:`p_phihat_lambda` predicted by
    the row structure of the push-forward."""
    n = catalan_number(k)
    const = sum(
        (e_coeff(k, j, c) * u_coeff(k, j, c) for c in range(j // 2 + 1)),
        Fraction(0),
    ) / 12
    terms: dict[ExtSymbol, Fraction] = {}
    if k >= 3:
        terms[c_sym(j)] = Fraction(5 * k, 4 * (6 * k - 1))
    if k >= 2:
        terms[b_sym(j)] = -n * Fraction(
            3 * k * k - 8 * k + 5, 4 * (6 * k - 1) * (2 * k - 1)
        )
    return AffineExpr(const, terms)


@lru_cache(maxsize=None)
def p_q_map(k: int, normalization: str = PER_FACTORIAL_B) -> ClassMap:
    """The composite correspondence action on the symmetric boundary
    classes of the 6k-pointed rational moduli space, by the generic-k
    rows.

    For k >= 3 this equals composing :func:`q_pullback` with
    :func:`p_push`.  The generic rows keep the E2/E3 content that the
    small-k Hurwitz bases drop (it only cancels for k >= 2 in the
    lambda/delta_0 part), so the closed-form slope bound of the ample
    boundary class holds for every k.
    """
    _check_normalization(normalization)
    n = catalan_number(k)
    mg = mg_basis(k)
    lead = Fraction(k * (6 * k - 1), 2 * k - 1) * n
    t2_coeffs: dict[str, AffineExpr] = {
        LAMBDA: AffineExpr(lead * 3 * (2 * k + 5)),
        delta(0): AffineExpr(-lead * (k + 1)),
    }
    b3_weight = Fraction(9, 4 * k - 2) * n
    for j in range(1, k + 1):
        t2_coeffs[delta(j)] = AffineExpr(
            0, {c_sym(j): Fraction(1), b_sym(j): -b3_weight}
        )
    rows = {T2: DivisorClass(mg, t2_coeffs)}
    for j in range(1, k + 1):
        rows[T3j(j)] = DivisorClass(mg, {delta(j): alpha_coeff(k, j)})
    composite = ClassMap(q_pullback(k).source, mg, rows)
    if normalization == RAW:
        composite = composite.scale(factorial_b(k))
    return composite


@lru_cache(maxsize=None)
def p_q_kappa(k: int, normalization: str = PER_FACTORIAL_B) -> DivisorClass:
    """The correspondence action applied to the ample class
    psi - delta of the pointed rational moduli space."""
    return p_q_map(k, normalization).apply(kappa_class(k))


def p_q_kappa_closed_coeffs(k: int) -> tuple[Fraction, Fraction]:
    """Closed-form (lambda, delta_0) coefficients of :func:`p_q_kappa`,
    per-factorial-b."""
    n = catalan_number(k)
    return 9 * k * n * (2 * k + 5), Fraction(-3 * k * (k + 1)) * n


@lru_cache(maxsize=None)
def mg_canonical_class(k: int) -> DivisorClass:
    """The canonical class of the genus-2k moduli space on the truncated
    basis lambda, delta_0..delta_k."""
    coeffs: dict[str, Fraction] = {
        LAMBDA: Fraction(13),
        delta(0): Fraction(-2),
    }
    if k >= 1:
        coeffs[delta(1)] = Fraction(-3)
    for j in range(2, k + 1):
        coeffs[delta(j)] = Fraction(-2)
    return DivisorClass(mg_basis(k), coeffs)


@lru_cache(maxsize=None)
def eh_divisor(k: int, normalization: str = RAW) -> DivisorClass:
    """The pushed branch divisor of the covering-space map (the divisor
    of curves with fewer pencils than the generic count), computed from
    the two expressions for the canonical class of the Hurwitz space.

    The closed-form lambda and delta_0 coefficients are meaningful for
    k >= 3; for smaller k the assembled value is returned as-is.
    """
    _check_normalization(normalization)
    b = 6 * k
    hur = hurwitz_basis(k)
    q = q_pullback(k)
    # q-side canonical class plus ramification, minus the non-branch
    # components E0 + E2 + E3 of the p-side ramification
    t2_unit = DivisorClass(q.source, {T2: Fraction(1)})
    assembly = q.apply(t2_unit) * Fraction(-2, b - 1)
    base: dict[str, AffineExpr] = {}
    if k >= 2:
        base[E3] = AffineExpr(1)
    base[E0] = AffineExpr(-1)
    assembly = assembly + DivisorClass(hur, base)
    ejc_coeffs: dict[str, Fraction] = {}
    for j in range(1, k + 1):
        weight = Fraction(3 * j * (b - 3 * j), b - 1) - 1
        for c in range(j // 2 + 1):
            ejc_coeffs[Ejc(j, c)] = weight * (j + 1 - 2 * c) - 1
    assembly = assembly + DivisorClass(hur, ejc_coeffs)
    pushed = p_push(k, normalization).apply(assembly)
    degree = catalan_number(k)
    if normalization == RAW:
        degree = degree * factorial_b(k)
    return pushed - mg_canonical_class(k) * degree


def eh_closed_coeffs(k: int) -> tuple[Fraction, Fraction]:
    """Closed-form (lambda, delta_0) coefficients of :func:`eh_divisor`
    in per-factorial-b normalization, stated for k >= 3."""
    n = catalan_number(k)
    lam = n * Fraction(6 * k * k + 13 * k + 1, 2 * k - 1)
    d0 = -n * Fraction(k * (k + 1), 2 * k - 1)
    return lam, d0


class PrymPullbacks(NamedTuple):
    """Pullbacks of the Hodge and degenerate-boundary classes of a
    toroidal compactification receiving the Prym variety of the trace
    curve over the reduced trace curve."""

    hodge: DivisorClass
    boundary: DivisorClass


def prym_hodge_class(k: int) -> DivisorClass:
    return phi_pull_lambda(k) - phihat_pull_lambda(k)


def prym_boundary_class(k: int) -> DivisorClass:
    return phi_pull_boundary(k, 0) - phihat_pull_boundary(k, 0)


def prym_pullbacks(k: int) -> PrymPullbacks:
    return PrymPullbacks(prym_hodge_class(k), prym_boundary_class(k))
