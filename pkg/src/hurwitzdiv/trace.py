"""Divisor classes on the Hurwitz basis for covers of even genus g = 2k
and degree d = k+1: the node classes and dualizing-sheaf push-forwards
of the trace-curve and reduced-trace-curve families, the resulting
Hodge-class pullbacks, the branch-point pullback map q*, and the
boundary pullbacks from the two target moduli spaces.

Every evaluator is a total function of k.  The generators E2 and E3 do
not exist for small k (E2 needs k >= 3, E3 needs k >= 2) and their terms
are dropped uniformly; the only further small-k adjustment is the
reduced-trace node coefficient at k = 1, see :func:`s_coeff`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from typing import NamedTuple

from .bases import (
    ClassMap,
    DivisorClass,
    E0,
    E2,
    E3,
    Ejc,
    IndexRangeError,
    T2,
    T3j,
    genus_reduced_trace,
    genus_trace,
    hurwitz_basis,
    m0b_sym_basis,
    zero_class,
)
from .core import binomial
from .m0b import delta_restricted, psi_restricted


@dataclass(frozen=True)
class GenusData:
    """The numerical invariants attached to one value of k."""

    k: int
    g: int
    d: int
    b: int
    g_prime: int
    g_hat: int
    prym_dim: int
    quotient_dim: int


@lru_cache(maxsize=None)
def genus_data(k: int) -> GenusData:
    """Genus bookkeeping for covers of genus 2k and degree k+1."""
    if k < 1:
        raise IndexRangeError(f"k must be >= 1, got {k}")
    g = 2 * k
    d = k + 1
    g_prime = (g - 1) * (2 * d - 3) + (d - 1) ** 2
    assert g_prime == genus_trace(k)
    g_hat = genus_reduced_trace(k)
    prym_dim = (5 * k * k - k) // 2
    assert prym_dim == g_prime - g_hat
    quotient_dim = (5 * k - 1) * (k - 2) // 2
    return GenusData(k, g, d, 6 * k, g_prime, g_hat, prym_dim, quotient_dim)


@lru_cache(maxsize=None)
def catalan_number(k: int) -> Fraction:
    """N(k), the number of degree-(k+1) pencils on a general curve of
    genus 2k; both defining expressions are evaluated and must agree."""
    if k < 1:
        raise IndexRangeError(f"k must be >= 1, got {k}")
    via_k = binomial(2 * k, k + 1) / k
    via_k1 = binomial(2 * k, k) / (k + 1)
    assert via_k == via_k1
    return via_k


def _check_jc(k: int, j: int, c: int) -> None:
    if not (1 <= j <= k and 0 <= c <= j // 2):
        raise IndexRangeError(f"(j, c) = ({j}, {c}) out of range for k = {k}")


def e_coeff(k: int, j: int, c: int) -> Fraction:
    """Multiplicity of delta_j in the push-forward of E_{j,c}."""
    _check_jc(k, j, c)
    m = j + 1 - 2 * c
    return (
        Fraction(m * m, (j + 1) * (2 * k - j + 1))
        * binomial(j + 1, c)
        * binomial(2 * k - j + 1, k + 1 - c)
    )


def alpha_coeff(k: int, j: int) -> Fraction:
    """Total weight sum((j+1-2c) e_{j,c}) of the pushed symmetric
    boundary class T3j."""
    if not 1 <= j <= k:
        raise IndexRangeError(f"j = {j} out of range for k = {k}")
    return sum(
        ((j + 1 - 2 * c) * e_coeff(k, j, c) for c in range(j // 2 + 1)),
        Fraction(0),
    )


def d_coeff(k: int, j: int, c: int) -> Fraction:
    """Node count over E_{j,c} for the trace-curve family."""
    _check_jc(k, j, c)
    return (
        (binomial(c, 2) + binomial(k - j + c, 2)) * (j + 1 - 2 * c)
        + 2 * (c + 1) * (k - j + c)
        + j
    )


def a_coeff(k: int, j: int, c: int) -> Fraction:
    """E_{j,c} coefficient of the pushed square of the relative
    dualizing sheaf of the trace-curve family."""
    _check_jc(k, j, c)
    return (j + 1 - 2 * c) * (
        Fraction(27, 2) * Fraction(j * (2 * k - 1) * (2 * k - j), 6 * k - 1)
        - k * (k + 1)
    )


def t_coeff(k: int, j: int, c: int) -> Fraction:
    return a_coeff(k, j, c) + d_coeff(k, j, c)


def s_coeff(k: int, j: int, c: int) -> Fraction:
    """Node count over E_{j,c} for the reduced-trace-curve family.

    For k = 1 the single coefficient is 1, not the value 2 of the
    general expression: the reduced trace curve of a genus-2 cover is
    the base line itself and its family acquires exactly one node over
    E_{1,0}.
    """
    _check_jc(k, j, c)
    if k == 1:
        return Fraction(1)
    return (
        (k - j + c) * (c + 1)
        + (binomial(k - j + c, 2) + binomial(c, 2)) * (j + 1 - 2 * c)
        + (j + 1) // 2
        + (1 if j % 2 == 1 else 0)
    )


def u_coeff(k: int, j: int, c: int) -> Fraction:
    _check_jc(k, j, c)
    correction = Fraction(j + 1 - 2 * c, 2 * (6 * k - 1)) * (
        (27 * k - 27) * j * j - 54 * (k * k - k) * j + (k * k + k) * (6 * k - 1)
    )
    return s_coeff(k, j, c) - correction


def _build(k: int, e0, e2, e3, ejc) -> DivisorClass:
    """Assemble a Hurwitz class from an E0 value, E2/E3 values (dropped
    when the generator does not exist) and a callable for E_{j,c}."""
    coeffs = {E0: e0}
    if k >= 3:
        coeffs[E2] = e2
    if k >= 2:
        coeffs[E3] = e3
    for j in range(1, k + 1):
        for c in range(j // 2 + 1):
            coeffs[Ejc(j, c)] = ejc(j, c)
    return DivisorClass(hurwitz_basis(k), coeffs)


@lru_cache(maxsize=None)
def delta_tau(k: int) -> DivisorClass:
    """Push-forward of the singular locus of the trace-curve family."""
    return _build(
        k,
        Fraction(k * k + k),
        Fraction(2 * k * k - 10 * k + 18),
        Fraction(3 * k * k - 13 * k + 16),
        lambda j, c: d_coeff(k, j, c),
    )


@lru_cache(maxsize=None)
def omega_tau_sq(k: int) -> DivisorClass:
    """Pushed square of the relative dualizing sheaf of the trace-curve
    family, in closed form."""
    lead = Fraction(-6 * k**3 + 31 * k * k - 29 * k + 6, 6 * k - 1)
    return _build(k, lead, 2 * lead, 3 * lead, lambda j, c: a_coeff(k, j, c))


@lru_cache(maxsize=None)
def q_pullback(k: int) -> ClassMap:
    """The pullback map along q from the symmetric boundary classes of
    the space of 6k-pointed rational curves to the Hurwitz basis."""
    hur = hurwitz_basis(k)
    t2_coeffs = {E0: Fraction(1)}
    if k >= 3:
        t2_coeffs[E2] = Fraction(2)
    if k >= 2:
        t2_coeffs[E3] = Fraction(3)
    rows = {T2: DivisorClass(hur, t2_coeffs)}
    for j in range(1, k + 1):
        rows[T3j(j)] = DivisorClass(
            hur, {Ejc(j, c): Fraction(j + 1 - 2 * c) for c in range(j // 2 + 1)}
        )
    return ClassMap(m0b_sym_basis(k), hur, rows)


class GrrPieces(NamedTuple):
    """The three summands of the pushed dualizing-sheaf square of the
    trace family: the pulled-back square from the universal cover, the
    mixed term with the ramification divisor, and the square of the
    ramification divisor."""

    omega_sq: DivisorClass
    cross: DivisorClass
    ram_sq: DivisorClass

    def assembled(self) -> DivisorClass:
        return self.omega_sq + 2 * self.cross + self.ram_sq


@lru_cache(maxsize=None)
def grr_pieces(k: int) -> GrrPieces:
    q = q_pullback(k)
    psi = psi_restricted(k)
    boundary_sum = delta_restricted(k)
    omega_sq = q.apply(psi * Fraction(3 * k, 2) - boundary_sum * (k * (k + 1)))
    cross = q.apply(psi * (k - 1))
    ram_sq = q.apply(psi * Fraction(-(k - 1), 2))
    return GrrPieces(omega_sq, cross, ram_sq)


@lru_cache(maxsize=None)
def phi_pull_lambda(k: int) -> DivisorClass:
    """Pullback of the Hodge class of the trace-curve moduli space,
    one twelfth of node class plus pushed dualizing square."""
    return (omega_tau_sq(k) + delta_tau(k)) / 12


@lru_cache(maxsize=None)
def twelve_lambda_trace_closed(k: int) -> DivisorClass:
    """Closed form of twelve times :func:`phi_pull_lambda`."""
    t0 = 18 * k * k - 15 * k + 3
    t2 = 30 * k - 3
    t3 = 6 * k * k + 11 * k + 1
    scale = Fraction(2, 6 * k - 1)
    return _build(
        k, scale * t0, scale * t2, scale * t3, lambda j, c: t_coeff(k, j, c)
    )


@lru_cache(maxsize=None)
def delta_s(k: int) -> DivisorClass:
    """Push-forward of the singular locus of the reduced-trace family."""
    return _build(
        k,
        Fraction(k * k + k, 2),
        Fraction(k * k - 5 * k + 12),
        Fraction(3 * k * k - 13 * k + 16, 2),
        lambda j, c: s_coeff(k, j, c),
    )


@lru_cache(maxsize=None)
def s_omega_sq(k: int) -> DivisorClass:
    """Pushed dualizing square of the reduced-trace family: half the
    trace value minus three quarters of the pulled-back cotangent
    class."""
    return omega_tau_sq(k) / 2 - q_pullback(k).apply(psi_restricted(k)) * Fraction(3, 4)


@lru_cache(maxsize=None)
def phihat_pull_lambda(k: int) -> DivisorClass:
    """Pullback of the Hodge class of the reduced-trace moduli space."""
    return (s_omega_sq(k) + delta_s(k)) / 12


@lru_cache(maxsize=None)
def twelve_lambda_reduced_closed(k: int) -> DivisorClass:
    """Closed form of twelve times :func:`phihat_pull_lambda`."""
    u0 = 9 * k * k - 12 * k + 3
    u2 = 15 * k
    u3 = 3 * k * k - 8 * k + 5
    scale = Fraction(2, 6 * k - 1)
    return _build(
        k, scale * u0, scale * u2, scale * u3, lambda j, c: u_coeff(k, j, c)
    )


@lru_cache(maxsize=None)
def phi_pull_boundary(k: int, j_prime: int) -> DivisorClass:
    """Pullback of the boundary class delta'_{j'} of the trace-curve
    moduli space; zero for j' > k."""
    if not 0 <= j_prime <= genus_trace(k) // 2:
        raise IndexRangeError(
            f"boundary index {j_prime} out of range 0..{genus_trace(k) // 2}"
        )
    hur = hurwitz_basis(k)
    if j_prime == 0:
        coeffs = {E0: Fraction(4 * k - 2)}
        if k >= 3:
            coeffs[E2] = Fraction(4)
        if k >= 2:
            coeffs[E3] = Fraction(2)
        for j in range(2, k + 1):
            coeffs[Ejc(j, 0)] = Fraction(j)
            for c in range(1, j // 2 + 1):
                coeffs[Ejc(j, c)] = Fraction(2 * (k - j + c) * (c + 1) + j)
        return DivisorClass(hur, coeffs)
    if j_prime == 1:
        return DivisorClass(hur, {Ejc(1, 0): Fraction(2 * k - 1)})
    if j_prime <= k:
        return DivisorClass(hur, {Ejc(j_prime, 0): Fraction(2 * k - 2 * j_prime)})
    return zero_class(hur)


def _eps(j: int, c: int) -> int:
    # the (j, c) = (2, 1) clause overrides the parity rule
    if j == 2 and c == 1:
        return -1
    return 1 if j % 2 == 1 else 0


@lru_cache(maxsize=None)
def phihat_pull_boundary(k: int, j_hat: int) -> DivisorClass:
    """Pullback of the boundary class of the reduced-trace moduli
    space; zero for indices above k."""
    if not 0 <= j_hat <= genus_reduced_trace(k) // 2:
        raise IndexRangeError(
            f"boundary index {j_hat} out of range 0..{genus_reduced_trace(k) // 2}"
        )
    hur = hurwitz_basis(k)
    if j_hat == 0:
        coeffs = {E0: Fraction(2 * k - 2)}
        if k >= 3:
            coeffs[E2] = Fraction(2)
        for j in range(2, k + 1):
            for c in range(1, j // 2 + 1):
                coeffs[Ejc(j, c)] = Fraction(
                    (k - j + c) * (c + 1) + (j + 1) // 2 + _eps(j, c)
                )
        for j in range(3, k + 1):
            coeffs[Ejc(j, 0)] = Fraction((j + 1) // 2 + _eps(j, 0))
        return DivisorClass(hur, coeffs)
    if j_hat in (1, 2):
        return DivisorClass(hur, {Ejc(j_hat, 0): Fraction(k - 1)})
    if j_hat <= k:
        return DivisorClass(hur, {Ejc(j_hat, 0): Fraction(k - j_hat)})
    return zero_class(hur)
