"""Slope extraction for divisor classes on the genus-2k moduli basis,
the induced-slope rational functions of the two correspondences, and the
moving-slope bounds.

For a class written a*lambda - sum b_j delta_j the slope is a/b_0.  The
ratio only bounds the moving slope when b_0 <= b_j for every j >= 1;
since the delta_j coefficients involve the external symbols, that
proviso is surfaced as a three-state validity instead of being assumed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .bases import DivisorClass, LAMBDA, MG, delta
from .core import AffineExpr, Rational
from .pushforward import (
    ExternalCoeffs,
    PER_FACTORIAL_B,
    p_phi_delta,
    p_phi_lambda,
    p_phihat_delta,
    p_phihat_lambda,
    p_q_kappa,
)


HOLDS = "Holds"
FAILS = "Fails"
UNKNOWN = "Unknown"

TRACE = "trace"
REDUCED = "reduced"


class SlopeError(ValueError):
    """The class is not of the shape a*lambda - b_0*delta_0 - ..."""


class PoleError(ZeroDivisionError):
    """The slope denominator vanishes at the requested point."""


class VerificationError(ArithmeticError):
    """A closed form and its substitution route disagree."""


@dataclass(frozen=True)
class SlopeReport:
    slope: Fraction
    valid: str
    witnesses: list[tuple[int, AffineExpr]] = field(default_factory=list)


def slope_of(d: DivisorClass) -> SlopeReport:
    """Slope of a class over the genus-2k moduli basis, together with
    the status of the proviso b_0 <= b_j on the stored delta_j terms."""
    if d.basis.kind != MG:
        raise SlopeError(f"slope is defined over the Mg basis, got {d.basis.kind}")
    lam = d.coefficient(LAMBDA)
    d0 = d.coefficient(delta(0))
    if not (lam.is_constant() and d0.is_constant()):
        raise SlopeError("lambda and delta_0 coefficients must be symbol-free")
    b0 = -d0.constant_value()
    if b0 == 0:
        raise SlopeError("delta_0 coefficient is zero; slope undefined")
    slope = lam.constant_value() / b0
    witnesses: list[tuple[int, AffineExpr]] = []
    symbolic = False
    violated = False
    for name, value in d.items():
        if name == LAMBDA or name == delta(0):
            continue
        j = int(name.split("_")[1])
        if not value.is_constant():
            symbolic = True
            witnesses.append((j, value))
        elif -value.constant_value() < b0:
            violated = True
            witnesses.append((j, value))
    valid = UNKNOWN if symbolic else (FAILS if violated else HOLDS)
    return SlopeReport(slope, valid, witnesses)


def _mobius_closed(k: int, variant: str) -> tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]:
    """Numerator and denominator of the closed-form induced slope as
    linear polynomials in the source slope."""
    if variant == TRACE:
        n1 = 18 * k**3 + 31 * k * k - 69 * k + 11
        n0 = -72 * k**3 - 96 * k * k + 306 * k - 48
        q1 = 3 * k**3 - 5 * k + 1
        q0 = -12 * k**3 + 6 * k * k + 20 * k - 4
    elif variant == REDUCED:
        n1 = 18 * k**3 + 19 * k * k - 117 * k + 20
        n0 = -72 * k**3 - 60 * k * k + 444 * k - 72
        q1 = 3 * k**3 - 2 * k * k - 9 * k + 2
        q0 = -12 * k**3 + 12 * k * k + 30 * k - 6
    else:
        raise ValueError(f"unknown slope variant {variant!r}")
    return (Fraction(n1), Fraction(n0)), (Fraction(q1), Fraction(q0))


def _mobius_substitution(
    k: int, variant: str
) -> tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]:
    """The same Moebius map assembled from the pushed Hodge and boundary
    classes."""
    if variant == TRACE:
        hodge = p_phi_lambda(k, PER_FACTORIAL_B)
        boundary = p_phi_delta(k, 0, PER_FACTORIAL_B)
    elif variant == REDUCED:
        hodge = p_phihat_lambda(k, PER_FACTORIAL_B)
        boundary = p_phihat_delta(k, 0, PER_FACTORIAL_B)
    else:
        raise ValueError(f"unknown slope variant {variant!r}")
    alpha_lam = hodge.coefficient(LAMBDA).constant_value()
    alpha_0 = -hodge.coefficient(delta(0)).constant_value()
    beta_lam = boundary.coefficient(LAMBDA).constant_value()
    beta_0 = boundary.coefficient(delta(0)).constant_value()
    return (alpha_lam, -beta_lam), (alpha_0, beta_0)


def mobius_consistency(k: int, variant: str) -> Fraction:
    """Assert that the substitution-route Moebius coefficients are a
    common rational multiple of the closed-form ones and return that
    factor."""
    (n1, n0), (q1, q0) = _mobius_closed(k, variant)
    (a1, a0), (d1, d0) = _mobius_substitution(k, variant)
    if n1 == 0 or a1 == 0:
        raise VerificationError(f"degenerate Moebius data at k={k}")
    rho = a1 / n1
    if (a0, d1, d0) != (rho * n0, rho * q1, rho * q0):
        raise VerificationError(
            f"Moebius coefficients disagree at k={k} for variant {variant!r}"
        )
    return rho


def _evaluate(pair, s: Fraction) -> Fraction:
    (n1, n0), (q1, q0) = pair
    den = q1 * s + q0
    if den == 0:
        raise PoleError(f"slope denominator vanishes at s = {s}")
    return (n1 * s + n0) / den


def _induced_slope(k: int, s: Fraction, variant: str) -> Fraction:
    if k < 3:
        raise ValueError(f"induced slopes are stated for k >= 3, got k={k}")
    s = Fraction(s)
    closed = _evaluate(_mobius_closed(k, variant), s)
    substituted = _evaluate(_mobius_substitution(k, variant), s)
    if closed != substituted:
        raise VerificationError(
            f"closed form {closed} != substitution route {substituted} "
            f"at (k, s) = ({k}, {s})"
        )
    return closed


def induced_slope_trace(k: int, s_prime: Rational) -> Fraction:
    """Slope of the image of a trace-moduli divisor of slope s'; the
    closed form and the coefficient substitution must agree exactly."""
    return _induced_slope(k, Fraction(s_prime), TRACE)


def induced_slope_reduced(k: int, s: Rational) -> Fraction:
    """Slope of the image of a reduced-trace-moduli divisor of slope s."""
    return _induced_slope(k, Fraction(s), REDUCED)


def kappa_slope_bound(k: int, externals: ExternalCoeffs | None = None) -> Fraction:
    """Slope of the pushed ample boundary class: 3(2k+5)/(k+1), which
    equals 6 + 18/(g+2) with g = 2k.

    With an external coefficient table the proviso b_j >= b_0 is checked
    on the delta_j coefficients and a violation raises
    :class:`VerificationError`.
    """
    pushed = p_q_kappa(k, PER_FACTORIAL_B)
    report = slope_of(pushed)
    expected = Fraction(3 * (2 * k + 5), k + 1)
    g = 2 * k
    if report.slope != expected or report.slope != 6 + Fraction(18, g + 2):
        raise VerificationError(
            f"kappa slope {report.slope} differs from 3(2k+5)/(k+1) at k={k}"
        )
    if externals is not None:
        numeric = slope_of(externals.apply(pushed))
        if numeric.valid != HOLDS:
            raise VerificationError(
                f"kappa slope proviso fails at k={k}: witnesses {numeric.witnesses}"
            )
    return report.slope


def ample_cone_test(x: Rational, y: Rational) -> bool:
    """Whether x*lambda - y*delta lies in the ample cone: x > 11 y."""
    return Fraction(x) > 11 * Fraction(y)
