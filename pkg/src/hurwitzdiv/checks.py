"""Named verification checks, the machinery behind the ``verify``
subcommand.  Each check runs per value of k and yields PASS/FAIL/SKIP
results; checks that need the external coefficient table are skipped
unless one matching k is supplied.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator

from . import m0b, pushforward, slopes, trace
from .bases import DivisorClass, E0, E3, Ejc, LAMBDA, delta, hurwitz_basis, mg_basis, T3j
from .pushforward import ExternalCoeffs, PER_FACTORIAL_B, RAW

PASS = "PASS"
FAIL = "FAIL"
SKIP = "SKIP"


@dataclass(frozen=True)
class CheckResult:
    check: str
    k: int
    status: str
    detail: str = ""


def _run(check: str, k: int, fn: Callable[[], None]) -> CheckResult:
    try:
        fn()
    except Exception as exc:
        return CheckResult(check, k, FAIL, str(exc))
    return CheckResult(check, k, PASS)


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise AssertionError(message)


def _check_genus(k: int, externals) -> Iterator[CheckResult]:
    def body() -> None:
        gd = trace.genus_data(k)
        _require(gd.g_prime == 5 * k * k - 4 * k + 1, "trace genus mismatch")
        _require(gd.g_hat == (5 * k - 2) * (k - 1) // 2, "reduced trace genus mismatch")
        _require(gd.prym_dim == gd.g_prime - gd.g_hat, "Prym dimension mismatch")
        _require(2 * gd.prym_dim == 5 * k * k - k, "Prym dimension closed form")
        _require(2 * gd.quotient_dim == (5 * k - 1) * (k - 2), "quotient dimension")
        if k == 2:
            _require((gd.g_prime, gd.g_hat) == (13, 4), "k=2 genus values")
        if k == 3:
            _require(gd.g_hat == 13, "k=3 reduced genus")

    yield _run("genus", k, body)


def _check_catalan(k: int, externals) -> Iterator[CheckResult]:
    def body() -> None:
        n = trace.catalan_number(k)
        _require(trace.e_coeff(k, 1, 0) == n, "e_{1,0} differs from the pencil count")
        push = pushforward.p_push(k, PER_FACTORIAL_B)
        q = trace.q_pullback(k)
        mg = mg_basis(k)
        for j in range(1, k + 1):
            expected = DivisorClass(mg, {delta(j): trace.alpha_coeff(k, j)})
            _require(
                push.apply(q.row(T3j(j))) == expected,
                f"pushed T3j_{j} differs from alpha(k, j) delta_{j}",
            )

    yield _run("catalan", k, body)


def _check_small_k_cases(k: int, externals) -> Iterator[CheckResult]:
    if k not in (1, 2):
        return
    hur = hurwitz_basis(k)

    def body() -> None:
        if k == 1:
            _require(
                trace.delta_tau(1) == DivisorClass(hur, {E0: 2, Ejc(1, 0): 1}),
                "trace node class at k=1",
            )
            _require(
                trace.delta_s(1) == DivisorClass(hur, {E0: 1, Ejc(1, 0): 1}),
                "reduced node class at k=1",
            )
            fifth = Fraction(1, 5)
            _require(
                trace.phi_pull_lambda(1)
                == DivisorClass(hur, {E0: fifth, Ejc(1, 0): fifth}),
                "Hodge pullback at k=1",
            )
        else:
            _require(
                trace.delta_tau(2)
                == DivisorClass(
                    hur, {E0: 6, E3: 2, Ejc(1, 0): 3, Ejc(2, 0): 2, Ejc(2, 1): 6}
                ),
                "trace node class at k=2",
            )
            _require(
                trace.delta_s(2)
                == DivisorClass(
                    hur, {E0: 3, E3: 1, Ejc(1, 0): 3, Ejc(2, 0): 1, Ejc(2, 1): 3}
                ),
                "reduced node class at k=2",
            )
            _require(
                12 * trace.phihat_pull_lambda(2)
                == DivisorClass(
                    hur,
                    {
                        E0: Fraction(30, 11),
                        E3: Fraction(2, 11),
                        Ejc(1, 0): Fraction(48, 11),
                        Ejc(2, 0): Fraction(74, 11),
                        Ejc(2, 1): Fraction(54, 11),
                    },
                ),
                "reduced Hodge pullback at k=2",
            )

    yield _run("small-k-cases", k, body)


def _check_grr_assembly(k: int, externals) -> Iterator[CheckResult]:
    def body() -> None:
        _require(
            trace.grr_pieces(k).assembled() == trace.omega_tau_sq(k),
            "dualizing-square assembly differs from the closed form",
        )

    yield _run("grr-assembly", k, body)


def _check_hodge_closed_forms(k: int, externals) -> Iterator[CheckResult]:
    def body() -> None:
        _require(
            12 * trace.phi_pull_lambda(k) == trace.twelve_lambda_trace_closed(k),
            "trace Hodge pullback differs from its closed form",
        )
        _require(
            12 * trace.phihat_pull_lambda(k) == trace.twelve_lambda_reduced_closed(k),
            "reduced Hodge pullback differs from its closed form",
        )
        _require(
            12 * trace.phi_pull_lambda(k) - trace.delta_tau(k) == trace.omega_tau_sq(k),
            "trace Hodge assembly identity",
        )
        _require(
            12 * trace.phihat_pull_lambda(k) - trace.delta_s(k) == trace.s_omega_sq(k),
            "reduced Hodge assembly identity",
        )

    yield _run("hodge-closed-forms", k, body)


def _lambda_delta0(d: DivisorClass) -> tuple[Fraction, Fraction]:
    return (
        d.coefficient(LAMBDA).constant_value(),
        d.coefficient(delta(0)).constant_value(),
    )


def _check_closed_forms(k: int, externals) -> Iterator[CheckResult]:
    if k < 2:
        return

    def composition_body() -> None:
        direct = pushforward.p_q_map(k, PER_FACTORIAL_B)
        composed = pushforward.p_push(k, PER_FACTORIAL_B).compose(trace.q_pullback(k))
        for j in range(1, k + 1):
            _require(
                direct.row(T3j(j)) == composed.row(T3j(j)),
                f"composite row T3j_{j} mismatch",
            )
        from .bases import T2

        if k >= 3:
            _require(direct.row(T2) == composed.row(T2), "composite row T2 mismatch")
        else:
            # at k = 2 the dropped E2 generator only affects the c_j terms
            _require(
                _lambda_delta0(direct.row(T2)) == _lambda_delta0(composed.row(T2)),
                "composite row T2 lambda/delta_0 mismatch",
            )

    yield _run("closed-forms", k, composition_body)

    if k < 3:
        return

    def body() -> None:
        _require(
            _lambda_delta0(pushforward.p_phi_lambda(k))
            == pushforward.p_phi_lambda_closed_coeffs(k),
            "pushed trace Hodge class differs from closed form",
        )
        _require(
            _lambda_delta0(pushforward.p_phihat_lambda(k))
            == pushforward.p_phihat_lambda_closed_coeffs(k),
            "pushed reduced Hodge class differs from closed form",
        )
        _require(
            _lambda_delta0(pushforward.p_phi_delta(k, 0, PER_FACTORIAL_B))
            == pushforward.p_phi_delta0_closed_coeffs(k),
            "pushed boundary class differs from closed form",
        )
        _require(
            _lambda_delta0(pushforward.p_phihat_delta(k, 0, PER_FACTORIAL_B))
            == pushforward.p_phihat_delta0_closed_coeffs(k),
            "pushed reduced boundary class differs from closed form",
        )
        _require(
            _lambda_delta0(pushforward.eh_divisor(k, PER_FACTORIAL_B))
            == pushforward.eh_closed_coeffs(k),
            "branch divisor differs from closed form",
        )
        _require(
            _lambda_delta0(pushforward.p_q_kappa(k))
            == pushforward.p_q_kappa_closed_coeffs(k),
            "pushed ample class differs from closed form",
        )
        hodge = pushforward.p_phi_lambda(k)
        reduced = pushforward.p_phihat_lambda(k)
        for j in range(1, k + 1):
            _require(
                hodge.coefficient(delta(j))
                == pushforward.p_phi_lambda_delta_expected(k, j),
                f"delta_{j} coefficient of the pushed trace Hodge class",
            )
            _require(
                reduced.coefficient(delta(j))
                == pushforward.p_phihat_lambda_delta_expected(k, j),
                f"delta_{j} coefficient of the pushed reduced Hodge class",
            )

    yield _run("closed-forms", k, body)


_SLOPE_GRID = (Fraction(23, 2), Fraction(12), Fraction(13), Fraction(20))


def _check_slopes(k: int, externals) -> Iterator[CheckResult]:
    if k < 3:
        return

    def body() -> None:
        for s in _SLOPE_GRID:
            slopes.induced_slope_trace(k, s)
            slopes.induced_slope_reduced(k, s)
        slopes.mobius_consistency(k, slopes.TRACE)
        slopes.mobius_consistency(k, slopes.REDUCED)
        if k == 3:
            _require(
                slopes.induced_slope_trace(3, Fraction(12)) == Fraction(489, 59),
                "spot value at (k, s') = (3, 12)",
            )

    yield _run("slopes", k, body)


def _check_bounds(k: int, externals) -> Iterator[CheckResult]:
    def body() -> None:
        value = slopes.kappa_slope_bound(k)
        _require(value == Fraction(3 * (2 * k + 5), k + 1), "kappa slope closed form")
        _require(value == 6 + Fraction(18, 2 * k + 2), "kappa slope vs 6 + 18/(g+2)")
        if k >= 3:
            _require(
                k * (209 * k * k - 243 * k + 31)
                < 10 * (21 * k**3 + 6 * k * k - 35 * k + 7),
                "trace-slope excess bound at the ample boundary",
            )
            _require(
                k * (209 * k * k - 429 * k + 52)
                < 10 * (21 * k**3 - 10 * k * k - 69 * k + 16),
                "reduced-slope excess bound at the ample boundary",
            )
            excess = slopes.induced_slope_trace(k, Fraction(11)) - 6
            _require(excess < Fraction(10, k), "trace slope exceeds 6 + 20/g")
            excess_hat = slopes.induced_slope_reduced(k, Fraction(11)) - 6
            _require(excess_hat < Fraction(10, k), "reduced slope exceeds 6 + 20/g")

    yield _run("bounds", k, body)


def _intersection_oracle(a: m0b.MarkedSet, b: m0b.MarkedSet) -> bool:
    # four-corner test: the labels are incompatible exactly when all four
    # mutual intersections of the parts are nonempty
    full = frozenset(range(1, a.b + 1))
    sa, sb = a.members, b.members
    return not (sa & sb and sa - sb and sb - sa and (full - (sa | sb)))


def _check_m0n(k: int, externals) -> Iterator[CheckResult]:
    def body() -> None:
        _require(
            m0b.kappa_class(k) + m0b.delta_restricted(k) == m0b.psi_restricted(k),
            "kappa + delta differs from psi on the restricted basis",
        )
        b = 6 * k
        if b <= 12:
            _require(
                m0b.count_boundary(b) == sum(1 for _ in m0b.enumerate_boundary(b)),
                "boundary count differs from enumeration",
            )
        if k == 1:
            for bb in (6, 8):
                labels = list(m0b.enumerate_boundary(bb))
                for x in labels:
                    for y in labels:
                        _require(
                            m0b.intersect_nonempty(x, y) == _intersection_oracle(x, y),
                            f"intersection criterion differs from oracle at b={bb}",
                        )
            images = set()
            for label in m0b.enumerate_boundary(6):
                images.update(m0b.forgetful_pullback(label))
            _require(len(images) == 50, "forgetful pullback image count")
            sections = {m0b.normalize(7, {j, 7}) for j in range(1, 7)}
            _require(not (images & sections), "sections are not pullback images")
            _require(
                len(images | sections) == m0b.count_boundary(7),
                "pullback images plus sections exhaust the boundary",
            )

    yield _run("m0n", k, body)


def _check_hygiene(k: int, externals) -> Iterator[CheckResult]:
    def body() -> None:
        pushed = [
            pushforward.p_phi_lambda(k),
            pushforward.p_phihat_lambda(k),
            pushforward.p_phi_delta(k, 0, PER_FACTORIAL_B),
            pushforward.p_phihat_delta(k, 0, PER_FACTORIAL_B),
            pushforward.p_q_kappa(k),
            pushforward.eh_divisor(k, PER_FACTORIAL_B),
        ]
        for d in pushed:
            _require(
                d.coefficient(LAMBDA).is_constant()
                and d.coefficient(delta(0)).is_constant(),
                "symbols leaked into a lambda or delta_0 coefficient",
            )
            raw = pushforward.convert_normalization(d, k, PER_FACTORIAL_B, RAW)
            back = pushforward.convert_normalization(raw, k, RAW, PER_FACTORIAL_B)
            _require(back == d, "normalization round-trip is not the identity")

    yield _run("hygiene", k, body)


def _check_delta_j(k: int, externals: ExternalCoeffs | None) -> Iterator[CheckResult]:
    if externals is None or externals.k != k:
        yield CheckResult(
            "delta-j-checks",
            k,
            SKIP,
            "external coefficient table not supplied for this k",
        )
        return

    def body() -> None:
        for d in (
            pushforward.p_phi_lambda(k),
            pushforward.p_phihat_lambda(k),
            pushforward.p_phi_delta(k, 0, PER_FACTORIAL_B),
            pushforward.p_phihat_delta(k, 0, PER_FACTORIAL_B),
            pushforward.p_q_kappa(k),
            pushforward.eh_divisor(k, PER_FACTORIAL_B),
        ):
            numeric = externals.apply(d)
            for _, value in numeric.items():
                _require(
                    value.is_constant(),
                    "substitution left a symbolic coefficient behind",
                )
        slopes.kappa_slope_bound(k, externals)
        report = slopes.slope_of(externals.apply(pushforward.p_phi_lambda(k)))
        _require(report.valid != slopes.UNKNOWN, "slope validity still unknown")

    yield _run("delta-j-checks", k, body)


CHECKS: dict[str, Callable[[int, ExternalCoeffs | None], Iterator[CheckResult]]] = {
    "genus": _check_genus,
    "catalan": _check_catalan,
    "small-k-cases": _check_small_k_cases,
    "grr-assembly": _check_grr_assembly,
    "hodge-closed-forms": _check_hodge_closed_forms,
    "closed-forms": _check_closed_forms,
    "slopes": _check_slopes,
    "bounds": _check_bounds,
    "m0n": _check_m0n,
    "hygiene": _check_hygiene,
    "delta-j-checks": _check_delta_j,
}


def run_checks(
    k_min: int,
    k_max: int,
    names: list[str] | None = None,
    externals: ExternalCoeffs | None = None,
) -> list[CheckResult]:
    """Run the named checks (all of them by default) for every k in the
    inclusive range and return the individual results."""
    if not 1 <= k_min <= k_max:
        raise ValueError(f"invalid range 1 <= {k_min} <= {k_max}")
    selected = list(CHECKS) if not names else list(names)
    for name in selected:
        if name not in CHECKS:
            raise ValueError(
                f"unknown check {name!r}; available: {', '.join(CHECKS)}"
            )
    results: list[CheckResult] = []
    for k in range(k_min, k_max + 1):
        for name in selected:
            results.extend(CHECKS[name](k, externals))
    return results
