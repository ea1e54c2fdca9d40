from fractions import Fraction

import pytest

from hurwitzdiv.bases import (
    DivisorClass,
    E0,
    E2,
    E3,
    Ejc,
    LAMBDA,
    T2,
    T3j,
    delta,
    hurwitz_basis,
    mg_basis,
)
from hurwitzdiv.core import AffineExpr, b_sym, c_sym
from hurwitzdiv.pushforward import (
    ExternalCoeffs,
    PER_FACTORIAL_B,
    RAW,
    convert_normalization,
    eh_closed_coeffs,
    eh_divisor,
    factorial_b,
    mg_canonical_class,
    p_phi_delta,
    p_phi_delta0_closed_coeffs,
    p_phi_lambda,
    p_phi_lambda_closed_coeffs,
    p_phi_lambda_delta_expected,
    p_phihat_delta,
    p_phihat_delta0_closed_coeffs,
    p_phihat_lambda,
    p_phihat_lambda_closed_coeffs,
    p_phihat_lambda_delta_expected,
    p_push,
    p_q_kappa,
    p_q_kappa_closed_coeffs,
    p_q_map,
    prym_pullbacks,
)
from hurwitzdiv.trace import alpha_coeff, e_coeff, q_pullback


def mclass(k, coeffs):
    return DivisorClass(mg_basis(k), coeffs)


def lam_d0(d):
    return (
        d.coefficient(LAMBDA).constant_value(),
        d.coefficient(delta(0)).constant_value(),
    )


def test_p_push_rows_k1():
    push = p_push(1)
    assert push.row(E0) == mclass(1, {delta(0): Fraction(1, 2)})
    assert push.row(Ejc(1, 0)) == mclass(1, {delta(1): 1})


def test_p_push_ejc_row_k3():
    assert e_coeff(3, 2, 1) == 2
    assert p_push(3).row(Ejc(2, 1)) == mclass(3, {delta(2): 2})


def test_p_push_symbol_rows_structure():
    push = p_push(3)
    e2_row = push.row(E2)
    assert e2_row.coefficient(delta(1)) == AffineExpr(0, {c_sym(1): Fraction(1, 2)})
    e3_row = push.row(E3)
    # weight 3N/(2(2k-1)) = 3/2 at k = 3 (N = 5)
    assert e3_row.coefficient(delta(2)) == AffineExpr(0, {b_sym(2): Fraction(-3, 2)})
    assert e3_row.coefficient(LAMBDA).constant_value() == Fraction(3 * 5, 2 * 5) * 238


def test_p_push_raw_scaling():
    raw = p_push(2, RAW)
    pfb = p_push(2, PER_FACTORIAL_B)
    d = DivisorClass(hurwitz_basis(2), {E0: 1, Ejc(2, 1): 3})
    assert raw.apply(d) == pfb.apply(d) * factorial_b(2)


def test_pushed_t3j_matches_alpha_display():
    for k in range(1, 31):
        push = p_push(k)
        q = q_pullback(k)
        for j in range(1, k + 1):
            assert push.apply(q.row(T3j(j))) == mclass(
                k, {delta(j): alpha_coeff(k, j)}
            )


def test_p_phi_lambda_k3_closed_form():
    assert lam_d0(p_phi_lambda(3)) == (569, -67)
    assert p_phi_lambda_closed_coeffs(3) == (569, -67)


def test_p_phi_lambda_k1_assembly_value():
    # no E2/E3 at k = 1, so the pushed class has no lambda part and the
    # k >= 3 closed form does not apply
    assert p_phi_lambda(1) == mclass(
        1, {delta(0): Fraction(1, 10), delta(1): Fraction(1, 5)}
    )
    lam, d0 = p_phi_lambda_closed_coeffs(1)
    assert lam == -9 and d0 == 1


def test_p_phi_lambda_closed_form_range():
    for k in range(3, 21):
        assert lam_d0(p_phi_lambda(k)) == p_phi_lambda_closed_coeffs(k)


def test_p_phihat_lambda_k3_closed_form():
    assert lam_d0(p_phihat_lambda(3)) == (163, -19)
    assert p_phihat_lambda_closed_coeffs(3) == (163, -19)


def test_p_phihat_lambda_k2_assembly_value():
    expected = mclass(
        2,
        {
            LAMBDA: 2,
            delta(1): AffineExpr(Fraction(8, 11), {b_sym(1): Fraction(-1, 66)}),
            delta(2): AffineExpr(Fraction(32, 33), {b_sym(2): Fraction(-1, 66)}),
        },
    )
    assert p_phihat_lambda(2) == expected
    # the stated closed form happens to extend to k = 2 because the
    # missing E2 row carries a k-2 factor
    assert lam_d0(p_phihat_lambda(2)) == p_phihat_lambda_closed_coeffs(2)


def test_delta_j_coefficients_match_row_structure():
    for k in range(1, 9):
        hodge = p_phi_lambda(k)
        reduced = p_phihat_lambda(k)
        for j in range(1, k + 1):
            assert hodge.coefficient(delta(j)) == p_phi_lambda_delta_expected(k, j)
            assert reduced.coefficient(delta(j)) == p_phihat_lambda_delta_expected(k, j)


def test_pushed_boundary_closed_forms_k3():
    assert lam_d0(p_phi_delta(3, 0, PER_FACTORIAL_B)) == (1938, -214)
    assert p_phi_delta0_closed_coeffs(3) == (1938, -214)
    assert lam_d0(p_phihat_delta(3, 0, PER_FACTORIAL_B)) == (612, -66)
    assert p_phihat_delta0_closed_coeffs(3) == (612, -66)
    raw_lam = p_phi_delta(3, 0, RAW).coefficient(LAMBDA).constant_value()
    assert raw_lam == 1938 * factorial_b(3)


def test_pushed_boundary_closed_forms_range():
    for k in range(2, 13):
        assert lam_d0(p_phi_delta(k, 0, PER_FACTORIAL_B)) == p_phi_delta0_closed_coeffs(k)
        assert lam_d0(p_phihat_delta(k, 0, PER_FACTORIAL_B)) == p_phihat_delta0_closed_coeffs(k)


def test_pushed_boundary_higher_indices():
    # delta'_1 pushes to (2k-1) e_{1,0} delta_1
    assert p_phi_delta(3, 1, PER_FACTORIAL_B) == mclass(
        3, {delta(1): 5 * e_coeff(3, 1, 0)}
    )
    # the reduced boundary class of index k pushes to zero
    assert p_phihat_delta(3, 3, PER_FACTORIAL_B).is_zero()
    assert p_phi_delta(3, 9, PER_FACTORIAL_B).is_zero()


def test_p_q_map_matches_composition_for_k3_and_up():
    for k in (3, 4, 7):
        direct = p_q_map(k, PER_FACTORIAL_B)
        composed = p_push(k, PER_FACTORIAL_B).compose(q_pullback(k))
        assert direct.row(T2) == composed.row(T2)
        for j in range(1, k + 1):
            assert direct.row(T3j(j)) == composed.row(T3j(j))


def test_p_q_map_k2_lambda_delta0_agree():
    direct = p_q_map(2, PER_FACTORIAL_B).row(T2)
    composed = p_push(2, PER_FACTORIAL_B).compose(q_pullback(2)).row(T2)
    assert lam_d0(direct) == lam_d0(composed)
    # the dropped E2 generator removes the c_j terms from the composition
    assert composed.coefficient(delta(1)).coefficient(c_sym(1)) == 0
    assert direct.coefficient(delta(1)).coefficient(c_sym(1)) == 1


def test_p_q_map_k1_keeps_generic_rows():
    # composing through the k = 1 Hurwitz basis would lose the E3
    # content; the generic rows keep the closed-form lambda/delta_0 values
    direct = p_q_map(1, PER_FACTORIAL_B).row(T2)
    assert lam_d0(direct) == (105, -10)
    composed = p_push(1, PER_FACTORIAL_B).compose(q_pullback(1)).row(T2)
    assert lam_d0(composed) == (0, Fraction(1, 2))


def test_p_q_kappa_values():
    pushed = p_q_kappa(1)
    assert lam_d0(pushed) == (63, -6)
    assert p_q_kappa_closed_coeffs(1) == (63, -6)
    assert pushed.coefficient(delta(1)) == AffineExpr(
        Fraction(8, 5), {c_sym(1): Fraction(3, 5), b_sym(1): Fraction(-27, 10)}
    )
    for k in range(1, 21):
        assert lam_d0(p_q_kappa(k)) == p_q_kappa_closed_coeffs(k)


def test_mg_canonical_class():
    assert mg_canonical_class(3) == mclass(
        3, {LAMBDA: 13, delta(0): -2, delta(1): -3, delta(2): -2, delta(3): -2}
    )


def test_eh_divisor_closed_form():
    assert lam_d0(eh_divisor(3, PER_FACTORIAL_B)) == (94, -12)
    assert eh_closed_coeffs(3) == (94, -12)
    for k in range(3, 13):
        assert lam_d0(eh_divisor(k, PER_FACTORIAL_B)) == eh_closed_coeffs(k)


def test_eh_divisor_small_k_assembly_only():
    assert eh_divisor(1, PER_FACTORIAL_B) == mclass(
        1, {LAMBDA: -13, delta(0): Fraction(13, 10), delta(1): Fraction(18, 5)}
    )
    assert lam_d0(eh_divisor(2, PER_FACTORIAL_B)) == (34, -4)


def test_prym_pullbacks():
    pair = prym_pullbacks(3)
    from hurwitzdiv.trace import (
        phi_pull_boundary,
        phi_pull_lambda,
        phihat_pull_boundary,
        phihat_pull_lambda,
    )

    assert pair.hodge == phi_pull_lambda(3) - phihat_pull_lambda(3)
    assert pair.boundary == phi_pull_boundary(3, 0) - phihat_pull_boundary(3, 0)
    assert pair.boundary.coefficient(E0).constant_value() == 6
    assert prym_pullbacks(1).boundary == DivisorClass(hurwitz_basis(1), {E0: 2})


def test_symbol_hygiene_lambda_delta0_constant():
    for k in (1, 2, 3, 6):
        for d in (
            p_phi_lambda(k),
            p_phihat_lambda(k),
            p_phi_delta(k, 0, PER_FACTORIAL_B),
            p_phihat_delta(k, 0, PER_FACTORIAL_B),
            p_q_kappa(k),
            eh_divisor(k, PER_FACTORIAL_B),
        ):
            assert d.coefficient(LAMBDA).is_constant()
            assert d.coefficient(delta(0)).is_constant()


def test_normalization_round_trip():
    for k in (1, 4):
        d = p_phi_lambda(k)
        raw = convert_normalization(d, k, PER_FACTORIAL_B, RAW)
        assert convert_normalization(raw, k, RAW, PER_FACTORIAL_B) == d
        assert raw == d * factorial_b(k)
        assert convert_normalization(d, k, RAW, RAW) == d
    with pytest.raises(ValueError):
        convert_normalization(p_phi_lambda(1), 1, "raw", "nope")


def test_external_coeffs_validation():
    good = ExternalCoeffs(
        2,
        {1: Fraction(1), 2: Fraction(2)},
        {1: Fraction(0), 2: Fraction(-1, 3)},
    )
    assert good.substitution()[c_sym(2)] == 2
    with pytest.raises(ValueError):
        ExternalCoeffs(2, {1: Fraction(1)}, {1: Fraction(0), 2: Fraction(1)})
    with pytest.raises(ValueError):
        ExternalCoeffs(1, {1: Fraction(1), 2: Fraction(1)}, {1: Fraction(0)})


def test_external_coeffs_substitution_eliminates_symbols():
    ext = ExternalCoeffs(
        2,
        {1: Fraction(3, 2), 2: Fraction(-1)},
        {1: Fraction(5), 2: Fraction(1, 7)},
    )
    for d in (p_phihat_lambda(2), p_q_kappa(2), eh_divisor(2, PER_FACTORIAL_B)):
        numeric = ext.apply(d)
        assert all(value.is_constant() for _, value in numeric.items())
    # spot value: delta_1 of the reduced Hodge push-forward
    assert ext.apply(p_phihat_lambda(2)).coefficient(delta(1)).constant_value() == (
        Fraction(8, 11) - Fraction(5, 66)
    )
