"""Diagonal-pair scenario: singular solutions, lowering identity, model
transport, coefficient recursion, and the branching bookkeeping."""

from fractions import Fraction

import pytest

from vermabranch.diag_pair import (DiagContext, annihilation_check,
                                   branching_sets, character_check,
                                   commutation_check, decomposition_report,
                                   grothendieck_check, involution_check,
                                   jacobi_t_polynomial, lowering_constant,
                                   model_transport_check, op_F_fourier,
                                   op_F_function, op_X_fourier, op_X_function,
                                   recursion_crosscheck,
                                   singular_vector_Ptilde,
                                   t_annihilation_check,
                                   top_coefficient_check, verify_lowering)
from vermabranch.polyring import GeoPoly, xi_eta_vars
from vermabranch.report import DISCREPANCY
from vermabranch.scalars import LAMBDA, MU

CTX = DiagContext.formal()


def test_low_degree_solutions():
    vs = xi_eta_vars()
    xi = GeoPoly.var(vs, "xi")
    eta = GeoPoly.var(vs, "eta")
    assert singular_vector_Ptilde(CTX, 0) == GeoPoly.const(vs, 1)
    assert singular_vector_Ptilde(CTX, 1) == xi.scale(MU) - eta.scale(LAMBDA)
    p2 = singular_vector_Ptilde(CTX, 2)
    assert p2.coefficient((2, 0)) == (MU * MU - MU) / 2
    assert p2.coefficient((0, 2)) == (LAMBDA * LAMBDA - LAMBDA) / 2
    assert p2.coefficient((1, 1)) == -(LAMBDA - 1) * (MU - 1)


def test_operators_commute():
    assert op_X_fourier(CTX).commutator(op_F_fourier(CTX)).is_zero()
    assert op_X_function(CTX).commutator(op_F_function(CTX)).is_zero()
    assert commutation_check(CTX).ok()


@pytest.mark.parametrize("l", range(11))
def test_annihilation(l):
    assert op_X_fourier(CTX).apply(singular_vector_Ptilde(CTX, l)).is_zero()


def test_t_model_annihilation():
    assert t_annihilation_check(CTX, 8).ok()


def test_displayed_lowering_constants():
    assert lowering_constant(CTX, 1) == LAMBDA * MU * -2
    assert lowering_constant(CTX, 2) == (LAMBDA - 1) * (MU - 1) * -2
    assert lowering_constant(CTX, 3) == (LAMBDA - 2) * (MU - 2) * -2


def test_lowering_identity():
    f_hat = op_F_fourier(CTX)
    for l in range(1, 7):
        img = f_hat.apply(singular_vector_Ptilde(CTX, l))
        expected = singular_vector_Ptilde(CTX, l - 1).scale(
            lowering_constant(CTX, l))
        assert img == expected
    assert verify_lowering(CTX, 6).ok()


def test_model_transport():
    assert model_transport_check(CTX, 5).ok()


def test_recursion_crosscheck():
    bundle = recursion_crosscheck(CTX, 6)
    assert bundle.ok()


def test_top_coefficient_cancellation():
    assert top_coefficient_check(CTX, 10).ok()


def test_jacobi_t_polynomial_degree():
    for l in range(7):
        assert jacobi_t_polynomial(CTX, l).degree() == l


def test_involution():
    assert involution_check().ok()


def test_character():
    assert character_check(20).ok()


def test_branching_sets_odd():
    s = branching_sets(3, 8)
    assert s.lambda_s == [3, 1]
    assert s.iota_lambda_s == [-5, -3]
    assert s.lambda_r_definitional == [-1, -7, -9, -11, -13]
    # the displayed case analysis disagrees with the definition
    d = s.diff()
    assert -1 in d["definitional-only"]
    assert d["displayed-only"] == [-3, -5]


def test_branching_sets_even():
    s = branching_sets(4, 8)
    assert s.lambda_s == [4, 2, 0]
    assert s.lambda_r_definitional == [-8, -10, -12]
    assert -1 in s.lambda_r_displayed


def test_grothendieck_multiset():
    for N in range(7):
        for cutoff in (4, 10):
            rep = grothendieck_check(N, cutoff)
            by_id = {r.check_id: r.status for r in rep.bundle.records}
            assert by_id[f"branch.grothendieck.N={N},cutoff={cutoff}"] == "pass"
            assert by_id[f"branch.lambda-r-diff.N={N}"] == DISCREPANCY


def test_decomposition_report():
    ctx = DiagContext.at(Fraction(1, 2), Fraction(5, 2))
    rep = decomposition_report(ctx, 8)
    assert rep.bundle.ok()
    assert rep.projective_summands == [(3, 3, -5), (1, 1, -3)]
    assert rep.verma_summands[0] == -1


def test_decomposition_preconditions():
    with pytest.raises(ValueError, match="lam = 2"):
        decomposition_report(DiagContext.at(2, 1), 4)
    with pytest.raises(ValueError, match="not a nonnegative integer"):
        decomposition_report(DiagContext.at(Fraction(1, 2), Fraction(1, 3)), 4)
    with pytest.raises(ValueError, match="rational specializations"):
        decomposition_report(CTX, 4)


def test_suite_bundles_pass():
    assert annihilation_check(CTX, 6).ok()
