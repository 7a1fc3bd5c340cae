"""Normal ordering, composition, and the action of differential operators."""

import pytest

from vermabranch.polyring import GeoPoly, RatCoeff, quadratic_sum, xi_vars
from vermabranch.properties import (apply_compose, associativity,
                                    field_axioms, jacobi_identity,
                                    normal_order_confluence)
from vermabranch.scalars import LAMBDA, ParamScalar
from vermabranch.weylalg import DiffOp, proportionality

VS = xi_vars(2)
X1 = GeoPoly.var(VS, "x1")
X2 = GeoPoly.var(VS, "x2")
D1 = DiffOp.partial(VS, "x1")
D2 = DiffOp.partial(VS, "x2")


def test_canonical_commutation():
    # [d_1, x1] = 1, [d_1, x2] = 0
    assert D1.commutator(DiffOp.mult(X1)) == DiffOp.identity(VS)
    assert D1.commutator(DiffOp.mult(X2)).is_zero()


def test_normal_ordering_moves_coefficients_left():
    # d_1 o x1 = x1 d_1 + 1
    op = D1 @ DiffOp.mult(X1)
    assert op == DiffOp.mult(X1) @ D1 + DiffOp.identity(VS)


def test_higher_leibniz():
    # d_1^2 o x1^2 = x1^2 d_1^2 + 4 x1 d_1 + 2
    op = (D1 @ D1) @ DiffOp.mult(X1 * X1)
    expected = (DiffOp.mult(X1 * X1) @ D1 @ D1
                + (DiffOp.mult(X1) @ D1).scale(4) + DiffOp.scalar(VS, 2))
    assert op == expected


def test_euler_measures_degree():
    e = DiffOp.euler(VS)
    p = X1 * X1 * X2
    assert e.apply(p) == p.scale(3)


def test_laplacian():
    lap = DiffOp.laplacian(VS)
    q = quadratic_sum(VS, 2)
    assert lap.apply(q) == GeoPoly.const(VS, 4)


def test_apply_demands_polynomial_result():
    inv = DiffOp.mult_rat(RatCoeff(GeoPoly.const(VS, 1), {"xn": 1}))
    with pytest.raises(ValueError):
        inv.apply(X1)
    # but x2/x2 divides out
    assert inv.apply(X2 * X1) == X1


def test_order():
    assert DiffOp.zero(VS).order() == -1
    assert DiffOp.mult(X1).order() == 0
    assert (D1 @ D2).order() == 2


def test_proportionality():
    assert proportionality(X1.scale(LAMBDA), X1) == LAMBDA
    assert proportionality(GeoPoly.zero(VS), X1) == ParamScalar.const(0)
    assert proportionality(X1 + X2, X1) is None
    with pytest.raises(ValueError):
        proportionality(X1, GeoPoly.zero(VS))


def test_scalar_coefficient_operators():
    op = D1.scale(LAMBDA)
    assert op.apply(X1 * X1) == X1.scale(LAMBDA * 2)


def test_randomized_property_suites_small():
    # tiny seeds here; the full 200-case suites run in the acceptance tests
    for suite in (field_axioms, associativity, apply_compose,
                  jacobi_identity, normal_order_confluence):
        bundle = suite(7, 20)
        assert bundle.ok(), suite.__name__
