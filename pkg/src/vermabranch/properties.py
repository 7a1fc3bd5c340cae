"""Seeded randomized property suites over the scalar field, the polynomial
ring and the operator algebra.  Everything is exact, so each case is a hard
equality check, not an approximation."""

from __future__ import annotations

import random
from fractions import Fraction

from .polyring import GeoPoly, RatCoeff, xi_vars
from .report import ReportBundle
from .scalars import ParamScalar
from .weylalg import DiffOp

_SYMBOLS = ("l", "m")


def _rand_scalar(rng: random.Random, depth: int = 2) -> ParamScalar:
    """A random element of the parameter field: small polynomials in the
    formal weights over small rationals, occasionally divided."""
    def poly() -> ParamScalar:
        out = ParamScalar.const(Fraction(rng.randint(-4, 4), rng.randint(1, 3)))
        for s in _SYMBOLS:
            if rng.random() < 0.4:
                out = out + ParamScalar.symbol(s) * rng.randint(-3, 3)
        return out

    num = poly()
    if depth > 0 and rng.random() < 0.3:
        den = poly()
        if not den.is_zero():
            return num / den
    return num


def _rand_poly(rng: random.Random, vars, max_terms: int = 3, max_deg: int = 2) -> GeoPoly:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        e = tuple(rng.randint(0, max_deg) for _ in range(vars.arity))
        terms[e] = ParamScalar.const(rng.randint(-5, 5))
    return GeoPoly(vars, terms)


def _rand_op(rng: random.Random, vars, max_terms: int = 2) -> DiffOp:
    out = DiffOp.zero(vars)
    for _ in range(rng.randint(1, max_terms)):
        e = tuple(rng.randint(0, 2) for _ in range(vars.arity))
        out = out + DiffOp(vars, {e: RatCoeff(_rand_poly(rng, vars))})
    return out


def field_axioms(seed: int, cases: int) -> ReportBundle:
    """Commutativity, associativity, distributivity and inverses in the
    parameter field."""
    rng = random.Random(seed)
    bundle = ReportBundle()
    ok = True
    witness = None
    for _ in range(cases):
        a, b, c = (_rand_scalar(rng) for _ in range(3))
        checks = [
            a + b == b + a,
            (a + b) + c == a + (b + c),
            a * b == b * a,
            (a * b) * c == a * (b * c),
            a * (b + c) == a * b + a * c,
            a + (-a) == ParamScalar.const(0),
        ]
        if not a.is_zero():
            checks.append(a / a == ParamScalar.const(1))
            checks.append((b / a) * a == b)
        if not all(checks):
            ok = False
            witness = f"a={a.render()}, b={b.render()}, c={c.render()}"
            break
    bundle.check(f"property.field-axioms.seed={seed}", "engine:scalar-field",
                 ok, witness=witness)
    return bundle


def _op_case(rng: random.Random, max_terms: int = 2):
    vars = xi_vars(2)
    return vars, *(_rand_op(rng, vars, max_terms) for _ in range(3))


def associativity(seed: int, cases: int) -> ReportBundle:
    rng = random.Random(seed)
    bundle = ReportBundle()
    ok = True
    witness = None
    for _ in range(cases):
        _, a, b, c = _op_case(rng, max_terms=1)
        if (a @ b) @ c != a @ (b @ c):
            ok = False
            witness = f"{a.render()} ; {b.render()} ; {c.render()}"
            break
    bundle.check(f"property.compose-associative.seed={seed}",
                 "engine:normal-ordering", ok, witness=witness)
    return bundle


def apply_compose(seed: int, cases: int) -> ReportBundle:
    """(A o B)(p) agrees with A(B(p))."""
    rng = random.Random(seed)
    bundle = ReportBundle()
    ok = True
    witness = None
    for _ in range(cases):
        vars, a, b, _ = _op_case(rng)
        p = _rand_poly(rng, vars, max_terms=3, max_deg=3)
        if (a @ b).apply(p) != a.apply(b.apply(p)):
            ok = False
            witness = f"{a.render()} ; {b.render()} ; {p.render()}"
            break
    bundle.check(f"property.apply-compose.seed={seed}",
                 "engine:normal-ordering", ok, witness=witness)
    return bundle


def jacobi_identity(seed: int, cases: int) -> ReportBundle:
    rng = random.Random(seed)
    bundle = ReportBundle()
    ok = True
    witness = None
    for _ in range(cases):
        _, a, b, c = _op_case(rng, max_terms=1)
        s = (a.commutator(b.commutator(c)) + b.commutator(c.commutator(a))
             + c.commutator(a.commutator(b)))
        if not s.is_zero():
            ok = False
            witness = s.render()
            break
    bundle.check(f"property.jacobi-identity.seed={seed}",
                 "engine:normal-ordering", ok, witness=witness)
    return bundle


def normal_order_confluence(seed: int, cases: int) -> ReportBundle:
    """Folding a product of elementary factors in any association order
    lands on the same normal form."""
    rng = random.Random(seed)
    bundle = ReportBundle()
    ok = True
    witness = None
    for _ in range(cases):
        vars = xi_vars(2)
        factors = []
        for _ in range(4):
            if rng.random() < 0.5:
                factors.append(DiffOp.mult(_rand_poly(rng, vars, max_terms=2)))
            else:
                factors.append(DiffOp.partial(vars, rng.randrange(2),
                                              rng.randint(1, 2)))
        left = factors[0]
        for f in factors[1:]:
            left = left @ f
        right = factors[-1]
        for f in reversed(factors[:-1]):
            right = f @ right
        mid = (factors[0] @ factors[1]) @ (factors[2] @ factors[3])
        if not (left == right == mid):
            ok = False
            witness = " ; ".join(f.render() for f in factors)
            break
    bundle.check(f"property.normal-order-confluence.seed={seed}",
                 "engine:normal-ordering", ok, witness=witness)
    return bundle


ALL_SUITES = (field_axioms, associativity, apply_compose, jacobi_identity,
              normal_order_confluence)


def run_all(seed: int, cases: int) -> ReportBundle:
    bundle = ReportBundle()
    for i, suite in enumerate(ALL_SUITES):
        bundle.extend(suite(seed + i, cases))
    return bundle
