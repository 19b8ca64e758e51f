"""Independent cross-checks computed with sympy rather than with this package."""

import random
from fractions import Fraction

import sympy

from cubicpair.cubicmaps import CubicHomogeneousMap
from cubicpair.polyring import PolynomialMap
from cubicpair.series import SYMBOLIC, formal_inverse_terms, preconjugation_terms
from cubicpair.scalars import lambda_eval

from conftest import random_cubic_map

y, lam = sympy.symbols("y lam")


def to_sympy(poly, syms):
    expr = sympy.Integer(0)
    for exps, c in poly.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for s, e in zip(syms, exps):
            term *= s ** e
        expr += term
    return expr


def test_brute_force_inverse_of_x_minus_cube():
    # iterate u <- y + u^3 and keep terms up to degree 9
    u = y
    for _ in range(6):
        u = sympy.expand(y + u ** 3)
        u = sum(u.coeff(y, d) * y ** d for d in range(10))
    expected = [u.coeff(y, d) for d in (1, 3, 5, 7, 9)]
    assert expected == [1, 1, 3, 12, 55]
    ours = formal_inverse_terms(CubicHomogeneousMap(PolynomialMap.parse(["x1^3"], 1)), 9)
    assert [ours.term(d).components[0].coefficient((d,)) for d in (1, 3, 5, 7, 9)] == expected


def test_undetermined_coefficients_for_one_dimensional_conjugation():
    # k(y) = y + c3 y^3 + c5 y^5 + c7 y^7, solve lam f(k(y)) = k(lam y) degree by degree
    c = sympy.symbols("c3 c5 c7")
    k = y + c[0] * y ** 3 + c[1] * y ** 5 + c[2] * y ** 7
    resid = sympy.expand(lam * (k - k ** 3) - k.subs(y, lam * y))
    sol = sympy.solve([resid.coeff(y, d) for d in (3, 5, 7)], c, dict=True)[0]
    ours = preconjugation_terms(CubicHomogeneousMap(PolynomialMap.parse(["x1^3"], 1)), SYMBOLIC, 7)
    for d, sym in zip((3, 5, 7), c):
        r = ours.term(d).components[0].coefficient((d,))
        for v in (2, 3, Fraction(1, 3)):
            assert lambda_eval(r, v) == sol[sym].subs(lam, sympy.Rational(str(v)))


def test_undetermined_coefficients_two_dimensional():
    f = random_cubic_map(random.Random(11), 2, 3)
    x1, x2 = sympy.symbols("x1 x2")
    h = [to_sympy(p, (x1, x2)) for p in f.cubic_part]
    mons3 = [x1 ** a * x2 ** (3 - a) for a in range(4)]
    coeffs = sympy.symbols("a0:8")
    k = [x1 + sum(coeffs[i] * m for i, m in enumerate(mons3)),
         x2 + sum(coeffs[4 + i] * m for i, m in enumerate(mons3))]
    v = sympy.Integer(2)
    eqs = []
    for i in range(2):
        fk = k[i] - h[i].subs({x1: k[0], x2: k[1]}, simultaneous=True)
        resid = sympy.Poly(sympy.expand(v * fk - k[i].subs({x1: v * x1, x2: v * x2}, simultaneous=True)), x1, x2)
        eqs += [cf for mon, cf in resid.terms() if sum(mon) == 3]
    sol = sympy.solve(eqs, coeffs, dict=True)[0]
    ours = preconjugation_terms(f, Fraction(2), 3).term(3)
    for i in range(2):
        mine = to_sympy(ours.components[i], (x1, x2))
        theirs = sympy.expand((k[i] - (x1, x2)[i]).subs(sol))
        assert sympy.expand(mine - theirs) == 0


def test_fixture_jacobians_with_sympy(druz, essen):
    for fx in (druz, essen):
        syms = sympy.symbols(f"x1:{fx.f.dim + 1}")
        comps = [to_sympy(p, syms) for p in fx.f.full_map()]
        det = sympy.Matrix(comps).jacobian(syms).det(method="berkowitz")
        assert sympy.expand(det) == 1


def test_fixture_inverse_with_sympy(essen):
    syms = sympy.symbols("x1:5")
    f = [to_sympy(p, syms) for p in essen.f.full_map()]
    g = [to_sympy(p, syms) for p in essen.f_inv]
    fg = [sympy.expand(e.subs(dict(zip(syms, g)), simultaneous=True)) for e in f]
    gf = [sympy.expand(e.subs(dict(zip(syms, f)), simultaneous=True)) for e in g]
    assert fg == list(syms) and gf == list(syms)


def test_nilpotency_with_sympy(druz, essen):
    a = sympy.Matrix(druz.A.to_lists())
    assert a.rank() == 5 and (a * a).is_zero_matrix
    a = sympy.Matrix(essen.A.to_lists())
    assert not (a * a).is_zero_matrix and (a ** 3).is_zero_matrix
