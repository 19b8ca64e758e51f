import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from cubicpair.polyring import (
    Polynomial,
    PolynomialMap,
    ZERO_DEGREE,
    hadamard_cube,
    homogeneous_part,
    jacobian,
    poly_compose,
    poly_det,
    scalar_det,
    truncate,
)
from cubicpair.linalg import RationalMatrix


def P(text, n=1):
    return Polynomial.parse(text, n)


def M(texts, n):
    return PolynomialMap.parse(texts, n)


def test_compose_examples():
    p = M(["x1^2 + x2", "x1*x2"], 2)
    assert poly_compose(PolynomialMap.identity(2), p) == p
    assert poly_compose(M(["x1^2"], 1), M(["y1 + 1"], 1)) == M(["x1^2 + 2*x1 + 1"], 1)
    with pytest.raises(ValueError):
        poly_compose(M(["x1"], 1), p)


def test_truncate_and_homogeneous_part():
    p = M(["x1 + x1^3"], 1)
    assert truncate(p, 2) == M(["x1"], 1)
    assert truncate(p, 3) == p
    assert homogeneous_part(p, 3) == M(["x1^3"], 1)
    assert homogeneous_part(p, 2).is_zero()


def test_zero_degree_is_a_sentinel():
    z = Polynomial.zero(2)
    assert z.degree is ZERO_DEGREE
    assert z.degree < 0 and not z.degree > 0
    assert P("x1^3 + x1").degree == 3


def test_jacobian_examples(druz):
    j = jacobian(PolynomialMap.identity(3))
    assert [[e.constant_term() for e in row] for row in j] == [[1 if i == k else 0 for k in range(3)] for i in range(3)]
    assert jacobian(M(["x1 - x1^3"], 1))[0][0] == P("1 - 3*x1^2")
    entry = jacobian(druz.f.full_map())[2][0]
    assert entry == Polynomial.parse("6*x1*x2 + 3*x2^2 + 6*x2*x4 - 12*x1*x5", 5)


def test_determinant_examples(druz):
    const = [[Polynomial.constant(1, 1), Polynomial.constant(1, 2)], [Polynomial.constant(1, 3), Polynomial.constant(1, 4)]]
    assert poly_det(const) == Polynomial.constant(1, -2)
    assert poly_det(jacobian(M(["x1 - x1^3"], 1))) == P("1 - 3*x1^2")
    assert poly_det(jacobian(druz.f.full_map())) == Polynomial.constant(5, 1)


def test_hadamard_cube_examples(druz):
    assert hadamard_cube(PolynomialMap.identity(2)) == M(["x1^3", "x2^3"], 2)
    assert hadamard_cube(PolynomialMap.zero(2, 3)).is_zero()
    # cube of X -> AX is exactly the cubic correction of F
    F = druz.F
    assert hadamard_cube(PolynomialMap.linear(druz.A)) == PolynomialMap.identity(15) - F.full_map()


def test_inverse_truncation_identity(druz):
    comp = poly_compose(druz.f.full_map(), druz.f_inv)
    assert truncate(comp, 7) == PolynomialMap.identity(5)


def test_homogeneous_part_of_inverse(druz):
    five = homogeneous_part(druz.f_inv, 5)
    assert five.components[2].coefficient((3, 2, 0, 0, 0)) == -18


def test_parse_and_print():
    p = P("x1^2*x2 - 2/3*x1*x2 + 1", 2)
    assert p.coefficient((1, 1)) == Fraction(-2, 3)
    assert Polynomial.parse(str(p), 2) == p


# -- properties ------------------------------------------------------------

coef = st.integers(-3, 3).map(Fraction)


@st.composite
def polynomials(draw, n=2, max_deg=3, max_terms=4):
    terms = draw(st.lists(st.tuples(st.tuples(*[st.integers(0, max_deg)] * n), coef), max_size=max_terms))
    return Polynomial(n, [(e, c) for e, c in terms if sum(e) <= max_deg])


@st.composite
def maps(draw, n=2, max_deg=2):
    return PolynomialMap(n, [draw(polynomials(n, max_deg, 3)) for _ in range(n)])


@given(polynomials(), polynomials(), polynomials())
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert (a - b) + b == a


@given(maps(), maps(), maps())
def test_compose_associative(p, q, r):
    assert poly_compose(poly_compose(p, q), r) == poly_compose(p, poly_compose(q, r))


def _matmul(a, b):
    return [[sum((a[i][k] * b[k][j] for k in range(len(b))), Polynomial.zero(a[0][0].nvars)) for j in range(len(b[0]))]
            for i in range(len(a))]


@given(maps(), maps())
def test_chain_rule(p, q):
    lhs = jacobian(poly_compose(p, q))
    jp_at_q = [[poly_compose(PolynomialMap(2, [e]), q).components[0] for e in row] for row in jacobian(p)]
    assert lhs == _matmul(jp_at_q, jacobian(q))


@given(maps(), st.integers(0, 4))
def test_truncate_reassembles(p, d):
    assert truncate(p, d) + p.above(d) == p


def _sympy_det(m, syms):
    rows = [[sympy.sympify(e.to_string("x").replace("^", "**")) if not e.is_zero() else 0 for e in row] for row in m]
    return sympy.expand(sympy.Matrix(rows).det(method="berkowitz"))


@pytest.mark.parametrize("size", [1, 2, 3, 4, 5])
def test_det_matches_sympy(size):
    rng = random.Random(size)
    syms = sympy.symbols("x1:3")
    for _ in range(3):
        m = [[Polynomial(2, [((rng.randint(0, 1), rng.randint(0, 1)), rng.randint(-2, 2)) for _ in range(2)])
              for _ in range(size)] for _ in range(size)]
        ours = sympy.expand(sympy.sympify(poly_det(m).to_string("x").replace("^", "**") or "0"))
        assert sympy.expand(ours - _sympy_det(m, syms)) == 0


def test_scalar_det_matches_sympy():
    rng = random.Random(7)
    for size in range(1, 7):
        rows = [[Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(size)] for _ in range(size)]
        assert scalar_det(rows) == sympy.Matrix(rows).det()
