import random
from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cubicpair.cubicmaps import (
    CubicHomogeneousMap,
    CubicLinearMap,
    eval_map,
    jacobian_det_constant,
    jacobian_determinant,
    kernel_shift_check,
    polarize,
)
from cubicpair.linalg import RationalMatrix, kernel_basis
from cubicpair.polyring import Polynomial, PolynomialMap

from conftest import random_cubic_map


def test_polarize_examples(essen):
    g = polarize(PolynomialMap.parse(["x1^3"], 1))
    assert g.tensor == [{(0, 0, 0): 1}]
    g = polarize(PolynomialMap.parse(["x1^2*x2"], 2))
    assert g([1, 0], [1, 0], [0, 1]) == [Fraction(1, 3)]
    g = polarize(essen.f.cubic_part)
    diag = g.diagonal()
    assert diag.components[0] == -Polynomial.parse("x1*x3*x4 + x2*x4^2", 4)
    with pytest.raises(ValueError):
        polarize(PolynomialMap.parse(["x1^2"], 1))


def test_eval_examples(druz):
    F0 = CubicLinearMap(RationalMatrix.zeros(3, 3))
    assert eval_map(F0, [1, 2, 3]) == [1, 2, 3]
    f1 = CubicHomogeneousMap(PolynomialMap.parse(["x1^3"], 1))
    assert eval_map(f1, [Fraction(1, 2)]) == [Fraction(3, 8)]
    assert eval_map(druz.f, [1, 1, 0, 0, 0]) == [1, 1, 6, -6, 0]
    with pytest.raises(ValueError):
        eval_map(druz.f, [1, 2])


def test_kernel_shift_examples(druz):
    F = druz.F
    assert kernel_shift_check(F, [0] * 15)
    pts = [[Fraction(i - k, 3) for i in range(15)] for k in range(2)]
    for col in kernel_basis(druz.A).columns():
        assert kernel_shift_check(F, col, pts)
    with pytest.raises(ValueError):
        kernel_shift_check(F, [1] + [0] * 14)


def test_jacobian_constant_examples(druz, essen):
    assert jacobian_det_constant(druz.f) == (True, 1)
    assert jacobian_det_constant(essen.f) == (True, 1)
    cube = CubicHomogeneousMap(PolynomialMap.parse(["x1^3"], 1))
    assert jacobian_det_constant(cube) == (False, None)
    assert jacobian_determinant(cube) == Polynomial.parse("1 - 3*x1^2", 1)


def test_cubic_part_validation():
    with pytest.raises(ValueError):
        CubicHomogeneousMap(PolynomialMap.parse(["x1^2"], 1))
    with pytest.raises(ValueError):
        CubicLinearMap(RationalMatrix.zeros(2, 3))
    f = CubicHomogeneousMap.from_map(PolynomialMap.parse(["x1 - x1^3"], 1))
    assert f.cubic_part == PolynomialMap.parse(["x1^3"], 1)


def test_linear_form_is_hadamard(druz):
    F = druz.F
    ident = PolynomialMap.identity(15)
    assert F.full_map() == ident - F.trilinear.diagonal()


# -- properties --------------------------------------------------------------

vectors = st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=4), min_size=3, max_size=3)


@given(st.integers(0, 10_000), st.integers(1, 3))
def test_polarization_recovers_h(seed, n):
    f = random_cubic_map(random.Random(seed), n, 4)
    assert polarize(f.cubic_part).diagonal() == f.cubic_part


@given(st.integers(0, 10_000), vectors, vectors, vectors)
def test_trilinear_symmetry(seed, x, y, z):
    g = polarize(random_cubic_map(random.Random(seed), 3, 4).cubic_part)
    ref = g(x, y, z)
    for a, b, c in permutations((x, y, z)):
        assert g(a, b, c) == ref


@given(vectors, vectors, vectors, st.fractions(min_value=-2, max_value=2, max_denominator=3))
def test_trilinear_in_first_slot(x, y, z, t):
    f = random_cubic_map(random.Random(3), 3, 4)
    g = polarize(f.cubic_part)
    xs = [a * t + b for a, b in zip(x, y)]
    lhs = g(xs, y, z)
    rhs = [t * a + b for a, b in zip(g(x, y, z), g(y, y, z))]
    assert lhs == rhs


@given(st.lists(st.integers(-2, 2), min_size=9, max_size=9))
def test_kernel_shift_for_any_singular_matrix(entries):
    a = RationalMatrix([entries[0:3], entries[3:6], entries[6:9]])
    F = CubicLinearMap(a)
    for col in kernel_basis(a).columns():
        assert kernel_shift_check(F, col)


@given(st.lists(st.integers(-2, 2), min_size=9, max_size=9))
def test_hadamard_form_matches_map(entries):
    a = RationalMatrix([entries[0:3], entries[3:6], entries[6:9]])
    F = CubicLinearMap(a)
    assert F.full_map() == PolynomialMap.identity(3) - F.trilinear.diagonal()
