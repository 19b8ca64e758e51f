import random
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cubicpair.cubicmaps import CubicHomogeneousMap, CubicLinearMap, polarize
from cubicpair.linalg import RationalMatrix
from cubicpair.pairing import pair_up
from cubicpair.polyring import Polynomial, PolynomialMap
from cubicpair.scalars import ExcludedLambdaError, LambdaPoly, LambdaRational
from cubicpair.series import (
    SYMBOLIC,
    ZERO,
    SeriesError,
    TermSeries,
    certify_polynomial_inverse,
    coefficient_norm,
    formal_inverse_terms,
    lift_conjugation,
    lift_conjugation_inverse,
    lift_inverse,
    lower_conjugation,
    lower_inverse,
    majorant,
    parse_lambda_mode,
    preconjugation_terms,
    series_compositional_inverse,
    truncation_certified,
    verify_conjugation,
)

from conftest import random_cubic_map

ONE = LambdaPoly.constant(1)
LAM = LambdaPoly.monomial


def qpoch(k):
    out = ONE
    for i in range(1, k + 1):
        out = out * (ONE - LAM(2 * i))
    return out


def cube1():
    return CubicHomogeneousMap(PolynomialMap.parse(["x1^3"], 1))


def coeff1(series, m):
    return series.term(m).components[0].coefficient((m,))


def test_zero_form_gives_identity():
    s = preconjugation_terms(CubicHomogeneousMap.identity(3), SYMBOLIC, 7)
    assert s == TermSeries.identity(3, 7, SYMBOLIC)


def test_one_dimensional_symbolic_terms():
    s = preconjugation_terms(cube1(), SYMBOLIC, 7)
    assert coeff1(s, 3) == LambdaRational(1, qpoch(1))
    assert coeff1(s, 5) == LambdaRational(3, qpoch(2))
    assert coeff1(s, 7) == LambdaRational(LambdaPoly([12, 0, 3]), qpoch(3))
    assert s.odd_only() and s.is_normalized()


def test_formal_inverse_is_fuss_catalan():
    s = formal_inverse_terms(cube1(), 9)
    assert [coeff1(s, m) for m in (1, 3, 5, 7, 9)] == [1, 1, 3, 12, 55]
    assert [coeff1(s, 2 * k + 1) for k in range(5)] == [comb(3 * k, k) // (2 * k + 1) for k in range(5)]


def test_formal_inverse_fixtures(druz, essen):
    s = formal_inverse_terms(druz.f, 21)
    assert s.truncated(7).as_map() == druz.f_inv
    assert all(s.term(m).is_zero() for m in range(8, 22))
    assert formal_inverse_terms(essen.f, 7).as_map() == essen.f_inv


def test_symbolic_fixtures(druz, essen):
    assert preconjugation_terms(druz.f, SYMBOLIC, 7).as_map() == druz.k
    assert preconjugation_terms(essen.f, SYMBOLIC, 7).as_map() == essen.k


def test_excluded_lambda_names_the_degree():
    with pytest.raises(ExcludedLambdaError, match="degree-3"):
        preconjugation_terms(cube1(), Fraction(1), 5)
    with pytest.raises(ExcludedLambdaError):
        preconjugation_terms(cube1(), Fraction(-1), 5)
    with pytest.raises(SeriesError):
        preconjugation_terms(cube1(), Fraction(0), 5)
    with pytest.raises(ValueError):
        preconjugation_terms(cube1(), SYMBOLIC, 0)


def test_lambda_mode_parsing():
    assert parse_lambda_mode("symbolic") == SYMBOLIC
    assert parse_lambda_mode("zero") == ZERO
    assert parse_lambda_mode("-3/2") == Fraction(-3, 2)
    with pytest.raises(ValueError):
        parse_lambda_mode("fast")


def test_certify_polynomial_inverse_examples(druz):
    assert certify_polynomial_inverse(druz.f, druz.f_inv)
    assert certify_polynomial_inverse(CubicHomogeneousMap.identity(2), PolynomialMap.identity(2))
    assert not certify_polynomial_inverse(druz.f, PolynomialMap.identity(5))


def test_trivial_pairing_transfers():
    p = pair_up(CubicHomogeneousMap.identity(2))
    ident2 = PolynomialMap.identity(2)
    F_inv = lift_inverse(p, ident2)
    assert certify_polynomial_inverse(p.F, F_inv, pairing=p)
    assert lower_inverse(p, F_inv) == ident2
    K = preconjugation_terms(p.F, SYMBOLIC, 7)
    assert lower_conjugation(p, K) == TermSeries.identity(2, 7, SYMBOLIC)
    k = TermSeries.identity(2, 7, SYMBOLIC)
    assert lift_conjugation(p, k, 7) == K
    K_inv = lift_conjugation_inverse(p, ident2, K)
    assert truncation_certified(K.as_map(), K_inv.as_map(), 7)


def test_lift_inverse_rejects_uncertified(druz):
    from cubicpair.pairing import Pairing

    p = Pairing(druz.A, druz.B, druz.C, druz.f)
    with pytest.raises(SeriesError):
        lift_inverse(p, PolynomialMap.identity(5))


def test_small_lift_and_lower_round_trip():
    f = CubicHomogeneousMap(PolynomialMap.parse(["x2^3", "0"], 2))
    f_inv = PolynomialMap.parse(["x1 + x2^3", "x2"], 2)
    p = pair_up(f)
    F_inv = lift_inverse(p, f_inv)
    assert F_inv.degree <= 3 * f_inv.degree
    assert certify_polynomial_inverse(p.F, F_inv)
    assert lower_inverse(p, F_inv) == f_inv


def test_compositional_inverse_examples(druz):
    assert series_compositional_inverse(TermSeries.identity(2, 5, SYMBOLIC)) == TermSeries.identity(2, 5, SYMBOLIC)
    one = LambdaRational(1, ONE - LAM(2))
    s = TermSeries.from_map(PolynomialMap(1, [Polynomial(1, [((1,), 1), ((3,), one)])]), 3, SYMBOLIC)
    t = series_compositional_inverse(s, 3)
    assert coeff1(t, 3) == -one
    k = TermSeries.from_map(druz.k, 7, SYMBOLIC)
    assert series_compositional_inverse(k, 7).as_map() == druz.k_inv.truncate(7)


def test_verify_conjugation_examples(druz):
    s = preconjugation_terms(cube1(), SYMBOLIC, 9)
    assert verify_conjugation(cube1(), s, SYMBOLIC, 9).is_zero()
    assert verify_conjugation(druz.f, druz.k, SYMBOLIC).is_zero()
    bad = verify_conjugation(cube1(), TermSeries.identity(1, 3, SYMBOLIC), SYMBOLIC, 3)
    assert not bad.is_zero() and bad.degree == 3


def test_specialize_matches_numeric(essen):
    sym = preconjugation_terms(essen.f, SYMBOLIC, 9)
    num = preconjugation_terms(essen.f, Fraction(3), 9)
    assert sym.specialize(3) == num
    assert verify_conjugation(essen.f, num, Fraction(3), 9).is_zero()


def test_majorant_examples(essen):
    m = majorant(cube1(), 2, terms=9)
    assert m.alpha == 1
    assert list(m.b) == [0, 1, 0, 1, 0, 3, 0, 12, 0, 55]
    assert m.radius_sq == Fraction(4, 27)
    z = majorant(CubicHomogeneousMap.identity(2), 2)
    assert z.alpha == 0 and z.radius_sq == float("inf")
    with pytest.raises(SeriesError):
        majorant(cube1(), -1)
    m = majorant(essen.f, 2, terms=9)
    psi = preconjugation_terms(essen.f, Fraction(2), 9)
    for d in range(10):
        assert coefficient_norm(psi.term(d)) <= m.b[d]


def test_majorant_radius_is_critical_value():
    # u - alpha u^3 has its critical point at u = 1/sqrt(3 alpha); R is the value there
    m = majorant(cube1(), 3)
    alpha = float(m.alpha)
    u = (3 * alpha) ** -0.5
    assert m.radius == pytest.approx(u - alpha * u ** 3)


# -- properties --------------------------------------------------------------


def _gamma3(f):
    g = f.trilinear
    h = g.diagonal()
    return g.apply(h, h, PolynomialMap.identity(f.dim))


@settings(max_examples=20)
@given(st.integers(0, 10_000), st.integers(1, 3), st.integers(1, 3))
def test_scalings_against_formal_inverse(seed, n, terms):
    f = random_cubic_map(random.Random(seed), n, terms)
    psi = preconjugation_terms(f, SYMBOLIC, 7)
    phi = formal_inverse_terms(f, 7)
    lift = lambda m: m.map_coefficients(lambda c: LambdaRational(c))
    assert psi.term(3) == lift(phi.term(3)).scale(LambdaRational(1, qpoch(1)))
    assert psi.term(5) == lift(phi.term(5)).scale(LambdaRational(1, qpoch(2)))
    corr = lift(phi.term(7)) + lift(_gamma3(f)).scale(LambdaRational(LAM(2, 3)))
    assert psi.term(7) == corr.scale(LambdaRational(1, qpoch(3)))
    assert psi.odd_only()


@settings(max_examples=15)
@given(st.integers(0, 10_000), st.sampled_from([Fraction(2), Fraction(-1, 2), Fraction(5, 3)]))
def test_residual_vanishes_and_specializes(seed, v):
    f = random_cubic_map(random.Random(seed), 2, 3)
    sym = preconjugation_terms(f, SYMBOLIC, 7)
    num = preconjugation_terms(f, v, 7)
    assert sym.specialize(v) == num
    assert verify_conjugation(f, sym, SYMBOLIC, 7).is_zero()
    assert verify_conjugation(f, num, v, 7).is_zero()


@settings(max_examples=10)
@given(st.integers(0, 10_000))
def test_formal_inverse_inverts_to_working_degree(seed):
    f = random_cubic_map(random.Random(seed), 3, 3)
    phi = formal_inverse_terms(f, 9)
    assert truncation_certified(f.full_map(), phi.as_map(), 9)


@settings(max_examples=10)
@given(st.integers(0, 10_000))
def test_majorant_dominates(seed):
    f = random_cubic_map(random.Random(seed), 2, 3)
    v = Fraction(3, 2)
    m = majorant(f, v, terms=9)
    psi = preconjugation_terms(f, v, 9)
    assert all(coefficient_norm(psi.term(d)) <= m.b[d] for d in range(10))
