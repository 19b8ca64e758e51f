"""Truncated power series: formal inverses, pre-conjugations and their transfers.

A pre-conjugation of ``f(x) = x - g(x,x,x)`` for a multiplier lambda is the
normalized series ``k = sum_m Psi_m`` solving ``lambda f(k(x)) = k(lambda x)``.
Comparing homogeneous parts gives

    Psi_0 = 0,  Psi_1 = id,
    Psi_m = 1/(1 - lambda^(m-1)) * sum_{p+q+r=m} g(Psi_p, Psi_q, Psi_r),

and with lambda = 0 the same recursion produces the local inverse of f.
Only odd terms survive.

For symbolic lambda the recursion is run over Q[lambda] rather than Q(lambda).
Write ``Psi_m = N_m / d_m`` with ``d_m = prod_{k=1}^{(m-1)/2} (1 - lambda^(2k))``.
Then

    N_m = sum g(N_p, N_q, N_r) * W(a, b, c),   a = (p-1)/2, ...

where W is the q-multinomial coefficient in ``q = lambda^2``.  It is a
polynomial, so lambda can ride along as one more polynomial variable and
rational functions only appear when the result is packaged.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Sequence, Union

from .cubicmaps import CubicHomogeneousMap, CubicLinearMap, TrilinearForm
from .linalg import RationalMatrix, kernel_basis
from .polyring import Polynomial, PolynomialMap, hadamard_cube
from .scalars import ExcludedLambdaError, LambdaPoly, LambdaRational, format_rational, lambda_eval, parse_rational

__all__ = [
    "SYMBOLIC",
    "ZERO",
    "MajorantParams",
    "SeriesError",
    "TermSeries",
    "certify_lifted_inverse",
    "certify_lifted_series_inverse",
    "certify_polynomial_inverse",
    "coefficient_norm",
    "formal_inverse_terms",
    "kernel_shift_holds",
    "pairing_identities_hold",
    "lift_conjugation",
    "lift_conjugation_inverse",
    "lift_inverse",
    "lower_conjugation",
    "lower_inverse",
    "majorant",
    "parse_lambda_mode",
    "preconjugation_terms",
    "series_compositional_inverse",
    "truncation_certified",
    "verify_conjugation",
]

SYMBOLIC = "symbolic"
ZERO = "zero"

LambdaMode = Union[str, Fraction]


class SeriesError(ValueError):
    pass


def parse_lambda_mode(value) -> LambdaMode:
    """'symbolic', 'zero', or a rational number (as text, int or Fraction)."""
    if value in (SYMBOLIC, ZERO):
        return value
    try:
        return parse_rational(value)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise ValueError(f"lambda must be 'symbolic', 'zero' or a rational, got {value!r}") from exc


def format_lambda_mode(mode: LambdaMode) -> str:
    return mode if isinstance(mode, str) else format_rational(mode)


def _lambda_scalar(mode: LambdaMode):
    """lambda as a ring element: LambdaRational, or a Fraction."""
    if mode == SYMBOLIC:
        return LambdaRational(LambdaPoly.monomial(1))
    if mode == ZERO:
        return Fraction(0)
    return Fraction(mode)


@dataclass(frozen=True)
class TermSeries:
    """Homogeneous terms ``terms[m]`` of a series C^dim -> C^dim, m = 0..max_degree."""

    dim: int
    max_degree: int
    terms: tuple
    lambda_mode: LambdaMode = ZERO

    def __post_init__(self):
        if len(self.terms) != self.max_degree + 1:
            raise ValueError("need exactly one term per degree 0..max_degree")

    @classmethod
    def from_map(cls, m: PolynomialMap, max_degree: int, lambda_mode: LambdaMode = ZERO) -> TermSeries:
        return cls(m.source_dim, max_degree, tuple(m.homogeneous_part(d) for d in range(max_degree + 1)), lambda_mode)

    @classmethod
    def identity(cls, dim: int, max_degree: int, lambda_mode: LambdaMode = ZERO) -> TermSeries:
        return cls.from_map(PolynomialMap.identity(dim), max_degree, lambda_mode)

    def term(self, m: int) -> PolynomialMap:
        return self.terms[m]

    def as_map(self) -> PolynomialMap:
        total = PolynomialMap.zero(self.dim, self.dim)
        for t in self.terms:
            total = total + t
        return total

    def truncated(self, max_degree: int) -> TermSeries:
        if max_degree > self.max_degree:
            raise ValueError("cannot extend a series by truncation")
        return TermSeries(self.dim, max_degree, self.terms[: max_degree + 1], self.lambda_mode)

    def specialize(self, value) -> TermSeries:
        """Evaluate every Q(lambda) coefficient at the rational ``value``."""
        v = Fraction(value)
        terms = tuple(t.map_coefficients(lambda c: lambda_eval(c, v)) for t in self.terms)
        return TermSeries(self.dim, self.max_degree, terms, v)

    def is_normalized(self) -> bool:
        return self.terms[0].is_zero() and (self.max_degree < 1 or self.terms[1] == PolynomialMap.identity(self.dim))

    def odd_only(self) -> bool:
        return all(self.terms[m].is_zero() for m in range(0, self.max_degree + 1, 2))

    @property
    def degree(self):
        return self.as_map().degree

    def __eq__(self, other):
        if not isinstance(other, TermSeries):
            return NotImplemented
        return self.dim == other.dim and self.max_degree == other.max_degree and self.terms == other.terms

    def __hash__(self):
        return hash((self.dim, self.max_degree, self.terms))


def _form_of(g) -> TrilinearForm:
    if isinstance(g, TrilinearForm):
        return g
    if isinstance(g, (CubicHomogeneousMap, CubicLinearMap)):
        return g.trilinear
    raise TypeError(f"expected a trilinear form or cubic map, got {type(g).__name__}")


def _odd_triples(m: int):
    """Sorted triples p <= q <= r of odd positive integers summing to m, with their permutation count."""
    out = []
    for p in range(1, m, 2):
        for q in range(p, m - p, 2):
            r = m - p - q
            if r >= q:
                out.append(((p, q, r), len(set(permutations((p, q, r))))))
    return out


def preconjugation_terms(g, lambda_mode: LambdaMode, D: int) -> TermSeries:
    """Homogeneous terms Psi_0..Psi_D of the pre-conjugation of x - g(x,x,x)."""
    if D < 1:
        raise ValueError("max degree must be at least 1")
    form = _form_of(g)
    if lambda_mode == SYMBOLIC:
        return _symbolic_terms(form, D)
    if lambda_mode == ZERO:
        return _numeric_terms(form, Fraction(0), D, ZERO)
    v = Fraction(lambda_mode)
    if v == 0:
        raise SeriesError("lambda = 0 is the formal inverse; use formal_inverse_terms")
    return _numeric_terms(form, v, D, v)


def formal_inverse_terms(g, D: int) -> TermSeries:
    """Terms of the local inverse of x - g(x,x,x) up to degree D."""
    return preconjugation_terms(g, ZERO, D)


def _numeric_terms(form: TrilinearForm, v: Fraction, D: int, mode) -> TermSeries:
    n = form.dim_in
    terms = [PolynomialMap.zero(n, n), PolynomialMap.identity(n)]
    cache = {}
    for m in range(2, D + 1):
        if m % 2 == 0:
            terms.append(PolynomialMap.zero(n, n))
            continue
        denom = 1 - v ** (m - 1)
        if denom == 0:
            raise ExcludedLambdaError(f"lambda^{m - 1} = 1, so the degree-{m} term is undefined")
        acc = PolynomialMap.zero(n, n)
        for (p, q, r), mult in _odd_triples(m):
            key = (p, q, r)
            if key not in cache:
                cache[key] = form.apply(terms[p], terms[q], terms[r])
            acc = acc + cache[key].scale(mult)
        terms.append(acc.scale(1 / denom))
    return TermSeries(n, D, tuple(terms[: D + 1]), mode)


def _qpoch(k: int) -> LambdaPoly:
    """(q; q)_k with q = lambda^2."""
    out = LambdaPoly.constant(1)
    for i in range(1, k + 1):
        out = out * (LambdaPoly.constant(1) - LambdaPoly.monomial(2 * i))
    return out


def _q_multinomial(a: int, b: int, c: int) -> LambdaPoly:
    return _qpoch(a + b + c) // (_qpoch(a) * _qpoch(b) * _qpoch(c))


def _symbolic_terms(form: TrilinearForm, D: int) -> TermSeries:
    n = form.dim_in
    ext = n + 1  # lambda is the last variable
    numer = [PolynomialMap.zero(ext, n), PolynomialMap(ext, [Polynomial.variable(ext, i) for i in range(n)])]
    for m in range(2, D + 1):
        if m % 2 == 0:
            numer.append(PolynomialMap.zero(ext, n))
            continue
        acc = PolynomialMap.zero(ext, n)
        for (p, q, r), mult in _odd_triples(m):
            w = _q_multinomial((p - 1) // 2, (q - 1) // 2, (r - 1) // 2).scale(mult)
            wpoly = Polynomial(ext, [((0,) * n + (e,), c) for e, c in enumerate(w.coeffs) if c])
            val = form.apply(numer[p], numer[q], numer[r])
            acc = acc + PolynomialMap(ext, [c.mul(wpoly) for c in val])
        numer.append(acc)
    terms = []
    for m in range(D + 1):
        den = _qpoch((m - 1) // 2) if m % 2 else LambdaPoly.constant(1)
        terms.append(_pack_lambda(numer[m], n, den))
    return TermSeries(n, D, tuple(terms), SYMBOLIC)


def _pack_lambda(m: PolynomialMap, n: int, den: LambdaPoly) -> PolynomialMap:
    """Read the last variable as lambda and divide by ``den``."""
    comps = []
    for p in m:
        grouped: dict = {}
        for exps, c in p.items():
            x, e = exps[:n], exps[n]
            coeffs = grouped.setdefault(x, {})
            coeffs[e] = c
        items = []
        for x, coeffs in grouped.items():
            poly = LambdaPoly([coeffs.get(i, 0) for i in range(max(coeffs) + 1)])
            items.append((x, LambdaRational(poly, den)))
        comps.append(Polynomial(n, items))
    return PolynomialMap(n, comps)


# -- compositions and certificates ----------------------------------------


def _full_map(f) -> PolynomialMap:
    if isinstance(f, (CubicHomogeneousMap, CubicLinearMap)):
        return f.full_map()
    if isinstance(f, PolynomialMap):
        return f
    raise TypeError(f"expected a polynomial map, got {type(f).__name__}")


def _compose_cubic(f, p: PolynomialMap, cap=None) -> PolynomialMap:
    """f(p(x)) for f = x - g(x,x,x) without expanding f through Horner."""
    if isinstance(f, CubicLinearMap):
        cube = hadamard_cube(p.left_multiply(f.a), cap)
        out = p - cube
    elif isinstance(f, CubicHomogeneousMap):
        out = p - f.trilinear.apply(p, p, p, cap)
    else:
        out = f.compose(p, cap)
    return out if cap is None else out.truncate(cap)


def certify_polynomial_inverse(f, p: PolynomialMap, pairing=None) -> bool:
    """True iff f(p(x)) = x and p(f(x)) = x as exact polynomial identities.

    When ``f`` is the cubic-linear side of ``pairing`` the check runs on the
    small side instead (see :func:`certify_lifted_inverse`); both routes
    decide the same question.
    """
    if pairing is not None and isinstance(f, CubicLinearMap) and f.a == pairing.A:
        return certify_lifted_inverse(pairing, p)
    full = _full_map(f)
    if full.source_dim != p.source_dim or full.target_dim != p.target_dim:
        return False
    ident = PolynomialMap.identity(full.source_dim)
    if _compose_cubic(f, p) != ident:
        return False
    return p.compose(full) == ident


def pairing_identities_hold(pairing) -> bool:
    """BC = I, A = ACB and f = B F C: the facts the small-side reductions rely on."""
    A, B, C = pairing.A, pairing.B, pairing.C
    if not (B @ C).is_identity() or A @ C @ B != A:
        return False
    return pairing.f.cubic_part == hadamard_cube(PolynomialMap.linear(A @ C)).left_multiply(B)


def certify_lifted_inverse(pairing, P: PolynomialMap) -> bool:
    """Decide F(P(Y)) = Y and P(F(X)) = X using polynomials in z = BY only.

    Write P = id + R.  The true inverse has R = T(BY) with
    T(z) = (AC f^{-1}(z))^{*3}, so R must factor through B, and then with
    A = ACB and B F(X) = f(BX):

        F(P(Y)) - Y = T(z) - (ACz + A T(z))^{*3},     z = BY
        P(F(X)) - X = T(f(z)) - (ACz)^{*3},           z = BX

    Both are maps in n variables.  B is onto, so they vanish iff the
    identities hold on C^N.
    """
    N = pairing.N
    if P.source_dim != N or P.target_dim != N:
        return False
    if not pairing_identities_hold(pairing):
        raise SeriesError("pairing identities fail; the reduced certificate does not apply")
    R = P - PolynomialMap.identity(N)
    T = R.compose(PolynomialMap.linear(pairing.C))
    if T.compose(PolynomialMap.linear(pairing.B)) != R:
        return False
    ac = PolynomialMap.linear(pairing.A @ pairing.C)
    if not (T - hadamard_cube(ac + T.left_multiply(pairing.A))).is_zero():
        return False
    return (T.compose(pairing.f.full_map()) - hadamard_cube(ac)).is_zero()


def lift_inverse(pairing, f_inv: PolynomialMap, certify: bool = True) -> PolynomialMap:
    """F^{-1}(Y) = Y + (A C f^{-1}(B Y))^{*3}."""
    if certify and not certify_polynomial_inverse(pairing.f, f_inv):
        raise SeriesError("f_inv is not a certified inverse of f")
    N = pairing.N
    u = f_inv.compose(PolynomialMap.linear(pairing.B))
    return PolynomialMap.identity(N) + hadamard_cube(u.left_multiply(pairing.A @ pairing.C))


def lower_inverse(pairing, F_inv: PolynomialMap, certify: bool = True) -> PolynomialMap:
    """f^{-1}(y) = B F^{-1}(C y)."""
    if certify and not certify_lifted_inverse(pairing, F_inv):
        raise SeriesError("F_inv is not a certified inverse of F")
    return F_inv.compose(PolynomialMap.linear(pairing.C)).left_multiply(pairing.B)


def lower_conjugation(pairing, K: TermSeries) -> TermSeries:
    """k = B K C, term by term."""
    if K.dim != pairing.N:
        raise ValueError(f"series lives on C^{K.dim}, pairing has N = {pairing.N}")
    c = PolynomialMap.linear(pairing.C)
    terms = tuple(t.compose(c).left_multiply(pairing.B) for t in K.terms)
    return TermSeries(pairing.n, K.max_degree, terms, K.lambda_mode)


def lift_conjugation(pairing, k: TermSeries, D: int | None = None) -> TermSeries:
    """K = C k(B X) + Q, with Q solved degree by degree.

    Let ``q_rhs_m`` be the degree-m part of ``(I - CB) F(C k(B X))``.  Then
    ``Q_1 = (I - CB) X`` and ``Q_m = q_rhs_m / (lambda^(m-1) - 1)``.
    """
    D = k.max_degree if D is None else D
    if k.dim != pairing.n:
        raise ValueError(f"series lives on C^{k.dim}, pairing has n = {pairing.n}")
    if D > k.max_degree:
        raise ValueError("k must be supplied at least to degree D")
    N = pairing.N
    lam = _lambda_scalar(k.lambda_mode)
    b = PolynomialMap.linear(pairing.B)
    lifted = k.truncated(D).as_map().compose(b).left_multiply(pairing.C)
    proj = RationalMatrix.identity(N) - pairing.C @ pairing.B
    q_rhs = _compose_cubic(pairing.F, lifted, D).left_multiply(proj)
    terms = []
    for m in range(D + 1):
        base = lifted.homogeneous_part(m)
        if m == 0:
            q = PolynomialMap.zero(N, N)
        elif m == 1:
            q = PolynomialMap.linear(proj)
        else:
            denom = lam ** (m - 1) - 1
            if denom == 0:
                raise ExcludedLambdaError(f"lambda^{m - 1} = 1, so the degree-{m} term is undefined")
            q = q_rhs.homogeneous_part(m).scale(1 / denom) if isinstance(denom, Fraction) else \
                q_rhs.homogeneous_part(m).map_coefficients(lambda c, d=denom: c / d)
        terms.append(base + q)
    return TermSeries(N, D, tuple(terms), k.lambda_mode)


def _compose_series(outer: PolynomialMap, inner: PolynomialMap, D: int) -> PolynomialMap:
    return outer.compose(inner, D).truncate(D)


def series_compositional_inverse(s: TermSeries, D: int | None = None) -> TermSeries:
    """t with s(t(x)) = x up to degree D, solved term by term."""
    D = s.max_degree if D is None else D
    n = s.dim
    if s.max_degree < 1 or s.terms[1] != PolynomialMap.identity(n) or not s.terms[0].is_zero():
        raise SeriesError("series must be normalized (no constant term, identity linear term)")
    higher = PolynomialMap.zero(n, n)
    for m in range(2, min(D, s.max_degree) + 1):
        higher = higher + s.terms[m]
    t = PolynomialMap.identity(n)
    terms = [PolynomialMap.zero(n, n), PolynomialMap.identity(n)]
    for m in range(2, D + 1):
        # degree-m part of s(t) is t_m + [s_{>=2}(t_{<m})]_m
        tm = -higher.compose(t, m).homogeneous_part(m)
        terms.append(tm)
        t = t + tm
    return TermSeries(n, D, tuple(terms[: D + 1]), s.lambda_mode)


def truncation_certified(outer, inner: PolynomialMap, D: int) -> bool:
    """outer(inner(x)) agrees with x up to degree D."""
    n = inner.source_dim
    if isinstance(outer, (CubicHomogeneousMap, CubicLinearMap)):
        comp = _compose_cubic(outer, inner, D)
    else:
        comp = _compose_series(outer, inner, D)
    return comp == PolynomialMap.identity(n)


def kernel_shift_holds(pairing, K: TermSeries) -> bool:
    """K(X + X0) = K(X) + X0 for X0 in ker A, termwise up to K's max degree.

    Equivalent to: the linear term is the identity and every higher term has
    zero derivative along each kernel-basis vector.
    """
    if K.max_degree >= 1 and K.terms[1] != PolynomialMap.identity(K.dim):
        return False
    if not K.terms[0].is_zero():
        return False
    basis = kernel_basis(pairing.A).columns()
    for m in range(2, K.max_degree + 1):
        for p in K.terms[m]:
            for v in basis:
                d = Polynomial.zero(K.dim)
                for i, c in enumerate(v):
                    if c:
                        d = d + p.derivative(i).scale(c)
                if not d.is_zero():
                    return False
    return True


def _small_side_of_inverse(pairing, K: TermSeries, kinv: PolynomialMap, D: int):
    """(K(C z), E) with K^{-1}(Y) = Y + E(BY) and E(z) = C k^{-1}(z) - K(C k^{-1}(z))."""
    kc = K.as_map().compose(PolynomialMap.linear(pairing.C))
    ck = kinv.left_multiply(pairing.C)
    return kc, (ck - kc.compose(kinv, D)).truncate(D)


def certify_lifted_series_inverse(pairing, K: TermSeries, K_inv: TermSeries) -> bool:
    """truncate(K(K^{-1}(Y)), D) = Y, checked on the small side when possible.

    If K has the kernel-shift property and K^{-1} - id = E(BY), then with
    z = BY and w = z + B E(z)

        K(K^{-1}(Y)) = K(C w) + (I - CB)(Y + E(z)),

    so the identity reduces to K(C w) + (I - CB) E(z) = C z in n variables.
    Without the kernel-shift property the full composition is used.
    """
    D = K.max_degree
    N, n = pairing.N, pairing.n
    inv = K_inv.as_map().truncate(D)
    if not pairing_identities_hold(pairing) or not kernel_shift_holds(pairing, K):
        return truncation_certified(K.as_map(), inv, D)
    E = (inv - PolynomialMap.identity(N)).compose(PolynomialMap.linear(pairing.C))
    if E.compose(PolynomialMap.linear(pairing.B)) != inv - PolynomialMap.identity(N):
        return truncation_certified(K.as_map(), inv, D)
    kc = K.as_map().compose(PolynomialMap.linear(pairing.C))
    w = PolynomialMap.identity(n) + E.left_multiply(pairing.B)
    proj = RationalMatrix.identity(N) - pairing.C @ pairing.B
    lhs = (kc.compose(w, D) + E.left_multiply(proj)).truncate(D)
    return lhs == PolynomialMap.linear(pairing.C)


def lift_conjugation_inverse(pairing, k_inv, K: TermSeries, certify: bool = True) -> TermSeries:
    """K^{-1}(Y) = Y - K(C k^{-1}(B Y)) + C k^{-1}(B Y), truncated at K's max degree."""
    D = K.max_degree
    N = pairing.N
    kinv_map = (k_inv.as_map() if isinstance(k_inv, TermSeries) else k_inv).truncate(D)
    if certify:
        k_map = lower_conjugation(pairing, K).as_map()
        if not truncation_certified(k_map, kinv_map, D):
            raise SeriesError("k_inv does not invert k up to the working degree")
    _, E = _small_side_of_inverse(pairing, K, kinv_map, D)
    out = PolynomialMap.identity(N) + E.compose(PolynomialMap.linear(pairing.B))
    result = TermSeries.from_map(out, D, K.lambda_mode)
    if certify and not certify_lifted_series_inverse(pairing, K, result):
        raise SeriesError("lifted inverse fails the truncated composition check")
    return result


def verify_conjugation(f, s: TermSeries | PolynomialMap, lambda_mode: LambdaMode, D: int | None = None) -> PolynomialMap:
    """Residual lambda f(s(x)) - s(lambda x), truncated at D (None keeps every degree)."""
    m = s.as_map() if isinstance(s, TermSeries) else s
    lam = _lambda_scalar(lambda_mode)
    lhs = _compose_cubic(f, m, D)
    lhs = lhs.map_coefficients(lambda c: lam * c)
    shifted = PolynomialMap(m.source_dim, [
        Polynomial(m.source_dim, [(e, c * lam ** sum(e)) for e, c in p.items()]) for p in m
    ])
    res = lhs - shifted
    return res if D is None else res.truncate(D)


# -- majorant ---------------------------------------------------------------


@dataclass(frozen=True)
class MajorantParams:
    alpha: Fraction
    b: tuple
    radius_sq: Fraction | float

    @property
    def radius(self) -> float:
        return math.sqrt(self.radius_sq)


def coefficient_norm(m: PolynomialMap) -> Fraction:
    """Max over components of the sum of absolute coefficient values."""
    return max((sum((abs(c) for _, c in p.items()), Fraction(0)) for p in m), default=Fraction(0))


def majorant(g, lambda_value, terms: int = 21) -> MajorantParams:
    """Dominating scalar series b_m = alpha * sum_{p+q+r=m} b_p b_q b_r.

    ``alpha`` uses the coefficient-sum bound for the norm of g, so it
    over-estimates and the reported radius errs on the small side.
    """
    v = Fraction(lambda_value)
    if abs(v) == 1:
        raise SeriesError("|lambda| = 1 gives no majorant")
    alpha = _form_of(g).norm_bound() / abs(1 - abs(v))
    b = [Fraction(0), Fraction(1)]
    for m in range(2, terms + 1):
        acc = Fraction(0)
        for p in range(1, m - 1):
            for q in range(1, m - p):
                acc += b[p] * b[q] * b[m - p - q]
        b.append(alpha * acc)
    radius_sq = math.inf if alpha == 0 else Fraction(4) / (27 * alpha)
    return MajorantParams(alpha, tuple(b), radius_sq)
