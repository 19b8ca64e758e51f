"""Pairings between cubic-homogeneous and cubic-linear maps.

A pairing is (n, N, A, B, C) with N > n, B C = I_n, ker A = ker B and
f(x) = B F(C x), where F(X) = X - (AX)^{*3}.  ``pair_up`` builds one from a
cubic-homogeneous f by writing every cubic monomial as a combination of
cubes of linear forms; ``pair_down`` goes the other way.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .cubicmaps import (
    CubicHomogeneousMap,
    CubicLinearMap,
    HadamardTrilinear,
    kernel_shift_check,
)
from .linalg import (
    RationalMatrix,
    SingularMatrixError,
    hconcat,
    kernel_basis,
    rref,
    right_inverse,
    solve_inverse,
    vconcat,
)
from .polyring import Polynomial, PolynomialMap, hadamard_cube, jacobian, poly_det, scalar_det

__all__ = [
    "CheckResult",
    "CubeDecomposition",
    "Pairing",
    "PairingError",
    "build_A",
    "check_pairing",
    "cube_decompose",
    "jacobian_transfer",
    "jacobian_transfer_exact",
    "pad_full_rank",
    "pair_down",
    "pair_down_with",
    "pair_up",
]


class PairingError(ValueError):
    """A pairing condition fails; ``clause`` names it."""

    def __init__(self, clause: str, detail: str = ""):
        self.clause = clause
        super().__init__(f"{clause}: {detail}" if detail else clause)


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    witness: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"[{status}] {self.name}" + (f"  (witness: {self.witness})" if self.witness and not self.ok else "")


@dataclass(frozen=True)
class CubeDecomposition:
    """Cubic part written as b0 (d0 x)^{*3}; b0 is n x m, d0 is m x n."""

    b0: RationalMatrix
    d0: RationalMatrix

    @property
    def n(self) -> int:
        return self.b0.rows

    def cubic_part(self) -> PolynomialMap:
        """Rebuild b0 (d0 x)^{*3} as a polynomial map."""
        n = self.n
        if self.d0.rows == 0:
            return PolynomialMap.zero(n, n)
        cubes = hadamard_cube(PolynomialMap.linear(self.d0))
        return cubes.left_multiply(self.b0)


@dataclass(frozen=True)
class Pairing:
    A: RationalMatrix
    B: RationalMatrix
    C: RationalMatrix
    f: CubicHomogeneousMap
    D: RationalMatrix | None = None

    @property
    def n(self) -> int:
        return self.B.rows

    @property
    def N(self) -> int:
        return self.A.rows

    @property
    def F(self) -> CubicLinearMap:
        return CubicLinearMap(self.A)

    def checks(self, **kw) -> list[CheckResult]:
        return check_pairing(self, **kw)

    def is_valid(self) -> bool:
        return all(c.ok for c in self.checks(jacobian=False))


# -- construction ----------------------------------------------------------


def cube_decompose(f: CubicHomogeneousMap) -> CubeDecomposition:
    """Write the cubic part of f as b0 (d0 x)^{*3} via

        a b^2 = ((a+b)^3 + (a-b)^3 - 2 a^3) / 6
        a b c = ((a+b+c)^3 + (a-b-c)^3 - (a+b-c)^3 - (a-b+c)^3) / 24

    Rows follow the components of f and, inside each, the canonical monomial
    order.  Repeated linear forms are not merged.
    """
    n = f.dim
    rows: list[list[Fraction]] = []
    weights: list[tuple[int, Fraction]] = []

    def form(*pairs):
        v = [Fraction(0)] * n
        for i, s in pairs:
            v[i] += s
        return v

    for l, comp in enumerate(f.cubic_part.components):
        for exps, c in comp.items():
            support = [i for i, e in enumerate(exps) if e]
            if len(support) == 1:
                rows.append(form((support[0], 1)))
                weights.append((l, c))
            elif len(support) == 2:
                a = next(i for i in support if exps[i] == 1)
                b = next(i for i in support if exps[i] == 2)
                for r, w in (
                    (form((a, 1), (b, 1)), c / 6),
                    (form((a, 1), (b, -1)), c / 6),
                    (form((a, 1)), -c / 3),
                ):
                    rows.append(r)
                    weights.append((l, w))
            else:
                a, b, cc = support
                for r, w in (
                    (form((a, 1), (b, 1), (cc, 1)), c / 24),
                    (form((a, 1), (b, -1), (cc, -1)), c / 24),
                    (form((a, 1), (b, 1), (cc, -1)), -c / 24),
                    (form((a, 1), (b, -1), (cc, 1)), -c / 24),
                ):
                    rows.append(r)
                    weights.append((l, w))
    m = len(rows)
    b0 = [[Fraction(0)] * m for _ in range(n)]
    for col, (l, w) in enumerate(weights):
        b0[l][col] = w
    return CubeDecomposition(RationalMatrix(b0, cols=m), RationalMatrix(rows, cols=n))


def pad_full_rank(d: CubeDecomposition) -> CubeDecomposition:
    """Pad so that B has rank n, D has rank n and N > n.

    Missing directions of B get identity columns (with null rows in D),
    missing directions of D get identity rows (with null columns in B), and
    finally null column/row pairs until N > n.  Padding is greedy and minimal.
    """
    n = d.n
    b = [list(r) for r in d.b0.entries]
    dd = [list(r) for r in d.d0.entries]

    def unit(i):
        return [Fraction(1 if k == i else 0) for k in range(n)]

    def cur_b():
        return RationalMatrix(b, cols=len(b[0]) if b else 0) if n else RationalMatrix.zeros(0, len(dd))

    # full row rank for B
    for i in range(n):
        if cur_b().rank() == n:
            break
        trial = [row + [1 if k == i else 0] for k, row in enumerate(b)]
        if RationalMatrix(trial, cols=len(trial[0])).rank() > cur_b().rank():
            b = trial
            dd.append([Fraction(0)] * n)
    # full column rank for D
    for i in range(n):
        cur = RationalMatrix(dd, cols=n).rank() if dd else 0
        if cur == n:
            break
        trial = dd + [unit(i)]
        if RationalMatrix(trial, cols=n).rank() > cur:
            dd = trial
            for row in b:
                row.append(Fraction(0))
    while len(dd) <= n:
        dd.append([Fraction(0)] * n)
        for row in b:
            row.append(Fraction(0))
    m = len(dd)
    return CubeDecomposition(RationalMatrix(b, cols=m), RationalMatrix(dd, cols=n))


def build_A(b: RationalMatrix, d: RationalMatrix, c: RationalMatrix) -> RationalMatrix:
    """A = (D | 0)(C | M)^{-1} with M a kernel basis of B, so AC = D and AM = 0."""
    m = kernel_basis(b)
    cm = hconcat(c, m)
    try:
        inv = solve_inverse(cm)
    except SingularMatrixError as exc:
        raise PairingError("(C|M) invertible", "right inverse and kernel basis are not complementary") from exc
    d0 = hconcat(d, RationalMatrix.zeros(d.rows, m.cols))
    return d0 @ inv


def pair_up(f: CubicHomogeneousMap, check: bool = True) -> Pairing:
    """Pair a cubic-homogeneous f to a cubic-linear F on a larger space."""
    dec = pad_full_rank(cube_decompose(f))
    b, d = dec.b0, dec.d0
    c = right_inverse(b)
    a = build_A(b, d, c)
    p = Pairing(a, b, c, f, D=d)
    if check:
        for res in check_pairing(p, jacobian=False, kernel_shift=False):
            if not res.ok:
                raise PairingError(res.name, res.witness)
    return p


def descend(F: CubicLinearMap, b: RationalMatrix, c: RationalMatrix) -> CubicHomogeneousMap:
    """f(x) = B F(C x) = x - B (A C x)^{*3}."""
    ac = F.a @ c
    cubes = hadamard_cube(PolynomialMap.linear(ac))
    return CubicHomogeneousMap(cubes.left_multiply(b))


def pair_down(F: CubicLinearMap) -> Pairing:
    """Pair a cubic-linear F (A singular, nonzero) with B = nonzero rows of rref(A)."""
    red, pivots = rref(F.a)
    n = len(pivots)
    if n == F.dim:
        raise PairingError("A singular", "A is invertible; the pairing degenerates")
    if n == 0:
        raise PairingError("rank A >= 1", "A = 0 gives n = 0")
    b = red.submatrix(rows=range(n))
    c = right_inverse(b)
    return Pairing(F.a, b, c, descend(F, b, c))


def pair_down_with(F: CubicLinearMap, b: RationalMatrix, c: RationalMatrix) -> Pairing:
    """Pair F with supplied B and C after checking ker B = ker A and B C = I."""
    n, N = b.rows, F.dim
    if b.cols != N or c.rows != N or c.cols != n:
        raise PairingError("dimensions", f"B is {b.rows}x{b.cols}, C is {c.rows}x{c.cols}, N = {N}")
    if not N > n:
        raise PairingError("N > n", f"N = {N}, n = {n}")
    res = _check_bc(b, c)
    if not res.ok:
        raise PairingError(res.name, res.witness)
    res = _check_kernels(F.a, b)
    if not res.ok:
        raise PairingError(res.name, res.witness)
    return Pairing(F.a, b, c, descend(F, b, c))


# -- verification -----------------------------------------------------------


def _check_bc(b: RationalMatrix, c: RationalMatrix) -> CheckResult:
    name = "pairing: BC = I_n"
    if b.cols != c.rows:
        return CheckResult(name, False, "shape mismatch")
    bc = b @ c
    for j in range(bc.cols):
        for i in range(bc.rows):
            if bc[i, j] != (1 if i == j else 0):
                return CheckResult(name, False, f"column {j}: (BC)[{i},{j}] = {bc[i, j]}")
    if bc.rows != bc.cols:
        return CheckResult(name, False, "BC is not square")
    return CheckResult(name, True)


def _check_kernels(a: RationalMatrix, b: RationalMatrix) -> CheckResult:
    name = "pairing: ker A = ker B"
    ra, rb = a.rank(), b.rank()
    if not (ra == rb == b.rows):
        return CheckResult(name, False, f"rank A = {ra}, rank B = {rb}, rows of B = {b.rows}")
    m = kernel_basis(b)
    if m.cols and not (a @ m).is_zero():
        am = a @ m
        j = next(j for j in range(am.cols) if any(am.column(j)))
        return CheckResult(name, False, f"A * (kernel column {j} of B) != 0")
    return CheckResult(name, True)


def _poly_witness(diff: PolynomialMap) -> str:
    hit = diff.first_nonzero()
    if hit is None:
        return ""
    i, exps, c = hit
    return f"component {i}, monomial exponents {list(exps)}, coefficient {c}"


def check_pairing(p: Pairing, jacobian: bool = True, kernel_shift: bool = True, rng=None) -> list[CheckResult]:
    """Every pairing invariant as a list of pass/fail results with witnesses."""
    a, b, c = p.A, p.B, p.C
    n, N = b.rows, a.rows
    out = [CheckResult("pairing: N > n", N > n, f"N = {N}, n = {n}")]
    out.append(_check_bc(b, c))
    out.append(_check_kernels(a, b))
    if not out[1].ok or b.cols != N or c.rows != N:
        return out
    F = p.F
    f_full = p.f.full_map()
    F_full = F.full_map()
    descended = descend(F, b, c).full_map()
    out.append(CheckResult("pairing: f = B F C", descended == f_full, _poly_witness(descended - f_full)))
    # the descent square: f(BX) = B F(X)
    lhs = f_full.compose(PolynomialMap.linear(b))
    rhs = F_full.left_multiply(b)
    out.append(CheckResult("descent: f(BX) = B F(X)", lhs == rhs, _poly_witness(lhs - rhs)))
    # B (CB - I) = 0 follows from BC = I
    cb_i = (c @ b) - RationalMatrix.identity(N)
    prod = b @ cb_i
    out.append(CheckResult("projector: B(CB - I) = 0", prod.is_zero(), "" if prod.is_zero() else "nonzero entry"))
    if kernel_shift:
        rng = rng or random.Random(0)
        samples = [[Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(N)] for _ in range(2)]
        bad = None
        for j, col in enumerate(kernel_basis(a).columns()):
            if not kernel_shift_check(F, col, samples):
                bad = f"kernel column {j}"
                break
        out.append(CheckResult("kernel shift: F(X + X0) = F(X) + X0", bad is None, bad or ""))
    if jacobian:
        det_f, ok, witness = _jacobian_transfer(p, rng)
        out.append(CheckResult("jacobian transfer: det F'(X) = det f'(BX) at random points", ok, witness))
        exact = jacobian_transfer_exact(p)
        out.append(CheckResult("jacobian transfer: det F'(X) = det f'(BX) as polynomials", exact,
                               "" if exact else "reduced determinant differs"))
    return out


def _rand_point(rng, dim):
    return [Fraction(rng.randint(-20, 20), rng.randint(1, 7)) for _ in range(dim)]


def _jacobian_transfer(p: Pairing, rng=None, samples: int | None = None):
    rng = rng or random.Random(12345)
    # det f'(BX) has degree at most 2n, so 2n + 1 points separate it from det F'
    if samples is None:
        samples = max(10, 2 * p.n + 1)
    f_jac = jacobian(p.f.full_map())
    det_f = poly_det(f_jac)
    F_jac = jacobian(p.F.full_map())
    for _ in range(samples):
        X = _rand_point(rng, p.N)
        lhs = scalar_det([[e.evaluate(X) for e in row] for row in F_jac])
        rhs = det_f.evaluate(p.B.apply(X))
        if lhs != rhs:
            return det_f, False, f"X = {[str(v) for v in X]}: {lhs} != {rhs}"
    # and the small-side identity det f'(x) = det F'(Cx)
    for _ in range(3):
        x = _rand_point(rng, p.n)
        cx = p.C.apply(x)
        if scalar_det([[e.evaluate(cx) for e in row] for row in F_jac]) != det_f.evaluate(x):
            return det_f, False, f"x = {[str(v) for v in x]}: det f'(x) != det F'(Cx)"
    return det_f, True, ""


def jacobian_transfer_exact(p: Pairing) -> bool:
    """det F'(X) = det f'(BX) as a polynomial identity, via an n x n determinant.

    F'(X) = I - 3 diag((AX)^2) A, and A = ACB, so Sylvester's identity gives
    det F'(X) = det(I_n - 3 B diag((AX)^2) A C).
    """
    a, b, c = p.A, p.B, p.C
    if a @ c @ b != a:
        return False
    N, n = p.N, p.n
    squares = [q * q for q in PolynomialMap.linear(a)]
    ac = a @ c
    m = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = Polynomial.constant(N, 1 if i == j else 0)
            for l in range(N):
                w = b[i, l] * ac[l, j]
                if w:
                    acc = acc - squares[l].scale(3 * w)
            row.append(acc)
        m.append(row)
    det_f = PolynomialMap(n, [poly_det(jacobian(p.f.full_map()))])
    return poly_det(m) == det_f.compose(PolynomialMap.linear(b)).components[0]


def jacobian_transfer(p: Pairing, rng=None, samples: int | None = None) -> tuple[Polynomial, bool]:
    """Symbolic det f' and a check of det F'(X) = det f'(BX) at random rational points."""
    det_f, ok, _ = _jacobian_transfer(p, rng, samples)
    return det_f, ok
