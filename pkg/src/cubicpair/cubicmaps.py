"""Cubic-homogeneous maps x - g(x,x,x) and cubic-linear maps X - (AX)^{*3}.

Both carry a symmetric trilinear form.  For a cubic-homogeneous map it is
recovered from the cubic part by polarization; for a cubic-linear map it is
the closed form ``(AX)*(AY)*(AZ)``.  Trilinear forms evaluate on scalar
vectors and on polynomial maps alike, and take an optional degree cap so the
series recursions can stay truncated.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import permutations
from typing import Sequence

from .linalg import RationalMatrix, kernel_basis
from .polyring import Polynomial, PolynomialMap, hadamard_cube, jacobian, poly_det

__all__ = [
    "CubicHomogeneousMap",
    "CubicLinearMap",
    "HadamardTrilinear",
    "TrilinearForm",
    "eval_map",
    "jacobian_det_constant",
    "jacobian_determinant",
    "kernel_shift_check",
    "polarize",
]


class TrilinearForm:
    """Symmetric trilinear map given by its sparse tensor.

    ``tensor[l]`` maps sorted index triples ``(i, j, k)`` to
    ``g(e_i, e_j, e_k)_l``.
    """

    def __init__(self, dim_in: int, dim_out: int, tensor: Sequence[dict]):
        self.dim_in = dim_in
        self.dim_out = dim_out
        self.tensor = [dict(t) for t in tensor]
        # expand each sorted triple into its distinct orderings once
        self._ordered = [
            [(perm, c) for ijk, c in t.items() for perm in set(permutations(ijk))]
            for t in self.tensor
        ]

    def __call__(self, x, y, z, cap=None):
        return self.apply(x, y, z, cap)

    def apply(self, x, y, z, cap=None):
        """g(x, y, z) for scalar vectors or PolynomialMaps (then returns a PolynomialMap)."""
        if isinstance(x, PolynomialMap):
            return self._apply_maps(x, y, z, cap)
        out = []
        for terms in self._ordered:
            acc = Fraction(0)
            for (i, j, k), c in terms:
                acc += c * x[i] * y[j] * z[k]
            out.append(acc)
        return out

    def _apply_maps(self, x: PolynomialMap, y: PolynomialMap, z: PolynomialMap, cap):
        n = x.source_dim
        pair_cache = {}
        out = []
        for terms in self._ordered:
            acc = Polynomial.zero(n)
            for (i, j, k), c in terms:
                if x[i].is_zero() or y[j].is_zero() or z[k].is_zero():
                    continue
                xy = pair_cache.get((i, j))
                if xy is None:
                    xy = pair_cache[(i, j)] = x[i].mul(y[j], cap)
                acc = acc + xy.mul(z[k], cap).scale(c)
            out.append(acc)
        return PolynomialMap(n, out)

    def diagonal(self) -> PolynomialMap:
        """The cubic map h(x) = g(x, x, x)."""
        ident = PolynomialMap.identity(self.dim_in)
        return self.apply(ident, ident, ident)

    def norm_bound(self) -> Fraction:
        """Max over outputs of the sum of |coefficients| over all ordered index triples.

        An upper bound for the sup-norm of g on the unit polydisc.
        """
        best = Fraction(0)
        for terms in self._ordered:
            best = max(best, sum((abs(c) for _, c in terms), Fraction(0)))
        return best

    def is_zero(self) -> bool:
        return not any(self.tensor)


class HadamardTrilinear(TrilinearForm):
    """g(X, Y, Z) = L((MX) * (MY) * (MZ)), with L = identity when omitted.

    Covers ``G(X,Y,Z) = (AX)*(AY)*(AZ)`` and the paired form
    ``g(x,y,z) = B((ACx)*(ACy)*(ACz))``.
    """

    def __init__(self, inner: RationalMatrix, outer: RationalMatrix | None = None):
        self.inner = inner
        self.outer = outer
        dim_out = inner.rows if outer is None else outer.rows
        tensor = [dict() for _ in range(dim_out)]
        rows = inner.row_list()
        if outer is None:
            weights = [[(l, Fraction(1))] for l in range(inner.rows)]
        else:
            weights = [[(o, outer[o, l]) for o in range(outer.rows) if outer[o, l]] for l in range(inner.rows)]
        for l, row in enumerate(rows):
            support = [(i, a) for i, a in enumerate(row) if a]
            for o, w in weights[l]:
                t = tensor[o]
                for i, a in support:
                    for j, b in support:
                        for k, c in support:
                            if i <= j <= k:
                                key = (i, j, k)
                                t[key] = t.get(key, 0) + w * a * b * c
        tensor = [{k: v for k, v in t.items() if v} for t in tensor]
        super().__init__(inner.cols, dim_out, tensor)

    def apply(self, x, y, z, cap=None):
        if not isinstance(x, PolynomialMap):
            ax, ay, az = self.inner.apply(x), self.inner.apply(y), self.inner.apply(z)
            prod = [a * b * c for a, b, c in zip(ax, ay, az)]
            return prod if self.outer is None else self.outer.apply(prod)
        ax = x.left_multiply(self.inner)
        ay = ax if y is x else y.left_multiply(self.inner)
        az = ax if z is x else (ay if z is y else z.left_multiply(self.inner))
        prod = ax.hadamard(ay, cap).hadamard(az, cap)
        return prod if self.outer is None else prod.left_multiply(self.outer)

    def norm_bound(self) -> Fraction:
        if self.outer is not None:
            return super().norm_bound()
        return max((sum((abs(a) for a in r), Fraction(0)) ** 3 for r in self.inner.row_list()), default=Fraction(0))


def polarize(cubic_part: PolynomialMap) -> TrilinearForm:
    """Unique symmetric trilinear g with g(x,x,x) = cubic_part(x).

    Tensor entries come from the inclusion-exclusion formula
    6 g(x,y,z) = h(x+y+z) - h(x+y) - h(y+z) - h(x+z) + h(x) + h(y) + h(z)
    evaluated on basis vectors.
    """
    n = cubic_part.source_dim
    for p in cubic_part.components:
        if not p.is_homogeneous(3):
            raise ValueError("polarization needs a map homogeneous of degree 3")
    # only index triples drawn from monomial supports can be nonzero
    supports = set()
    for p in cubic_part.components:
        for exps, _ in p.items():
            idx = tuple(sorted(i for i, e in enumerate(exps) for _ in range(e)))
            supports.add(idx)

    def h(vec):
        return cubic_part.evaluate(vec)

    def basis_sum(*idx):
        v = [Fraction(0)] * n
        for i in idx:
            v[i] += 1
        return v

    tensor = [dict() for _ in range(cubic_part.target_dim)]
    for i, j, k in sorted(supports):
        vals = [
            h(basis_sum(i, j, k)),
            h(basis_sum(i, j)),
            h(basis_sum(j, k)),
            h(basis_sum(i, k)),
            h(basis_sum(i)),
            h(basis_sum(j)),
            h(basis_sum(k)),
        ]
        for l in range(cubic_part.target_dim):
            g = (vals[0][l] - vals[1][l] - vals[2][l] - vals[3][l] + vals[4][l] + vals[5][l] + vals[6][l]) / 6
            if g:
                tensor[l][(i, j, k)] = g
    return TrilinearForm(n, cubic_part.target_dim, tensor)


class CubicHomogeneousMap:
    """f(x) = x - h(x) with h = g(x,x,x) homogeneous cubic."""

    def __init__(self, cubic_part: PolynomialMap):
        if cubic_part.source_dim != cubic_part.target_dim:
            raise ValueError("cubic part must map C^n to C^n")
        for p in cubic_part.components:
            if not p.is_homogeneous(3):
                raise ValueError("cubic part must be homogeneous of degree 3")
        self.dim = cubic_part.source_dim
        self.cubic_part = cubic_part
        self._form = None

    @classmethod
    def from_map(cls, f: PolynomialMap) -> CubicHomogeneousMap:
        """Ingest a full map of the form x - h(x)."""
        ident = PolynomialMap.identity(f.source_dim)
        rest = f - ident
        if rest.degrees() - {3}:
            raise ValueError("map is not the identity plus a cubic-homogeneous term")
        return cls(-rest)

    @classmethod
    def from_perturbation(cls, plus_part: PolynomialMap) -> CubicHomogeneousMap:
        """Ingest ``f(x) = x + plus_part(x)`` (the plus-sign convention)."""
        return cls(-plus_part)

    @classmethod
    def identity(cls, n: int) -> CubicHomogeneousMap:
        return cls(PolynomialMap.zero(n, n))

    def full_map(self) -> PolynomialMap:
        return PolynomialMap.identity(self.dim) - self.cubic_part

    @property
    def trilinear(self) -> TrilinearForm:
        if self._form is None:
            self._form = polarize(self.cubic_part)
        return self._form

    def __call__(self, point):
        return eval_map(self, point)

    def __eq__(self, other):
        if not isinstance(other, CubicHomogeneousMap):
            return NotImplemented
        return self.cubic_part == other.cubic_part

    def __repr__(self):
        return f"CubicHomogeneousMap(dim={self.dim})"


class CubicLinearMap:
    """F(X) = X - (AX)^{*3}."""

    def __init__(self, a: RationalMatrix):
        if a.rows != a.cols:
            raise ValueError("A must be square")
        self.dim = a.rows
        self.a = a
        self._form = None

    def cubic_part(self) -> PolynomialMap:
        return hadamard_cube(PolynomialMap.linear(self.a))

    def full_map(self) -> PolynomialMap:
        return PolynomialMap.identity(self.dim) - self.cubic_part()

    @property
    def trilinear(self) -> HadamardTrilinear:
        if self._form is None:
            self._form = HadamardTrilinear(self.a)
        return self._form

    def __call__(self, point):
        return eval_map(self, point)

    def __repr__(self):
        return f"CubicLinearMap(dim={self.dim})"


def eval_map(m, point: Sequence) -> list[Fraction]:
    """Exact value of a cubic-homogeneous or cubic-linear map at a rational point."""
    point = [Fraction(x) for x in point]
    if len(point) != m.dim:
        raise ValueError(f"point has dimension {len(point)}, map has {m.dim}")
    if isinstance(m, CubicLinearMap):
        ax = m.a.apply(point)
        return [x - y ** 3 for x, y in zip(point, ax)]
    h = m.cubic_part.evaluate(point)
    return [x - y for x, y in zip(point, h)]


def kernel_shift_check(F: CubicLinearMap, x0: Sequence, samples: Sequence[Sequence] = ()) -> bool:
    """Check F(X + x0) = F(X) + x0 on samples and as a polynomial identity.

    Raises ValueError if x0 is not in ker A.
    """
    x0 = [Fraction(v) for v in x0]
    if any(F.a.apply(x0)):
        raise ValueError("shift vector is not in the kernel of A")
    for X in samples:
        X = [Fraction(v) for v in X]
        lhs = eval_map(F, [a + b for a, b in zip(X, x0)])
        rhs = [a + b for a, b in zip(eval_map(F, X), x0)]
        if lhs != rhs:
            return False
    N = F.dim
    shift = PolynomialMap(N, [Polynomial.variable(N, i) + x0[i] for i in range(N)])
    full = F.full_map()
    residual = full.compose(shift) - full - PolynomialMap.constant(N, x0)
    return residual.is_zero()


def kernel_shift_all(F: CubicLinearMap, samples: int = 3, rng: random.Random | None = None) -> bool:
    """kernel_shift_check over every kernel-basis column of A."""
    rng = rng or random.Random(0)
    pts = [[Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(F.dim)] for _ in range(samples)]
    return all(kernel_shift_check(F, col, pts) for col in kernel_basis(F.a).columns())


def jacobian_determinant(m) -> Polynomial:
    return poly_det(jacobian(m.full_map()))


def jacobian_det_constant(m) -> tuple[bool, Fraction | None]:
    """(True, value) if det f'(x) is a constant polynomial, else (False, None)."""
    det = jacobian_determinant(m)
    if det.is_constant():
        return True, det.constant_term()
    return False, None
