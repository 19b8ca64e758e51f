"""The two fixture examples with their matrices, maps, inverses and series.

``druzkowski15`` is a cubic-linear map on C^15 (rank-5 nilpotent A) with
its pairing matrices, the paired map on C^5, its inverse, the exact
pre-conjugation k_lambda and its inverse.

``essen4`` is a cubic-homogeneous map on C^4 with polynomial inverse, the
degree-7 truncation of its pre-conjugation, and a 16-dimensional pairing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cubicmaps import CubicHomogeneousMap, CubicLinearMap
from .linalg import RationalMatrix
from .polyring import Polynomial, PolynomialMap
from .scalars import LambdaPoly, LambdaRational

__all__ = ["Fixture", "druzkowski15", "essen4", "FIXTURES", "get_fixture"]


@dataclass(frozen=True)
class Fixture:
    name: str
    A: RationalMatrix
    B: RationalMatrix
    C: RationalMatrix
    f: CubicHomogeneousMap
    f_inv: PolynomialMap
    k: PolynomialMap  # over Q(lambda); exact or truncated at k_degree
    k_exact: bool
    k_degree: int
    k_inv: PolynomialMap | None = None
    D: RationalMatrix | None = None

    @property
    def F(self) -> CubicLinearMap:
        return CubicLinearMap(self.A)


def _matrix(text: str, scale=1) -> RationalMatrix:
    return RationalMatrix([[int(t) for t in line.split()] for line in text.strip().splitlines()], scale=Fraction(scale))


def _vec(n: int, rows) -> PolynomialMap:
    return PolynomialMap(n, [Polynomial.parse(r, n) for r in rows])


def _qpoch_den(k: int) -> LambdaPoly:
    out = LambdaPoly.constant(1)
    for i in range(1, k + 1):
        out = out * (LambdaPoly.constant(1) - LambdaPoly.monomial(2 * i))
    return out


def _lr(num_coeff, num_power: int, den_steps: int) -> LambdaRational:
    """c * lambda^p / prod_{i<=steps} (1 - lambda^(2i))."""
    return LambdaRational(LambdaPoly.monomial(num_power, num_coeff), _qpoch_den(den_steps))


_A15 = """
0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
0 0 0 -4 -2 2 2 2 0 0 -2 0 0 -2 0
0 0 -2 0 -2 0 1 0 0 1 0 -1 -1 0 0
0 0 2 -4 0 0 0 2 -2 -2 -2 0 0 0 2
2 0 2 -4 0 0 0 2 -2 -2 -2 0 0 0 2
0 2 2 -4 0 0 0 2 -2 -2 -2 0 0 0 2
2 0 -2 0 -2 0 1 0 0 1 0 -1 -1 0 0
2 0 0 -4 -2 2 2 2 0 0 -2 0 0 -2 0
0 2 0 -4 -2 2 2 2 0 0 -2 0 0 -2 0
2 0 2 0 2 0 -1 0 0 -1 0 1 1 0 0
0 2 -2 4 0 0 0 -2 2 2 2 0 0 0 -2
0 2 0 4 2 -2 -2 -2 0 0 2 0 0 2 0
2 2 2 -4 0 0 0 2 -2 -2 -2 0 0 0 2
2 2 0 -4 -2 2 2 2 0 0 -2 0 0 -2 0
"""

_B15 = """
2 0 0 0 0 0 0 0 0 0 0 0 0 0 0
0 2 0 0 0 0 0 0 0 0 0 0 0 0 0
0 0 0 -4 -2 2 2 2 0 0 -2 0 0 -2 0
0 0 2 -4 0 0 0 2 -2 -2 -2 0 0 0 2
0 0 -2 0 -2 0 1 0 0 1 0 -1 -1 0 0
"""

_CT15 = """
1 0 0 0 0 0 0 0 0 0 0 0 0 0 0
0 1 0 0 0 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 1 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 -1 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 -2 0 0 0
"""

# the three homogeneous blocks shared by f^{-1}, k and k^{-1}
_V3 = ["0", "0",
       "-x1^2*x2 - x1*x2^2 - 2*x1*x2*x4 + 2*x1^2*x5",
       "x1^2*x2 + x1*x2^2 + 2*x1*x2*x3 + 2*x1^2*x5",
       "x2^2*x3 + x2^2*x4"]
_V5 = ["0", "0",
       "-x1^3*x2^2 - x1^2*x2^3 - x1^2*x2^2*x3 + x1^2*x2^2*x4 - 2*x1^3*x2*x5",
       "-x1^3*x2^2 - x1^2*x2^3 + x1^2*x2^2*x3 - x1^2*x2^2*x4 + 2*x1^3*x2*x5",
       "x1*x2^3*x3 - x1*x2^3*x4 + 2*x1^2*x2^2*x5"]
_V7 = ["0", "0",
       "x1^4*x2^3 + x1^3*x2^4",
       "-x1^4*x2^3 - x1^3*x2^4",
       "-x1^3*x2^4 - x1^2*x2^5"]
# the blocks of k^{-1} (signs differ from the ones above)
_W3 = ["0", "0",
       "x1^2*x2 + x1*x2^2 + 2*x1*x2*x4 - 2*x1^2*x5",
       "-x1^2*x2 - x1*x2^2 - 2*x1*x2*x3 - 2*x1^2*x5",
       "-x2^2*x3 - x2^2*x4"]
_W7 = ["0", "0",
       "-x1^4*x2^3 - x1^3*x2^4",
       "x1^4*x2^3 + x1^3*x2^4",
       "x1^3*x2^4 + x1^2*x2^5"]


def druzkowski15() -> Fixture:
    A = _matrix(_A15, Fraction(1, 2))
    B = _matrix(_B15, Fraction(1, 2))
    C = _matrix(_CT15).T
    n = 5
    ident = PolynomialMap.identity(n)
    plus = _vec(n, ["0", "0",
                    "x1^2*x2 + x1*x2^2 + 2*x1*x2*x4 - 2*x1^2*x5",
                    "-x1^2*x2 - x1*x2^2 - 2*x1*x2*x3 - 2*x1^2*x5",
                    "-x2^2*x3 - x2^2*x4"]).scale(3)
    f = CubicHomogeneousMap.from_perturbation(plus)
    v3, v5, v7 = _vec(n, _V3), _vec(n, _V5), _vec(n, _V7)
    f_inv = ident + v3.scale(3) + v5.scale(18) + v7.scale(108)
    k = ident + v3.scale(_lr(3, 0, 1)) + v5.scale(_lr(18, 0, 2)) + v7.scale(_lr(108, 0, 3))
    k_inv = (ident + _vec(n, _W3).scale(_lr(3, 0, 1)) + v5.scale(_lr(18, 2, 2))
             + _vec(n, _W7).scale(_lr(108, 6, 3)))
    return Fixture("druzkowski15", A, B, C, f, f_inv, k, True, 7, k_inv)


_B16 = """
8 -4 -1 1 -4 1 -1 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 -8 4 4 1 -1 -1 1 0 0
0 0 0 0 0 0 0 0 0 0 0 0 0 0 -24 0
0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 24
"""

_DT16 = """
0 0 1 1 0 1 1 1 1 1 0 0 0 0 0 0
1 1 0 0 1 0 0 0 0 0 1 1 1 1 0 0
0 0 -1 1 0 -1 1 0 -1 1 -1 1 -1 1 0 0
0 -1 -1 -1 1 1 1 0 0 0 -1 -1 1 1 1 0
"""

_CT16 = """
3 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 -3 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 0 0 -1 0
0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1
"""

_A16 = """
0 0 0 0 0 0 0 -8 4 4 1 -1 -1 1 0 0
0 0 0 0 0 0 0 -8 4 4 1 -1 -1 1 0 -24
8 -4 -1 1 -4 1 -1 0 0 0 0 0 0 0 24 -24
8 -4 -1 1 -4 1 -1 0 0 0 0 0 0 0 -24 -24
0 0 0 0 0 0 0 -8 4 4 1 -1 -1 1 0 24
8 -4 -1 1 -4 1 -1 0 0 0 0 0 0 0 24 24
8 -4 -1 1 -4 1 -1 0 0 0 0 0 0 0 -24 24
8 -4 -1 1 -4 1 -1 0 0 0 0 0 0 0 0 0
8 -4 -1 1 -4 1 -1 0 0 0 0 0 0 0 24 0
8 -4 -1 1 -4 1 -1 0 0 0 0 0 0 0 -24 0
0 0 0 0 0 0 0 -8 4 4 1 -1 -1 1 24 -24
0 0 0 0 0 0 0 -8 4 4 1 -1 -1 1 -24 -24
0 0 0 0 0 0 0 -8 4 4 1 -1 -1 1 24 24
0 0 0 0 0 0 0 -8 4 4 1 -1 -1 1 -24 24
0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 24
0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
"""


def essen4() -> Fixture:
    n = 4
    ident = PolynomialMap.identity(n)
    plus = _vec(n, ["x1*x3*x4 + x2*x4^2", "-x1*x3^2 - x2*x3*x4", "x4^3", "0"])
    f = CubicHomogeneousMap.from_perturbation(plus)
    f_inv = (ident
             + _vec(n, ["-x1*x3*x4 - x2*x4^2", "x1*x3^2 + x2*x3*x4", "-x4^3", "0"])
             + _vec(n, ["x1*x4^4", "-2*x1*x3*x4^3 - x2*x4^4", "0", "0"])
             + _vec(n, ["0", "x1*x4^6", "0", "0"]))
    k = (ident
         + _vec(n, ["-x1*x3*x4 - x2*x4^2", "x1*x3^2 + x2*x3*x4", "-x4^3", "0"]).scale(_lr(1, 0, 1))
         + _vec(n, ["x1*x4^4", "-2*x1*x3*x4^3 - x2*x4^4", "0", "0"]).scale(_lr(1, 0, 2))
         + _vec(n, ["-x1*x3*x4^5 - x2*x4^6", "x1*x3^2*x4^4 + x2*x3*x4^5 + x1*x4^6", "0", "0"]).scale(_lr(1, 2, 3))
         + _vec(n, ["0", "x1*x4^6", "0", "0"]).scale(_lr(1, 0, 3)))
    A = _matrix(_A16, Fraction(1, 24))
    B = _matrix(_B16, Fraction(1, 24))
    C = _matrix(_CT16).T
    D = _matrix(_DT16).T
    return Fixture("essen4", A, B, C, f, f_inv, k, False, 7, None, D)


FIXTURES = {"druzkowski15": druzkowski15, "essen4": essen4}
# numeric aliases accepted by the command line
ALIASES = {"6.1": "druzkowski15", "6.2": "essen4"}


def get_fixture(name: str) -> Fixture:
    key = ALIASES.get(name, name)
    if key not in FIXTURES:
        raise KeyError(f"unknown example {name!r}; choose from {sorted(FIXTURES) + sorted(ALIASES)}")
    return FIXTURES[key]()
