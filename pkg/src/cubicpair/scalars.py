"""Exact scalars: rationals and the rational-function field Q(lambda).

Rationals are plain :class:`fractions.Fraction` values.  Polynomials in the
parameter lambda are :class:`LambdaPoly` (coefficient tuples, index = power),
and elements of Q(lambda) are :class:`LambdaRational`, always kept in the
canonical form ``num/den`` with ``gcd(num, den) = 1`` and ``den`` monic.

Both kinds of value are immutable and hashable, so they can serve as
coefficients of the sparse polynomials in :mod:`cubicpair.polyring`.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from numbers import Rational as _RationalABC

from flint import fmpq, fmpq_poly

__all__ = [
    "ExcludedLambdaError",
    "Field",
    "LAMBDA",
    "LambdaPoly",
    "LambdaRational",
    "field_of",
    "format_rational",
    "lambda_eval",
    "lambda_gcd_reduce",
    "normalize",
    "parse_rational",
]


class ExcludedLambdaError(ZeroDivisionError):
    """A value of lambda hits a zero of some denominator."""


class Field(enum.Enum):
    Q = "Q"
    QLAMBDA = "QLambda"


def normalize(raw_num: int, raw_den: int) -> Fraction:
    """Reduce ``raw_num/raw_den`` to lowest terms with a positive denominator."""
    if raw_den == 0:
        raise ZeroDivisionError("zero denominator")
    return Fraction(raw_num, raw_den)


def parse_rational(text) -> Fraction:
    """Parse ``"p/q"``, ``"p"`` (or an int/Fraction) into a Fraction."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    text = str(text).strip()
    if "/" in text:
        p, q = text.split("/")
        return normalize(int(p), int(q))
    return Fraction(int(text))


def format_rational(value) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    raise TypeError(f"not a rational scalar: {value!r}")


# ---------------------------------------------------------------------------
# univariate polynomials in lambda
#
# The arithmetic kernel is FLINT's fmpq_poly; these classes only add the
# conversions to and from Fraction and the canonical-form bookkeeping.


def _fmpq(c) -> fmpq:
    if isinstance(c, fmpq):
        return c
    c = _as_fraction(c)
    return fmpq(c.numerator, c.denominator)


def _frac(c) -> Fraction:
    return Fraction(int(c.p), int(c.q))


_ONE = fmpq_poly([1])
_ZERO = fmpq_poly([])


class LambdaPoly:
    """Polynomial in lambda over Q; ``coeffs[i]`` is the coefficient of lambda^i.

    The zero polynomial has an empty coefficient tuple; otherwise the last
    coefficient is nonzero.
    """

    __slots__ = ("_p",)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, fmpq_poly):
            self._p = coeffs
        else:
            self._p = fmpq_poly([_fmpq(c) for c in coeffs])

    @classmethod
    def _wrap(cls, p: fmpq_poly) -> LambdaPoly:
        obj = cls.__new__(cls)
        obj._p = p
        return obj

    @classmethod
    def constant(cls, c) -> LambdaPoly:
        return cls._wrap(fmpq_poly([_fmpq(c)]))

    @classmethod
    def monomial(cls, power: int, c=1) -> LambdaPoly:
        return cls([0] * power + [c])

    @property
    def coeffs(self) -> tuple:
        return tuple(_frac(c) for c in self._p.coeffs())

    @property
    def degree(self) -> int | None:
        """Degree, or None for the zero polynomial."""
        d = self._p.degree()
        return None if d < 0 else d

    def is_zero(self) -> bool:
        return self._p.is_zero()

    def is_one(self) -> bool:
        return self._p == _ONE

    @property
    def leading(self) -> Fraction:
        return _frac(self._p.coeffs()[-1])

    def __eq__(self, other):
        other = _lift_poly(other)
        if other is NotImplemented:
            return other
        return self._p == other._p

    def __hash__(self):
        return hash(("LambdaPoly", self.coeffs))

    def __repr__(self):
        return f"LambdaPoly({[format_rational(c) for c in self.coeffs]})"

    def __str__(self):
        return _poly_str(self.coeffs)

    def __add__(self, other):
        other = _lift_poly(other)
        if other is NotImplemented:
            return other
        return LambdaPoly._wrap(self._p + other._p)

    __radd__ = __add__

    def __neg__(self):
        return LambdaPoly._wrap(-self._p)

    def __sub__(self, other):
        other = _lift_poly(other)
        if other is NotImplemented:
            return other
        return LambdaPoly._wrap(self._p - other._p)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _lift_poly(other)
        if other is NotImplemented:
            return other
        return LambdaPoly._wrap(self._p * other._p)

    __rmul__ = __mul__

    def scale(self, c) -> LambdaPoly:
        return LambdaPoly._wrap(self._p * _fmpq(c))

    def __pow__(self, e: int):
        return LambdaPoly._wrap(self._p ** e)

    def divmod(self, other: LambdaPoly):
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        q, r = divmod(self._p, other._p)
        return LambdaPoly._wrap(q), LambdaPoly._wrap(r)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def monic(self) -> LambdaPoly:
        if self.is_zero():
            return self
        return LambdaPoly._wrap(self._p / self._p.coeffs()[-1])

    def __call__(self, value):
        return _frac(self._p(_fmpq(value)))

    def gcd(self, other: LambdaPoly) -> LambdaPoly:
        """Monic gcd (zero only if both inputs are zero)."""
        return LambdaPoly._wrap(self._p.gcd(other._p))


def _lift_poly(value):
    if isinstance(value, LambdaPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return LambdaPoly.constant(value)
    return NotImplemented


def _poly_str(coeffs, var="λ") -> str:
    if not coeffs:
        return "0"
    parts = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = format_rational(mag)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == 1 else f"{format_rational(mag)}*{mono}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


# ---------------------------------------------------------------------------
# the field Q(lambda)


def _to_fpoly(value) -> fmpq_poly:
    if isinstance(value, LambdaPoly):
        return value._p
    if isinstance(value, fmpq_poly):
        return value
    if isinstance(value, (int, Fraction)):
        return fmpq_poly([_fmpq(value)])
    raise TypeError("expected a LambdaPoly or a rational")


def _canon(n: fmpq_poly, d: fmpq_poly):
    if d.is_zero():
        raise ZeroDivisionError("zero denominator in Q(lambda)")
    if n.is_zero():
        return _ZERO, _ONE
    if d.degree() > 0:
        g = n.gcd(d)
        if g != _ONE:
            n = n // g
            d = d // g
    lead = d.coeffs()[-1]
    if lead != 1:
        n = n / lead
        d = d / lead
    return n, d


class LambdaRational:
    """Element of Q(lambda) in canonical reduced form (den monic, coprime)."""

    __slots__ = ("_n", "_d", "_hash")

    def __init__(self, num, den=None):
        n = _to_fpoly(num)
        d = _ONE if den is None else _to_fpoly(den)
        self._n, self._d = _canon(n, d)
        self._hash = None

    @classmethod
    def _raw(cls, n: fmpq_poly, d: fmpq_poly) -> LambdaRational:
        obj = cls.__new__(cls)
        obj._n = n
        obj._d = d
        obj._hash = None
        return obj

    @property
    def num(self) -> LambdaPoly:
        return LambdaPoly._wrap(self._n)

    @property
    def den(self) -> LambdaPoly:
        return LambdaPoly._wrap(self._d)

    def is_zero(self) -> bool:
        return self._n.is_zero()

    def is_rational(self) -> bool:
        return self._d.degree() == 0 and self._n.degree() <= 0

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} depends on lambda")
        cs = self._n.coeffs()
        return _frac(cs[0]) if cs else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, LambdaRational):
            return self._n == other._n and self._d == other._d
        if isinstance(other, (int, Fraction)):
            return self._d == _ONE and self._n == fmpq_poly([_fmpq(other)])
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(self.to_fraction())
            else:
                self._hash = hash((str(self._n), str(self._d)))
        return self._hash

    def __bool__(self):
        return not self._n.is_zero()

    def __repr__(self):
        return f"LambdaRational({self})"

    def __str__(self):
        num = self.num
        if self._d == _ONE:
            return str(num)
        text = str(num)
        if sum(1 for c in num.coeffs if c) > 1:
            text = f"({text})"
        return f"{text}/({self.den})"

    def __add__(self, other):
        if isinstance(other, LambdaRational):
            on, od = other._n, other._d
        elif isinstance(other, (int, Fraction)):
            if not other:
                return self
            return LambdaRational._raw(self._n + self._d * _fmpq(other), self._d)
        else:
            return NotImplemented
        if self._d == od:
            return LambdaRational._raw(*_canon(self._n + on, od))
        g = self._d.gcd(od)
        if g == _ONE:
            return LambdaRational._raw(*_canon(self._n * od + on * self._d, self._d * od))
        a, b = self._d // g, od // g
        return LambdaRational._raw(*_canon(self._n * b + on * a, self._d * b))

    __radd__ = __add__

    def __neg__(self):
        return LambdaRational._raw(-self._n, self._d)

    def __sub__(self, other):
        if isinstance(other, (LambdaRational, int, Fraction)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return LambdaRational._raw(_ZERO, _ONE)
            return LambdaRational._raw(self._n * _fmpq(other), self._d)
        if not isinstance(other, LambdaRational):
            return NotImplemented
        return LambdaRational._raw(*_canon(self._n * other._n, self._d * other._d))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise ZeroDivisionError("division by zero in Q(lambda)")
        return LambdaRational._raw(*_canon(self._n * other._d, self._d * other._n))

    def __rtruediv__(self, other):
        return _lift(other) / self

    def __pow__(self, e: int):
        if e < 0:
            return LambdaRational(1) / (self ** -e)
        return LambdaRational._raw(self._n ** e, self._d ** e)

    def __call__(self, value):
        return lambda_eval(self, value)


def _lift(value):
    if isinstance(value, LambdaRational):
        return value
    if isinstance(value, (int, Fraction)):
        return LambdaRational._raw(fmpq_poly([_fmpq(value)]), _ONE)
    if isinstance(value, LambdaPoly):
        return LambdaRational._raw(value._p, _ONE)
    return NotImplemented


#: The parameter lambda itself.
LAMBDA = LambdaRational(LambdaPoly.monomial(1))


def lambda_gcd_reduce(num: LambdaPoly, den: LambdaPoly) -> LambdaRational:
    """Canonical form of ``num/den`` in Q(lambda)."""
    return LambdaRational(num, den)


def lambda_eval(r, v) -> Fraction:
    """Specialize lambda to the rational ``v``.

    Raises ExcludedLambdaError when the denominator vanishes at ``v``.
    """
    v = _as_fraction(v)
    if isinstance(r, (int, Fraction)):
        return Fraction(r)
    d = r.den(v)
    if d == 0:
        raise ExcludedLambdaError(f"denominator {r.den} vanishes at lambda = {format_rational(v)}")
    return r.num(v) / d


def field_of(value) -> Field:
    if isinstance(value, LambdaRational):
        return Field.QLAMBDA
    if isinstance(value, (int, Fraction)):
        return Field.Q
    raise TypeError(f"not a scalar: {value!r}")
