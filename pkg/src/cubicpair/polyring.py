"""Sparse multivariate polynomials and polynomial maps over Q or Q(lambda).

A monomial x1^e1 ... xn^en is packed into a single Python int::

    key = deg << (BITS*n) | e1 << (BITS*(n-1)) | ... | en

so that multiplying monomials is adding keys, and ordering keys orders
monomials graded-lexicographically.  Each field holds ``BITS`` bits; total
degrees are capped at ``2**BITS - 1`` (checked on multiplication).

Canonical printed/serialized order is increasing total degree and, within a
degree, lexicographic with x1 > x2 > ... (so ``x1^3`` precedes ``x1^2*x2``).
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "BITS",
    "Polynomial",
    "PolynomialMap",
    "hadamard_cube",
    "homogeneous_part",
    "jacobian",
    "poly_compose",
    "poly_det",
    "truncate",
]

BITS = 16
_MASK = (1 << BITS) - 1
MAX_DEGREE = _MASK


class _ZeroDegree:
    """Degree of the zero polynomial; compares below every integer."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "-inf"

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __add__(self, other):
        raise TypeError("arithmetic on the degree of the zero polynomial")

    __radd__ = __sub__ = __rsub__ = __mul__ = __rmul__ = __add__


#: Degree of the zero polynomial.
ZERO_DEGREE = _ZeroDegree()


def _coerce(c):
    if isinstance(c, int):
        return Fraction(c)
    return c


def pack(exponents: Sequence[int]) -> int:
    key = 0
    deg = 0
    for e in exponents:
        if e < 0:
            raise ValueError("negative exponent")
        key = (key << BITS) | e
        deg += e
    if deg > MAX_DEGREE:
        raise OverflowError("total degree too large")
    return (deg << (BITS * len(exponents))) | key


def unpack(key: int, nvars: int) -> tuple[int, ...]:
    out = [0] * nvars
    for i in range(nvars - 1, -1, -1):
        out[i] = key & _MASK
        key >>= BITS
    return tuple(out)


class Polynomial:
    """Immutable sparse polynomial in ``nvars`` variables.

    ``terms`` maps packed monomial keys to nonzero coefficients (Fraction or
    LambdaRational).  Treat it as read-only.
    """

    __slots__ = ("nvars", "terms", "_shift")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        self._shift = BITS * nvars
        if terms is None:
            self.terms = {}
        elif isinstance(terms, dict):
            self.terms = {k: _coerce(c) for k, c in terms.items() if c}
        else:
            acc = {}
            for exps, c in terms:
                if len(exps) != nvars:
                    raise ValueError(f"monomial {exps} has wrong length for {nvars} variables")
                k = pack(exps)
                acc[k] = acc.get(k, 0) + _coerce(c)
            self.terms = {k: c for k, c in acc.items() if c}

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> Polynomial:
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj._shift = BITS * nvars
        obj.terms = terms
        return obj

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> Polynomial:
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c) -> Polynomial:
        return cls._raw(nvars, {0: _coerce(c)} if c else {})

    @classmethod
    def variable(cls, nvars: int, i: int, c=1) -> Polynomial:
        """The polynomial ``c * x_{i+1}`` (``i`` is 0-based)."""
        if not 0 <= i < nvars:
            raise IndexError(f"variable index {i} out of range for {nvars} variables")
        key = (1 << (BITS * nvars)) | (1 << (BITS * (nvars - 1 - i)))
        return cls._raw(nvars, {key: _coerce(c)} if c else {})

    @classmethod
    def linear(cls, coeffs: Sequence, constant=0) -> Polynomial:
        n = len(coeffs)
        terms = {}
        if constant:
            terms[0] = _coerce(constant)
        top = 1 << (BITS * n)
        for i, c in enumerate(coeffs):
            if c:
                terms[top | (1 << (BITS * (n - 1 - i)))] = _coerce(c)
        return cls._raw(n, terms)

    @classmethod
    def parse(cls, text: str, nvars: int, scalar=None) -> Polynomial:
        """Parse text like ``"x1^2*x2 - 2/3*x1*x5 + 1"``.

        Any variable name of the form ``<letters><index>`` is accepted, with
        1-based index.  ``scalar`` optionally multiplies every coefficient.
        """
        text = text.replace(" ", "").replace("−", "-")
        if not text:
            return cls.zero(nvars)
        if text[0] not in "+-":
            text = "+" + text
        terms = []
        for sign, body in re.findall(r"([+-])([^+-]+)", text):
            coeff = Fraction(1)
            exps = [0] * nvars
            for factor in body.split("*"):
                m = re.fullmatch(r"[A-Za-z]+(\d+)(?:\^(\d+))?", factor)
                if m:
                    idx = int(m.group(1)) - 1
                    if not 0 <= idx < nvars:
                        raise ValueError(f"variable {factor} out of range")
                    exps[idx] += int(m.group(2) or 1)
                else:
                    coeff *= Fraction(factor)
            if sign == "-":
                coeff = -coeff
            terms.append((tuple(exps), coeff if scalar is None else coeff * scalar))
        return cls(nvars, terms)

    # -- inspection ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self):
        """Total degree; ``ZERO_DEGREE`` for the zero polynomial."""
        if not self.terms:
            return ZERO_DEGREE
        return max(self.terms) >> self._shift

    def degrees(self) -> set[int]:
        s = self._shift
        return {k >> s for k in self.terms}

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and 0 in self.terms)

    def constant_term(self):
        return self.terms.get(0, Fraction(0))

    def is_homogeneous(self, d: int | None = None) -> bool:
        degs = self.degrees()
        if not degs:
            return True
        if len(degs) != 1:
            return False
        return d is None or degs == {d}

    def items(self):
        """(exponent tuple, coefficient) pairs in canonical order."""
        n = self.nvars
        s = self._shift
        keyed = sorted(self.terms.items(), key=lambda kv: (kv[0] >> s, -kv[0]))
        return [(unpack(k, n), c) for k, c in keyed]

    def coefficient(self, exponents: Sequence[int]):
        return self.terms.get(pack(exponents), Fraction(0))

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self):
        return f"Polynomial({self.nvars}, {str(self)!r})"

    def __str__(self):
        return self.to_string()

    def to_string(self, var: str = "x") -> str:
        if not self.terms:
            return "0"
        out = []
        for exps, c in self.items():
            mono = "*".join(
                f"{var}{i + 1}" if e == 1 else f"{var}{i + 1}^{e}"
                for i, e in enumerate(exps)
                if e
            )
            if isinstance(c, Fraction):
                neg = c < 0
                mag = -c if neg else c
                if not mono:
                    body = _fmt(mag)
                elif mag == 1:
                    body = mono
                else:
                    body = f"{_fmt(mag)}*{mono}"
            else:
                neg = False
                body = f"({c})" + (f"*{mono}" if mono else "")
            out.append(("-" if neg else "+", body))
        text = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: Polynomial):
        if other.nvars != self.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def _lift(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return Polynomial.constant(self.nvars, other)

    def __add__(self, other):
        other = self._lift(other)
        if len(self.terms) < len(other.terms):
            small, big = self.terms, other.terms
        else:
            small, big = other.terms, self.terms
        acc = dict(big)
        for k, c in small.items():
            v = acc.get(k)
            if v is None:
                acc[k] = c
            else:
                v = v + c
                if v:
                    acc[k] = v
                else:
                    del acc[k]
        return Polynomial._raw(self.nvars, acc)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.nvars, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        acc = dict(self.terms)
        for k, c in other.terms.items():
            v = acc.get(k)
            if v is None:
                acc[k] = -c
            else:
                v = v - c
                if v:
                    acc[k] = v
                else:
                    del acc[k]
        return Polynomial._raw(self.nvars, acc)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> Polynomial:
        c = _coerce(c)
        if not c:
            return Polynomial._raw(self.nvars, {})
        if c == 1:
            return self
        return Polynomial._raw(self.nvars, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            return self.mul(other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def mul(self, other: Polynomial, cap: int | None = None) -> Polynomial:
        """Product, dropping all terms of total degree above ``cap``."""
        self._check(other)
        a, b = self.terms, other.terms
        if not a or not b:
            return Polynomial._raw(self.nvars, {})
        s = self._shift
        if cap is None and (max(a) >> s) + (max(b) >> s) > MAX_DEGREE:
            raise OverflowError("product degree exceeds the packed-monomial limit")
        if len(a) > len(b):
            a, b = b, a
        acc: dict = {}
        get = acc.get
        if cap is None:
            bl = list(b.items())
            for ka, ca in a.items():
                for kb, cb in bl:
                    k = ka + kb
                    v = get(k)
                    acc[k] = ca * cb if v is None else v + ca * cb
        else:
            if cap < 0:
                return Polynomial._raw(self.nvars, {})
            limit = (cap + 1) << s
            bl = sorted(b.items())
            for ka, ca in a.items():
                room = limit - (ka & ~((1 << s) - 1))
                for kb, cb in bl:
                    if kb >= room:
                        break
                    k = ka + kb
                    v = get(k)
                    acc[k] = ca * cb if v is None else v + ca * cb
        return Polynomial._raw(self.nvars, {k: v for k, v in acc.items() if v})

    def __pow__(self, e: int):
        return self.power(e)

    def power(self, e: int, cap: int | None = None) -> Polynomial:
        if e < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(self.nvars, 1)
        base = self
        while e:
            if e & 1:
                result = result.mul(base, cap)
            e >>= 1
            if e:
                base = base.mul(base, cap)
        return result

    def exact_div(self, other: Polynomial) -> Polynomial:
        """Exact quotient; raises ArithmeticError if ``other`` does not divide."""
        self._check(other)
        if not other.terms:
            raise ZeroDivisionError("division by the zero polynomial")
        n = self.nvars
        lead_k = max(other.terms)
        lead_c = other.terms[lead_k]
        lead_e = unpack(lead_k, n)
        rest = {k: c for k, c in other.terms.items() if k != lead_k}
        rem = dict(self.terms)
        quot = {}
        while rem:
            k = max(rem)
            exps = unpack(k, n)
            if any(x < y for x, y in zip(exps, lead_e)):
                raise ArithmeticError("polynomial division is not exact")
            qk = k - lead_k
            qc = rem.pop(k) / lead_c
            quot[qk] = qc
            for rk, rc in rest.items():
                kk = qk + rk
                v = rem.get(kk, 0) - qc * rc
                if v:
                    rem[kk] = v
                else:
                    rem.pop(kk, None)
        return Polynomial._raw(n, quot)

    # -- calculus / evaluation ----------------------------------------------

    def derivative(self, i: int) -> Polynomial:
        n = self.nvars
        shift_i = BITS * (n - 1 - i)
        one = (1 << self._shift) | (1 << shift_i)
        acc = {}
        for k, c in self.terms.items():
            e = (k >> shift_i) & _MASK
            if e:
                acc[k - one] = c * e
        return Polynomial._raw(n, acc)

    def __call__(self, *point):
        if len(point) == 1 and isinstance(point[0], (list, tuple)):
            point = point[0]
        return self.evaluate(point)

    def evaluate(self, point: Sequence):
        """Value at ``point`` (scalars or Polynomials of a common ring)."""
        if len(point) != self.nvars:
            raise ValueError(f"expected {self.nvars} values, got {len(point)}")
        if point and isinstance(point[0], Polynomial):
            return self.compose(point)
        n = self.nvars
        pows = [dict() for _ in range(n)]
        total = Fraction(0)
        for k, c in self.terms.items():
            term = c
            for i in range(n):
                e = (k >> (BITS * (n - 1 - i))) & _MASK
                if e:
                    cache = pows[i]
                    v = cache.get(e)
                    if v is None:
                        v = cache[e] = point[i] ** e
                    term = term * v
            total = total + term
        return total

    def compose(self, inner: Sequence[Polynomial], cap: int | None = None) -> Polynomial:
        """Substitute ``inner[i]`` for ``x_{i+1}``, optionally truncating at ``cap``."""
        n = self.nvars
        if len(inner) != n:
            raise ValueError(f"expected {n} substitutions, got {len(inner)}")
        m = inner[0].nvars if inner else 0
        if not self.terms:
            return Polynomial.zero(m)
        # Horner-style recursion on the variables shares partial products.
        items = [(unpack(k, n), c) for k, c in self.terms.items()]
        pow_cache = [dict() for _ in range(n)]

        def power(i, e):
            cache = pow_cache[i]
            v = cache.get(e)
            if v is None:
                if e == 1:
                    v = inner[i]
                else:
                    half = power(i, e // 2)
                    v = half.mul(half, cap)
                    if e % 2:
                        v = v.mul(inner[i], cap)
                cache[e] = v
            return v

        def rec(group, i):
            # group: list of (exps, coeff) all sharing exponents before i
            if i == n:
                total = Polynomial.zero(m)
                for _, c in group:
                    total = total + Polynomial.constant(m, c)
                return total
            buckets: dict[int, list] = {}
            for item in group:
                buckets.setdefault(item[0][i], []).append(item)
            total = Polynomial.zero(m)
            for e, sub in buckets.items():
                part = rec(sub, i + 1)
                if e:
                    part = part.mul(power(i, e), cap)
                total = total + part
            return total

        return rec(items, 0)

    # -- degree filtering ---------------------------------------------------

    def homogeneous_part(self, d: int) -> Polynomial:
        s = self._shift
        return Polynomial._raw(self.nvars, {k: c for k, c in self.terms.items() if k >> s == d})

    def truncate(self, cap: int) -> Polynomial:
        limit = (cap + 1) << self._shift
        return Polynomial._raw(self.nvars, {k: c for k, c in self.terms.items() if k < limit})

    def above(self, cap: int) -> Polynomial:
        limit = (cap + 1) << self._shift
        return Polynomial._raw(self.nvars, {k: c for k, c in self.terms.items() if k >= limit})

    def map_coefficients(self, fn) -> Polynomial:
        acc = {}
        for k, c in self.terms.items():
            v = fn(c)
            if v:
                acc[k] = _coerce(v)
        return Polynomial._raw(self.nvars, acc)

    def extend(self, extra: int) -> Polynomial:
        """Embed into a ring with ``extra`` more variables appended."""
        n = self.nvars
        acc = {}
        for k, c in self.terms.items():
            d = k >> self._shift
            body = k & ((1 << self._shift) - 1)
            acc[(d << (BITS * (n + extra))) | (body << (BITS * extra))] = c
        return Polynomial._raw(n + extra, acc)


def _fmt(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


class PolynomialMap:
    """Immutable polynomial map from ``source_dim`` to ``len(components)`` dimensions."""

    __slots__ = ("source_dim", "components")

    def __init__(self, source_dim: int, components: Iterable[Polynomial]):
        comps = tuple(components)
        for p in comps:
            if p.nvars != source_dim:
                raise ValueError(f"component has {p.nvars} variables, expected {source_dim}")
        self.source_dim = source_dim
        self.components = comps

    @property
    def target_dim(self) -> int:
        return len(self.components)

    @classmethod
    def identity(cls, n: int) -> PolynomialMap:
        return cls(n, [Polynomial.variable(n, i) for i in range(n)])

    @classmethod
    def zero(cls, source_dim: int, target_dim: int) -> PolynomialMap:
        return cls(source_dim, [Polynomial.zero(source_dim)] * target_dim)

    @classmethod
    def linear(cls, matrix) -> PolynomialMap:
        """The map X -> M X for a matrix given as rows of scalars."""
        rows = [list(r) for r in _rows_of(matrix)]
        cols = _cols_of(matrix, rows)
        return cls(cols, [Polynomial.linear(r) for r in rows])

    @classmethod
    def constant(cls, source_dim: int, vector) -> PolynomialMap:
        return cls(source_dim, [Polynomial.constant(source_dim, c) for c in vector])

    @classmethod
    def parse(cls, texts: Sequence[str], nvars: int, scalar=None) -> PolynomialMap:
        return cls(nvars, [Polynomial.parse(t, nvars, scalar) for t in texts])

    def __len__(self):
        return len(self.components)

    def __getitem__(self, i):
        return self.components[i]

    def __iter__(self):
        return iter(self.components)

    def __eq__(self, other):
        if not isinstance(other, PolynomialMap):
            return NotImplemented
        return self.source_dim == other.source_dim and self.components == other.components

    def __hash__(self):
        return hash((self.source_dim, self.components))

    def __repr__(self):
        return f"PolynomialMap({self.source_dim} -> {self.target_dim})"

    def __str__(self):
        return "(" + ", ".join(str(p) for p in self.components) + ")"

    def _check(self, other: PolynomialMap):
        if other.source_dim != self.source_dim or other.target_dim != self.target_dim:
            raise ValueError(
                f"map shape mismatch: {self.source_dim}->{self.target_dim} vs "
                f"{other.source_dim}->{other.target_dim}"
            )

    def __add__(self, other: PolynomialMap) -> PolynomialMap:
        self._check(other)
        return PolynomialMap(self.source_dim, [a + b for a, b in zip(self, other)])

    def __sub__(self, other: PolynomialMap) -> PolynomialMap:
        self._check(other)
        return PolynomialMap(self.source_dim, [a - b for a, b in zip(self, other)])

    def __neg__(self):
        return PolynomialMap(self.source_dim, [-a for a in self])

    def scale(self, c) -> PolynomialMap:
        return PolynomialMap(self.source_dim, [a.scale(c) for a in self])

    def hadamard(self, other: PolynomialMap, cap: int | None = None) -> PolynomialMap:
        self._check(other)
        return PolynomialMap(self.source_dim, [a.mul(b, cap) for a, b in zip(self, other)])

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.components)

    @property
    def degree(self):
        degs = [p.degree for p in self.components if not p.is_zero()]
        return max(degs) if degs else ZERO_DEGREE

    def degrees(self) -> set[int]:
        out = set()
        for p in self.components:
            out |= p.degrees()
        return out

    def evaluate(self, point: Sequence) -> list:
        return [p.evaluate(point) for p in self.components]

    __call__ = evaluate

    def compose(self, inner: PolynomialMap, cap: int | None = None) -> PolynomialMap:
        if self.source_dim != inner.target_dim:
            raise ValueError(
                f"cannot compose: outer takes {self.source_dim} inputs, inner gives {inner.target_dim}"
            )
        return PolynomialMap(inner.source_dim, [p.compose(inner.components, cap) for p in self])

    def left_multiply(self, matrix) -> PolynomialMap:
        """The map x -> M p(x)."""
        rows = _rows_of(matrix)
        out = []
        for row in rows:
            if len(row) != self.target_dim:
                raise ValueError("matrix width does not match map target dimension")
            acc = Polynomial.zero(self.source_dim)
            for c, p in zip(row, self.components):
                if c:
                    acc = acc + p.scale(c)
            out.append(acc)
        return PolynomialMap(self.source_dim, out)

    def homogeneous_part(self, d: int) -> PolynomialMap:
        return PolynomialMap(self.source_dim, [p.homogeneous_part(d) for p in self])

    def truncate(self, cap: int) -> PolynomialMap:
        return PolynomialMap(self.source_dim, [p.truncate(cap) for p in self])

    def above(self, cap: int) -> PolynomialMap:
        return PolynomialMap(self.source_dim, [p.above(cap) for p in self])

    def map_coefficients(self, fn) -> PolynomialMap:
        return PolynomialMap(self.source_dim, [p.map_coefficients(fn) for p in self])

    def first_nonzero(self):
        """(component index, exponents, coefficient) of the first nonzero term, or None."""
        for i, p in enumerate(self.components):
            if p.terms:
                exps, c = p.items()[0]
                return i, exps, c
        return None


def _rows_of(matrix):
    if hasattr(matrix, "row_list"):
        return matrix.row_list()
    return [list(r) for r in matrix]


def _cols_of(matrix, rows):
    if hasattr(matrix, "cols"):
        return matrix.cols
    return len(rows[0]) if rows else 0


# -- module-level operations --------------------------------------------------


def poly_compose(outer: PolynomialMap, inner: PolynomialMap, cap: int | None = None) -> PolynomialMap:
    """``outer`` after ``inner``; with ``cap`` only terms up to that degree are kept."""
    return outer.compose(inner, cap)


def truncate(p: PolynomialMap, degree_cap: int) -> PolynomialMap:
    if degree_cap < 0:
        raise ValueError("degree cap must be non-negative")
    return p.truncate(degree_cap)


def homogeneous_part(p: PolynomialMap, d: int) -> PolynomialMap:
    if d < 0:
        raise ValueError("degree must be non-negative")
    return p.homogeneous_part(d)


def hadamard_cube(v: PolynomialMap, cap: int | None = None) -> PolynomialMap:
    """Componentwise cube."""
    out = []
    for p in v.components:
        sq = p.mul(p, cap)
        out.append(sq.mul(p, cap))
    return PolynomialMap(v.source_dim, out)


def jacobian(p: PolynomialMap) -> list[list[Polynomial]]:
    """Matrix of partial derivatives, entry (i, j) = d p_i / d x_j."""
    return [[comp.derivative(j) for j in range(p.source_dim)] for comp in p.components]


def _cofactor_det(m):
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = None
    for j in range(n):
        if _is_zero(m[0][j]):
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * _cofactor_det(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    if total is None:
        return m[0][0] * 0
    return total


def _is_zero(x) -> bool:
    if isinstance(x, Polynomial):
        return x.is_zero()
    return x == 0


def poly_det(m: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Exact determinant of a square polynomial matrix.

    Fraction-free Bareiss elimination for size >= 4, cofactor expansion below.
    """
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        raise ValueError("empty matrix")
    nv = m[0][0].nvars
    if n < 4:
        return _cofactor_det([list(r) for r in m])
    a = [list(r) for r in m]
    sign = 1
    prev = Polynomial.constant(nv, 1)
    for k in range(n - 1):
        if a[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not a[i][k].is_zero()), None)
            if swap is None:
                return Polynomial.zero(nv)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = pivot * a[i][j] - a[i][k] * a[k][j]
                a[i][j] = num.exact_div(prev) if k else num
            a[i][k] = Polynomial.zero(nv)
        prev = pivot
    det = a[n - 1][n - 1]
    return det if sign == 1 else -det


def scalar_det(m) -> Fraction:
    """Determinant of a square matrix of rationals by Gaussian elimination."""
    a = [[Fraction(x) for x in row] for row in m]
    n = len(a)
    det = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        p = a[k][k]
        det *= p
        for i in range(k + 1, n):
            f = a[i][k] / p
            if f:
                row_k = a[k]
                row_i = a[i]
                for j in range(k + 1, n):
                    row_i[j] -= f * row_k[j]
    return det

