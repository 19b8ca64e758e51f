"""JSON encodings for scalars, polynomials, matrices, maps, pairings and series.

Output is canonical: terms in the polynomial ring's canonical order, scalars
in lowest terms, keys in a fixed order.  Encoding the same object twice gives
the same bytes.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .cubicmaps import CubicHomogeneousMap, CubicLinearMap
from .linalg import RationalMatrix
from .pairing import Pairing
from .polyring import Polynomial, PolynomialMap
from .scalars import LambdaPoly, LambdaRational, format_rational, parse_rational
from .series import TermSeries, format_lambda_mode, parse_lambda_mode

__all__ = [
    "InputError",
    "decode_cubic_map",
    "decode_matrix",
    "decode_pairing",
    "decode_polymap",
    "decode_polynomial",
    "decode_scalar",
    "decode_series",
    "dumps",
    "encode",
    "encode_scalar",
]


class InputError(ValueError):
    """Malformed or inconsistent JSON input."""


def encode_scalar(c):
    if isinstance(c, LambdaRational):
        if c.is_rational():
            return format_rational(c.to_fraction())
        return {"num": [format_rational(x) for x in c.num.coeffs], "den": [format_rational(x) for x in c.den.coeffs]}
    return format_rational(c)


def decode_scalar(obj):
    if isinstance(obj, dict):
        try:
            num = LambdaPoly([parse_rational(x) for x in obj["num"]])
            den = LambdaPoly([parse_rational(x) for x in obj.get("den", ["1"])])
        except (KeyError, ValueError, TypeError, ZeroDivisionError) as exc:
            raise InputError(f"bad Q(lambda) scalar {obj!r}") from exc
        if den.is_zero():
            raise InputError("zero denominator in Q(lambda) scalar")
        return LambdaRational(num, den)
    try:
        return parse_rational(obj)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise InputError(f"bad rational {obj!r}") from exc


def encode_polynomial(p: Polynomial) -> dict:
    return {"vars": p.nvars, "terms": [{"exp": list(e), "coeff": encode_scalar(c)} for e, c in p.items()]}


def decode_polynomial(obj) -> Polynomial:
    try:
        n = int(obj["vars"])
        terms = [(tuple(int(x) for x in t["exp"]), decode_scalar(t["coeff"])) for t in obj["terms"]]
        return Polynomial(n, terms)
    except InputError:
        raise
    except (KeyError, ValueError, TypeError) as exc:
        raise InputError(f"bad polynomial: {exc}") from exc


def encode_polymap(m: PolynomialMap) -> dict:
    return {"source": m.source_dim, "target": m.target_dim, "components": [encode_polynomial(p) for p in m]}


def decode_polymap(obj) -> PolynomialMap:
    try:
        source, target = int(obj["source"]), int(obj["target"])
        comps = [decode_polynomial(c) for c in obj["components"]]
    except InputError:
        raise
    except (KeyError, ValueError, TypeError) as exc:
        raise InputError(f"bad polynomial map: {exc}") from exc
    if len(comps) != target or any(c.nvars != source for c in comps):
        raise InputError("polynomial map dimensions do not match its components")
    return PolynomialMap(source, comps)


def encode_matrix(m: RationalMatrix) -> dict:
    return {"rows": m.rows, "cols": m.cols, "entries": [[format_rational(x) for x in r] for r in m.entries]}


def decode_matrix(obj) -> RationalMatrix:
    try:
        rows, cols = int(obj["rows"]), int(obj["cols"])
        entries = [[parse_rational(x) for x in r] for r in obj["entries"]]
    except (KeyError, ValueError, TypeError, ZeroDivisionError) as exc:
        raise InputError(f"bad matrix: {exc}") from exc
    if len(entries) != rows or any(len(r) != cols for r in entries):
        raise InputError(f"matrix entries do not match the declared {rows}x{cols} shape")
    return RationalMatrix(entries, cols=cols)


def encode_cubic_map(m) -> dict:
    if isinstance(m, CubicLinearMap):
        return {"dim": m.dim, "A": encode_matrix(m.a)}
    return {"dim": m.dim, "cubic_part": encode_polymap(m.cubic_part)}


def decode_cubic_map(obj):
    """CubicLinearMap if the document has "A", CubicHomogeneousMap if it has "cubic_part"."""
    if not isinstance(obj, dict):
        raise InputError("expected a JSON object for a cubic map")
    if "A" in obj:
        a = decode_matrix(obj["A"])
        if a.rows != a.cols or ("dim" in obj and obj["dim"] != a.rows):
            raise InputError("A must be square and match dim")
        return CubicLinearMap(a)
    if "cubic_part" in obj:
        part = decode_polymap(obj["cubic_part"])
        if "dim" in obj and obj["dim"] != part.source_dim:
            raise InputError("cubic part does not match dim")
        try:
            return CubicHomogeneousMap(part)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
    raise InputError('cubic map needs either "A" or "cubic_part"')


def encode_pairing(p: Pairing) -> dict:
    return {
        "n": p.n,
        "N": p.N,
        "A": encode_matrix(p.A),
        "B": encode_matrix(p.B),
        "C": encode_matrix(p.C),
        "f": encode_cubic_map(p.f),
    }


def decode_pairing(obj) -> Pairing:
    try:
        a, b, c = decode_matrix(obj["A"]), decode_matrix(obj["B"]), decode_matrix(obj["C"])
        f = decode_cubic_map(obj["f"])
    except KeyError as exc:
        raise InputError(f"pairing document is missing {exc}") from exc
    if not isinstance(f, CubicHomogeneousMap):
        raise InputError("pairing f must be a cubic-homogeneous map")
    if obj.get("n", b.rows) != b.rows or obj.get("N", a.rows) != a.rows:
        raise InputError("declared n/N do not match the matrices")
    return Pairing(a, b, c, f)


def encode_series(s: TermSeries) -> dict:
    return {
        "dim": s.dim,
        "max_degree": s.max_degree,
        "lambda": format_lambda_mode(s.lambda_mode),
        "terms": [encode_polymap(t) for t in s.terms],
    }


def decode_series(obj) -> TermSeries:
    try:
        terms = tuple(decode_polymap(t) for t in obj["terms"])
        mode = parse_lambda_mode(obj.get("lambda", "zero"))
        return TermSeries(int(obj["dim"]), int(obj["max_degree"]), terms, mode)
    except InputError:
        raise
    except (KeyError, ValueError, TypeError) as exc:
        raise InputError(f"bad term series: {exc}") from exc


def encode(obj):
    """Encode any supported object."""
    if obj is None or isinstance(obj, (str, bool, float)):
        return obj
    if isinstance(obj, TermSeries):
        return encode_series(obj)
    if isinstance(obj, Pairing):
        return encode_pairing(obj)
    if isinstance(obj, (CubicLinearMap, CubicHomogeneousMap)):
        return encode_cubic_map(obj)
    if isinstance(obj, PolynomialMap):
        return encode_polymap(obj)
    if isinstance(obj, Polynomial):
        return encode_polynomial(obj)
    if isinstance(obj, RationalMatrix):
        return encode_matrix(obj)
    if isinstance(obj, (int, Fraction, LambdaRational)):
        return encode_scalar(obj)
    if isinstance(obj, dict):
        return {k: encode(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [encode(v) for v in obj]
    raise TypeError(f"cannot encode {type(obj).__name__}")


def dumps(obj) -> str:
    return json.dumps(encode(obj), indent=1, ensure_ascii=False) + "\n"
