"""Invariant reports for pairing documents and fixture bundles.

A document may carry any of: the pairing matrices ``A``, ``B``, ``C``; the
map ``f``; a claimed inverse ``f_inv``; a conjugation series ``k`` (with
``k_exact`` set when it is a polynomial rather than a truncation) and its
inverse ``k_inv``.  Every present piece gets checked; failures are report
lines, never exceptions.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cubicmaps import CubicHomogeneousMap, jacobian_det_constant
from .jsonio import InputError, decode_cubic_map, decode_matrix, decode_polymap, decode_series, encode_scalar
from .pairing import CheckResult, Pairing, check_pairing
from .polyring import PolynomialMap
from .series import (
    certify_polynomial_inverse,
    truncation_certified,
    verify_conjugation,
)

__all__ = ["Report", "verify_report"]


@dataclass
class Report:
    checks: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, name: str, ok: bool, witness: str = ""):
        self.checks.append(CheckResult(name, ok, witness))

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "checks": [{"name": c.name, "ok": c.ok, "witness": c.witness} for c in self.checks],
        }

    def text(self) -> str:
        lines = [c.line() for c in self.checks]
        lines.append(f"{sum(c.ok for c in self.checks)}/{len(self.checks)} checks passed")
        return "\n".join(lines) + "\n"


def _witness(diff: PolynomialMap) -> str:
    hit = diff.first_nonzero()
    if hit is None:
        return ""
    i, exps, c = hit
    return f"component {i}, monomial {list(exps)}, coefficient {encode_scalar(c)}"


def verify_report(doc: dict, jacobian: bool = True) -> Report:
    """Check everything the document claims.  Raises InputError only for unparseable input."""
    if not isinstance(doc, dict):
        raise InputError("expected a JSON object")
    report = Report()
    f = decode_cubic_map(doc["f"]) if "f" in doc else None
    if f is not None and not isinstance(f, CubicHomogeneousMap):
        raise InputError("f must be a cubic-homogeneous map")
    if all(k in doc for k in ("A", "B", "C")):
        if f is None:
            raise InputError("pairing document needs f")
        p = Pairing(decode_matrix(doc["A"]), decode_matrix(doc["B"]), decode_matrix(doc["C"]), f)
        if p.A.rows != p.A.cols:
            raise InputError("A must be square")
        report.checks.extend(check_pairing(p, jacobian=jacobian, kernel_shift=True))
    if f is None:
        if not report.checks:
            raise InputError("nothing to verify: document has neither a pairing nor a map")
        return report
    if jacobian:
        const, value = jacobian_det_constant(f)
        report.add("jacobian: det f'(x) is constant", const, "" if const else "det f' depends on x")
    if "f_inv" in doc:
        f_inv = decode_polymap(doc["f_inv"])
        ok = certify_polynomial_inverse(f, f_inv)
        report.add("inverse: f(f_inv(y)) = y and f_inv(f(x)) = x", ok, "" if ok else "composition differs from identity")
    if "k" in doc:
        k = decode_series(doc["k"])
        exact = bool(doc.get("k_exact", False))
        residual = verify_conjugation(f, k, k.lambda_mode, None if exact else k.max_degree)
        scope = "exact" if exact else f"up to degree {k.max_degree}"
        report.add(f"conjugation: lambda f(k(x)) = k(lambda x), {scope}", residual.is_zero(), _witness(residual))
        if "k_inv" in doc:
            k_inv = decode_series(doc["k_inv"])
            if exact:
                ok = certify_polynomial_inverse(k.as_map(), k_inv.as_map())
            else:
                ok = truncation_certified(k.as_map(), k_inv.as_map(), k.max_degree)
            report.add(f"conjugation inverse: k(k_inv(y)) = y, {scope}", ok, "" if ok else "composition differs from identity")
    return report
