"""Command-line front end.

    cubicpair pair-up   --input f.json
    cubicpair pair-down --input F.json [--B B.json --C C.json]
    cubicpair inverse   --input f.json [--max-degree D]
    cubicpair conjugate --input f.json --lambda symbolic|zero|p/q [--max-degree D]
    cubicpair verify    --input doc.json
    cubicpair example   druzkowski15|essen4
    cubicpair jacobian  --input f.json

Input defaults to stdin and output to stdout.  Exit status is 0 on success,
1 when a verification fails and 2 for unusable input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .cubicmaps import CubicLinearMap, jacobian_det_constant, jacobian_determinant
from .fixtures import ALIASES, FIXTURES, get_fixture
from .jsonio import InputError, decode_cubic_map, decode_matrix, dumps, encode, encode_scalar
from .linalg import SingularMatrixError
from .pairing import PairingError, pair_down, pair_down_with, pair_up
from .scalars import ExcludedLambdaError
from .series import SYMBOLIC, SeriesError, TermSeries, parse_lambda_mode, preconjugation_terms
from .verify import verify_report

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2
ENV_MAX_DEGREE = "CUBICMAP_MAX_DEGREE"


class _Failure(Exception):
    """A check failed; carries the message for stderr."""


def _default_degree() -> int:
    raw = os.environ.get(ENV_MAX_DEGREE)
    if raw is None:
        return 7
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"{ENV_MAX_DEGREE} must be an integer, got {raw!r}") from None


def _read_json(path):
    try:
        if path in (None, "-"):
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON in {path or 'stdin'}: {exc}") from exc


def _write(text: str, path):
    if path in (None, "-"):
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc.strerror}") from exc


def _homogeneous_input(args):
    m = decode_cubic_map(_read_json(args.input))
    if isinstance(m, CubicLinearMap) and args.command == "pair-up":
        raise InputError("pair-up needs a cubic-homogeneous map (cubic_part)")
    return m


def _cmd_pair_up(args):
    f = _homogeneous_input(args)
    try:
        p = pair_up(f)
    except PairingError as exc:
        raise _Failure(str(exc)) from exc
    return dumps(p)


def _cmd_pair_down(args):
    F = decode_cubic_map(_read_json(args.input))
    if not isinstance(F, CubicLinearMap):
        raise InputError("pair-down needs a cubic-linear map (A)")
    if (args.B is None) != (args.C is None):
        raise InputError("--B and --C go together")
    try:
        if args.B is None:
            p = pair_down(F)
        else:
            p = pair_down_with(F, decode_matrix(_read_json(args.B)), decode_matrix(_read_json(args.C)))
    except (PairingError, SingularMatrixError) as exc:
        raise InputError(str(exc)) from exc
    return dumps(p)


def _series(args, mode):
    m = decode_cubic_map(_read_json(args.input))
    if args.max_degree < 1:
        raise InputError("--max-degree must be at least 1")
    return dumps(preconjugation_terms(m, mode, args.max_degree))


def _cmd_inverse(args):
    return _series(args, "zero")


def _cmd_conjugate(args):
    try:
        mode = parse_lambda_mode(args.lambda_)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    return _series(args, mode)


def _cmd_verify(args):
    report = verify_report(_read_json(args.input), jacobian=not args.no_jacobian)
    sys.stderr.write(report.text())
    text = json.dumps(report.to_json(), indent=1, ensure_ascii=False) + "\n"
    if not report.ok:
        _write(text, args.output)
        raise _Failure("verification failed")
    return text


def _cmd_example(args):
    try:
        fx = get_fixture(args.name)
    except KeyError as exc:
        raise InputError(exc.args[0]) from exc
    bundle = {
        "name": fx.name,
        "n": fx.f.dim,
        "N": fx.A.rows,
        "A": fx.A,
        "B": fx.B,
        "C": fx.C,
        "f": fx.f,
        "f_inv": fx.f_inv,
        "k": TermSeries.from_map(fx.k, fx.k_degree, SYMBOLIC),
        "k_exact": fx.k_exact,
    }
    if fx.k_inv is not None:
        bundle["k_inv"] = TermSeries.from_map(fx.k_inv, fx.k_degree, SYMBOLIC)
    if fx.D is not None:
        bundle["D"] = fx.D
    return dumps(bundle)


def _cmd_jacobian(args):
    m = decode_cubic_map(_read_json(args.input))
    det = jacobian_determinant(m)
    const, value = jacobian_det_constant(m)
    doc = {"det": encode(det), "constant": const, "value": None if value is None else encode_scalar(value)}
    return json.dumps(doc, indent=1) + "\n"


COMMANDS = {
    "pair-up": _cmd_pair_up,
    "pair-down": _cmd_pair_down,
    "inverse": _cmd_inverse,
    "conjugate": _cmd_conjugate,
    "verify": _cmd_verify,
    "example": _cmd_example,
    "jacobian": _cmd_jacobian,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cubicpair", description="Pair cubic-homogeneous and cubic-linear maps.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, degree=False):
        p.add_argument("--input", "-i", help="input JSON file (default: stdin)")
        p.add_argument("--output", "-o", help="output file (default: stdout)")
        if degree:
            p.add_argument("--max-degree", type=int, default=None, help=f"truncation degree (default 7, or ${ENV_MAX_DEGREE})")

    common(sub.add_parser("pair-up", help="pair a cubic-homogeneous map with a cubic-linear one"))
    p = sub.add_parser("pair-down", help="pair a cubic-linear map with a cubic-homogeneous one")
    common(p)
    p.add_argument("--B", help="JSON matrix B (n x N)")
    p.add_argument("--C", help="JSON matrix C (N x n)")
    common(sub.add_parser("inverse", help="formal inverse series"), degree=True)
    p = sub.add_parser("conjugate", help="pre-conjugation series")
    common(p, degree=True)
    p.add_argument("--lambda", dest="lambda_", default=SYMBOLIC, help="symbolic, zero or a rational p/q")
    p = sub.add_parser("verify", help="check every invariant a document claims")
    common(p)
    p.add_argument("--no-jacobian", action="store_true", help="skip the Jacobian checks")
    p = sub.add_parser("example", help="dump a built-in example bundle")
    p.add_argument("name", choices=sorted(FIXTURES) + sorted(ALIASES))
    p.add_argument("--output", "-o")
    common(sub.add_parser("jacobian", help="Jacobian determinant of a cubic map"))
    return parser


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if getattr(args, "max_degree", 0) is None:
            args.max_degree = _default_degree()
        text = COMMANDS[args.command](args)
        _write(text, args.output)
    except _Failure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (InputError, ExcludedLambdaError, SeriesError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
