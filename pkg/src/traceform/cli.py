"""Command-line entry point: ``traceform <verb> [options]``.

Every invocation prints one JSON document (or a plain table with
``--format table``).  Failures print ``{"error": {...}}`` and exit nonzero:
2 usage, 3 parse, 4 contract.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from pathlib import Path
from typing import Dict, Optional

from . import errors, scalars
from .fileio import (
    formula_to_document,
    matrix_to_document,
    parse_matrix_file,
    parse_metric_file,
)
from .matrix import (
    cayley_hamilton_residual,
    char_poly,
    determinant,
    inverse,
    power_traces,
    resolvent,
)
from .metric import det_ratio, inverse_metric, neumann_error_report
from .traces import symbolic_trace_formula

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_CONTRACT = 4

# error class -> (machine-readable code, CLI error kind, exit status)
ERROR_TABLE: Dict[type, tuple] = {
    errors.UsageError: ("usage", "UsageError", EXIT_USAGE),
    errors.ParseError: ("parse", "ParseError", EXIT_PARSE),
    errors.ShapeError: ("shape", "ParseError", EXIT_PARSE),
    errors.AsymmetricTensor: ("asymmetric-tensor", "ParseError", EXIT_PARSE),
    errors.ModeMismatch: ("mode-mismatch", "ContractError", EXIT_CONTRACT),
    errors.DivisionByZero: ("division-by-zero", "ContractError", EXIT_CONTRACT),
    errors.NegativeTolerance: ("negative-tolerance", "ContractError", EXIT_CONTRACT),
    errors.EmptyInput: ("empty-input", "ContractError", EXIT_CONTRACT),
    errors.SpectrumPoint: ("spectrum-point", "ContractError", EXIT_CONTRACT),
    errors.SingularMatrix: ("singular-matrix", "ContractError", EXIT_CONTRACT),
    errors.DegenerateBackground: ("degenerate-background", "ContractError", EXIT_CONTRACT),
    errors.DegenerateTotalMetric: ("degenerate-total-metric", "ContractError", EXIT_CONTRACT),
}

VERBS = (
    "charpoly",
    "det",
    "traces",
    "ch-residual",
    "resolvent",
    "invert",
    "gen-formula",
    "metric-inverse",
    "det-ratio",
    "neumann-compare",
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise errors.UsageError(message)


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="traceform", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", metavar="VERB", parser_class=_Parser)
    sub.required = True

    def verb(name, help, *, metric=False, tolerance=False, needs_input=True):
        p = sub.add_parser(name, help=help)
        if needs_input:
            p.add_argument(
                "--input", required=True, type=Path,
                help="metric file" if metric else "matrix file",
            )
        if tolerance:
            p.add_argument("--tolerance", type=float, help="zero threshold (float modes only)")
        p.add_argument("--output", type=Path, help="write the document here instead of stdout")
        p.add_argument("--format", choices=("json", "table"), default="json")
        return p

    verb("charpoly", "characteristic coefficients D1..Dn")
    verb("det", "determinant")
    verb("traces", "power traces trace(A^k)").add_argument("--m", type=int, required=True)
    verb("ch-residual", "Cayley-Hamilton residual p(A)")
    verb("resolvent", "(zI - A)^-1", tolerance=True).add_argument("--z", required=True)
    verb("invert", "matrix inverse", tolerance=True)
    verb("gen-formula", "trace formula Dk(T1..Tk)", needs_input=False).add_argument(
        "--k", type=int, required=True
    )
    verb("metric-inverse", "closed-form inverse of g0 + h", metric=True, tolerance=True)
    verb("det-ratio", "det(g0 + h) / det(g0)", metric=True, tolerance=True)
    verb("neumann-compare", "Neumann truncation errors", metric=True, tolerance=True).add_argument(
        "--max-order", type=int, required=True
    )
    return parser


def _parse_point(text: str, mode: str):
    try:
        if mode == scalars.RATIONAL:
            return scalars.decode(text, mode)
        if mode == scalars.REAL:
            return float(text)
        if text.lstrip().startswith("["):
            return scalars.decode(json.loads(text), mode)
        return complex(text.replace(" ", ""))
    except ValueError as exc:
        raise errors.UsageError(f"--z: {exc}") from None


def _tolerance(args, mode: str) -> Optional[float]:
    tol = getattr(args, "tolerance", None)
    if tol is not None and mode == scalars.RATIONAL:
        raise errors.UsageError("--tolerance is only meaningful in float modes")
    return tol


def _enc(v, mode):
    return scalars.encode(v, mode)


def _run_verb(args) -> tuple:
    """Return ``(mode, result)`` for the parsed arguments."""
    v = args.verb
    if v == "gen-formula":
        if args.k < 1:
            raise errors.UsageError("--k must be positive")
        return scalars.RATIONAL, formula_to_document(symbolic_trace_formula(args.k))

    if v in ("metric-inverse", "det-ratio", "neumann-compare"):
        g0, h = parse_metric_file(args.input)
        mode = g0.mode
        tol = _tolerance(args, mode)
        if v == "metric-inverse":
            return mode, matrix_to_document(inverse_metric(g0, h, tol))
        if v == "det-ratio":
            return mode, {"det_ratio": _enc(det_ratio(g0, h, tol), mode)}
        if args.max_order < 0:
            raise errors.UsageError("--max-order must be nonnegative")
        rows = neumann_error_report(g0, h, args.max_order, tol)
        norm_mode = scalars.RATIONAL if mode == scalars.RATIONAL else scalars.REAL
        return mode, {"rows": [{"order": k, "error": _enc(e, norm_mode)} for k, e in rows]}

    A = parse_matrix_file(args.input)
    mode = A.mode
    if v == "charpoly":
        return mode, {"coefficients": [_enc(d, mode) for d in char_poly(A)]}
    if v == "det":
        return mode, {"determinant": _enc(determinant(A), mode)}
    if v == "traces":
        if args.m < 1:
            raise errors.UsageError("--m must be positive")
        return mode, {"traces": [_enc(t, mode) for t in power_traces(A, args.m)]}
    if v == "ch-residual":
        R = cayley_hamilton_residual(A)
        norm_mode = scalars.RATIONAL if mode == scalars.RATIONAL else scalars.REAL
        return mode, {**matrix_to_document(R), "max_norm": _enc(R.max_norm(), norm_mode)}
    if v == "resolvent":
        tol = _tolerance(args, mode)
        z = _parse_point(args.z, mode)
        r = resolvent(A, z, tol)
        return mode, {
            **matrix_to_document(r.value),
            "point": _enc(r.point, mode),
            "denominator": _enc(r.denominator, mode),
        }
    if v == "invert":
        return mode, matrix_to_document(inverse(A, _tolerance(args, mode)))
    raise errors.UsageError(f"unknown verb {v!r}")  # pragma: no cover


def _digest(path: Optional[Path]) -> Optional[dict]:
    if path is None:
        return None
    return {"path": str(path), "sha256": hashlib.sha256(path.read_bytes()).hexdigest()}


def render_table(doc: dict) -> str:
    """Plain-text rendering of an output document."""
    result = doc["result"]
    lines = [f"# {doc['verb']} ({doc['mode']})"]
    if "entries" in result:
        for row in result["entries"]:
            lines.append("  ".join(json.dumps(x) if isinstance(x, list) else str(x) for x in row))
        extra = {k: v for k, v in result.items() if k not in ("n", "mode", "entries")}
        lines += [f"{k}: {v}" for k, v in extra.items()]
    elif "rows" in result:
        lines.append("order  error")
        lines += [f"{r['order']:>5}  {r['error']}" for r in result["rows"]]
    elif "terms" in result:
        lines.append("coefficient  partition")
        lines += [f"{t['coefficient']:>11}  {t['partition']}" for t in result["terms"]]
    else:
        for key, value in result.items():
            if isinstance(value, list):
                lines += [f"{key}[{i}]: {x}" for i, x in enumerate(value, 1)]
            else:
                lines.append(f"{key}: {value}")
    return "\n".join(lines)


def _error_document(exc: Exception) -> tuple:
    for cls in type(exc).__mro__:
        if cls in ERROR_TABLE:
            code, kind, status = ERROR_TABLE[cls]
            break
    else:  # pragma: no cover
        raise exc
    return {"error": {"kind": kind, "code": code, "type": type(exc).__name__, "message": str(exc)}}, status


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    try:
        args = _build_parser().parse_args(argv)
        mode, result = _run_verb(args)
    except errors.TraceFormError as exc:
        doc, status = _error_document(exc)
        print(json.dumps(doc), file=stdout)
        return status

    doc = {
        "verb": args.verb,
        "mode": mode,
        "input": _digest(getattr(args, "input", None)),
        "result": result,
    }
    text = render_table(doc) if args.format == "table" else json.dumps(doc, indent=2)
    if args.output is not None:
        args.output.write_text(text + "\n")
    else:
        print(text, file=stdout)
    return EXIT_OK


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":  # pragma: no cover
    main()
