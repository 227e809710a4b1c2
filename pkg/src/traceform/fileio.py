"""JSON documents for matrices, metric pairs and trace formulas.

Matrix file::

    {"n": 2, "mode": "rational", "entries": [["1/2", "0"], ["0", "3"]]}

Metric file::

    {"mode": "rational", "g0": [[...4x4...]], "h": [[...4x4...]]}

Scalars are encoded as ``"p/q"`` (rational), a JSON number (real) or
``[re, im]`` (complex).  A CLI output document whose ``result`` is a matrix is
accepted wherever a matrix file is expected.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Tuple

import numpy as np

from . import scalars
from .errors import ParseError
from .matrix import SquareMatrix
from .metric import DIM, MetricTensor, Perturbation
from .traces import TraceFormula


def load_json(path) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {path}: {exc.msg}", f"line {exc.lineno}") from None
    if not isinstance(doc, dict):
        raise ParseError(f"{path}: top level must be an object")
    return doc


def _mode(doc) -> str:
    mode = doc.get("mode")
    if mode not in scalars.MODES:
        raise ParseError(f"mode must be one of {', '.join(scalars.MODES)}, got {mode!r}")
    return mode


def _entries(rows, n: int, mode: str, name: str = "entries") -> list:
    if not isinstance(rows, list) or len(rows) != n:
        raise ParseError(f"{name} must be a list of {n} rows", f"{name}")
    out = []
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != n:
            got = len(row) if isinstance(row, list) else type(row).__name__
            raise ParseError(f"{name} row must have {n} entries, got {got}", f"{name} row {i}")
        decoded = []
        for j, v in enumerate(row):
            try:
                decoded.append(scalars.decode(v, mode))
            except ValueError as exc:
                raise ParseError(str(exc), f"{name} row {i}, column {j}") from None
        out.append(decoded)
    return out


def matrix_from_document(doc: dict) -> SquareMatrix:
    if isinstance(doc.get("result"), dict) and "entries" in doc["result"]:
        doc = doc["result"]
    mode = _mode(doc)
    n = doc.get("n")
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ParseError(f"n must be a positive integer, got {n!r}")
    entries = _entries(doc.get("entries"), n, mode)
    return SquareMatrix(np.array(entries, dtype=object), mode)


def parse_matrix_file(path) -> SquareMatrix:
    return matrix_from_document(load_json(path))


def metric_from_document(doc: dict) -> Tuple[MetricTensor, Perturbation]:
    mode = _mode(doc)
    parsed = {}
    for name in ("g0", "h"):
        rows = _entries(doc.get(name), DIM, mode, name)
        for mu in range(DIM):
            for nu in range(mu + 1, DIM):
                if rows[mu][nu] != rows[nu][mu]:
                    raise ParseError(f"{name} is not symmetric", f"{name} ({mu},{nu})")
        parsed[name] = np.array(rows, dtype=object)
    return MetricTensor(parsed["g0"], mode), Perturbation(parsed["h"], mode)


def parse_metric_file(path) -> Tuple[MetricTensor, Perturbation]:
    return metric_from_document(load_json(path))


def matrix_to_document(m: SquareMatrix) -> dict:
    return {
        "n": m.n,
        "mode": m.mode,
        "entries": [[scalars.encode(v, m.mode) for v in row] for row in m.tolist()],
    }


def formula_to_document(f: TraceFormula) -> dict:
    return {"k": f.k, "terms": f.to_records()}


def formula_from_document(doc: dict) -> TraceFormula:
    return TraceFormula.from_records(doc["k"], doc["terms"])
