"""JSON / CSV / text encodings for point sets, ideals, matrices and sequences.

Matrix JSON::

    {"n": 2, "index": [[0,0],[0,1]], "cols": "index", "entries": [["1","0"],["1","1"]]}

``cols`` is ``"index"`` when columns share the row labels, or the column
count l + 1 for the Stirling / Vandermonde matrices.  Entries are always
strings: decimal integers, ``p/q`` rationals or canonical polynomial text.

Sequence JSON::

    {"n": 2, "values": [{"index": [0,0], "value": "1"}, ...]}
"""
from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Mapping

from .mindex import MultiIndex
from .pascal import ExactMatrix
from .parser import parse_polynomial
from .pointset import MonomialIdeal, PointSet
from .poly import format_coeff


def entry_text(x) -> str:
    if isinstance(x, (int, Fraction)):
        return format_coeff(x)
    return str(x)


def parse_points(data) -> list:
    """Accept a JSON string or an already-decoded list of integer lists."""
    if isinstance(data, str):
        data = json.loads(data)
    if not isinstance(data, list) or not all(
            isinstance(p, list) and p and all(isinstance(v, int) and v >= 0 for v in p) for p in data):
        raise ValueError("expected a JSON array of non-negative integer arrays")
    return [MultiIndex(p) for p in data]


def pointset_from_json(data, n: int = None) -> PointSet:
    return PointSet(parse_points(data), n=n)


def pointset_to_json(R: PointSet) -> list:
    return R.to_lists()


def ideal_from_json(data, n: int = None) -> MonomialIdeal:
    """Bare generator array, or ``{"n": .., "generators": [...]}``."""
    if isinstance(data, str):
        data = json.loads(data)
    if isinstance(data, dict):
        n = int(data["n"]) if "n" in data else n
        data = data["generators"]
    return MonomialIdeal(parse_points(data), n=n)


def ideal_to_json(J: MonomialIdeal) -> dict:
    return {"n": J.n, "generators": [list(g) for g in J.generators]}


def _label(x) -> str:
    return ",".join(str(v) for v in x) if isinstance(x, tuple) else str(x)


def matrix_to_json(m: ExactMatrix) -> dict:
    square = m.row_labels == m.col_labels
    first = m.row_labels[0] if m.row_labels else ()
    return {
        "n": len(first) if isinstance(first, tuple) else None,
        "index": [list(k) if isinstance(k, tuple) else k for k in m.row_labels],
        "cols": "index" if square else m.ncols,
        "entries": [[entry_text(x) for x in r] for r in m.rows],
    }


def matrix_from_json(data, nvars: int = None) -> ExactMatrix:
    """Inverse of :func:`matrix_to_json`.

    Integer and rational entries are read directly; anything else is
    parsed as a polynomial in ``nvars`` variables (default n + 1).
    """
    if isinstance(data, str):
        data = json.loads(data)
    index = [MultiIndex(k) if isinstance(k, list) else k for k in data["index"]]
    cols = index if data["cols"] == "index" else list(range(int(data["cols"])))
    if nvars is None and data.get("n"):
        nvars = int(data["n"]) + 1
    return ExactMatrix([[_read_entry(x, nvars) for x in r] for r in data["entries"]], index, cols)


def _read_entry(text: str, nvars):
    try:
        v = Fraction(text)
    except ValueError:
        if nvars is None:
            raise
        return parse_polynomial(text, nvars)
    return v.numerator if v.denominator == 1 else v


def matrix_to_csv(m: ExactMatrix) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([_label(c) for c in m.col_labels])
    for r in m.rows:
        w.writerow([entry_text(x) for x in r])
    return buf.getvalue()


def matrix_to_text(m: ExactMatrix) -> str:
    cells = [[entry_text(x) for x in r] for r in m.rows]
    widths = [max((len(r[j]) for r in cells), default=1) for j in range(m.ncols)]
    return "".join(" ".join(c.rjust(w) for c, w in zip(r, widths)) + "\n" for r in cells)


def format_matrix(m: ExactMatrix, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(matrix_to_json(m)) + "\n"
    if fmt == "csv":
        return matrix_to_csv(m)
    if fmt == "text":
        return matrix_to_text(m)
    raise ValueError(f"unknown format {fmt!r}")


def sequence_from_json(data, R: PointSet = None) -> dict:
    """Read a sequence file; values are integers, rationals or polynomial text."""
    if isinstance(data, str):
        data = json.loads(data)
    n = int(data["n"])
    out = {}
    for item in data["values"]:
        k = MultiIndex(item["index"])
        if k.n != n:
            raise ValueError(f"index {item['index']} does not have dimension {n}")
        v = item["value"]
        out[k] = v if isinstance(v, int) else _read_entry(str(v), n + 1)
    return out


def sequence_to_json(seq: Mapping, n: int, order=None) -> dict:
    keys = order if order is not None else sorted(seq)
    return {"n": n, "values": [{"index": list(k), "value": entry_text(seq[k])} for k in keys]}
