"""graph6 interchange and CSV/JSON report writers."""

from __future__ import annotations

import csv
import io
import json
import math
from typing import Any, Iterable, Mapping, TextIO

from .graph import MAX_VERTICES, Graph

__all__ = [
    "Graph6Error",
    "graph6_encode",
    "graph6_decode",
    "format_value",
    "write_report",
    "report_text",
]

_HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    pass


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(63 + n)
    if n <= 258047:
        return chr(126) + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))
    raise Graph6Error(f"graph6 cannot encode n = {n}")


def graph6_encode(g: Graph) -> str:
    """graph6 text (no header, no newline) for ``g``.

    Bits are the upper triangle taken column by column:
    x(0,1), x(0,2), x(1,2), x(0,3), ...
    """
    n = g.n
    out = [_encode_n(n)]
    acc = 0
    nbits = 0
    for j in range(1, n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def graph6_decode(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    if not s:
        raise Graph6Error("empty graph6 string")
    vals = []
    for ch in s:
        c = ord(ch)
        if not 63 <= c <= 126:
            raise Graph6Error(f"byte {c} outside the printable graph6 range 63..126")
        vals.append(c - 63)
    if vals[0] < 63:
        n, body = vals[0], vals[1:]
    else:
        if len(vals) < 4 or vals[1] == 63:
            raise Graph6Error("malformed graph6 length field")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = vals[4:]
        if n < 63:
            raise Graph6Error("non-minimal graph6 length field")
    if not 1 <= n <= MAX_VERTICES:
        raise Graph6Error(f"graph6 vertex count {n} not supported")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise Graph6Error(f"expected {(nbits + 5) // 6} data bytes, got {len(body)}")
    pad = len(body) * 6 - nbits
    if pad and body[-1] & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


def format_value(x: Any) -> str:
    """Fixed 12-decimal text for floats, plain text for everything else."""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, float):
        if math.isnan(x):
            return "nan"
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        s = f"{x:.12f}"
        return "0.000000000000" if s == "-0.000000000000" else s
    if x is None:
        return ""
    return str(x)


def _json_value(x: Any) -> Any:
    if isinstance(x, float):
        if not math.isfinite(x):
            return format_value(x)
        return float(format_value(x))
    return x


def write_report(rows: Iterable[Mapping[str, Any]], fmt: str, sink: TextIO, columns: list[str] | None = None) -> None:
    """Write report rows in input order; all rows must share one column set."""
    rows = list(rows)
    if columns is None:
        columns = list(rows[0]) if rows else []
    for r in rows:
        if list(r) != columns:
            raise ValueError(f"row columns {list(r)} differ from report columns {columns}")
    if fmt == "csv":
        w = csv.writer(sink, lineterminator="\n")
        w.writerow(columns)
        for r in rows:
            w.writerow([format_value(r[c]) for c in columns])
    elif fmt == "json":
        payload = [{c: _json_value(r[c]) for c in columns} for r in rows]
        sink.write(json.dumps(payload, indent=1))
        sink.write("\n")
    else:
        raise ValueError(f"unknown report format {fmt!r}")


def report_text(rows: Iterable[Mapping[str, Any]], fmt: str = "csv", columns: list[str] | None = None) -> str:
    buf = io.StringIO()
    write_report(rows, fmt, buf, columns)
    return buf.getvalue()
