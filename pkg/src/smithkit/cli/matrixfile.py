"""Line-oriented matrix documents.

::

    # comments and blank lines are ignored
    field: QQ            (or ``field: GF 7``; optional, defaults to QQ)
    vars: x1 x2 x3
    dims: 2 3
    x1; x2; 0
    1; x1*x3; 3/2

Header lines come first; then ``l`` rows of ``m`` semicolon-separated
expressions.
"""

from __future__ import annotations

import io
import os
from dataclasses import dataclass

from ..polycore import GF, QQ, VariableContext
from ..polymatrix import PolyMatrix
from .parser import ParseError, parse_polynomial
from .printer import format_polynomial

__all__ = ["MatrixDocument", "parse_matrix_file", "parse_matrix_text", "format_matrix_document",
           "parse_field"]


@dataclass(frozen=True)
class MatrixDocument:
    field: str
    variables: tuple
    dims: tuple
    entries: tuple      # raw entry text, row-major

    @property
    def ctx(self) -> VariableContext:
        return VariableContext(self.variables, parse_field(self.field))


def parse_field(spec: str, line: int = 1, column: int = 1):
    parts = spec.replace("(", " ").replace(")", " ").split()
    if parts == ["QQ"]:
        return QQ
    if len(parts) == 2 and parts[0] == "GF":
        try:
            p = int(parts[1])
        except ValueError:
            raise ParseError("GF modulus must be an integer, got %r" % parts[1], line, column) from None
        try:
            return GF(p)
        except ValueError as exc:
            raise ParseError(str(exc), line, column) from None
    raise ParseError("unknown field %r (expected QQ or GF p)" % spec.strip(), line, column)


def _canonical_field(spec: str) -> str:
    f = parse_field(spec)
    return "QQ" if f is QQ else "GF %d" % f.characteristic


def parse_matrix_text(text: str):
    """Parse a document; returns ``(MatrixDocument, PolyMatrix)``."""
    header = {}
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        if not rows and ":" in line:
            key, _, value = line.partition(":")
            key = key.strip()
            if key not in ("field", "vars", "dims"):
                raise ParseError("unknown header %r" % key, lineno, 1)
            if key in header:
                raise ParseError("duplicate header %r" % key, lineno, 1)
            header[key] = (value, lineno, len(key) + 2)
            continue
        rows.append((lineno, line))

    if "vars" not in header:
        raise ParseError("missing 'vars:' header", 1, 1)
    if "dims" not in header:
        raise ParseError("missing 'dims:' header", 1, 1)
    field_text, fline, fcol = header.get("field", ("QQ", 1, 1))
    field = parse_field(field_text, fline, fcol)
    vtext, vline, vcol = header["vars"]
    names = tuple(vtext.split())
    if not names:
        raise ParseError("no variables declared", vline, vcol)
    for nm in names:
        if not nm.isidentifier():
            raise ParseError("bad variable name %r" % nm, vline, vcol)
    if len(set(names)) != len(names):
        raise ParseError("duplicate variable names", vline, vcol)
    dtext, dline, dcol = header["dims"]
    try:
        l, m = (int(t) for t in dtext.split())
    except ValueError:
        raise ParseError("dims must be two integers", dline, dcol) from None
    if l < 1 or m < 1:
        raise ParseError("dims must be positive", dline, dcol)

    cells = []
    for lineno, line in rows:
        col = 1
        row = []
        for piece in line.split(";"):
            row.append((piece, lineno, col))
            col += len(piece) + 1
        cells.append(row)
    found = sum(len(r) for r in cells)
    if found != l * m:
        raise ParseError("expected %d entries, found %d" % (l * m, found),
                         rows[-1][0] if rows else dline, 1)
    for row in cells:
        if len(row) != m:
            raise ParseError("expected %d entries in row, found %d" % (m, len(row)), row[0][1], 1)

    ctx = VariableContext(names, field)
    entries = []
    polys = []
    for row in cells:
        prow = []
        for piece, lineno, col in row:
            entries.append(piece.strip())
            prow.append(parse_polynomial(piece, ctx, lineno, col))
        polys.append(prow)
    doc = MatrixDocument(_canonical_field(field_text), names, (l, m), tuple(entries))
    return doc, PolyMatrix(ctx, polys)


def parse_matrix_file(source):
    """Read a document from a path or a text stream."""
    if isinstance(source, (str, os.PathLike)):
        with open(source, encoding="utf-8") as fh:
            text = fh.read()
    elif isinstance(source, io.IOBase) or hasattr(source, "read"):
        text = source.read()
    else:
        raise TypeError("expected a path or a text stream")
    return parse_matrix_text(text)


def format_matrix_document(F: PolyMatrix) -> str:
    field = F.ctx.field
    spec = "QQ" if field is QQ or field == QQ else "GF %d" % field.characteristic
    lines = [
        "field: %s" % spec,
        "vars: %s" % " ".join(F.ctx.names),
        "dims: %d %d" % F.shape,
    ]
    for row in F.rows:
        lines.append("; ".join(format_polynomial(e) for e in row))
    return "\n".join(lines) + "\n"
