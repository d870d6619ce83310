"""Deterministic text rendering of polynomials and matrices."""

from __future__ import annotations

from fractions import Fraction

from ..polycore import Polynomial, Residue


def _monomial(names, m) -> str:
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append("%s^%d" % (name, e))
    return "*".join(parts)


def _scalar(c) -> str:
    if isinstance(c, Fraction):
        if c.denominator == 1:
            return str(c.numerator)
        return "%d/%d" % (c.numerator, c.denominator)
    if isinstance(c, Residue):
        return str(c.value)
    return str(c)


def format_polynomial(f: Polynomial) -> str:
    """Lex-descending terms, ``a/b`` rationals, ``*`` inside monomials."""
    if f.is_zero():
        return "0"
    out = []
    for m, c in f.terms("lex"):
        negative = isinstance(c, Fraction) and c < 0
        mag = -c if negative else c
        mono = _monomial(f.ctx.names, m)
        if not mono:
            body = _scalar(mag)
        elif mag == 1:
            body = mono
        else:
            body = "%s*%s" % (_scalar(mag), mono)
        if not out:
            out.append("-" + body if negative else body)
        else:
            out.append(("- " if negative else "+ ") + body)
    return " ".join(out)


def format_matrix(F) -> str:
    rows = [[format_polynomial(e) for e in row] for row in F.rows]
    return "\n".join("; ".join(row) for row in rows)


def format_scalar(c) -> str:
    return _scalar(c)
