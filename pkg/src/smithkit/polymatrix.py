"""Polynomial matrices: determinants, minors, the d-chain and reduced minors."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Sequence

from .polycore import (
    ContextMismatch, Polynomial, VariableContext, _same_ctx, exact_div, poly_gcd_many,
)

__all__ = [
    "PolyMatrix", "MinorProfile", "ElementaryOp", "PreconditionError",
    "determinant", "minors_of_order", "minor_index", "MinorTable", "rank", "d_chain",
    "reduced_minor_profile", "is_unimodular", "mat_mul", "apply_elementary",
]


class PreconditionError(ValueError):
    """An input violates a documented precondition of an operation."""


class PolyMatrix:
    """Immutable ``l x m`` matrix of polynomials sharing one context."""

    __slots__ = ("ctx", "rows", "nrows", "ncols", "_hash")

    def __init__(self, ctx: VariableContext, rows: Sequence[Sequence]):
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise ValueError("matrix must have at least one row and one column")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("rows have different lengths")
        conv = []
        for r in rows:
            out = []
            for e in r:
                if isinstance(e, Polynomial):
                    if not _same_ctx(ctx, e.ctx):
                        raise ContextMismatch("entry lives in a different context")
                else:
                    e = ctx.const(e)
                out.append(e)
            conv.append(tuple(out))
        self.ctx = ctx
        self.rows = tuple(conv)
        self.nrows = len(conv)
        self.ncols = width
        self._hash = None

    @classmethod
    def identity(cls, ctx, n: int) -> "PolyMatrix":
        return cls(ctx, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, ctx, l: int, m: int) -> "PolyMatrix":
        return cls(ctx, [[0] * m for _ in range(l)])

    @classmethod
    def diag(cls, ctx, entries, l: int | None = None, m: int | None = None) -> "PolyMatrix":
        entries = list(entries)
        l = len(entries) if l is None else l
        m = len(entries) if m is None else m
        rows = [[0] * m for _ in range(l)]
        for k, e in enumerate(entries):
            rows[k][k] = e
        return cls(ctx, rows)

    @property
    def shape(self):
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def entries(self):
        return [e for r in self.rows for e in r]

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(self.ctx, list(zip(*self.rows)))

    def submatrix(self, rows, cols) -> "PolyMatrix":
        return PolyMatrix(self.ctx, [[self.rows[i][j] for j in cols] for i in rows])

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries())

    def map(self, fn) -> "PolyMatrix":
        return PolyMatrix(self.ctx, [[fn(e) for e in r] for r in self.rows])

    def __mul__(self, other):
        if isinstance(other, PolyMatrix):
            return mat_mul(self, other)
        return self.map(lambda e: e * other)

    def __rmul__(self, other):
        return self.map(lambda e: other * e)

    def __add__(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return PolyMatrix(self.ctx, [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __eq__(self, other):
        return (isinstance(other, PolyMatrix) and self.shape == other.shape
                and _same_ctx(self.ctx, other.ctx) and self.rows == other.rows)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.rows)
        return self._hash

    def __repr__(self):
        return "PolyMatrix(%r)" % ([[str(e) for e in r] for r in self.rows],)


def mat_mul(A: PolyMatrix, B: PolyMatrix) -> PolyMatrix:
    if A.ncols != B.nrows:
        raise ValueError("dimension mismatch: %dx%d times %dx%d" % (A.shape + B.shape))
    if not _same_ctx(A.ctx, B.ctx):
        raise ContextMismatch("matrices live in different contexts")
    cols = list(zip(*B.rows))
    zero = A.ctx.zero
    out = []
    for r in A.rows:
        row = []
        for c in cols:
            acc = zero
            for a, b in zip(r, c):
                if a and b:
                    acc = acc + a * b
            row.append(acc)
        out.append(row)
    return PolyMatrix(A.ctx, out)


def determinant(F: PolyMatrix) -> Polynomial:
    """Fraction-free (Bareiss) elimination with exact polynomial division."""
    if F.nrows != F.ncols:
        raise ValueError("determinant of a non-square %dx%d matrix" % F.shape)
    n = F.nrows
    M = [list(r) for r in F.rows]
    sign = 1
    prev = F.ctx.one
    for k in range(n - 1):
        if not M[k][k]:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return F.ctx.zero
        pivot = M[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = pivot * M[i][j] - M[i][k] * M[k][j]
                M[i][j] = exact_div(num, prev) if num else num
            M[i][k] = F.ctx.zero
        prev = pivot
    det = M[n - 1][n - 1]
    return -det if sign < 0 else det


# ---------------------------------------------------------------------------
# minors

def minor_index(l: int, m: int, i: int):
    """Row/column subset pairs of order ``i``: lexicographic, rows outer."""
    return [(rs, cs) for rs in combinations(range(l), i) for cs in combinations(range(m), i)]


class MinorTable:
    """All minors of a matrix, memoized over (row subset, column subset).

    Minors are expanded along the first row of the row subset, so each
    order-``i`` minor reuses order-``i-1`` minors of the trailing rows.
    """

    def __init__(self, F: PolyMatrix):
        self.F = F
        self._memo = {}

    def minor(self, rows: tuple, cols: tuple) -> Polynomial:
        key = (rows, cols)
        memo = self._memo
        if key in memo:
            return memo[key]
        F = self.F
        if len(rows) == 1:
            val = F.rows[rows[0]][cols[0]]
        else:
            top = F.rows[rows[0]]
            rest = rows[1:]
            val = F.ctx.zero
            for k, c in enumerate(cols):
                a = top[c]
                if not a:
                    continue
                sub = self.minor(rest, cols[:k] + cols[k + 1:])
                if not sub:
                    continue
                val = val + a * sub if k % 2 == 0 else val - a * sub
        memo[key] = val
        return val

    def of_order(self, i: int) -> list:
        F = self.F
        if not 1 <= i <= min(F.nrows, F.ncols):
            raise ValueError("minor order %d out of range 1..%d" % (i, min(F.shape)))
        return [self.minor(rs, cs) for rs, cs in minor_index(F.nrows, F.ncols, i)]


def minors_of_order(F: PolyMatrix, i: int) -> list:
    """All ``i x i`` minors in the fixed index convention (see :func:`minor_index`)."""
    return MinorTable(F).of_order(i)


def _chain(table: MinorTable):
    F = table.F
    ctx = F.ctx
    chain = [ctx.one]
    minors = {}
    for i in range(1, min(F.shape) + 1):
        ms = table.of_order(i)
        if not any(ms):
            break
        minors[i] = ms
        chain.append(poly_gcd_many(ms))
    return chain, minors


def d_chain(F: PolyMatrix) -> list:
    """``[d_0, d_1, ..., d_rank]`` with ``d_0 = 1`` and monic gcds of minors."""
    return _chain(MinorTable(F))[0]


def rank(F: PolyMatrix) -> int:
    table = MinorTable(F)
    r = 0
    for i in range(1, min(F.shape) + 1):
        if not any(table.of_order(i)):
            break
        r = i
    return r


@dataclass(frozen=True)
class MinorProfile:
    """Order-``i`` minors, their gcd and the reduced minors."""

    order: int
    minors: tuple
    d: Polynomial
    reduced: tuple
    index: tuple

    @property
    def beta(self) -> int:
        return len(self.minors)


def _profile(F, i, minors, d):
    reduced = tuple(exact_div(a, d) for a in minors)
    for a, b in zip(minors, reduced):
        if d * b != a:
            raise ArithmeticError("reduced minor does not reproduce its minor")
    assert len(minors) == comb(F.nrows, i) * comb(F.ncols, i)
    return MinorProfile(i, tuple(minors), d, reduced, tuple(minor_index(F.nrows, F.ncols, i)))


def reduced_minor_profile(F: PolyMatrix, i: int) -> MinorProfile:
    """Minors of order ``i`` split as ``d_i * b_j``; needs ``1 <= i <= rank``."""
    if i < 1:
        raise ValueError("minor order must be positive")
    table = MinorTable(F)
    chain, minors = _chain(table)
    if i >= len(chain):
        raise PreconditionError(
            "order %d exceeds rank %d; reduced minors are undefined" % (i, len(chain) - 1))
    return _profile(F, i, minors[i], chain[i])


def all_profiles(F: PolyMatrix):
    """d-chain plus a :class:`MinorProfile` for every order up to the rank."""
    chain, minors = _chain(MinorTable(F))
    return chain, [_profile(F, i, minors[i], chain[i]) for i in range(1, len(chain))]


def is_unimodular(U: PolyMatrix) -> bool:
    if U.nrows != U.ncols:
        raise ValueError("unimodularity needs a square matrix")
    det = determinant(U)
    return bool(det) and det.is_constant()


# ---------------------------------------------------------------------------
# elementary operations

@dataclass(frozen=True)
class ElementaryOp:
    """``swap`` exchanges i and j; ``scale`` multiplies i by a nonzero
    constant; ``shear`` adds ``factor`` times j to i.  ``side`` picks rows
    (left multiplication) or columns (right multiplication)."""

    kind: str
    i: int
    j: int = 0
    factor: object = None
    side: str = "row"

    def inverse(self, ctx) -> "ElementaryOp":
        if self.kind == "swap":
            return self
        if self.kind == "scale":
            c = _as_poly(ctx, self.factor).constant_value()
            return ElementaryOp("scale", self.i, self.j, ctx.const(1 / c), self.side)
        return ElementaryOp("shear", self.i, self.j, -_as_poly(ctx, self.factor), self.side)


def _as_poly(ctx, x):
    return x if isinstance(x, Polynomial) else ctx.const(x)


def apply_elementary(F: PolyMatrix, op: ElementaryOp) -> PolyMatrix:
    if op.side not in ("row", "col"):
        raise ValueError("side must be 'row' or 'col'")
    if op.side == "col":
        flipped = ElementaryOp(op.kind, op.i, op.j, op.factor, "row")
        return apply_elementary(F.transpose(), flipped).transpose()
    n = F.nrows
    if not (0 <= op.i < n) or (op.kind != "scale" and not 0 <= op.j < n):
        raise IndexError("elementary operation index out of range")
    rows = [list(r) for r in F.rows]
    if op.kind == "swap":
        rows[op.i], rows[op.j] = rows[op.j], rows[op.i]
    elif op.kind == "scale":
        f = _as_poly(F.ctx, op.factor)
        if not f.is_constant() or f.is_zero():
            raise ValueError("scale factor must be a nonzero constant")
        rows[op.i] = [e * f for e in rows[op.i]]
    elif op.kind == "shear":
        if op.i == op.j:
            raise ValueError("shear needs two distinct indices")
        f = _as_poly(F.ctx, op.factor)
        rows[op.i] = [a + f * b for a, b in zip(rows[op.i], rows[op.j])]
    else:
        raise ValueError("unknown elementary operation %r" % (op.kind,))
    return PolyMatrix(F.ctx, rows)


def elementary_matrix(ctx, n: int, op: ElementaryOp) -> PolyMatrix:
    """The matrix ``E`` with ``apply_elementary(F, op) == E*F`` (rows) or ``F*E`` (cols)."""
    return apply_elementary(PolyMatrix.identity(ctx, n), op)
