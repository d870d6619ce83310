"""Smith forms from the d-chain, per-prime exponents, and the constructive
Smith normal form over K[x1]."""

from __future__ import annotations

from dataclasses import dataclass

from ..polycore import Polynomial, divides, exact_div, poly_divrem
from ..polymatrix import PolyMatrix, PreconditionError, d_chain, is_unimodular, mat_mul
from .factor import is_irreducible

__all__ = [
    "SmithForm", "PrimeSmithProfile", "TransformPair", "SmithInvariantError",
    "smith_candidate", "smith_wrt_prime", "smith_univariate", "p_valuation",
]


class SmithInvariantError(ArithmeticError):
    """A Smith-form invariant failed; this indicates an internal bug."""


@dataclass(frozen=True)
class SmithForm:
    """``diag(Phi_1..Phi_r)`` padded with zeros to ``nrows x ncols``."""

    nrows: int
    ncols: int
    diagonal: tuple

    @property
    def rank(self) -> int:
        return len(self.diagonal)

    def to_matrix(self, ctx) -> PolyMatrix:
        return PolyMatrix.diag(ctx, self.diagonal, self.nrows, self.ncols)

    def check(self, chain=None):
        diag = self.diagonal
        for a, b in zip(diag, diag[1:]):
            if not divides(a, b):
                raise SmithInvariantError("divisibility chain broken: %s does not divide %s" % (a, b))
        if chain is not None:
            for i, phi in enumerate(diag, start=1):
                if phi * chain[i - 1] != chain[i]:
                    raise SmithInvariantError("Phi_%d * d_%d != d_%d" % (i, i - 1, i))
        return self


@dataclass(frozen=True)
class PrimeSmithProfile:
    prime: Polynomial
    exponents: tuple


@dataclass(frozen=True)
class TransformPair:
    U: PolyMatrix
    V: PolyMatrix


def smith_candidate(F: PolyMatrix) -> SmithForm:
    """``Phi_i = d_i / d_{i-1}`` for ``i = 1..rank``."""
    chain = d_chain(F)
    diag = []
    for prev, cur in zip(chain, chain[1:]):
        try:
            diag.append(exact_div(cur, prev))
        except ArithmeticError as exc:
            raise SmithInvariantError("d_{i-1} does not divide d_i") from exc
    return SmithForm(F.nrows, F.ncols, tuple(diag)).check(chain)


def p_valuation(f: Polynomial, p: Polynomial) -> int:
    """Largest ``k`` with ``p**k`` dividing ``f`` (``f`` nonzero)."""
    if f.is_zero():
        raise ValueError("valuation of zero is infinite")
    if p.is_constant():
        raise ValueError("valuation at a unit is undefined")
    k = 0
    while True:
        q, r = poly_divrem(f, [p])
        if r:
            return k
        f = q[0]
        k += 1


def smith_wrt_prime(F: PolyMatrix, p: Polynomial, check_irreducible: bool = True) -> PrimeSmithProfile:
    """Exponents ``s_1 <= ... <= s_l`` of ``p`` along the Smith diagonal.

    Computed as successive differences of the p-adic valuations of the
    d-chain; requires a square matrix with nonzero determinant in K[x1].
    """
    if F.nrows != F.ncols:
        raise PreconditionError("smith_wrt_prime needs a square matrix")
    if not p.is_univariate_in(0) or p.is_constant():
        raise PreconditionError("prime must be a non-constant polynomial in %s" % F.ctx.names[0])
    if check_irreducible and not is_irreducible(p):
        raise PreconditionError("%s is not irreducible" % p)
    chain = d_chain(F)
    if len(chain) - 1 < F.nrows:
        raise PreconditionError("determinant is zero")
    if not chain[-1].is_univariate_in(0):
        raise PreconditionError("determinant is not a polynomial in %s alone" % F.ctx.names[0])
    vals = [p_valuation(d, p) for d in chain]
    exps = tuple(b - a for a, b in zip(vals, vals[1:]))
    if any(b < a for a, b in zip(exps, exps[1:])):
        raise SmithInvariantError("per-prime exponents are not nondecreasing")
    return PrimeSmithProfile(p, exps)


# ---------------------------------------------------------------------------
# constructive Smith normal form over K[x1]

def _deg(e):
    return e.degree(0)


def smith_univariate(A: PolyMatrix):
    """Return ``(TransformPair(U, V), SmithForm)`` with ``U*A*V`` the Smith matrix.

    Pivot-to-corner Euclidean reduction: bring a minimal-degree entry to the
    pivot, clear its row and column by division, and when the pivot fails to
    divide the trailing block, fold an offending row into the pivot row.
    """
    ctx = A.ctx
    if not all(e.is_univariate_in(0) for e in A.entries()):
        raise PreconditionError("smith_univariate needs entries in %s only" % ctx.names[0])
    l, m = A.shape
    S = [list(r) for r in A.rows]
    U = [list(r) for r in PolyMatrix.identity(ctx, l).rows]
    V = [list(r) for r in PolyMatrix.identity(ctx, m).rows]

    def row_swap(i, j):
        S[i], S[j] = S[j], S[i]
        U[i], U[j] = U[j], U[i]

    def col_swap(i, j):
        for M in (S, V):
            for r in M:
                r[i], r[j] = r[j], r[i]

    def row_shear(i, j, q):  # row_i -= q * row_j
        S[i] = [a - q * b for a, b in zip(S[i], S[j])]
        U[i] = [a - q * b for a, b in zip(U[i], U[j])]

    def col_shear(i, j, q):  # col_i -= q * col_j
        for M in (S, V):
            for r in M:
                r[i] = r[i] - q * r[j]

    diag = []
    for t in range(min(l, m)):
        while True:
            best = None
            for i in range(t, l):
                for j in range(t, m):
                    e = S[i][j]
                    if e and (best is None or _deg(e) < best[0]):
                        best = (_deg(e), i, j)
            if best is None:
                break
            _, i, j = best
            if i != t:
                row_swap(i, t)
            if j != t:
                col_swap(j, t)
            pivot = S[t][t]
            clean = True
            for i in range(t + 1, l):
                if S[i][t]:
                    q, r = poly_divrem(S[i][t], [pivot])
                    row_shear(i, t, q[0])
                    clean = clean and not r
            for j in range(t + 1, m):
                if S[t][j]:
                    q, r = poly_divrem(S[t][j], [pivot])
                    col_shear(j, t, q[0])
                    clean = clean and not r
            if not clean:
                continue
            bad = next((i for i in range(t + 1, l) for j in range(t + 1, m)
                        if S[i][j] and poly_divrem(S[i][j], [pivot])[1]), None)
            if bad is None:
                break
            # row_t += row_bad puts a non-multiple of the pivot into row t
            row_shear(t, bad, -ctx.one)
        if best is None:
            break
        lc = S[t][t].leading_coeff()
        if lc != 1:
            inv = 1 / lc
            S[t] = [e.scale(inv) for e in S[t]]
            U[t] = [e.scale(inv) for e in U[t]]
        diag.append(S[t][t])

    Um, Vm = PolyMatrix(ctx, U), PolyMatrix(ctx, V)
    form = SmithForm(l, m, tuple(diag)).check()
    if mat_mul(mat_mul(Um, A), Vm) != form.to_matrix(ctx):
        raise SmithInvariantError("U*A*V does not equal the Smith matrix")
    if not (is_unimodular(Um) and is_unimodular(Vm)):
        raise SmithInvariantError("transformation is not unimodular")
    return TransformPair(Um, Vm), form

