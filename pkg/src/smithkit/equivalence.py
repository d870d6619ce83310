"""Deciding whether a polynomial matrix is equivalent to its Smith form.

For a matrix of rank ``r`` whose ``d_r`` lies in K[x1], equivalence to the
Smith form holds exactly when, for every order ``i <= r``, the reduced
``i x i`` minors generate the unit ideal.  This module runs that test,
provides necessary-condition checkers used as oracles, and builds seeded
instances with known answers.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .ideal import groebner, is_unit_ideal, unit_cofactors
from .polycore import Polynomial, PrimeField, VariableContext, poly_gcd
from .polymatrix import (
    ElementaryOp, MinorTable, PolyMatrix, all_profiles, apply_elementary, determinant,
    minor_index,
)
from .smith import SmithForm, smith_candidate

__all__ = [
    "EQUIVALENT", "NOT_EQUIVALENT", "PRECONDITION_VIOLATED",
    "OrderRecord", "EquivalenceReport", "decide",
    "InvariantReport", "check_equivalence_invariants",
    "verify_cauchy_binet", "MultiplicativityReport", "verify_multiplicativity",
    "random_unimodular", "random_smith_instance", "random_polynomial",
]

EQUIVALENT = "EquivalentToSmithForm"
NOT_EQUIVALENT = "NotEquivalent"
PRECONDITION_VIOLATED = "PreconditionViolated"


@dataclass(frozen=True)
class OrderRecord:
    i: int
    beta: int
    d: Polynomial
    unit_ideal: bool
    cofactors: tuple | None = None


@dataclass(frozen=True)
class EquivalenceReport:
    dims: tuple
    rank: int
    d_chain: tuple
    orders: tuple
    verdict: str
    smith: SmithForm | None = None
    failing_order: int | None = None
    transposed: bool = False
    reason: str = ""

    @property
    def equivalent(self) -> bool:
        return self.verdict == EQUIVALENT


def decide(F: PolyMatrix, certificates: bool = False) -> EquivalenceReport:
    """Run the reduced-minor criterion on ``F``.

    A ``d_r`` outside K[x1] gives a ``PreconditionViolated`` report rather
    than an exception.  With ``certificates`` set, unit-ideal orders carry
    cofactors ``u`` with ``sum(u_j * b_j) == 1``.
    """
    if F.is_zero():
        raise ValueError("the zero matrix is a degenerate input")
    transposed = F.nrows > F.ncols
    work = F.transpose() if transposed else F
    chain, profiles = all_profiles(work)
    r = len(profiles)
    if not chain[r].is_univariate_in(0):
        return EquivalenceReport(
            F.shape, r, tuple(chain), (), PRECONDITION_VIOLATED, None, None, transposed,
            "d_%d = %s is not a polynomial in %s alone" % (r, chain[r], F.ctx.names[0]))
    records = []
    failing = None
    for prof in profiles:
        unit = is_unit_ideal(prof.reduced)
        cof = None
        if unit and certificates:
            cof = tuple(unit_cofactors(prof.reduced))
        records.append(OrderRecord(prof.order, prof.beta, prof.d, unit, cof))
        if not unit and failing is None:
            failing = prof.order
    if failing is None:
        smith = SmithForm(F.nrows, F.ncols, tuple(smith_candidate(work).diagonal))
        return EquivalenceReport(F.shape, r, tuple(chain), tuple(records), EQUIVALENT,
                                 smith, None, transposed)
    return EquivalenceReport(F.shape, r, tuple(chain), tuple(records), NOT_EQUIVALENT,
                             None, failing, transposed)


# ---------------------------------------------------------------------------
# necessary-condition checkers

@dataclass(frozen=True)
class InvariantReport:
    agree: bool
    orders_checked: int
    mismatch_order: int | None = None
    mismatch: str | None = None   # "d" or "J"


def _reduced_bases(F):
    chain, profiles = all_profiles(F)
    return chain, [groebner(p.reduced, ctx=F.ctx).generators for p in profiles]


def check_equivalence_invariants(A: PolyMatrix, B: PolyMatrix) -> InvariantReport:
    """Compare ``d_i`` and the reduced Groebner bases of ``J_i`` order by order.

    Agreement is necessary for equivalence, never sufficient.
    """
    if A.shape != B.shape:
        raise ValueError("matrices have different shapes")
    chain_a, gbs_a = _reduced_bases(A)
    chain_b, gbs_b = _reduced_bases(B)
    common = min(len(gbs_a), len(gbs_b))
    for i in range(1, common + 1):
        if chain_a[i] != chain_b[i]:
            return InvariantReport(False, i, i, "d")
        if gbs_a[i - 1] != gbs_b[i - 1]:
            return InvariantReport(False, i, i, "J")
    if len(gbs_a) != len(gbs_b):
        # one side has d_{common+1} = 0, the other does not
        return InvariantReport(False, common + 1, common + 1, "d")
    return InvariantReport(True, common)


def verify_cauchy_binet(A: PolyMatrix, B: PolyMatrix, i: int) -> bool:
    """Check every order-``i`` minor of ``A*B`` against its Cauchy-Binet sum.

    The left side is a Bareiss determinant of the submatrix of the product;
    the right side uses cofactor-expanded minors of the factors.
    """
    if A.ncols != B.nrows:
        raise ValueError("dimension mismatch")
    l, k, m = A.nrows, A.ncols, B.ncols
    if not 1 <= i <= min(l, k, m):
        raise ValueError("order %d out of range" % i)
    AB = A * B
    ta, tb = MinorTable(A), MinorTable(B)
    mids = list(combinations(range(k), i))
    for rs, cs in minor_index(l, m, i):
        lhs = determinant(AB.submatrix(rs, cs))
        rhs = A.ctx.zero
        for ks in mids:
            rhs = rhs + ta.minor(rs, ks) * tb.minor(ks, cs)
        if lhs != rhs:
            return False
    return True


@dataclass(frozen=True)
class MultiplicativityReport:
    applicable: bool
    orders: tuple = ()            # (i, d_i(F1F2), d_i(F1)*d_i(F2), equal)
    unit_transfer: tuple = ()     # (i, J_i(F1F2) unit, J_i(F1) unit, J_i(F2) unit)

    @property
    def holds(self) -> bool:
        if not self.applicable:
            return False
        ok = all(eq for *_, eq in self.orders)
        for _, prod, a, b in self.unit_transfer:
            if prod and not (a and b):
                ok = False
        return ok


def verify_multiplicativity(F1: PolyMatrix, F2: PolyMatrix) -> MultiplicativityReport:
    """Product rule for ``d_i`` when the determinants are coprime.

    Reports ``applicable=False`` when ``gcd(det F1, det F2)`` is not constant.
    """
    if F1.shape != F2.shape or F1.nrows != F1.ncols:
        raise ValueError("need two square matrices of the same size")
    if not poly_gcd(determinant(F1), determinant(F2)).is_constant():
        return MultiplicativityReport(False)
    F = F1 * F2
    n = F.nrows
    chain, prof = all_profiles(F)
    chain1, prof1 = all_profiles(F1)
    chain2, prof2 = all_profiles(F2)

    def d(ch, i):
        return ch[i] if i < len(ch) else F.ctx.zero

    orders, transfer = [], []
    for i in range(1, n + 1):
        lhs = d(chain, i)
        rhs = (d(chain1, i) * d(chain2, i)).monic()
        orders.append((i, lhs, rhs, lhs == rhs))
        if i <= len(prof) and i <= len(prof1) and i <= len(prof2):
            ju = is_unit_ideal(prof[i - 1].reduced)
            transfer.append((i, ju,
                             is_unit_ideal(prof1[i - 1].reduced) if ju else None,
                             is_unit_ideal(prof2[i - 1].reduced) if ju else None))
    return MultiplicativityReport(True, tuple(orders), tuple(transfer))


# ---------------------------------------------------------------------------
# seeded generators

def _small_scalar(ctx, rng, nonzero=False):
    choices = [1, -1, 2, -2, 3, Fraction(1, 2), Fraction(-1, 3)]
    if isinstance(ctx.field, PrimeField):
        p = ctx.field.characteristic
        return ctx.field.convert(rng.randrange(1, p) if nonzero else rng.randrange(p))
    if nonzero:
        return ctx.field.convert(rng.choice(choices))
    return ctx.field.convert(rng.choice([0] + choices[:5]))


def random_polynomial(ctx: VariableContext, rng: random.Random, degree_bound: int,
                      terms: int = 3, variables: Sequence[int] | None = None) -> Polynomial:
    """Sparse polynomial of total degree at most ``degree_bound``."""
    variables = list(range(ctx.n)) if variables is None else list(variables)
    out = {}
    for _ in range(terms):
        m = [0] * ctx.n
        for _ in range(rng.randint(0, degree_bound)):
            m[rng.choice(variables)] += 1
        out[tuple(m)] = out.get(tuple(m), 0) + rng.randint(-3, 3)
    return ctx.poly(out)


def random_unimodular(ctx: VariableContext, size: int, op_count: int, degree_bound: int,
                      seed: int, variables: Sequence[int] | None = None) -> PolyMatrix:
    """Product of ``op_count`` seeded elementary matrices (mostly shears)."""
    rng = random.Random(seed)
    M = PolyMatrix.identity(ctx, size)
    for _ in range(op_count):
        roll = rng.random()
        if size == 1 or roll < 0.1:
            op = ElementaryOp("scale", rng.randrange(size), 0, _small_scalar(ctx, rng, True))
        elif roll < 0.25:
            i, j = rng.sample(range(size), 2)
            op = ElementaryOp("swap", i, j)
        else:
            i, j = rng.sample(range(size), 2)
            f = random_polynomial(ctx, rng, degree_bound, variables=variables)
            if f.is_zero():
                f = ctx.const(1)
            op = ElementaryOp("shear", i, j, f)
        M = apply_elementary(M, op)
    return M


def random_smith_instance(ctx: VariableContext, size: int, primes: Sequence[Polynomial],
                          exponent_table: Sequence[Sequence[int]], seed: int,
                          op_count: int = 4, degree_bound: int = 1):
    """``(F, D)`` with ``F = U * diag(D) * V`` for seeded unimodular ``U, V``.

    ``exponent_table[k][j]`` is the exponent of ``primes[k]`` in the ``j``-th
    diagonal entry; rows must be nondecreasing so the diagonal is a Smith form.
    """
    if len(exponent_table) != len(primes):
        raise ValueError("exponent table needs one row per prime")
    for row in exponent_table:
        if len(row) != size:
            raise ValueError("exponent rows must have length %d" % size)
        if any(e < 0 for e in row) or any(b < a for a, b in zip(row, row[1:])):
            raise ValueError("exponent rows must be nondecreasing naturals")
    for p in primes:
        if p.is_constant() or not p.is_univariate_in(0):
            raise ValueError("primes must be non-constant polynomials in %s" % ctx.names[0])
    diag = []
    for j in range(size):
        e = ctx.one
        for p, row in zip(primes, exponent_table):
            e = e * p.monic() ** row[j]
        diag.append(e)
    D = SmithForm(size, size, tuple(diag))
    U = random_unimodular(ctx, size, op_count, degree_bound, seed * 2 + 1)
    V = random_unimodular(ctx, size, op_count, degree_bound, seed * 2 + 2)
    F = U * D.to_matrix(ctx) * V
    return F, D
