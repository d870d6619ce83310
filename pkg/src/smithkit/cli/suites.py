"""Seeded property suites behind ``smithkit verify``.

Each case takes a seed and returns ``(ok, detail)``.  Cases are pure
functions of the seed, so reruns are reproducible.
"""

from __future__ import annotations

import random

from ..equivalence import (
    EQUIVALENT, NOT_EQUIVALENT, check_equivalence_invariants, decide, random_polynomial,
    random_smith_instance, random_unimodular, verify_cauchy_binet, verify_multiplicativity,
)
from ..polycore import QQ, VariableContext
from ..polymatrix import PolyMatrix, determinant, is_unimodular
from ..smith import smith_candidate, smith_univariate
from .parser import parse_polynomial

__all__ = ["SUITES", "run_case", "run_suite", "negative_instance", "univariate_instance",
           "multiplicativity_pair", "cauchy_binet_pair"]

CTX2 = VariableContext(("x1", "x2"), QQ)
CTX3 = VariableContext(("x1", "x2", "x3"), QQ)
X1 = VariableContext(("x1",), QQ)

# irreducible primes in x1 over QQ
_PRIME_POOL = ["x1", "x1 - 1", "x1 + 1", "x1 + 2", "x1^2 + 1", "x1 - 3", "x1^2 - 2"]


def _primes(ctx, texts):
    return [parse_polynomial(t, ctx) for t in texts]


def _random_table(rng, nprimes, size, budget):
    """Nondecreasing exponent rows; total degree weight below ``budget``."""
    rows = []
    for _ in range(nprimes):
        top = rng.randint(0, max(0, budget))
        row = sorted(rng.randint(0, top) for _ in range(size))
        rows.append(tuple(row))
    return rows


# ---------------------------------------------------------------------------

def cauchy_binet_pair(seed: int):
    rng = random.Random(seed)
    A = PolyMatrix(CTX2, [[random_polynomial(CTX2, rng, 2) for _ in range(3)] for _ in range(3)])
    B = PolyMatrix(CTX2, [[random_polynomial(CTX2, rng, 2) for _ in range(3)] for _ in range(3)])
    return A, B


def case_cauchy_binet(seed):
    A, B = cauchy_binet_pair(seed)
    for i in (1, 2, 3):
        if not verify_cauchy_binet(A, B, i):
            return False, "order %d identity fails" % i
    if determinant(A * B) != determinant(A) * determinant(B):
        return False, "det multiplicativity fails"
    return True, ""


def multiplicativity_pair(seed: int):
    """Two matrices over QQ[x1, x2] with coprime univariate determinants."""
    rng = random.Random(seed)
    size = rng.randint(1, 3)
    pool = _primes(CTX2, _PRIME_POOL)
    rng.shuffle(pool)
    half = len(pool) // 2
    out = []
    for k, primes in enumerate((pool[:half][:2], pool[half:][:2])):
        table = []
        budget = 4
        for p in primes:
            deg = p.degree(0)
            top = rng.randint(0, budget // deg)
            row = sorted(rng.randint(0, top) for _ in range(size))
            while sum(row) * deg > budget:
                row[-1] -= 1
                row.sort()
            budget -= sum(row) * deg
            table.append(tuple(row))
        F, _ = random_smith_instance(CTX2, size, primes, table, seed * 7 + k, op_count=3,
                                     degree_bound=1)
        out.append(F)
    return out[0], out[1]


def case_multiplicativity(seed):
    F1, F2 = multiplicativity_pair(seed)
    rep = verify_multiplicativity(F1, F2)
    if not rep.applicable:
        return False, "determinants not coprime"
    return rep.holds, "" if rep.holds else "d_i product rule fails"


def positive_instance(seed: int):
    rng = random.Random(seed)
    ctx = CTX2 if seed % 2 == 0 else CTX3
    size = rng.randint(1, 4)
    primes = _primes(ctx, rng.sample(_PRIME_POOL[:4], rng.randint(1, 3)))
    table = _random_table(rng, len(primes), size, 3)
    F, D = random_smith_instance(ctx, size, primes, table, seed, op_count=5, degree_bound=1)
    return F, D


def case_positive(seed):
    F, D = positive_instance(seed)
    rep = decide(F)
    if rep.verdict != EQUIVALENT:
        return False, "verdict %s" % rep.verdict
    if rep.smith.diagonal != D.diagonal:
        return False, "Smith diagonal differs from ground truth"
    inv = check_equivalence_invariants(F, rep.smith.to_matrix(F.ctx))
    return inv.agree, "" if inv.agree else "invariants disagree at order %s" % inv.mismatch_order


def negative_instance(seed: int) -> PolyMatrix:
    """``[[p, q], [0, p]]`` with ``p`` in K[x1] and ``<p, q>`` inside ``<p, x2>``.

    ``q = x2*h + p*g`` with ``h`` free of x1 keeps ``gcd(p, q) = 1``.
    """
    rng = random.Random(seed)
    ctx = CTX3
    p = ctx.one
    for t in _primes(ctx, rng.sample(_PRIME_POOL, rng.randint(1, 2))):
        p = p * t ** rng.randint(1, 2)
    h = random_polynomial(ctx, rng, 2, variables=[1, 2])
    if h.is_zero():
        h = ctx.one
    g = random_polynomial(ctx, rng, 1)
    q = ctx.var("x2") * h + p * g
    return PolyMatrix(ctx, [[p, q], [0, p]])


def case_negative(seed):
    F = negative_instance(seed)
    rep = decide(F)
    if rep.verdict != NOT_EQUIVALENT or rep.failing_order != 1:
        return False, "verdict %s, failing order %s" % (rep.verdict, rep.failing_order)
    return True, ""


def case_invariance(seed):
    F, _ = positive_instance(seed) if seed % 3 else (negative_instance(seed), None)
    n = F.nrows
    U = random_unimodular(F.ctx, n, 3, 1, seed * 11 + 5)
    V = random_unimodular(F.ctx, n, 3, 1, seed * 11 + 6)
    G = U * F * V
    a, b = decide(F), decide(G)
    if a.verdict != b.verdict:
        return False, "verdict changed: %s vs %s" % (a.verdict, b.verdict)
    if a.smith != b.smith:
        return False, "Smith diagonal changed"
    inv = check_equivalence_invariants(F, G)
    return inv.agree, "" if inv.agree else "invariants disagree at order %s" % inv.mismatch_order


def univariate_instance(seed: int) -> PolyMatrix:
    rng = random.Random(seed)
    l, m = rng.randint(1, 4), rng.randint(1, 4)
    rows = []
    for _ in range(l):
        row = []
        for _ in range(m):
            if rng.random() < 0.2:
                row.append(X1.zero)
            else:
                row.append(random_polynomial(X1, rng, 4, terms=rng.randint(1, 3)))
        rows.append(row)
    return PolyMatrix(X1, rows)


def case_univariate_smith(seed):
    A = univariate_instance(seed)
    pair, S = smith_univariate(A)
    if pair.U * A * pair.V != S.to_matrix(X1):
        return False, "U*A*V != S"
    if not (is_unimodular(pair.U) and is_unimodular(pair.V)):
        return False, "transform not unimodular"
    if S.diagonal != smith_candidate(A).diagonal:
        return False, "diagonal differs from d-chain quotients"
    return True, ""


SUITES = {
    "cauchy-binet": case_cauchy_binet,
    "invariance": case_invariance,
    "multiplicativity": case_multiplicativity,
    "positive": case_positive,
    "negative": case_negative,
    "univariate-smith": case_univariate_smith,
}


def run_case(suite: str, seed: int):
    return SUITES[suite](seed)


def run_suite(suite: str, seeds: int, base: int = 0):
    """Returns a list of ``(seed, ok, detail)``."""
    if suite not in SUITES:
        raise KeyError(suite)
    out = []
    for s in range(base, base + seeds):
        ok, detail = SUITES[suite](s)
        out.append((s, ok, detail))
    return out
