import os
from fractions import Fraction
from itertools import permutations
from pathlib import Path

import pytest
import sympy
from hypothesis import settings, strategies as st

from smithkit import QQ, PolyMatrix, VariableContext, parse_polynomial

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

FIXTURES = Path(__file__).parent / "fixtures"

CTX2 = VariableContext(("x1", "x2"), QQ)
CTX3 = VariableContext(("x1", "x2", "x3"), QQ)
LEX2 = VariableContext(("x1", "x2"), QQ, "lex")


def P(text, ctx=CTX2):
    return parse_polynomial(text, ctx)


def M(rows, ctx=CTX2):
    return PolyMatrix(ctx, [[P(e, ctx) if isinstance(e, str) else e for e in r] for r in rows])


# ---------------------------------------------------------------------------
# sympy oracle bridge

def syms(ctx):
    return sympy.symbols(ctx.names)


def to_sympy(f):
    xs = syms(f.ctx)
    out = sympy.Integer(0)
    for m, c in f.coeffs.items():
        c = sympy.Rational(c.numerator, c.denominator) if isinstance(c, Fraction) else sympy.Integer(int(c))
        term = c
        for x, e in zip(xs, m):
            term *= x ** e
        out += term
    return out


def from_sympy(expr, ctx):
    poly = sympy.Poly(sympy.expand(expr), *syms(ctx), domain="QQ")
    return ctx.poly({m: Fraction(int(c.p), int(c.q)) for m, c in poly.terms()})


def leibniz_det(F):
    """Brute-force determinant over all permutations."""
    n = F.nrows
    total = F.ctx.zero
    for perm in permutations(range(n)):
        inv = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
        term = F.ctx.one
        for i, j in enumerate(perm):
            term = term * F[i, j]
        total = total + term if inv % 2 == 0 else total - term
    return total


# ---------------------------------------------------------------------------
# hypothesis strategies

def polys(ctx, max_deg=3, max_terms=4, coeff=5):
    mono = st.tuples(*[st.integers(0, max_deg)] * ctx.n)
    coeffs = st.one_of(st.integers(-coeff, coeff),
                       st.fractions(min_value=-coeff, max_value=coeff, max_denominator=4))
    return st.dictionaries(mono, coeffs, max_size=max_terms).map(ctx.poly)


def nonzero_polys(ctx, **kw):
    return polys(ctx, **kw).filter(lambda f: not f.is_zero())


# ---------------------------------------------------------------------------
# acceptance reporting: one line per criterion, shown in the terminal summary

ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance():
    def record(number, ok, detail):
        line = "[%s] criterion %d: %s" % ("PASS" if ok else "FAIL", number, detail.strip())
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
