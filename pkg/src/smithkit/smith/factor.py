"""Irreducible factorization of polynomials in the distinguished variable.

Over QQ: Yun square-free decomposition, rational-root extraction, then
Kronecker's interpolation search for the remaining factors (bounded degree,
with optional caller-supplied candidate factors).  Over GF(p): square-free
decomposition, distinct-degree factorization and seeded Cantor-Zassenhaus
splitting.

Internally polynomials are dense coefficient lists, lowest degree first.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd as igcd, isqrt
from typing import Sequence

from ..polycore import Polynomial, PrimeField, Residue

__all__ = ["PrimeFactorization", "FactorizationError", "factor_univariate", "is_irreducible"]

DEFAULT_KRONECKER_BOUND = 8


class FactorizationError(ValueError):
    pass


@dataclass(frozen=True)
class PrimeFactorization:
    """``unit * prod(p**e for p, e in factors)`` with monic distinct primes."""

    unit: object
    factors: tuple

    def expand(self, ctx) -> Polynomial:
        out = ctx.const(self.unit)
        for p, e in self.factors:
            out = out * p ** e
        return out

    def exponents(self) -> dict:
        return {p: e for p, e in self.factors}


# ---------------------------------------------------------------------------
# dense univariate arithmetic over a field

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _deg(a):
    return len(a) - 1


def _sub(a, b):
    n = max(len(a), len(b))
    zero = 0
    out = [(a[i] if i < len(a) else zero) - (b[i] if i < len(b) else zero) for i in range(n)]
    return _trim(out)


def _add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = out[i] + c
    return _trim(out)


def _mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return _trim(out)


def _divmod(a, b):
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    a = list(a)
    db = _deg(b)
    inv = 1 / b[-1]
    if _deg(a) < db:
        return [], a
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k]
        if c == 0:
            continue
        c = c * inv
        q[k - db] = c
        for j in range(db + 1):
            a[k - db + j] = a[k - db + j] - c * b[j]
    return _trim(q), _trim(a[:db])


def _monic(a):
    if not a or a[-1] == 1:
        return list(a)
    inv = 1 / a[-1]
    return [c * inv for c in a]


def _gcd(a, b):
    a, b = list(a), list(b)
    while b:
        a, b = b, _divmod(a, b)[1]
    return _monic(a)


def _deriv(a):
    return _trim([a[k] * k for k in range(1, len(a))])


def _powmod(a, e, m):
    result = [a[0] * 0 + 1] if a else [1]
    base = _divmod(a, m)[1]
    while e:
        if e & 1:
            result = _divmod(_mul(result, base), m)[1]
        e >>= 1
        if e:
            base = _divmod(_mul(base, base), m)[1]
    return result


def _is_one(a):
    return len(a) == 1 and a[0] == 1


def _key(a):
    """Deterministic ordering: degree, then coefficients from the top."""
    return (len(a), tuple(int(c) if isinstance(c, Residue) else c for c in reversed(a)))


# ---------------------------------------------------------------------------
# conversions

def _to_dense(f: Polynomial):
    if f.is_zero():
        raise FactorizationError("cannot factor the zero polynomial")
    if not f.is_univariate_in(0):
        raise FactorizationError("polynomial involves variables other than %s" % f.ctx.names[0])
    d = f.degree(0)
    out = [f.ctx.field.zero] * (d + 1)
    for m, c in f.coeffs.items():
        out[m[0]] = c
    return out


def _from_dense(ctx, a) -> Polynomial:
    zeros = (0,) * (ctx.n - 1)
    return ctx.poly({(k,) + zeros: c for k, c in enumerate(a) if c != 0})


# ---------------------------------------------------------------------------
# QQ

def _yun(f):
    """Square-free decomposition of a monic rational polynomial."""
    out = []
    fp = _deriv(f)
    a = _gcd(f, fp)
    b = _divmod(f, a)[0]
    c = _divmod(fp, a)[0]
    d = _sub(c, _deriv(b))
    i = 1
    while _deg(b) > 0:
        a = _gcd(b, d)
        if _deg(a) > 0:
            out.append((a, i))
        b = _divmod(b, a)[0]
        c = _divmod(d, a)[0]
        d = _sub(c, _deriv(b))
        i += 1
    return out


def _primitive_int(a):
    """Scale a rational polynomial to a primitive integer one, positive lead."""
    den = 1
    for c in a:
        den = den * c.denominator // igcd(den, c.denominator)
    ints = [int(c * den) for c in a]
    g = 0
    for c in ints:
        g = igcd(g, c)
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return ints


def _divisors(n):
    n = abs(n)
    small, large = [], []
    for k in range(1, isqrt(n) + 1):
        if n % k == 0:
            small.append(k)
            if k != n // k:
                large.append(n // k)
    return small + large[::-1]


def _eval_int(a, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _rational_roots(ints):
    """Distinct rational roots of an integer polynomial."""
    roots = []
    if ints[0] == 0:
        roots.append(Fraction(0))
        k = 0
        while ints[k] == 0:
            k += 1
        ints = ints[k:]
    if len(ints) == 1:
        return roots
    for num in _divisors(ints[0]):
        for den in _divisors(ints[-1]):
            if igcd(num, den) != 1:
                continue
            for r in (Fraction(num, den), Fraction(-num, den)):
                # den^n * p(num/den), kept integral
                n = len(ints) - 1
                total = sum(c * r.numerator ** k * r.denominator ** (n - k) for k, c in enumerate(ints))
                if total == 0:
                    roots.append(r)
    return sorted(set(roots))


def _interpolate(xs, ys):
    """Newton interpolation over QQ; returns dense coefficients."""
    n = len(xs)
    coef = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    poly = [coef[-1]]
    for k in range(n - 2, -1, -1):
        # poly = poly * (x - xs[k]) + coef[k]
        shifted = [Fraction(0)] + poly
        for t in range(len(poly)):
            shifted[t] -= xs[k] * poly[t]
        shifted[0] += coef[k]
        poly = shifted
    return _trim(poly)


def _kronecker(ints, min_deg=1):
    """Irreducible factors of a square-free primitive integer polynomial."""
    n = len(ints) - 1
    if n <= 1:
        return [ints]
    for d in range(min_deg, n // 2 + 1):
        candidates = []
        x = 0
        while len(candidates) < 4 * (d + 1) + 4:
            for a in ((x,) if x == 0 else (x, -x)):
                v = _eval_int(ints, a)
                if v != 0:
                    candidates.append((len(_divisors(v)), abs(a), a, v))
            x += 1
        candidates.sort()
        pts = sorted(candidates[:d + 1], key=lambda t: t[2])
        xs = [t[2] for t in pts]
        choices = []
        for k, (_, _, _, v) in enumerate(pts):
            ds = _divisors(v)
            choices.append(ds if k == 0 else ds + [-q for q in ds])
        lead = ints[-1]
        for ys in product(*choices):
            h = _interpolate(xs, ys)
            if _deg(h) != d or any(c.denominator != 1 for c in h):
                continue
            hi = [int(c) for c in h]
            if lead % hi[-1] != 0:
                continue
            q, r = _divmod([Fraction(c) for c in ints], [Fraction(c) for c in hi])
            if r:
                continue
            if hi[-1] < 0:
                hi = [-c for c in hi]
            rest = _primitive_int(q)
            return [hi] + _kronecker(rest, d)
    return [ints]


def _factor_squarefree_qq(f, bound, hints):
    found = []
    for h in hints:
        q, r = _divmod(f, h)
        if not r and _deg(h) > 0:
            found.append(_monic(h))
            f = q
    f = _monic(f)
    if _deg(f) <= 0:
        return found
    ints = _primitive_int(f)
    for r in _rational_roots(ints):
        lin = [-r, Fraction(1)]
        f = _divmod(f, lin)[0]
        found.append(lin)
    if _deg(f) <= 0:
        return found
    if _deg(f) == 1:
        return found + [_monic(f)]
    if _deg(f) > bound:
        raise FactorizationError(
            "remaining factor of degree %d exceeds the Kronecker bound %d; "
            "supply candidate factors as hints" % (_deg(f), bound))
    for part in _kronecker(_primitive_int(f), 2):
        found.append(_monic([Fraction(c) for c in part]))
    return found


# ---------------------------------------------------------------------------
# GF(p)

def _pth_root(a, p):
    return [a[k] for k in range(0, len(a), p)]


def _sqf_gf(f, p):
    out = []
    i = 1
    c = _gcd(f, _deriv(f))
    w = _divmod(f, c)[0]
    while not _is_one(w):
        y = _gcd(w, c)
        fac = _divmod(w, y)[0]
        if _deg(fac) > 0:
            out.append((fac, i))
        i += 1
        w = y
        c = _divmod(c, y)[0]
    if _deg(c) > 0:
        for g, j in _sqf_gf(_pth_root(c, p), p):
            out.append((g, j * p))
    return out


def _ddf(f, p):
    one = f[-1] * 0 + 1
    x = [one * 0, one]
    out = []
    i = 1
    h = x
    rest = list(f)
    while _deg(rest) >= 2 * i:
        h = _powmod(h, p, rest)
        g = _gcd(rest, _sub(h, x))
        if not _is_one(g):
            out.append((g, i))
            rest = _divmod(rest, g)[0]
            h = _divmod(h, rest)[1]
        i += 1
    if _deg(rest) > 0:
        out.append((rest, _deg(rest)))
    return out


def _edf(f, d, p, rng):
    n = _deg(f)
    if n == d:
        return [_monic(f)]
    field_one = f[-1] * 0 + 1
    while True:
        a = _trim([field_one * rng.randrange(p) for _ in range(n)])
        if _deg(a) < 1:
            continue
        g = _gcd(a, f)
        if 0 < _deg(g) < n:
            break
        if p == 2:
            t = list(a)
            acc = list(a)
            for _ in range(d - 1):
                t = _divmod(_mul(t, t), f)[1]
                acc = _add(acc, t)
            b = acc
        else:
            b = _sub(_powmod(a, (p ** d - 1) // 2, f), [field_one])
        g = _gcd(b, f) if b else list(f)
        if 0 < _deg(g) < n:
            break
    return _edf(g, d, p, rng) + _edf(_divmod(f, g)[0], d, p, rng)


# ---------------------------------------------------------------------------
# public entry point

def factor_univariate(f: Polynomial, hints: Sequence[Polynomial] = (),
                      kronecker_bound: int = DEFAULT_KRONECKER_BOUND,
                      seed: int = 0) -> PrimeFactorization:
    """Factor ``f`` (which may only involve the first variable) into primes.

    ``hints`` are candidate factors tried by exact division before the
    Kronecker search; they let callers factor past ``kronecker_bound``.
    """
    ctx = f.ctx
    dense = _to_dense(f)
    unit = dense[-1]
    mon = _monic(dense)
    if _deg(mon) == 0:
        return PrimeFactorization(unit, ())
    field = ctx.field
    if isinstance(field, PrimeField):
        p = field.characteristic
        rng = random.Random(seed)
        pieces = []
        for part, mult in _sqf_gf(mon, p):
            for g, d in _ddf(part, p):
                for irr in _edf(g, d, p, rng):
                    pieces.append((irr, mult))
    else:
        hint_dense = [_to_dense(h) for h in hints]
        pieces = []
        for part, mult in _yun(mon):
            for irr in _factor_squarefree_qq(part, kronecker_bound, hint_dense):
                pieces.append((irr, mult))
    merged = {}
    for irr, mult in pieces:
        k = tuple(irr)
        merged[k] = merged.get(k, 0) + mult
    ordered = sorted(merged.items(), key=lambda kv: _key(list(kv[0])))
    factors = tuple((_from_dense(ctx, list(k)), e) for k, e in ordered)
    result = PrimeFactorization(unit, factors)
    if result.expand(ctx) != f:
        raise ArithmeticError("factorization does not reproduce its input")
    return result


def is_irreducible(f: Polynomial, **kwargs) -> bool:
    """Non-constant and no nontrivial factor found by :func:`factor_univariate`."""
    if f.is_constant():
        return False
    fac = factor_univariate(f, **kwargs)
    return len(fac.factors) == 1 and fac.factors[0][1] == 1
