"""Exact coefficient fields and sparse multivariate polynomials.

A polynomial is stored as a dict mapping exponent tuples (one entry per
variable, ``x1`` first) to nonzero coefficients.  The dict is the canonical
form: two polynomials are equal exactly when their dicts are equal.  Sorted
term lists are produced on demand for a given monomial order.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import reduce
from operator import add, sub
from typing import Iterable, Mapping, Sequence, Union

__all__ = [
    "Field", "RationalField", "PrimeField", "Residue", "QQ", "GF",
    "VariableContext", "Polynomial", "ContextMismatch",
    "poly_mul", "poly_divrem", "exact_div", "poly_gcd", "poly_gcd_many",
    "substitute", "monomial_key", "is_prime",
]


class ContextMismatch(ValueError):
    pass


# ---------------------------------------------------------------------------
# fields

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(p: int) -> bool:
    """Miller-Rabin with fixed bases; deterministic below 3.3e24."""
    if p < 2:
        return False
    for b in _MR_BASES:
        if p % b == 0:
            return p == b
    d, s = p - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for b in _MR_BASES:
        x = pow(b, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(s - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


class Field:
    """Base class for the coefficient fields."""

    name = "?"
    characteristic = 0

    def convert(self, value):
        raise NotImplementedError

    @property
    def zero(self):
        return self.convert(0)

    @property
    def one(self):
        return self.convert(1)

    def __repr__(self):
        return self.name


class RationalField(Field):
    """The rationals, backed by :class:`fractions.Fraction`."""

    name = "QQ"
    characteristic = 0

    def convert(self, value):
        if isinstance(value, Residue):
            raise TypeError("cannot coerce a prime-field residue into QQ")
        return Fraction(value)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


class Residue:
    """An element of GF(p), stored as an int in ``[0, p)``."""

    __slots__ = ("value", "modulus")

    def __init__(self, value: int, modulus: int):
        self.value = value % modulus
        self.modulus = modulus

    def _coerce(self, other):
        if isinstance(other, Residue):
            if other.modulus != self.modulus:
                raise ValueError("residues from different prime fields")
            return other.value
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.modulus)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(self.value + o, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(self.value - o, self.modulus)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(o - self.value, self.modulus)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(self.value * o, self.modulus)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o % self.modulus == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.modulus)
        return Residue(self.value * pow(o, -1, self.modulus), self.modulus)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(o, self.modulus) / self

    def __neg__(self):
        return Residue(-self.value, self.modulus)

    def __pos__(self):
        return self

    def __pow__(self, e: int):
        if e < 0:
            return Residue(pow(pow(self.value, -1, self.modulus), -e, self.modulus), self.modulus)
        return Residue(pow(self.value, e, self.modulus), self.modulus)

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self.modulus == other.modulus and self.value == other.value
        if isinstance(other, int):
            return (self.value - other) % self.modulus == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return "Residue(%d, %d)" % (self.value, self.modulus)

    def __str__(self):
        return str(self.value)


class PrimeField(Field):
    """GF(p) for a prime p; the modulus is checked on construction."""

    characteristic: int

    def __init__(self, p: int):
        if not isinstance(p, int) or not is_prime(p):
            raise ValueError("GF modulus must be prime, got %r" % (p,))
        self.characteristic = p
        self.name = "GF(%d)" % p

    def convert(self, value):
        if isinstance(value, Residue):
            if value.modulus != self.characteristic:
                raise ValueError("residue from a different prime field")
            return value
        if isinstance(value, Fraction):
            return Residue(value.numerator, self.characteristic) / value.denominator
        return Residue(int(value), self.characteristic)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.characteristic == self.characteristic

    def __hash__(self):
        return hash(("GF", self.characteristic))


QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


# ---------------------------------------------------------------------------
# monomial orders

def _lex_key(m):
    return m


def _grevlex_key(m):
    return (sum(m), tuple(-e for e in reversed(m)))


def _lex_heap_key(m):
    return tuple(-e for e in m)


def _grevlex_heap_key(m):
    return (-sum(m), tuple(reversed(m)))


_ORDER_KEYS = {"lex": _lex_key, "grevlex": _grevlex_key}
_HEAP_KEYS = {"lex": _lex_heap_key, "grevlex": _grevlex_heap_key}


def monomial_key(order: str):
    """Sort key for exponent tuples; larger key means larger monomial."""
    try:
        return _ORDER_KEYS[order]
    except KeyError:
        raise ValueError("unknown monomial order %r" % (order,)) from None


# ---------------------------------------------------------------------------
# contexts

@dataclass(frozen=True)
class VariableContext:
    """Variables ``x1..xn`` (first one distinguished), field and active order."""

    names: tuple
    field: Field = dc_field(default=QQ)
    order: str = "grevlex"

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if not names:
            raise ValueError("at least one variable is required")
        if len(set(names)) != len(names):
            raise ValueError("variable names must be unique")
        monomial_key(self.order)

    @property
    def n(self) -> int:
        return len(self.names)

    def with_order(self, order: str) -> "VariableContext":
        return VariableContext(self.names, self.field, order)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError("unknown variable %r" % (name,)) from None

    def zero_exp(self):
        return (0,) * self.n

    def poly(self, terms: Mapping | None = None) -> "Polynomial":
        """Build a polynomial from ``{exponent tuple: coefficient}``."""
        conv = self.field.convert
        out = {}
        for m, c in (terms or {}).items():
            m = tuple(int(e) for e in m)
            if len(m) != self.n or any(e < 0 for e in m):
                raise ValueError("bad exponent vector %r" % (m,))
            c = conv(c)
            if m in out:
                c = out[m] + c
            if c == 0:
                out.pop(m, None)
            else:
                out[m] = c
        return Polynomial._raw(self, out)

    def const(self, c) -> "Polynomial":
        c = self.field.convert(c)
        if c == 0:
            return Polynomial._raw(self, {})
        return Polynomial._raw(self, {self.zero_exp(): c})

    def var(self, name_or_index) -> "Polynomial":
        i = name_or_index if isinstance(name_or_index, int) else self.index(name_or_index)
        m = [0] * self.n
        m[i] = 1
        return Polynomial._raw(self, {tuple(m): self.field.one})

    def gens(self):
        return tuple(self.var(i) for i in range(self.n))

    @property
    def zero(self) -> "Polynomial":
        return Polynomial._raw(self, {})

    @property
    def one(self) -> "Polynomial":
        return self.const(1)


def _same_ctx(a: VariableContext, b: VariableContext) -> bool:
    return a is b or (a.names == b.names and a.field == b.field)


# ---------------------------------------------------------------------------
# polynomials

Scalarish = Union[int, Fraction, Residue]


class Polynomial:
    """Immutable sparse polynomial over ``ctx.field``.

    Supports ``+ - *`` with polynomials and scalars, ``**`` with natural
    exponents, and ``/`` by nonzero scalars.  The monomial order only matters
    for term listings, leading terms and division.
    """

    __slots__ = ("ctx", "_terms", "_hash")

    def __init__(self, ctx: VariableContext, terms: Mapping | None = None):
        p = ctx.poly(terms)
        self.ctx = ctx
        self._terms = p._terms
        self._hash = None

    @classmethod
    def _raw(cls, ctx, terms: dict) -> "Polynomial":
        p = object.__new__(cls)
        p.ctx = ctx
        p._terms = terms
        p._hash = None
        return p

    # -- inspection --------------------------------------------------------
    @property
    def coeffs(self) -> Mapping:
        return self._terms

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_constant(self) -> bool:
        t = self._terms
        return not t or (len(t) == 1 and not any(next(iter(t))))

    def constant_value(self):
        """Coefficient of the constant monomial (field zero if absent)."""
        return self._terms.get(self.ctx.zero_exp(), self.ctx.field.zero)

    def terms(self, order: str | None = None) -> list:
        """``(exponent, coefficient)`` pairs in strictly decreasing order."""
        key = monomial_key(order or self.ctx.order)
        return sorted(self._terms.items(), key=lambda t: key(t[0]), reverse=True)

    def leading_term(self, order: str | None = None):
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        key = monomial_key(order or self.ctx.order)
        m = max(self._terms, key=key)
        return m, self._terms[m]

    def leading_monomial(self, order: str | None = None):
        return self.leading_term(order)[0]

    def leading_coeff(self, order: str | None = None):
        return self.leading_term(order)[1]

    def degree(self, var=None) -> int:
        """Total degree, or the degree in one variable; -1 for zero."""
        if not self._terms:
            return -1
        if var is None:
            return max(sum(m) for m in self._terms)
        i = var if isinstance(var, int) else self.ctx.index(var)
        return max(m[i] for m in self._terms)

    def support_vars(self) -> set:
        used = set()
        for m in self._terms:
            used.update(i for i, e in enumerate(m) if e)
        return used

    def is_univariate_in(self, i: int = 0) -> bool:
        return all(e == 0 for m in self._terms for k, e in enumerate(m) if k != i)

    def coeff_in(self, i: int, d: int) -> "Polynomial":
        """Coefficient of ``x_i^d`` viewing self as a polynomial in ``x_i``."""
        out = {}
        for m, c in self._terms.items():
            if m[i] == d:
                out[m[:i] + (0,) + m[i + 1:]] = c
        return Polynomial._raw(self.ctx, out)

    def monic(self, order: str | None = None) -> "Polynomial":
        if not self._terms:
            return self
        lc = self.leading_coeff(order)
        if lc == 1:
            return self
        return self.scale(1 / lc)

    def scale(self, c) -> "Polynomial":
        c = self.ctx.field.convert(c)
        if c == 0:
            return self.ctx.zero
        return Polynomial._raw(self.ctx, {m: v * c for m, v in self._terms.items()})

    def mul_term(self, mono, c) -> "Polynomial":
        if c == 0:
            return self.ctx.zero
        return Polynomial._raw(
            self.ctx, {tuple(map(add, m, mono)): v * c for m, v in self._terms.items()})

    # -- arithmetic --------------------------------------------------------
    def _lift(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if not _same_ctx(self.ctx, other.ctx):
                raise ContextMismatch("polynomials live in different contexts")
            return other
        if isinstance(other, (int, Fraction, Residue)):
            return self.ctx.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if len(other._terms) > len(self._terms):
            big, small = other._terms, self._terms
        else:
            big, small = self._terms, other._terms
        out = dict(big)
        for m, c in small.items():
            v = out.get(m)
            if v is None:
                out[m] = c
            else:
                v = v + c
                if v == 0:
                    del out[m]
                else:
                    out[m] = v
        return Polynomial._raw(self.ctx, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.ctx, {m: -c for m, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m)
            if v is None:
                out[m] = -c
            else:
                v = v - c
                if v == 0:
                    del out[m]
                else:
                    out[m] = v
        return Polynomial._raw(self.ctx, out)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Polynomial):
            if not other.is_constant() or other.is_zero():
                raise ZeroDivisionError("'/' only divides by nonzero constants; use exact_div")
            other = other.constant_value()
        other = self.ctx.field.convert(other)
        if other == 0:
            raise ZeroDivisionError("division by zero")
        return self.scale(1 / other)

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a natural number")
        result = self.ctx.one
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return _same_ctx(self.ctx, other.ctx) and self._terms == other._terms
        if isinstance(other, (int, Fraction, Residue)):
            return self._terms == self.ctx.const(other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        from .cli.printer import format_polynomial
        return "Polynomial(%s)" % format_polynomial(self)

    def __str__(self):
        from .cli.printer import format_polynomial
        return format_polynomial(self)


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    if not _same_ctx(a.ctx, b.ctx):
        raise ContextMismatch("polynomials live in different contexts")
    ta, tb = a._terms, b._terms
    if not ta or not tb:
        return a.ctx.zero
    if len(ta) < len(tb):
        ta, tb = tb, ta
    out = {}
    get = out.get
    for mb, cb in tb.items():
        for ma, ca in ta.items():
            m = tuple(map(add, ma, mb))
            v = get(m)
            out[m] = ca * cb if v is None else v + ca * cb
    return Polynomial._raw(a.ctx, {m: c for m, c in out.items() if c != 0})


def _divides(small, big) -> bool:
    for s, b in zip(small, big):
        if s > b:
            return False
    return True


def _reduce(f: Polynomial, divisors: Sequence[Polynomial], order: str,
            want_quotients: bool = True, full: bool = True):
    """Multivariate division of ``f`` by ``divisors``.

    Returns ``(quotient term dicts or None, remainder dict)``.  With
    ``full=False`` it stops at the first term not divisible by any leading
    monomial (top reduction only).
    """
    key = monomial_key(order)
    hkey = _HEAP_KEYS[order]
    leads = []
    for d in divisors:
        if not d._terms:
            raise ZeroDivisionError("zero divisor in division list")
        lm = max(d._terms, key=key)
        leads.append((lm, d._terms[lm], d._terms))
    p = dict(f._terms)
    heap = [(hkey(m), m) for m in p]
    heapq.heapify(heap)
    rem = {}
    quots = [dict() for _ in divisors] if want_quotients else None
    while heap:
        _, m = heapq.heappop(heap)
        c = p.pop(m, None)
        if c is None:
            continue
        for k, (lm, lc, dterms) in enumerate(leads):
            if _divides(lm, m):
                qm = tuple(map(sub, m, lm))
                qc = c / lc
                if want_quotients:
                    quots[k][qm] = quots[k].get(qm, 0) + qc
                for dm, dc in dterms.items():
                    if dm == lm:
                        continue
                    tm = tuple(map(add, dm, qm))
                    old = p.get(tm)
                    if old is None:
                        p[tm] = -qc * dc
                        heapq.heappush(heap, (hkey(tm), tm))
                    else:
                        v = old - qc * dc
                        if v == 0:
                            del p[tm]
                        else:
                            p[tm] = v
                break
        else:
            rem[m] = c
            if not full:
                rem.update(p)
                break
    if want_quotients:
        quots = [{m: c for m, c in q.items() if c != 0} for q in quots]
    return quots, rem


def poly_divrem(f: Polynomial, divisors: Sequence[Polynomial], order: str | None = None):
    """Divide ``f`` by an ordered list of divisors.

    Returns ``(quotients, remainder)`` with ``f == sum(q*d) + remainder`` and
    no remainder term divisible by a divisor's leading monomial.
    """
    for d in divisors:
        if not _same_ctx(f.ctx, d.ctx):
            raise ContextMismatch("divisor lives in a different context")
    order = order or f.ctx.order
    quots, rem = _reduce(f, divisors, order)
    ctx = f.ctx
    return [Polynomial._raw(ctx, q) for q in quots], Polynomial._raw(ctx, rem)


def exact_div(f: Polynomial, g: Polynomial) -> Polynomial:
    """``f / g`` when ``g`` divides ``f``; raises ArithmeticError otherwise."""
    if g.is_zero():
        raise ZeroDivisionError("exact division by zero polynomial")
    if g.is_constant():
        return f / g.constant_value()
    quots, rem = _reduce(f, [g], f.ctx.order)
    if rem:
        raise ArithmeticError("division is not exact")
    return Polynomial._raw(f.ctx, quots[0])


def divides(g: Polynomial, f: Polynomial) -> bool:
    if g.is_zero():
        return f.is_zero()
    _, rem = _reduce(f, [g], f.ctx.order, want_quotients=False)
    return not rem


# ---------------------------------------------------------------------------
# gcd

def _monomial_gcd(m: Polynomial, g: Polynomial) -> Polynomial:
    (mono,) = m._terms
    low = list(mono)
    for gm in g._terms:
        low = [min(a, b) for a, b in zip(low, gm)]
        if not any(low):
            break
    return Polynomial._raw(m.ctx, {tuple(low): m.ctx.field.one})


def _pseudo_rem(a: Polynomial, b: Polynomial, v: int) -> Polynomial:
    db = b.degree(v)
    lcb = b.coeff_in(v, db)
    r = a
    e = a.degree(v) - db + 1
    ctx = a.ctx
    while r and r.degree(v) >= db:
        dr = r.degree(v)
        lcr = r.coeff_in(v, dr)
        shift = [0] * ctx.n
        shift[v] = dr - db
        r = lcb * r - (lcr * b).mul_term(tuple(shift), ctx.field.one)
        e -= 1
    if e > 0:
        r = lcb ** e * r
    return r


def _content_in(f: Polynomial, v: int) -> Polynomial:
    parts = sorted(_coefficients_in(f, v), key=lambda p: (p.degree(), len(p)))
    return _gcd_list(parts)


def _gcd_list(polys) -> Polynomial:
    g = None
    for p in polys:
        g = p.monic() if g is None else poly_gcd(g, p)
        if g.is_constant():
            return g.ctx.one if g else g
    return g


def _image(f: Polynomial, v: int, point):
    """Dense coefficients (low first) of ``f`` with every variable but ``v``
    set to ``point``; ``None`` when the leading coefficient in ``v`` vanishes."""
    d = f.degree(v)
    out = [0] * (d + 1)
    for m, c in f._terms.items():
        val = c
        for k, e in enumerate(m):
            if e and k != v:
                val = val * point[k] ** e
        out[m[v]] = out[m[v]] + val
    if out[d] == 0:
        return None
    return out


def _dense_gcd_degree(a, b) -> int:
    while b:
        while b and b[-1] == 0:
            b.pop()
        if not b:
            break
        inv = 1 / b[-1]
        a = list(a)
        db = len(b) - 1
        for k in range(len(a) - 1, db - 1, -1):
            c = a[k]
            if c == 0:
                continue
            c = c * inv
            for j in range(db + 1):
                a[k - db + j] = a[k - db + j] - c * b[j]
        a = a[:db]
        while a and a[-1] == 0:
            a.pop()
        a, b = b, a
    return len(a) - 1


_GCD_RNG_SEED = 0x5EED


def _gcd_degree_bound(f: Polynomial, g: Polynomial, v: int, rng) -> int | None:
    """Upper bound on ``deg_v gcd(f, g)`` from one random evaluation.

    The bound is sound whenever the leading coefficient of ``f`` in ``v``
    survives the evaluation, which is checked.
    """
    field = f.ctx.field
    p = field.characteristic
    for _ in range(4):
        if p:
            point = [field.convert(rng.randrange(p)) for _ in range(f.ctx.n)]
        else:
            point = [Fraction(rng.randint(-97, 97)) for _ in range(f.ctx.n)]
        a = _image(f, v, point)
        b = _image(g, v, point)
        if a is None or b is None:
            continue
        return _dense_gcd_degree(a, b)
    return None


def _coefficients_in(f: Polynomial, v: int) -> list:
    coeffs = {}
    for m, c in f._terms.items():
        coeffs.setdefault(m[v], {})[m[:v] + (0,) + m[v + 1:]] = c
    return [Polynomial._raw(f.ctx, t) for t in coeffs.values()]


def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic gcd by primitive PRS, recursing on the largest present variable.

    Before running a PRS, a random evaluation bounds the gcd degree in each
    shared variable; a zero bound lets that variable be eliminated by taking
    the gcd of coefficients instead.
    """
    if not _same_ctx(f.ctx, g.ctx):
        raise ContextMismatch("polynomials live in different contexts")
    ctx = f.ctx
    if not f:
        return g.monic()
    if not g:
        return f.monic()
    if f.is_constant() or g.is_constant():
        return ctx.one
    if len(f) == 1:
        return _monomial_gcd(f, g)
    if len(g) == 1:
        return _monomial_gcd(g, f)
    if f == g:
        return f.monic()
    vf, vg = f.support_vars(), g.support_vars()
    v = max(vf | vg)
    if v not in vf:
        return poly_gcd(f, _content_in(g, v))
    if v not in vg:
        return poly_gcd(g, _content_in(f, v))
    rng = random.Random(_GCD_RNG_SEED)
    for w in sorted(vf & vg, reverse=True):
        if _gcd_degree_bound(f, g, w, rng) == 0:
            parts = sorted(_coefficients_in(f, w) + _coefficients_in(g, w),
                           key=lambda p: (p.degree(), len(p)))
            return _gcd_list(parts)
    small, big = (f, g) if (f.degree(), len(f)) <= (g.degree(), len(g)) else (g, f)
    if divides(small, big):
        return small.monic()
    cf, cg = _content_in(f, v), _content_in(g, v)
    a, b = exact_div(f, cf), exact_div(g, cg)
    c = poly_gcd(cf, cg)
    if a.degree(v) < b.degree(v):
        a, b = b, a
    while b:
        if b.degree(v) == 0:
            # b is free of v and primitive in v, so it is a constant here
            return c
        r = _pseudo_rem(a, b, v)
        if not r:
            break
        a, b = b, exact_div(r, _content_in(r, v)) if r.degree(v) > 0 else r
    h = exact_div(b, _content_in(b, v))
    return (c * h).monic()


def poly_gcd_many(fs: Sequence[Polynomial]) -> Polynomial:
    """Monic gcd of a nonempty list; zero when every element is zero."""
    fs = list(fs)
    if not fs:
        raise ValueError("gcd of an empty list is undefined")
    ctx = fs[0].ctx
    for p in fs:
        if not _same_ctx(ctx, p.ctx):
            raise ContextMismatch("polynomials live in different contexts")
    nonzero = sorted((p for p in fs if p), key=lambda p: (p.degree(), len(p)))
    if not nonzero:
        return ctx.zero
    return _gcd_list(nonzero)


# ---------------------------------------------------------------------------
# substitution

def substitute(f: Polynomial, assignments: Mapping) -> Polynomial:
    """Replace variables by polynomials or scalars; keys are names or indices."""
    ctx = f.ctx
    values = {}
    for k, v in assignments.items():
        i = k if isinstance(k, int) else ctx.index(k)
        if not 0 <= i < ctx.n:
            raise KeyError("unknown variable index %r" % (k,))
        if isinstance(v, Polynomial):
            if not _same_ctx(ctx, v.ctx):
                raise ContextMismatch("substituted value lives in a different context")
        else:
            v = ctx.const(v)
        values[i] = v
    if not values:
        return f
    powers = {i: {} for i in values}

    def power(i, e):
        cache = powers[i]
        if e not in cache:
            cache[e] = values[i] ** e
        return cache[e]

    result = ctx.zero
    for m, c in f._terms.items():
        kept = tuple(0 if i in values else e for i, e in enumerate(m))
        term = Polynomial._raw(ctx, {kept: c})
        for i, e in enumerate(m):
            if e and i in values:
                term = term * power(i, e)
        result = result + term
    return result


def sum_polys(ctx: VariableContext, polys: Iterable[Polynomial]) -> Polynomial:
    return reduce(lambda a, b: a + b, polys, ctx.zero)
