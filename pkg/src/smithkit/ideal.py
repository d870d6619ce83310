"""Buchberger Groebner bases, normal forms and the unit-ideal test."""

from __future__ import annotations

from dataclasses import dataclass
from operator import add, sub
from typing import Sequence

from .polycore import (
    ContextMismatch, Polynomial, VariableContext, _reduce, _same_ctx, monomial_key,
)

__all__ = [
    "IdealBasis", "NotReducedError", "NotUnitIdealError",
    "groebner", "normal_form", "is_unit_ideal", "unit_cofactors",
]


class NotReducedError(ValueError):
    pass


class NotUnitIdealError(ValueError):
    pass


@dataclass(frozen=True)
class IdealBasis:
    ctx: VariableContext
    generators: tuple
    order: str = "grevlex"
    is_reduced_groebner: bool = False

    def is_unit(self) -> bool:
        return len(self.generators) == 1 and self.generators[0].is_constant()

    def is_zero_ideal(self) -> bool:
        return not self.generators

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)


def _lcm(a, b):
    return tuple(map(max, a, b))


def _coprime(a, b):
    return not any(x and y for x, y in zip(a, b))


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


class _Buchberger:
    """State of one Buchberger run with Gebauer-Moeller pair pruning.

    With ``track`` set every basis element carries cofactors expressing it
    in terms of the input generators.
    """

    def __init__(self, ctx, order, inputs, track):
        self.ctx = ctx
        self.order = order
        self.key = monomial_key(order)
        self.track = track
        self.inputs = inputs
        self.polys = []       # all basis candidates ever added
        self.lms = []
        self.cofs = []
        self.basis = []       # indices currently in G
        self.pairs = []       # (i, j, lcm)

    def lm(self, p):
        return max(p.coeffs, key=self.key)

    def normalize(self, p, cof):
        lm = self.lm(p)
        lc = p.coeffs[lm]
        if lc != 1:
            inv = 1 / lc
            p = p.scale(inv)
            if cof is not None:
                cof = [c.scale(inv) for c in cof]
        return p, cof

    def reduce(self, p, cof):
        divs = [self.polys[i] for i in self.basis]
        quots, rem = _reduce(p, divs, self.order, want_quotients=self.track)
        r = Polynomial._raw(self.ctx, rem)
        if self.track and r:
            cof = list(cof)
            for q, i in zip(quots, self.basis):
                if q:
                    qp = Polynomial._raw(self.ctx, q)
                    cof = [c - qp * d for c, d in zip(cof, self.cofs[i])]
        return r, cof

    def add(self, h, cof):
        h, cof = self.normalize(h, cof)
        idx = len(self.polys)
        self.polys.append(h)
        self.lms.append(self.lm(h))
        self.cofs.append(cof)
        self.update(idx)
        return h

    def update(self, h):
        lms = self.lms
        lh = lms[h]
        cands = [(g, _lcm(lh, lms[g])) for g in self.basis]
        kept = []
        for k, (g, l) in enumerate(cands):
            if _coprime(lh, lms[g]):
                kept.append((g, l))
                continue
            others = cands[k + 1:] + kept
            if any(_divides(l2, l) for _, l2 in others):
                continue
            kept.append((g, l))
        new_pairs = [(g, h, l) for g, l in kept if not _coprime(lh, lms[g])]
        old = []
        for (a, b, l) in self.pairs:
            if (_divides(lh, l) and _lcm(lms[a], lh) != l and _lcm(lms[b], lh) != l):
                continue
            old.append((a, b, l))
        self.pairs = old + new_pairs
        self.basis = [g for g in self.basis if not _divides(lh, lms[g])] + [h]

    def spoly(self, i, j, l):
        pi, pj = self.polys[i], self.polys[j]
        mi = tuple(map(sub, l, self.lms[i]))
        mj = tuple(map(sub, l, self.lms[j]))
        one = self.ctx.field.one
        s = pi.mul_term(mi, one) - pj.mul_term(mj, one)
        cof = None
        if self.track:
            ti = Polynomial._raw(self.ctx, {mi: one})
            tj = Polynomial._raw(self.ctx, {mj: one})
            cof = [ti * a - tj * b for a, b in zip(self.cofs[i], self.cofs[j])]
        return s, cof

    def run(self, stop_on_unit):
        """Incremental Buchberger: each input enters only after the pairs of
        the previous ones are exhausted.  Inputs are expected smallest first,
        so a unit ideal is usually detected from a short prefix."""
        ctx = self.ctx
        k = len(self.inputs)
        for n, g in enumerate(self.inputs):
            cof = None
            if self.track:
                cof = [ctx.one if t == n else ctx.zero for t in range(k)]
            if self.basis:
                g, cof = self.reduce(g, cof)
            if g:
                h = self.add(g, cof)
                if stop_on_unit and h.is_constant():
                    return True
            if self.drain(stop_on_unit):
                return True
        return any(self.polys[i].is_constant() for i in self.basis)

    def drain(self, stop_on_unit):
        while self.pairs:
            # normal strategy: smallest lcm first, ties by creation index
            best = min(range(len(self.pairs)),
                       key=lambda t: (self.key(self.pairs[t][2]), self.pairs[t][0], self.pairs[t][1]))
            i, j, l = self.pairs.pop(best)
            s, cof = self.spoly(i, j, l)
            r, cof = self.reduce(s, cof)
            if r:
                h = self.add(r, cof)
                if stop_on_unit and h.is_constant():
                    return True
        return False

    def reduced_basis(self):
        """Interreduce the current basis into the unique reduced GB."""
        lms = self.lms
        minimal = []
        for i in self.basis:
            if any(j != i and _divides(lms[j], lms[i]) and (lms[j] != lms[i] or j < i)
                   for j in self.basis):
                continue
            minimal.append(i)
        polys = [self.polys[i] for i in minimal]
        out = []
        for t, p in enumerate(polys):
            others = polys[:t] + polys[t + 1:]
            if others:
                _, rem = _reduce(p, others, self.order, want_quotients=False)
                lm = lms[minimal[t]]
                # leading term is untouched since no other lm divides it
                p = Polynomial._raw(self.ctx, rem)
                p = p.scale(1 / p.coeffs[lm])
            out.append(p)
        out.sort(key=lambda p: self.key(self.lm(p)), reverse=True)
        return tuple(out)


def _prepare(gens, ctx=None):
    gens = list(gens)
    if gens:
        ctx = ctx or gens[0].ctx
        for g in gens:
            if not _same_ctx(ctx, g.ctx):
                raise ContextMismatch("generators live in different contexts")
    return ctx, gens


def groebner(gens: Sequence[Polynomial], order: str | None = None, ctx: VariableContext | None = None) -> IdealBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Zero generators are dropped; the zero ideal gives an empty basis.
    """
    ctx, gens = _prepare(gens, ctx)
    if ctx is None:
        raise ValueError("cannot infer a context from an empty generator list")
    order = order or ctx.order
    nonzero = [g for g in gens if g]
    if not nonzero:
        return IdealBasis(ctx, (), order, True)
    if any(g.is_constant() for g in nonzero):
        return IdealBasis(ctx, (ctx.one,), order, True)
    bb = _Buchberger(ctx, order, _sorted_inputs(nonzero, order), track=False)
    if bb.run(stop_on_unit=True):
        return IdealBasis(ctx, (ctx.one,), order, True)
    return IdealBasis(ctx, bb.reduced_basis(), order, True)


def _input_key(order):
    key = monomial_key(order)
    return lambda g: (g.degree(), len(g), key(max(g.coeffs, key=key)))


def _sorted_inputs(gens, order):
    """Smallest generators first: total degree, then term count."""
    return sorted(gens, key=_input_key(order))


def normal_form(f: Polynomial, gb: IdealBasis) -> Polynomial:
    """Unique remainder of ``f`` modulo a reduced Groebner basis."""
    if not gb.is_reduced_groebner:
        raise NotReducedError("normal_form needs a reduced Groebner basis")
    if not _same_ctx(f.ctx, gb.ctx):
        raise ContextMismatch("polynomial and ideal live in different contexts")
    if not gb.generators:
        return f
    _, rem = _reduce(f, gb.generators, gb.order, want_quotients=False)
    return Polynomial._raw(f.ctx, rem)


def is_unit_ideal(gens: Sequence[Polynomial], order: str | None = None) -> bool:
    """True iff the generators span the whole polynomial ring."""
    ctx, gens = _prepare(gens)
    nonzero = [g for g in gens if g]
    if not nonzero:
        return False
    if any(g.is_constant() for g in nonzero):
        return True
    order = order or ctx.order
    bb = _Buchberger(ctx, order, _sorted_inputs(nonzero, order), track=False)
    return bb.run(stop_on_unit=True)


def unit_cofactors(gens: Sequence[Polynomial], order: str | None = None) -> list:
    """Polynomials ``u`` with ``sum(u[k] * gens[k]) == 1``.

    Raises :class:`NotUnitIdealError` when the generators span a proper ideal.
    """
    ctx, gens = _prepare(gens)
    if ctx is None:
        raise NotUnitIdealError("the empty generator list spans the zero ideal")
    for k, g in enumerate(gens):
        if g and g.is_constant():
            u = [ctx.zero] * len(gens)
            u[k] = ctx.const(1 / g.constant_value())
            return u
    order = order or ctx.order
    positions = sorted((k for k, g in enumerate(gens) if g), key=lambda k: _input_key(order)(gens[k]))
    inputs = [gens[k] for k in positions]
    bb = _Buchberger(ctx, order, inputs, track=True)
    if not bb.run(stop_on_unit=True):
        raise NotUnitIdealError("generators span a proper ideal")
    unit = next(i for i in reversed(bb.basis) if bb.polys[i].is_constant())
    c = bb.polys[unit].constant_value()
    u = [ctx.zero] * len(gens)
    for k, cof in zip(positions, bb.cofs[unit]):
        u[k] = cof / c
    check = ctx.zero
    for a, g in zip(u, gens):
        check = check + a * g
    if check != ctx.one:
        raise ArithmeticError("cofactor certificate failed to verify")
    return u
