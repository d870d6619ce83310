"""Command-line front end.

Exit codes: 3 parse error, 2 precondition violation, 1 NotEquivalent
(``decide``) or failed cases (``verify``), 0 otherwise.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .. import equivalence as eq
from ..polycore import QQ, VariableContext
from ..polymatrix import PreconditionError, minor_index, minors_of_order, d_chain, reduced_minor_profile
from ..smith import FactorizationError, factor_univariate, smith_candidate, smith_wrt_prime
from .matrixfile import format_matrix_document, parse_field, parse_matrix_file
from .parser import ParseError, parse_polynomial
from .printer import format_polynomial, format_scalar
from .suites import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_PRECONDITION, EXIT_PARSE = 0, 1, 2, 3

fp = format_polynomial


def default_seed() -> int:
    raw = os.environ.get("SMITHKIT_SEED")
    if raw is None or not raw.strip():
        return 0
    try:
        return int(raw)
    except ValueError:
        raise ParseError("SMITHKIT_SEED must be an integer, got %r" % raw) from None


class _Out:
    def __init__(self, fmt, stream):
        self.fmt = fmt
        self.stream = stream

    def emit(self, payload: dict, text_lines):
        if self.fmt == "json":
            self.stream.write(json.dumps(payload, indent=2, ensure_ascii=False) + "\n")
        else:
            for line in text_lines:
                self.stream.write(line + "\n")


def _header(doc):
    return {"field": doc.field, "vars": list(doc.variables), "dims": list(doc.dims)}


def _one_based(ix):
    return [k + 1 for k in ix]


# ---------------------------------------------------------------------------
# commands

def cmd_minors(args, out):
    doc, F = parse_matrix_file(args.file)
    i = args.order
    if not 1 <= i <= min(F.shape):
        raise PreconditionError("order %d out of range 1..%d" % (i, min(F.shape)))
    ms = minors_of_order(F, i)
    idx = minor_index(F.nrows, F.ncols, i)
    items = [{"rows": _one_based(r), "cols": _one_based(c), "minor": fp(v)}
             for (r, c), v in zip(idx, ms)]
    lines = ["rows %s cols %s: %s" % (",".join(map(str, it["rows"])),
                                      ",".join(map(str, it["cols"])), it["minor"]) for it in items]
    out.emit(dict(_header(doc), order=i, minors=items), lines)
    return EXIT_OK


def cmd_dvals(args, out):
    doc, F = parse_matrix_file(args.file)
    chain = d_chain(F)
    lines = ["rank: %d" % (len(chain) - 1)] + ["d_%d = %s" % (k, fp(d)) for k, d in enumerate(chain)]
    out.emit(dict(_header(doc), rank=len(chain) - 1, d_chain=[fp(d) for d in chain]), lines)
    return EXIT_OK


def cmd_reduced(args, out):
    doc, F = parse_matrix_file(args.file)
    prof = reduced_minor_profile(F, args.order)
    items = [{"rows": _one_based(r), "cols": _one_based(c), "reduced": fp(b)}
             for (r, c), b in zip(prof.index, prof.reduced)]
    lines = ["d_%d = %s" % (prof.order, fp(prof.d)), "beta = %d" % prof.beta]
    lines += ["rows %s cols %s: %s" % (",".join(map(str, it["rows"])),
                                       ",".join(map(str, it["cols"])), it["reduced"]) for it in items]
    out.emit(dict(_header(doc), order=prof.order, d=fp(prof.d), beta=prof.beta, reduced=items), lines)
    return EXIT_OK


def cmd_smith(args, out):
    doc, F = parse_matrix_file(args.file)
    S = smith_candidate(F)
    diag = [fp(e) for e in S.diagonal]
    lines = ["rank: %d" % S.rank, "diag{%s}" % ", ".join(diag)]
    out.emit(dict(_header(doc), rank=S.rank, smith=diag), lines)
    return EXIT_OK


def cmd_smith_prime(args, out):
    doc, F = parse_matrix_file(args.file)
    p = parse_polynomial(args.prime, F.ctx)
    prof = smith_wrt_prime(F, p)
    exps = list(prof.exponents)
    lines = ["prime: %s" % fp(p), "exponents: (%s)" % ", ".join(map(str, exps))]
    out.emit(dict(_header(doc), prime=fp(p), exponents=exps), lines)
    return EXIT_OK


def cmd_factor(args, out):
    names = tuple(args.vars.split())
    if not names:
        raise ParseError("no variables given")
    ctx = VariableContext(names, parse_field(args.field))
    f = parse_polynomial(args.expr, ctx)
    hints = [parse_polynomial(h, ctx) for h in args.hint]
    if f.is_zero():
        raise PreconditionError("cannot factor the zero polynomial")
    if not f.is_univariate_in(0):
        raise PreconditionError("factor needs a polynomial in %s alone" % names[0])
    fac = factor_univariate(f, hints=hints, kronecker_bound=args.bound)
    items = [{"factor": fp(p), "exponent": e} for p, e in fac.factors]
    unit = format_scalar(fac.unit)
    parts = []
    for it in items:
        base = it["factor"] if " " not in it["factor"] else "(%s)" % it["factor"]
        parts.append(base if it["exponent"] == 1 else "%s^%d" % (base, it["exponent"]))
    text = " * ".join(([unit] if unit != "1" or not parts else []) + parts)
    field = "QQ" if ctx.field is QQ else "GF %d" % ctx.field.characteristic
    out.emit({"field": field, "vars": list(names), "input": fp(f), "unit": unit, "factors": items},
             [text])
    return EXIT_OK


def report_payload(doc, rep, certificates=False):
    orders = []
    for o in rep.orders:
        item = {"i": o.i, "beta": o.beta, "d": fp(o.d), "unit_ideal": o.unit_ideal}
        if certificates:
            item["cofactors"] = [fp(c) for c in o.cofactors] if o.cofactors is not None else None
        orders.append(item)
    return dict(
        _header(doc),
        rank=rep.rank,
        d_chain=[fp(d) for d in rep.d_chain],
        orders=orders,
        verdict=rep.verdict,
        smith=[fp(e) for e in rep.smith.diagonal] if rep.smith is not None else None,
        failing_order=rep.failing_order,
        transposed=rep.transposed,
        reason=rep.reason or None,
    )


def report_text(rep):
    lines = ["dims: %d x %d" % rep.dims, "rank: %d" % rep.rank]
    lines += ["d_%d = %s" % (k, fp(d)) for k, d in enumerate(rep.d_chain)]
    for o in rep.orders:
        lines.append("order %d: beta=%d d=%s unit_ideal=%s"
                     % (o.i, o.beta, fp(o.d), "yes" if o.unit_ideal else "no"))
        if o.cofactors is not None:
            lines.append("  cofactors: %s" % "; ".join(fp(c) for c in o.cofactors))
    verdict = "verdict: %s" % rep.verdict
    if rep.failing_order is not None:
        verdict += " (failing order %d)" % rep.failing_order
    if rep.reason:
        verdict += " (%s)" % rep.reason
    lines.append(verdict)
    if rep.smith is not None:
        lines.append("smith: diag{%s}" % ", ".join(fp(e) for e in rep.smith.diagonal))
    return lines


def cmd_decide(args, out):
    doc, F = parse_matrix_file(args.file)
    if F.is_zero():
        raise PreconditionError("the zero matrix has rank 0")
    rep = eq.decide(F, certificates=args.certificates)
    out.emit(report_payload(doc, rep, args.certificates), report_text(rep))
    if rep.verdict == eq.PRECONDITION_VIOLATED:
        return EXIT_PRECONDITION
    if rep.verdict == eq.NOT_EQUIVALENT:
        return EXIT_FAIL
    return EXIT_OK


def _parse_table(text):
    try:
        return [tuple(int(t) for t in row.split()) for row in text.split(";") if row.strip()]
    except ValueError:
        raise ParseError("exponent table must hold integers") from None


def cmd_gen(args, out):
    seed = default_seed() if args.seed is None else args.seed
    names = tuple(args.vars.split())
    ctx = VariableContext(names, parse_field(args.field))
    primes = [parse_polynomial(t, ctx) for t in args.primes.split(";") if t.strip()]
    table = _parse_table(args.exponents)
    try:
        F, D = eq.random_smith_instance(ctx, args.size, primes, table, seed,
                                        op_count=args.ops, degree_bound=args.degree)
    except ValueError as exc:
        raise PreconditionError(str(exc)) from None
    path = args.output
    truth_path = os.path.splitext(path)[0] + ".truth.json"
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_matrix_document(F))
    truth = {
        "seed": seed, "size": args.size, "ops": args.ops, "degree": args.degree,
        "primes": [fp(p) for p in primes], "exponents": [list(r) for r in table],
        "verdict": eq.EQUIVALENT, "smith": [fp(e) for e in D.diagonal],
    }
    with open(truth_path, "w", encoding="utf-8") as fh:
        fh.write(json.dumps(truth, indent=2) + "\n")
    out.emit({"matrix": path, "truth": truth_path, "seed": seed},
             ["wrote %s" % path, "wrote %s" % truth_path])
    return EXIT_OK


def cmd_verify(args, out):
    base = default_seed() if args.seed is None else args.seed
    results = run_suite(args.suite, args.seeds, base)
    passed = sum(1 for _, ok, _ in results if ok)
    failed = [{"seed": s, "detail": d} for s, ok, d in results if not ok]
    lines = ["seed %d: FAIL %s" % (f["seed"], f["detail"]) for f in failed]
    lines.append("%d/%d passed" % (passed, len(results)))
    out.emit({"suite": args.suite, "base_seed": base, "seeds": len(results), "passed": passed,
              "failed": failed}, lines)
    return EXIT_OK if passed == len(results) else EXIT_FAIL


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS,
                        help="report format (default text)")

    ap = argparse.ArgumentParser(prog="smithkit", parents=[common],
                                 description="Minors, Smith forms and the Smith-form equivalence test "
                                             "for multivariate polynomial matrices.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("minors", parents=[common], help="all i x i minors")
    p.add_argument("file")
    p.add_argument("-i", "--order", type=int, required=True)
    p.set_defaults(func=cmd_minors)

    p = sub.add_parser("dvals", parents=[common], help="the d-chain d_0..d_r")
    p.add_argument("file")
    p.set_defaults(func=cmd_dvals)

    p = sub.add_parser("reduced", parents=[common], help="reduced minors of order i")
    p.add_argument("file")
    p.add_argument("-i", "--order", type=int, required=True)
    p.set_defaults(func=cmd_reduced)

    p = sub.add_parser("smith", parents=[common], help="Smith form from the d-chain")
    p.add_argument("file")
    p.set_defaults(func=cmd_smith)

    p = sub.add_parser("smith-prime", parents=[common], help="exponents of a prime along the diagonal")
    p.add_argument("file")
    p.add_argument("-p", "--prime", required=True)
    p.set_defaults(func=cmd_smith_prime)

    p = sub.add_parser("factor", parents=[common], help="factor a univariate polynomial")
    p.add_argument("expr")
    p.add_argument("--vars", default="x1", help="space-separated variables; the first is factored over")
    p.add_argument("--field", default="QQ", help="QQ or 'GF p'")
    p.add_argument("--hint", action="append", default=[], help="candidate factor (repeatable)")
    p.add_argument("--bound", type=int, default=8, help="Kronecker search degree bound")
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("decide", parents=[common], help="is F equivalent to its Smith form?")
    p.add_argument("file")
    p.add_argument("--certificates", action="store_true", help="attach unit-ideal cofactors")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("gen", parents=[common], help="write a seeded U*D*V instance and its truth file")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--primes", required=True, help="';'-separated primes in the first variable")
    p.add_argument("--exponents", required=True, help="one row per prime, rows ';'-separated")
    p.add_argument("--vars", default="x1 x2 x3")
    p.add_argument("--field", default="QQ")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--ops", type=int, default=4, help="elementary operations per unimodular factor")
    p.add_argument("--degree", type=int, default=1, help="degree bound of shear factors")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", parents=[common], help="run a seeded property suite")
    p.add_argument("--suite", choices=sorted(SUITES), required=True)
    p.add_argument("--seeds", type=int, default=20)
    p.add_argument("--seed", type=int, default=None, help="first seed (default SMITHKIT_SEED or 0)")
    p.set_defaults(func=cmd_verify)
    return ap


def run_command(argv=None, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    out = _Out(getattr(args, "format", "text"), stdout)
    try:
        return args.func(args, out)
    except ParseError as exc:
        stderr.write("parse error: %s\n" % exc)
        return EXIT_PARSE
    except OSError as exc:
        stderr.write("error: %s\n" % exc)
        return EXIT_PARSE
    except (PreconditionError, FactorizationError) as exc:
        stderr.write("precondition violated: %s\n" % exc)
        return EXIT_PRECONDITION


def main(argv=None):
    sys.exit(run_command(argv))


if __name__ == "__main__":
    main()
