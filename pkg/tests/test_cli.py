import io
import json
from fractions import Fraction
import subprocess
import sys

import pytest
from hypothesis import given, settings

from smithkit import GF, PolyMatrix, VariableContext, parse_matrix_file, parse_polynomial
from smithkit.cli.main import run_command
from smithkit.cli.matrixfile import format_matrix_document, parse_matrix_text
from smithkit.cli.parser import ParseError
from smithkit.cli.printer import format_polynomial

from conftest import CTX2, CTX3, FIXTURES, M, P, polys

GF7 = VariableContext(("x1", "x2"), GF(7))


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_command([str(a) for a in argv], stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


# --- expression parser ------------------------------------------------------

def test_parse_examples():
    assert parse_polynomial("x1^2 - 1", CTX2) == CTX2.poly({(2, 0): 1, (0, 0): -1})
    assert parse_polynomial("(x1 + x2)*(x1 - x2)", CTX2) == CTX2.poly({(2, 0): 1, (0, 2): -1})
    f = parse_polynomial("3/2*x1*x2^3 + 1", CTX2)
    assert len(f) == 2
    assert parse_polynomial(format_polynomial(f), CTX2) == f


def test_parse_unary_and_division():
    assert P("-(x1 - 2)^2") == P("-x1^2 + 4*x1 - 4")
    assert P("x1/2 + 1/3") == CTX2.poly({(1, 0): Fraction(1, 2), (0, 0): Fraction(1, 3)})
    assert P("--x1") == P("x1")


@pytest.mark.parametrize("text, message, column", [
    ("2x1", "implicit multiplication", 2),
    ("x1 x2", "implicit multiplication", 4),
    ("x1^-2", "negative exponent", 4),
    ("x3 + 1", "unknown variable", 1),
    ("x1 +", "unexpected end", 5),
    ("(x1 + 1", "expected ')'", 8),
    ("x1 $ 2", "unexpected character", 4),
    ("x1 / x2", "nonzero constant", 4),
    ("x1 / 0", "nonzero constant", 4),
    ("x1^2^3", "chained", 5),
])
def test_parse_errors(text, message, column):
    with pytest.raises(ParseError) as info:
        parse_polynomial(text, CTX2, line=4)
    assert message in str(info.value)
    assert info.value.line == 4
    assert info.value.column == column


def test_parse_over_prime_field():
    f = parse_polynomial("8*x1 + 7", GF7)
    assert f == parse_polynomial("x1", GF7)
    assert format_polynomial(parse_polynomial("-x1", GF7)) == "6*x1"


# --- printer ----------------------------------------------------------------

def test_printer_format():
    assert format_polynomial(P("x2 + x1^2 - 3/4*x1*x2^2 + 1")) == "x1^2 - 3/4*x1*x2^2 + x2 + 1"
    assert format_polynomial(CTX2.zero) == "0"
    assert format_polynomial(P("-1")) == "-1"
    assert format_polynomial(P("-x1")) == "-x1"


@settings(max_examples=500)
@given(polys(CTX3, max_deg=4, max_terms=5, coeff=20))
def test_print_parse_round_trip(f):
    assert parse_polynomial(format_polynomial(f), CTX3) == f


@settings(max_examples=100)
@given(polys(GF7, max_deg=4, max_terms=5, coeff=20))
def test_print_parse_round_trip_gf(f):
    assert parse_polynomial(format_polynomial(f), GF7) == f


# --- matrix documents -------------------------------------------------------

def test_identity_document():
    doc, F = parse_matrix_text("vars: x1 x2\ndims: 2 2\n1; 0\n0; 1\n")
    assert F == PolyMatrix.identity(CTX2, 2)
    assert doc.field == "QQ" and doc.variables == ("x1", "x2") and doc.dims == (2, 2)


def test_shear_fixture_matches_hand_built():
    doc, F = parse_matrix_file(FIXTURES / "shear.mat")
    assert F == M([["x1", "x2"], [0, "x1"]])
    assert doc.entries == ("x1", "x2", "0", "x1")


def test_entry_count_error():
    with pytest.raises(ParseError) as info:
        parse_matrix_file(FIXTURES / "short.mat")
    assert "expected 4 entries, found 3" in str(info.value)


def test_stream_input_and_comments():
    text = "# header comment\nfield: GF 7\n\nvars: x1 x2   # trailing\ndims: 1 2\nx1 + 8; x2\n"
    doc, F = parse_matrix_file(io.StringIO(text))
    assert doc.field == "GF 7"
    assert F[0, 0] == parse_polynomial("x1 + 1", F.ctx)


@pytest.mark.parametrize("text, message", [
    ("field: GF 6\nvars: x1\ndims: 1 1\nx1\n", "prime"),
    ("field: RR\nvars: x1\ndims: 1 1\nx1\n", "unknown field"),
    ("vars: x1\ndims: 1 1\nx2\n", "unknown variable"),
    ("vars: x1 x1\ndims: 1 1\nx1\n", "duplicate variable"),
    ("dims: 1 1\nx1\n", "missing 'vars:'"),
    ("vars: x1\nx1\n", "missing 'dims:'"),
    ("vars: x1\ndims: 2 1\nx1; 1\n", "entries in row"),
    ("vars: x1\ndims: a b\nx1\n", "two integers"),
    ("vars: x1\ncolor: red\ndims: 1 1\nx1\n", "unknown header"),
])
def test_document_errors(text, message):
    with pytest.raises(ParseError) as info:
        parse_matrix_text(text)
    assert message in str(info.value)


def test_entry_errors_carry_location():
    with pytest.raises(ParseError) as info:
        parse_matrix_text("vars: x1 x2\ndims: 2 2\nx1; x2\n0; x1 x2\n")
    assert info.value.line == 4 and info.value.column == 7


def test_document_round_trip():
    F = M([["x1^2 - 1/2", "x2"], [0, "-x1*x2 + 3"]])
    _, G = parse_matrix_text(format_matrix_document(F))
    assert G == F


# --- commands and exit codes ------------------------------------------------

@pytest.mark.parametrize("argv, code", [
    (["decide", "shear.mat"], 1),
    (["decide", "identity.mat"], 0),
    (["decide", "precondition.mat"], 2),
    (["decide", "univariate.mat"], 0),
    (["decide", "antidiag.mat"], 0),
    (["decide", "gf7_wide.mat"], 1),
    (["decide", "tall.mat"], 0),
    (["decide", "short.mat"], 3),
    (["decide", "syntax.mat"], 3),
    (["decide", "badfield.mat"], 3),
    (["decide", "missing.mat"], 3),
    (["smith", "identity.mat"], 0),
    (["smith", "shear.mat"], 0),
    (["dvals", "precondition.mat"], 0),
    (["minors", "tall.mat", "-i", "2"], 0),
    (["minors", "tall.mat", "-i", "3"], 2),
    (["reduced", "shear.mat", "-i", "1"], 0),
    (["reduced", "shear.mat", "-i", "3"], 2),
    (["smith-prime", "univariate.mat", "-p", "x1"], 0),
    (["smith-prime", "precondition.mat", "-p", "x1"], 2),
    (["smith-prime", "univariate.mat", "-p", "x1^2 - 1"], 2),
    (["smith-prime", "univariate.mat", "-p", "x1 +"], 3),
])
def test_exit_codes_over_fixture_corpus(argv, code):
    argv = [a if not a.endswith(".mat") else str(FIXTURES / a) for a in argv]
    assert run(*argv)[0] == code


def test_bad_usage_is_a_parse_error():
    assert run("frobnicate")[0] == 3
    assert run("minors", FIXTURES / "shear.mat")[0] == 3


def test_decide_shear_report():
    code, out, _ = run("decide", FIXTURES / "shear.mat")
    assert code == 1
    assert "NotEquivalent (failing order 1)" in out


def test_smith_identity_report():
    code, out, _ = run("smith", FIXTURES / "identity.mat")
    assert code == 0 and "diag{1, 1}" in out


def test_json_schema():
    code, out, _ = run("decide", FIXTURES / "univariate.mat", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert list(data)[:9] == ["field", "vars", "dims", "rank", "d_chain", "orders", "verdict",
                              "smith", "failing_order"]
    assert data["d_chain"] == ["1", "x1", "x1^2"]
    assert data["orders"][0] == {"i": 1, "beta": 4, "d": "x1", "unit_ideal": True}
    assert data["smith"] == ["x1", "x1"] and data["failing_order"] is None

    data = json.loads(run("decide", FIXTURES / "precondition.mat", "--format", "json")[1])
    assert data["verdict"] == "PreconditionViolated" and data["smith"] is None and data["orders"] == []


def test_format_flag_before_subcommand():
    a = run("--format", "json", "dvals", FIXTURES / "shear.mat")[1]
    b = run("dvals", FIXTURES / "shear.mat", "--format", "json")[1]
    assert a == b and json.loads(a)["rank"] == 2


def test_certificates_in_json():
    data = json.loads(run("decide", FIXTURES / "antidiag.mat", "--certificates", "--format", "json")[1])
    assert [o["cofactors"] for o in data["orders"]] == [["0", "1", "-1", "0"], ["-1"]]


def test_factor_command():
    code, out, _ = run("factor", "x1^6 - x1^2", "--format", "json")
    data = json.loads(out)
    assert code == 0
    # degree first, then coefficients
    assert data["factors"] == [{"factor": "x1 - 1", "exponent": 1}, {"factor": "x1", "exponent": 2},
                               {"factor": "x1 + 1", "exponent": 1}, {"factor": "x1^2 + 1", "exponent": 1}]
    code, out, _ = run("factor", "x1^2 + 1", "--field", "GF 5")
    assert code == 0 and out.strip() == "(x1 + 2) * (x1 + 3)"
    assert run("factor", "x1*x2", "--vars", "x1 x2")[0] == 2
    assert run("factor", "x1 +")[0] == 3
    a, b = "x1^10 + x1^3 + 7", "x1^9 - 2*x1 + 5"
    product = "(%s)*(%s)" % (a, b)
    assert run("factor", product)[0] == 2
    assert run("factor", product, "--hint", a, "--hint", b)[0] == 0


def test_verify_command():
    code, out, _ = run("verify", "--suite", "cauchy-binet", "--seeds", "5")
    assert code == 0 and out.strip().endswith("5/5 passed")


def test_gen_then_decide(tmp_path):
    target = tmp_path / "inst.mat"
    code, _, _ = run("gen", "--size", "3", "--vars", "x1 x2", "--primes", "x1; x1 - 1",
                     "--exponents", "0 1 2; 0 0 1", "--seed", "4", "-o", target)
    assert code == 0
    truth = json.loads((tmp_path / "inst.truth.json").read_text())
    assert truth["smith"] == ["1", "x1", "x1^3 - x1^2"]
    data = json.loads(run("decide", target, "--format", "json")[1])
    assert data["verdict"] == truth["verdict"] and data["smith"] == truth["smith"]


def test_gen_rejects_bad_table(tmp_path):
    code, _, err = run("gen", "--size", "2", "--primes", "x1", "--exponents", "2 1", "-o", tmp_path / "a.mat")
    assert code == 2 and "nondecreasing" in err


def test_seed_environment_override(tmp_path, monkeypatch):
    args = ("gen", "--size", "2", "--vars", "x1 x2", "--primes", "x1", "--exponents", "0 1")
    run(*args, "--seed", "9", "-o", tmp_path / "a.mat")
    monkeypatch.setenv("SMITHKIT_SEED", "9")
    run(*args, "-o", tmp_path / "b.mat")
    monkeypatch.setenv("SMITHKIT_SEED", "0")
    run(*args, "-o", tmp_path / "c.mat")
    a, b, c = ((tmp_path / n).read_text() for n in ("a.mat", "b.mat", "c.mat"))
    assert a == b and a != c
    monkeypatch.setenv("SMITHKIT_SEED", "nine")
    assert run(*args, "-o", tmp_path / "d.mat")[0] == 3


def test_reports_are_byte_identical():
    for argv in (("decide", FIXTURES / "gf7_wide.mat", "--format", "json"),
                 ("verify", "--suite", "negative", "--seeds", "4", "--format", "json")):
        assert run(*argv)[1] == run(*argv)[1]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "smithkit", "decide", str(FIXTURES / "shear.mat")],
                          capture_output=True, text=True)
    assert proc.returncode == 1 and "failing order 1" in proc.stdout
