"""Serialization schemas and the command-line front end."""

import json
from fractions import Fraction as F

import jsonschema
import pytest

from bssvm.cli import main
from bssvm.exact import nth_root_field
from bssvm.machine import run_concrete
from bssvm.serialize import SCHEMAS, value_to_json
from bssvm.stdlib import stdlib_names, stdlib_program
from bssvm.stdlib.sources import source_text


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, *argv, "--format", "json")
    return code, json.loads(out), err


# -- value serialization -----------------------------------------------------

def test_value_to_json_rational():
    assert value_to_json(F(3, 4)) == "3/4"
    assert value_to_json(F(-5)) == "-5"


def test_value_to_json_algebraic():
    _, sqrt2 = nth_root_field(2, 2)
    doc = value_to_json(sqrt2 + F(1, 2))
    assert doc["min_poly"] == "-2 + 0*X + 1*X^2"
    assert doc["coords"] == ["1/2", "1"]
    lo, hi = F(doc["enclosure"][0]), F(doc["enclosure"][1])
    assert hi - lo <= F(1, 4096)
    assert lo < F(19142, 10000) < hi  # 0.5 + 1.41421...


def test_value_to_json_rational_valued_field_element():
    field, _ = nth_root_field(2, 2)
    assert value_to_json(field.from_rational(F(7, 2))) == "7/2"


# -- run ----------------------------------------------------------------------

def test_run_sgn_text(capsys):
    code, out, err = run_cli(capsys, "run", "--stdlib", "sgn", "--input", "(-3)")
    assert code == 0
    assert "status: halted" in out and "output: (-1)" in out


def test_run_trace_listing(capsys):
    code, out, _ = run_cli(capsys, "run", "--stdlib", "sgn", "--input", "(-3)",
                           "--trace")
    assert code == 0
    assert "BRANCH" in out and "branch=-1" in out


def test_run_json_schema(capsys):
    code, doc, _ = run_json(capsys, "run", "--stdlib", "even_zeros",
                            "--input", "(3/10)")
    assert code == 0
    jsonschema.validate(doc, SCHEMAS["trace"])
    assert doc["status"] == "halted" and doc["output"] == ["0"]


def test_run_fault_still_exits_zero(capsys):
    # a fault is a completed analysis, not a CLI failure
    code, doc, _ = run_json(capsys, "run", "--stdlib", "q_enumerator",
                            "--input", "(-1)", "--budget", "50")
    assert code == 0
    jsonschema.validate(doc, SCHEMAS["trace"])
    assert doc["status"] == "budget_exhausted"


def test_run_with_field_literal(capsys):
    code, doc, _ = run_json(capsys, "run", "--stdlib", "sgn",
                            "--input", "(sqrt2:(0,1))",
                            "--field", "sqrt2=X^2 - 2;1;2")
    assert code == 0
    jsonschema.validate(doc, SCHEMAS["trace"])
    assert doc["output"] == ["1"]


def test_run_program_file(tmp_path, capsys):
    path = tmp_path / "double.bss"
    path.write_text("PROGRAM double\nARITY 1\na: ADD c1 c0 c0\nb: OUTPUT c1..c1\n")
    code, out, _ = run_cli(capsys, "run", "--program", str(path),
                           "--input", "(3/2)")
    assert code == 0 and "output: (3)" in out


# -- shadow and paths ---------------------------------------------------------

def test_shadow_json_schema(capsys):
    code, doc, _ = run_json(capsys, "shadow", "--stdlib", "inv_shift",
                            "--input", "(3)")
    assert code == 0
    jsonschema.validate(doc, SCHEMAS["shadow"])
    assert doc["outcome"] == "halted"
    assert doc["field_boundary"]["ok"] is True


def test_shadow_algebraic_input_degree(capsys):
    # inv_shift writes 1/(x - 1), a degree-2 value on input sqrt2
    code, doc, _ = run_json(capsys, "shadow", "--stdlib", "inv_shift",
                            "--input", "(sqrt2:(0,1))",
                            "--field", "sqrt2=X^2 - 2;1;2")
    assert code == 0
    jsonschema.validate(doc, SCHEMAS["shadow"])
    assert doc["field_boundary"]["ok"] is True
    assert doc["field_boundary"]["max_value_degree"] == 2


def test_paths_json_schema(capsys):
    code, doc, _ = run_json(capsys, "paths", "--stdlib", "sgn", "--depth", "10")
    assert code == 0
    jsonschema.validate(doc, SCHEMAS["path_tree"])
    assert len(doc["leaves"]) == 3


def test_paths_text_lists_leaves(capsys):
    code, out, _ = run_cli(capsys, "paths", "--stdlib", "interval_member",
                           "--depth", "20")
    assert code == 0
    assert "leaves: 7" in out and out.count("halted:") == 7


# -- certify -------------------------------------------------------------------

def test_certify_sgn_spec_line(capsys):
    code, out, _ = run_cli(capsys, "certify", "--stdlib", "sgn",
                           "--input", "(5)", "--samples", "20")
    assert code == 0
    assert "epsilon = 1" in out and "samples: 20/20 pass" in out


def test_certify_json_schema(capsys):
    code, doc, _ = run_json(capsys, "certify", "--stdlib", "inv_shift",
                            "--input", "(2)", "--samples", "10", "--seed", "4")
    assert code == 0
    jsonschema.validate(doc, SCHEMAS["certificate"])
    assert doc["epsilon"] == "1/2"
    assert doc["neighborhood"]["ok"] is True


def test_certify_at_branch_zero_fails(capsys):
    code, doc, _ = run_json(capsys, "certify", "--stdlib", "sgn",
                            "--input", "(0)")
    assert code == 1
    assert doc["kind"] == "failure" and doc["analysis"] == "certify"


def test_certify_failure_text_record(capsys):
    code, out, _ = run_cli(capsys, "certify", "--stdlib", "sgn", "--input", "(0)")
    assert code == 1
    assert out.startswith("FALSIFIED [certify]")


# -- witness --------------------------------------------------------------------

def test_witness_confirmed_json(capsys):
    code, doc, _ = run_json(capsys, "witness", "--stdlib", "oracle_member",
                            "--oracle", "rationals", "--x1", "2",
                            "--input", "(5, 7)")
    assert code == 0
    jsonschema.validate(doc, SCHEMAS["witness_report"])
    assert doc["verdict"] == "counterexample_confirmed"
    assert doc["b"] == "11/2" and doc["m"] == 2


def test_witness_inapplicable_is_completed_analysis(capsys):
    code, doc, _ = run_json(capsys, "witness", "--stdlib", "eq_probe",
                            "--oracle", "rationals", "--x1", "2",
                            "--input", "(5, 5)")
    assert code == 0
    jsonschema.validate(doc, SCHEMAS["witness_report"])
    assert doc["verdict"] == "pipeline_inapplicable"


# -- cantor ----------------------------------------------------------------------

def test_cantor_decompose_spec_line(capsys):
    code, out, _ = run_cli(capsys, "cantor", "--decompose", "73/81")
    assert code == 0
    assert "c1 = 8/9" in out and "c2 = 2/81" in out and "exact" in out


def test_cantor_decompose_json_schema(capsys):
    code, doc, _ = run_json(capsys, "cantor", "--decompose", "73/81")
    assert code == 0
    jsonschema.validate(doc, SCHEMAS["cantor_pair"])
    assert doc["c1"] == "8/9" and doc["c2"] == "2/81" and doc["exact"] is True


def test_cantor_member_queries(capsys):
    code, out, _ = run_cli(capsys, "cantor", "--member", "1/4")
    assert code == 0 and "is a member" in out
    code, out, _ = run_cli(capsys, "cantor", "--member", "1/2")
    assert code == 0 and "is not a member" in out


def test_cantor_usage_errors(capsys):
    assert run_cli(capsys, "cantor")[0] == 2
    assert run_cli(capsys, "cantor", "--decompose", "3/2")[0] == 2
    assert run_cli(capsys, "cantor", "--decompose", "1/4",
                   "--member", "1/4")[0] == 2


# -- stdlib listing ----------------------------------------------------------------

def test_stdlib_listing(capsys):
    code, out, _ = run_cli(capsys, "stdlib")
    assert code == 0
    for name in stdlib_names():
        assert name in out


def test_stdlib_emit_matches_sources(capsys):
    code, out, _ = run_cli(capsys, "stdlib", "--emit", "cantor_cosemidecider")
    assert code == 0
    assert out == source_text("cantor_cosemidecider")


# -- oracles through the CLI ---------------------------------------------------------

def test_finite_oracle_from_file(tmp_path, capsys):
    path = tmp_path / "members.txt"
    path.write_text("(2)\n(3, 4)\n")
    code, out, _ = run_cli(capsys, "run", "--stdlib", "oracle_member",
                           "--input", "(5, 2)", "--oracle", f"finite:{path}")
    assert code == 0 and "output: (1)" in out
    code, out, _ = run_cli(capsys, "run", "--stdlib", "oracle_member",
                           "--input", "(5, 9)", "--oracle", f"finite:{path}")
    assert code == 0 and "output: (0)" in out


def test_degree_oracle_specs(capsys):
    code, out, _ = run_cli(capsys, "run", "--stdlib", "oracle_member",
                           "--input", "(5, sqrt2:(0,1))",
                           "--field", "sqrt2=X^2 - 2;1;2",
                           "--oracle", "deg=2")
    assert code == 0 and "output: (1)" in out
    code, out, _ = run_cli(capsys, "run", "--stdlib", "oracle_member",
                           "--input", "(5, sqrt2:(0,1))",
                           "--field", "sqrt2=X^2 - 2;1;2",
                           "--oracle", "degle=1")
    assert code == 0 and "output: (0)" in out


# -- usage errors ------------------------------------------------------------------

def test_usage_error_exit_codes(capsys):
    assert run_cli(capsys, "run", "--stdlib", "sgn")[0] == 2  # missing input
    assert run_cli(capsys, "run", "--stdlib", "nope", "--input", "(1)")[0] == 2
    assert run_cli(capsys, "run", "--stdlib", "sgn", "--program", "x.bss",
                   "--input", "(1)")[0] == 2  # both sources given
    assert run_cli(capsys, "run", "--stdlib", "sgn", "--input", "(1",)[0] == 2
    assert run_cli(capsys, "run", "--stdlib", "sgn", "--input", "(1)",
                   "--oracle", "wat")[0] == 2


def test_usage_errors_go_to_stderr(capsys):
    code, out, err = run_cli(capsys, "run", "--stdlib", "nope", "--input", "(1)")
    assert code == 2 and err and not out


# -- schema self-checks --------------------------------------------------------------

def test_schemas_are_valid_drafts():
    for name, schema in SCHEMAS.items():
        jsonschema.Draft202012Validator.check_schema(schema)


def test_trace_json_covers_oracle_steps(capsys):
    code, doc, _ = run_json(capsys, "run", "--stdlib", "oracle_member",
                            "--input", "(5, 3/4)", "--oracle", "rationals")
    assert code == 0
    jsonschema.validate(doc, SCHEMAS["trace"])
    oracle_steps = [s for s in doc["records"] if s.get("oracle")]
    assert oracle_steps and oracle_steps[0]["oracle"]["answer"] is True
