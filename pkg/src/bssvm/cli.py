"""Command-line front end.

Exit codes: 0 for a completed analysis, 1 when an analysis falsifies an
expected invariant (a failed certificate, a boundary-check failure, an
internally inconsistent report), 2 for usage errors.

Input tuples are written "(5, 7)" or "(-3)"; a coordinate may also be a
field-element literal "sqrt2:(0,1)" naming a field registered with
--field.  The --field flag takes "name=minpoly;lo;hi" where minpoly is
the text of a monic defining polynomial and [lo, hi] isolates the
intended real root, e.g. --field "sqrt2=X^2 - 2;1;2".
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .errors import BssError, CertificateError
from .exact import NumberField, RatInterval, UniPoly, parse_rational, format_rational
from .machine import (
    DEFAULT_BUDGET,
    Oracle,
    Program,
    parse_program,
    run_concrete,
    cantor_membership,
    trace_to_text,
)
from .serialize import (
    cantor_to_json,
    certificate_to_json,
    shadow_to_json,
    trace_to_json,
    tree_to_json,
    value_to_json,
    witness_to_json,
)
from .stdlib import stdlib_names, stdlib_program
from .stdlib.sources import source_text
from .symbolic import (
    epsilon_certificate,
    extract_f,
    explore_paths,
    field_boundary_check,
    shadow_trace,
    verify_neighborhood,
)
from .witness import build_counterexample, cantor_decompose, ternary_string


class UsageError(BssError):
    pass


# -- literals ---------------------------------------------------------------


def parse_field_registration(text: str) -> tuple[str, NumberField]:
    try:
        name, rest = text.split("=", 1)
        poly_text, lo, hi = rest.split(";")
        poly = UniPoly.parse(poly_text)
        field = NumberField(poly, RatInterval(parse_rational(lo), parse_rational(hi)))
    except (ValueError, BssError) as exc:
        raise UsageError(f"bad --field {text!r}: {exc}") from None
    return name.strip(), field


def _split_top_level(body: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in body:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise UsageError("unbalanced parentheses in input tuple")
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if depth != 0:
        raise UsageError("unbalanced parentheses in input tuple")
    parts.append("".join(cur))
    return parts


def parse_input_tuple(text: str, fields: dict[str, NumberField]) -> tuple:
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise UsageError(f"input tuple must be parenthesized, got {text!r}")
    body = s[1:-1].strip()
    if not body:
        return ()
    values = []
    for item in _split_top_level(body):
        item = item.strip()
        if ":" in item:
            name, coords_text = item.split(":", 1)
            name = name.strip()
            if name not in fields:
                raise UsageError(f"unknown field {name!r}; register it with --field")
            field = fields[name]
            coords_text = coords_text.strip()
            if not (coords_text.startswith("(") and coords_text.endswith(")")):
                raise UsageError(f"field element needs coordinates, got {item!r}")
            coords = [parse_rational(c) for c in coords_text[1:-1].split(",")]
            if len(coords) > field.degree:
                raise UsageError(f"{name!r} elements take at most "
                                 f"{field.degree} coordinates")
            coords += [Fraction(0)] * (field.degree - len(coords))
            from .exact import AlgebraicNumber
            values.append(AlgebraicNumber(field, tuple(coords)))
        else:
            try:
                values.append(parse_rational(item))
            except BssError as exc:
                raise UsageError(str(exc)) from None
    return tuple(values)


def parse_oracle_spec(text: str) -> Oracle:
    s = text.strip()
    if s == "rationals":
        return Oracle.rationals()
    if s == "algebraic":
        return Oracle.algebraic()
    if s == "cantor":
        return Oracle.cantor()
    if s == "empty":
        return Oracle.empty()
    if s.startswith("deg="):
        return Oracle.degree_eq(_positive_int(s[4:], "oracle degree"))
    if s.startswith("degle="):
        return Oracle.degree_leq(_positive_int(s[6:], "oracle degree"))
    if s.startswith("finite:"):
        path = s[len("finite:"):]
        try:
            lines = [ln.strip() for ln in open(path, encoding="utf-8")]
        except OSError as exc:
            raise UsageError(f"cannot read finite oracle file: {exc}") from None
        tuples = [parse_input_tuple(ln, {}) for ln in lines if ln]
        return Oracle.finite(tuples)
    raise UsageError(f"unknown oracle spec {text!r}")


def _positive_int(text: str, what: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise UsageError(f"{what} must be an integer, got {text!r}") from None
    if n < 1:
        raise UsageError(f"{what} must be positive")
    return n


# -- program/argument plumbing ----------------------------------------------


def load_program(args) -> Program:
    if args.stdlib is not None and args.program is not None:
        raise UsageError("--stdlib and --program are alternatives; give one")
    if args.stdlib is not None:
        if args.stdlib not in stdlib_names():
            raise UsageError(f"no library program named {args.stdlib!r}; "
                             f"try `bss stdlib`")
        return stdlib_program(args.stdlib)
    if args.program is not None:
        try:
            text = open(args.program, encoding="utf-8").read()
        except OSError as exc:
            raise UsageError(f"cannot read program: {exc}") from None
        return parse_program(text)
    raise UsageError("one of --stdlib or --program is required")


def registered_fields(args) -> dict[str, NumberField]:
    fields = {}
    for spec in args.field or ():
        name, field = parse_field_registration(spec)
        fields[name] = field
    return fields


def required_input(args, fields) -> tuple:
    if args.input is None:
        raise UsageError("--input is required for this command")
    return parse_input_tuple(args.input, fields)


def emit(args, obj: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(obj, indent=2))
    else:
        print(text, end="" if text.endswith("\n") else "\n")


def fail_record(args, kind: str, detail: str) -> int:
    record = {"kind": "failure", "analysis": kind, "detail": detail}
    if args.format == "json":
        print(json.dumps(record, indent=2))
    else:
        print(f"FALSIFIED [{kind}]: {detail}")
    return 1


# -- commands ----------------------------------------------------------------


def cmd_run(args) -> int:
    fields = registered_fields(args)
    program = load_program(args)
    oracle = parse_oracle_spec(args.oracle)
    values = required_input(args, fields)
    result, trace = run_concrete(program, values, oracle=oracle, budget=args.budget)
    lines = []
    if args.trace:
        lines.append(trace_to_text(trace))
    lines.append(f"status: {result.status}"
                 + (f" ({result.fault_kind})" if result.fault_kind else ""))
    lines.append(f"steps: {result.steps}")
    if result.output is not None:
        rendered = ", ".join(_render_value(v) for v in result.output)
        lines.append(f"output: ({rendered})")
    emit(args, trace_to_json(trace), "\n".join(lines))
    return 0


def _render_value(v) -> str:
    j = value_to_json(v)
    if isinstance(j, dict):
        mid = (Fraction(j["enclosure"][0]) + Fraction(j["enclosure"][1])) / 2
        element = UniPoly.parse(j["element"]).pretty()
        min_poly = UniPoly.parse(j["min_poly"]).pretty()
        return (f"{element} where {min_poly} = 0; "
                f"approximately {float(mid):.6g}")
    return j


def cmd_shadow(args) -> int:
    fields = registered_fields(args)
    program = load_program(args)
    oracle = parse_oracle_spec(args.oracle)
    values = required_input(args, fields)
    trace = shadow_trace(program, values, oracle=oracle, budget=args.budget)
    report = field_boundary_check(trace)
    lines = [f"outcome: {trace.outcome}"
             + (f" ({trace.fault_kind})" if trace.fault_kind else ""),
             f"steps: {trace.steps_executed}"]
    if trace.output_functions is not None:
        for f, v in zip(trace.output_functions, trace.output_values):
            lines.append(f"output: {f} = {_render_value(v)}")
    for e in trace.branch_log:
        lines.append(f"branch: sign({e.function}) = {e.sign} at step {e.step}")
    for e in trace.oracle_log:
        fns = ", ".join(str(f) for f in e.functions)
        lines.append(f"oracle: ({fns}) -> {e.answer}")
    lines.append(f"field boundary: {'ok' if report.ok else 'FAILED'}, "
                 f"{report.cells_checked} cells, "
                 f"max value degree {report.max_value_degree}")
    for msg in report.failures:
        lines.append(f"  failure: {msg}")
    emit(args, shadow_to_json(trace, report), "\n".join(lines))
    return 0 if report.ok else 1


def cmd_paths(args) -> int:
    program = load_program(args)
    oracle = parse_oracle_spec(args.oracle)
    tree = explore_paths(program, depth_budget=args.depth,
                         oracle_policy=args.oracle_policy, oracle=oracle)
    lines = [f"program: {program.name}", f"leaves: {len(tree.leaves)}"]
    for leaf in tree.leaves:
        conds = ", ".join(f"sign({f}) = {s}" for f, s in leaf.condition.constraints)
        extra = ""
        if leaf.condition.oracle_assumptions:
            asm = "; ".join(f"oracle({', '.join(map(str, fns))}) = {ans}"
                            for fns, ans in leaf.condition.oracle_assumptions)
            extra = f" assuming {asm}"
        outs = ("" if leaf.outputs is None
                else " output (" + ", ".join(str(f) for f in leaf.outputs) + ")")
        mz = " [measure-zero]" if leaf.measure_zero else ""
        fk = f" ({leaf.fault_kind})" if leaf.fault_kind else ""
        lines.append(f"  [{' '.join(leaf.history) or 'root'}] {leaf.outcome}{fk}:"
                     f" {conds or 'no constraints'}{extra}{outs}{mz}")
    emit(args, tree_to_json(tree), "\n".join(lines))
    return 0


def cmd_certify(args) -> int:
    fields = registered_fields(args)
    program = load_program(args)
    oracle = parse_oracle_spec(args.oracle)
    values = required_input(args, fields)
    trace = shadow_trace(program, values, oracle=oracle, budget=args.budget)
    if trace.outcome != "halted":
        return fail_record(args, "certify",
                           f"run did not halt ({trace.outcome}); nothing to certify")
    functions = extract_f(trace)
    try:
        cert = epsilon_certificate(functions, trace.input)
    except CertificateError as exc:
        return fail_record(args, "certify", str(exc))
    report = verify_neighborhood(program, oracle, trace, cert,
                                 samples=args.samples, seed=args.seed)
    lines = [f"epsilon = {format_rational(cert.epsilon)}",
             f"functions: {len(cert.functions)}"]
    for f, (num_enc, den_enc) in zip(cert.functions, cert.enclosures):
        lines.append(f"  {f}: num in [{format_rational(num_enc.lo)}, "
                     f"{format_rational(num_enc.hi)}], den in "
                     f"[{format_rational(den_enc.lo)}, {format_rational(den_enc.hi)}]")
    lines.append(f"samples: {report.passed}/{len(report.samples)} pass")
    if not report.ok:
        for s in report.samples:
            if not s.ok:
                lines.append(f"  MISMATCH at ({', '.join(map(str, s.point))}): {s.detail}")
    emit(args, certificate_to_json(cert, report), "\n".join(lines))
    return 0 if report.ok else 1


def cmd_witness(args) -> int:
    fields = registered_fields(args)
    program = load_program(args)
    oracle = parse_oracle_spec(args.oracle)
    probe = required_input(args, fields)
    try:
        x1 = parse_rational(args.x1)
    except BssError as exc:
        raise UsageError(f"bad --x1: {exc}") from None
    try:
        report = build_counterexample(program, oracle, x1, probe, budget=args.budget)
    except BssError as exc:
        return fail_record(args, "witness", str(exc))
    lines = [f"verdict: {report.verdict}"]
    if report.n is not None:
        lines.append(f"n = {report.n}, m = {report.m}")
    if report.b is not None:
        lines.append(f"b = {format_rational(report.b)}, x2 = {_render_value(report.x2)}")
    if report.path_equal is not None:
        lines.append(f"path_equal: {report.path_equal}")
        lines.append(f"machine output: {report.machine_output}, "
                     f"ground truth: {report.ground_truth}")
    for note in report.notes:
        lines.append(f"note: {note}")
    emit(args, witness_to_json(report), "\n".join(lines))
    return 0


def cmd_cantor(args) -> int:
    if (args.decompose is None) == (args.member is None):
        raise UsageError("cantor takes exactly one of --decompose or --member")
    if args.member is not None:
        x = _cantor_arg(args.member)
        is_member = cantor_membership(x)
        obj = {"kind": "cantor_membership", "input": format_rational(x),
               "member": is_member}
        emit(args, obj, f"{format_rational(x)} ({ternary_string(x)}) is "
             f"{'a member' if is_member else 'not a member'} of the middle-thirds set")
        return 0
    x = _cantor_arg(args.decompose)
    if not 0 <= x <= 1:
        raise UsageError(f"decomposition needs x in [0, 1], got {format_rational(x)}")
    pair = cantor_decompose(x)
    exact = pair.c1 + pair.c2 / 2 == x
    text = "\n".join([
        f"x  = {format_rational(x)} ({ternary_string(x)})",
        f"c1 = {format_rational(pair.c1)} ({ternary_string(pair.c1)})",
        f"c2 = {format_rational(pair.c2)} ({ternary_string(pair.c2)})",
        f"check: c1 + c2/2 = x {'exactly' if exact else 'FAILED'}",
    ])
    emit(args, cantor_to_json(x, pair), text)
    return 0 if exact else 1


def _cantor_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except BssError as exc:
        raise UsageError(str(exc)) from None


def cmd_stdlib(args) -> int:
    if args.emit is not None:
        if args.emit not in stdlib_names():
            raise UsageError(f"no library program named {args.emit!r}")
        print(source_text(args.emit), end="")
        return 0
    entries = [{"name": name, "arity": stdlib_program(name).arity}
               for name in stdlib_names()]
    text = "\n".join(f"{e['name']} (arity {e['arity']})" for e in entries)
    emit(args, {"kind": "stdlib", "entries": entries}, text)
    return 0


# -- wiring -------------------------------------------------------------------


def _add_common(p, *, input_flag=True, oracle_flag=True, budget_flag=True):
    p.add_argument("--stdlib", metavar="NAME", help="library program name")
    p.add_argument("--program", metavar="PATH", help="path to a DSL source file")
    if input_flag:
        p.add_argument("--input", metavar="TUPLE",
                       help='input tuple, e.g. "(5, 7)" or "(sqrt2:(0,1))"')
        p.add_argument("--field", action="append", metavar="NAME=MINPOLY;LO;HI",
                       help="register a number field for input literals "
                            '(e.g. "sqrt2=X^2 - 2;1;2"); repeatable')
    if oracle_flag:
        p.add_argument("--oracle", default="empty",
                       metavar="rationals|algebraic|deg=d|degle=d|cantor|finite:PATH|empty",
                       help="membership oracle (default: empty)")
    if budget_flag:
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                       help=f"step budget (default {DEFAULT_BUDGET})")
    p.add_argument("--format", choices=["text", "json"], default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bss",
        description="Exact-arithmetic machine runner and symbolic analyzer")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", help="execute a program on an exact input")
    _add_common(p)
    p.add_argument("--trace", action="store_true", help="print the full step trace")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("shadow", help="concrete run with symbolic cell functions")
    _add_common(p)
    p.set_defaults(func=cmd_shadow)

    p = sub.add_parser("paths", help="explore the program's branch tree symbolically")
    _add_common(p, input_flag=False, budget_flag=False)
    p.add_argument("--depth", type=int, default=12, help="fork budget (default 12)")
    p.add_argument("--oracle-policy", choices=["generic", "split"],
                   default="generic", dest="oracle_policy")
    p.set_defaults(func=cmd_paths)

    p = sub.add_parser("certify", help="certify a neighborhood of constant behavior")
    _add_common(p)
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("witness", help="run the root-placement counterexample pipeline")
    _add_common(p)
    p.add_argument("--x1", default="2",
                   help="rational whose m-th root lands in the second "
                        "coordinate (default 2)")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("cantor", help="middle-thirds decomposition and membership")
    p.add_argument("--decompose", metavar="RATIONAL")
    p.add_argument("--member", metavar="RATIONAL")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_cantor)

    p = sub.add_parser("stdlib", help="list or emit the library programs")
    p.add_argument("--emit", metavar="NAME", help="print one program's DSL source")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_stdlib)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BssError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
