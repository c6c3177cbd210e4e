"""Parser for the program text format.

Layout: a PROGRAM line, an ARITY line, zero or more PARAM lines, an optional
ZERO line, then one labeled instruction per line.  '#' starts a comment.
Errors carry the 1-based source line.  parse_program(p.to_text()) == p.
"""

from __future__ import annotations

import re
from fractions import Fraction

from ..errors import DslSyntaxError, ProgramError
from ..exact import parse_rational
from .program import (
    ARITH_OPS,
    Arith,
    Branch,
    Const,
    Copy,
    Instruction,
    Jmp,
    OracleCall,
    Output,
    Program,
    Shift,
    VAR_ARITY,
)

_LABEL_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_CELL_RE = re.compile(r"c(0|[1-9][0-9]*)$")
_RANGE_RE = re.compile(r"c(0|[1-9][0-9]*)\.\.c(0|[1-9][0-9]*)$")
_ZERO_RE = re.compile(r"(0|[1-9][0-9]*)\.\.(0|[1-9][0-9]*)$")


def _cell(tok: str, line: int) -> int:
    m = _CELL_RE.match(tok)
    if not m:
        raise DslSyntaxError(f"expected a cell like c3, got {tok!r}", line)
    return int(m.group(1))


def _cell_range(tok: str, line: int) -> tuple[int, int]:
    m = _RANGE_RE.match(tok)
    if not m:
        raise DslSyntaxError(f"expected a cell range like c0..c2, got {tok!r}", line)
    return int(m.group(1)), int(m.group(2))


def _label(tok: str, line: int) -> str:
    if not _LABEL_RE.fullmatch(tok):
        raise DslSyntaxError(f"bad label {tok!r}", line)
    return tok


def _rational(tok: str, line: int) -> Fraction:
    try:
        return parse_rational(tok)
    except Exception:
        raise DslSyntaxError(f"bad rational literal {tok!r}", line) from None


def _instruction(op: str, args: list[str], line: int) -> Instruction:
    def need(n: int):
        if len(args) != n:
            raise DslSyntaxError(f"{op} takes {n} operand(s), got {len(args)}", line)

    if op == "CONST":
        need(2)
        dst = _cell(args[0], line)
        if args[1].startswith("$"):
            name = args[1][1:]
            if not _LABEL_RE.fullmatch(name):
                raise DslSyntaxError(f"bad parameter reference {args[1]!r}", line)
            return Const(dst, param=name)
        return Const(dst, value=_rational(args[1], line))
    if op == "COPY":
        need(2)
        return Copy(_cell(args[0], line), _cell(args[1], line))
    if op in ARITH_OPS:
        need(3)
        return Arith(op, _cell(args[0], line), _cell(args[1], line), _cell(args[2], line))
    if op == "BRANCH":
        need(4)
        return Branch(_cell(args[0], line), _label(args[1], line),
                      _label(args[2], line), _label(args[3], line))
    if op == "JMP":
        need(1)
        return Jmp(_label(args[0], line))
    if op == "SHIFTL":
        need(0)
        return Shift("left")
    if op == "SHIFTR":
        need(0)
        return Shift("right")
    if op == "ORACLE":
        need(3)
        lo, hi = _cell_range(args[0], line)
        return OracleCall(lo, hi, _label(args[1], line), _label(args[2], line))
    if op == "OUTPUT":
        need(1)
        lo, hi = _cell_range(args[0], line)
        return Output(lo, hi)
    raise DslSyntaxError(f"unknown opcode {op!r}", line)


def parse_program(text: str) -> Program:
    # Strip comments, keep (line number, content) for nonblank lines.
    lines: list[tuple[int, str]] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if content:
            lines.append((number, content))
    if not lines:
        raise DslSyntaxError("empty program text", 1)

    pos = 0

    def take() -> tuple[int, str]:
        nonlocal pos
        if pos >= len(lines):
            raise DslSyntaxError("unexpected end of program", lines[-1][0])
        pos += 1
        return lines[pos - 1]

    line, content = take()
    parts = content.split()
    if parts[0] != "PROGRAM" or len(parts) != 2:
        raise DslSyntaxError("expected: PROGRAM <name>", line)
    name = parts[1]

    line, content = take()
    parts = content.split()
    if parts[0] != "ARITY" or len(parts) != 2:
        raise DslSyntaxError("expected: ARITY <n|VAR>", line)
    arity: int | str
    if parts[1] == VAR_ARITY:
        arity = VAR_ARITY
    else:
        try:
            arity = int(parts[1])
        except ValueError:
            raise DslSyntaxError(f"bad arity {parts[1]!r}", line) from None
        if arity < 0:
            raise DslSyntaxError("arity must be nonnegative", line)

    params: list[tuple[str, Fraction]] = []
    zero_window = None
    body: list[tuple[str, Instruction]] = []
    body_started = False
    while pos < len(lines):
        line, content = take()
        parts = content.split()
        if parts[0] == "PARAM":
            if body_started or zero_window is not None:
                raise DslSyntaxError("PARAM lines must precede ZERO and the body", line)
            if len(parts) != 4 or parts[2] != "=":
                raise DslSyntaxError("expected: PARAM <name> = <rational>", line)
            params.append((_label(parts[1], line), _rational(parts[3], line)))
            continue
        if parts[0] == "ZERO":
            if body_started:
                raise DslSyntaxError("ZERO must precede the body", line)
            if zero_window is not None:
                raise DslSyntaxError("duplicate ZERO line", line)
            if len(parts) != 2:
                raise DslSyntaxError("expected: ZERO <lo>..<hi>", line)
            m = _ZERO_RE.match(parts[1])
            if not m:
                raise DslSyntaxError(f"bad ZERO range {parts[1]!r}", line)
            zero_window = (int(m.group(1)), int(m.group(2)))
            continue
        body_started = True
        head = parts[0]
        if not head.endswith(":"):
            raise DslSyntaxError("instruction lines start with '<label>:'", line)
        label = _label(head[:-1], line)
        if len(parts) < 2:
            raise DslSyntaxError("label without an instruction", line)
        body.append((label, _instruction(parts[1], parts[2:], line)))

    if not body:
        raise DslSyntaxError("program has no instructions", lines[-1][0])
    try:
        return Program(name, arity, tuple(params), zero_window, tuple(body))
    except ProgramError as exc:
        raise DslSyntaxError(str(exc)) from exc
