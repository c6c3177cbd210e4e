"""Concrete interpreter.

Execution model: an unbounded, Z-indexed sparse tape of exact values plus a
window offset.  A cell operand c<i> addresses absolute cell offset+i.  SHIFTR
and SHIFTL move the window by one.  Reading a never-written cell is a
blank_read fault; the declared ZERO window (absolute, at offset 0) and the
input cells 0..k-1 are pre-written.  Division by an exact zero is a
division_by_zero fault, and an oracle that cannot decide its query is an
oracle_unsupported fault.

OUTPUT c<lo>..c<hi> halts and emits absolute cells [lo, offset+hi]: the low
end is anchored to the initial frame, the high end rides the window, which
is what lets a program emit a tuple whose length it chose at run time.  With
the window at its initial position this is just [lo, hi].  An inverted range
emits the empty tuple.

Each executed instruction appends one step record: label, instruction,
cells written (absolute), branch sign taken, oracle query and answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import BssError, PoleError
from ..exact import AlgebraicNumber, format_rational, sign_at
from .oracle import Oracle, OracleUnsupported, oracle_query
from .program import (
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
    format_instruction,
)

Value = Fraction | AlgebraicNumber

HALTED = "halted"
BUDGET_EXHAUSTED = "budget_exhausted"
FAULT = "fault"

DIVISION_BY_ZERO = "division_by_zero"
BLANK_READ = "blank_read"
ORACLE_UNSUPPORTED = "oracle_unsupported"

DEFAULT_BUDGET = 10**5


@dataclass(frozen=True)
class RunResult:
    status: str
    output: tuple[Value, ...] | None
    steps: int
    fault_kind: str | None = None

    def __post_init__(self):
        if self.status not in (HALTED, BUDGET_EXHAUSTED, FAULT):
            raise BssError(f"bad status {self.status!r}")
        if (self.output is not None) != (self.status == HALTED):
            raise BssError("output is present exactly when the run halted")
        if (self.fault_kind is not None) != (self.status == FAULT):
            raise BssError("fault_kind is present exactly when the run faulted")


@dataclass(frozen=True)
class StepRecord:
    index: int
    label: str
    instruction: Instruction
    writes: tuple[tuple[int, Value], ...]
    branch_sign: int | None = None
    oracle_event: tuple[tuple[Value, ...], bool] | None = None


@dataclass
class Trace:
    program: Program
    input: tuple[Value, ...]
    oracle: Oracle
    steps: list[StepRecord]
    result: RunResult


class _Fault(Exception):
    def __init__(self, kind: str):
        self.kind = kind


def normalize_input(program: Program, input_values) -> tuple[Value, ...]:
    values = tuple(v if isinstance(v, AlgebraicNumber) else Fraction(v) for v in input_values)
    if program.arity != VAR_ARITY and len(values) != program.arity:
        raise BssError(f"program {program.name} takes {program.arity} input(s), got {len(values)}")
    return values


def initial_cells(program: Program, values: tuple[Value, ...]) -> dict[int, Value]:
    cells: dict[int, Value] = {}
    if program.zero_window is not None:
        lo, hi = program.zero_window
        for i in range(lo, hi + 1):
            cells[i] = Fraction(0)
    for i, v in enumerate(values):
        cells[i] = v
    return cells


def run_concrete(program: Program, input_values, oracle: Oracle | None = None,
                 budget: int = DEFAULT_BUDGET) -> tuple[RunResult, Trace]:
    """Run to halt, fault, or budget exhaustion; always returns the trace."""
    if budget < 1:
        raise BssError("budget must be positive")
    oracle = oracle if oracle is not None else Oracle.empty()
    values = normalize_input(program, input_values)
    cells = initial_cells(program, values)
    labels = program.label_index()
    instructions = program.instructions

    offset = 0
    pc = 0
    steps: list[StepRecord] = []
    result: RunResult | None = None

    def read(absolute: int) -> Value:
        try:
            return cells[absolute]
        except KeyError:
            raise _Fault(BLANK_READ) from None

    while result is None:
        if len(steps) >= budget:
            result = RunResult(BUDGET_EXHAUSTED, None, len(steps))
            break
        label, instr = instructions[pc]
        index = len(steps)
        writes: tuple[tuple[int, Value], ...] = ()
        branch_sign = None
        oracle_event = None
        next_pc = pc + 1
        try:
            if isinstance(instr, Const):
                value = instr.value if instr.param is None else program.param_value(instr.param)
                cells[offset + instr.dst] = value
                writes = ((offset + instr.dst, value),)
            elif isinstance(instr, Copy):
                value = read(offset + instr.src)
                cells[offset + instr.dst] = value
                writes = ((offset + instr.dst, value),)
            elif isinstance(instr, Arith):
                a = read(offset + instr.src1)
                b = read(offset + instr.src2)
                if instr.op == "ADD":
                    value = a + b
                elif instr.op == "SUB":
                    value = a - b
                elif instr.op == "MUL":
                    value = a * b
                else:
                    if sign_at(b) == 0:
                        raise _Fault(DIVISION_BY_ZERO)
                    try:
                        value = a / b
                    except (PoleError, ZeroDivisionError):
                        raise _Fault(DIVISION_BY_ZERO) from None
                cells[offset + instr.dst] = value
                writes = ((offset + instr.dst, value),)
            elif isinstance(instr, Branch):
                branch_sign = sign_at(read(offset + instr.src))
                target = {-1: instr.neg, 0: instr.zero, 1: instr.pos}[branch_sign]
                next_pc = labels[target]
            elif isinstance(instr, Jmp):
                next_pc = labels[instr.target]
            elif isinstance(instr, Shift):
                offset += 1 if instr.direction == "right" else -1
            elif isinstance(instr, OracleCall):
                query = tuple(read(offset + i) for i in range(instr.lo, instr.hi + 1))
                try:
                    answer = oracle_query(oracle, query)
                except OracleUnsupported:
                    raise _Fault(ORACLE_UNSUPPORTED) from None
                oracle_event = (query, answer)
                next_pc = labels[instr.yes if answer else instr.no]
            elif isinstance(instr, Output):
                top = offset + instr.hi
                output = tuple(read(i) for i in range(instr.lo, top + 1))
                result = RunResult(HALTED, output, index + 1)
            else:
                raise BssError(f"unknown instruction {instr!r}")
        except _Fault as fault:
            result = RunResult(FAULT, None, index + 1, fault_kind=fault.kind)
        steps.append(StepRecord(index, label, instr, writes, branch_sign, oracle_event))
        pc = next_pc

    return result, Trace(program, values, oracle, steps, result)


# -- trace pretty printer --------------------------------------------------


def format_value(v: Value) -> str:
    if isinstance(v, AlgebraicNumber):
        if v.is_rational():
            return format_rational(v.as_fraction())
        coords = ",".join(format_rational(c) for c in v.coords)
        return f"alg({coords}; {v.field.min_poly})"
    return format_rational(v)


def trace_to_text(trace: Trace) -> str:
    lines = []
    for step in trace.steps:
        writes = ",".join(f"c{cell}={format_value(value)}" for cell, value in step.writes)
        branch = "-" if step.branch_sign is None else f"{step.branch_sign:+d}"
        if step.oracle_event is None:
            oracle = "-"
        else:
            query, answer = step.oracle_event
            oracle = f"({','.join(format_value(v) for v in query)})->{'yes' if answer else 'no'}"
        lines.append(f"{step.index} {step.label} {format_instruction(step.instruction)} "
                     f"writes=[{writes}] branch={branch} oracle={oracle}")
    r = trace.result
    tail = f"{r.status} steps={r.steps}"
    if r.status == HALTED:
        tail += f" output=({','.join(format_value(v) for v in r.output)})"
    if r.status == FAULT:
        tail += f" fault={r.fault_kind}"
    lines.append(tail)
    return "\n".join(lines) + "\n"
