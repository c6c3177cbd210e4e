"""Concrete-symbolic lockstep execution.

shadow_trace runs a program on a concrete input while carrying, for every
written cell, the canonical rational function of the input indeterminates
that produced it.  Branch directions and oracle answers come from the
concrete values, so the symbolic side never decides anything; it only
records what function of the input each cell holds.  The payoff is the
agreement property: evaluating any recorded function at the input
reproduces the concrete cell exactly, step by step, which
field_boundary_check verifies after the fact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import BssError, PoleError
from ..exact import (AlgebraicNumber, RationalFunction, algebraic_equal,
                     degree_over_q, rf_eval, sign_at)
from ..machine.interp import (BLANK_READ, BUDGET_EXHAUSTED, DEFAULT_BUDGET,
                              DIVISION_BY_ZERO, FAULT, HALTED,
                              ORACLE_UNSUPPORTED, Value, _Fault,
                              initial_cells, normalize_input)
from ..machine.oracle import Oracle, OracleUnsupported, oracle_query
from ..machine.program import (Arith, Branch, Const, Copy, Jmp, OracleCall,
                               Output, Program, Shift)


@dataclass(frozen=True)
class SymStep:
    """One executed instruction: the cells it wrote, symbolically and
    concretely (keys are absolute cell indices)."""

    index: int
    pc: int
    label: str
    cells: dict[int, RationalFunction]
    values: dict[int, Value]


@dataclass(frozen=True)
class BranchEvent:
    function: RationalFunction
    sign: int
    step: int


@dataclass(frozen=True)
class OracleEvent:
    functions: tuple[RationalFunction, ...]
    answer: bool
    was_constant: bool
    step: int


@dataclass
class SymbolicTrace:
    program: Program
    input: tuple[Value, ...]
    oracle: Oracle
    steps: tuple[SymStep, ...]
    branch_log: tuple[BranchEvent, ...]
    oracle_log: tuple[OracleEvent, ...]
    outcome: str                 # halted | budget_exhausted | fault
    fault_kind: str | None
    output_functions: tuple[RationalFunction, ...] | None
    output_values: tuple[Value, ...] | None
    final_cells: dict[int, RationalFunction] = field(repr=False, default_factory=dict)
    final_values: dict[int, Value] = field(repr=False, default_factory=dict)

    @property
    def steps_executed(self) -> int:
        return len(self.steps)

    def cells_at(self, step_index: int) -> dict[int, RationalFunction]:
        """Symbolic cell contents after the given step (replays deltas)."""
        out: dict[int, RationalFunction] = dict(self._base_cells)
        for s in self.steps[: step_index + 1]:
            out.update(s.cells)
        return out

    # set by shadow_trace: the pre-execution symbolic cells (inputs + zeros)
    _base_cells: dict[int, RationalFunction] = field(
        repr=False, default_factory=dict)

    def branch_history(self) -> tuple[int, ...]:
        return tuple(e.sign for e in self.branch_log)

    def oracle_history(self) -> tuple[bool, ...]:
        return tuple(e.answer for e in self.oracle_log)


def shadow_trace(program: Program, input_values, oracle: Oracle | None = None,
                 budget: int = DEFAULT_BUDGET,
                 use_generic: bool = False) -> SymbolicTrace:
    """use_generic answers nonconstant oracle queries with the oracle's
    generic policy instead of querying, standing in for an input that the
    oracle's set misses entirely."""
    if budget < 1:
        raise BssError("budget must be positive")
    oracle = oracle if oracle is not None else Oracle.empty()
    values = normalize_input(program, input_values)
    nvars = len(values)
    cells = initial_cells(program, values)
    syms: dict[int, RationalFunction] = {
        c: RationalFunction.constant(Fraction(0), nvars) for c in cells
    }
    for i in range(nvars):
        syms[i] = RationalFunction.var(i, nvars)
    base_syms = dict(syms)

    labels = program.label_index()
    instructions = program.instructions

    offset = 0
    pc = 0
    steps: list[SymStep] = []
    branch_log: list[BranchEvent] = []
    oracle_log: list[OracleEvent] = []
    outcome: str | None = None
    fault_kind: str | None = None
    out_fns: tuple[RationalFunction, ...] | None = None
    out_vals: tuple[Value, ...] | None = None

    def read(absolute: int) -> tuple[Value, RationalFunction]:
        try:
            return cells[absolute], syms[absolute]
        except KeyError:
            raise _Fault(BLANK_READ) from None

    while outcome is None:
        if len(steps) >= budget:
            outcome = BUDGET_EXHAUSTED
            break
        label, instr = instructions[pc]
        index = len(steps)
        wrote_f: dict[int, RationalFunction] = {}
        wrote_v: dict[int, Value] = {}
        next_pc = pc + 1
        try:
            if isinstance(instr, Const):
                v = instr.value if instr.param is None else program.param_value(instr.param)
                f = RationalFunction.constant(v, nvars)
                cells[offset + instr.dst] = v
                syms[offset + instr.dst] = f
                wrote_v[offset + instr.dst] = v
                wrote_f[offset + instr.dst] = f
            elif isinstance(instr, Copy):
                v, f = read(offset + instr.src)
                cells[offset + instr.dst] = v
                syms[offset + instr.dst] = f
                wrote_v[offset + instr.dst] = v
                wrote_f[offset + instr.dst] = f
            elif isinstance(instr, Arith):
                va, fa = read(offset + instr.src1)
                vb, fb = read(offset + instr.src2)
                if instr.op == "ADD":
                    v, f = va + vb, fa + fb
                elif instr.op == "SUB":
                    v, f = va - vb, fa - fb
                elif instr.op == "MUL":
                    v, f = va * vb, fa * fb
                else:
                    if sign_at(vb) == 0:
                        raise _Fault(DIVISION_BY_ZERO)
                    try:
                        v = va / vb
                    except (PoleError, ZeroDivisionError):
                        raise _Fault(DIVISION_BY_ZERO) from None
                    f = fa / fb
                cells[offset + instr.dst] = v
                syms[offset + instr.dst] = f
                wrote_v[offset + instr.dst] = v
                wrote_f[offset + instr.dst] = f
            elif isinstance(instr, Branch):
                v, f = read(offset + instr.src)
                s = sign_at(v)
                branch_log.append(BranchEvent(f, s, index))
                next_pc = labels[{-1: instr.neg, 0: instr.zero, 1: instr.pos}[s]]
            elif isinstance(instr, Jmp):
                next_pc = labels[instr.target]
            elif isinstance(instr, Shift):
                offset += 1 if instr.direction == "right" else -1
            elif isinstance(instr, OracleCall):
                pairs = [read(offset + i) for i in range(instr.lo, instr.hi + 1)]
                query = tuple(p[0] for p in pairs)
                fns = tuple(p[1] for p in pairs)
                was_constant = all(f.is_constant() for f in fns)
                if use_generic and not was_constant:
                    answer = oracle.generic_policy
                else:
                    try:
                        answer = oracle_query(oracle, query)
                    except OracleUnsupported:
                        raise _Fault(ORACLE_UNSUPPORTED) from None
                oracle_log.append(OracleEvent(fns, answer, was_constant, index))
                next_pc = labels[instr.yes if answer else instr.no]
            elif isinstance(instr, Output):
                top = offset + instr.hi
                pairs = [read(i) for i in range(instr.lo, top + 1)]
                out_vals = tuple(p[0] for p in pairs)
                out_fns = tuple(p[1] for p in pairs)
                outcome = HALTED
            else:
                raise BssError(f"unknown instruction {instr!r}")
        except _Fault as fault:
            outcome = FAULT
            fault_kind = fault.kind
        steps.append(SymStep(index, pc, label, wrote_f, wrote_v))
        pc = next_pc

    trace = SymbolicTrace(
        program=program, input=values, oracle=oracle, steps=tuple(steps),
        branch_log=tuple(branch_log), oracle_log=tuple(oracle_log),
        outcome=outcome, fault_kind=fault_kind,
        output_functions=out_fns, output_values=out_vals,
        final_cells=dict(syms), final_values=dict(cells),
    )
    trace._base_cells = base_syms
    return trace


@dataclass(frozen=True)
class FieldBoundaryReport:
    ok: bool
    cells_checked: int
    max_value_degree: int
    failures: tuple[str, ...]


def _value_degree(v: Value) -> int:
    if isinstance(v, AlgebraicNumber):
        return degree_over_q(v)
    return 1


def field_boundary_check(trace: SymbolicTrace) -> FieldBoundaryReport:
    """Every written cell's function must (a) have rational coefficients and
    (b) reproduce the concrete value when evaluated at the input."""
    failures: list[str] = []
    checked = 0
    max_deg = 0
    for step in trace.steps:
        for cell, f in step.cells.items():
            checked += 1
            concrete = step.values[cell]
            for poly in (f.num, f.den):
                for coeff in poly.terms.values():
                    if not isinstance(coeff, Fraction):
                        failures.append(
                            f"step {step.index} cell {cell}: non-rational coefficient {coeff!r}")
            try:
                replay = rf_eval(f, trace.input)
            except PoleError:
                failures.append(
                    f"step {step.index} cell {cell}: function pole at the input")
                continue
            if not algebraic_equal(replay, concrete):
                failures.append(
                    f"step {step.index} cell {cell}: {f} evaluates to "
                    f"{replay!r}, concrete run holds {concrete!r}")
            max_deg = max(max_deg, _value_degree(concrete))
    return FieldBoundaryReport(not failures, checked, max_deg, tuple(failures))
