"""Whole-tree symbolic exploration.

Where shadow_trace follows one concrete input, explore_paths follows every
input at once: a BRANCH on a nonconstant cell function forks the state three
ways (sign -1, 0, +1), an ORACLE call on a nonconstant query tuple forks two
ways or takes the generic answer, and each resulting leaf carries the sign
conditions that select it.  Constant functions never fork; a function whose
sign the current path has already pinned is forced down that arm, which also
prunes contradictory paths without any satisfiability reasoning (dead leaves
from jointly-unsatisfiable conditions are allowed).  Depth is counted in
forks, not instructions; a separate straight-line step cap catches runaway
loops between forks.

Equality arms (sign 0) on nonconstant functions describe measure-zero input
sets; their leaves are flagged so downstream consumers can skip them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import BssError
from ..exact import (MultiPoly, RationalFunction, UniPoly, rf_eval, sign_at)
from ..machine.interp import DEFAULT_BUDGET
from ..machine.oracle import Oracle, OracleUnsupported, oracle_query
from ..machine.program import (VAR_ARITY, Arith, Branch, Const, Copy, Jmp,
                               OracleCall, Output, Program, Shift)

STEP_CAP = 10_000  # straight-line instructions between forks

_SIGN_ARM = {-1: "-1", 0: "0", 1: "+1"}


@dataclass(frozen=True)
class PathCondition:
    constraints: tuple[tuple[RationalFunction, int], ...] = ()
    oracle_assumptions: tuple[tuple[tuple[RationalFunction, ...], bool], ...] = ()

    def __post_init__(self):
        seen: dict[RationalFunction, int] = {}
        for f, s in self.constraints:
            if seen.setdefault(f, s) != s:
                raise BssError(f"contradictory signs on {f} in one path condition")

    def sign_of(self, f: RationalFunction) -> int | None:
        for g, s in self.constraints:
            if g == f:
                return s
        return None

    def assumed(self, fns: tuple[RationalFunction, ...]) -> bool | None:
        for g, a in self.oracle_assumptions:
            if g == fns:
                return a
        return None

    def with_constraint(self, f: RationalFunction, s: int) -> "PathCondition":
        return PathCondition(self.constraints + ((f, s),), self.oracle_assumptions)

    def with_assumption(self, fns, answer: bool) -> "PathCondition":
        return PathCondition(self.constraints,
                             self.oracle_assumptions + ((tuple(fns), answer),))

    def satisfied_by(self, values, oracle: Oracle | None = None) -> bool:
        """Do concrete input values meet every constraint (and, when an
        oracle is supplied, every oracle assumption)?"""
        for f, s in self.constraints:
            if sign_at(rf_eval(f, values)) != s:
                return False
        if oracle is not None:
            for fns, assumed in self.oracle_assumptions:
                query = tuple(rf_eval(f, values) for f in fns)
                if oracle_query(oracle, query) != assumed:
                    return False
        return True


@dataclass(frozen=True)
class PathLeaf:
    history: tuple[str, ...]
    condition: PathCondition
    outcome: str                 # halted | budget_exhausted | fault
    outputs: tuple[RationalFunction, ...] | None
    fault_kind: str | None
    measure_zero: bool
    forks_used: int


@dataclass(frozen=True)
class PathTree:
    program: Program
    arity: int
    depth_budget: int
    # history prefix -> ("branch", f) | ("oracle", fns) | ("leaf", PathLeaf)
    nodes: dict[tuple[str, ...], tuple]
    leaves: tuple[PathLeaf, ...]

    def halted_leaves(self) -> tuple[PathLeaf, ...]:
        return tuple(l for l in self.leaves if l.outcome == "halted")


@dataclass
class _State:
    pc: int
    offset: int
    cells: dict[int, RationalFunction]
    condition: PathCondition
    history: tuple[str, ...]
    forks: int
    steps: int


class _SymBlankRead(Exception):
    pass


def explore_paths(program: Program, arity: int | None = None,
                  oracle_policy: str = "generic", depth_budget: int = 12,
                  oracle: Oracle | None = None,
                  step_cap: int = STEP_CAP) -> PathTree:
    """Symbolically execute all paths up to depth_budget forks per path.

    oracle_policy "generic": nonconstant oracle queries take the oracle's
    generic answer (one arm, assumption logged).  "split": they fork both
    ways.  Constant queries are always answered concretely by the oracle.
    """
    if oracle_policy not in ("generic", "split"):
        raise BssError(f"unknown oracle policy {oracle_policy!r}")
    if arity is None:
        if program.arity == VAR_ARITY:
            raise BssError("variadic program: explore_paths needs an explicit arity")
        arity = program.arity
    elif program.arity != VAR_ARITY and arity != program.arity:
        raise BssError(f"program {program.name} has arity {program.arity}, got {arity}")
    oracle = oracle if oracle is not None else Oracle.empty()
    nvars = arity

    base: dict[int, RationalFunction] = {}
    if program.zero_window is not None:
        lo, hi = program.zero_window
        for i in range(lo, hi + 1):
            base[i] = RationalFunction.constant(Fraction(0), nvars)
    for i in range(nvars):
        base[i] = RationalFunction.var(i, nvars)

    labels = program.label_index()
    instructions = program.instructions
    nodes: dict[tuple[str, ...], tuple] = {}
    leaves: list[PathLeaf] = []

    def leaf(state: _State, outcome: str, outputs=None, fault_kind=None) -> None:
        measure_zero = any(s == 0 for _, s in state.condition.constraints)
        record = PathLeaf(state.history, state.condition, outcome, outputs,
                          fault_kind, measure_zero, state.forks)
        nodes[state.history] = ("leaf", record)
        leaves.append(record)

    stack = [_State(0, 0, dict(base), PathCondition(), (), 0, 0)]
    while stack:
        st = stack.pop()

        def read(absolute: int) -> RationalFunction:
            try:
                return st.cells[absolute]
            except KeyError:
                raise _SymBlankRead() from None

        while True:
            if st.steps >= step_cap:
                leaf(st, "budget_exhausted")
                break
            st.steps += 1
            _, instr = instructions[st.pc]
            st.pc += 1
            try:
                if isinstance(instr, Const):
                    v = instr.value if instr.param is None else program.param_value(instr.param)
                    st.cells[st.offset + instr.dst] = RationalFunction.constant(v, nvars)
                elif isinstance(instr, Copy):
                    st.cells[st.offset + instr.dst] = read(st.offset + instr.src)
                elif isinstance(instr, Arith):
                    fa = read(st.offset + instr.src1)
                    fb = read(st.offset + instr.src2)
                    if instr.op == "ADD":
                        f = fa + fb
                    elif instr.op == "SUB":
                        f = fa - fb
                    elif instr.op == "MUL":
                        f = fa * fb
                    else:
                        if fb.is_zero() or st.condition.sign_of(fb) == 0:
                            leaf(st, "fault", fault_kind="division_by_zero")
                            break
                        # a nonconstant divisor with unknown sign is taken
                        # as nonzero; the zero fiber is measure zero
                        f = fa / fb
                    st.cells[st.offset + instr.dst] = f
                elif isinstance(instr, Branch):
                    f = read(st.offset + instr.src)
                    arms = {-1: instr.neg, 0: instr.zero, 1: instr.pos}
                    if f.is_constant():
                        st.pc = labels[arms[sign_at(f.constant_value())]]
                    else:
                        pinned = st.condition.sign_of(f)
                        if pinned is not None:
                            st.pc = labels[arms[pinned]]
                        elif st.forks >= depth_budget:
                            leaf(st, "budget_exhausted")
                            break
                        else:
                            nodes[st.history] = ("branch", f)
                            for s in (1, 0, -1):  # reversed: stack pops -1 first
                                stack.append(_State(
                                    labels[arms[s]], st.offset, dict(st.cells),
                                    st.condition.with_constraint(f, s),
                                    st.history + (_SIGN_ARM[s],),
                                    st.forks + 1, 0))
                            break
                elif isinstance(instr, Jmp):
                    st.pc = labels[instr.target]
                elif isinstance(instr, Shift):
                    st.offset += 1 if instr.direction == "right" else -1
                elif isinstance(instr, OracleCall):
                    fns = tuple(read(st.offset + i)
                                for i in range(instr.lo, instr.hi + 1))
                    if all(f.is_constant() for f in fns):
                        query = tuple(f.constant_value() for f in fns)
                        answer = oracle_query(oracle, query)
                        st.pc = labels[instr.yes if answer else instr.no]
                    else:
                        assumed = st.condition.assumed(fns)
                        if assumed is not None:
                            st.pc = labels[instr.yes if assumed else instr.no]
                        elif oracle_policy == "generic":
                            answer = oracle.generic_policy
                            st.condition = st.condition.with_assumption(fns, answer)
                            st.pc = labels[instr.yes if answer else instr.no]
                        elif st.forks >= depth_budget:
                            leaf(st, "budget_exhausted")
                            break
                        else:
                            nodes[st.history] = ("oracle", fns)
                            for answer, arm in ((False, "no"), (True, "yes")):
                                stack.append(_State(
                                    labels[instr.yes if answer else instr.no],
                                    st.offset, dict(st.cells),
                                    st.condition.with_assumption(fns, answer),
                                    st.history + (arm,), st.forks + 1, 0))
                            break
                elif isinstance(instr, Output):
                    top = st.offset + instr.hi
                    outputs = tuple(read(i) for i in range(instr.lo, top + 1))
                    leaf(st, "halted", outputs=outputs)
                    break
                else:
                    raise BssError(f"unknown instruction {instr!r}")
            except _SymBlankRead:
                leaf(st, "fault", fault_kind="blank_read")
                break
            except OracleUnsupported:
                leaf(st, "fault", fault_kind="oracle_unsupported")
                break

    return PathTree(program, arity, depth_budget, nodes, tuple(leaves))


def as_unipoly(p: MultiPoly) -> UniPoly:
    """View a one-variable MultiPoly as a UniPoly (coefficients low to high)."""
    if p.nvars != 1:
        raise BssError(f"polynomial in {p.nvars} variables is not univariate")
    if not p.terms:
        return UniPoly([])
    coeffs = [Fraction(0)] * (p.total_degree() + 1)
    for (e,), c in p.terms.items():
        coeffs[e] = c
    return UniPoly(coeffs)


def boundary_report(tree: PathTree) -> set[MultiPoly]:
    """Numerators whose zero sets cover the boundary of the decided set:
    every constraint function pinned to sign 0 somewhere, plus every
    function on which two leaves with different outputs take different
    signs.  Requires a fully halted 0/1-output tree."""
    decided: list[tuple[PathLeaf, Fraction]] = []
    for l in tree.leaves:
        if l.outcome != "halted":
            raise BssError(f"leaf {l.history} did not halt; boundary undefined")
        if l.outputs is None or len(l.outputs) != 1 or not l.outputs[0].is_constant():
            raise BssError(f"leaf {l.history} output is not a single constant")
        value = l.outputs[0].constant_value()
        if value not in (Fraction(0), Fraction(1)):
            raise BssError(f"leaf {l.history} outputs {value}, not 0/1")
        decided.append((l, value))

    polys: set[MultiPoly] = set()
    for l, _ in decided:
        for f, s in l.condition.constraints:
            if s == 0:
                polys.add(f.num)
    for i, (la, va) in enumerate(decided):
        for lb, vb in decided[i + 1:]:
            if va == vb:
                continue
            signs_b = dict(lb.condition.constraints)
            for f, sa in la.condition.constraints:
                sb = signs_b.get(f)
                if sb is not None and sb != sa:
                    polys.add(f.num)
    return polys
