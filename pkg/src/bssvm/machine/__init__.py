"""Machine layer: programs, parser, oracles, concrete interpreter."""

from .oracle import Oracle, OracleUnsupported, cantor_membership, oracle_query
from .parser import parse_program
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
    format_instruction,
)
from .interp import (
    BLANK_READ,
    BUDGET_EXHAUSTED,
    DEFAULT_BUDGET,
    DIVISION_BY_ZERO,
    FAULT,
    HALTED,
    ORACLE_UNSUPPORTED,
    RunResult,
    StepRecord,
    Trace,
    format_value,
    normalize_input,
    initial_cells,
    run_concrete,
    trace_to_text,
)

__all__ = [
    "Oracle", "OracleUnsupported", "cantor_membership", "oracle_query",
    "parse_program",
    "ARITH_OPS", "Arith", "Branch", "Const", "Copy", "Instruction", "Jmp",
    "OracleCall", "Output", "Program", "Shift", "VAR_ARITY", "format_instruction",
    "BLANK_READ", "BUDGET_EXHAUSTED", "DEFAULT_BUDGET", "DIVISION_BY_ZERO",
    "FAULT", "HALTED", "ORACLE_UNSUPPORTED", "RunResult", "StepRecord", "Trace",
    "format_value", "normalize_input", "initial_cells", "run_concrete", "trace_to_text",
]
