"""Acceptance gate: one test per release criterion.

Run with ``pytest -v tests/test_acceptance.py`` to get a pass/fail line
per criterion.  Each test is self-contained apart from the shared shadow
trace corpus used by criteria 1 and 3.
"""

import random
import time
from fractions import Fraction as F

import pytest

from bssvm.exact import degree_over_q, nth_root_field, sign_at
from bssvm.machine import Oracle, cantor_membership, oracle_query, run_concrete
from bssvm.stdlib import stdlib_names, stdlib_program
from bssvm.symbolic import (
    as_unipoly,
    boundary_report,
    epsilon_certificate,
    explore_paths,
    extract_f,
    field_boundary_check,
    shadow_trace,
    verify_neighborhood,
)
from bssvm.witness import CONFIRMED, build_counterexample, cantor_decompose

# Step budgets for the shadow corpus.  The enumerating programs only halt
# once the enumeration reaches the input, which for random inputs can take
# millions of steps; capping keeps criterion 1 inside its runtime target
# while still exercising every instruction kind (agreement is checked per
# executed step, and both runs are cut at the same budget).
CORPUS_BUDGETS = {
    "q_enumerator": 400,
    "qx_enumerator": 400,
    "algebraic_semidecider": 400,
    "dependence": 300,
}
CORPUS_DEFAULT_BUDGET = 600
CORPUS_INPUTS_PER_PROGRAM = 100

# Halting step counts recomputed by tests/test_stdlib.py against a host
# oracle; used here as precomputed budgets.
SEMIDECIDER_STEPS_HALF = 4358
SEMIDECIDER_STEPS_SQRT2 = 11481

ORACLE_PROGRAMS = {"oracle_member", "always_zero", "eq_probe"}

ARM_SIGN = {"-1": -1, "0": 0, "+1": 1}


def random_rational(rng):
    return F(rng.randint(-2000, 2000), rng.randint(1, 200))


@pytest.fixture(scope="module")
def shadow_corpus():
    """Shadow traces for every stdlib program on 100 random rational inputs."""
    rng = random.Random(20260819)
    corpus = []
    start = time.monotonic()
    for name in stdlib_names():
        prog = stdlib_program(name)
        budget = CORPUS_BUDGETS.get(name, CORPUS_DEFAULT_BUDGET)
        oracle = Oracle.rationals() if name in ORACLE_PROGRAMS else None
        for _ in range(CORPUS_INPUTS_PER_PROGRAM):
            inputs = tuple(random_rational(rng) for _ in range(prog.arity))
            trace = shadow_trace(prog, inputs, oracle=oracle, budget=budget)
            corpus.append((name, inputs, oracle, budget, trace))
    elapsed = time.monotonic() - start
    return corpus, elapsed


def test_criterion_1_shadow_agreement_across_stdlib(shadow_corpus):
    corpus, build_elapsed = shadow_corpus
    assert len(corpus) == len(stdlib_names()) * CORPUS_INPUTS_PER_PROGRAM
    start = time.monotonic()
    for name, inputs, oracle, budget, strace in corpus:
        prog = stdlib_program(name)
        result, ctrace = run_concrete(prog, inputs, oracle=oracle, budget=budget)
        assert strace.outcome == result.status, (name, inputs)
        assert len(strace.steps) == len(ctrace.steps), (name, inputs)
        for ss, cs in zip(strace.steps, ctrace.steps):
            assert dict(cs.writes) == ss.values, (name, inputs, ss.index)
    elapsed = build_elapsed + (time.monotonic() - start)
    assert elapsed < 60.0, f"shadow agreement took {elapsed:.1f}s"


def test_criterion_2_epsilon_certificates_hold_on_50_of_50_samples():
    rng = random.Random(7)
    for seed, name in enumerate(["sgn", "interval_member", "even_zeros",
                                 "inv_shift"]):
        prog = stdlib_program(name)
        centers = []
        while len(centers) < 10:
            x = F(rng.randint(-40, 40), rng.randint(1, 12))
            trace = shadow_trace(prog, [x])
            if trace.outcome != "halted":
                continue  # inv_shift faults at its pole
            if any(e.sign == 0 for e in trace.branch_log):
                continue  # equality branch: no neighborhood certificate
            centers.append((x, trace))
        for i, (x, trace) in enumerate(centers):
            cert = epsilon_certificate(extract_f(trace), trace.input)
            assert cert.epsilon > 0, (name, x)
            report = verify_neighborhood(prog, None, trace, cert,
                                         samples=50, seed=100 * seed + i)
            assert report.ok, (name, x)
            assert report.passed == len(report.samples) == 50, (name, x)


def test_criterion_3_cell_values_stay_degree_one_on_rational_runs(shadow_corpus):
    corpus, _ = shadow_corpus
    for name, inputs, _, _, strace in corpus:
        report = field_boundary_check(strace)
        assert report.ok, (name, inputs)
        assert report.max_value_degree <= 1, (name, inputs)


def test_criterion_4_semidecider_and_cosemidecider_halting():
    semi = stdlib_program("algebraic_semidecider")
    result, _ = run_concrete(semi, [F(1, 2)], budget=SEMIDECIDER_STEPS_HALF)
    assert result.status == "halted" and result.steps == SEMIDECIDER_STEPS_HALF

    _, sqrt2 = nth_root_field(2, 2)
    result, _ = run_concrete(semi, [sqrt2], budget=SEMIDECIDER_STEPS_SQRT2)
    assert result.status == "halted" and result.steps == SEMIDECIDER_STEPS_SQRT2

    cosemi = stdlib_program("cantor_cosemidecider")
    result, _ = run_concrete(cosemi, [F(1, 2)], budget=10 ** 4)
    assert result.status == "halted"  # 1/2 sits in the first deleted interval

    result, _ = run_concrete(cosemi, [F(1, 4)], budget=10 ** 4)
    assert result.status == "budget_exhausted" and result.steps == 10 ** 4


def test_criterion_5_counterexample_pipeline_confirms_toy_machines():
    oracle = Oracle.rationals()
    for name in ["oracle_member", "always_zero"]:
        prog = stdlib_program(name)
        report = build_counterexample(prog, oracle, F(2), (F(5), F(7)))
        assert report.verdict == CONFIRMED, name
        assert report.path_equal, name
        assert report.machine_output != report.ground_truth, name
        assert report.m == 2 and report.m > report.n, name
        assert degree_over_q(report.x2) == report.m, name


def test_criterion_6_cantor_pair_decomposition_is_exact():
    rng = random.Random(41)
    for _ in range(200):
        k = rng.randint(0, 20)
        x = F(rng.randint(0, 3 ** k), 3 ** k)
        pair = cantor_decompose(x)
        assert pair.c1 + pair.c2 / 2 == x, x
        assert cantor_membership(pair.c1), x
        assert cantor_membership(pair.c2), x
    # ternary 0.2201 = 73/81
    pair = cantor_decompose(F(73, 81))
    assert pair.c1 == F(8, 9) and pair.c2 == F(2, 81)


def test_criterion_7_degree_oracles_and_hundred_digit_signs():
    roots = {}
    for d in (2, 3, 5):
        field, root = nth_root_field(2, d)
        assert degree_over_q(root) == d
        roots[d] = (field, root)
    for d in (2, 3, 5):
        oracle = Oracle.degree_eq(d)
        for e, (_, root) in roots.items():
            assert oracle_query(oracle, (root,)) is (d == e)

    rng = random.Random(53)
    tight = F(1, 10 ** 100)
    for d in (2, 5):
        field, root = roots[d]
        for _ in range(100):
            coords = [F(rng.randint(-30, 30), rng.randint(1, 20))
                      for _ in range(d)]
            a = sum((root ** i * c for i, c in enumerate(coords)),
                    start=field.from_rational(F(0)))
            enc = a.enclosure(tight)
            if enc.lo > 0:
                expected = 1
            elif enc.hi < 0:
                expected = -1
            else:
                expected = 0
            assert sign_at(a) == expected, coords


def test_criterion_8_boundary_polynomials_have_expected_roots():
    def roots_of(tree):
        out = set()
        for p in boundary_report(tree):
            u = as_unipoly(p)
            assert u.degree == 1
            out.add(-u.coeff(0) / u.coeff(1))
        return out

    tree = explore_paths(stdlib_program("interval_member"), depth_budget=20)
    assert roots_of(tree) == {F(1, 2), F(1)}
    tree = explore_paths(stdlib_program("sgn_decider"), depth_budget=10)
    assert roots_of(tree) == {F(0)}


def test_criterion_9_exactly_one_path_leaf_per_concrete_run():
    rng = random.Random(67)
    for name in ["sgn", "even_zeros"]:
        prog = stdlib_program(name)
        tree = explore_paths(prog, depth_budget=30)
        halted = tree.halted_leaves()
        for _ in range(100):
            x = F(rng.randint(-200, 200), rng.randint(1, 200))
            matching = [leaf for leaf in halted
                        if leaf.condition.satisfied_by((x,))]
            assert len(matching) == 1, (name, x)
            leaf = matching[0]
            result, trace = run_concrete(prog, [x])
            assert result.status == "halted"
            taken = tuple(s.branch_sign for s in trace.steps
                          if s.branch_sign is not None)
            assert taken == tuple(ARM_SIGN[a] for a in leaf.history), (name, x)
            assert result.output == tuple(o.constant_value()
                                          for o in leaf.outputs)
