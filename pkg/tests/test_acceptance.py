"""Acceptance criteria, one test each, with one PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines inline; they
are also repeated in the terminal summary.
"""

import math
import random
import time
from fractions import Fraction

from moyal.opalg import OpPoly, quantize_wg
from moyal.phase import PhasePoly
from moyal.scalar import I
from moyal.series import PRESETS, Ordering
from moyal.verify import (
    MALFORMED_CORPUS,
    VerifyParams,
    derive_seed,
    random_coefficient,
    suite_adjoint_reality,
    suite_associativity,
    suite_classical_limit,
    suite_dirac,
    suite_eq14_closed_form,
    suite_g_consistency,
    suite_homomorphism,
    suite_matrix_block,
    suite_parser_roundtrip,
)

from oracles import word_reduce

SEED = 20240601


def rng_for(criterion: str, label: str) -> random.Random:
    return random.Random(derive_seed(SEED, criterion, label))


def random_custom_ordering(order: int = 6) -> Ordering:
    rng = random.Random(SEED)
    return Ordering.custom([1] + [random_coefficient(rng) for _ in range(order)], order=order)


def run_all(suite, orderings, params, criterion):
    """Run ``suite`` over labelled orderings; return (reports, elapsed seconds)."""
    start = time.perf_counter()
    reports = [suite(o, label, params, rng_for(criterion, label)) for label, o in orderings]
    return reports, time.perf_counter() - start


def summarize(reports) -> str:
    failed = [f"{r.suite}/{r.ordering}: {r.failures[0]}" for r in reports if r.failures]
    checks = sum(r.trials for r in reports)
    return "; ".join(failed) if failed else f"{checks} checks"


def presets(order: int = 8):
    return [(name, Ordering.preset(name, order)) for name in PRESETS]


def test_criterion_01_homomorphism(acceptance_log):
    params = VerifyParams(max_degree=4, trials=200)
    orderings = presets() + [("custom", random_custom_ordering())]
    reports, elapsed = run_all(suite_homomorphism, orderings, params, "homomorphism")
    ok = all(r.passed for r in reports) and elapsed < 60
    acceptance_log("1 homomorphism", ok, f"{summarize(reports)}, {elapsed:.1f}s")
    assert ok


def test_criterion_02_dirac(acceptance_log):
    params = VerifyParams(max_degree=5, trials=100)
    reports, elapsed = run_all(suite_dirac, presets(), params, "dirac")
    ok = all(r.passed for r in reports) and elapsed < 30
    acceptance_log("2 dirac conditions", ok, f"{summarize(reports)}, {elapsed:.1f}s")
    assert ok


def test_criterion_03_g_consistency(acceptance_log):
    reports, elapsed = run_all(suite_g_consistency, presets(), VerifyParams(), "g-consistency")
    ok = all(r.passed for r in reports) and elapsed < 5
    acceptance_log("3 g-coefficient consistency", ok, f"{summarize(reports)}, {elapsed:.1f}s")
    assert ok


def test_criterion_04_spot_values(acceptance_log):
    problems = []
    for name, o in presets():
        for m in range(9):
            for n in range(9):
                if o.g(m, n, 0) != 1:
                    problems.append(f"{name} g({m},{n},0) = {o.g(m, n, 0)}")
    anti = Ordering.preset("antistandard", 8)
    for m in range(9):
        for n in range(9):
            for s in range(1, min(m, n) + 1):
                if anti.g(m, n, s) != 0:
                    problems.append(f"antistandard g({m},{n},{s}) = {anti.g(m, n, s)}")
    bj = Ordering.preset("born_jordan", 10)
    for s in range(11):
        if bj.f[s] * math.factorial(s) != (-I) ** s / (s + 1):
            problems.append(f"born_jordan f^({s})(0)")
    X, P = ("x",), ("p",)
    half = Fraction(1, 2)
    symmetrized = word_reduce({(P + X, 0): half, (X + P, 0): half})
    weyl_px = quantize_wg(PhasePoly.monomial(1, 1), Ordering.preset("weyl", 2))
    expected = OpPoly({(1, 1, 0): 1, (0, 0, 1): I / 2})
    if not weyl_px == symmetrized == expected:
        problems.append(f"weyl W(px) = {weyl_px}")
    ok = not problems
    acceptance_log("4 preset spot values", ok, "; ".join(problems[:3]))
    assert ok, problems


def test_criterion_05_closed_forms(acceptance_log):
    start = time.perf_counter()
    report = suite_eq14_closed_form(None, "all", VerifyParams(dim=12), random.Random(0))
    elapsed = time.perf_counter() - start
    ok = report.passed and report.trials == 27 and elapsed < 30
    acceptance_log("5 matrix closed forms vs direct products", ok, f"{summarize([report])}, {elapsed:.1f}s")
    assert ok, report.failures


def test_criterion_06_matrix_homomorphism(acceptance_log):
    params = VerifyParams(trials=50, dim=12)
    reports, elapsed = run_all(suite_matrix_block, presets(), params, "matrix-block")
    ok = all(r.passed for r in reports) and elapsed < 60
    acceptance_log("6 matrix homomorphism and representation consistency", ok, f"{summarize(reports)}, {elapsed:.1f}s")
    assert ok


def test_criterion_07_reality(acceptance_log):
    params = VerifyParams(max_degree=5, trials=100)
    reports, _ = run_all(suite_adjoint_reality, presets(), params, "adjoint-reality")
    by_name = {r.ordering: r for r in reports}
    ok = all(r.passed for r in reports)
    for name in ("weyl", "symmetric", "born_jordan"):
        ok &= not by_name[name].expect_fail and not by_name[name].counterexamples
    for name in ("standard", "antistandard"):
        ok &= by_name[name].expect_fail and bool(by_name[name].counterexamples)
    witness = by_name["standard"].counterexamples[0]["inputs"]["a"] if by_name["standard"].counterexamples else "none"
    acceptance_log("7 reality", ok, f"standard counterexample {witness}")
    assert ok


def test_criterion_08_classical_limit(acceptance_log):
    params = VerifyParams(max_degree=4, trials=50)
    reports, _ = run_all(suite_classical_limit, presets(), params, "classical-limit")
    ok = all(r.passed for r in reports)
    acceptance_log("8 classical limit", ok, summarize(reports))
    assert ok


def test_criterion_09_associativity(acceptance_log):
    params = VerifyParams(max_degree=3, trials=50)
    reports, _ = run_all(suite_associativity, presets(), params, "associativity")
    ok = all(r.passed for r in reports)
    acceptance_log("9 star associativity", ok, summarize(reports))
    assert ok


def test_criterion_10_parser(acceptance_log):
    params = VerifyParams(trials=500)
    start = time.perf_counter()
    report = suite_parser_roundtrip(None, "all", params, rng_for("parser", "all"))
    elapsed = time.perf_counter() - start
    ok = report.passed and len(MALFORMED_CORPUS) >= 20 and elapsed < 5
    acceptance_log("10 parser round trip and malformed corpus", ok, f"{summarize([report])}, {elapsed:.2f}s")
    assert ok, report.failures
