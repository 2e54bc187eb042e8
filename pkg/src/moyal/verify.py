"""Property-verification harness: seeded random checks of every algebraic claim.

Each suite runs against one ordering and yields a :class:`VerifyReport`.  Seeds
are derived per (suite, ordering) from the master seed, so reports are
byte-identical across runs and independent of execution order.
"""

from __future__ import annotations

import hashlib
import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Optional

from .errors import DivisionByZeroLiteral, ExprSyntaxError, NegativeExponent
from .fock import (
    f_matrix_closed,
    f_matrix_direct,
    safe_block_equal,
    wg_matrix,
    wg_matrix_via_ladder,
)
from .lang import format_value, parse_phase_poly
from .opalg import OpPoly, aa_mul, dirac_defect, l_map, op_adjoint, op_mul, quantize_wg
from .phase import (
    PhasePoly,
    classical_limit,
    divide_by_i_hbar,
    g_star,
    poisson_bracket,
    star_commutator,
)
from .scalar import GaussianRational
from .series import PRESETS, Ordering, g_from_alpha, g_from_f, resolve_ordering

SUITES = (
    "homomorphism",
    "dirac",
    "g-consistency",
    "matrix-block",
    "eq14-closed-form",
    "adjoint-reality",
    "associativity",
    "classical-limit",
    "l-homomorphism",
    "parser-roundtrip",
)

G_CONSISTENCY_MAX = 8
MATRIX_DEGREE_CAP = 6
CLOSED_FORM_DEGREE_CAP = 6
ROUNDTRIP_DEGREE = 6
ASSOCIATIVITY_DEGREE = 3


@dataclass(frozen=True)
class VerifyParams:
    max_degree: int = 4
    trials: int = 200
    dim: int = 12
    seed: int = 42

    def validate(self) -> None:
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.dim < 2:
            raise ValueError("dim must be >= 2")
        if self.max_degree < 1:
            raise ValueError("max_degree must be >= 1")


@dataclass
class VerifyReport:
    suite: str
    ordering: str
    trials: int
    failures: list = field(default_factory=list)
    expect_fail: bool = False
    counterexamples: list = field(default_factory=list)
    elapsed_ms: Optional[float] = None

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self, timing: bool = False) -> str:
        data = asdict(self)
        data["passed"] = self.passed
        if not timing:
            data.pop("elapsed_ms")
        return json.dumps(data, sort_keys=True)


def derive_seed(master: int, suite: str, ordering: str) -> int:
    digest = hashlib.sha256(f"{master}:{suite}:{ordering}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


# -- random inputs ---------------------------------------------------------------

_NUMS = [k for k in range(-9, 10) if k]


def random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.choice(_NUMS), rng.randint(1, 9))


def random_coefficient(rng: random.Random, real: bool = False) -> GaussianRational:
    if real or rng.random() < 0.5:
        return GaussianRational(random_rational(rng))
    return GaussianRational(random_rational(rng), random_rational(rng))


def random_exponents(rng: random.Random, max_degree: int) -> tuple[int, int]:
    while True:
        m, n = rng.randint(0, max_degree), rng.randint(0, max_degree)
        if m + n <= max_degree:
            return m, n


def random_phase_poly(
    rng: random.Random, max_degree: int, hbar_max: int = 1, real: bool = False
) -> PhasePoly:
    """1..5 monomials, total (p, x) degree <= max_degree, small Gaussian-rational coefficients."""
    terms = {}
    for _ in range(rng.randint(1, 5)):
        m, n = random_exponents(rng, max_degree)
        terms[(m, n, rng.randint(0, hbar_max))] = random_coefficient(rng, real)
    return PhasePoly(terms)


def random_op_poly(rng: random.Random, max_degree: int) -> OpPoly:
    return OpPoly(random_phase_poly(rng, max_degree).terms)


def _failure(inputs: dict, expected, actual) -> dict:
    return {"inputs": inputs, "expected": _text(expected), "actual": _text(actual)}


def _text(value) -> str:
    return value if isinstance(value, str) else format_value(value)


# -- suites -----------------------------------------------------------------------
# Every suite takes (ordering, label, params, rng) and returns a VerifyReport.


def suite_homomorphism(ordering: Ordering, label: str, params: VerifyParams, rng: random.Random):
    ordering = ordering.at_order(max(ordering.order, 2 * params.max_degree))
    report = VerifyReport("homomorphism", label, params.trials)
    for _ in range(params.trials):
        a = random_phase_poly(rng, params.max_degree)
        b = random_phase_poly(rng, params.max_degree)
        expected = op_mul(quantize_wg(a, ordering), quantize_wg(b, ordering))
        actual = quantize_wg(g_star(a, b, ordering), ordering)
        if actual != expected:
            report.failures.append(
                _failure({"a": _text(a), "b": _text(b), "ordering": label}, expected, actual)
            )
    return report


def suite_dirac(ordering: Ordering, label: str, params: VerifyParams, rng: random.Random):
    ordering = ordering.at_order(max(ordering.order, params.max_degree))
    report = VerifyReport("dirac", label, params.trials)
    for _ in range(params.trials):
        a = random_phase_poly(rng, params.max_degree)
        for var in ("x", "p"):
            defect = dirac_defect(a, ordering, var)
            if defect:
                report.failures.append(
                    _failure({"a": _text(a), "var": var, "ordering": label}, "0", defect)
                )
    return report


def suite_g_consistency(ordering: Ordering, label: str, params: VerifyParams, rng: random.Random):
    ordering = ordering.at_order(max(ordering.order, G_CONSISTENCY_MAX))
    checks = 0
    failures = []
    for m in range(G_CONSISTENCY_MAX + 1):
        for n in range(G_CONSISTENCY_MAX + 1):
            for s in range(min(m, n) + 1):
                checks += 1
                via_f = g_from_f(ordering.f, m, n, s)
                via_alpha = g_from_alpha(ordering.alpha, m, n, s)
                if via_f != via_alpha:
                    failures.append(
                        _failure({"m": m, "n": n, "s": s, "ordering": label}, via_f, via_alpha)
                    )
    return VerifyReport("g-consistency", label, checks, failures)


def random_monomial_pair(rng: random.Random, cap: int) -> tuple[PhasePoly, PhasePoly, int]:
    ma, na = random_exponents(rng, cap)
    mb, nb = random_exponents(rng, cap - ma - na)
    a = PhasePoly.monomial(ma, na, 0, random_coefficient(rng))
    b = PhasePoly.monomial(mb, nb, 0, random_coefficient(rng))
    return a, b, ma + na + mb + nb


def suite_matrix_block(ordering: Ordering, label: str, params: VerifyParams, rng: random.Random):
    cap = min(MATRIX_DEGREE_CAP, params.dim - 1)
    ordering = ordering.at_order(max(ordering.order, cap))
    report = VerifyReport("matrix-block", label, params.trials)
    dim = params.dim
    for _ in range(params.trials):
        a, b, total = random_monomial_pair(rng, cap)
        ab = g_star(a, b, ordering)
        inputs = {"a": _text(a), "b": _text(b), "ordering": label, "dim": dim, "margin": total}
        product = wg_matrix(a, ordering, dim) @ wg_matrix(b, ordering, dim)
        image = wg_matrix(ab, ordering, dim)
        cmp = safe_block_equal(product, image, total)
        if not cmp:
            report.failures.append(_failure(inputs, f"{cmp.left} at {cmp.index}", f"{cmp.right} at {cmp.index}"))
        for poly in (a, ab):
            via_ladder = wg_matrix_via_ladder(poly, ordering, dim)
            direct = wg_matrix(poly, ordering, dim)
            if via_ladder != direct:
                report.failures.append(
                    _failure({"a": _text(poly), "ordering": label, "dim": dim}, direct, via_ladder)
                )
    return report


def suite_eq14_closed_form(ordering: Ordering, label: str, params: VerifyParams, rng: random.Random):
    failures = []
    checks = 0
    for m in range(CLOSED_FORM_DEGREE_CAP + 1):
        for n in range(CLOSED_FORM_DEGREE_CAP + 1 - m):
            if m + n == 0 or m >= params.dim:
                continue
            checks += 1
            cmp = safe_block_equal(
                f_matrix_closed(m, n, params.dim), f_matrix_direct(m, n, params.dim), m
            )
            if not cmp:
                failures.append(
                    _failure(
                        {"m": m, "n": n, "dim": params.dim, "index": list(cmp.index)},
                        str(cmp.right),
                        str(cmp.left),
                    )
                )
    return VerifyReport("eq14-closed-form", label, checks, failures)


def suite_adjoint_reality(ordering: Ordering, label: str, params: VerifyParams, rng: random.Random):
    ordering = ordering.at_order(max(ordering.order, params.max_degree))
    expect_fail = not ordering.alpha.is_real()
    report = VerifyReport("adjoint-reality", label, params.trials, expect_fail=expect_fail)
    candidates: Iterable[PhasePoly]
    if expect_fail:
        candidates = [PhasePoly.monomial(1, 1)] + [
            random_phase_poly(rng, params.max_degree, hbar_max=0, real=True)
            for _ in range(params.trials - 1)
        ]
    else:
        candidates = (
            random_phase_poly(rng, params.max_degree, hbar_max=0, real=True)
            for _ in range(params.trials)
        )
    for a in candidates:
        w = quantize_wg(a, ordering)
        adj = op_adjoint(w)
        if adj != w:
            record = _failure({"a": _text(a), "ordering": label}, w, adj)
            (report.counterexamples if expect_fail else report.failures).append(record)
    if expect_fail and not report.counterexamples:
        report.failures.append(
            _failure({"ordering": label}, "a real A with non-symmetric W_g(A)", "none found")
        )
    return report


def suite_associativity(ordering: Ordering, label: str, params: VerifyParams, rng: random.Random):
    deg = min(ASSOCIATIVITY_DEGREE, params.max_degree)
    ordering = ordering.at_order(max(ordering.order, 3 * deg))
    report = VerifyReport("associativity", label, params.trials)
    for _ in range(params.trials):
        a, b, c = (random_phase_poly(rng, deg) for _ in range(3))
        left = g_star(g_star(a, b, ordering), c, ordering)
        right = g_star(a, g_star(b, c, ordering), ordering)
        if left != right:
            report.failures.append(
                _failure({"a": _text(a), "b": _text(b), "c": _text(c), "ordering": label}, left, right)
            )
    return report


def suite_classical_limit(ordering: Ordering, label: str, params: VerifyParams, rng: random.Random):
    ordering = ordering.at_order(max(ordering.order, 2 * params.max_degree))
    report = VerifyReport("classical-limit", label, params.trials)
    for _ in range(params.trials):
        a = random_phase_poly(rng, params.max_degree, hbar_max=0)
        b = random_phase_poly(rng, params.max_degree, hbar_max=0)
        expected = poisson_bracket(a, b)
        try:
            actual = classical_limit(divide_by_i_hbar(star_commutator(a, b, ordering)))
        except ValueError as exc:
            actual = f"commutator has hbar-free part ({exc})"
        if actual != expected:
            report.failures.append(_failure({"a": _text(a), "b": _text(b), "ordering": label}, expected, actual))
    return report


def suite_l_homomorphism(ordering: Ordering, label: str, params: VerifyParams, rng: random.Random):
    ordering = ordering.at_order(max(ordering.order, params.max_degree))
    report = VerifyReport("l-homomorphism", label, params.trials)
    for t in range(params.trials):
        if t % 2:
            a = random_op_poly(rng, params.max_degree)
            b = random_op_poly(rng, params.max_degree)
        else:
            # images of this ordering's quantization map
            a = quantize_wg(random_phase_poly(rng, params.max_degree), ordering)
            b = quantize_wg(random_phase_poly(rng, params.max_degree), ordering)
        expected = aa_mul(l_map(a), l_map(b))
        actual = l_map(op_mul(a, b))
        if actual != expected:
            report.failures.append(_failure({"a": _text(a), "b": _text(b)}, expected, actual))
    return report


# (input, error class, start, end): the reported position must fall in [start, end)
MALFORMED_CORPUS: tuple[tuple[str, type, int, int], ...] = (
    ("", ExprSyntaxError, 0, 1),
    ("   ", ExprSyntaxError, 3, 4),
    ("x +", ExprSyntaxError, 3, 4),
    ("2x", ExprSyntaxError, 1, 2),
    ("x p", ExprSyntaxError, 2, 3),
    ("p^-1", NegativeExponent, 2, 3),
    ("x^-12", NegativeExponent, 2, 3),
    ("1/0", DivisionByZeroLiteral, 2, 3),
    ("(1/00)*x", DivisionByZeroLiteral, 3, 5),
    ("y", ExprSyntaxError, 0, 1),
    ("x + foo", ExprSyntaxError, 4, 7),
    ("(x + p", ExprSyntaxError, 6, 7),
    ("x + p)", ExprSyntaxError, 5, 6),
    ("x ** 2", ExprSyntaxError, 3, 4),
    ("x^", ExprSyntaxError, 2, 3),
    ("x^p", ExprSyntaxError, 2, 3),
    ("x^(2)", ExprSyntaxError, 2, 3),
    ("sqrt(2)", ExprSyntaxError, 0, 4),
    ("1/x", ExprSyntaxError, 2, 3),
    ("1/-2", ExprSyntaxError, 2, 3),
    ("x $ p", ExprSyntaxError, 2, 3),
    ("hbarx", ExprSyntaxError, 0, 5),
    ("2i", ExprSyntaxError, 1, 2),
    ("x*", ExprSyntaxError, 2, 3),
    ("()", ExprSyntaxError, 1, 2),
    ("--x", ExprSyntaxError, 1, 2),
    ("x + -p", ExprSyntaxError, 4, 5),
    ("1.5*x", ExprSyntaxError, 1, 2),
)


def check_malformed(text: str, error: type, start: int, end: int) -> Optional[str]:
    """Return None if ``text`` fails with ``error`` positioned in [start, end), else a reason."""
    try:
        value = parse_phase_poly(text)
    except ExprSyntaxError as exc:
        if not isinstance(exc, error):
            return f"raised {type(exc).__name__}, wanted {error.__name__}"
        if not start <= exc.position < end:
            return f"position {exc.position} outside [{start}, {end})"
        return None
    return f"parsed as {format_value(value)}"


def suite_parser_roundtrip(ordering: Ordering, label: str, params: VerifyParams, rng: random.Random):
    degree = max(ROUNDTRIP_DEGREE, params.max_degree)
    report = VerifyReport("parser-roundtrip", label, params.trials + len(MALFORMED_CORPUS))
    for _ in range(params.trials):
        a = random_phase_poly(rng, degree, hbar_max=2)
        text = format_value(a)
        try:
            back = parse_phase_poly(text)
        except ExprSyntaxError as exc:
            back = f"parse error: {exc}"
        if back != a:
            report.failures.append(_failure({"text": text}, a, back))
    for text, error, start, end in MALFORMED_CORPUS:
        problem = check_malformed(text, error, start, end)
        if problem:
            report.failures.append(_failure({"text": text}, f"{error.__name__} in [{start}, {end})", problem))
    return report


SUITE_FUNCTIONS: dict[str, Callable[..., VerifyReport]] = {
    "homomorphism": suite_homomorphism,
    "dirac": suite_dirac,
    "g-consistency": suite_g_consistency,
    "matrix-block": suite_matrix_block,
    "eq14-closed-form": suite_eq14_closed_form,
    "adjoint-reality": suite_adjoint_reality,
    "associativity": suite_associativity,
    "classical-limit": suite_classical_limit,
    "l-homomorphism": suite_l_homomorphism,
    "parser-roundtrip": suite_parser_roundtrip,
}


def run_suite(suite: str, ordering_source: str, params: VerifyParams) -> VerifyReport:
    if suite not in SUITE_FUNCTIONS:
        raise ValueError(f"unknown suite {suite!r}")
    rng = random.Random(derive_seed(params.seed, suite, ordering_source))
    ordering = resolve_ordering(ordering_source, order=max(2 * params.max_degree, G_CONSISTENCY_MAX))
    start = time.perf_counter()
    report = SUITE_FUNCTIONS[suite](ordering, ordering_source, params, rng)
    report.elapsed_ms = round((time.perf_counter() - start) * 1000, 3)
    return report


def _run_job(job: tuple[str, str, VerifyParams]) -> VerifyReport:
    return run_suite(*job)


def run_verify(
    suites: Iterable[str] = SUITES,
    orderings: Iterable[str] = PRESETS,
    params: VerifyParams = VerifyParams(),
    jobs: int = 1,
) -> Iterable[VerifyReport]:
    """Yield reports in (suite, ordering) order; ``jobs > 1`` runs them in worker processes."""
    params.validate()
    work = [(s, o, params) for s in suites for o in orderings]
    if jobs <= 1:
        for job in work:
            yield _run_job(job)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield from pool.map(_run_job, work)
