"""Acceptance suite: every release criterion as a callable check.

Each criterion returns a CriterionResult with a deterministic detail
string (no timings, no environment data), so consecutive runs emit
byte-identical reports.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from . import lclt, oracle, quad, saddle
from .exactcomb import (
    c_relative,
    factorial,
    log_of_count,
    ml_degree,
    ml_degree_inclusion_exclusion,
    poly_bernoulli,
    stirling2,
    stirling2_explicit,
)


@dataclass(frozen=True)
class CriterionResult:
    index: int
    name: str
    passed: bool
    detail: str


def _result(index: int, name: str, failures: list[str], detail_ok: str) -> CriterionResult:
    if failures:
        return CriterionResult(index, name, False, "; ".join(failures[:8]))
    return CriterionResult(index, name, True, detail_ok)


def criterion_oracle_equivalence() -> CriterionResult:
    """Brute-force counts agree exactly with the formula layer."""
    failures: list[str] = []
    matrix_pairs = [(n, k) for n in range(17) for k in range(17) if n * k <= 16]
    for n, k in matrix_pairs:
        b = poly_bernoulli(n, k)
        for label, got in (
            ("lonesum", oracle.count_lonesum(n, k)),
            ("gamma", oracle.count_gamma_free(n, k)),
            ("orientations", oracle.count_acyclic_orientations(n, k)),
        ):
            if got != b:
                failures.append(f"{label}({n},{k})={got} != B={b}")
        c_got = oracle.count_lonesum_restricted(n, k, False, True)
        if c_got != c_relative(n, k):
            failures.append(f"restricted({n},{k},F,T)={c_got} != C={c_relative(n, k)}")
        d_got = oracle.count_lonesum_restricted(n, k, True, True)
        if d_got != ml_degree(n, k):
            failures.append(f"restricted({n},{k},T,T)={d_got} != D={ml_degree(n, k)}")
    perm_pairs = [(n, k) for n in range(9) for k in range(9) if n + k <= 8]
    for n, k in perm_pairs:
        v = oracle.count_vesztergombi(n, k)
        if v != poly_bernoulli(n, k):
            failures.append(f"vesztergombi({n},{k})={v} != B={poly_bernoulli(n, k)}")
    return _result(
        1,
        "oracle-equivalence",
        failures,
        f"{len(matrix_pairs)} matrix shapes, {len(perm_pairs)} permutation shapes",
    )


def criterion_formula_identities() -> CriterionResult:
    """Exact identities among the closed-form counts."""
    failures: list[str] = []
    for n in range(31):
        for k in range(n + 1, 31):
            if poly_bernoulli(n, k) != poly_bernoulli(k, n):
                failures.append(f"B({n},{k}) asymmetric")
    for n in range(16):
        for k in range(16):
            if ml_degree(n, k) != ml_degree_inclusion_exclusion(n, k):
                failures.append(f"D({n},{k}) != inclusion-exclusion")
    for n in range(41):
        for m in range(n + 1):
            if stirling2(n, m) != stirling2_explicit(n, m):
                failures.append(f"S({n},{m}) mismatch")
    for k in range(41):
        square_sum = sum(
            (factorial(m) * stirling2(k + 1, m + 1)) ** 2 for m in range(k + 1)
        )
        if square_sum != poly_bernoulli(k, k):
            failures.append(f"diagonal square sum k={k}")
    return _result(2, "formula-identities", failures, "symmetry, IE, Stirling, diagonal sums")


def criterion_saddle_layer() -> CriterionResult:
    """Direction function, inverse, and critical equations at tolerance."""
    failures: list[str] = []
    if abs(saddle.f_dir(math.log(2.0)) - 1.0) > 1e-12:
        failures.append("f(log 2) != 1")
    if abs(saddle.f_inverse(1.0) - math.log(2.0)) > 1e-12:
        failures.append("f_inverse(1) != log 2")
    span = 20.0 / 0.05
    for i in range(200):
        r = 0.05 * span ** (i / 199.0)
        t = saddle.f_inverse(r)
        if abs(saddle.f_dir(t) - r) > 1e-11 * max(1.0, r):
            failures.append(f"round trip at r={r!r}")
        if abs(math.exp(-t) + math.exp(-saddle.f_inverse(1.0 / r)) - 1.0) > 1e-11:
            failures.append(f"variety identity at r={r!r}")
    for n in range(1, 51):
        for k in range(1, 51):
            sp = saddle.saddle_point(n, k)
            lhs = k * sp.a * math.exp(-sp.a)
            rhs = n * sp.b * math.exp(-sp.b)
            if abs(lhs - rhs) > 1e-9 * max(lhs, rhs):
                failures.append(f"critical equation at ({n},{k})")
    return _result(3, "saddle-layer", failures, "200-point grid and 50x50 critical equations")


def criterion_specialization() -> CriterionResult:
    """General smooth-point formula reproduces every closed-form estimator."""
    failures: list[str] = []
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", saddle.CompactnessWarning)
        for n in range(1, 31):
            for k in range(1, 31):
                gap_b = abs(
                    saddle.acsv_general_log(saddle.POLY_BERNOULLI_GF, n, k)
                    - saddle.bivar_asym_log(n, k)
                )
                if gap_b > 1e-9:
                    failures.append(f"acsv vs bivar at ({n},{k}): {gap_b:.3e}")
                gap_d = abs(
                    saddle.acsv_general_log(saddle.ML_DEGREE_GF, n, k)
                    - saddle.ml_asym_log(n, k)
                )
                if gap_d > 1e-9:
                    failures.append(f"acsv vs ml at ({n},{k}): {gap_d:.3e}")
        for k in range(1, 51):
            if abs(saddle.bivar_asym_log(k, k) - saddle.diag_asym_log(k, 1)) > 1e-10:
                failures.append(f"bivar vs diagonal at k={k}")
            if abs(saddle.ml_asym_log(k, k) - saddle.d_diag_asym_log(k)) > 1e-10:
                failures.append(f"ml vs corrected diagonal at k={k}")
    return _result(4, "specialization", failures, "30x30 grid plus 50 diagonal reductions")


def criterion_asymptotic_accuracy() -> CriterionResult:
    """Desk-scale relative-error bounds and monotone convergence."""
    failures: list[str] = []
    c_eff = saddle.DIAG_RATIO_C
    ratios = {}
    for k in range(10, 61):
        exact = log_of_count(poly_bernoulli(k, k))
        ratios[k] = math.exp(exact - saddle.diag_asym_log(k, 1))
        err2 = abs(math.exp(exact - saddle.diag_asym_log(k, 2)) - 1.0)
        if err2 >= abs(ratios[k] - 1.0):
            failures.append(f"order 2 not strictly closer at k={k}")
    for k in range(20, 61):
        if abs(ratios[k] - 1.0) > 2.0 * abs(c_eff) / k:
            failures.append(f"order-1 ratio bound at k={k}: {ratios[k] - 1.0:.5f}")
    if abs((ratios[50] - 1.0) * 50.0 - c_eff) > 0.1 * abs(c_eff):
        failures.append(f"k=50 correction constant: {(ratios[50] - 1.0) * 50.0:.5f} vs {c_eff:.5f}")
    for name, exact_fn, est_fn in (
        ("bivar", poly_bernoulli, saddle.bivar_asym_log),
        ("ml", ml_degree, saddle.ml_asym_log),
    ):
        errors = []
        for t in (2, 4, 8, 16):
            exact = log_of_count(exact_fn(2 * t, 3 * t))
            errors.append(abs(math.exp(exact - est_fn(2 * t, 3 * t)) - 1.0))
        if any(late >= early for early, late in zip(errors, errors[1:])):
            failures.append(f"{name} errors not decreasing along (2t,3t): {errors}")
        if errors[-1] > 0.05:
            failures.append(f"{name} error at t=16 is {errors[-1]:.4f} > 0.05")
    return _result(5, "asymptotic-accuracy", failures, "diagonal ratio bounds and (2t,3t) trends")


def criterion_quadrature() -> CriterionResult:
    """Quadrature identities at their stated tolerances."""
    failures: list[str] = []
    for k in range(11):
        value = quad.parseval_b(k, quad.QuadratureSpec(nodes=max(8, 2 * k + 4)))
        exact = poly_bernoulli(k, k)
        if abs(value / exact - 1.0) > 1e-9:
            failures.append(f"parseval at k={k}")
    defect = quad.residue_defect(8, 12, quad.QuadratureSpec(nodes=4096))
    if abs(defect) > 1e-4:
        failures.append(f"residue defect {defect:.2e} at (8,12)")
    log_integral = quad.laplace_integral_diag(100, quad.QuadratureSpec(nodes=512))
    log_prediction = saddle.diag_asym_log(100, 1) - 2.0 * math.lgamma(101.0)
    if abs(math.exp(log_integral - log_prediction) - 1.0) > 0.02:
        failures.append("laplace ratio at k=100 off by more than 2%")
    return _result(6, "quadrature", failures, "parseval k<=10, residue (8,12), laplace k=100")


def criterion_lclt() -> CriterionResult:
    """Limit constants, discrepancy decay, and the limit-shape peak."""
    failures: list[str] = []
    p = lclt.gaussian_params("B")
    printed = (
        (p.rho, 458),
        (p.amplitude, 3449),
        (p.mean_rate, 1268),
        (p.variance_rate, 871),
    )
    for value, digits in printed:
        if math.floor(value * 1000.0) != digits:
            failures.append(f"constant {value!r} does not truncate to {digits} thousandths")
    for which in ("B", "D"):
        reports = [lclt.lclt_discrepancy(n, which) for n in (10, 20, 40, 80)]
        sups = [r.sup for r in reports]
        scaled = [math.sqrt(r.n) * r.sup for r in reports]
        if any(late >= early for early, late in zip(sups, sups[1:])):
            failures.append(f"{which} raw discrepancy not decreasing: {sups}")
        if any(late >= early for early, late in zip(scaled, scaled[1:])):
            failures.append(f"{which} scaled discrepancy not decreasing: {scaled}")
    ml_sups = [lclt.ml_limit_discrepancy(n, 2.0).sup for n in (30, 60, 120)]
    if any(late >= early for early, late in zip(ml_sups, ml_sups[1:])):
        failures.append(f"ml discrepancy not decreasing: {ml_sups}")
    peak = 1.0 / ((4.0 * saddle.LOG2) * math.sqrt(1.0 - saddle.LOG2))
    if abs(lclt.ml_limit_shape(50, 25) - peak) > 1e-12:
        failures.append("limit-shape peak at n=50 off analytic value")
    for d in range(1, 15):
        if abs(lclt.ml_limit_shape(50, 25 + d) - lclt.ml_limit_shape(50, 25 - d)) > 1e-12:
            failures.append(f"limit shape asymmetric at offset {d}")
    return _result(7, "lclt", failures, "constants, decreasing discrepancies, shape peak")


def run_all() -> list[CriterionResult]:
    """All in-process criteria in order (report determinism is checked externally)."""
    return [
        criterion_oracle_equivalence(),
        criterion_formula_identities(),
        criterion_saddle_layer(),
        criterion_specialization(),
        criterion_asymptotic_accuracy(),
        criterion_quadrature(),
        criterion_lclt(),
    ]


def report_lines(results: list[CriterionResult]) -> list[str]:
    lines = [
        f"criterion {r.index} {r.name}: {'PASS' if r.passed else 'FAIL'} ({r.detail})"
        for r in results
    ]
    failed = sum(1 for r in results if not r.passed)
    lines.append("all criteria passed" if failed == 0 else f"{failed} criteria failed")
    return lines
