"""Gaussian limit densities and sup-norm discrepancy measurement.

Scaled coefficient sequences of the B and D arrays are compared against
their limiting Gaussian densities, and the near-diagonal ML sequence
against its limit shape, over explicitly truncated windows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .exactcomb import GuardError, log_of_count, ml_degree, poly_bernoulli
from .saddle import LOG2

SCALED_N_GUARD = 200
SCALED_K_GUARD = 400
ML_SHAPE_N_GUARD = 120
ML_SHAPE_K_MAX = 5.0

# Window edge must sit this far below the running sup before truncation
# is accepted.
_TAIL_RATIO = 1e-8


@dataclass(frozen=True)
class GaussianParams:
    """Constants of one limiting Gaussian density.

    rho is the exponential scaling rate, amplitude/mean_rate/variance_rate
    the density constants, prefactor the sequence-specific multiple of the
    density (1 for B, exp(-1)(1 - exp(-1)) for D).
    """

    rho: float
    amplitude: float
    mean_rate: float
    variance_rate: float
    prefactor: float


@dataclass(frozen=True)
class MLShapeParams:
    """Constants of the near-diagonal ML limit shape."""

    c2: float
    sigma2: float


@dataclass(frozen=True)
class DiscrepancyReport:
    """Sup-norm discrepancy over the truncated window and where it occurred."""

    n: int
    sup: float
    argmax_k: int


def gaussian_params(which: str) -> GaussianParams:
    """Limit constants for sequence 'B' or 'D'; closed forms, no fitting."""
    key = which.upper()
    if key not in ("B", "D"):
        raise ValueError(f"which must be 'B' or 'D', got {which!r}")
    log_em1 = math.log(math.e - 1.0)
    rho = 1.0 - log_em1
    amplitude = math.e / ((1.0 - log_em1) * (math.e - 1.0))
    mean_rate = amplitude / math.e
    variance_rate = mean_rate**2 * log_em1
    prefactor = 1.0 if key == "B" else math.exp(-1.0) * (1.0 - math.exp(-1.0))
    return GaussianParams(
        rho=rho,
        amplitude=amplitude,
        mean_rate=mean_rate,
        variance_rate=variance_rate,
        prefactor=prefactor,
    )


def ml_shape_params() -> MLShapeParams:
    return MLShapeParams(c2=1.0 / (4.0 * LOG2), sigma2=(1.0 - LOG2) / 4.0)


def nu_density(n: int, k: float, p: GaussianParams) -> float:
    """Gaussian density value at index k for row n (prefactor not applied)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    spread = 2.0 * p.variance_rate * n
    return p.amplitude / math.sqrt(math.pi * spread) * math.exp(-((k - n * p.mean_rate) ** 2) / spread)


def scaled_coefficient(n: int, k: int, which: str) -> float:
    """rho^n B(n,k)/(n! k!) or rho^n D(n,k)/(n! k!), in ordinary scale."""
    if not (0 <= n <= SCALED_N_GUARD and 0 <= k <= SCALED_K_GUARD):
        raise GuardError(f"(n,k)=({n},{k}) outside table bound {SCALED_N_GUARD}x{SCALED_K_GUARD}")
    p = gaussian_params(which)
    value = poly_bernoulli(n, k) if which.upper() == "B" else ml_degree(n, k)
    if value == 0:
        return 0.0
    return math.exp(
        n * math.log(p.rho) + log_of_count(value) - math.lgamma(n + 1) - math.lgamma(k + 1)
    )


def window_limit(n: int, p: GaussianParams) -> int:
    """Largest k the discrepancy sweep inspects for row n.

    ceil(n omega + 12 sqrt(n sigma)), capped at the table bound; both sides
    of the comparison are below 1e-9 of the peak beyond the cap.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    return min(math.ceil(n * p.mean_rate + 12.0 * math.sqrt(n * p.variance_rate)), SCALED_K_GUARD)


def lclt_discrepancy(n: int, which: str) -> DiscrepancyReport:
    """Sup-norm gap between the scaled sequence and its Gaussian limit.

    Swept over the truncated window of window_limit; a tail guard asserts
    the last windowed term is negligible against the sup.
    """
    if not 1 <= n <= SCALED_N_GUARD:
        raise GuardError(f"n={n} outside 1..{SCALED_N_GUARD}")
    p = gaussian_params(which)
    k_max = window_limit(n, p)
    sup = -1.0
    argmax_k = -1
    last = 0.0
    for k in range(k_max + 1):
        last = abs(scaled_coefficient(n, k, which) - p.prefactor * nu_density(n, k, p))
        if last > sup:
            sup = last
            argmax_k = k
    if last > _TAIL_RATIO * sup:
        raise ArithmeticError(f"window truncation unsafe at n={n}: edge term {last} vs sup {sup}")
    return DiscrepancyReport(n=n, sup=sup, argmax_k=argmax_k)


def ml_limit_shape(n: int, k: float) -> float:
    """Limit-shape value 2^(-2(k - n/2)^2/(n(1 - log 2))) / ((4 log 2) sqrt(1 - log 2))."""
    if n < 1:
        raise ValueError("n must be >= 1")
    exponent = -2.0 * (k - n / 2.0) ** 2 / (n * (1.0 - LOG2)) * LOG2
    return math.exp(exponent) / ((4.0 * LOG2) * math.sqrt(1.0 - LOG2))


def ml_window(n: int, window: float) -> tuple[int, int]:
    """Integer k range with |k - n/2| <= window sqrt(n), clipped to [0, n]."""
    if not 0 < window <= ML_SHAPE_K_MAX:
        raise ValueError(f"window must lie in (0, {ML_SHAPE_K_MAX}], got {window}")
    half_width = window * math.sqrt(n)
    return max(0, math.ceil(n / 2.0 - half_width)), min(n, math.floor(n / 2.0 + half_width))


def ml_scaled_coefficient(n: int, k: int) -> float:
    """Exact side of the limit-shape comparison: (2 log 2)^n/n! ML(n-k,k)."""
    if not 2 <= n <= ML_SHAPE_N_GUARD:
        raise GuardError(f"n={n} outside 2..{ML_SHAPE_N_GUARD}")
    if not 0 <= k <= n:
        raise ValueError(f"k={k} outside 0..{n}")
    count = ml_degree(n - k, k)
    if count == 0:
        return 0.0
    return math.exp(n * math.log(2.0 * LOG2) - math.lgamma(n + 1) + log_of_count(count))


def ml_limit_discrepancy(n: int, window: float = 2.0) -> DiscrepancyReport:
    """Sup-norm gap between (2 log 2)^n/n! ML(n-k,k) and the limit shape.

    Swept over integer k with |k - n/2| <= window sqrt(n), clipped to [0,n].
    """
    if not 2 <= n <= ML_SHAPE_N_GUARD:
        raise GuardError(f"n={n} outside 2..{ML_SHAPE_N_GUARD}")
    lo, hi = ml_window(n, window)
    sup = -1.0
    argmax_k = -1
    for k in range(lo, hi + 1):
        gap = abs(ml_scaled_coefficient(n, k) - ml_limit_shape(n, k))
        if gap > sup:
            sup = gap
            argmax_k = k
    return DiscrepancyReport(n=n, sup=sup, argmax_k=argmax_k)
