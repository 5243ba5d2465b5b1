"""Direction function, saddle points, and log-space asymptotic estimators.

Everything returns natural logs (LogEstimate) because the estimated
quantities overflow machine floats almost immediately.
"""

from __future__ import annotations

import enum
import math
import warnings
from dataclasses import dataclass

from .exactcomb import LogEstimate

LOG2 = math.log(2.0)

# Second-order diagonal correction constant in closed form.
SECOND_ORDER_C = (2 * LOG2**3 + 3 * LOG2**2 - 12 * LOG2 + 6) / (16 * (1 - LOG2) ** 2)

# The order-1 diagonal prefactor carries sqrt(k) while the order-2 one
# carries sqrt(k+1); pulling sqrt(k/(k+1)) into the correction shifts its
# 1/k coefficient by -1/2, which is what a ratio against the order-1
# estimate actually converges to.
DIAG_RATIO_C = SECOND_ORDER_C - 0.5

# Largest t the stable evaluation of f supports; beyond it exp(-t)
# degrades into subnormals and the quotient loses all precision.
F_T_MAX = 700.0

_BRACKET_STEPS = 200
_BISECTION_STEPS = 120


class CompactnessWarning(UserWarning):
    """Direction n/k left the policy band [1/10, 10] where the estimates are trusted."""


@dataclass(frozen=True)
class SaddlePoint:
    """Positive solution (a, b) of the critical system for direction ratio = n/k.

    Lies on the variety exp(-a) + exp(-b) = 1 with f(a)·f(b) = 1; the
    diagonal ratio 1 gives a = b = log 2.
    """

    a: float
    b: float
    ratio: float


class GFKind(enum.Enum):
    POLY_BERNOULLI = "poly_bernoulli"
    ML_DEGREE = "ml_degree"


@dataclass(frozen=True)
class GFDescriptor:
    """A generating function with denominator H = exp(-x) + exp(-y) - 1.

    The numerator at a point is 1 for POLY_BERNOULLI and exp(-x-y) for
    ML_DEGREE; both are positive everywhere, so log are finite.
    """

    kind: GFKind

    def g_log(self, x: float, y: float) -> float:
        if self.kind is GFKind.ML_DEGREE:
            return -x - y
        return 0.0

    @staticmethod
    def h(x: float, y: float) -> float:
        return math.exp(-x) + math.exp(-y) - 1.0


POLY_BERNOULLI_GF = GFDescriptor(GFKind.POLY_BERNOULLI)
ML_DEGREE_GF = GFDescriptor(GFKind.ML_DEGREE)


def _log1mexp(t: float) -> float:
    # log(1 - exp(-t)) for t > 0, split at log 2 to keep full precision
    # at both ends.
    if t > LOG2:
        return math.log1p(-math.exp(-t))
    return math.log(-math.expm1(-t))


def f_dir(t: float) -> float:
    """Direction function f(t) = t / ((1 - e^t) log(1 - e^{-t})).

    Strictly increasing from 0 to infinity; evaluated in the cancellation-free
    form t e^{-t} / ((-expm1(-t)) (-log(1 - e^{-t}))).
    """
    if t <= 0:
        raise ValueError("f is defined for t > 0")
    if t >= F_T_MAX:
        raise ValueError(f"t={t} overflows the stable form (limit {F_T_MAX})")
    return t * math.exp(-t) / ((-math.expm1(-t)) * (-_log1mexp(t)))


def f_inverse(r: float) -> float:
    """Unique t > 0 with f(t) = r, by bracketed bisection.

    Seeded at [2^-40, 1]; the bracket end is doubled (or halved, for very
    flat directions) until the sign changes, then bisected 120 times.
    """
    if r <= 0:
        raise ValueError("f_inverse is defined for r > 0")
    lo, hi = 2.0**-40, 1.0
    if f_dir(lo) > r:
        for _ in range(_BRACKET_STEPS):
            hi = lo
            lo *= 0.5
            if f_dir(lo) <= r:
                break
        else:
            raise ArithmeticError(f"bracket shrink failed for r={r}")
    elif f_dir(hi) < r:
        for _ in range(_BRACKET_STEPS):
            lo = hi
            hi = min(2.0 * hi, F_T_MAX * (1 - 2**-20))
            if f_dir(hi) >= r:
                break
            if hi >= F_T_MAX * (1 - 2**-20):
                raise ValueError(f"r={r} outside the stable range of f")
        else:
            raise ArithmeticError(f"bracket expansion exceeded {_BRACKET_STEPS} doublings for r={r}")
    for _ in range(_BISECTION_STEPS):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if f_dir(mid) < r:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def saddle_point(n: int, k: int) -> SaddlePoint:
    """Critical point (a, b) = (f^{-1}(n/k), f^{-1}(k/n)) for direction (n, k).

    b is recovered from the variety equation exp(-b) = 1 - exp(-a), which
    coincides with f^{-1}(k/n) and keeps the on-variety identity exact.
    """
    if n < 1 or k < 1:
        raise ValueError("saddle_point needs n, k >= 1")
    a = f_inverse(n / k)
    b = -_log1mexp(a)
    return SaddlePoint(a=a, b=b, ratio=n / k)


def _bivar_parts(n: int, k: int) -> tuple[LogEstimate, SaddlePoint]:
    if n < 1 or k < 1:
        raise ValueError("estimate needs n, k >= 1")
    ratio = n / k
    if not 0.1 <= ratio <= 10.0:
        warnings.warn(
            f"direction n/k = {ratio:.6g} outside the compact band [1/10, 10]; "
            "estimate returned but untrusted",
            CompactnessWarning,
            stacklevel=3,
        )
    sp = saddle_point(n, k)
    a, b = sp.a, sp.b
    aea = a * math.exp(-a)
    beb = b * math.exp(-b)
    bracket = beb + aea - a * b
    if bracket <= 0:
        raise ArithmeticError(f"variance bracket {bracket} <= 0 at direction ({n},{k})")
    value = (
        math.lgamma(n + 1)
        + math.lgamma(k + 1)
        - n * math.log(a)
        - k * math.log(b)
        - 0.5 * math.log(k)
        - 0.5 * math.log(2.0 * math.pi * aea * bracket)
    )
    return value, sp


def bivar_asym_log(n: int, k: int) -> LogEstimate:
    """Log of the leading-order bivariate estimate of B(n,k)."""
    return _bivar_parts(n, k)[0]


def diag_asym_log(k: int, order: int = 1) -> LogEstimate:
    """Log of the diagonal estimate of B(k,k).

    Order 1 is (k!)^2 sqrt(1/(k pi (1-log 2))) (1/log 2)^{2k+1}; order 2
    replaces k by k+1 under the square root and multiplies by
    (1 + SECOND_ORDER_C/k).
    """
    if k < 1:
        raise ValueError("diag_asym_log needs k >= 1")
    if order not in (1, 2):
        raise ValueError("order must be 1 or 2")
    base = 2.0 * math.lgamma(k + 1) - (2 * k + 1) * math.log(LOG2)
    if order == 1:
        return base - 0.5 * math.log(k * math.pi * (1 - LOG2))
    return base - 0.5 * math.log((k + 1) * math.pi * (1 - LOG2)) + math.log1p(SECOND_ORDER_C / k)


def d_diag_asym_log(k: int) -> LogEstimate:
    """Log of the corrected diagonal estimate of D(k,k); order-1 B estimate minus log 4."""
    return diag_asym_log(k, 1) - math.log(4.0)


def ml_asym_log(n: int, k: int) -> LogEstimate:
    """Log of the leading-order estimate of D(n,k) = ML(n,k).

    Exactly bivar_asym_log(n,k) - a - b at the shared saddle point.
    """
    value, sp = _bivar_parts(n, k)
    return value - sp.a - sp.b


def excedance_asym_log(r: int, s: int) -> LogEstimate:
    """Log of the estimate for the excedance-word bracket count at (r, s)."""
    if r < 1 or s < 1:
        raise ValueError("excedance_asym_log needs r, s >= 1")
    x = f_inverse(r / s)
    y = -_log1mexp(x)
    xex = x * math.exp(-x)
    yey = y * math.exp(-y)
    bracket = yey + xex - x * y
    if bracket <= 0:
        raise ArithmeticError(f"variance bracket {bracket} <= 0 at direction ({r},{s})")
    return (
        math.lgamma(r + 1)
        + math.lgamma(s + 1)
        - r * math.log(x)
        - s * math.log(y)
        - 0.5 * math.log(2.0 * math.pi * s)
        - y
        - 0.5 * math.log(xex * bracket)
    )


def acsv_general_log(g: GFDescriptor, n: int, k: int) -> LogEstimate:
    """Log of the general smooth-point estimate for the coefficient count.

    Evaluates G(x,y) sqrt(-y H_y / (2 pi k Q)) x^{-n} y^{-k} n! k! at the
    saddle point, with the H partials taken analytically and Q assembled
    from them literally; must reproduce the closed-form estimators.
    """
    if n < 1 or k < 1:
        raise ValueError("acsv_general_log needs n, k >= 1")
    sp = saddle_point(n, k)
    x, y = sp.a, sp.b
    hx = -math.exp(-x)
    hy = -math.exp(-y)
    hxx = math.exp(-x)
    hyy = math.exp(-y)
    hxy = 0.0
    q = (
        -(y**2) * hy**2 * x * hx
        - y * hy * x**2 * hx**2
        - x**2 * y**2 * (hy**2 * hxx + hx**2 * hyy - 2.0 * hx * hy * hxy)
    )
    if q <= 0:
        raise ArithmeticError(f"Q = {q} <= 0 at direction ({n},{k})")
    inner = -y * hy / (k * q)
    if inner <= 0:
        raise ArithmeticError(f"radicand {inner} <= 0 at direction ({n},{k})")
    return (
        math.lgamma(n + 1)
        + math.lgamma(k + 1)
        + g.g_log(x, y)
        - 0.5 * math.log(2.0 * math.pi)
        - n * math.log(x)
        - k * math.log(y)
        + 0.5 * math.log(inner)
    )
