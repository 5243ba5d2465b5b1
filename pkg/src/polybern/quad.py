"""Periodic-trapezoid cross-checks of the integral identities.

The unit-circle mean of a squared coefficient polynomial recovers the
diagonal counts exactly; a circle integral around the origin recovers
B(n,k) up to an exponentially small defect; the diagonal contour integral
approaches its quadratic-peak (Laplace) prediction.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .exactcomb import GuardError, LogEstimate, factorial, log_of_count, poly_bernoulli, stirling2
from .saddle import saddle_point

TWO_PI = 2.0 * math.pi

U_POLY_GUARD = 60
PARSEVAL_GUARD = 20
LAPLACE_GUARD = 300
RESIDUE_GUARD = 40

# exp underflows to zero below this exponent; such terms add nothing
_EXP_FLOOR = -745.0


@dataclass(frozen=True)
class QuadratureSpec:
    """Node count (and optional circle radius) for one periodic trapezoid rule."""

    nodes: int
    radius: float | None = None

    def __post_init__(self):
        if self.nodes < 8 or self.nodes % 2:
            raise ValueError(f"nodes must be even and >= 8, got {self.nodes}")
        if self.radius is not None and self.radius <= 0:
            raise ValueError(f"radius must be positive, got {self.radius}")


def u_poly(k: int, phi: float) -> complex:
    """Coefficient polynomial sum_m m! S(k+1,m+1) y^m at y = exp(i phi)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k > U_POLY_GUARD:
        raise GuardError(f"k={k} exceeds float-coefficient guard {U_POLY_GUARD}")
    try:
        coeffs = [float(factorial(m) * stirling2(k + 1, m + 1)) for m in range(k + 1)]
    except OverflowError as exc:
        raise GuardError(f"coefficient overflow at k={k}") from exc
    y = cmath.exp(1j * phi)
    acc = complex(0.0)
    for c in reversed(coeffs):
        acc = acc * y + c
    return acc


def parseval_b(k: int, spec: QuadratureSpec) -> float:
    """B(k,k) as the circle mean of |u_k|^2.

    The integrand is a trigonometric polynomial of degree k, so any node
    count >= 2k+2 is exact up to rounding; the guard demands 2k+4.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k > PARSEVAL_GUARD:
        raise GuardError(f"k={k} exceeds parseval guard {PARSEVAL_GUARD}")
    if spec.nodes < 2 * k + 4:
        raise GuardError(f"nodes={spec.nodes} below exactness bound {2 * k + 4}")
    total = 0.0
    for j in range(spec.nodes):
        total += abs(u_poly(k, TWO_PI * j / spec.nodes)) ** 2
    return total / spec.nodes


def laplace_integrand_diag(k: int, phi: float) -> float:
    """Value of 1/|log(1 + exp(-i phi))|^(2k+2) on the open interval (-pi, pi)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k > LAPLACE_GUARD:
        raise GuardError(f"k={k} exceeds laplace guard {LAPLACE_GUARD}")
    if not -math.pi < phi < math.pi:
        raise ValueError("phi must lie strictly inside (-pi, pi)")
    modulus = abs(cmath.log(1.0 + cmath.exp(-1j * phi)))
    exponent = -(2 * k + 2) * math.log(modulus)
    if exponent < _EXP_FLOOR:
        return 0.0
    return math.exp(exponent)


def _laplace_integral_log(k: int, nodes: int) -> float:
    # Midpoint-offset nodes keep the rule away from the phi = +-pi
    # singularity; terms are combined in log space since the peak value
    # grows like (1/log 2)^(2k+2).
    exponents = []
    for j in range(nodes):
        phi = -math.pi + (j + 0.5) * TWO_PI / nodes
        modulus = abs(cmath.log(1.0 + cmath.exp(-1j * phi)))
        exponents.append(-(2 * k + 2) * math.log(modulus))
    top = max(exponents)
    mean = sum(math.exp(e - top) for e in exponents) / nodes
    return top + math.log(mean)


def laplace_integral_diag(k: int, spec: QuadratureSpec) -> float:
    """Trapezoid value of the diagonal contour integral.

    Returns the plain value for k <= 40 and its natural log for k > 40,
    where the value itself would overflow a float.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k > LAPLACE_GUARD:
        raise GuardError(f"k={k} exceeds laplace guard {LAPLACE_GUARD}")
    log_value = _laplace_integral_log(k, spec.nodes)
    if k <= 40:
        return math.exp(log_value)
    return log_value


def _residue_trapezoid(n: int, k: int, spec: QuadratureSpec) -> tuple[float, complex]:
    # Returns (peak log magnitude, complex mean of the rescaled terms).
    if not (1 <= n <= RESIDUE_GUARD and 1 <= k <= RESIDUE_GUARD):
        raise GuardError(f"(n,k)=({n},{k}) outside residue guard 1..{RESIDUE_GUARD}")
    radius = spec.radius if spec.radius is not None else saddle_point(n, k).a
    if radius <= 0:
        raise ValueError("radius must be positive")
    # 1 - exp(-x) vanishes at x = 2 pi i m; keep the circle off those moduli
    nearest = round(radius / TWO_PI)
    if nearest >= 1 and abs(radius - TWO_PI * nearest) < 1e-9 * max(1.0, radius):
        raise ValueError(f"radius {radius} passes through a zero of 1 - exp(-x)")
    logs = []
    for j in range(spec.nodes):
        x = radius * cmath.exp(1j * TWO_PI * j / spec.nodes)
        lg = cmath.log(1.0 - cmath.exp(-x))
        logs.append(-n * cmath.log(x) - lg - (k + 1) * cmath.log(-lg))
    top = max(w.real for w in logs)
    mean = sum(cmath.exp(w - top) for w in logs) / spec.nodes
    return top, mean


def residue_integral_b(n: int, k: int, spec: QuadratureSpec) -> LogEstimate:
    """Log of the circle-integral recovery of B(n,k).

    Parameterizes the full circle |x| = radius, folds n! k! back in, and
    keeps the real part; the imaginary part cancels by conjugate symmetry.
    """
    top, mean = _residue_trapezoid(n, k, spec)
    if mean.real <= 0:
        raise ArithmeticError(f"quadrature mean {mean} lost positivity at ({n},{k})")
    return math.lgamma(n + 1) + math.lgamma(k + 1) + top + math.log(mean.real)


def residue_defect(n: int, k: int, spec: QuadratureSpec) -> float:
    """Signed log-space defect of the circle integral against the exact count."""
    return residue_integral_b(n, k, spec) - log_of_count(poly_bernoulli(n, k))
