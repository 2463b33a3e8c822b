"""
Regularized incomplete beta function I_x(a, b).

Evaluated with the continued fraction for the incomplete beta integral
(modified Lentz method). For x above (a + 1) / (a + b + 2) the fraction
converges slowly, so the symmetry I_x(a, b) = 1 - I_{1-x}(b, a) is used.
"""

import math

from advice_rl.utils.constants import BETA_EPSILON, BETA_MAX_ITERATIONS, BETA_TINY
from advice_rl.utils.errors import ContractViolation, NonConvergenceError


def _floor(value: float) -> float:
    return BETA_TINY if abs(value) < BETA_TINY else value


def _continued_fraction(x: float, a: float, b: float) -> float:
    qab = a + b
    qap = a + 1.0
    qam = a - 1.0
    c = 1.0
    d = 1.0 / _floor(1.0 - qab * x / qap)
    h = d

    for m in range(1, BETA_MAX_ITERATIONS + 1):
        m2 = 2 * m
        # even step
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 / _floor(1.0 + aa * d)
        c = _floor(1.0 + aa / c)
        h *= d * c
        # odd step
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 / _floor(1.0 + aa * d)
        c = _floor(1.0 + aa / c)
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < BETA_EPSILON:
            return h

    raise NonConvergenceError(
        f"incomplete beta continued fraction did not converge in {BETA_MAX_ITERATIONS} "
        f"iterations (x={x}, a={a}, b={b})"
    )


def reg_inc_beta(x: float, a: float, b: float) -> float:
    """
    Regularized incomplete beta function.

    Args:
        x: Upper integration limit in [0, 1]
        a: First shape parameter, > 0
        b: Second shape parameter, > 0

    Returns:
        I_x(a, b) in [0, 1]

    Raises:
        ContractViolation: Arguments outside the domain or non-finite
    """
    for name, value in (("x", x), ("a", a), ("b", b)):
        if not math.isfinite(value):
            raise ContractViolation(f"{name} must be finite, got {value}")
    if not 0.0 <= x <= 1.0:
        raise ContractViolation(f"x must be in [0, 1], got {x}")
    if a <= 0.0 or b <= 0.0:
        raise ContractViolation(f"shape parameters must be > 0, got a={a}, b={b}")

    if x == 0.0:
        return 0.0
    if x == 1.0:
        return 1.0

    log_front = (
        math.lgamma(a + b) - math.lgamma(a) - math.lgamma(b)
        + a * math.log(x) + b * math.log1p(-x)
    )
    front = math.exp(log_front)

    if x < (a + 1.0) / (a + b + 2.0):
        value = front * _continued_fraction(x, a, b) / a
    else:
        value = 1.0 - front * _continued_fraction(1.0 - x, b, a) / b
    return min(1.0, max(0.0, value))


def f_survival(f_statistic: float, df1: int, df2: int) -> float:
    """
    Upper tail P(F > f) of the F(df1, df2) distribution.

    Written as I_{df2/(df2 + df1 f)}(df2/2, df1/2) so small tails keep
    their relative precision.
    """
    if df1 < 1 or df2 < 1:
        raise ContractViolation(f"degrees of freedom must be >= 1, got ({df1}, {df2})")
    if math.isnan(f_statistic) or f_statistic < 0.0:
        raise ContractViolation(f"F statistic must be >= 0, got {f_statistic}")
    if math.isinf(f_statistic):
        return 0.0
    return reg_inc_beta(df2 / (df2 + df1 * f_statistic), df2 / 2.0, df1 / 2.0)
