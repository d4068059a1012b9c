"""The four 2*pi-periodic kernels behind the Mellin integrals.

``P`` is the piecewise-quadratic Clausen-type kernel (real part of the
dilogarithm on the unit circle), ``PTILDE`` its nonnegative shift,
``Q`` the sawtooth derivative of ``P``, and ``ALT`` the +-1 square wave.
All are defined for x >= 0 with left-closed fundamental domains
[2*pi*n, 2*pi*(n+1)).
"""

from __future__ import annotations

import enum
import math

import numpy as np

from .core import DomainError, require_finite

TWO_PI = 2.0 * math.pi

PI2_6 = math.pi ** 2 / 6.0
PI2_12 = math.pi ** 2 / 12.0

# Roots of P in the fundamental domain: 2*pi*n + {ROOT_LO, ROOT_HI}.
ROOT_LO = math.pi * (3.0 - math.sqrt(3.0)) / 3.0
ROOT_HI = math.pi * (3.0 + math.sqrt(3.0)) / 3.0


class KernelId(enum.Enum):
    P = "p"
    PTILDE = "ptilde"
    Q = "q"
    ALT = "alt"


def reduce_period(x: float) -> tuple[int, float]:
    """Split x >= 0 into (n, theta) with x = 2*pi*n + theta and theta in [0, 2*pi).

    Uses one fused floor-and-subtract of x / (2*pi), so the rounding error stays
    O(ulp(x)) instead of accumulating over repeated subtractions.
    """
    require_finite(x)
    if x < 0.0:
        raise DomainError(f"reduce_period: x must be >= 0, got {x}")
    n = int(math.floor(x / TWO_PI))
    theta = x - TWO_PI * n
    # Guard the boundary: rounding can push theta to exactly 2*pi.
    if theta >= TWO_PI:
        n += 1
        theta -= TWO_PI
    if theta < 0.0:
        n -= 1
        theta += TWO_PI
    return n, theta


def _p_fundamental(theta: float) -> float:
    return PI2_6 - theta * (TWO_PI - theta) / 4.0


def kernel_eval(k: KernelId, x: float) -> float:
    """Evaluate one of the periodic kernels at x >= 0.

    At the jump points x = 2*pi*n of Q and ALT the left-closed convention of the
    fundamental domain applies (no midpoint averaging).
    """
    n, theta = reduce_period(x)
    if k is KernelId.P:
        return _p_fundamental(theta)
    if k is KernelId.PTILDE:
        return _p_fundamental(theta) + PI2_12
    if k is KernelId.Q:
        return 0.5 * (theta - math.pi)
    if k is KernelId.ALT:
        return -1.0 if n % 2 else 1.0
    raise ValueError(f"unknown kernel {k!r}")


def kernel_cosine_partial(x: float, n_terms: int) -> float:
    """Partial Fourier sum sum_{n=1}^{N} cos(n*x)/n**2; the slow oracle for P."""
    require_finite(x)
    if n_terms < 1:
        raise DomainError("kernel_cosine_partial: n_terms must be >= 1")
    n = np.arange(1, n_terms + 1, dtype=np.float64)
    return float(np.sum(np.cos(n * x) / n ** 2))
