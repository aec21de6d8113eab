"""Independent numeric oracles used to derive expected test values.

Plain midpoint bisection and DFT-based Cauchy coefficients only; nothing here
shares code with the library paths under test.
"""

from __future__ import annotations

import math

import numpy as np


def polyval(coeffs, x):
    acc = 0.0
    for c in coeffs:
        acc = acc * x + c
    return acc


def bisect_oracle(coeffs, lo, hi, iters: int = 200) -> float:
    """Unpolished midpoint bisection; coefficients highest degree first."""
    flo = polyval(coeffs, lo)
    fhi = polyval(coeffs, hi)
    assert flo == 0.0 or fhi == 0.0 or (flo > 0.0) != (fhi > 0.0), "oracle bracket invalid"
    if flo == 0.0:
        return lo
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        fmid = polyval(coeffs, mid)
        if fmid == 0.0:
            return mid
        if (fmid > 0.0) == (flo > 0.0):
            lo, flo = mid, fmid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def cauchy_coeffs(evaluate_fn, z0: complex, n: int, radius: float, samples: int = 1024):
    """Taylor coefficients about z0 from boundary samples of a small circle.

    Discretised Cauchy integral: c_k ~ mean of f(z0 + radius*e^(i t)) e^(-i k t)
    / radius^k.  Aliasing error decays like (radius/conv_radius)^samples.
    """
    ts = 2.0 * math.pi * np.arange(samples) / samples
    ring = z0 + radius * np.exp(1j * ts)
    vals = np.array([evaluate_fn(z) for z in ring])
    spectrum = np.fft.fft(vals) / samples
    return [spectrum[k] / radius ** k for k in range(n + 1)]
