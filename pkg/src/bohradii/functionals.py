"""The six weighted functionals on concrete functions, and their proof envelopes.

For weights (alpha, beta) and a disk self-map f with a = |f(0)|, each family
pairs a concrete left-hand side (``bohr_lhs``) with the closed-form worst case
over all functions sharing that a (``majorant``) and its numerator-minus-
denominator form (``gap``); gap <= 0 exactly when the majorant is at most 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .analytic import (
    AnalyticFunction,
    area_sum_and_tail,
    certify_bounded,
    evaluate,
    evaluate_grid,
    recentered_abs_sum,
    recentered_abs_sums_grid,
    series_abs_sum,
)
from .errors import DomainError, UncertifiedFunctionError
from .radii import Theorem, WeightPair

ENVELOPE_GRID = 512
A_CAP = 1.0 - 1e-9  # the a -> 1 boundary is removable; stay just inside
_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
_INV_PHI2 = (3.0 - math.sqrt(5.0)) / 2.0


@dataclass(frozen=True)
class FunctionalBreakdown:
    """One left-hand-side value split into its named weighted terms.

    Absent terms are stored as 0.0 so that total == sum of terms always holds.
    ``truncation_slack`` is already weighted and must be added to the right
    side of any <= comparison.
    """

    theorem: Theorem
    total: float
    modulus_term: float
    constant_term: float
    series_term: float
    area_term: float
    truncation_slack: float


def _require_certified(f: AnalyticFunction) -> None:
    report = certify_bounded(f)
    if not report.certified:
        raise UncertifiedFunctionError(
            f"function not certified as a disk self-map (sup estimate "
            f"{report.sup_estimate})"
        )


def bohr_lhs(
    theorem: Theorem, f: AnalyticFunction, z: complex, w: WeightPair
) -> FunctionalBreakdown:
    """Evaluate the family's left-hand side at z with per-term breakdown.

    t31: alpha*|f(z)| + (1-alpha)*|c0| + beta*sum_{k>=1} |c_k| r^k
    t32: drops the constant term
    t33/t34: alpha*|f(z)| + beta*sum_{k>=1} |f^(k)(z)/k!| r^k
    t35: alpha*sum_{k>=0} |c_k| r^k + beta*(area sum);  t36 adds (1-alpha)*|c0|
    """
    _require_certified(f)
    w.require(theorem)
    z = complex(z)
    r = abs(z)
    if r >= 1.0:
        raise DomainError(f"|z| must be below 1, got {r}")
    a0 = abs(evaluate(f, 0.0))
    alpha, beta = w.alpha, w.beta
    modulus = constant = series = area = slack = 0.0

    if theorem in (Theorem.T31, Theorem.T32):
        modulus = alpha * abs(evaluate(f, z))
        if theorem is Theorem.T31:
            constant = (1.0 - alpha) * a0
        s, s_slack = series_abs_sum(f, r, start=1)
        series = beta * s
        slack = beta * s_slack
    elif theorem in (Theorem.T33, Theorem.T34):
        modulus = alpha * abs(evaluate(f, z))
        s, s_slack = recentered_abs_sum(f, z, r)
        series = beta * s
        slack = beta * s_slack
    else:
        s, s_slack = series_abs_sum(f, r, start=0)
        series = alpha * s
        slack = alpha * s_slack
        if r > 0.0:
            s_area, a_slack = area_sum_and_tail(f, r)
            area = beta * s_area
            slack += beta * a_slack
        if theorem is Theorem.T36:
            constant = (1.0 - alpha) * a0

    total = modulus + constant + series + area
    return FunctionalBreakdown(theorem, total, modulus, constant, series, area, slack)


def bohr_lhs_theta_grid(
    theorem: Theorem, f: AnalyticFunction, r: float, w: WeightPair, thetas: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """(totals, slacks) of the left-hand side at z = r*exp(i*theta) per theta.

    Matches ``bohr_lhs`` pointwise; the batched path exists because the
    campaign grids evaluate the same function at many angles.
    """
    _require_certified(f)
    w.require(theorem)
    if not (0.0 <= r < 1.0):
        raise DomainError(f"r must lie in [0, 1), got {r}")
    thetas = np.asarray(thetas, dtype=float)
    alpha, beta = w.alpha, w.beta
    a0 = abs(evaluate(f, 0.0))

    if theorem in (Theorem.T35, Theorem.T36):
        one = bohr_lhs(theorem, f, complex(r), w)
        return (
            np.full(thetas.shape, one.total),
            np.full(thetas.shape, one.truncation_slack),
        )

    zs = r * np.exp(1j * thetas)
    mods = alpha * np.abs(evaluate_grid(f, zs))
    if theorem in (Theorem.T31, Theorem.T32):
        s, s_slack = series_abs_sum(f, r, start=1)
        totals = mods + beta * s
        if theorem is Theorem.T31:
            totals = totals + (1.0 - alpha) * a0
        slacks = np.full(thetas.shape, beta * s_slack)
    else:
        vals, v_slacks = recentered_abs_sums_grid(f, zs, r)
        totals = mods + beta * vals
        slacks = beta * v_slacks
    return totals, slacks


# -- closed-form majorants and gap functions -------------------------------------

def _check_ar(theorem: Theorem, a, r, w: WeightPair) -> None:
    w.require(theorem)
    a_arr, r_arr = np.asarray(a, dtype=float), np.asarray(r, dtype=float)
    if np.any(a_arr < 0.0) or np.any(a_arr > 1.0):
        raise DomainError("a must lie in [0, 1]")
    if np.any(r_arr < 0.0) or np.any(r_arr >= 1.0):
        raise DomainError("r must lie in [0, 1)")
    if theorem in (Theorem.T33, Theorem.T34) and np.any(r_arr >= 0.5):
        raise DomainError("the derivative-series majorant requires r < 1/2")


def majorant(theorem: Theorem, a, r, w: WeightPair):
    """Worst-case LHS over all certified f with |f(0)| = a at |z| = r.

    Valid wherever the bound chain that produced it holds; in particular the
    t33/t34 form additionally requires r below the root of
    2*alpha*r^2 + (2*beta+alpha)*r - alpha to dominate (see ``gap``).
    Accepts scalars or numpy arrays in ``a`` and ``r``.
    """
    _check_ar(theorem, a, r, w)
    alpha, beta = w.alpha, w.beta
    if theorem is Theorem.T31:
        num = (
            alpha * (a + r) * (1.0 - r)
            + (1.0 - alpha) * a * (1.0 + a * r) * (1.0 - r)
            + beta * (1.0 - a * a) * (1.0 + a * r) * r
        )
        return num / ((1.0 + a * r) * (1.0 - r))
    if theorem is Theorem.T32:
        num = alpha * (a + r) * (1.0 - r) + beta * (1.0 - a * a) * (1.0 + a * r) * r
        return num / ((1.0 + a * r) * (1.0 - r))
    if theorem in (Theorem.T33, Theorem.T34):
        num = (
            alpha * (a + r) * (1.0 + a * r) * (1.0 - 2.0 * r)
            + beta * (1.0 - a * a) * (1.0 - r) * r
        )
        return num / ((1.0 + a * r) ** 2 * (1.0 - 2.0 * r))
    t = (1.0 - r * r) ** 2
    num = (
        alpha * a * t
        + alpha * r * (1.0 - a * a) * (1.0 + r) * (1.0 - r * r)
        + beta * r * r * (1.0 - a * a) ** 2
    )
    value = num / t
    if theorem is Theorem.T36:
        value = value + (1.0 - alpha) * a
    return value


def gap(theorem: Theorem, a, r, w: WeightPair):
    """Numerator-minus-denominator form of the majorant: gap <= 0 iff majorant <= 1."""
    _check_ar(theorem, a, r, w)
    alpha, beta = w.alpha, w.beta
    if theorem is Theorem.T31:
        return (
            alpha * (a + r) * (1.0 - r)
            + (1.0 - alpha) * a * (1.0 + a * r) * (1.0 - r)
            + beta * (1.0 - a * a) * (1.0 + a * r) * r
            - (1.0 + a * r) * (1.0 - r)
        )
    if theorem is Theorem.T32:
        return (
            alpha * (a + r) * (1.0 - r)
            + beta * (1.0 - a * a) * r * (1.0 + a * r)
            - (1.0 + a * r) * (1.0 - r)
        )
    if theorem in (Theorem.T33, Theorem.T34):
        return (
            alpha * (a + r) * (1.0 + a * r) * (1.0 - 2.0 * r)
            + beta * (1.0 - a * a) * (1.0 - r) * r
            - (1.0 + a * r) ** 2 * (1.0 - 2.0 * r)
        )
    t = (1.0 - r * r) ** 2
    value = (
        alpha * a * t
        + alpha * r * (1.0 - a * a) * (1.0 + r) * (1.0 - r * r)
        + beta * r * r * (1.0 - a * a) ** 2
        - t
    )
    if theorem is Theorem.T36:
        value = value + (1.0 - alpha) * a * t
    return value


def b1_factor(a, r, w: WeightPair):
    """The increasing factor g with gap(t31, a) == (1 - a) * g(a).

    g(1) = (1 + 2*beta - 2*alpha)*r^2 + (2*alpha + 2*beta)*r - 1 is the
    defining quadratic of the t31 radius.
    """
    alpha, beta = w.alpha, w.beta
    return (alpha * r + alpha * r * a - 1.0 - a * r) * (1.0 - r) + beta * (
        1.0 + a
    ) * r * (1.0 + a * r)


def sharpness_fn(a, r, w: WeightPair):
    """Exact t31 left-hand side of the extremal family member at z = -r.

    H(a, r) = [alpha*(a+r)*(1-ar) + (1-alpha)*a*(1+ar)*(1-ar)
               + beta*(1-a^2)*(1+ar)*r] / (1 - a^2 r^2).
    """
    w.require(Theorem.T31)
    a_arr, r_arr = np.asarray(a, dtype=float), np.asarray(r, dtype=float)
    if np.any(a_arr < 0.0) or np.any(a_arr >= 1.0):
        raise DomainError("a must lie in [0, 1)")
    if np.any(r_arr < 0.0) or np.any(r_arr >= 1.0):
        raise DomainError("r must lie in [0, 1)")
    alpha, beta = w.alpha, w.beta
    num = (
        alpha * (a + r) * (1.0 - a * r)
        + (1.0 - alpha) * a * (1.0 + a * r) * (1.0 - a * r)
        + beta * (1.0 - a * a) * (1.0 + a * r) * r
    )
    return num / (1.0 - a * a * r * r)


def sharpness_factor(a, r, w: WeightPair):
    """The factor rho with H(a) - 1 proportional to (1 - a) * rho(a); rho(1) = g(1)."""
    alpha, beta = w.alpha, w.beta
    return (
        (1.0 - alpha + beta) * r * r * a * a
        + (alpha * r + beta * r - alpha * r * r + beta * r * r) * a
        + (alpha * r + beta * r - 1.0)
    )


# -- envelope maximisation ----------------------------------------------------------

@dataclass(frozen=True)
class EnvelopeSup:
    sup: float
    argmax_a: float


def _golden_max(fn, lo: float, hi: float, tol: float = 1e-12) -> tuple[float, float]:
    """Deterministic golden-section maximiser on [lo, hi]."""
    h = hi - lo
    if h <= tol:
        mid = 0.5 * (lo + hi)
        return mid, fn(mid)
    steps = int(math.ceil(math.log(tol / h) / math.log(_INV_PHI)))
    c = lo + _INV_PHI2 * h
    d = lo + _INV_PHI * h
    yc, yd = fn(c), fn(d)
    for _ in range(steps - 1):
        if yc > yd:
            hi, d, yd = d, c, yc
            h = _INV_PHI * h
            c = lo + _INV_PHI2 * h
            yc = fn(c)
        else:
            lo, c, yc = c, d, yd
            h = _INV_PHI * h
            d = lo + _INV_PHI * h
            yd = fn(d)
    return (c, yc) if yc > yd else (d, yd)


def envelope_sup(theorem: Theorem, r: float, w: WeightPair) -> EnvelopeSup:
    """max over a in [0, 1 - 1e-9] of the majorant: 512-point grid scan, then
    golden-section refinement on the best cell.  Deterministic."""
    grid = np.linspace(0.0, A_CAP, ENVELOPE_GRID)
    values = majorant(theorem, grid, r, w)
    best = int(np.argmax(values))
    best_a, best_v = float(grid[best]), float(values[best])
    lo = float(grid[max(0, best - 1)])
    hi = float(grid[min(ENVELOPE_GRID - 1, best + 1)])
    ref_a, ref_v = _golden_max(lambda a: float(majorant(theorem, a, r, w)), lo, hi)
    if ref_v > best_v:
        return EnvelopeSup(ref_v, ref_a)
    return EnvelopeSup(best_v, best_a)
