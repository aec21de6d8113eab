"""The six two-parameter radius families, with explicit regime-branch selection.

Every root-branch value is produced by certified bisection on an analytically
justified bracket; printed closed forms are evaluated only as cross-checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .errors import DomainError, NotApplicableError
from .rootfind import (
    Bracket,
    CertifiedRoot,
    WIDTH_TOL,
    bisect_unique_root,
    polyval,
)

REGIME_BOUNDARY_TOL = 1e-14


class Theorem(Enum):
    """The six inequality families keyed by their CLI names.

    t31  value + constant + weighted Maclaurin series (sharp radius)
    t32  value + weighted Maclaurin series
    t33  value + weighted recentred-derivative series, weights beta >= alpha
    t34  value + weighted recentred-derivative series, weights beta < alpha
    t35  weighted full series + weighted area functional
    t36  t35 plus the (1 - alpha) * |a0| constant term
    """

    T31 = "t31"
    T32 = "t32"
    T33 = "t33"
    T34 = "t34"
    T35 = "t35"
    T36 = "t36"


@dataclass(frozen=True)
class WeightPair:
    """Weight parameters (alpha, beta); alpha in (0, 1], beta > 0."""

    alpha: float
    beta: float

    def __post_init__(self) -> None:
        if not (0.0 < self.alpha <= 1.0):
            raise DomainError(f"alpha must lie in (0, 1], got {self.alpha}")
        if not self.beta > 0.0:
            raise DomainError(f"beta must be positive, got {self.beta}")

    def admissible_for(self, theorem: Theorem) -> bool:
        a, b = self.alpha, self.beta
        if theorem is Theorem.T31:
            return b > 1.0 - a
        if theorem is Theorem.T33:
            return b >= a
        if theorem is Theorem.T34:
            return 0.8 <= a <= 1.0 and b < a
        return True  # t32, t35, t36 admit every valid pair

    def require(self, theorem: Theorem) -> None:
        if not self.admissible_for(theorem):
            raise DomainError(
                f"(alpha={self.alpha}, beta={self.beta}) violates the "
                f"{theorem.value} constraint: {ADMISSIBILITY_TEXT[theorem]}"
            )


ADMISSIBILITY_TEXT = {
    Theorem.T31: "beta > 1 - alpha",
    Theorem.T32: "beta > 0",
    Theorem.T33: "beta >= alpha",
    Theorem.T34: "alpha in [4/5, 1] and beta in (0, alpha)",
    Theorem.T35: "beta > 0",
    Theorem.T36: "beta > 0",
}


@dataclass(frozen=True)
class RadiusCertificate:
    """A computed radius: value, regime branch, residual, isolating bracket.

    ``bracket`` is None for closed-form branches.  ``components`` carries the
    certified sub-roots when the radius is a minimum of several roots.
    """

    theorem: Theorem
    value: float
    regime: str
    residual: float
    bracket: Optional[Bracket]
    components: tuple[CertifiedRoot, ...] = ()


# -- defining polynomials (coefficients highest degree first) ----------------

def eq21_poly(w: WeightPair) -> tuple[float, float, float]:
    """2*alpha*r^2 + (2*beta + alpha)*r - alpha, root r1* on (0, 1/2)."""
    return (2.0 * w.alpha, 2.0 * w.beta + w.alpha, -w.alpha)


def eq22_poly(w: WeightPair) -> tuple[float, float, float]:
    """2*r^2 + (beta - 2*alpha - 1)*r + alpha - beta, root r2* on (0, 1/2)."""
    return (2.0, w.beta - 2.0 * w.alpha - 1.0, w.alpha - w.beta)


def t31_quadratic(w: WeightPair) -> tuple[float, float, float]:
    """(1 + 2b - 2a)*r^2 + (2a + 2b)*r - 1; unique root in (0, 1)."""
    a, b = w.alpha, w.beta
    return (1.0 + 2.0 * b - 2.0 * a, 2.0 * a + 2.0 * b, -1.0)


def t32_quadratic(w: WeightPair) -> tuple[float, float, float]:
    """(1 - 2b)*r^2 - (a + 2b + 1)*r + a; unique root in (0, 1)."""
    a, b = w.alpha, w.beta
    return (1.0 - 2.0 * b, -(a + 2.0 * b + 1.0), a)


def t33_cubic(w: WeightPair) -> tuple[float, float, float, float]:
    """(4 - 2a)*r^3 + (2 + 2b - 3a)*r^2 - (2b + 2)*r + a, root r3* on (0, 1/2)."""
    a, b = w.alpha, w.beta
    return (4.0 - 2.0 * a, 2.0 + 2.0 * b - 3.0 * a, -(2.0 * b + 2.0), a)


def area_cubic(w: WeightPair) -> tuple[float, float, float, float]:
    """a*r^3 + a*r^2 + (4b - a)*r - a, shared by the t35 and t36 cubic branches."""
    a, b = w.alpha, w.beta
    return (a, a, 4.0 * b - a, -a)


def t35_threshold(alpha: float) -> float:
    """beta below this keeps the t35 radius pinned at 1/3."""
    return 8.0 * alpha / 9.0


def t36_threshold(alpha: float) -> float:
    """beta below this keeps the t36 radius pinned at 1/(2*alpha + 1)."""
    return 2.0 * alpha ** 2 * (alpha + 1.0) ** 2 / (2.0 * alpha + 1.0) ** 2


# -- radius operations --------------------------------------------------------

def lemma24_roots(w: WeightPair) -> tuple[CertifiedRoot, CertifiedRoot]:
    """Certified roots (r1*, r2*) of the two ordering quadratics on (0, 1/2).

    Requires alpha in [4/5, 1] and beta in (0, alpha); on that domain
    r1* > r2* holds.
    """
    w.require(Theorem.T34)
    r1 = bisect_unique_root(eq21_poly(w), Bracket(0.0, 0.5))
    r2 = bisect_unique_root(eq22_poly(w), Bracket(0.0, 0.5))
    return r1, r2


def radius_t31(w: WeightPair) -> RadiusCertificate:
    """Sharp radius of the value + constant + series family.

    Linear regime at beta == alpha - 1/2 (then the defining quadratic
    degenerates to (4*alpha - 1)*r - 1); otherwise the unique root of the
    quadratic in (0, 1), selected by bracketing.
    """
    w.require(Theorem.T31)
    a, b = w.alpha, w.beta
    if abs(b - (a - 0.5)) <= REGIME_BOUNDARY_TOL:
        value = 1.0 / (4.0 * a - 1.0)
        residual = abs((4.0 * a - 1.0) * value - 1.0)
        return RadiusCertificate(Theorem.T31, value, "linear", residual, None)
    root = bisect_unique_root(t31_quadratic(w), Bracket(0.0, 1.0))
    return RadiusCertificate(
        Theorem.T31, root.value, "quadratic", root.residual, root.bracket, (root,)
    )


def radius_t32(w: WeightPair) -> RadiusCertificate:
    """Radius of the value + series family.

    Linear regime alpha/(alpha + 2) at beta == 1/2; otherwise the unique root
    of the defining quadratic in (0, 1).
    """
    w.require(Theorem.T32)
    a, b = w.alpha, w.beta
    if abs(b - 0.5) <= REGIME_BOUNDARY_TOL:
        value = a / (a + 2.0)
        residual = abs(-(a + 2.0) * value + a)
        return RadiusCertificate(Theorem.T32, value, "linear", residual, None)
    root = bisect_unique_root(t32_quadratic(w), Bracket(0.0, 1.0))
    return RadiusCertificate(
        Theorem.T32, root.value, "quadratic", root.residual, root.bracket, (root,)
    )


def radius_t33(w: WeightPair) -> RadiusCertificate:
    """min(r1*, r3*) for the recentred-derivative family with beta >= alpha."""
    w.require(Theorem.T33)
    r1 = bisect_unique_root(eq21_poly(w), Bracket(0.0, 0.5))
    r3 = bisect_unique_root(t33_cubic(w), Bracket(0.0, 0.5))
    if r1.value <= r3.value:
        chosen, regime = r1, "r1star"
    else:
        chosen, regime = r3, "r3star"
    return RadiusCertificate(
        Theorem.T33, chosen.value, regime, chosen.residual, chosen.bracket, (r1, r3)
    )


def radius_t34(w: WeightPair) -> RadiusCertificate:
    """r2* for the recentred-derivative family with beta < alpha."""
    _, r2 = lemma24_roots(w)
    return RadiusCertificate(
        Theorem.T34, r2.value, "closed-form", r2.residual, r2.bracket, (r2,)
    )


def _root_up_to_cap(poly: tuple[float, ...], cap: float) -> CertifiedRoot:
    """Unique root of ``poly`` on (0, cap]; tolerates roundoff collision at cap."""
    fcap = polyval(poly, cap)
    if fcap < 0.0:
        # Only reachable within float noise of the regime threshold, where the
        # root coincides with the cap.
        if abs(fcap) > 1e-12:
            raise DomainError(f"cubic branch requested but P({cap}) = {fcap} < 0")
        return CertifiedRoot(cap, abs(fcap), Bracket(cap - WIDTH_TOL, cap), 0)
    return bisect_unique_root(poly, Bracket(0.0, cap))


def radius_t35(w: WeightPair) -> RadiusCertificate:
    """Radius of the series + area family: 1/3, or the cubic root in (0, 1/3]."""
    w.require(Theorem.T35)
    if w.beta < t35_threshold(w.alpha):
        return RadiusCertificate(Theorem.T35, 1.0 / 3.0, "constant", 0.0, None)
    root = _root_up_to_cap(area_cubic(w), 1.0 / 3.0)
    return RadiusCertificate(
        Theorem.T35, root.value, "cubic", root.residual, root.bracket, (root,)
    )


def radius_t36(w: WeightPair) -> RadiusCertificate:
    """Radius of the series + constant + area family.

    1/(2*alpha + 1) below the threshold, otherwise the unique root of the same
    cubic as t35 in (0, 1/(2*alpha + 1)].
    """
    w.require(Theorem.T36)
    cap = 1.0 / (2.0 * w.alpha + 1.0)
    if w.beta < t36_threshold(w.alpha):
        return RadiusCertificate(Theorem.T36, cap, "constant", 0.0, None)
    root = _root_up_to_cap(area_cubic(w), cap)
    return RadiusCertificate(
        Theorem.T36, root.value, "cubic", root.residual, root.bracket, (root,)
    )


_RADIUS_OPS = {
    Theorem.T31: radius_t31,
    Theorem.T32: radius_t32,
    Theorem.T33: radius_t33,
    Theorem.T34: radius_t34,
    Theorem.T35: radius_t35,
    Theorem.T36: radius_t36,
}


def radius(theorem: Theorem, w: WeightPair) -> RadiusCertificate:
    """Dispatch to the family-specific radius operation."""
    return _RADIUS_OPS[theorem](w)


# -- closed-form cross-checks --------------------------------------------------

def _cbrt(x: float) -> float:
    return math.copysign(abs(x) ** (1.0 / 3.0), x)


@dataclass(frozen=True)
class CrosscheckReport:
    """Closed-form radical value vs certified numeric root; reporting only."""

    theorem: Theorem
    closed: float
    numeric: float
    gap: float
    note: str = ""


def closed_form_crosscheck(theorem: Theorem, w: WeightPair) -> CrosscheckReport:
    """Evaluate the printed radical expression against the certified root.

    Never raises on a mismatch: the certified bisection root is ground truth
    and the report simply records the gap.
    """
    if theorem is Theorem.T35:
        w.require(Theorem.T35)
        if w.beta < t35_threshold(w.alpha):
            raise NotApplicableError("t35 constant branch active; no cubic to check")
        numeric = radius_t35(w).value
        a, b = w.alpha, w.beta
        u = (8.0 * a + 18.0 * b) / (27.0 * a)
        # Inner denominator is 3*a**3: the Cardano discriminant of the monic
        # cubic is (q/2)^2 + (p/3)^3 = 4*b*(8a^2 - 13ab + 16b^2)/(27a^3).
        inner = b * (8.0 * a * a - 13.0 * a * b + 16.0 * b * b) / (3.0 * a ** 3)
        v = (2.0 / 3.0) * math.sqrt(inner)
        closed = -1.0 / 3.0 + _cbrt(u + v) + _cbrt(u - v)
        return CrosscheckReport(theorem, closed, numeric, abs(closed - numeric))

    if theorem is Theorem.T33:
        w.require(Theorem.T33)
        numeric = bisect_unique_root(t33_cubic(w), Bracket(0.0, 0.5)).value
        a, b = w.alpha, w.beta
        A = (
            54.0 * a ** 3 + 16.0 * b ** 3 + 216.0 * a * a * b - 144.0 * a * b * b
            - 236.0 * a * a + 192.0 * b * b - 288.0 * a * b + 336.0 * b + 304.0
        )
        B = -9.0 * a * a - 4.0 * b * b + 24.0 * a * b + 24.0 * a - 32.0 * b - 4.0
        inner = (A * A + 4.0 * B ** 3) / (4.0 * (4.0 - 2.0 * a) ** 3)
        if inner < 0.0:
            return CrosscheckReport(
                theorem, math.nan, numeric, math.inf,
                "radical inapplicable: negative discriminant argument",
            )
        s = math.sqrt(inner) / 27.0
        closed = (
            _cbrt(-0.5 * A + s) + _cbrt(-0.5 * A - s)
            - (2.0 + 2.0 * b - 3.0 * a) / (3.0 * (4.0 - 2.0 * a))
        )
        note = "" if abs(closed - numeric) <= 1e-9 else "mismatch; numeric root is ground truth"
        return CrosscheckReport(theorem, closed, numeric, abs(closed - numeric), note)

    raise NotApplicableError(f"no printed radical to cross-check for {theorem.value}")
