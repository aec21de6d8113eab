"""Bounded analytic test functions on the unit disk.

Three representations: polynomials, the one-parameter disk automorphism
f(z) = (a - z)/(1 - a z), and finite Blaschke products with a scale factor.
Taylor data for the automorphism and for Blaschke factors comes from closed
forms, so truncation never pollutes those paths; every truncated sum carries
a rigorous tail bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Union

import numpy as np

from .errors import DomainError

DEFAULT_TERMS = 64
_TAIL_TARGET = 1e-13
_MAX_TERMS = 4096
_FFT_CUSHION = 1e-12  # absolute allowance for spectral-product roundoff


@dataclass(frozen=True)
class Polynomial:
    """f(z) = sum a_k z^k; bounded use requires certification first."""

    coeffs: tuple[complex, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(complex(c) for c in self.coeffs))
        if not self.coeffs:
            raise DomainError("polynomial needs at least one coefficient")


@dataclass(frozen=True)
class Moebius:
    """f(z) = (a - z)/(1 - a z) with 0 <= a < 1; the extremal family."""

    a: float

    def __post_init__(self) -> None:
        if not (0.0 <= self.a < 1.0):
            raise DomainError(f"moebius parameter must lie in [0, 1), got {self.a}")


@dataclass(frozen=True)
class BlaschkeProduct:
    """scale * prod (z_i - z)/(1 - conj(z_i) z), zeros inside the disk."""

    zeros: tuple[complex, ...]
    scale: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "zeros", tuple(complex(z) for z in self.zeros))
        if any(abs(z) >= 1.0 for z in self.zeros):
            raise DomainError("all Blaschke zeros must satisfy |z| < 1")
        if not (0.0 < self.scale <= 1.0):
            raise DomainError(f"scale must lie in (0, 1], got {self.scale}")


AnalyticFunction = Union[Polynomial, Moebius, BlaschkeProduct]


@dataclass(frozen=True)
class TaylorSlice:
    """Coefficients c_0..c_n about ``center`` plus a truncation certificate.

    ``tail_bound`` rigorously bounds sum_{k>n} |c_k| rho**k at the stated
    ``rho`` (0.0 when the expansion is exact/finite or rho == 0).
    """

    center: complex
    coeffs: tuple[complex, ...]
    tail_bound: float
    rho: Optional[float] = None


@dataclass(frozen=True)
class Boundedness:
    certified: bool
    sup_estimate: float


def _require_in_disk(z: complex, what: str = "z") -> complex:
    z = complex(z)
    if abs(z) >= 1.0:
        raise DomainError(f"{what} must lie in the open unit disk, got |{what}|={abs(z)}")
    return z


# -- evaluation ---------------------------------------------------------------

def evaluate(f: AnalyticFunction, z: complex) -> complex:
    """Function value at a point of the open disk."""
    z = _require_in_disk(z)
    if isinstance(f, Polynomial):
        acc = 0j
        for c in reversed(f.coeffs):
            acc = acc * z + c
        return acc
    if isinstance(f, Moebius):
        return (f.a - z) / (1.0 - f.a * z)
    acc = complex(f.scale)
    for zero in f.zeros:
        acc *= (zero - z) / (1.0 - zero.conjugate() * z)
    return acc


def evaluate_grid(f: AnalyticFunction, zs: np.ndarray) -> np.ndarray:
    """Vectorised ``evaluate`` over an array of disk points."""
    zs = np.asarray(zs, dtype=complex)
    if np.any(np.abs(zs) >= 1.0):
        raise DomainError("all evaluation points must lie in the open unit disk")
    if isinstance(f, Polynomial):
        acc = np.zeros_like(zs)
        for c in reversed(f.coeffs):
            acc = acc * zs + c
        return acc
    if isinstance(f, Moebius):
        return (f.a - zs) / (1.0 - f.a * zs)
    acc = np.full_like(zs, f.scale)
    for zero in f.zeros:
        acc *= (zero - zs) / (1.0 - zero.conjugate() * zs)
    return acc


# -- Blaschke factor series ----------------------------------------------------

def _factor_coeffs(zero: complex, z0: complex, n: int) -> np.ndarray:
    """Taylor coefficients of (zero - z)/(1 - conj(zero) z) about z0, exact.

    c_0 = (zero - z0)/D and c_k = -(1 - |zero|^2) w^{k-1} / D^{k+1} for k >= 1,
    with w = conj(zero), D = 1 - w z0.
    """
    w = zero.conjugate()
    d = 1.0 - w * z0
    out = np.zeros(n + 1, dtype=complex)
    out[0] = (zero - z0) / d
    if n >= 1:
        lead = -(1.0 - abs(zero) ** 2) / (d * d)
        out[1:] = lead * (w / d) ** np.arange(n)
    return out


def _factor_abs_series_sum(zero: complex, z0: complex, rho: float) -> float:
    """sum_k |c_k| rho^k for one factor, closed form; inf when divergent."""
    w_abs = abs(zero)
    d_abs = abs(1.0 - zero.conjugate() * z0)
    head = abs(zero - z0) / d_abs
    if rho == 0.0:
        return head
    if w_abs * rho >= d_abs:
        return math.inf
    return head + (1.0 - w_abs ** 2) * rho / (d_abs * (d_abs - w_abs * rho))


def _blaschke_coeffs(f: BlaschkeProduct, z0: complex, n: int) -> np.ndarray:
    """Exact product coefficients c_0..c_n about z0 (truncation is exact:
    order-k output depends only on factor orders <= k)."""
    acc = np.array([f.scale], dtype=complex)
    for zero in f.zeros:
        acc = np.convolve(acc, _factor_coeffs(zero, z0, n))[: n + 1]
    if acc.size < n + 1:
        acc = np.pad(acc, (0, n + 1 - acc.size))
    return acc


def _factor_abs_envelope(zero: complex, z0: complex, rho: float, n: int) -> np.ndarray:
    """(|c_0|, |c_1| rho, ..., |c_n| rho^n) for one factor; nonnegative, decaying."""
    w_abs = abs(zero)
    d_abs = abs(1.0 - zero.conjugate() * z0)
    out = np.zeros(n + 1)
    out[0] = abs(zero - z0) / d_abs
    if n >= 1:
        out[1:] = ((1.0 - w_abs ** 2) * rho / d_abs ** 2) * (
            w_abs * rho / d_abs
        ) ** np.arange(n)
    return out


def _blaschke_tail(f: BlaschkeProduct, z0: complex, rho: float, n: int) -> float:
    """Rigorous bound on sum_{k>n} |c_k| rho^k.

    Coefficientwise, |c_k| is at most the convolution of the factor absolute
    coefficients, whose weighted series sums exactly to the product of the
    factor absolute sums; the tail is that product minus the envelope head.
    """
    if rho == 0.0:
        return 0.0
    total = f.scale
    for zero in f.zeros:
        total *= _factor_abs_series_sum(zero, z0, rho)
        if math.isinf(total):
            return math.inf
    env = np.array([f.scale])
    for zero in f.zeros:
        env = np.convolve(env, _factor_abs_envelope(zero, z0, rho, n))[: n + 1]
    return max(0.0, total - float(np.sum(env)))


def _adaptive_terms(q: float, prefactor: float, floor: int = 16) -> int:
    """Smallest n with prefactor * q^(n+1)/(1-q) below the tail target."""
    if q <= 0.0:
        return floor
    if q >= 1.0:
        return _MAX_TERMS
    need = math.log(_TAIL_TARGET * (1.0 - q) / max(prefactor, 1.0)) / math.log(q)
    return max(floor, min(_MAX_TERMS, int(math.ceil(need)) + 1))


# -- Taylor slices --------------------------------------------------------------

def taylor_at_zero(f: AnalyticFunction, n: int, rho: float = 0.0) -> TaylorSlice:
    """Maclaurin coefficients c_0..c_n with a tail bound at radius ``rho``."""
    return recenter(f, 0.0, n, rho)


def recenter(f: AnalyticFunction, z0: complex, n: int, rho: float = 0.0) -> TaylorSlice:
    """Taylor coefficients f^(k)(z0)/k! for k = 0..n, plus tail bound.

    Polynomial: exact binomial shift (tail 0 once n covers the degree).
    Moebius: closed form c_k = -(1-a^2) a^(k-1) (1 - a z0)^-(k+1); geometric tail.
    Blaschke: exact factor-series products; product-envelope tail.
    """
    if n < 0:
        raise ValueError("order n must be nonnegative")
    if not (0.0 <= rho < 1.0):
        raise DomainError(f"rho must lie in [0, 1), got {rho}")
    z0 = _require_in_disk(z0, "z0")

    if isinstance(f, Polynomial):
        deg = len(f.coeffs) - 1
        shifted = _shift_polynomial(f.coeffs, z0)
        head = shifted[: n + 1] + (0j,) * max(0, n - deg)
        tail = sum(abs(c) * rho ** k for k, c in enumerate(shifted) if k > n)
        return TaylorSlice(z0, tuple(head), float(tail), rho if tail else None)

    if isinstance(f, Moebius):
        a = f.a
        d = 1.0 - a * z0
        coeffs = [complex((a - z0) / d)]
        lead = -(1.0 - a * a) / (d * d)
        for k in range(1, n + 1):
            coeffs.append(lead * (a / d) ** (k - 1))
        d_abs = abs(d)
        if rho == 0.0 or (a == 0.0 and n >= 1):
            tail = 0.0
        elif a * rho >= d_abs:
            tail = math.inf
        else:
            tail = (1.0 - a * a) * a ** n * rho ** (n + 1) / (
                d_abs ** (n + 1) * (d_abs - a * rho)
            )
        return TaylorSlice(z0, tuple(coeffs), tail, rho if tail else None)

    coeffs = _blaschke_coeffs(f, z0, n)
    tail = _blaschke_tail(f, z0, rho, n)
    return TaylorSlice(z0, tuple(coeffs), tail, rho if tail else None)


def _shift_polynomial(coeffs: tuple[complex, ...], z0: complex) -> tuple[complex, ...]:
    """Exact coefficients of f(z0 + u) in powers of u."""
    deg = len(coeffs) - 1
    out = []
    for k in range(deg + 1):
        acc = 0j
        for j in range(k, deg + 1):
            acc += coeffs[j] * math.comb(j, k) * z0 ** (j - k)
        out.append(acc)
    return tuple(out)


# -- absolute coefficient sums ---------------------------------------------------

def series_abs_sum(f: AnalyticFunction, rho: float, start: int = 0) -> tuple[float, float]:
    """(sum_{k>=start} |c_k| rho^k, truncation slack) for the Maclaurin series.

    Closed form for Moebius, exact for polynomials, adaptively truncated with
    a rigorous tail for Blaschke products.  ``start`` is 0 or 1.
    """
    if start not in (0, 1):
        raise ValueError("start must be 0 or 1")
    if not (0.0 <= rho < 1.0):
        raise DomainError(f"rho must lie in [0, 1), got {rho}")

    if isinstance(f, Polynomial):
        total = sum(abs(c) * rho ** k for k, c in enumerate(f.coeffs) if k >= start)
        return float(total), 0.0

    if isinstance(f, Moebius):
        a = f.a
        series = (1.0 - a * a) * rho / (1.0 - a * rho)
        return (a + series if start == 0 else series), 0.0

    q = max((abs(z) for z in f.zeros), default=0.0) * rho
    n = _adaptive_terms(q, 2.0 ** len(f.zeros))
    coeffs = _blaschke_coeffs(f, 0.0, n)
    weights = rho ** np.arange(n + 1)
    head_all = float(np.sum(np.abs(coeffs) * weights))
    tail = _blaschke_tail(f, 0.0, rho, n)
    value = head_all - (abs(coeffs[0]) if start == 1 else 0.0)
    return value, tail


def recentered_abs_sum(f: AnalyticFunction, z0: complex, rho: float) -> tuple[float, float]:
    """(sum_{k>=1} |f^(k)(z0)/k!| rho^k, truncation slack)."""
    values, slacks = recentered_abs_sums_grid(f, np.array([z0], dtype=complex), rho)
    return float(values[0]), float(slacks[0])


def recentered_abs_sums_grid(
    f: AnalyticFunction, centers: np.ndarray, rho: float
) -> tuple[np.ndarray, np.ndarray]:
    """Batched sum_{k>=1} |c_k(z0)| rho^k over many centers.

    Blaschke products use one spectral polynomial product per batch; the
    associated roundoff is covered by a flat cushion folded into the slack.
    """
    centers = np.asarray(centers, dtype=complex)
    if np.any(np.abs(centers) >= 1.0):
        raise DomainError("all centers must lie in the open unit disk")
    if not (0.0 <= rho < 1.0):
        raise DomainError(f"rho must lie in [0, 1), got {rho}")

    if isinstance(f, Polynomial):
        values = np.empty(centers.shape, dtype=float)
        for i, z0 in np.ndenumerate(centers):
            shifted = _shift_polynomial(f.coeffs, z0)
            values[i] = sum(abs(c) * rho ** k for k, c in enumerate(shifted) if k >= 1)
        return values, np.zeros_like(values)

    if isinstance(f, Moebius):
        a = f.a
        d_abs = np.abs(1.0 - a * centers)
        if np.any(a * rho >= d_abs):
            raise DomainError("recentred series divergent at this radius")
        values = (1.0 - a * a) * rho / (d_abs * (d_abs - a * rho))
        return values, np.zeros_like(values)

    return _blaschke_abs_sums_grid(f, centers, rho)


def _blaschke_abs_sums_grid(
    f: BlaschkeProduct, centers: np.ndarray, rho: float
) -> tuple[np.ndarray, np.ndarray]:
    flat = centers.ravel()
    m = flat.size
    ws = np.array([z.conjugate() for z in f.zeros], dtype=complex)
    mods = np.array([abs(z) for z in f.zeros], dtype=float)
    d = 1.0 - ws[:, None] * flat[None, :]              # (factors, m)
    d_abs = np.abs(d)
    if rho > 0.0 and np.any(mods[:, None] * rho >= d_abs):
        raise DomainError("recentred series divergent at this radius")

    factor_sums = np.abs(np.array(f.zeros)[:, None] - flat[None, :]) / d_abs
    if rho > 0.0:
        factor_sums = factor_sums + (1.0 - mods[:, None] ** 2) * rho / (
            d_abs * (d_abs - mods[:, None] * rho)
        )
    total_bound = f.scale * np.prod(factor_sums, axis=0)

    q_hat = float(np.max(mods[:, None] * rho / d_abs)) if f.zeros else 0.0
    n = _adaptive_terms(q_hat, float(np.max(total_bound, initial=1.0)))

    # Work with the rescaled series c_k * rho^k: its entries decay, so the
    # spectral product stays well conditioned even when the raw Taylor
    # coefficients grow geometrically.
    scaled = np.abs(_scaled_coeff_product_grid(f, flat, d, n, rho))
    head_all = np.sum(scaled, axis=1)
    values = head_all - scaled[:, 0]
    env_heads = _envelope_heads_grid(f, flat, rho, n)
    slacks = np.maximum(0.0, total_bound - env_heads) + _FFT_CUSHION
    return values.reshape(centers.shape), slacks.reshape(centers.shape)


def _envelope_heads_grid(
    f: BlaschkeProduct, centers: np.ndarray, rho: float, n: int
) -> np.ndarray:
    """sum_{k<=n} env_k rho^k per center, env = convolution of factor
    absolute coefficients; the series total is the product envelope bound."""
    m = centers.size
    if not f.zeros:
        return np.full(m, f.scale)
    length = len(f.zeros) * n + 1
    size = 1 << (length - 1).bit_length()
    idx = np.arange(n)
    spec = None
    for zero in f.zeros:
        w_abs = abs(zero)
        d = 1.0 - zero.conjugate() * centers
        d_abs = np.abs(d)
        fac = np.zeros((m, size))
        fac[:, 0] = np.abs(zero - centers) / d_abs
        lead = (1.0 - w_abs ** 2) * rho / d_abs ** 2
        fac[:, 1 : n + 1] = lead[:, None] * (w_abs * rho / d_abs)[:, None] ** idx
        fspec = np.fft.rfft(fac, axis=1)
        spec = fspec if spec is None else spec * fspec
    env = np.fft.irfft(spec, size, axis=1)[:, : n + 1]
    return f.scale * np.sum(env, axis=1)


def _scaled_coeff_product_grid(
    f: BlaschkeProduct, centers: np.ndarray, d: np.ndarray, n: int, rho: float
) -> np.ndarray:
    """Coefficients c_k * rho^k of the product about each center, shape (m, n+1),
    via one FFT polynomial product per factor."""
    m = centers.size
    k = len(f.zeros)
    if k == 0:
        out = np.zeros((m, n + 1), dtype=complex)
        out[:, 0] = f.scale
        return out
    length = k * n + 1
    size = 1 << (length - 1).bit_length()
    idx = np.arange(n)
    spec = None
    for i, zero in enumerate(f.zeros):
        fac = np.zeros((m, size), dtype=complex)
        fac[:, 0] = (zero - centers) / d[i]
        lead = -(1.0 - abs(zero) ** 2) * rho / (d[i] * d[i])
        fac[:, 1 : n + 1] = lead[:, None] * (zero.conjugate() * rho / d[i])[:, None] ** idx
        fspec = np.fft.fft(fac, axis=1)
        spec = fspec if spec is None else spec * fspec
    coeffs = np.fft.ifft(spec, axis=1)[:, : n + 1]
    return f.scale * coeffs


# -- area functional -------------------------------------------------------------

def area_sum(f: AnalyticFunction, r: float, n: int = DEFAULT_TERMS) -> float:
    """Normalised image-area sum S_r/pi = sum_k k |c_k|^2 r^(2k)."""
    return area_sum_and_tail(f, r, n)[0]


def area_sum_and_tail(
    f: AnalyticFunction, r: float, n: int = DEFAULT_TERMS
) -> tuple[float, float]:
    """(area sum, rigorous truncation bound)."""
    if not (0.0 < r < 1.0):
        raise DomainError(f"r must lie in (0, 1), got {r}")
    if isinstance(f, Polynomial):
        total = sum(
            k * abs(c) ** 2 * r ** (2 * k) for k, c in enumerate(f.coeffs) if k >= 1
        )
        return float(total), 0.0
    if isinstance(f, Moebius):
        a = f.a
        return (1.0 - a * a) ** 2 * r * r / (1.0 - a * a * r * r) ** 2, 0.0
    x = r * r
    m = max(n, _adaptive_terms(x, 1.0))
    coeffs = _blaschke_coeffs(f, 0.0, m)
    ks = np.arange(m + 1)
    head = float(np.sum(ks * np.abs(coeffs) ** 2 * x ** ks))
    # |c_k| <= 1 for any self-map of the disk, so the tail is under sum k x^k.
    tail = x ** (m + 1) * ((m + 1) - m * x) / (1.0 - x) ** 2
    return head, tail


# -- boundedness certification -----------------------------------------------------

@lru_cache(maxsize=4096)
def certify_bounded(f: AnalyticFunction, samples: int = 1024) -> Boundedness:
    """Certify sup |f| <= 1 on the disk.

    Moebius and scaled Blaschke products are certified analytically.  A
    polynomial is sampled on the boundary circle and padded with the rigorous
    Lipschitz margin pi * (sum_k k |a_k|) / samples; conservative rejections
    are intended (soundness over completeness).
    """
    if samples < 256:
        raise ValueError(f"need at least 256 boundary samples, got {samples}")
    if isinstance(f, Moebius):
        return Boundedness(True, 1.0)
    if isinstance(f, BlaschkeProduct):
        return Boundedness(True, f.scale)
    thetas = 2.0 * math.pi * np.arange(samples) / samples
    ring = np.exp(1j * thetas)
    acc = np.zeros_like(ring)
    for c in reversed(f.coeffs):
        acc = acc * ring + c
    margin = math.pi * sum(k * abs(c) for k, c in enumerate(f.coeffs)) / samples
    sup_estimate = float(np.max(np.abs(acc))) + margin
    return Boundedness(sup_estimate <= 1.0, sup_estimate)


# -- seeded generation ---------------------------------------------------------------

def random_test_function(seed: int, degree: int) -> BlaschkeProduct:
    """Deterministic-by-seed Blaschke product with ``degree`` zeros.

    Zeros are area-uniform in the disk of radius 0.95, the scale is uniform in
    [0.5, 0.999]; every output is analytically certified bounded.
    """
    if degree < 1:
        raise ValueError(f"degree must be at least 1, got {degree}")
    rng = np.random.default_rng(seed)
    radii = 0.95 * np.sqrt(rng.uniform(0.0, 1.0, degree))
    angles = rng.uniform(0.0, 2.0 * math.pi, degree)
    zeros = tuple(r * complex(math.cos(t), math.sin(t)) for r, t in zip(radii, angles))
    scale = float(rng.uniform(0.5, 0.999))
    return BlaschkeProduct(zeros, scale)


# -- record format (shared with the CLI) ------------------------------------------------

def function_to_record(f: AnalyticFunction) -> dict:
    """Serialisable record with fields kind/coeffs/a/zeros/scale."""
    if isinstance(f, Polynomial):
        return {"kind": "polynomial", "coeffs": [[c.real, c.imag] for c in f.coeffs]}
    if isinstance(f, Moebius):
        return {"kind": "moebius", "a": f.a}
    return {
        "kind": "blaschke",
        "zeros": [[z.real, z.imag] for z in f.zeros],
        "scale": f.scale,
    }


def record_to_function(record: dict) -> AnalyticFunction:
    """Inverse of ``function_to_record``; raises ValueError on malformed records."""
    if not isinstance(record, dict) or "kind" not in record:
        raise ValueError("function record must be an object with a 'kind' field")
    kind = record["kind"]
    try:
        if kind == "polynomial":
            return Polynomial(tuple(complex(re, im) for re, im in record["coeffs"]))
        if kind == "moebius":
            return Moebius(float(record["a"]))
        if kind == "blaschke":
            return BlaschkeProduct(
                tuple(complex(re, im) for re, im in record["zeros"]),
                float(record["scale"]),
            )
    except DomainError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed {kind!r} function record: {exc}") from exc
    raise ValueError(f"unknown function kind {kind!r}")
