"""Numerical cross-checks that do not go through the closed forms.

:func:`integrate` evaluates the defining integral by Gauss-Legendre panels
aligned to multiples of pi. For q >= 2 the far tail is handled analytically:
sin^n splits into its mean a0 (nonzero only for even n) plus a part whose
running integral is bounded by pi, so

    int_T^inf sin^n x / x^q dx = a0 T^(1-q)/(q-1) + R,   |R| <= pi / T^q.

For q = 1 (odd n) the per-period contributions alternate in sign and are
summed with repeated averaging (Euler's transform).

:func:`lemma1_residual` and :func:`finite_eps_reconstruction` rebuild the
finite-eps stages of the closed-form derivation so their eps -> 0 behaviour
can be watched directly.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable

import numpy as np

from sincpow.exact_core import (
    IntegralSpec,
    SincPowError,
    c_constant,
)
from sincpow.special_functions import ci_upper, e_eps, si_upper

GAUSS_ORDER = 15
MIN_TOL = 1e-10
MAX_PANELS = 400_000

# |omega(1e-3)| ceiling for q in 2..6, alpha in 1..3; frozen from
# scripts/calibrate_lemma1.py (observed max 1.0125e-2 at q=4, alpha=3)
LEMMA1_THRESHOLD = 2e-2

# running integral of sin^n minus its mean never exceeds this in magnitude
_TAIL_CONSTANT = math.pi
_ROUNDOFF = 4 * np.finfo(float).eps


class ToleranceUnreachable(RuntimeError):
    pass


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error_bound: float
    panels_used: int
    tail_cut: float

    def __post_init__(self):
        if not math.isfinite(self.value) or not self.error_bound >= 0:
            raise ValueError(f"bad quadrature result {self.value} +/- {self.error_bound}")


@lru_cache(maxsize=None)
def _rule(order: int) -> tuple[np.ndarray, np.ndarray]:
    return np.polynomial.legendre.leggauss(order)


def _gauss(f: Callable, a: np.ndarray, b: np.ndarray, order: int) -> tuple[np.ndarray, np.ndarray]:
    """Rule value and integral of |f| per panel."""
    x, w = _rule(order)
    mid = 0.5 * (a + b)
    half = 0.5 * (b - a)
    nodes = mid[:, None] + half[:, None] * x[None, :]
    values = f(nodes)
    return half * (values @ w), half * (np.abs(values) @ w)


def gauss_panels(
    f: Callable,
    edges,
    tol: float,
    max_panels: int = MAX_PANELS,
) -> tuple[complex | float, float, int]:
    """Integrate ``f`` over consecutive panels given by ``edges``.

    Each panel gets an order-15 and an order-30 Gauss rule; their difference
    is the panel's error estimate and the order-30 value is kept. Panels whose
    estimate exceeds both their length-proportional share of ``tol`` and the
    roundoff floor of the panel are bisected.
    ``f`` must accept a 2-d array of nodes.

    Returns (value, error estimate, panels used).
    """
    edges = np.asarray(edges, dtype=float)
    a, b = edges[:-1], edges[1:]
    span = float(edges[-1] - edges[0])
    if span <= 0:
        return 0.0, 0.0, 0
    total = 0.0
    err = 0.0
    mag = 0.0
    used = 0
    while a.size:
        used += a.size
        if used > max_panels:
            raise ToleranceUnreachable(f"panel budget of {max_panels} exhausted")
        lo, _ = _gauss(f, a, b, GAUSS_ORDER)
        hi, absval = _gauss(f, a, b, 2 * GAUSS_ORDER)
        est = np.abs(hi - lo)
        ok = (est <= tol * (b - a) / span) | (est <= 64 * _ROUNDOFF * absval)
        total = total + hi[ok].sum()
        err += float(est[ok].sum())
        mag += float(absval[ok].sum())
        bad = ~ok
        if not bad.any():
            break
        a, b = a[bad], b[bad]
        mid = 0.5 * (a + b)
        a, b = np.concatenate([a, mid]), np.concatenate([mid, b])
    return total, err + _ROUNDOFF * mag, used


def _sin_pow_integrand(n: int, q: int) -> Callable:
    def f(x):
        # (sin x / x)^q sin^(n-q) x, continuous at 0
        s = np.sinc(x / np.pi)
        return s**q * np.sin(x) ** (n - q)

    return f


def _mean_of_sin_pow(n: int) -> float:
    return math.comb(n, n // 2) / 2**n if n % 2 == 0 else 0.0


def _pi_edges(lower: float, upper: float) -> np.ndarray:
    first = math.ceil(lower / math.pi)
    last = math.floor(upper / math.pi)
    inner = math.pi * np.arange(first, last + 1, dtype=float)
    edges = np.concatenate([[lower], inner[inner > lower], [upper]])
    return np.unique(edges)


def _validate(n: int, q: int, tol: float, lower: float) -> None:
    IntegralSpec(n, q).require_convergent()
    if not tol >= MIN_TOL:
        raise ValueError(f"tol must be >= {MIN_TOL}, got {tol}")
    if not lower >= 0 or not math.isfinite(lower):
        raise ValueError(f"lower must be finite and >= 0, got {lower}")


def integrate(n: int, q: int, tol: float = 1e-8, lower: float = 0.0) -> QuadratureResult:
    """int_lower^inf sin(x)^n / x^q dx with a reported error bound <= tol."""
    _validate(n, q, tol, lower)
    f = _sin_pow_integrand(n, q)
    if q == 1:
        return _integrate_alternating(f, tol, lower)

    tail_needed = (2 * _TAIL_CONSTANT / tol) ** (1.0 / q)
    tail_cut = math.pi * math.ceil(max(lower, tail_needed) / math.pi)
    value, err, used = gauss_panels(f, _pi_edges(lower, tail_cut), tol / 2)
    a0 = _mean_of_sin_pow(n)
    tail = a0 * tail_cut ** (1 - q) / (q - 1)
    tail_err = _TAIL_CONSTANT * tail_cut ** (-q)
    bound = err + tail_err
    if bound > tol:
        raise ToleranceUnreachable(f"error bound {bound:.3g} exceeds tol {tol:.3g}")
    return QuadratureResult(float(value + tail), float(bound), used, tail_cut)


def euler_average(partial_sums) -> np.ndarray:
    """Last entry of each level of repeated pairwise averaging of the partial sums."""
    row = np.asarray(partial_sums, dtype=float)
    diag = [row[-1]]
    while row.size > 1:
        row = 0.5 * (row[:-1] + row[1:])
        diag.append(row[-1])
    return np.array(diag)


def _integrate_alternating(f: Callable, tol: float, lower: float) -> QuadratureResult:
    start = math.pi * math.ceil(lower / math.pi)
    head, head_err, used = gauss_panels(f, [lower, start], tol / 8) if start > lower else (0.0, 0.0, 0)

    period_tol = tol / 4
    # the first few periods are summed directly, the rest accelerated
    direct = 4
    terms: list[float] = []
    panel_err = 0.0
    count = 32
    previous = None
    while True:
        j0 = len(terms)
        edges = start + math.pi * np.arange(j0, count + 1, dtype=float)
        for lo, hi in zip(edges[:-1], edges[1:]):
            v, e, u = gauss_panels(f, [lo, hi], period_tol / count)
            terms.append(float(v))
            panel_err += e
            used += u
        partial = np.cumsum(terms[direct:])
        estimate = euler_average(partial)[-1]
        if previous is not None and abs(estimate - previous) < tol / 4:
            break
        previous = estimate
        count *= 2
        if count > 4096:
            raise ToleranceUnreachable("alternating tail did not settle")
    accel_err = abs(estimate - previous)
    value = head + math.fsum(terms[:direct]) + estimate
    bound = head_err + panel_err + accel_err + _ROUNDOFF * math.fsum(abs(t) for t in terms)
    if bound > tol:
        raise ToleranceUnreachable(f"error bound {bound:.3g} exceeds tol {tol:.3g}")
    return QuadratureResult(float(value), float(bound), used, math.inf)


def _exp_remainder(q: int, alpha: float) -> Callable:
    """x -> (e^{i alpha x} - P_{q-2}(i alpha x)) / x^q by its power series; needs |alpha x| <= 1."""

    def f(x):
        z = 1j * alpha * x
        term = z ** (q - 1) / math.factorial(q - 1)
        acc = term.copy()
        for m in range(40):
            term = term * z / (q + m)
            acc = acc + term
        return acc / x**q

    return f


def _oscillatory_tail(q: int, alpha: float, start: float, tol: float) -> tuple[complex, float, int]:
    """int_start^inf e^{i alpha x} / x^q dx: panels up to T, then an asymptotic expansion at T."""
    half_period = math.pi / abs(alpha)
    terms = 12
    cut = max(start, (4 * (q + terms)) / abs(alpha))
    cut = start + half_period * math.ceil((cut - start) / half_period)
    edges = start + half_period * np.arange(round((cut - start) / half_period) + 1)
    body, err, used = gauss_panels(lambda x: np.exp(1j * alpha * x) / x**q, edges, tol / 2)

    ia = 1j * alpha
    tail = 0j
    rising = 1.0
    for k in range(terms):
        tail -= rising / (ia ** (k + 1) * cut ** (q + k))
        rising *= q + k
    tail *= np.exp(1j * alpha * cut)
    tail_err = rising / abs(alpha) ** terms * 2 / (abs(alpha) * cut ** (q + terms))
    return body + tail, err + tail_err, used


def lemma1_integral(q: int, alpha: float, eps: float, tol: float = 1e-12) -> complex:
    """int_eps^inf (e^{i alpha x} - P_{q-2}(i alpha x)) / x^q dx, computed numerically."""
    if q < 1:
        raise ValueError(f"q must be >= 1, got {q}")
    alpha, eps = float(alpha), float(eps)
    if alpha == 0 or not eps > 0:
        raise ValueError("requires alpha != 0 and eps > 0")
    split = max(eps, 1.0 / abs(alpha))

    near = 0j
    if eps < split:
        # geometric panels absorb the 1/x behaviour near eps
        count = max(1, math.ceil(math.log2(split / eps)))
        edges = np.geomspace(eps, split, count + 1)
        near, _, _ = gauss_panels(_exp_remainder(q, alpha), edges, tol / 2)

    far, _, _ = _oscillatory_tail(q, alpha, split, tol / 2)
    ia = 1j * alpha
    poly = sum(ia**j / math.factorial(j) * split ** (j + 1 - q) / (q - 1 - j) for j in range(q - 1))
    return complex(near + far - poly)


def lemma1_rhs(q: int, alpha: float, eps: float) -> complex:
    """c_q alpha^(q-1) + (i alpha)^(q-1)/(q-1)! E_eps(alpha)."""
    c = complex(c_constant(q))
    return c * alpha ** (q - 1) + (1j * alpha) ** (q - 1) / math.factorial(q - 1) * e_eps(alpha, eps)


def lemma1_residual(q: int, alpha: float, eps: float) -> complex:
    """Numerical left side minus closed right side; the vanishing term omega(eps)."""
    return lemma1_integral(q, alpha, eps) - lemma1_rhs(q, alpha, eps)


def reconstruction_weights(n: int, q: int) -> list[tuple[int, Fraction]]:
    """Exact weights w_k on the frequencies n - 2k of the pre-limit expression."""
    spec = IntegralSpec(n, q).require_convergent()
    if spec.even_case:
        sign = -1 if ((q - n) // 2) % 2 else 1
    else:
        sign = -1 if ((q - n - 1) // 2) % 2 else 1
    scale = Fraction(sign, 2 ** (n - 1) * math.factorial(q - 1))
    return [
        (n - 2 * k, scale * ((-1) ** k * math.comb(n, k) * (n - 2 * k) ** (q - 1)))
        for k in range((n - 1) // 2 + 1)
    ]


def finite_eps_reconstruction(n: int, q: int, eps: float) -> float:
    """Pre-limit value: sum of w_k si_upper((n-2k) eps), or w_k (ci_upper((n-2k) eps) - ci_upper(eps))."""
    if not eps > 0:
        raise ValueError(f"eps must be > 0, got {eps}")
    weights = reconstruction_weights(n, q)
    if (n + q) % 2 == 0:
        return math.fsum(float(w) * si_upper(m * eps) for m, w in weights)
    base = ci_upper(eps)
    return math.fsum(float(w) * (ci_upper(m * eps) - base) for m, w in weights)


__all__ = [
    "LEMMA1_THRESHOLD",
    "QuadratureResult",
    "SincPowError",
    "ToleranceUnreachable",
    "euler_average",
    "finite_eps_reconstruction",
    "gauss_panels",
    "integrate",
    "lemma1_integral",
    "lemma1_residual",
    "lemma1_rhs",
    "reconstruction_weights",
]
