"""Exact truncated Maclaurin series with Gaussian-rational coefficients.

Two independent routes to the low-order coefficients of sin(x)^n:

* multiply the sine series by itself n times (:func:`sin_pow_series`);
* expand sin(x)^n into exponentials e^{i(n-2k)x} and replace each exponential
  by its truncated Maclaurin polynomial (:func:`exponential_series`).

Both must agree, and both must vanish below order n.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from sincpow.exact_core import I, GaussianRational, alternating_sum

Z = GaussianRational(0)


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients of x^0 .. x^order; the order is explicit, trailing zeros kept."""

    order: int
    coeffs: tuple[GaussianRational, ...]

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be nonnegative")
        coeffs = tuple(GaussianRational.coerce(c) for c in self.coeffs)
        if len(coeffs) != self.order + 1:
            raise ValueError(f"expected {self.order + 1} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls(order, (Z,) * (order + 1))

    @classmethod
    def of(cls, coeffs: Sequence) -> "TruncatedSeries":
        return cls(len(coeffs) - 1, tuple(coeffs))

    def __getitem__(self, j: int) -> GaussianRational:
        return self.coeffs[j]

    def __len__(self):
        return len(self.coeffs)

    def _check(self, other: "TruncatedSeries"):
        if self.order != other.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries(self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, factor) -> "TruncatedSeries":
        factor = GaussianRational.coerce(factor)
        return TruncatedSeries(self.order, tuple(factor * c for c in self.coeffs))

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        out = [Z] * (self.order + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(self.order + 1 - i):
                if other.coeffs[j]:
                    out[i + j] = out[i + j] + a * other.coeffs[j]
        return TruncatedSeries(self.order, tuple(out))

    def is_zero(self) -> bool:
        return not any(self.coeffs)


def maclaurin_exp(m: int, scale=1) -> TruncatedSeries:
    """P_m(scale * x) where P_m is the order-m Taylor polynomial of exp; P_{-1} = 0."""
    if m < -1:
        raise ValueError(f"order must be >= -1, got {m}")
    if m == -1:
        return TruncatedSeries.zero(0)
    scale = GaussianRational.coerce(scale)
    coeffs = []
    power = GaussianRational(1)
    for j in range(m + 1):
        coeffs.append(power / math.factorial(j))
        power = power * scale
    return TruncatedSeries(m, tuple(coeffs))


def _pad(series: TruncatedSeries, order: int) -> TruncatedSeries:
    # P_{-1} is stored with order 0; widen zero-padded to a common order
    if series.order >= order:
        return TruncatedSeries(order, series.coeffs[: order + 1])
    return TruncatedSeries(order, series.coeffs + (Z,) * (order - series.order))


def sine_series(order: int) -> TruncatedSeries:
    coeffs = []
    for j in range(order + 1):
        if j % 2:
            sign = -1 if (j // 2) % 2 else 1
            coeffs.append(GaussianRational(Fraction(sign, math.factorial(j))))
        else:
            coeffs.append(Z)
    return TruncatedSeries(order, tuple(coeffs))


def sin_pow_series(n: int, order: int) -> TruncatedSeries:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    base = sine_series(order)
    result = base
    for _ in range(n - 1):
        result = result * base
    return result


def sin_pow_exponential_coeffs(n: int) -> list[tuple[GaussianRational, int]]:
    """Pairs (coefficient, frequency) with sin(x)^n = sum coeff * exp(i * freq * x)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    lead = (2 * I) ** (-n)
    return [(lead * ((-1) ** k * math.comb(n, k)), n - 2 * k) for k in range(n + 1)]


def exponential_series(n: int, order: int, *, half_range: bool = False) -> TruncatedSeries:
    """sum_k coeff_k * P_order(i * freq_k * x) over the exponential expansion of sin^n.

    With ``half_range`` the sum runs over k <= floor((n-1)/2) only and each
    term is paired with its mirror k -> n - k (frequency negated, weight
    multiplied by (-1)^n); the zero-frequency middle term for even n is
    added separately.
    """
    pairs = sin_pow_exponential_coeffs(n)
    total = TruncatedSeries.zero(order)
    if not half_range:
        for coeff, freq in pairs:
            total = total + maclaurin_exp(order, I * freq).scale(coeff)
        return total
    mirror_sign = -1 if n % 2 else 1
    for k in range((n - 1) // 2 + 1):
        coeff, freq = pairs[k]
        term = maclaurin_exp(order, I * freq) + maclaurin_exp(order, I * (-freq)).scale(mirror_sign)
        total = total + term.scale(coeff)
    if n % 2 == 0:
        coeff, freq = pairs[n // 2]
        total = total + maclaurin_exp(order, I * freq).scale(coeff)
    return total


def maclaurin_combination(n: int, q: int) -> TruncatedSeries:
    """Order q-2 Maclaurin polynomial of sin^n assembled from P_{q-2}(i(n-2k)x).

    For q = 1 every P_{-1} vanishes and the result is the zero series of order 0.
    """
    if not 1 <= q <= n:
        raise ValueError(f"requires n >= q >= 1, got n={n}, q={q}")
    order = max(q - 2, 0)
    total = TruncatedSeries.zero(order)
    for coeff, freq in sin_pow_exponential_coeffs(n):
        total = total + _pad(maclaurin_exp(q - 2, I * freq), order).scale(coeff)
    return total


def maclaurin_combination_is_zero(n: int, q: int) -> bool:
    return maclaurin_combination(n, q).is_zero()


def alternating_sum_prefactor(n: int, q: int) -> GaussianRational:
    """Factor linking the x^(q-1) coefficient of the exponential series to the alternating sum.

    Valid when n + q is odd and q >= 2: the mirrored halves then add up instead
    of cancelling, giving 2 i^(q-1) / ((2i)^n (q-1)!).
    """
    return GaussianRational.i_power(q - 1) * (2 * I) ** (-n) * Fraction(2, math.factorial(q - 1))


def alternating_sum_via_series(n: int, q: int) -> Fraction:
    """Recover the alternating sum from the x^(q-1) coefficient of the exponential series."""
    if (n + q) % 2 == 0 or q < 2:
        raise ValueError("defined for n + q odd and q >= 2")
    coeff = exponential_series(n, q - 1)[q - 1]
    ratio = coeff / alternating_sum_prefactor(n, q)
    if ratio.im != 0:
        raise ArithmeticError("non-real ratio; pairing identity violated")
    return ratio.re


__all__ = [
    "TruncatedSeries",
    "alternating_sum",
    "alternating_sum_via_series",
    "exponential_series",
    "maclaurin_combination",
    "maclaurin_combination_is_zero",
    "maclaurin_exp",
    "sin_pow_exponential_coeffs",
    "sin_pow_series",
    "sine_series",
]
