"""Exact evaluation of I(n, q) = int_0^inf sin(x)^n / x^q dx.

Every coefficient is a :class:`fractions.Fraction`; Python integers carry the
arbitrary precision that ``C(n, k)`` and ``(n - 2k)^(q - 1)`` need once n and q
grow past a couple of dozen.

The value is either a rational multiple of pi (n + q even) or a rational
combination of logarithms of integers (n + q odd).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

Rational = Fraction

PI = "pi"
LOG = "log"


class SincPowError(ValueError):
    """Base class for domain errors raised by this package."""


class InvalidDomain(SincPowError):
    def __init__(self, message: str = "requires n >= q >= 1"):
        super().__init__(message)


class DivergentIntegral(SincPowError):
    def __init__(self, message: str = "divergent: q=1 requires odd n"):
        super().__init__(message)


@dataclass(frozen=True)
class IntegralSpec:
    n: int
    q: int

    def __post_init__(self):
        if not (isinstance(self.n, int) and isinstance(self.q, int)):
            raise InvalidDomain()
        if self.q < 1 or self.n < self.q:
            raise InvalidDomain()

    @property
    def convergent(self) -> bool:
        return self.q >= 2 or self.n % 2 == 1

    @property
    def even_case(self) -> bool:
        return (self.n + self.q) % 2 == 0

    def require_convergent(self) -> "IntegralSpec":
        if not self.convergent:
            raise DivergentIntegral()
        return self


def _perfect_power_root(m: int) -> tuple[int, int]:
    """Return (r, e) with r**e == m and e maximal."""
    if m < 2:
        return m, 1
    for e in range(m.bit_length(), 1, -1):
        r = round(m ** (1.0 / e))
        for cand in (r - 1, r, r + 1):
            if cand >= 2 and cand**e == m:
                return cand, e
    return m, 1


@dataclass(frozen=True)
class ExactValue:
    """Either ``pi_coefficient * pi`` or ``sum(c * log(m) for m, c in log_terms)``.

    ``log_terms`` is stored as a tuple of ``(base, coefficient)`` pairs with
    strictly increasing bases, no base 1 and no zero coefficient. Bases that
    are perfect powers are folded into their root (``log 4 -> 2 log 2``), which
    keeps every base the same parity as the original one.
    """

    kind: str
    pi_coefficient: Fraction | None = None
    log_terms: tuple[tuple[int, Fraction], ...] = field(default=())

    def __post_init__(self):
        if self.kind == PI:
            if self.pi_coefficient is None or self.log_terms:
                raise ValueError("pi multiple needs a coefficient and no log terms")
            object.__setattr__(self, "pi_coefficient", Fraction(self.pi_coefficient))
        elif self.kind == LOG:
            if self.pi_coefficient is not None:
                raise ValueError("log combination carries no pi coefficient")
            object.__setattr__(self, "log_terms", normalize_log_terms(self.log_terms))
        else:
            raise ValueError(f"unknown kind {self.kind!r}")

    @classmethod
    def pi_multiple(cls, coefficient) -> "ExactValue":
        return cls(PI, pi_coefficient=Fraction(coefficient))

    @classmethod
    def log_combination(cls, terms: Mapping[int, Fraction] | Iterable[tuple[int, Fraction]]) -> "ExactValue":
        if isinstance(terms, Mapping):
            terms = terms.items()
        return cls(LOG, log_terms=tuple(terms))

    @property
    def is_zero(self) -> bool:
        if self.kind == PI:
            return self.pi_coefficient == 0
        return not self.log_terms

    def logs(self) -> dict[int, Fraction]:
        return dict(self.log_terms)

    def __float__(self) -> float:
        if self.kind == PI:
            return float(self.pi_coefficient) * math.pi
        return math.fsum(float(c) * math.log(m) for m, c in self.log_terms)


def normalize_log_terms(terms: Iterable[tuple[int, Fraction]]) -> tuple[tuple[int, Fraction], ...]:
    merged: dict[int, Fraction] = {}
    for base, coeff in terms:
        base = int(base)
        if base < 1:
            raise ValueError(f"log base must be a positive integer, got {base}")
        if base == 1:
            continue
        root, e = _perfect_power_root(base)
        merged[root] = merged.get(root, Fraction(0)) + e * Fraction(coeff)
    return tuple((m, c) for m, c in sorted(merged.items()) if c != 0)


def binomial(n: int, k: int) -> int:
    if n < 0 or k < 0 or k > n:
        raise InvalidDomain(f"binomial requires 0 <= k <= n, got n={n}, k={k}")
    return math.comb(n, k)


def _check_positive(n: int, q: int) -> None:
    if n < 1 or q < 1:
        raise InvalidDomain(f"requires positive n and q, got n={n}, q={q}")


def alternating_sum(n: int, q: int) -> int:
    """Sum over k <= floor((n-1)/2) of (-1)^k C(n,k) (n-2k)^(q-1).

    The upper limit deliberately stops short of k = n/2 for even n.
    Vanishes whenever n > q >= 2 and n + q is odd.
    """
    _check_positive(n, q)
    total = 0
    for k in range((n - 1) // 2 + 1):
        term = math.comb(n, k) * (n - 2 * k) ** (q - 1)
        total += -term if k % 2 else term
    return total


def _sign(e: int) -> int:
    # (-1)**e for any integer e, negative included
    return -1 if e % 2 else 1


def closed_form(spec: IntegralSpec | tuple[int, int]) -> ExactValue:
    if not isinstance(spec, IntegralSpec):
        spec = IntegralSpec(*spec)
    spec.require_convergent()
    n, q = spec.n, spec.q
    if spec.even_case:
        scale = Fraction(_sign((q - n) // 2), 2**n * math.factorial(q - 1))
        return ExactValue.pi_multiple(scale * alternating_sum(n, q))

    scale = Fraction(_sign((q - n + 1) // 2), 2 ** (n - 1) * math.factorial(q - 1))
    terms = []
    for k in range((n - 1) // 2 + 1):
        coeff = _sign(k) * math.comb(n, k) * (n - 2 * k) ** (q - 1)
        terms.append((n - 2 * k, scale * coeff))
    return ExactValue.log_combination(terms)


@dataclass(frozen=True)
class GaussianRational:
    """Complex number with exact rational parts."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @classmethod
    def coerce(cls, value) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, complex):
            return cls(Fraction(value.real), Fraction(value.imag))
        return cls(Fraction(value))

    @classmethod
    def i_power(cls, k: int) -> "GaussianRational":
        re, im = ((1, 0), (0, 1), (-1, 0), (0, -1))[k % 4]
        return cls(re, im)

    def __add__(self, other):
        other = GaussianRational.coerce(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-GaussianRational.coerce(other))

    def __rsub__(self, other):
        return GaussianRational.coerce(other) - self

    def __mul__(self, other):
        other = GaussianRational.coerce(other)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "GaussianRational":
        d = self.norm2()
        if d == 0:
            raise ZeroDivisionError("inverse of zero")
        return GaussianRational(self.re / d, -self.im / d)

    def __truediv__(self, other):
        return self * GaussianRational.coerce(other).inverse()

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = GaussianRational(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"


I = GaussianRational(0, 1)


def harmonic(m: int) -> Fraction:
    return sum((Fraction(1, k) for k in range(1, m + 1)), Fraction(0))


def c_constant(q: int) -> GaussianRational:
    """i^(q-1) H_(q-1) / (q-1)!, the alpha^(q-1) coefficient left over in the polynomial-subtracted exponential integral; zero at q = 1."""
    if q < 1:
        raise InvalidDomain(f"c_constant requires q >= 1, got {q}")
    if q == 1:
        return GaussianRational(0)
    return GaussianRational.i_power(q - 1) * (harmonic(q - 1) / math.factorial(q - 1))
