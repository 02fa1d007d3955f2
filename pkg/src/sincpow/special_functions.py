"""Upper (complementary) sine and cosine integrals in double precision.

Convention used throughout this package::

    si_upper(t) = int_t^inf sin(x)/x dx = pi/2 - Si(t)
    ci_upper(t) = int_t^inf cos(x)/x dx = -Ci(t)

where Si, Ci are the textbook sine and cosine integrals. Note the sign flip
on the cosine one: ``ci_upper(1) < 0`` while ``Ci(1) > 0``.
"""
from __future__ import annotations

import math

EULER_GAMMA = 0.57721566490153286061

# below this the power series is used, above it the continued fraction
SERIES_CUTOFF = 4.0

_MAXITER = 500
_EPS = 1e-17
_TINY = 1e-300


def _series(t: float) -> tuple[float, float]:
    """Standard Si(t) and Ci(t) - gamma - log(t), both by Maclaurin series."""
    si = 0.0
    cin = 0.0
    term = t  # t^(2k+1)/(2k+1)!
    k = 0
    while True:
        si_term = term / (2 * k + 1)
        si += si_term
        # t^(2k+2)/(2k+2)!
        term_c = term * t / (2 * k + 2)
        cin_term = term_c / (2 * k + 2)
        cin += cin_term
        if abs(si_term) < _EPS * abs(si) and abs(cin_term) < _EPS * max(abs(cin), _TINY):
            break
        term = -term_c * t / (2 * k + 3)
        k += 1
        if k > _MAXITER:
            raise ArithmeticError("sine/cosine integral series did not converge")
    return si, -cin


def _continued_fraction(t: float) -> complex:
    """E1(i t) by modified Lentz evaluation of its continued fraction.

    Re E1(it) = -Ci(t) and Im E1(it) = Si(t) - pi/2.
    """
    b = complex(1.0, t)
    c = 1.0 / _TINY
    d = 1.0 / b
    h = d
    for i in range(1, _MAXITER):
        a = -float(i * i)
        b += 2.0
        d = 1.0 / (a * d + b)
        c = b + a / c
        delta = c * d
        h *= delta
        if abs(delta.real - 1.0) + abs(delta.imag) < _EPS:
            return h * complex(math.cos(t), -math.sin(t))
    raise ArithmeticError(f"continued fraction failed to converge at t={t}")


def si_upper(t: float) -> float:
    """int_t^inf sin(x)/x dx for t >= 0."""
    t = float(t)
    if not t >= 0.0 or math.isinf(t):
        raise ValueError(f"si_upper requires finite t >= 0, got {t}")
    if t == 0.0:
        return math.pi / 2
    if t <= SERIES_CUTOFF:
        si, _ = _series(t)
        return math.pi / 2 - si
    return -_continued_fraction(t).imag


def ci_upper(t: float) -> float:
    """int_t^inf cos(x)/x dx for t > 0 (the negative of the usual Ci)."""
    t = float(t)
    if not t > 0.0 or math.isinf(t):
        raise ValueError(f"ci_upper requires finite t > 0, got {t}")
    if t <= SERIES_CUTOFF:
        _, cin = _series(t)
        return -(EULER_GAMMA + math.log(t) + cin)
    return _continued_fraction(t).real


def e_eps(alpha: float, eps: float) -> complex:
    """int_eps^inf exp(i alpha x)/x dx = ci_upper(|alpha| eps) + i sign(alpha) si_upper(|alpha| eps)."""
    alpha = float(alpha)
    eps = float(eps)
    if alpha == 0.0 or not math.isfinite(alpha):
        raise ValueError("e_eps requires a finite nonzero alpha")
    if not eps > 0.0 or not math.isfinite(eps):
        raise ValueError("e_eps requires eps > 0")
    t = abs(alpha) * eps
    value = complex(ci_upper(t), si_upper(t))
    return value if alpha > 0 else value.conjugate()
