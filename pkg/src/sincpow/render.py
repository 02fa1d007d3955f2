"""Text, LaTeX, JSON and decimal renderings of :class:`ExactValue`.

Decimal expansion works in scaled-integer fixed point: pi from Machin's
formula, log(m) from atanh series after pulling out a power of two.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from sincpow.exact_core import LOG, PI, ExactValue, SincPowError

MAX_DIGITS = 10_000
GUARD_DIGITS = 10
FORMATS = ("exact", "decimal", "latex", "json")


class ResourceLimit(SincPowError):
    pass


@dataclass(frozen=True)
class RenderRequest:
    value: ExactValue
    format: str = "exact"
    digits: int = 30

    def __post_init__(self):
        if self.format not in FORMATS:
            raise ValueError(f"unknown format {self.format!r}")
        _check_digits(self.digits)


def _check_digits(digits: int) -> None:
    if digits < 1:
        raise ValueError(f"digits must be positive, got {digits}")
    if digits > MAX_DIGITS:
        raise ResourceLimit(f"digits capped at {MAX_DIGITS}, got {digits}")


# ---------------------------------------------------------------- fixed point


def _atan_inv(x: int, one: int) -> int:
    """atan(1/x) * one."""
    total = term = one // x
    x2 = x * x
    k = 1
    while term:
        term //= x2
        total += -(term // (2 * k + 1)) if k % 2 else term // (2 * k + 1)
        k += 1
    return total


def _atanh_frac(p: int, q: int, one: int) -> int:
    """atanh(p/q) * one for 0 <= p/q < 1."""
    total = term = one * p // q
    p2, q2 = p * p, q * q
    k = 1
    while term:
        term = term * p2 // q2
        total += term // (2 * k + 1)
        k += 1
    return total


@lru_cache(maxsize=32)
def pi_fixed(places: int) -> int:
    """floor-ish of pi * 10**places, accurate to a few units in the last place."""
    extra = 10
    one = 10 ** (places + extra)
    value = 16 * _atan_inv(5, one) - 4 * _atan_inv(239, one)
    return value // 10**extra


@lru_cache(maxsize=32)
def _log2_fixed(places: int) -> int:
    extra = 10
    one = 10 ** (places + extra)
    value = 18 * _atanh_frac(1, 26, one) - 2 * _atanh_frac(1, 4801, one) + 8 * _atanh_frac(1, 8749, one)
    return value // 10**extra


@lru_cache(maxsize=256)
def log_fixed(m: int, places: int) -> int:
    """log(m) * 10**places for an integer m >= 1."""
    if m < 1:
        raise ValueError("log of nonpositive integer")
    if m == 1:
        return 0
    extra = 10
    one = 10 ** (places + extra)
    # m = 2^k * r with r in [2/3, 4/3)
    k = m.bit_length() - 1
    if 3 * m >= 4 * 2**k:
        k += 1
    num, den = m, 2**k
    # log r = 2 atanh((r - 1)/(r + 1))
    rest = 2 * _atanh_frac(num - den, num + den, one) if num >= den else -2 * _atanh_frac(den - num, num + den, one)
    value = k * _log2_fixed(places + extra) + rest
    return value // 10**extra


_STR_CHUNK = 4000


def _int_str(x: int) -> str:
    """str(x) for nonnegative x of any size, sidestepping the interpreter's digit limit."""
    if x < 10**_STR_CHUNK:
        return str(x)
    k = max(_STR_CHUNK, (x.bit_length() * 3 // 10) // 2)
    hi, lo = divmod(x, 10**k)
    return _int_str(hi) + _int_str(lo).zfill(k)


def _scaled(value: ExactValue, places: int) -> int:
    """value * 10**places, rounded toward -inf within a few units."""
    coeffs = [value.pi_coefficient] if value.kind == PI else [c for _, c in value.log_terms]
    slack = max(abs(c.numerator).bit_length() * 3 // 10 + 1 for c in coeffs) + 3
    work = places + slack
    if value.kind == PI:
        total = value.pi_coefficient * pi_fixed(work)
    else:
        total = sum((c * log_fixed(m, work) for m, c in value.log_terms), Fraction(0))
    return (total.numerator // total.denominator) // 10**slack


def render_decimal(value: ExactValue, digits: int = 30) -> str:
    """``digits`` significant digits, truncated toward zero; zero prints as ``0.000...``."""
    _check_digits(digits)
    if value.is_zero:
        return "0." + "0" * digits
    places = digits + GUARD_DIGITS
    for _ in range(64):
        x = _scaled(value, places)
        if x < 0:
            x += 1  # floor -> toward zero for the magnitude
        mag = _int_str(abs(x))
        if abs(x) > 0 and len(mag) >= digits + GUARD_DIGITS // 2:
            break
        places += max(digits + GUARD_DIGITS - len(mag), GUARD_DIGITS)
    else:
        return "0." + "0" * digits
    sign = "-" if x < 0 else ""
    int_len = len(mag) - places
    kept = mag[:digits]
    if int_len <= 0:
        return f"{sign}0.{'0' * (-int_len)}{kept}"
    if int_len >= digits:
        return sign + kept + "0" * (int_len - digits)
    return f"{sign}{kept[:int_len]}.{kept[int_len:]}"


# -------------------------------------------------------------- text formats


def _frac_text(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _terms(value: ExactValue) -> list[tuple[Fraction, str | int]]:
    if value.kind == PI:
        return [(value.pi_coefficient, PI)]
    return [(c, m) for m, c in value.log_terms]


def render_exact(value: ExactValue) -> str:
    if value.kind == LOG and value.is_zero:
        return "0"
    parts = []
    for i, (c, what) in enumerate(_terms(value)):
        body = f"{_frac_text(abs(c))} * " + ("pi" if what == PI else f"log({what})")
        if i == 0:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


_PI_RE = re.compile(r"^(-?)(\d+)(?:/(\d+))? \* pi$")
_LOG_TERM_RE = re.compile(r"(\d+)(?:/(\d+))? \* log\((\d+)\)")


def parse_exact(text: str) -> ExactValue:
    """Inverse of :func:`render_exact`."""
    text = text.strip()
    if text == "0":
        return ExactValue.log_combination({})
    m = _PI_RE.match(text)
    if m:
        sign, num, den = m.groups()
        c = Fraction(int(num), int(den or 1))
        return ExactValue.pi_multiple(-c if sign else c)
    terms = []
    pos = 0
    sign = 1
    if text.startswith("-"):
        sign, pos = -1, 1
    while True:
        m = _LOG_TERM_RE.match(text, pos)
        if not m:
            raise ValueError(f"cannot parse {text!r}")
        num, den, base = m.groups()
        terms.append((int(base), sign * Fraction(int(num), int(den or 1))))
        pos = m.end()
        if pos == len(text):
            break
        op = text[pos:pos + 3]
        if op not in (" + ", " - "):
            raise ValueError(f"cannot parse {text!r}")
        sign = 1 if op == " + " else -1
        pos += 3
    value = ExactValue.log_combination(terms)
    if render_exact(value) != text:
        raise ValueError(f"non-canonical expression {text!r}")
    return value


def _latex_coeff(c: Fraction) -> str:
    if c == 1:
        return ""
    if c.denominator == 1:
        return str(c.numerator)
    return rf"\frac{{{c.numerator}}}{{{c.denominator}}}"


def render_latex(value: ExactValue) -> str:
    if value.is_zero:
        return "0"
    parts = []
    for i, (c, what) in enumerate(_terms(value)):
        body = _latex_coeff(abs(c)) + (r"\pi" if what == PI else rf"\log {what}")
        if i == 0:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


# ---------------------------------------------------------------------- json


@dataclass(frozen=True)
class JsonRecord:
    n: int | None
    q: int | None
    value: ExactValue
    decimal: str

    def to_json(self) -> str:
        v = self.value
        obj = {
            "n": self.n,
            "q": self.q,
            "kind": v.kind,
            "pi": None if v.kind == LOG else {"num": str(v.pi_coefficient.numerator), "den": str(v.pi_coefficient.denominator)},
            "logs": [{"base": m, "num": str(c.numerator), "den": str(c.denominator)} for m, c in v.log_terms],
            "decimal": self.decimal,
        }
        return json.dumps(obj)


def render_json(value: ExactValue, n: int | None = None, q: int | None = None, digits: int = 30) -> str:
    return JsonRecord(n, q, value, render_decimal(value, digits)).to_json()


def parse_json(text: str) -> JsonRecord:
    obj = json.loads(text)
    if obj["kind"] == PI:
        pi = obj["pi"]
        value = ExactValue.pi_multiple(Fraction(int(pi["num"]), int(pi["den"])))
    elif obj["kind"] == LOG:
        value = ExactValue.log_combination(
            [(int(t["base"]), Fraction(int(t["num"]), int(t["den"]))) for t in obj["logs"]]
        )
    else:
        raise ValueError(f"unknown kind {obj['kind']!r}")
    return JsonRecord(obj.get("n"), obj.get("q"), value, obj["decimal"])


def render(request: RenderRequest, n: int | None = None, q: int | None = None) -> str:
    fmt = request.format
    if fmt == "exact":
        return render_exact(request.value)
    if fmt == "latex":
        return render_latex(request.value)
    if fmt == "decimal":
        return render_decimal(request.value, request.digits)
    return render_json(request.value, n, q, request.digits)
