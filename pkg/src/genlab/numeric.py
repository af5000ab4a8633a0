"""Interval-arithmetic plumbing: contexts, precision escalation, log helpers.

All certified numerics in the workbench run on mpmath interval contexts.
Policy: start at max(128, requested) bits, double whenever a verdict
interval straddles its threshold, give up at a hard cap.  Functions here
either return honest enclosures or raise NeedsBits to request escalation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, TypeVar

import mpmath

from .errors import PrecisionExhausted

HARD_CAP_BITS = 16384
NEG_INF = float("-inf")

T = TypeVar("T")


class NeedsBits(Exception):
    """Internal signal: the current working precision cannot decide."""


def make_ctx(bits: int) -> "mpmath.ctx_iv.MPIntervalContext":
    ctx = mpmath.ctx_iv.MPIntervalContext()
    ctx.prec = bits
    return ctx


def run_escalating(fn: Callable[[int], T], requested_bits: int, *, cap: int = HARD_CAP_BITS) -> T:
    """Run fn(bits), doubling bits on NeedsBits until the hard cap."""
    bits = max(128, requested_bits)
    while True:
        try:
            return fn(bits)
        except NeedsBits:
            bits *= 2
            if bits > cap:
                raise PrecisionExhausted(
                    f"verdict undecidable below {cap} bits", required_bits=bits
                ) from None


def straddles_zero(x) -> bool:
    return x.a <= 0 <= x.b


def is_exact_zero(x) -> bool:
    return x.a == 0 and x.b == 0


def iv_from_fraction(ctx, q: Fraction):
    return ctx.mpf(q.numerator) / ctx.mpf(q.denominator)


def interval_lt(a, b) -> bool:
    """Certainly a < b (disjoint, a below b)."""
    return a.b < b.a


def to_float_pair(x) -> tuple[float, float]:
    """Outward-rounded float endpoints of an interval."""
    lo = float(mpmath.mpf(x.a.a))
    hi = float(mpmath.mpf(x.b.b))
    if lo > NEG_INF:
        lo = math.nextafter(lo, NEG_INF)
    if hi < -NEG_INF:
        hi = math.nextafter(hi, -NEG_INF)
    return lo, hi


def log_abs_interval(ctx, x):
    """Enclosure of log|x|; None as a minus-infinity sentinel for exact zero.

    Raises NeedsBits when x straddles zero without being exactly zero.
    """
    if is_exact_zero(x):
        return None
    if straddles_zero(x):
        raise NeedsBits
    return ctx.log(abs(x))


def log_expm1_abs_interval(ctx, x, precision_bits: int):
    """Enclosure of log|e^x - 1| for an interval x; None for exact zero.

    Near zero the direct route cancels catastrophically, so for
    |x| <= 2^(-precision_bits/4) it switches to
    log|x| + log(1 + x/2 + x^2/6 + x^3/24 + tail), with the tail bounded
    rigorously.
    """
    if is_exact_zero(x):
        return None
    if straddles_zero(x):
        # sign of x unknown: e^x - 1 straddles zero as well
        raise NeedsBits
    bound = abs(x).b
    threshold = mpmath.mpf(2) ** (-(precision_bits // 4))
    if bound <= threshold:
        one = ctx.mpf(1)
        series = one + x / 2 + (x * x) / 6 + (x * x * x) / 24
        # remainder of sum_{n>=4} x^n/(n+1)!; for |x| <= 1/2 dominated by
        # |x|^4/120 * 2
        r = abs(x).b
        tail_hi = mpmath.mpf(r) ** 4 / 120 * 2
        tail = ctx.mpf([-tail_hi, tail_hi])
        series = series + tail
        if straddles_zero(series):
            raise NeedsBits
        return ctx.log(abs(x)) + ctx.log(abs(series))
    y = ctx.exp(x) - 1
    if is_exact_zero(y):
        return None
    if straddles_zero(y):
        raise NeedsBits
    return ctx.log(abs(y))


@dataclass(frozen=True)
class ComplexIV:
    """A rectangular complex enclosure built from two real intervals."""

    re: object
    im: object

    @staticmethod
    def from_real(x) -> "ComplexIV":
        zero = x * 0
        return ComplexIV(x, zero)

    def __add__(self, other: "ComplexIV") -> "ComplexIV":
        return ComplexIV(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "ComplexIV") -> "ComplexIV":
        return ComplexIV(self.re - other.re, self.im - other.im)

    def __mul__(self, other: "ComplexIV") -> "ComplexIV":
        return ComplexIV(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def scale(self, k: int) -> "ComplexIV":
        return ComplexIV(self.re * k, self.im * k)

    def abs2(self):
        return self.re * self.re + self.im * self.im

    def is_exact_zero(self) -> bool:
        return is_exact_zero(self.re) and is_exact_zero(self.im)

    def straddles_zero(self) -> bool:
        return straddles_zero(self.re) and straddles_zero(self.im)


def complex_exp(ctx, z: ComplexIV) -> ComplexIV:
    mag = ctx.exp(z.re)
    return ComplexIV(mag * ctx.cos(z.im), mag * ctx.sin(z.im))


def complex_log_abs(ctx, z: ComplexIV):
    """Enclosure of log|z|; None for exact zero; NeedsBits if undecidable."""
    if z.is_exact_zero():
        return None
    a2 = z.abs2()
    if is_exact_zero(a2):
        return None
    if straddles_zero(a2):
        raise NeedsBits
    return ctx.log(a2) / 2


def complex_log_expm1_abs(ctx, z: ComplexIV, precision_bits: int):
    """Enclosure of log|e^z - 1|, with the same near-zero series as the real case."""
    if z.is_exact_zero():
        return None
    bound2 = z.abs2().b
    threshold = mpmath.mpf(2) ** (-(precision_bits // 4))
    if bound2 <= threshold * threshold:
        one = ComplexIV.from_real(ctx.mpf(1))
        half = ComplexIV.from_real(ctx.mpf(1) / 2)
        sixth = ComplexIV.from_real(ctx.mpf(1) / 6)
        t24 = ComplexIV.from_real(ctx.mpf(1) / 24)
        series = one + z * half + (z * z) * sixth + (z * z * z) * t24
        r = mpmath.sqrt(bound2)
        tail_hi = mpmath.mpf(r) ** 4 / 120 * 2
        tail = ctx.mpf([-tail_hi, tail_hi])
        series = ComplexIV(series.re + tail, series.im + tail)
        la = complex_log_abs(ctx, z)
        ls = complex_log_abs(ctx, series)
        if la is None or ls is None:
            return None
        return la + ls
    w = complex_exp(ctx, z) - ComplexIV.from_real(ctx.mpf(1))
    return complex_log_abs(ctx, w)
