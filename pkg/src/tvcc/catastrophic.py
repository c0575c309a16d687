"""Catastrophe tests via minor GCDs, and conversion of catastrophic
periodic encoders.

A time-invariant encoder is non-catastrophic exactly when the GCD of its
order-k minors is a pure delay D^l.  A periodic encoder is tested through
its time-invariant equivalent, whose minors have order kp.

Conversion divides every constituent by g(D^p), where g is the minor GCD
with its delay factor removed.  Dividing by D^l as well would need a
non-causal advance and buys nothing, since a delay never makes an encoder
catastrophic.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .encoder import (
    PeriodicEncoder,
    RationalPeriodicEncoder,
    TimeInvariantEncoder,
    divide_stream,
    encode_rational,
)
from .gf2poly import ONE, Poly, format_poly, inflate, poly_divmod, split_delay
from .polymatrix import minor_gcd
from .tvece import build_tvece, encode_via_tvece

__all__ = [
    "Verdict",
    "CatastrophicReport",
    "NotCatastrophic",
    "massey_sain_check",
    "periodic_check",
    "convert",
    "conversion_divisor",
    "verify_same_code",
]


class Verdict(enum.Enum):
    CATASTROPHIC = "CATASTROPHIC"
    NON_CATASTROPHIC = "NON-CATASTROPHIC"

    def __str__(self) -> str:
        return self.value


class NotCatastrophic(ValueError):
    """Raised when asked to convert an encoder that is already fine."""


@dataclass(frozen=True)
class CatastrophicReport:
    verdict: Verdict
    f: Poly
    delay_l: int
    g: Poly
    period: int = 1

    @property
    def catastrophic(self) -> bool:
        return self.verdict is Verdict.CATASTROPHIC

    @classmethod
    def from_gcd(cls, f: Poly, period: int = 1) -> CatastrophicReport:
        l, g = split_delay(f)
        verdict = Verdict.NON_CATASTROPHIC if g == ONE else Verdict.CATASTROPHIC
        return cls(verdict, f, l, g, period)

    def fields(self) -> dict[str, str]:
        return {
            "verdict": str(self.verdict),
            "f": format_poly(self.f),
            "l": str(self.delay_l),
            "g": format_poly(self.g),
            "p": str(self.period),
        }

    def summary(self) -> str:
        s = f"{self.verdict} f={format_poly(self.f)} l={self.delay_l}"
        if self.catastrophic:
            s += f" g={format_poly(self.g)}"
        return s


def massey_sain_check(e: TimeInvariantEncoder) -> CatastrophicReport:
    return CatastrophicReport.from_gcd(minor_gcd(e.g, e.k))


def periodic_check(e: PeriodicEncoder) -> CatastrophicReport:
    tv = build_tvece(e)
    return CatastrophicReport.from_gcd(minor_gcd(tv.encoder.g, e.k * e.p), period=e.p)


def conversion_divisor(e: PeriodicEncoder, report: CatastrophicReport | None = None) -> Poly:
    """g(D^p): the polynomial every constituent gets divided by."""
    if report is None:
        report = periodic_check(e)
    return inflate(report.g, e.p)


def convert(e: PeriodicEncoder) -> RationalPeriodicEncoder:
    """Non-catastrophic encoder for the same code.

    When g(D^p) divides every entry the division is done in place and the
    result stays feedforward; otherwise the constituents are kept as
    numerators over the shared denominator g(D^p).
    """
    report = periodic_check(e)
    if not report.catastrophic:
        raise NotCatastrophic(
            f"encoder is already non-catastrophic (f={format_poly(report.f)})"
        )
    h = conversion_divisor(e, report)
    quotients = {}
    for c in e.constituents:
        for entry in c.g.entries:
            q, r = poly_divmod(entry, h)
            if r:
                return RationalPeriodicEncoder(e, h)
            quotients[entry] = q
    return RationalPeriodicEncoder(e.map(quotients.__getitem__), ONE)


def verify_same_code(
    original: PeriodicEncoder,
    converted: RationalPeriodicEncoder,
    trials: int = 100,
    length: int = 64,
    seed: int = 0,
) -> bool:
    """Check on random inputs that ``converted(u) == original(u / g(D^p))``.

    The divisor is recomputed from ``original`` and the right-hand side is
    encoded through the time-invariant equivalent, so neither side shares a
    code path with the rational encoder under test.  Every output of the
    converted encoder is therefore a codeword of the original one; the
    reverse holds because division by a polynomial with unit constant term
    is a bijection on sequences.
    """
    if (converted.p, converted.k, converted.n) != (original.p, original.k, original.n):
        return False
    report = periodic_check(original)
    h = conversion_divisor(original, report)
    tv = build_tvece(original)
    rng = np.random.default_rng(seed)
    for _ in range(trials):
        u = rng.integers(0, 2, size=(length, original.k), dtype=np.uint8)
        got = encode_rational(converted, u, length)
        q = divide_stream(u, h, length + original.memory)
        want = encode_via_tvece(original, q, tv)[:length]
        if not np.array_equal(got, want):
            return False
    return True
