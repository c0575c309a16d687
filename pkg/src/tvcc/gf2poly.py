"""Polynomials over GF(2) in the delay indeterminate D.

A polynomial is stored as a nonnegative integer whose bit i is the
coefficient of D^i, so 1+D^2 is ``0b101``.  Addition is XOR and
multiplication is carry-less.  Textual I/O is little-endian by degree:
``"101"`` is 1+D^2, ``"11"`` is 1+D and ``"0"`` is the zero polynomial.
"""

from __future__ import annotations

import contextlib
import contextvars
import math
from collections.abc import Iterable, Sequence

__all__ = [
    "Poly",
    "ZERO",
    "ONE",
    "X",
    "add",
    "mul",
    "poly_divmod",
    "gcd",
    "gcd_many",
    "inflate",
    "split_delay",
    "series_div",
    "parse_poly",
    "format_poly",
    "to_octal",
    "count_ops",
]

NEG_INF = -math.inf

_op_counter: contextvars.ContextVar[list[int] | None] = contextvars.ContextVar(
    "_op_counter", default=None
)


@contextlib.contextmanager
def count_ops():
    """Count coefficient bit operations done by mul and divmod.

    Yields a one-element list whose item is updated in place::

        with count_ops() as ops:
            gcd(a, b)
        print(ops[0])
    """
    box = [0]
    token = _op_counter.set(box)
    try:
        yield box
    finally:
        _op_counter.reset(token)


def _tick(n: int) -> None:
    box = _op_counter.get()
    if box is not None:
        box[0] += n


class Poly:
    """Immutable polynomial over GF(2).

    ``Poly(0b110)`` is D + D^2.  Construct from coefficients with
    :meth:`from_coeffs` or from text with :func:`parse_poly`.
    """

    __slots__ = ("_v",)

    def __init__(self, value: int = 0):
        if isinstance(value, Poly):
            value = value._v
        if not isinstance(value, int) or value < 0:
            raise ValueError(f"polynomial value must be a nonnegative int, got {value!r}")
        self._v = value

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int]) -> Poly:
        v = 0
        for i, c in enumerate(coeffs):
            if c & 1:
                v |= 1 << i
        return cls(v)

    @classmethod
    def monomial(cls, degree: int) -> Poly:
        return cls(1 << degree)

    @property
    def value(self) -> int:
        return self._v

    @property
    def coeffs(self) -> tuple[int, ...]:
        """Coefficient bits, index i holding D^i; empty for zero."""
        return tuple((self._v >> i) & 1 for i in range(self._v.bit_length()))

    @property
    def degree(self) -> float | int:
        """Degree, or ``-math.inf`` for the zero polynomial."""
        if self._v == 0:
            return NEG_INF
        return self._v.bit_length() - 1

    def coeff(self, i: int) -> int:
        return (self._v >> i) & 1

    def is_zero(self) -> bool:
        return self._v == 0

    def weight(self) -> int:
        return self._v.bit_count()

    def __bool__(self) -> bool:
        return self._v != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self._v == other._v
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("Poly", self._v))

    def __add__(self, other: Poly) -> Poly:
        return add(self, other)

    __sub__ = __add__
    __xor__ = __add__

    def __mul__(self, other: Poly) -> Poly:
        return mul(self, other)

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        return poly_divmod(self, other)

    def __floordiv__(self, other: Poly) -> Poly:
        return poly_divmod(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return poly_divmod(self, other)[1]

    def __call__(self, x: int) -> int:
        """Evaluate at x in GF(2)."""
        if x & 1:
            return self._v.bit_count() & 1
        return self._v & 1

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)!r})"

    def __str__(self) -> str:
        if self._v == 0:
            return "0"
        terms = []
        for i in range(self._v.bit_length()):
            if (self._v >> i) & 1:
                terms.append("1" if i == 0 else ("D" if i == 1 else f"D^{i}"))
        return "+".join(terms)


ZERO = Poly(0)
ONE = Poly(1)
X = Poly(2)


def add(a: Poly, b: Poly) -> Poly:
    return Poly(a.value ^ b.value)


def _mul(a: int, b: int) -> int:
    if a < b:
        a, b = b, a
    _tick(b.bit_count() * a.bit_length())
    c = 0
    while b:
        if b & 1:
            c ^= a
        a <<= 1
        b >>= 1
    return c


def mul(a: Poly, b: Poly) -> Poly:
    """Carry-less product."""
    return Poly(_mul(a.value, b.value))


def _divmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    db = b.bit_length() - 1
    q = 0
    while a and a.bit_length() - 1 >= db:
        shift = a.bit_length() - 1 - db
        a ^= b << shift
        q |= 1 << shift
        _tick(db + 1)
    return q, a


def poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Return ``(q, r)`` with ``a = q*b + r`` and ``deg r < deg b``."""
    q, r = _divmod(a.value, b.value)
    return Poly(q), Poly(r)


def gcd(a: Poly, b: Poly) -> Poly:
    """Euclid's algorithm.  Nonzero results are automatically monic."""
    x, y = a.value, b.value
    if x == 0 and y == 0:
        raise ValueError("gcd(0, 0) is undefined")
    while y:
        x, y = y, _divmod(x, y)[1]
    return Poly(x)


def gcd_many(polys: Iterable[Poly]) -> Poly:
    """GCD of a collection, skipping zero entries."""
    g = 0
    for p in polys:
        if p.value == 0:
            continue
        if g == 1:
            break
        g = p.value if g == 0 else gcd(Poly(g), p).value
    if g == 0:
        raise ValueError("gcd of an all-zero collection is undefined")
    return Poly(g)


def inflate(a: Poly, p: int) -> Poly:
    """Substitute D -> D^p."""
    if p < 1:
        raise ValueError(f"inflation factor must be >= 1, got {p}")
    if p == 1:
        return a
    v, out, i = a.value, 0, 0
    while v:
        if v & 1:
            out |= 1 << (i * p)
        v >>= 1
        i += 1
    return Poly(out)


def split_delay(a: Poly) -> tuple[int, Poly]:
    """Factor ``a = D^l * g`` with ``g(0) = 1``."""
    v = a.value
    if v == 0:
        raise ValueError("the zero polynomial has no delay factorisation")
    l = (v & -v).bit_length() - 1
    return l, Poly(v >> l)


def series_div(bits: Sequence[int], den: Poly, nterms: int) -> list[int]:
    """First ``nterms`` coefficients of the power series ``bits / den``.

    ``bits`` is a coefficient sequence (missing terms are zero) and
    ``den`` must have a unit constant term.
    """
    if den.coeff(0) != 1:
        raise ValueError(f"denominator {format_poly(den)} has no constant term")
    taps = [i for i in range(1, den.value.bit_length()) if den.coeff(i)]
    q: list[int] = []
    for t in range(nterms):
        s = bits[t] & 1 if t < len(bits) else 0
        for i in taps:
            if i <= t:
                s ^= q[t - i]
        q.append(s)
    return q


def parse_poly(text: str) -> Poly:
    """Parse a little-endian binary string such as ``"101"`` (= 1+D^2)."""
    if not text:
        raise ValueError("empty polynomial string")
    bad = set(text) - {"0", "1"}
    if bad:
        raise ValueError(f"invalid polynomial string {text!r}: only 0/1 allowed")
    return Poly(int(text[::-1], 2))


def format_poly(a: Poly) -> str:
    if a.value == 0:
        return "0"
    return format(a.value, "b")[::-1]


def to_octal(a: Poly) -> str:
    """Conventional octal generator notation (highest degree first)."""
    return format(a.value, "o")
