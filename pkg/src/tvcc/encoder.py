"""Encoder models and time-domain encoding.

Bit streams are ``uint8`` arrays of shape ``(epochs, width)``: row t holds
the k-tuple (or n-tuple) of epoch t.  Every encoder starts from the
all-zero state and output length equals input length unless a caller
appends tail epochs.

A periodic encoder with constituents ``G_1 .. G_p`` uses constituent
``(t mod p) + 1`` at epoch t, so epoch 0 always uses the first one.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from .gf2poly import ONE, Poly, format_poly, series_div
from .polymatrix import PolyMatrix, coefficient_slice

__all__ = [
    "TimeInvariantEncoder",
    "PeriodicEncoder",
    "RationalPeriodicEncoder",
    "as_stream",
    "encode_time_invariant",
    "encode_serial",
    "encode_parallel",
    "encode_rational",
]


@dataclass(frozen=True)
class TimeInvariantEncoder:
    """Rate k/n feedforward encoder given by its k x n transfer matrix."""

    g: PolyMatrix

    def __post_init__(self):
        if not isinstance(self.g, PolyMatrix):
            raise TypeError("g must be a PolyMatrix")
        if self.k >= self.n:
            raise ValueError(f"need k < n, got k={self.k}, n={self.n}")

    @classmethod
    def parse(cls, *rows: str) -> TimeInvariantEncoder:
        """``TimeInvariantEncoder.parse("11 101")`` is G = [1+D, 1+D^2]."""
        return cls(PolyMatrix.parse(rows))

    @property
    def k(self) -> int:
        return self.g.rows

    @property
    def n(self) -> int:
        return self.g.cols

    @property
    def memory(self) -> int:
        d = self.g.max_degree()
        return 0 if d < 0 else int(d)

    def taps(self, memory: int | None = None) -> np.ndarray:
        """Binary tap array of shape ``(memory + 1, k, n)``."""
        m = self.memory if memory is None else memory
        return np.stack([coefficient_slice(self.g, j) for j in range(m + 1)])


@dataclass(frozen=True)
class PeriodicEncoder:
    """Period-p encoder cycling through p constituent encoders."""

    constituents: tuple[TimeInvariantEncoder, ...]

    def __post_init__(self):
        cons = tuple(self.constituents)
        object.__setattr__(self, "constituents", cons)
        if not cons:
            raise ValueError("a periodic encoder needs at least one constituent")
        k, n = cons[0].k, cons[0].n
        for i, c in enumerate(cons):
            if (c.k, c.n) != (k, n):
                raise ValueError(
                    f"constituent {i + 1} has shape {c.k}x{c.n}, expected {k}x{n}"
                )

    @classmethod
    def from_matrices(cls, *matrices: PolyMatrix) -> PeriodicEncoder:
        return cls(tuple(TimeInvariantEncoder(g) for g in matrices))

    @classmethod
    def time_invariant(cls, enc: TimeInvariantEncoder) -> PeriodicEncoder:
        return cls((enc,))

    @property
    def p(self) -> int:
        return len(self.constituents)

    @property
    def k(self) -> int:
        return self.constituents[0].k

    @property
    def n(self) -> int:
        return self.constituents[0].n

    @property
    def memory(self) -> int:
        return max(c.memory for c in self.constituents)

    def taps(self) -> np.ndarray:
        """Tap array of shape ``(p, m + 1, k, n)``, zero-padded to the shared m."""
        m = self.memory
        return np.stack([c.taps(m) for c in self.constituents])

    def map(self, fn) -> PeriodicEncoder:
        """Apply ``fn`` to every entry of every constituent matrix."""
        return PeriodicEncoder(tuple(TimeInvariantEncoder(c.g.map(fn)) for c in self.constituents))


@dataclass(frozen=True)
class RationalPeriodicEncoder:
    """Periodic encoder whose constituents all share the denominator ``den``."""

    base: PeriodicEncoder
    den: Poly = ONE

    def __post_init__(self):
        if self.den.coeff(0) != 1:
            raise ValueError(
                f"denominator {format_poly(self.den)} must have a unit constant term"
            )

    @property
    def p(self) -> int:
        return self.base.p

    @property
    def k(self) -> int:
        return self.base.k

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def memory(self) -> int:
        return self.base.memory

    def is_polynomial(self) -> bool:
        return self.den == ONE


def as_stream(data, width: int) -> np.ndarray:
    """Coerce a sequence of tuples (or a flat bit sequence) to an
    ``(epochs, width)`` uint8 array."""
    arr = np.asarray(data, dtype=np.uint8)
    if arr.size == 0:
        return np.zeros((0, width), dtype=np.uint8)
    if arr.ndim == 1:
        if arr.size % width:
            raise ValueError(f"{arr.size} bits do not split into {width}-tuples")
        arr = arr.reshape(-1, width)
    if arr.ndim != 2 or arr.shape[1] != width:
        raise ValueError(f"expected a stream of {width}-tuples, got shape {arr.shape}")
    if np.any(arr > 1):
        raise ValueError("stream symbols must be binary")
    return arr


def _check_input(u, k: int) -> np.ndarray:
    u = np.asarray(u, dtype=np.uint8)
    if u.size == 0:
        return np.zeros((0, k), dtype=np.uint8)
    if u.ndim != 2 or u.shape[1] != k:
        raise ValueError(f"input must be a stream of {k}-tuples, got shape {u.shape}")
    return u


def encode_time_invariant(enc: TimeInvariantEncoder, u) -> np.ndarray:
    """Discrete-time convolution of the input with the tap matrices."""
    u = _check_input(u, enc.k).astype(np.int64)
    taps = enc.taps().astype(np.int64)
    length = u.shape[0]
    v = np.zeros((length, enc.n), dtype=np.int64)
    for j in range(min(taps.shape[0], length)):
        v[j:] += u[: length - j] @ taps[j]
    return (v & 1).astype(np.uint8)


def encode_serial(e: PeriodicEncoder, u) -> np.ndarray:
    """Shift-register encoding whose connections change every epoch."""
    u = _check_input(u, e.k)
    taps = e.taps().astype(np.int64)
    m = taps.shape[1] - 1
    length = u.shape[0]
    # registers[0] is the current input, registers[j] the input j epochs ago
    padded = np.vstack([np.zeros((m, e.k), dtype=np.int64), u.astype(np.int64)])
    out = np.zeros((length, e.n), dtype=np.uint8)
    for t in range(length):
        registers = padded[t : t + m + 1][::-1]
        out[t] = np.einsum("jk,jkn->n", registers, taps[t % e.p]) & 1
    return out


def encode_parallel(e: PeriodicEncoder, u) -> np.ndarray:
    """All constituents encode the whole input; epoch t keeps the output of
    constituent t mod p and punctures the rest."""
    u = _check_input(u, e.k)
    outputs = [encode_time_invariant(c, u) for c in e.constituents]
    length = u.shape[0]
    out = np.zeros((length, e.n), dtype=np.uint8)
    for i, v in enumerate(outputs):
        out[i::e.p] = v[i::e.p]
    return out


def divide_stream(u, den: Poly, nterms: int) -> np.ndarray:
    """Power-series quotient ``u / den`` of every input row, ``nterms`` epochs."""
    u = np.asarray(u, dtype=np.uint8)
    cols = [series_div(u[:, i].tolist(), den, nterms) for i in range(u.shape[1])]
    return np.array(cols, dtype=np.uint8).T.reshape(nterms, u.shape[1])


def encode_rational(e: RationalPeriodicEncoder, u, length: int | None = None) -> np.ndarray:
    """Encode ``u / den`` with the numerator encoder, truncated to ``length``.

    Shorter inputs are zero-extended, so an impulse of length 1 yields the
    impulse response over ``length`` epochs.
    """
    u = _check_input(u, e.k)
    if length is None:
        length = u.shape[0]
    q = divide_stream(u, e.den, length + e.memory)
    return encode_serial(e.base, q)[:length]


def stream_weight(v) -> int:
    return int(np.asarray(v, dtype=np.int64).sum())


def tail(u, epochs: int) -> np.ndarray:
    """Append ``epochs`` all-zero tuples (register flush)."""
    u = np.asarray(u, dtype=np.uint8)
    return np.vstack([u, np.zeros((epochs, u.shape[1]), dtype=np.uint8)])


def constituent_matrices(e: PeriodicEncoder) -> Sequence[PolyMatrix]:
    return [c.g for c in e.constituents]
