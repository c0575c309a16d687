"""Time-invariant equivalent of a periodic encoder.

Stacking the semi-infinite generator matrices of the p constituents row by
row (input epoch r, output epoch j) gives the entry

    G_{(j mod p) + 1}^{j - r}

at row r, column j, because the output of epoch j is produced by the
constituent active at j from the input j - r epochs back.  Group p input
epochs and p output epochs into one super-symbol: input block s, output
block s + l, with offsets r, c in 0..p-1.  The cell then sits at
``j - r = l*p + c - r`` and depends only on l, so the whole matrix is the
generator matrix of a time-invariant encoder with kp inputs, np outputs
and polynomial transfer matrix ``sum_l Block_l D^l``.  The largest l
with a nonzero cell is at most ceil(m/p).
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from .encoder import PeriodicEncoder, TimeInvariantEncoder, encode_time_invariant
from .polymatrix import PolyMatrix

__all__ = [
    "TveceResult",
    "build_tvece",
    "serialize",
    "deserialize",
    "block_input",
    "unblock_output",
    "encode_via_tvece",
]


@dataclass(frozen=True)
class TveceResult:
    encoder: TimeInvariantEncoder
    source_p: int
    source_memory: int

    @property
    def memory_bound(self) -> int:
        """ceil(m / p) for the source encoder."""
        return math.ceil(self.source_memory / self.source_p)


def build_tvece(e: PeriodicEncoder) -> TveceResult:
    p, k, n, m = e.p, e.k, e.n, e.memory
    taps = e.taps()
    m_star = math.ceil(m / p)
    blocks = []
    for l in range(m_star + 1):
        block = np.zeros((k * p, n * p), dtype=np.uint8)
        for r in range(p):
            for c in range(p):
                j = l * p + c - r
                if 0 <= j <= m:
                    block[r * k:(r + 1) * k, c * n:(c + 1) * n] = taps[c, j]
        blocks.append(block)
    g = PolyMatrix.from_slices(blocks)
    return TveceResult(TimeInvariantEncoder(g), source_p=p, source_memory=m)


def serialize(streams: Sequence[np.ndarray]) -> np.ndarray:
    """Round-robin interleave p equal-length streams: epoch ``t*p + i``
    carries epoch t of stream i."""
    streams = [np.asarray(s, dtype=np.uint8) for s in streams]
    if not streams:
        raise ValueError("need at least one stream")
    shape = streams[0].shape
    if any(s.shape != shape for s in streams):
        raise ValueError(f"streams must share one shape, got {[s.shape for s in streams]}")
    if len(shape) != 2:
        raise ValueError("streams must be 2-D (epochs, width)")
    p = len(streams)
    out = np.zeros((shape[0] * p, shape[1]), dtype=np.uint8)
    for i, s in enumerate(streams):
        out[i::p] = s
    return out


def deserialize(stream: np.ndarray, p: int) -> list[np.ndarray]:
    stream = np.asarray(stream, dtype=np.uint8)
    if p < 1:
        raise ValueError(f"period must be positive, got {p}")
    if stream.shape[0] % p:
        raise ValueError(f"stream length {stream.shape[0]} is not divisible by {p}")
    return [stream[i::p].copy() for i in range(p)]


def block_input(u: np.ndarray, p: int) -> np.ndarray:
    """Group p consecutive k-tuples into one kp-tuple, zero-padding the tail."""
    u = np.asarray(u, dtype=np.uint8)
    pad = -u.shape[0] % p
    if pad:
        u = np.vstack([u, np.zeros((pad, u.shape[1]), dtype=np.uint8)])
    return u.reshape(u.shape[0] // p, p * u.shape[1])


def unblock_output(v: np.ndarray, p: int) -> np.ndarray:
    """Split every np-tuple back into p consecutive n-tuples."""
    v = np.asarray(v, dtype=np.uint8)
    if v.shape[1] % p:
        raise ValueError(f"tuple width {v.shape[1]} is not divisible by {p}")
    return v.reshape(v.shape[0] * p, v.shape[1] // p)


def encode_via_tvece(e: PeriodicEncoder, u, tvece: TveceResult | None = None) -> np.ndarray:
    """Encode with the equivalent time-invariant encoder, truncated to len(u)."""
    if tvece is None:
        tvece = build_tvece(e)
    u = np.asarray(u, dtype=np.uint8).reshape(-1, e.k)
    v = encode_time_invariant(tvece.encoder, block_input(u, e.p))
    return unblock_output(v, e.p)[: u.shape[0]]
