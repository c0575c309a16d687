"""Dense matrices over GF(2)[D]: determinants, minors and minor GCDs."""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Sequence

import numpy as np

from .gf2poly import ONE, ZERO, Poly, _mul, format_poly, gcd_many, parse_poly

__all__ = [
    "PolyMatrix",
    "RankDeficient",
    "MAX_DET_SIDE",
    "determinant",
    "all_minors",
    "minor_gcd",
    "coefficient_slice",
]

MAX_DET_SIDE = 16


class RankDeficient(ValueError):
    """Every minor of the requested order vanishes."""


class PolyMatrix:
    """Immutable ``rows x cols`` matrix of :class:`Poly` entries, row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable[Poly]):
        entries = tuple(e if isinstance(e, Poly) else Poly(e) for e in entries)
        if rows < 1 or cols < 1:
            raise ValueError(f"matrix shape must be positive, got {rows}x{cols}")
        if len(entries) != rows * cols:
            raise ValueError(f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Poly | int]]) -> PolyMatrix:
        if not rows or not rows[0]:
            raise ValueError("empty matrix")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), width, [e for r in rows for e in r])

    @classmethod
    def parse(cls, rows: Sequence[str]) -> PolyMatrix:
        """Build from lines of whitespace-separated binary polynomials."""
        return cls.from_rows([[parse_poly(tok) for tok in line.split()] for line in rows])

    @classmethod
    def identity(cls, n: int) -> PolyMatrix:
        return cls(n, n, [ONE if i == j else ZERO for i in range(n) for j in range(n)])

    @classmethod
    def from_slices(cls, slices: Sequence[np.ndarray]) -> PolyMatrix:
        """Inverse of :func:`coefficient_slice`: sum of ``slices[j] * D^j``."""
        rows, cols = np.asarray(slices[0]).shape
        vals = np.zeros((rows, cols), dtype=object)
        for j, s in enumerate(slices):
            vals += np.asarray(s, dtype=object) << j
        return cls(rows, cols, [Poly(int(v)) for v in vals.ravel()])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, idx: tuple[int, int]) -> Poly:
        i, j = idx
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Poly, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def tolist(self) -> list[list[Poly]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def max_degree(self) -> float | int:
        return max(e.degree for e in self.entries)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> PolyMatrix:
        return PolyMatrix(len(rows), len(cols), [self[i, j] for i in rows for j in cols])

    def map(self, fn) -> PolyMatrix:
        return PolyMatrix(self.rows, self.cols, [fn(e) for e in self.entries])

    def __matmul__(self, other: PolyMatrix) -> PolyMatrix:
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        out = []
        for i in range(self.rows):
            for j in range(other.cols):
                acc = 0
                for t in range(self.cols):
                    acc ^= _mul(self[i, t].value, other[t, j].value)
                out.append(Poly(acc))
        return PolyMatrix(self.rows, other.cols, out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(format_poly(e) for e in self.row(i)) for i in range(self.rows))
        return f"PolyMatrix([{body}])"


def determinant(m: PolyMatrix) -> Poly:
    """Exact determinant by Laplace expansion memoised on used columns.

    Signs are irrelevant in characteristic 2.  Cost is about
    ``side * 2**side`` products, hence the hard side limit.
    """
    if m.rows != m.cols:
        raise ValueError(f"determinant needs a square matrix, got {m.rows}x{m.cols}")
    n = m.rows
    if n > MAX_DET_SIDE:
        raise ValueError(f"determinant side {n} exceeds the limit of {MAX_DET_SIDE}")
    vals = [[m[i, j].value for j in range(n)] for i in range(n)]
    full = (1 << n) - 1
    # memo[mask] = det of rows popcount(mask).. n-1 over the columns not in mask
    memo: dict[int, int] = {full: 1}

    def expand(mask: int) -> int:
        hit = memo.get(mask)
        if hit is not None:
            return hit
        row = vals[mask.bit_count()]
        acc = 0
        for j in range(n):
            if mask >> j & 1 or row[j] == 0:
                continue
            sub = expand(mask | (1 << j))
            if sub:
                acc ^= _mul(row[j], sub)
        memo[mask] = acc
        return acc

    return Poly(expand(0))


def all_minors(m: PolyMatrix, order: int) -> list[Poly]:
    """Every ``order x order`` minor, lexicographic in (row set, column set)."""
    if order < 1 or order > min(m.rows, m.cols):
        raise ValueError(f"minor order {order} invalid for a {m.rows}x{m.cols} matrix")
    out = []
    for rs in itertools.combinations(range(m.rows), order):
        for cs in itertools.combinations(range(m.cols), order):
            out.append(determinant(m.submatrix(rs, cs)))
    return out


def minor_gcd(m: PolyMatrix, order: int) -> Poly:
    """GCD of all minors of the given order.

    Raises RankDeficient when all of them are zero.
    """
    minors = all_minors(m, order)
    if not any(minors):
        raise RankDeficient(f"all order-{order} minors of the {m.rows}x{m.cols} matrix are zero")
    return gcd_many(minors)


def coefficient_slice(m: PolyMatrix, j: int) -> np.ndarray:
    """Binary matrix of the D^j coefficients of every entry."""
    return np.array(
        [[m[r, c].coeff(j) for c in range(m.cols)] for r in range(m.rows)], dtype=np.uint8
    )
