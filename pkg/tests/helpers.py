"""Reference arithmetic and random encoder generators shared by the tests."""

import itertools

import numpy as np
from hypothesis import strategies as st

from tvcc.encoder import PeriodicEncoder, TimeInvariantEncoder
from tvcc.gf2poly import Poly, inflate
from tvcc.polymatrix import PolyMatrix, RankDeficient, minor_gcd
from tvcc.tvece import build_tvece

polys = st.integers(min_value=0, max_value=(1 << 12) - 1).map(Poly)
nonzero_polys = st.integers(min_value=1, max_value=(1 << 10) - 1).map(Poly)


# --- independent reference arithmetic on coefficient lists -----------------

def coeffs(a: Poly) -> list[int]:
    return list(a.coeffs)


def schoolbook_mul(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] ^= x & y
    while out and out[-1] == 0:
        out.pop()
    return out


def divides(d: Poly, a: Poly) -> bool:
    """Does d divide a?  Checked by searching for the cofactor."""
    if a.value == 0:
        return True
    if d.value == 0:
        return False
    span = a.value.bit_length() - d.value.bit_length()
    if span < 0:
        return False
    return any(
        schoolbook_mul(coeffs(d), coeffs(Poly(q))) == coeffs(a) for q in range(1, 1 << (span + 1))
    )


def trial_factor(a: Poly) -> list[Poly]:
    """Factor by trial division over all polynomials of degree >= 1."""
    out, v, d = [], a.value, 2
    while v.bit_length() > 1:
        while True:
            q, r = _naive_divmod(v, d)
            if r:
                break
            out.append(Poly(d))
            v = q
        d += 1
    if v != 1:
        out.append(Poly(v))
    return out


def _naive_divmod(a: int, b: int):
    q = 0
    while a.bit_length() >= b.bit_length():
        s = a.bit_length() - b.bit_length()
        a ^= b << s
        q |= 1 << s
    return q, a


def brute_gcd(a: Poly, b: Poly) -> Poly:
    """Largest-degree common divisor by exhaustive search."""
    top = max(a.value, b.value).bit_length()
    best = Poly(1)
    for d in range(1, 1 << top):
        cand = Poly(d)
        if divides(cand, a) and divides(cand, b) and cand.degree > best.degree:
            best = cand
    return best


def leibniz_det(rows: list[list[Poly]]) -> Poly:
    """Determinant as a sum over permutations (no sign in characteristic 2)."""
    n = len(rows)
    acc = []
    for perm in itertools.permutations(range(n)):
        term = [1]
        for i, j in enumerate(perm):
            term = schoolbook_mul(term, coeffs(rows[i][j]))
        acc = xor_lists(acc, term)
    return Poly.from_coeffs(acc)


def xor_lists(a, b):
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] ^= x
    for i, x in enumerate(b):
        out[i] ^= x
    return out


# --- random encoders --------------------------------------------------------

def random_poly(rng, max_degree: int) -> Poly:
    return Poly(int(rng.integers(0, 1 << (max_degree + 1))))


def random_periodic(rng, p_max=4, k_max=2, n_max=3, m_max=4, k=None) -> PeriodicEncoder:
    p = int(rng.integers(1, p_max + 1))
    k = int(rng.integers(1, k_max + 1)) if k is None else k
    n = int(rng.integers(k + 1, max(n_max, k + 1) + 1))
    m = int(rng.integers(0, m_max + 1))
    cons = []
    for _ in range(p):
        g = PolyMatrix(k, n, [random_poly(rng, m) for _ in range(k * n)])
        cons.append(TimeInvariantEncoder(g))
    return PeriodicEncoder(tuple(cons))


def random_checkable(rng, p_max=3, n_max=3, m_max=4) -> PeriodicEncoder:
    """Rate-1/n periodic encoder with a full-rank equivalent.

    Half of the draws get a common factor c(D^p) injected into every
    constituent, which makes them catastrophic by construction.
    """
    while True:
        p = int(rng.integers(1, p_max + 1))
        n = int(rng.integers(2, n_max + 1))
        m = int(rng.integers(0, m_max + 1))
        factor = Poly(1)
        if rng.random() < 0.5:
            max_c = m_max // p
            if max_c >= 1:
                dc = int(rng.integers(1, max_c + 1))
                c = Poly(int(rng.integers(0, 1 << (dc - 1))) << 1 | 1 | (1 << dc))
                factor = inflate(c, p)
                m = int(rng.integers(0, m_max - int(factor.degree) + 1))
        cons = []
        for _ in range(p):
            g = PolyMatrix(1, n, [random_poly(rng, m) * factor for _ in range(n)])
            cons.append(TimeInvariantEncoder(g))
        e = PeriodicEncoder(tuple(cons))
        try:
            minor_gcd(build_tvece(e).encoder.g, p)
        except RankDeficient:
            continue
        return e


def generator_matrix_encode(e: PeriodicEncoder, u) -> np.ndarray:
    """Reference encoder: multiply by the explicit finite generator matrix.

    Row block r (input epoch r) and column block j (output epoch j) hold
    the coefficient of D^(j-r) in the constituent active at epoch j.
    """
    u = np.asarray(u, dtype=np.int64).reshape(-1, e.k)
    length = u.shape[0]
    big = np.zeros((length * e.k, length * e.n), dtype=np.int64)
    for r in range(length):
        for j in range(r, length):
            g = e.constituents[j % e.p].g
            for a in range(e.k):
                for b in range(e.n):
                    big[r * e.k + a, j * e.n + b] = g[a, b].coeff(j - r)
    return ((u.reshape(-1) @ big) & 1).astype(np.uint8).reshape(length, e.n)
