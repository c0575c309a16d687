from math import comb

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import leibniz_det
from tvcc.gf2poly import ONE, ZERO, Poly, parse_poly
from tvcc.polymatrix import (
    MAX_DET_SIDE,
    PolyMatrix,
    RankDeficient,
    all_minors,
    coefficient_slice,
    determinant,
    minor_gcd,
)

P = parse_poly
EQ1 = PolyMatrix.parse(["11 101"])
TVECE_P2 = PolyMatrix.parse(["1 11 0 1", "01 0 1 1"])


def square(side, max_deg=3):
    entry = st.integers(0, (1 << (max_deg + 1)) - 1).map(Poly)
    return st.lists(entry, min_size=side * side, max_size=side * side).map(
        lambda es: PolyMatrix(side, side, es)
    )


def test_shape_validation():
    with pytest.raises(ValueError):
        PolyMatrix(2, 2, [ONE] * 3)
    with pytest.raises(ValueError):
        PolyMatrix.from_rows([[ONE, ONE], [ONE]])


def test_determinant_examples():
    assert determinant(PolyMatrix.parse(["11 101", "0 1"])) == P("11")
    for n in (1, 3, 6):
        assert determinant(PolyMatrix.identity(n)) == ONE
    assert determinant(PolyMatrix.parse(["1 1", "1 1"])) == ZERO


def test_determinant_errors():
    with pytest.raises(ValueError):
        determinant(EQ1)
    with pytest.raises(ValueError):
        determinant(PolyMatrix.identity(MAX_DET_SIDE + 1))


def test_determinant_at_side_limit():
    assert determinant(PolyMatrix.identity(MAX_DET_SIDE)) == ONE


def test_all_minors():
    assert all_minors(EQ1, 1) == [P("11"), P("101")]
    minors = all_minors(TVECE_P2, 2)
    assert len(minors) == 6
    # column pairs (0,1) (0,2) (0,3) (1,2) (1,3) (2,3), cross-checked by Leibniz
    assert minors == [P("011"), P("1"), P("11"), P("11"), P("11"), P("1")]
    m = PolyMatrix.parse(["11 0", "1 101"])
    assert all_minors(m, 2) == [determinant(m)]
    with pytest.raises(ValueError):
        all_minors(EQ1, 2)


def test_minor_gcd():
    assert minor_gcd(EQ1, 1) == P("11")
    assert minor_gcd(TVECE_P2, 2) == ONE
    assert minor_gcd(PolyMatrix.identity(2), 2) == ONE
    with pytest.raises(RankDeficient):
        minor_gcd(PolyMatrix.parse(["1 1 0", "1 1 0"]), 2)


def test_coefficient_slice():
    assert coefficient_slice(EQ1, 0).tolist() == [[1, 1]]
    assert coefficient_slice(EQ1, 1).tolist() == [[1, 0]]
    assert coefficient_slice(EQ1, 2).tolist() == [[0, 1]]
    assert coefficient_slice(EQ1, 9).tolist() == [[0, 0]]


def test_slice_reconstruction(rng):
    for _ in range(50):
        r, c = rng.integers(1, 5, size=2)
        m = PolyMatrix(int(r), int(c), [Poly(int(v)) for v in rng.integers(0, 64, size=r * c)])
        top = max(int(m.max_degree()), 0)
        assert PolyMatrix.from_slices([coefficient_slice(m, j) for j in range(top + 1)]) == m


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.tuples(square(n), square(n))))
def test_determinant_multiplicative(pair):
    a, b = pair
    assert determinant(a @ b) == determinant(a) * determinant(b)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5).flatmap(square))
def test_determinant_matches_leibniz(m):
    assert determinant(m) == leibniz_det(m.tolist())


def test_minor_count_and_divisibility(rng):
    for _ in range(40):
        rows, cols = int(rng.integers(1, 4)), int(rng.integers(1, 6))
        m = PolyMatrix(rows, cols, [Poly(int(v)) for v in rng.integers(0, 16, size=rows * cols)])
        order = int(rng.integers(1, min(rows, cols) + 1))
        minors = all_minors(m, order)
        assert len(minors) == comb(rows, order) * comb(cols, order)
        if any(minors):
            g = minor_gcd(m, order)
            assert all(x % g == ZERO for x in minors)


def test_matmul_shape_check():
    with pytest.raises(ValueError):
        EQ1 @ EQ1
    assert (EQ1 @ PolyMatrix.parse(["1", "1"])) == PolyMatrix.parse(["011"])


def test_coefficient_slice_dtype():
    assert coefficient_slice(EQ1, 0).dtype == np.uint8
