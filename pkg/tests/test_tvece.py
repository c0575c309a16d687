import math

import numpy as np
import pytest

from helpers import random_periodic
from tvcc.encoder import PeriodicEncoder, TimeInvariantEncoder, encode_serial
from tvcc.polymatrix import PolyMatrix
from tvcc.tvece import (
    block_input,
    build_tvece,
    deserialize,
    encode_via_tvece,
    serialize,
    unblock_output,
)


def test_period_one_is_identity(rng):
    for _ in range(20):
        e = random_periodic(rng, p_max=1)
        assert build_tvece(e).encoder.g == e.constituents[0].g


def test_worked_p2_example(alt_p2):
    tv = build_tvece(alt_p2)
    assert tv.encoder.g == PolyMatrix.parse(["1 11 0 1", "01 0 1 1"])
    assert tv.encoder.memory == 1
    assert tv.source_p == 2


@pytest.mark.parametrize("p, m, m_star", [(2, 3, 2), (3, 3, 1), (1, 4, 4), (4, 1, 1), (3, 0, 0)])
def test_memory_formula(p, m, m_star):
    # both forms of the memory count: ceil((m+p)/p) - 1 and ceil(m/p)
    assert math.ceil((m + p) / p) - 1 == m_star == math.ceil(m / p)
    top = "1" + "0" * (m - 1) + "1" if m else "1"
    e = PeriodicEncoder(tuple(TimeInvariantEncoder.parse(f"{top} 1") for _ in range(p)))
    tv = build_tvece(e)
    assert tv.memory_bound == m_star
    assert tv.encoder.memory == m_star


def test_rate_and_memory_bound(rng):
    for _ in range(300):
        e = random_periodic(rng, p_max=4, k_max=2, n_max=3, m_max=4)
        tv = build_tvece(e)
        assert tv.encoder.g.shape == (e.k * e.p, e.n * e.p)
        assert tv.encoder.memory <= math.ceil(e.memory / e.p)
        if e.constituents[0].memory == e.memory:
            # a top-degree tap in the first constituent lands in the last block
            assert tv.encoder.memory == math.ceil(e.memory / e.p)


def test_strict_sense_equivalence(rng):
    for _ in range(500):
        e = random_periodic(rng, p_max=4, k_max=2, n_max=3, m_max=4)
        length = int(rng.integers(0, 16 * e.p + 1))
        u = rng.integers(0, 2, size=(length, e.k), dtype=np.uint8)
        assert np.array_equal(encode_via_tvece(e, u), encode_serial(e, u))


def test_serialize_round_robin():
    a = np.array([[1], [0]], dtype=np.uint8)
    b = np.array([[0], [1]], dtype=np.uint8)
    assert serialize([a, b]).ravel().tolist() == [1, 0, 0, 1]
    assert np.array_equal(serialize([a]), a)
    for p in (1, 2, 3):
        streams = [np.random.default_rng(p + i).integers(0, 2, (5, 2), dtype=np.uint8)
                   for i in range(p)]
        back = deserialize(serialize(streams), p)
        assert all(np.array_equal(x, y) for x, y in zip(back, streams))


def test_serialize_errors():
    with pytest.raises(ValueError):
        serialize([np.zeros((2, 1)), np.zeros((3, 1))])
    with pytest.raises(ValueError):
        deserialize(np.zeros((5, 1)), 2)


def test_serialization_is_substitution_identity(rng):
    # I_E(D) = I_1(D^p) + D I_2(D^p) + ... + D^(p-1) I_p(D^p)
    from tvcc.gf2poly import Poly, inflate

    for p in (1, 2, 3, 4):
        streams = [rng.integers(0, 2, (6, 1), dtype=np.uint8) for _ in range(p)]
        total = Poly(0)
        for i, s in enumerate(streams):
            total = total + Poly.monomial(i) * inflate(Poly.from_coeffs(s.ravel()), p)
        assert Poly.from_coeffs(serialize(streams).ravel()) == total


def test_block_input():
    u = np.array([[1], [0], [1], [1]], dtype=np.uint8)
    assert block_input(u, 2).tolist() == [[1, 0], [1, 1]]
    assert block_input(u[:3], 2).tolist() == [[1, 0], [1, 0]]
    assert np.array_equal(block_input(u, 1), u)
    v = np.arange(8, dtype=np.uint8).reshape(2, 4) % 2
    assert unblock_output(v, 2).tolist() == [[0, 1], [0, 1], [0, 1], [0, 1]]
