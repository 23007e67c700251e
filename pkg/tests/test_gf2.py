"""Unit tests for the GF(2) kernel, checked against brute-force oracles."""

import random

import pytest

from grouplcd.gf2 import (
    BitMatrix,
    identity,
    intersect_row_spaces,
    min_weight,
    null_space,
    pack_row,
    rank,
    rref,
    unpack_row,
)


def span(rows, n_cols):
    """Oracle: the full row space as a set of packed vectors."""
    out = {0}
    for r in rows:
        out |= {x ^ r for x in out}
    return out


def random_matrix(rng, n_rows, n_cols):
    return BitMatrix(tuple(rng.getrandbits(n_cols) for _ in range(n_rows)), n_cols)


def test_pack_unpack_roundtrip():
    assert pack_row([1, 0, 1, 1]) == 0b1101
    assert unpack_row(0b1101, 4) == [1, 0, 1, 1]
    assert unpack_row(pack_row([0, 0, 1]), 3) == [0, 0, 1]


def test_row_width_checked():
    with pytest.raises(ValueError):
        BitMatrix((0b100,), 2)


def test_transpose_and_add():
    m = BitMatrix.from_lists([[1, 1, 0], [0, 1, 1]])
    t = m.transpose()
    assert t.to_lists() == [[1, 0], [1, 1], [0, 1]]
    assert (m + m).rows == (0, 0)


def test_matmul_against_entrywise_oracle():
    rng = random.Random(11)
    for _ in range(200):
        rows_a, inner, cols_b = rng.randint(1, 6), rng.randint(1, 6), rng.randint(1, 6)
        a = random_matrix(rng, rows_a, inner)
        b = random_matrix(rng, inner, cols_b)
        prod = a @ b
        al, bl = a.to_lists(), b.to_lists()
        for i in range(rows_a):
            for j in range(cols_b):
                expect = sum(al[i][t] * bl[t][j] for t in range(inner)) % 2
                assert (prod.rows[i] >> j) & 1 == expect


def test_rref_is_canonical_and_preserves_row_space():
    rng = random.Random(23)
    for _ in range(300):
        n_rows, n_cols = rng.randint(1, 7), rng.randint(1, 9)
        m = random_matrix(rng, n_rows, n_cols)
        ech = rref(m)
        assert span(ech.matrix.rows, n_cols) == span(m.rows, n_cols)
        assert ech.rank == ech.matrix.n_rows
        assert 0 not in ech.matrix.rows
        # Pivot columns strictly increase and each pivot column is cleared
        # everywhere else.
        assert list(ech.pivot_cols) == sorted(ech.pivot_cols)
        for i, col in enumerate(ech.pivot_cols):
            for i2, row in enumerate(ech.matrix.rows):
                assert (row >> col) & 1 == (1 if i2 == i else 0)
        # Same row space always reduces to the same rows.
        shuffled = list(m.rows)
        rng.shuffle(shuffled)
        if len(shuffled) >= 2:
            shuffled[0] ^= shuffled[1]
        assert rref(BitMatrix(tuple(shuffled), n_cols)).matrix.rows == ech.matrix.rows


def test_rank_matches_span_size():
    rng = random.Random(37)
    for _ in range(200):
        n_rows, n_cols = rng.randint(1, 7), rng.randint(1, 9)
        m = random_matrix(rng, n_rows, n_cols)
        assert 1 << rank(m) == len(span(m.rows, n_cols))


def test_null_space_is_exact_kernel():
    rng = random.Random(41)
    for _ in range(200):
        n_rows, n_cols = rng.randint(1, 6), rng.randint(1, 8)
        m = random_matrix(rng, n_rows, n_cols)
        ns = null_space(m)
        kernel = {
            x
            for x in range(1 << n_cols)
            if all((x & r).bit_count() % 2 == 0 for r in m.rows)
        }
        assert span(ns.rows, n_cols) == kernel
        assert ns.n_rows == n_cols - rank(m)


def test_intersection_matches_set_intersection():
    rng = random.Random(53)
    for _ in range(200):
        n_cols = rng.randint(1, 8)
        a = random_matrix(rng, rng.randint(1, 5), n_cols)
        b = random_matrix(rng, rng.randint(1, 5), n_cols)
        inter = intersect_row_spaces(a, b)
        expect = span(a.rows, n_cols) & span(b.rows, n_cols)
        assert span(inter.rows, n_cols) == expect


def test_identity_facts():
    i4 = identity(4)
    assert rank(i4) == 4
    assert null_space(i4).n_rows == 0
    assert min_weight(i4) == 1


def test_min_weight_small_oracle():
    rng = random.Random(67)
    for _ in range(150):
        n_rows, n_cols = rng.randint(1, 6), rng.randint(1, 10)
        m = random_matrix(rng, n_rows, n_cols)
        if rank(m) == 0:
            continue
        expect = min(w.bit_count() for w in span(m.rows, n_cols) if w)
        assert min_weight(m, strategy="enumerate") == expect
        assert min_weight(m, strategy="information-set") == expect


def test_min_weight_strategies_agree_on_larger_codes():
    rng = random.Random(79)
    for _ in range(40):
        n_cols = rng.randint(20, 40)
        n_rows = rng.randint(10, 20)
        m = random_matrix(rng, n_rows, n_cols)
        if rank(m) == 0:
            continue
        assert min_weight(m, strategy="enumerate") == min_weight(m, strategy="information-set")


def test_min_weight_numpy_block_path():
    # Force the vectorized path (rank > 12) and compare with the plain walk.
    rng = random.Random(83)
    for _ in range(10):
        m = random_matrix(rng, 14, 30)
        ech = rref(m).matrix
        best = min(w.bit_count() for w in span(ech.rows, 30) if w)
        assert min_weight(m, strategy="enumerate") == best


def test_min_weight_rejects_zero_code():
    with pytest.raises(ValueError):
        min_weight(BitMatrix((0, 0), 3))


def test_repetition_and_parity_codes():
    rep = BitMatrix.from_lists([[1, 1, 1, 1, 1]])
    assert min_weight(rep) == 5
    parity = null_space(rep)
    assert parity.n_rows == 4
    assert min_weight(parity) == 2
    # The repetition code sits inside the parity-check code for even length.
    even = BitMatrix.from_lists([[1, 1, 1, 1, 1, 1]])
    inter = intersect_row_spaces(even, null_space(even))
    assert inter.rows == even.rows
