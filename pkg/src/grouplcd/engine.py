"""Vectorized batch pipeline for the binary symmetric-element search.

Candidates are integers whose big-endian bits are the free coefficients
on the inverse-pair orbits, so ascending integer order is lexicographic
order on coefficient vectors.  For each batch the engine materializes
every group matrix as packed uint64 rows, runs a batched Gauss-Jordan
elimination to get ranks and canonical bases, and keeps the candidates
whose matrix rank equals the rank of its Gram matrix: for row spaces
over F2 the hull dimension is exactly that rank gap, so the test is the
complementary-dual condition with no explicit dual computation.

Only the binary ring and orders up to 64 go through here; everything
else takes the plain per-element path in `search`, which doubles as the
cross-validation oracle for this engine.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .gf2 import BitMatrix
from .groups import GroupTable, inverse_pair_orbits

MAX_ENGINE_ORDER = 64


@dataclass(frozen=True)
class BatchResult:
    """Survivors of one candidate batch, keyed by canonical basis."""

    # canonical basis bytes -> (candidate integer, rank, basis rows)
    found: dict[bytes, tuple[int, int, tuple[int, ...]]]
    n_candidates: int


def _position_tables(group: GroupTable) -> tuple[np.ndarray, np.ndarray]:
    """Coefficient-position table P (entry (i,j) = pos of g_i^-1 g_j) and
    the per-position candidate bit shift."""
    n = group.order
    mul = np.array(group.mul, dtype=np.int64)
    inv = np.array(group.inv, dtype=np.int64)
    p = mul[inv, :]
    orbits = inverse_pair_orbits(group)
    shift = np.zeros(n, dtype=np.uint64)
    n_orb = len(orbits)
    for t, orbit in enumerate(orbits):
        for pos in orbit:
            shift[pos] = n_orb - 1 - t
    return p, shift


def _build_matrices(candidates: np.ndarray, p: np.ndarray, shift: np.ndarray) -> np.ndarray:
    """Packed group-matrix rows for every candidate: shape (B, n)."""
    n = p.shape[0]
    coeff_bits = (candidates[:, None] >> shift[None, :]) & np.uint64(1)  # (B, n)
    entry_bits = coeff_bits[:, p.reshape(-1)].reshape(-1, n, n)  # (B, n, n)
    col_weights = np.left_shift(np.uint64(1), np.arange(n, dtype=np.uint64))
    return (entry_bits * col_weights[None, None, :]).sum(axis=2, dtype=np.uint64)


def _gram_rows(rows: np.ndarray) -> np.ndarray:
    """Packed rows of M Mt per candidate; entry (i,j) = parity <row_i, row_j>."""
    b, n = rows.shape
    out = np.zeros((b, n), dtype=np.uint64)
    for j in range(n):
        parity = np.bitwise_count(rows & rows[:, j : j + 1]) & np.uint64(1)  # (B, n)
        out |= parity << np.uint64(j)
    return out


def _eliminate(rows: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """In-place batched Gauss-Jordan; returns (reduced rows, ranks)."""
    b, n = rows.shape
    used = np.zeros((b, n), dtype=bool)
    arange_b = np.arange(b)
    for col in range(n):
        bit = np.uint64(1) << np.uint64(col)
        has = (rows & bit) != 0
        candidates = has & ~used
        any_pivot = candidates.any(axis=1)
        pivot_idx = candidates.argmax(axis=1)
        pivot_rows = rows[arange_b, pivot_idx]
        eliminate = has & any_pivot[:, None]
        eliminate[arange_b, pivot_idx] = False
        rows ^= np.where(eliminate, pivot_rows[:, None], np.uint64(0))
        used[arange_b, pivot_idx] |= any_pivot
    return rows, used.sum(axis=1).astype(np.int64)


def _canonical_bases(reduced: np.ndarray) -> np.ndarray:
    """Sort reduced rows by pivot column; zero rows sink to the end."""
    lowest = reduced & (~reduced + np.uint64(1))
    key = np.where(reduced == 0, np.uint64(0xFFFFFFFFFFFFFFFF), lowest)
    order = np.argsort(key, axis=1, kind="stable")
    return np.take_along_axis(reduced, order, axis=1)


def run_batch(
    candidates: np.ndarray,
    p: np.ndarray,
    shift: np.ndarray,
    include_trivial: bool,
) -> BatchResult:
    """Filter one batch of candidate integers down to LCD survivors."""
    n = p.shape[0]
    rows = _build_matrices(candidates, p, shift)
    gram = _gram_rows(rows)
    reduced, rank_m = _eliminate(rows)
    _, rank_gram = _eliminate(gram)
    lcd = rank_m == rank_gram
    if not include_trivial:
        lcd &= (rank_m != 0) & (rank_m != n)
    found: dict[bytes, tuple[int, int, tuple[int, ...]]] = {}
    if lcd.any():
        survivors = np.flatnonzero(lcd)
        bases = _canonical_bases(reduced[survivors])
        ranks = rank_m[survivors]
        for i, cand_idx in enumerate(survivors):
            r = int(ranks[i])
            key = bases[i, :r].tobytes()
            if key not in found:
                basis_rows = tuple(int(x) for x in bases[i, :r])
                found[key] = (int(candidates[cand_idx]), r, basis_rows)
    return BatchResult(found, len(candidates))


def iter_batches(total: int, batch_size: int = 4096) -> Iterator[np.ndarray]:
    start = 0
    while start < total:
        stop = min(start + batch_size, total)
        yield np.arange(start, stop, dtype=np.uint64)
        start = stop


def search_symmetric_lcd_binary(
    group: GroupTable,
    include_trivial: bool = False,
    batch_size: int = 4096,
    n_workers: int = 1,
) -> dict[bytes, tuple[int, int, tuple[int, ...]]]:
    """All distinct LCD codes over the symmetric binary candidates.

    Returns canonical-basis keys mapped to (smallest candidate integer,
    rank, basis rows).  Work splits into contiguous batches; the merge
    keeps the smallest candidate per code, so chunked, parallel, and
    serial runs agree.
    """
    if group.order > MAX_ENGINE_ORDER:
        raise ValueError("engine handles orders up to 64")
    p, shift = _position_tables(group)
    n_orb = len(inverse_pair_orbits(group))
    total = 1 << n_orb
    merged: dict[bytes, tuple[int, int, tuple[int, ...]]] = {}
    if n_workers > 1:
        from concurrent.futures import ProcessPoolExecutor

        spans = [
            (s, min(s + batch_size, total)) for s in range(0, total, batch_size)
        ]
        with ProcessPoolExecutor(max_workers=n_workers) as pool:
            results = pool.map(
                _run_span,
                [(group, s, e, include_trivial) for s, e in spans],
                chunksize=max(1, len(spans) // (8 * n_workers)),
            )
            for result in results:
                _merge(merged, result.found)
        return merged
    for batch in iter_batches(total, batch_size):
        result = run_batch(batch, p, shift, include_trivial)
        _merge(merged, result.found)
    return merged


def _run_span(args: tuple[GroupTable, int, int, bool]) -> BatchResult:
    group, start, stop, include_trivial = args
    p, shift = _position_tables(group)
    return run_batch(np.arange(start, stop, dtype=np.uint64), p, shift, include_trivial)


def _merge(
    into: dict[bytes, tuple[int, int, tuple[int, ...]]],
    new: dict[bytes, tuple[int, int, tuple[int, ...]]],
) -> None:
    for key, value in new.items():
        old = into.get(key)
        if old is None or value[0] < old[0]:
            into[key] = value


def basis_matrix(entry: tuple[int, int, tuple[int, ...]], n: int) -> BitMatrix:
    return BitMatrix(entry[2], n)
