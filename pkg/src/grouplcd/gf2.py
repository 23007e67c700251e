"""Exact linear algebra over GF(2) on word-packed bit rows.

Rows are stored as Python integers: bit ``j`` of a row is the entry in
column ``j``.  Python integers are arbitrary precision, so the same code
handles any column count; the search paths in this package stay below 128
columns.  All operations are pure functions on immutable inputs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

# Full codeword enumeration is used up to this dimension (< ~16M words);
# larger codes go through information-set enumeration.
ENUMERATION_LIMIT = 24


@dataclass(frozen=True)
class BitMatrix:
    """A binary matrix with rows packed into integers (bit j = column j)."""

    rows: tuple[int, ...]
    n_cols: int

    def __post_init__(self):
        if self.n_rows and self.n_cols < 1:
            raise ValueError("matrix with rows must have at least one column")
        mask = (1 << self.n_cols) - 1
        for r in self.rows:
            if r & ~mask:
                raise ValueError("row has bits outside the declared width")

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @classmethod
    def from_lists(cls, entries: Sequence[Sequence[int]], n_cols: int | None = None) -> "BitMatrix":
        rows = tuple(pack_row(e) for e in entries)
        if n_cols is None:
            n_cols = len(entries[0]) if entries else 0
        return cls(rows, n_cols)

    def to_lists(self) -> list[list[int]]:
        return [unpack_row(r, self.n_cols) for r in self.rows]

    def transpose(self) -> "BitMatrix":
        cols = []
        for j in range(self.n_cols):
            c = 0
            for i, r in enumerate(self.rows):
                c |= ((r >> j) & 1) << i
            cols.append(c)
        return BitMatrix(tuple(cols), self.n_rows)

    def __add__(self, other: "BitMatrix") -> "BitMatrix":
        if (self.n_rows, self.n_cols) != (other.n_rows, other.n_cols):
            raise ValueError("shape mismatch")
        return BitMatrix(tuple(a ^ b for a, b in zip(self.rows, other.rows)), self.n_cols)

    def __matmul__(self, other: "BitMatrix") -> "BitMatrix":
        if self.n_cols != other.n_rows:
            raise ValueError("shape mismatch")
        out = []
        for r in self.rows:
            acc = 0
            while r:
                low = r & -r
                acc ^= other.rows[low.bit_length() - 1]
                r ^= low
            out.append(acc)
        return BitMatrix(tuple(out), other.n_cols)

    def __str__(self) -> str:
        return "\n".join("".join(str(b) for b in unpack_row(r, self.n_cols)) for r in self.rows)


@dataclass(frozen=True)
class EchelonForm:
    """Reduced row echelon form: nonzero rows only, pivots ascending."""

    matrix: BitMatrix
    rank: int
    pivot_cols: tuple[int, ...]


def pack_row(entries: Iterable[int]) -> int:
    row = 0
    for j, e in enumerate(entries):
        if e & 1:
            row |= 1 << j
    return row


def unpack_row(row: int, n_cols: int) -> list[int]:
    return [(row >> j) & 1 for j in range(n_cols)]


def identity(n: int) -> BitMatrix:
    return BitMatrix(tuple(1 << i for i in range(n)), n)


def rref(m: BitMatrix) -> EchelonForm:
    """Reduced row echelon form with topmost-leftmost pivot selection.

    The returned matrix keeps only the nonzero rows, ordered by pivot
    column; this is the canonical form used for code identity.
    """
    work = list(m.rows)
    pivot_rows: list[int] = []
    pivot_cols: list[int] = []
    taken = [False] * len(work)
    for col in range(m.n_cols):
        pivot = None
        for i, r in enumerate(work):
            if not taken[i] and (r >> col) & 1:
                pivot = i
                break
        if pivot is None:
            continue
        taken[pivot] = True
        p = work[pivot]
        for i, r in enumerate(work):
            if i != pivot and (r >> col) & 1:
                work[i] = r ^ p
        pivot_rows.append(pivot)
        pivot_cols.append(col)
    rows = tuple(work[i] for i in pivot_rows)
    return EchelonForm(BitMatrix(rows, m.n_cols), len(rows), tuple(pivot_cols))


def rank(m: BitMatrix) -> int:
    return rref(m).rank


def null_space(m: BitMatrix) -> BitMatrix:
    """Basis of { x : m x^T = 0 }, one row per free column, in RREF."""
    ech = rref(m)
    pivots = set(ech.pivot_cols)
    vectors = []
    for free in range(m.n_cols):
        if free in pivots:
            continue
        x = 1 << free
        for row, pcol in zip(ech.matrix.rows, ech.pivot_cols):
            if (row >> free) & 1:
                x |= 1 << pcol
        vectors.append(x)
    return rref(BitMatrix(tuple(vectors), m.n_cols)).matrix


def intersect_row_spaces(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """RREF basis of the intersection of two row spaces.

    Computed as the dual of the sum of the duals, which is exact over
    GF(2): (A ∩ B) = (A⊥ + B⊥)⊥.
    """
    if a.n_cols != b.n_cols:
        raise ValueError(f"column counts differ: {a.n_cols} != {b.n_cols}")
    na = null_space(a)
    nb = null_space(b)
    stacked = BitMatrix(na.rows + nb.rows, a.n_cols)
    return null_space(stacked)


def min_weight(gen: BitMatrix, strategy: str = "auto") -> int:
    """Exact minimum Hamming weight of the nonzero row-space vectors.

    ``strategy`` selects the path: "enumerate" walks all 2^k codewords,
    "information-set" runs information-set enumeration with a proven
    lower-bound cutoff, "auto" picks by rank.  Both paths are exact.
    """
    basis = rref(gen).matrix
    k = basis.n_rows
    if k == 0:
        raise ValueError("zero code has no minimum weight")
    if strategy == "auto":
        strategy = "enumerate" if k <= ENUMERATION_LIMIT else "information-set"
    if strategy == "enumerate":
        return _min_weight_enumerate(basis)
    if strategy == "information-set":
        return _min_weight_information_set(basis)
    raise ValueError(f"unknown strategy {strategy!r}")


def _min_weight_enumerate(basis: BitMatrix) -> int:
    """Walk every nonzero codeword; vectorized with numpy when wide enough."""
    k = basis.n_rows
    if basis.n_cols <= 64 and k > 12:
        return _min_weight_enumerate_np(basis)
    best = basis.n_cols
    acc = 0
    for i in range(1, 1 << k):
        acc ^= basis.rows[(i & -i).bit_length() - 1]
        w = acc.bit_count()
        if w < best:
            best = w
    return best


def _min_weight_enumerate_np(basis: BitMatrix) -> int:
    rows = np.array(basis.rows, dtype=np.uint64)
    k = len(rows)
    base_bits = min(k, 20)
    # All combinations of the first base_bits rows, by doubling.
    block = np.zeros(1, dtype=np.uint64)
    for i in range(base_bits):
        block = np.concatenate([block, block ^ rows[i]])
    best = int(np.bitwise_count(block[1:]).min()) if base_bits == k else basis.n_cols
    if base_bits < k:
        high = rows[base_bits:]
        acc = np.uint64(0)
        for i in range(1, 1 << (k - base_bits)):
            acc = acc ^ high[(i & -i).bit_length() - 1]
            w = int(np.bitwise_count(block ^ acc).min())
            if w < best:
                best = w
        w0 = int(np.bitwise_count(block[1:]).min())
        best = min(best, w0)
    return best


def _systematic_form(rows: list[int], preferred: list[int], n_cols: int) -> tuple[list[int], list[int]]:
    """Row-reduce choosing pivots from ``preferred`` columns first.

    Returns the reduced rows (same row space) and the pivot columns that
    landed inside ``preferred``.
    """
    work = list(rows)
    taken = [False] * len(work)
    inside: list[int] = []
    order = preferred + [c for c in range(n_cols) if c not in set(preferred)]
    for col in order:
        pivot = None
        for i, r in enumerate(work):
            if not taken[i] and (r >> col) & 1:
                pivot = i
                break
        if pivot is None:
            continue
        taken[pivot] = True
        p = work[pivot]
        for i, r in enumerate(work):
            if i != pivot and (r >> col) & 1:
                work[i] = r ^ p
        if col in set(preferred):
            inside.append(col)
    return work, inside


def _min_weight_information_set(basis: BitMatrix) -> int:
    """Information-set enumeration with an exact lower-bound cutoff.

    Builds a chain of systematic generator matrices on disjoint column
    sets.  After enumerating all row combinations of size <= w in every
    matrix, any unseen codeword must weigh at least
    sum_i max(0, w + 1 - (k - rank_i)), so the search stops as soon as
    that bound reaches the best weight found.
    """
    k = basis.n_rows
    n = basis.n_cols
    remaining = list(range(n))
    matrices: list[tuple[list[int], int]] = []
    while remaining:
        reduced, inside = _systematic_form(list(basis.rows), remaining, n)
        if not inside:
            break
        matrices.append((reduced, len(inside)))
        used = set(inside)
        remaining = [c for c in remaining if c not in used]

    best = min(r.bit_count() for r in basis.rows)
    for w in range(1, k + 1):
        lower = sum(max(0, w - (k - r_i)) for _, r_i in matrices)
        if lower >= best:
            return best
        for rows, _ in matrices:
            for combo in itertools.combinations(range(k), w):
                acc = 0
                for i in combo:
                    acc ^= rows[i]
                wt = acc.bit_count()
                if wt and wt < best:
                    best = wt
        lower = sum(max(0, w + 1 - (k - r_i)) for _, r_i in matrices)
        if lower >= best:
            return best
    return best
