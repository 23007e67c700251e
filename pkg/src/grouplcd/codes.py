"""Binary linear codes with the predicates the search filters on.

A code is held as its reduced-echelon basis, which doubles as the
canonical identity: two codes are equal exactly when their bases match
row for row.  Hull and dual computations stay in exact bit-packed
arithmetic; the minimum distance is computed lazily and cached.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional

from .gf2 import BitMatrix, intersect_row_spaces, min_weight, null_space, rank, rref
from .groups import GroupTable


@dataclass(frozen=True)
class LinearCode:
    """Row space of a binary matrix, stored as its RREF basis."""

    basis: BitMatrix

    def __post_init__(self):
        ech = rref(self.basis)
        if ech.matrix.rows != self.basis.rows:
            raise ValueError("basis must be in reduced echelon form; use from_rows")

    @classmethod
    def from_rows(cls, m: BitMatrix) -> "LinearCode":
        return cls(rref(m).matrix)

    @property
    def length(self) -> int:
        return self.basis.n_cols

    @property
    def dimension(self) -> int:
        return self.basis.n_rows

    @cached_property
    def min_distance(self) -> int:
        return min_weight(self.basis)

    def params(self) -> tuple[int, int, Optional[int]]:
        if self.dimension == 0:
            return (self.length, 0, None)
        return (self.length, self.dimension, self.min_distance)

    def contains(self, word: int) -> bool:
        for row in self.basis.rows:
            pivot = (row & -row).bit_length() - 1
            if (word >> pivot) & 1:
                word ^= row
        return word == 0

    def dual(self) -> "LinearCode":
        return LinearCode(null_space(self.basis))

    def hull(self) -> "LinearCode":
        return LinearCode(intersect_row_spaces(self.basis, null_space(self.basis)))

    def is_lcd(self) -> bool:
        return self.hull().dimension == 0

    def is_reversible(self, alpha: int = 1) -> bool:
        """True when reversing the order of width-alpha blocks preserves
        the code; checking basis rows suffices by linearity."""
        n = self.length
        if alpha < 1 or n % alpha:
            raise ValueError("block width must divide the length")
        blocks = n // alpha
        mask = (1 << alpha) - 1
        for row in self.basis.rows:
            rev = 0
            for t in range(blocks):
                rev |= ((row >> (t * alpha)) & mask) << ((blocks - 1 - t) * alpha)
            if not self.contains(rev):
                return False
        return True

    def is_invariant_under(self, group: GroupTable) -> bool:
        """True when left translation by every group element fixes the code.

        Coordinate j of the permuted word lands at the position of
        g_p * g_j, for each listing position p.
        """
        if self.length != group.order:
            raise ValueError("code length must equal the group order")
        n = group.order
        for p in range(n):
            row_p = group.mul[p]
            for row in self.basis.rows:
                moved = 0
                for j in range(n):
                    if (row >> j) & 1:
                        moved |= 1 << row_p[j]
                if not self.contains(moved):
                    return False
        return True


def lcd_by_gram_determinant(gen: BitMatrix) -> bool:
    """LCD test for a full-rank generator: the Gram matrix is invertible.

    Independent of the hull route; used for cross-validation.
    """
    k = gen.n_rows
    if rank(gen) != k:
        raise ValueError("generator must have independent rows")
    return rank(gen @ gen.transpose()) == k


def hull_dimension_from_rows(m: BitMatrix) -> int:
    """Hull dimension of the row space straight from the (possibly
    redundant) matrix: rank(M) - rank(M Mt).

    Over F2 the hull is the image of the Gram kernel, so its dimension
    is the rank drop from M to M Mt.  Works for any M; this is the
    search engine's screen.
    """
    return rank(m) - rank(m @ m.transpose())


@dataclass(frozen=True)
class CodeRecord:
    """One search survivor: canonical code plus how it was produced."""

    code: LinearCode
    group: str
    listing: str
    ring: str
    v_bits: str
    lcd: bool
    reversible: bool
    g_invariant: bool = field(compare=False, default=True)

    @property
    def n(self) -> int:
        return self.code.length

    @property
    def k(self) -> int:
        return self.code.dimension

    @property
    def d(self) -> Optional[int]:
        return None if self.k == 0 else self.code.min_distance

    def to_json_dict(self) -> dict:
        return {
            "group": self.group,
            "listing": self.listing,
            "ring": self.ring,
            "v_bits": self.v_bits,
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "lcd": self.lcd,
            "reversible": self.reversible,
            "basis_rows_hex": [f"{row:x}" for row in self.code.basis.rows],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "CodeRecord":
        rows = tuple(int(h, 16) for h in data["basis_rows_hex"])
        code = LinearCode(BitMatrix(rows, data["n"]))
        if code.dimension != data["k"]:
            raise ValueError("stored dimension does not match the basis")
        if data["d"] is not None and code.min_distance != data["d"]:
            raise ValueError("stored distance does not match the basis")
        return cls(
            code=code,
            group=data["group"],
            listing=data["listing"],
            ring=data["ring"],
            v_bits=data["v_bits"],
            lcd=data["lcd"],
            reversible=data["reversible"],
        )


RECORD_JSON_SCHEMA = {
    "type": "object",
    "required": [
        "group",
        "listing",
        "ring",
        "v_bits",
        "n",
        "k",
        "d",
        "lcd",
        "reversible",
        "basis_rows_hex",
    ],
    "additionalProperties": False,
    "properties": {
        "group": {"type": "string"},
        "listing": {"type": "string"},
        "ring": {"type": "string"},
        "v_bits": {"type": "string", "pattern": "^[01]*$"},
        "n": {"type": "integer", "minimum": 1},
        "k": {"type": "integer", "minimum": 0},
        "d": {"type": ["integer", "null"], "minimum": 1},
        "lcd": {"type": "boolean"},
        "reversible": {"type": "boolean"},
        "basis_rows_hex": {
            "type": "array",
            "items": {"type": "string", "pattern": "^[0-9a-f]+$"},
        },
    },
}
