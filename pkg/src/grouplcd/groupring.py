"""Group-ring elements and the group matrix they generate.

An element is a coefficient vector over a fixed group listing; the group
matrix has (i, j) entry equal to the coefficient of g_i^-1 g_j, so its
row i is the coefficient vector of g_i * v.  Over F2 the matrix is
returned bit-packed; over the larger rings it is a tuple of coefficient
rows.  Closed-form constructors reproduce the circulant and block shapes
that the matrix takes when v equals its canonical involution.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .gf2 import BitMatrix, null_space, pack_row
from .groups import GroupTable, inverse_pair_orbits
from .rings import GrayRing

F2 = GrayRing(0)


@dataclass(frozen=True)
class GroupRingElement:
    """Coefficient vector over a group listing: coeffs[i] multiplies g_i."""

    group: GroupTable
    ring: GrayRing
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.group.order:
            raise ValueError("coefficient count must equal the group order")
        for c in self.coeffs:
            self.ring.check(c)

    @classmethod
    def zero(cls, group: GroupTable, ring: GrayRing = F2) -> "GroupRingElement":
        return cls(group, ring, (0,) * group.order)

    @classmethod
    def from_bits(cls, group: GroupTable, bits: int) -> "GroupRingElement":
        """Binary element from a support mask over listing positions."""
        return cls(group, F2, tuple((bits >> i) & 1 for i in range(group.order)))

    @classmethod
    def from_terms(cls, group: GroupTable, text: str, ring: GrayRing = F2) -> "GroupRingElement":
        """Parse "b+ab+a2b" or, over larger rings, "(1+u1)a2+b"."""
        coeffs = [0] * group.order
        text = text.strip()
        if text and text != "0":
            for term in _split_terms(text):
                if term.startswith("("):
                    close = term.index(")")
                    scalar = ring.parse_element(term[1:close])
                    label = term[close + 1 :]
                else:
                    scalar = ring.one
                    label = term
                pos = group.position(label)
                coeffs[pos] = ring.add(coeffs[pos], scalar)
        return cls(group, ring, tuple(coeffs))

    def to_terms(self) -> str:
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if c == self.ring.one:
                parts.append(self.group.label(i))
            else:
                parts.append(f"({self.ring.format_element(c)}){self.group.label(i)}")
        return "+".join(parts) if parts else "0"

    def support_bits(self) -> int:
        """Binary support mask; only meaningful over F2."""
        if self.ring.k != 0:
            raise ValueError("support mask is only defined over F2")
        return pack_row(self.coeffs)

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        self._check_compatible(other)
        return GroupRingElement(
            self.group,
            self.ring,
            tuple(self.ring.add(a, b) for a, b in zip(self.coeffs, other.coeffs)),
        )

    def __mul__(self, other: "GroupRingElement") -> "GroupRingElement":
        """Convolution over the group: coefficient of g_i g_j gets a_i b_j."""
        self._check_compatible(other)
        mul = self.group.mul
        ring = self.ring
        out = [0] * self.group.order
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            row = mul[i]
            for j, b in enumerate(other.coeffs):
                if b == 0:
                    continue
                k = row[j]
                out[k] = ring.add(out[k], ring.mul(a, b))
        return GroupRingElement(self.group, self.ring, tuple(out))

    def involution(self) -> "GroupRingElement":
        """Move each coefficient to the position of the inverse element."""
        out = [0] * self.group.order
        for i, a in enumerate(self.coeffs):
            out[self.group.inv[i]] = a
        return GroupRingElement(self.group, self.ring, tuple(out))

    def is_symmetric(self) -> bool:
        """True when the element equals its involution (v matches inverses)."""
        return all(self.coeffs[i] == self.coeffs[self.group.inv[i]] for i in range(self.group.order))

    def _check_compatible(self, other: "GroupRingElement") -> None:
        if self.group is not other.group and self.group != other.group:
            raise ValueError("elements live over different groups")
        if self.ring != other.ring:
            raise ValueError("elements live over different rings")


def _split_terms(text: str) -> list[str]:
    """Split on '+' at depth zero, so "(1+u1)a2+b" -> ["(1+u1)a2", "b"]."""
    terms = []
    depth = 0
    current = []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ValueError("unbalanced parentheses")
        if ch == "+" and depth == 0:
            terms.append("".join(current).strip())
            current = []
        else:
            current.append(ch)
    if depth:
        raise ValueError("unbalanced parentheses")
    terms.append("".join(current).strip())
    if any(not t for t in terms):
        raise ValueError(f"empty term in {text!r}")
    return terms


def group_matrix_rows(v: GroupRingElement) -> tuple[tuple[int, ...], ...]:
    """The n x n matrix with (i, j) entry coeffs[pos(g_i^-1 g_j)]."""
    mul = v.group.mul
    inv = v.group.inv
    c = v.coeffs
    return tuple(tuple(c[mul[inv[i]][j]] for j in range(v.group.order)) for i in range(v.group.order))


def group_matrix(v: GroupRingElement) -> BitMatrix:
    """Bit-packed group matrix; the element must be binary."""
    if v.ring.k != 0:
        raise ValueError("bit-packed matrix requires an F2 element")
    return BitMatrix(tuple(pack_row(row) for row in group_matrix_rows(v)), v.group.order)


def group_matrix_gray_image(v: GroupRingElement) -> BitMatrix:
    """Binary generator matrix of the Gray image of the matrix row span.

    The row span over the ring is, additively, spanned by all monomial
    multiples of the rows; mapping those through the Gray map gives a
    generator matrix of the binary image (length n * 2^k).
    """
    from .rings import gray_image_basis

    return gray_image_basis(v.ring, group_matrix_rows(v))


def right_annihilator_basis(v: GroupRingElement) -> BitMatrix:
    """Basis (as coefficient rows) of { w : v*w = 0 } for binary v.

    w ranges over the group ring; v*w is linear in w, with the
    coefficient of g_k in v*w equal to sum over i of a_i * w at position
    g_i^-1 g_k.  That matrix is the group matrix of the involution, so
    the annihilator is its kernel.
    """
    if v.ring.k != 0:
        raise ValueError("annihilator basis requires an F2 element")
    # Row k of the constraint system: coefficient of g_k in v*w.
    mul = v.group.mul
    n = v.group.order
    rows = []
    for k in range(n):
        row = 0
        for i, a in enumerate(v.coeffs):
            if a:
                # g_i * g_j = g_k  =>  j = pos(g_i^-1 g_k)
                j = mul[v.group.inv[i]][k]
                row ^= 1 << j
        rows.append(row)
    return null_space(BitMatrix(tuple(rows), n))


def symmetric_element(
    group: GroupTable, free_coeffs: Sequence[int], ring: GrayRing = F2
) -> GroupRingElement:
    """Element with the given value on each inverse-pair orbit, in order."""
    orbits = inverse_pair_orbits(group)
    if len(free_coeffs) != len(orbits):
        raise ValueError(f"expected {len(orbits)} free coefficients, got {len(free_coeffs)}")
    coeffs = [0] * group.order
    for value, orbit in zip(free_coeffs, orbits):
        for i in orbit:
            coeffs[i] = ring.check(value)
    return GroupRingElement(group, ring, tuple(coeffs))


class MatrixShape(enum.Enum):
    """Closed-form group-matrix shapes for symmetric elements."""

    CYCLIC_EVEN = "cyclic-even"
    CYCLIC_ODD = "cyclic-odd"
    DIHEDRAL_AIBJ_EVEN = "dihedral-aibj-even"
    DIHEDRAL_AIBJ_ODD = "dihedral-aibj-odd"
    DIHEDRAL_BJAI_EVEN = "dihedral-bjai-even"
    DIHEDRAL_BJAI_ODD = "dihedral-bjai-odd"


def _circ(first: Sequence[int]) -> list[list[int]]:
    n = len(first)
    return [[first[(j - i) % n] for j in range(n)] for i in range(n)]


def _revcirc(first: Sequence[int]) -> list[list[int]]:
    n = len(first)
    return [[first[(i + j) % n] for j in range(n)] for i in range(n)]


def _palindromic_row(rot_coeffs: Sequence[int], n: int, even: bool) -> list[int]:
    # circ(c0, c1, ..., c_{n/2}, c_{n/2-1}, ..., c1) for even n and
    # circ(c0, c1, ..., c_{(n-1)/2}, c_{(n-1)/2}, ..., c1) for odd n.
    half = list(rot_coeffs)
    tail = list(reversed(half[1 : -1 if even else None]))
    return half + tail


def closed_form_group_matrix(
    shape: MatrixShape, order: int, free_coeffs: Sequence[int], ring: GrayRing = F2
) -> tuple[tuple[int, ...], ...]:
    """Build the symmetric group matrix directly from its distinct symbols.

    ``free_coeffs`` holds the rotation symbols first (c for e, a, ...,
    up to the middle power) followed, for dihedral shapes, by one symbol
    per reflection in listing order.  Must agree entry-for-entry with
    the generic construction on the matching listing; tests enforce it.
    """
    for c in free_coeffs:
        ring.check(c)
    if shape is MatrixShape.CYCLIC_EVEN or shape is MatrixShape.CYCLIC_ODD:
        n = order
        even = shape is MatrixShape.CYCLIC_EVEN
        expected = n // 2 + 1 if even else (n + 1) // 2
        if len(free_coeffs) != expected:
            raise ValueError(f"expected {expected} free coefficients, got {len(free_coeffs)}")
        if even != (n % 2 == 0):
            raise ValueError("shape parity does not match the order")
        return tuple(tuple(r) for r in _circ(_palindromic_row(free_coeffs, n, even)))

    n = order // 2
    if order % 2:
        raise ValueError("dihedral order must be even")
    even = shape in (MatrixShape.DIHEDRAL_AIBJ_EVEN, MatrixShape.DIHEDRAL_BJAI_EVEN)
    if even != (n % 2 == 0):
        raise ValueError("shape parity does not match the rotation order")
    rot = n // 2 + 1 if n % 2 == 0 else (n + 1) // 2
    if len(free_coeffs) != rot + n:
        raise ValueError(f"expected {rot + n} free coefficients, got {len(free_coeffs)}")
    a = _circ(_palindromic_row(free_coeffs[:rot], n, n % 2 == 0))
    a_t = [[a[j][i] for j in range(n)] for i in range(n)]
    if shape in (MatrixShape.DIHEDRAL_AIBJ_EVEN, MatrixShape.DIHEDRAL_AIBJ_ODD):
        b = _circ(free_coeffs[rot:])
        b_t = [[b[j][i] for j in range(n)] for i in range(n)]
        top = [ra + rb for ra, rb in zip(a, b)]
        bottom = [rbt + rat for rbt, rat in zip(b_t, a_t)]
    else:
        b = _revcirc(free_coeffs[rot:])
        top = [ra + rb for ra, rb in zip(a, b)]
        bottom = [rb + ra for rb, ra in zip(b, a)]
    return tuple(tuple(r) for r in top + bottom)
