"""Characteristic-two alphabet rings with a binary Gray map.

``GrayRing(k)`` is the commutative ring F2[u1, ..., uk] with relations
ui^2 = 0 and ui*uj = uj*ui.  Elements are stored as integer bitmasks over
the 2^k square-free monomials: bit m corresponds to the monomial whose
generator set is the binary expansion of m (bit 0 of m = u1, bit 1 = u2,
and so on).  ``GrayRing(0)`` is the binary field itself, so every code
path in this package can treat F2 as the k = 0 ring.

The Gray map sends a ring element to 2^k bits and extends to vectors one
coordinate at a time; it is a linear bijection that turns duals over the
ring into binary duals of the image.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

from .gf2 import BitMatrix


@dataclass(frozen=True)
class GrayRing:
    """F2[u1..uk] with square-zero commuting generators, as bitmasks."""

    k: int

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("k must be non-negative")

    @property
    def n_monomials(self) -> int:
        return 1 << self.k

    @property
    def size(self) -> int:
        return 1 << self.n_monomials

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def elements(self) -> range:
        return range(self.size)

    def check(self, a: int) -> int:
        if not 0 <= a < self.size:
            raise ValueError(f"{a} is not an element mask of {self}")
        return a

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        """Product; monomials sharing a generator vanish (ui^2 = 0)."""
        out = 0
        x = a
        while x:
            low_x = x & -x
            i = low_x.bit_length() - 1
            y = b
            while y:
                low_y = y & -y
                j = low_y.bit_length() - 1
                if i & j == 0:
                    out ^= 1 << (i | j)
                y ^= low_y
            x ^= low_x
        return out

    def is_unit(self, a: int) -> bool:
        # The ring is local: units are exactly the elements with
        # constant term 1.
        return bool(a & 1)

    def gray(self, a: int) -> int:
        """Gray image of one element, packed into 2^k bits."""
        return _gray(self.check(a), self.k)

    def ungray(self, bits: int) -> int:
        """Inverse Gray map on 2^k bits."""
        if not 0 <= bits < (1 << self.n_monomials):
            raise ValueError("bit pattern out of range")
        return _ungray(bits, self.k)

    def gray_vector(self, vec: Sequence[int]) -> int:
        """Gray image of a vector, one 2^k-bit block per coordinate."""
        width = self.n_monomials
        out = 0
        for pos, a in enumerate(vec):
            out |= _gray(self.check(a), self.k) << (pos * width)
        return out

    def ungray_vector(self, bits: int, length: int) -> tuple[int, ...]:
        width = self.n_monomials
        mask = (1 << width) - 1
        return tuple(
            _ungray((bits >> (pos * width)) & mask, self.k) for pos in range(length)
        )

    def format_element(self, a: int) -> str:
        self.check(a)
        if a == 0:
            return "0"
        terms = []
        m = a
        while m:
            low = m & -m
            terms.append(_monomial_name(low.bit_length() - 1))
            m ^= low
        return "+".join(terms)

    def parse_element(self, text: str) -> int:
        """Parse sums of monomial names, e.g. "1+u1+u1u2"."""
        text = text.strip()
        if text == "0":
            return 0
        out = 0
        for term in text.split("+"):
            term = term.strip()
            if term == "1":
                out ^= 1
                continue
            if not re.fullmatch(r"(u\d+)+", term):
                raise ValueError(f"cannot parse term {term!r}")
            mono = 0
            for idx_text in re.findall(r"u(\d+)", term):
                idx = int(idx_text)
                if not 1 <= idx <= self.k:
                    raise ValueError(f"generator u{idx} not in {self}")
                if mono >> (idx - 1) & 1:
                    raise ValueError(f"repeated generator in term {term!r}")
                mono |= 1 << (idx - 1)
            out ^= 1 << mono
        return out

    def __str__(self) -> str:
        return "F2" if self.k == 0 else f"F2[u1..u{self.k}]"


def _gray(a: int, k: int) -> int:
    if k == 0:
        return a & 1
    half = 1 << (k - 1)
    c1 = a & ((1 << half) - 1)
    c2 = a >> half
    g1 = _gray(c1, k - 1)
    g2 = _gray(c2, k - 1)
    return g2 | ((g1 ^ g2) << half)


def _ungray(bits: int, k: int) -> int:
    if k == 0:
        return bits & 1
    half = 1 << (k - 1)
    y1 = bits & ((1 << half) - 1)
    y2 = bits >> half
    c2 = _ungray(y1, k - 1)
    c1 = _ungray(y1 ^ y2, k - 1)
    return c1 | (c2 << half)


def _monomial_name(m: int) -> str:
    if m == 0:
        return "1"
    return "".join(f"u{i + 1}" for i in range(m.bit_length()) if (m >> i) & 1)


def gray_image_basis(ring: GrayRing, rows: Sequence[Sequence[int]]) -> BitMatrix:
    """Binary generator matrix of the Gray image of a module row span.

    The span of the rows over the ring equals, as an additive group, the
    F2-span of every monomial multiple of every row; Gray-mapping those
    gives a (redundant) binary generator matrix of the image.
    """
    n = len(rows[0]) if rows else 0
    out = []
    for row in rows:
        if len(row) != n:
            raise ValueError("ragged row lengths")
        for m in range(ring.n_monomials):
            scalar = 1 << m
            scaled = [ring.mul(scalar, a) for a in row]
            out.append(ring.gray_vector(scaled))
    return BitMatrix(tuple(out), n * ring.n_monomials)


def module_span_size(ring: GrayRing, rows: Sequence[Sequence[int]]) -> int:
    """Oracle-friendly size of the module span (2^rank of the Gray image)."""
    from .gf2 import rank

    if not rows:
        return 1
    return 1 << rank(gray_image_basis(ring, rows))
