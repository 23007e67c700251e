"""Finite group multiplication tables with explicit element listings.

A group here is a concrete listing g_0, ..., g_{n-1} together with the
index table of products.  The listing order matters: the matrix built
from a group-ring element depends on it, and the reversible-code
construction requires one specific listing of the dihedral group.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator


class DihedralListing(enum.Enum):
    """Element orders for the dihedral group of order 2n.

    With rotation a and reflection b (b^2 = e, bab = a^-1):

    * ``AIBJ``: e, a, ..., a^(n-1), b, ab, ..., a^(n-1)b
    * ``BJAI``: e, a, ..., a^(n-1), b, ba, ..., ba^(n-1)
    * ``REVERSIBLE``: e, a, ..., a^(n-1), ba^(n-1), ..., ba, b; the
      whole listing read backwards equals the listing of the inverses
      composed with a fixed reflection, which forces every ideal built
      on it to be closed under coordinate reversal.
    """

    AIBJ = "aibj"
    BJAI = "bjai"
    REVERSIBLE = "rev"


@dataclass(frozen=True)
class GroupTable:
    """A finite group as a fixed listing plus product/inverse index tables."""

    name: str
    labels: tuple[str, ...]
    mul: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.labels)

    @cached_property
    def identity(self) -> int:
        for i in range(self.order):
            if all(self.mul[i][j] == j for j in range(self.order)):
                return i
        raise ValueError("no identity element; not a group table")

    @cached_property
    def inv(self) -> tuple[int, ...]:
        e = self.identity
        out = [-1] * self.order
        for i in range(self.order):
            for j in range(self.order):
                if self.mul[i][j] == e:
                    out[i] = j
                    break
        if -1 in out:
            raise ValueError("element without inverse; not a group table")
        return tuple(out)

    def conjugate_listing(self) -> tuple[int, ...]:
        """Positions of the inverses: entry t is the position of g_t^-1."""
        return self.inv

    def elements(self) -> Iterator[int]:
        return iter(range(self.order))

    def label(self, i: int) -> str:
        return self.labels[i]

    def position(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValueError(f"{label!r} is not an element of {self.name}") from None

    def check_associative(self) -> None:
        """Raise unless the table is associative (full n^3 check)."""
        import numpy as np

        m = np.array(self.mul, dtype=np.int64)
        # (g_i g_j) g_k is m[m[i, j], k]; g_i (g_j g_k) is m[i, m[j, k]].
        if not np.array_equal(m[m, :], m[:, m]):
            raise ValueError("multiplication table is not associative")


def cyclic_group(n: int) -> GroupTable:
    """Cyclic group of order n, listed e, a, a^2, ..., a^(n-1)."""
    if n < 1:
        raise ValueError("order must be positive")
    labels = tuple(_power_label("a", i) for i in range(n))
    mul = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    return GroupTable(f"C{n}", labels, mul)


def dihedral_group(order: int, listing: DihedralListing = DihedralListing.AIBJ) -> GroupTable:
    """Dihedral group of the given (even, >= 2) order with a chosen listing."""
    if order < 2 or order % 2:
        raise ValueError("dihedral order must be even and at least 2")
    n = order // 2

    def mul_pair(p: tuple[int, int], q: tuple[int, int]) -> tuple[int, int]:
        i, j = p
        k, l = q
        return ((i + (k if j == 0 else -k)) % n, j ^ l)

    pairs: list[tuple[int, int]] = [(i, 0) for i in range(n)]
    labels = [_power_label("a", i) for i in range(n)]
    if listing is DihedralListing.AIBJ:
        # a^t b at position n + t
        pairs += [(t, 1) for t in range(n)]
        labels += [_power_label("a", t) + "b" if t else "b" for t in range(n)]
    elif listing is DihedralListing.BJAI:
        # b a^t = a^(-t) b at position n + t
        pairs += [((-t) % n, 1) for t in range(n)]
        labels += ["b" + _power_label("a", t) if t else "b" for t in range(n)]
    elif listing is DihedralListing.REVERSIBLE:
        # b a^(n-1-t) at position n + t, ending with plain b
        pairs += [((t + 1) % n, 1) for t in range(n)]
        labels += ["b" + _power_label("a", n - 1 - t) if t != n - 1 else "b" for t in range(n)]
    else:
        raise ValueError(f"unknown listing {listing!r}")

    index = {p: t for t, p in enumerate(pairs)}
    mul = tuple(
        tuple(index[mul_pair(p, q)] for q in pairs) for p in pairs
    )
    return GroupTable(f"D{order}:{listing.value}", tuple(labels), mul)


def _power_label(base: str, exp: int) -> str:
    if exp == 0:
        return "e"
    if exp == 1:
        return base
    return f"{base}{exp}"


def inverse_pair_orbits(group: GroupTable) -> list[tuple[int, ...]]:
    """Partition of positions into {g, g^-1} pairs (singletons if g = g^-1).

    A group-ring element equals its canonical involution exactly when its
    coefficients are constant on these orbits, so each orbit is one free
    coefficient in the symmetric search space.
    """
    seen = [False] * group.order
    orbits: list[tuple[int, ...]] = []
    for i in range(group.order):
        if seen[i]:
            continue
        j = group.inv[i]
        seen[i] = True
        if j == i:
            orbits.append((i,))
        else:
            seen[j] = True
            orbits.append((i, j))
    return orbits
