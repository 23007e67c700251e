"""Exhaustive search for complementary-dual codes from group matrices.

The search walks candidate elements (symmetric ones by default, every
element when asked), keeps the row spaces that pass the trivial-hull
test, deduplicates them by canonical basis, and reduces the survivors to
one representative per parameter pair.  Chunks merge associatively, so
serial, batched, and multi-process runs emit identical tables.
"""

from __future__ import annotations

import csv
import io
import json
import os
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

from . import engine
from .codes import CodeRecord, LinearCode
from .gf2 import BitMatrix
from .groupring import GroupRingElement, group_matrix, group_matrix_gray_image, symmetric_element
from .groups import DihedralListing, GroupTable, cyclic_group, dihedral_group, inverse_pair_orbits
from .rings import GrayRing

DEFAULT_BUDGET = 1 << 30
WORKERS_ENV_VAR = "GROUPLCD_WORKERS"


class BudgetExceededError(Exception):
    """The requested enumeration is larger than the configured budget."""


class ReversalViolationError(Exception):
    """A survivor from a reversible listing failed the reversal check."""


def parse_group_id(text: str) -> GroupTable:
    """Group identifiers: c<n>, d<order>, d<order>:aibj|bjai|rev."""
    text = text.strip().lower()
    if text.startswith("c"):
        return cyclic_group(_positive_int(text[1:], text))
    if text.startswith("d"):
        body, _, listing_text = text[1:].partition(":")
        order = _positive_int(body, text)
        if not listing_text:
            listing = DihedralListing.AIBJ
        else:
            try:
                listing = DihedralListing(listing_text)
            except ValueError:
                raise ValueError(
                    f"unknown listing {listing_text!r}; expected aibj, bjai, or rev"
                ) from None
        return dihedral_group(order, listing)
    raise ValueError(f"cannot parse group id {text!r}")


def _positive_int(body: str, full: str) -> int:
    if not body.isdigit() or int(body) < 1:
        raise ValueError(f"cannot parse group id {full!r}")
    return int(body)


def parse_ring_id(text: str) -> GrayRing:
    text = text.strip().lower()
    if text == "f2":
        return GrayRing(0)
    if text.startswith("r") and text[1:].isdigit():
        k = int(text[1:])
        if 0 <= k <= 3:
            return GrayRing(k)
    raise ValueError(f"unknown ring {text!r}; expected f2, r1, r2, or r3")


def ring_id(ring: GrayRing) -> str:
    return "f2" if ring.k == 0 else f"r{ring.k}"


def group_id_parts(group: GroupTable) -> tuple[str, str]:
    """(group id, listing tag) for record provenance."""
    name = group.name.lower()
    if ":" in name:
        gid, listing = name.split(":")
        return gid, listing
    return name, "cyclic"


@dataclass(frozen=True)
class SearchSpec:
    """What to enumerate and how to report it."""

    group: GroupTable
    ring: GrayRing = GrayRing(0)
    symmetric: bool = True
    include_trivial: bool = False
    require_reversible: bool = False
    budget: int = DEFAULT_BUDGET
    n_workers: int = 1

    @property
    def n_candidates(self) -> int:
        base = self.ring.size
        exponent = (
            len(inverse_pair_orbits(self.group)) if self.symmetric else self.group.order
        )
        return base**exponent

    def check_budget(self) -> None:
        if self.n_candidates > self.budget:
            raise BudgetExceededError(
                f"{self.n_candidates} candidates exceed the budget of {self.budget}"
            )


def candidate_element(spec: SearchSpec, index: int) -> GroupRingElement:
    """The index-th candidate: digits of the index, most significant
    first, are the free coefficients (symmetric) or all coefficients."""
    size = spec.ring.size
    width = (
        len(inverse_pair_orbits(spec.group)) if spec.symmetric else spec.group.order
    )
    digits = []
    rest = index
    for _ in range(width):
        rest, digit = divmod(rest, size)
        digits.append(digit)
    digits.reverse()
    if spec.symmetric:
        return symmetric_element(spec.group, digits, spec.ring)
    return GroupRingElement(spec.group, spec.ring, tuple(digits))


def enumerate_candidates(spec: SearchSpec) -> Iterator[tuple[int, GroupRingElement]]:
    for index in range(spec.n_candidates):
        yield index, candidate_element(spec, index)


def binary_image(v: GroupRingElement) -> BitMatrix:
    """Generator rows of the binary code attached to v: the group matrix
    itself over F2, its Gray image otherwise."""
    if v.ring.k == 0:
        return group_matrix(v)
    return group_matrix_gray_image(v)


def v_bits_string(v: GroupRingElement) -> str:
    """Coefficient bits in listing order; larger rings contribute 2^k
    bits per coefficient, least significant monomial first."""
    width = v.ring.n_monomials
    return "".join(
        format(c, f"0{width}b")[::-1] if width > 1 else str(c) for c in v.coeffs
    )


def parse_v_bits(group: GroupTable, ring: GrayRing, text: str) -> GroupRingElement:
    """Inverse of v_bits_string: one 2^k-bit block per group element."""
    width = ring.n_monomials
    expected = group.order * width
    if set(text) - {"0", "1"} or len(text) != expected:
        raise ValueError(
            f"need {expected} bits for {group.name} over this ring, got {text!r}"
        )
    coeffs = tuple(
        int(text[pos * width : (pos + 1) * width][::-1], 2)
        for pos in range(group.order)
    )
    return GroupRingElement(group, ring, coeffs)


def element_record(v: GroupRingElement) -> CodeRecord:
    """Report card for a single element, every predicate evaluated."""
    code = LinearCode.from_rows(binary_image(v))
    gid, listing = group_id_parts(v.group)
    if v.ring.k == 0:
        invariant = code.is_invariant_under(v.group)
    else:
        invariant = _gray_block_invariant(code, v.group, v.ring)
    return CodeRecord(
        code=code,
        group=gid,
        listing=listing,
        ring=ring_id(v.ring),
        v_bits=v_bits_string(v),
        lcd=code.is_lcd(),
        reversible=code.is_reversible(v.ring.n_monomials),
        g_invariant=invariant,
    )


@dataclass
class SearchResult:
    """All distinct surviving codes plus the parameter-table view."""

    spec: SearchSpec
    codes: list[CodeRecord]
    candidate_index: dict[int, int] = field(default_factory=dict)  # code pos -> index

    def parameter_rows(
        self,
        min_k: Optional[int] = None,
        max_k: Optional[int] = None,
        exclude_repetition: bool = False,
    ) -> list[CodeRecord]:
        """One representative per (k, d): the smallest candidate index
        wins.  Rows come out ascending in k, then descending in d."""
        best: dict[tuple[int, Optional[int]], tuple[int, CodeRecord]] = {}
        for pos, rec in enumerate(self.codes):
            if min_k is not None and rec.k < min_k:
                continue
            if max_k is not None and rec.k > max_k:
                continue
            if exclude_repetition and _is_repetition(rec):
                continue
            key = (rec.k, rec.d)
            index = self.candidate_index[pos]
            if key not in best or index < best[key][0]:
                best[key] = (index, rec)
        ordered = sorted(best.items(), key=lambda item: (item[0][0], -(item[0][1] or 0)))
        return [rec for _, (_, rec) in ordered]

    def parameter_pairs(self, **kwargs) -> set[tuple[int, int, Optional[int]]]:
        return {(rec.n, rec.k, rec.d) for rec in self.parameter_rows(**kwargs)}


def _is_repetition(rec: CodeRecord) -> bool:
    rows = rec.code.basis.rows
    return len(rows) == 1 and rows[0] == (1 << rec.n) - 1


def _make_record(spec: SearchSpec, v: GroupRingElement, code: LinearCode) -> CodeRecord:
    gid, listing = group_id_parts(spec.group)
    # Gray images reverse in blocks of 2^k, one block per group element.
    reversible = code.is_reversible(spec.ring.n_monomials)
    if spec.require_reversible and not reversible:
        raise ReversalViolationError(
            f"survivor from candidate {v.to_terms()} is not closed under reversal"
        )
    if spec.ring.k == 0:
        invariant = code.is_invariant_under(spec.group)
    else:
        invariant = _gray_block_invariant(code, spec.group, spec.ring)
    return CodeRecord(
        code=code,
        group=gid,
        listing=listing,
        ring=ring_id(spec.ring),
        v_bits=v_bits_string(v),
        lcd=True,
        reversible=reversible,
        g_invariant=invariant,
    )


def _gray_block_invariant(code: LinearCode, group: GroupTable, ring: GrayRing) -> bool:
    """Invariance under the translation action permuting width-2^k blocks."""
    width = ring.n_monomials
    n = group.order
    mask = (1 << width) - 1
    for p in range(n):
        row_p = group.mul[p]
        for row in code.basis.rows:
            moved = 0
            for j in range(n):
                block = (row >> (j * width)) & mask
                moved |= block << (row_p[j] * width)
            if not code.contains(moved):
                return False
    return True


def run_search(spec: SearchSpec) -> SearchResult:
    """Enumerate, filter to trivial-hull row spaces, deduplicate."""
    spec.check_budget()
    use_engine = (
        spec.ring.k == 0 and spec.symmetric and spec.group.order <= engine.MAX_ENGINE_ORDER
    )
    if use_engine:
        return _run_engine(spec)
    return _run_plain(spec)


def _run_engine(spec: SearchSpec) -> SearchResult:
    found = engine.search_symmetric_lcd_binary(
        spec.group,
        include_trivial=spec.include_trivial,
        n_workers=spec.n_workers,
    )
    result = SearchResult(spec, [])
    n = spec.group.order
    entries = sorted(found.values())
    for index, _rank, rows in entries:
        code = LinearCode(BitMatrix(rows, n))
        v = candidate_element(spec, index)
        result.candidate_index[len(result.codes)] = index
        result.codes.append(_make_record(spec, v, code))
    return result


def _run_plain(spec: SearchSpec) -> SearchResult:
    result = SearchResult(spec, [])
    seen: dict[tuple[int, ...], int] = {}
    for index, v in enumerate_candidates(spec):
        code = LinearCode.from_rows(binary_image(v))
        if not spec.include_trivial and code.dimension in (0, code.length):
            continue
        if not code.is_lcd():
            continue
        key = code.basis.rows
        if key in seen:
            continue
        seen[key] = index
        result.candidate_index[len(result.codes)] = index
        result.codes.append(_make_record(spec, v, code))
    return result


def default_workers() -> int:
    raw = os.environ.get(WORKERS_ENV_VAR, "")
    if raw.isdigit() and int(raw) >= 1:
        return int(raw)
    return 1


def emit_records(records: Sequence[CodeRecord], fmt: str) -> str:
    """Deterministic text for a list of records: csv, json, or md."""
    if fmt == "json":
        return json.dumps([rec.to_json_dict() for rec in records], indent=2) + "\n"
    if fmt == "csv":
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for rec in records:
            data = rec.to_json_dict()
            writer.writerow(
                [
                    data["group"],
                    data["listing"],
                    data["ring"],
                    data["n"],
                    data["k"],
                    "" if data["d"] is None else data["d"],
                    data["v_bits"],
                    int(data["lcd"]),
                    int(data["reversible"]),
                    ";".join(data["basis_rows_hex"]),
                ]
            )
        return out.getvalue()
    if fmt == "md":
        lines = ["| n | k | d | v | lcd | reversible |", "| - | - | - | - | - | - |"]
        for rec in records:
            d = "-" if rec.d is None else rec.d
            lines.append(
                f"| {rec.n} | {rec.k} | {d} | {rec.v_bits} | "
                f"{'yes' if rec.lcd else 'no'} | {'yes' if rec.reversible else 'no'} |"
            )
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}; expected csv, json, or md")


CSV_COLUMNS = [
    "group",
    "listing",
    "ring",
    "n",
    "k",
    "d",
    "v_bits",
    "lcd",
    "reversible",
    "basis_rows_hex",
]


def parse_records_csv(text: str) -> list[CodeRecord]:
    reader = csv.DictReader(io.StringIO(text))
    records = []
    for row in reader:
        records.append(
            CodeRecord.from_json_dict(
                {
                    "group": row["group"],
                    "listing": row["listing"],
                    "ring": row["ring"],
                    "v_bits": row["v_bits"],
                    "n": int(row["n"]),
                    "k": int(row["k"]),
                    "d": int(row["d"]) if row["d"] else None,
                    "lcd": bool(int(row["lcd"])),
                    "reversible": bool(int(row["reversible"])),
                    "basis_rows_hex": row["basis_rows_hex"].split(";") if row["basis_rows_hex"] else [],
                }
            )
        )
    return records


def parse_records_json(text: str) -> list[CodeRecord]:
    return [CodeRecord.from_json_dict(item) for item in json.loads(text)]
