"""Tests for the search layer: enumeration, dedup, reporting, parsing."""

import pytest

from grouplcd.codes import LinearCode
from grouplcd.gf2 import BitMatrix
from grouplcd.groups import DihedralListing, cyclic_group, dihedral_group, inverse_pair_orbits
from grouplcd.rings import GrayRing
from grouplcd.search import (
    BudgetExceededError,
    ReversalViolationError,
    SearchSpec,
    _make_record,
    _run_plain,
    candidate_element,
    default_workers,
    emit_records,
    group_id_parts,
    parse_group_id,
    parse_records_csv,
    parse_records_json,
    parse_ring_id,
    ring_id,
    run_search,
    v_bits_string,
)


def test_parse_group_id_variants():
    assert parse_group_id("c12").name == "C12"
    assert parse_group_id("  C7 ").name == "C7"
    assert parse_group_id("d8").name == "D8:aibj"
    assert parse_group_id("d10:bjai").name == "D10:bjai"
    assert parse_group_id("D12:REV").name == "D12:rev"
    for bad in ("", "c0", "cx", "x5", "d8:zzz", "d:aibj", "28"):
        with pytest.raises(ValueError):
            parse_group_id(bad)


def test_parse_ring_id_variants():
    assert parse_ring_id("f2").k == 0
    assert parse_ring_id("r0").k == 0
    assert parse_ring_id("R2").k == 2
    for bad in ("", "f3", "r4", "r-1", "ring", "2"):
        with pytest.raises(ValueError):
            parse_ring_id(bad)
    assert ring_id(GrayRing(0)) == "f2"
    assert ring_id(GrayRing(2)) == "r2"


def test_group_id_parts():
    assert group_id_parts(cyclic_group(12)) == ("c12", "cyclic")
    assert group_id_parts(dihedral_group(8, DihedralListing.REVERSIBLE)) == ("d8", "rev")


def test_candidate_element_digit_layout():
    group = cyclic_group(5)
    spec = SearchSpec(group=group)
    orbits = inverse_pair_orbits(group)
    assert len(orbits) == 3
    # index digits are the free coefficients, most significant first
    v = candidate_element(spec, 0b101)
    assert v.coeffs == (1, 0, 1, 1, 0)
    assert v.is_symmetric()

    flat = SearchSpec(group=group, symmetric=False)
    assert flat.n_candidates == 32
    assert candidate_element(flat, 0b10011).coeffs == (1, 0, 0, 1, 1)


def test_candidate_element_ring_digits():
    group = cyclic_group(3)
    spec = SearchSpec(group=group, ring=GrayRing(1))
    # two orbits, base-4 digits: index 9 = (2, 1)
    v = candidate_element(spec, 9)
    assert v.coeffs == (2, 1, 1)


def test_v_bits_string_layouts():
    group = cyclic_group(3)
    from grouplcd.groupring import GroupRingElement

    v = GroupRingElement(group, GrayRing(0), (1, 0, 1))
    assert v_bits_string(v) == "101"
    # 2 bits per coefficient, constant monomial first
    w = GroupRingElement(group, GrayRing(1), (1, 2, 3))
    assert v_bits_string(w) == "100111"


def test_budget_rejection():
    spec = SearchSpec(group=cyclic_group(28), budget=100)
    assert spec.n_candidates == 1 << 15
    with pytest.raises(BudgetExceededError):
        run_search(spec)
    # the same enumeration passes with the default budget
    SearchSpec(group=cyclic_group(28)).check_budget()


def test_engine_and_plain_agree():
    groups = [
        cyclic_group(7),
        cyclic_group(9),
        dihedral_group(8, DihedralListing.AIBJ),
        dihedral_group(8, DihedralListing.BJAI),
        dihedral_group(10, DihedralListing.REVERSIBLE),
    ]
    for group in groups:
        for include_trivial in (False, True):
            spec = SearchSpec(group=group, include_trivial=include_trivial)
            fast = run_search(spec)
            slow = _run_plain(spec)
            assert fast.codes == slow.codes
            assert fast.candidate_index == slow.candidate_index


def test_symmetric_matches_unrestricted_on_nontrivial_codes():
    # every nontrivial trivial-hull row space comes from a symmetric
    # element, so the restricted walk loses nothing
    groups = [
        cyclic_group(4),
        cyclic_group(5),
        cyclic_group(6),
        cyclic_group(7),
        cyclic_group(8),
        dihedral_group(6, DihedralListing.AIBJ),
        dihedral_group(8, DihedralListing.BJAI),
    ]
    for group in groups:
        sym = run_search(SearchSpec(group=group))
        flat = run_search(SearchSpec(group=group, symmetric=False))
        sym_bases = {rec.code.basis for rec in sym.codes}
        flat_bases = {rec.code.basis for rec in flat.codes}
        assert sym_bases == flat_bases


def test_search_is_deterministic():
    spec = SearchSpec(group=dihedral_group(12, DihedralListing.BJAI))
    first = run_search(spec)
    second = run_search(spec)
    for fmt in ("csv", "json", "md"):
        assert emit_records(first.codes, fmt) == emit_records(second.codes, fmt)
    assert emit_records(first.parameter_rows(), "csv") == emit_records(
        second.parameter_rows(), "csv"
    )


def test_parallel_workers_match_serial():
    spec1 = SearchSpec(group=cyclic_group(17))
    spec2 = SearchSpec(group=cyclic_group(17), n_workers=2)
    serial = run_search(spec1)
    parallel = run_search(spec2)
    assert serial.codes == parallel.codes
    assert serial.candidate_index == parallel.candidate_index


def test_batch_splits_merge_identically():
    from grouplcd import engine

    group = dihedral_group(10, DihedralListing.BJAI)
    whole = engine.search_symmetric_lcd_binary(group)
    chopped = engine.search_symmetric_lcd_binary(group, batch_size=37)
    pooled = engine.search_symmetric_lcd_binary(group, batch_size=64, n_workers=2)
    assert whole == chopped == pooled


def test_parameter_rows_ordering_and_representatives():
    result = run_search(SearchSpec(group=cyclic_group(15)))
    rows = result.parameter_rows()
    keys = [(rec.k, rec.d) for rec in rows]
    assert keys == sorted(set(keys), key=lambda kd: (kd[0], -kd[1]))
    # the representative of each (k, d) is the earliest candidate
    for rec in rows:
        pos = result.codes.index(rec)
        indices = [
            result.candidate_index[p]
            for p, other in enumerate(result.codes)
            if (other.k, other.d) == (rec.k, rec.d)
        ]
        assert result.candidate_index[pos] == min(indices)

    ks = {rec.k for rec in result.parameter_rows(min_k=3, max_k=10)}
    assert all(3 <= k <= 10 for k in ks)


def test_exclude_repetition_row():
    result = run_search(SearchSpec(group=cyclic_group(5)))
    assert result.parameter_pairs() == {(5, 1, 5), (5, 4, 2)}
    assert result.parameter_pairs(exclude_repetition=True) == {(5, 4, 2)}


def test_worked_example_codes_with_trivial_included():
    spec = SearchSpec(group=dihedral_group(6, DihedralListing.AIBJ), include_trivial=True)
    result = run_search(spec)
    assert len(result.codes) == 4
    assert result.parameter_pairs() == {(6, 0, None), (6, 2, 3), (6, 4, 2), (6, 6, 1)}
    # the unrestricted walk over all 64 elements finds the same four
    flat = run_search(
        SearchSpec(
            group=dihedral_group(6, DihedralListing.AIBJ),
            symmetric=False,
            include_trivial=True,
        )
    )
    assert {rec.code.basis for rec in flat.codes} == {rec.code.basis for rec in result.codes}
    # dropping trivial row spaces leaves the two proper codes
    proper = run_search(SearchSpec(group=dihedral_group(6, DihedralListing.AIBJ)))
    assert proper.parameter_pairs() == {(6, 2, 3), (6, 4, 2)}


def test_ring_search_produces_reversible_blocks():
    spec = SearchSpec(group=dihedral_group(6, DihedralListing.REVERSIBLE), ring=GrayRing(1))
    result = run_search(spec)
    assert result.parameter_pairs() == {(12, 4, 3), (12, 8, 2)}
    for rec in result.codes:
        assert rec.ring == "r1"
        assert rec.n == 12
        assert len(rec.v_bits) == 12
        assert rec.code.hull().dimension == 0
        assert rec.reversible
        assert rec.code.is_reversible(2)


def test_reversal_guard_raises():
    group = cyclic_group(3)
    spec = SearchSpec(group=group, require_reversible=True)
    v = candidate_element(spec, 2)
    lopsided = LinearCode.from_rows(BitMatrix((0b001,), 3))
    assert not lopsided.is_reversible(1)
    with pytest.raises(ReversalViolationError):
        _make_record(spec, v, lopsided)


def test_emit_and_parse_round_trips():
    result = run_search(SearchSpec(group=cyclic_group(6)))
    records = result.codes
    assert records
    assert parse_records_csv(emit_records(records, "csv")) == records
    assert parse_records_json(emit_records(records, "json")) == records

    csv_text = emit_records(records, "csv")
    header = csv_text.splitlines()[0]
    assert header == "group,listing,ring,n,k,d,v_bits,lcd,reversible,basis_rows_hex"

    md_text = emit_records(records, "md")
    lines = md_text.splitlines()
    assert lines[0].startswith("| n | k | d |")
    assert len(lines) == len(records) + 2

    with pytest.raises(ValueError):
        emit_records(records, "tsv")


def test_default_workers_env(monkeypatch):
    monkeypatch.delenv("GROUPLCD_WORKERS", raising=False)
    assert default_workers() == 1
    monkeypatch.setenv("GROUPLCD_WORKERS", "4")
    assert default_workers() == 4
    monkeypatch.setenv("GROUPLCD_WORKERS", "zero")
    assert default_workers() == 1
