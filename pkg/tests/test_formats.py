import numpy as np
import pytest

from gyrogroups import (
    FiniteGyrogroup,
    ReportDocument,
    TableFormatError,
    build_cyclic_gyrogroup,
    cyclic_group,
    emit_lattice_dot,
    emit_lattice_text,
    emit_tables,
    enumerate_subgyrogroups,
    load_tables,
    report_document,
    verify,
)

from witness_checks import witness_confirms


def test_csv_golden_row(g4):
    lines = emit_tables(g4, "csv").split("\n")
    assert lines[0] == "order,16"
    assert lines[2 + 8] == "8,13,10,15,12,9,14,11,0,5,2,7,4,1,6,3"
    assert lines[2 + 16] == "gyration"
    assert lines[-3] == "perm I: 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15"
    assert lines[-2] == "perm A: 0 5 2 7 4 1 6 3 8 13 10 15 12 9 14 11"


def test_text_document(g3):
    text = emit_tables(g3, "text")
    assert "cayley table (order 8)" in text
    assert "gyration table (order 8)" in text
    assert "A = (1 3)(5 7)" in text
    assert "I = identity" in text


def test_text_trivial_group():
    text = emit_tables(FiniteGyrogroup.from_group([[0]]), "text")
    assert "0 | 0" in text


def test_unknown_format(g3):
    with pytest.raises(ValueError, match="unknown format"):
        emit_tables(g3, "yaml")


def test_roundtrip_is_identity(g3):
    doc = emit_tables(g3, "csv")
    loaded = load_tables(doc)
    assert np.array_equal(loaded.cayley, g3.cayley)
    assert np.array_equal(loaded.gyr_table, g3.gyr_table)
    assert loaded.perms == g3.perms


def test_roundtrip_bytes_stable():
    for n in (3, 4, 5, 6):
        doc = emit_tables(build_cyclic_gyrogroup(n), "csv")
        assert emit_tables(load_tables(doc), "csv") == doc
        assert emit_tables(load_tables(doc.encode()), "csv") == doc


def test_emit_deterministic(g4):
    assert emit_tables(g4, "csv") == emit_tables(g4, "csv")
    assert emit_tables(g4, "text") == emit_tables(g4, "text")


def test_load_crlf_normalized(g3):
    doc = emit_tables(g3, "csv").replace("\n", "\r\n")
    assert emit_tables(load_tables(doc), "csv") == emit_tables(g3, "csv")


def test_load_reports_wrong_field_count(g3):
    lines = emit_tables(g3, "csv").split("\n")
    lines[3] = lines[3].rsplit(",", 1)[0]  # drop a field from the second row
    with pytest.raises(TableFormatError, match="line 4: expected 8 fields, got 7"):
        load_tables("\n".join(lines))


def test_load_reports_bad_integer(g3):
    doc = emit_tables(g3, "csv").replace("4,7,6,5", "4,x,6,5")
    with pytest.raises(TableFormatError, match="not an integer"):
        load_tables(doc)


def test_load_reports_out_of_range(g3):
    doc = emit_tables(g3, "csv").replace("4,7,6,5", "4,9,6,5")
    with pytest.raises(TableFormatError, match="out of range"):
        load_tables(doc)


def test_load_reports_undefined_symbol(g3):
    doc = emit_tables(g3, "csv").replace("I,A,I,A,A,I,A,I", "I,B,I,A,A,I,A,I", 1)
    with pytest.raises(TableFormatError, match="'B' is not defined"):
        load_tables(doc)


def test_load_reports_duplicate_legend(g3):
    doc = emit_tables(g3, "csv") + "perm A: 0 1 2 3 4 5 6 7\n"
    with pytest.raises(TableFormatError, match="duplicate legend symbol"):
        load_tables(doc)


def test_load_reports_non_bijective_legend(g3):
    doc = emit_tables(g3, "csv").replace("perm A: 0 3 2 1 4 7 6 5", "perm A: 0 3 2 1 4 7 6 6")
    with pytest.raises(TableFormatError, match="not a bijection"):
        load_tables(doc)


def test_load_strict_rejects_latin_violation(g3):
    doc = emit_tables(g3, "csv").replace("4,7,6,5,0,3,2,1", "4,7,6,5,0,3,2,2")
    with pytest.raises(TableFormatError, match="repeats a value"):
        load_tables(doc)
    # lenient load hands the same corruption to verify instead
    G = load_tables(doc, strict=False)
    report = verify(G)
    assert not report.passed
    for result in report.failures():
        assert witness_confirms(G, result)


def test_load_normalizes_identity_position():
    # cyclic group of order 3 relabeled so that the identity sits at index 2
    sigma = np.array([2, 1, 0])
    inv = sigma
    base = cyclic_group(3)
    shuffled = sigma[base[inv[:, None], inv[None, :]]]
    G = FiniteGyrogroup.from_group(shuffled)
    doc = emit_tables(G, "csv")
    loaded = load_tables(doc)
    assert np.array_equal(loaded.cayley[0], np.arange(3))
    assert verify(loaded).passed


def test_load_strict_requires_identity_row():
    # latin square of order 3 in which no row is the identity row
    doc = (
        "order,3\ncayley\n0,2,1\n2,1,0\n1,0,2\n"
        "gyration\nI,I,I\nI,I,I\nI,I,I\nperm I: 0 1 2\n"
    )
    with pytest.raises(TableFormatError, match="identity"):
        load_tables(doc)
    loaded = load_tables(doc, strict=False)
    assert not verify(loaded).check("left_identity").passed


def test_lattice_dot_output(g3):
    lattice = enumerate_subgyrogroups(g3)
    dot = emit_lattice_dot(lattice)
    assert dot.startswith("digraph subgyrogroup_lattice {")
    assert dot.count(" [label=") == 8
    assert dot.count(" -> ") == len(lattice.covers)
    assert '[label="<5> (order 4)"]' in dot
    text = emit_lattice_text(lattice)
    assert "<2,4> order 4 (group)" in text
    assert "<1,4> order 8 (non-group)" in text


def test_lattice_dot_trivial():
    trivial = enumerate_subgyrogroups(FiniteGyrogroup.from_group([[0]]))
    dot = emit_lattice_dot(trivial)
    assert dot.count(" [label=") == 1
    assert " -> " not in dot


def test_report_document_roundtrip(g3):
    report = verify(g3)
    doc = report_document(
        report,
        params={"n": 3, "order": 8},
        subgyrogroup_count=8,
        gyroauto_order=2,
    )
    again = ReportDocument.from_json(doc.to_json())
    assert again == doc
    assert again.all_passed
    assert again.gyrocommutative
    assert ReportDocument.from_json(again.to_json()).to_json() == doc.to_json()


def test_report_document_records_failures():
    G = FiniteGyrogroup([[j for j in range(4)] for _ in range(4)])
    doc = report_document(
        verify(G), params={"order": 4}, subgyrogroup_count=None, gyroauto_order=1
    )
    assert not doc.all_passed
    failed = [c for c in doc.checks if c["status"] == "fail"]
    assert failed and all(isinstance(c["witness"], list) for c in failed)
