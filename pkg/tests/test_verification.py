"""Tests for the exhaustive oracle-versus-characterization harness."""

import pytest

from src.models.errors import ErrorCode, ErrorRecord
from src.models.report import GraphVerdict, StructureCount
from src.models.structure import N_MINUS_3_STRUCTURES, StructureId
from src.services.builders import path
from src.services.generate import enumerate_templates
from src.services.graph6 import to_graph6
from src.services.verification import ground_truth_stream, run_verification, verify_graph


def test_ground_truth_stream_numbers_lines():
    """Lines count from 1 across orders; 1 + 2 + 6 graphs for n = 2..4."""
    items = list(ground_truth_stream(4))
    assert [line for line, _ in items] == list(range(1, 10))
    assert items[0] == (1, "A_")


def test_verify_graph_c5():
    """C_5 has β = 2 = n-3 and is classified as G4."""
    verdict = verify_graph(1, "Dhc")
    assert isinstance(verdict, GraphVerdict)
    assert verdict.beta == 2
    assert verdict.structures == ["G4"]
    assert verdict.passed
    assert not verdict.quotient_has_twins


def test_verify_graph_p3_quotient_has_twins():
    """P_3 collapses to K_2, which still has twins."""
    verdict = verify_graph(1, "Bg")
    assert isinstance(verdict, GraphVerdict)
    assert verdict.passed
    assert verdict.quotient_has_twins


def test_verify_graph_out_of_scope():
    """Single vertices and disconnected graphs are skipped."""
    assert verify_graph(1, "@") is None
    assert verify_graph(2, "A?") is None


def test_verify_graph_parse_error():
    record = verify_graph(5, "!!")
    assert isinstance(record, ErrorRecord)
    assert record.line == 5
    assert record.code is ErrorCode.PARSE_ERROR


def test_verify_graph_over_cap_becomes_record():
    """A graph past the search cap yields a CAP_EXCEEDED record instead of raising."""
    record = verify_graph(2, to_graph6(path(21)))
    assert isinstance(record, ErrorRecord)
    assert record.line == 2
    assert record.code is ErrorCode.CAP_EXCEEDED


def test_stream_with_bad_lines():
    """Errors and skipped graphs are counted apart from verified ones."""
    summary, errors = run_verification([(1, "Dhc"), (2, "!!"), (3, "A?"), (4, "Ch")])
    assert summary.graphs == 2
    assert summary.skipped == 1
    assert summary.errors == 1
    assert [e.line for e in errors] == [2]
    assert summary.passed


def test_verification_up_to_six():
    """Every connected graph of order 2..6 agrees with its characterization."""
    summary, errors = run_verification(ground_truth_stream(6))
    assert errors == []
    assert summary.graphs == 1 + 2 + 6 + 21 + 112
    assert summary.mismatches == 0
    assert summary.inconsistent == 0
    assert summary.violations == 0
    assert summary.passed
    assert summary.quotient_with_twins > 0
    assert StructureCount(n=5, family="N_MINUS_3", structure="G4", hits=1) in summary.counts
    realizable = {
        s.value
        for s in (
            StructureId.PATH,
            StructureId.COMPLETE,
            StructureId.NM2_KST,
            StructureId.NM2_JOIN_EMPTY,
            StructureId.NM2_JOIN_KT_K1,
        )
    }
    realizable |= {
        t.structure.value
        for s in N_MINUS_3_STRUCTURES
        for n in range(4, 7)
        for t in enumerate_templates(s, n)
    }
    assert realizable <= {c.structure for c in summary.counts if c.hits >= 1}


def test_verification_is_independent_of_jobs():
    serial, _ = run_verification(ground_truth_stream(5))
    parallel, _ = run_verification(ground_truth_stream(5), n_jobs=2)
    assert serial == parallel


def test_summary_record_uses_camel_case():
    summary, _ = run_verification(ground_truth_stream(3))
    record = summary.to_record()["summary"]
    assert record["graphs"] == 3
    assert "quotientWithTwins" in record
    assert record["counterexamples"] == []


@pytest.mark.slow
def test_verification_order_seven():
    """All 853 connected graphs of order 7."""
    summary, _ = run_verification(ground_truth_stream(7, min_n=7), n_jobs=2)
    assert summary.graphs == 853
    assert summary.passed
