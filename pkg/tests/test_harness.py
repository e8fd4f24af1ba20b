"""Sweep harness: candidate filter, report rows, revalidation, structure checks."""

import dataclasses
import io
import json

import pytest

from dpcolor import (
    Cover,
    SimpleGraph,
    cover_from_lists,
    cover_to_json_text,
    emit_graph6,
)
from dpcolor.construct import (
    make_c4_covers,
    make_dirac,
    make_ks_example,
    make_multigraph_counterexample,
    make_wheel,
)
from dpcolor.harness import (
    REPORT_FIELDS,
    DiracReportRow,
    SweepConfig,
    candidate_filter,
    emit_report,
    parse_report_csv,
    revalidate_row,
    verify_critical_structure,
    verify_dirac_bound,
)


def complete(n):
    return SimpleGraph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def prism():
    return SimpleGraph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])


def k33():
    return SimpleGraph(6, [(u, v) for u in (0, 1, 2) for v in (3, 4, 5)])


W4_G6 = emit_graph6(make_wheel(4))


class TestCandidateFilter:
    def test_clique_rejection(self):
        assert candidate_filter(complete(4), 3) == "contains a clique of size k + 1"

    def test_wheel_accepted(self):
        assert candidate_filter(make_wheel(4), 3) is None

    def test_dirac_rejected_unless_included(self):
        g = make_dirac(3, 1)
        assert candidate_filter(g, 3) == "k-Dirac graph"
        assert candidate_filter(g, 3, include_dirac=True) is None

    def test_disconnected(self):
        g = SimpleGraph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        assert candidate_filter(g, 3) == "disconnected"

    def test_low_degree(self):
        path = SimpleGraph(4, [(0, 1), (1, 2), (2, 3)])
        assert candidate_filter(path, 3) == "min degree below k"

    def test_density(self):
        assert candidate_filter(make_wheel(5), 3) == "2m exceeds kn + k - 2"
        # density is checked before the clique test
        assert candidate_filter(complete(5), 3) == "2m exceeds kn + k - 2"

    def test_k_validation(self):
        with pytest.raises(ValueError):
            candidate_filter(complete(4), 2)


class TestVerifyDiracBound:
    def test_wheel_row(self):
        rows = verify_dirac_bound(SweepConfig(k=3), [W4_G6])
        assert len(rows) == 1
        row = rows[0]
        assert row.graph6 == W4_G6
        assert row.n == 5 and row.m == 8
        assert row.deficit == 0
        assert not row.has_big_clique and not row.is_dirac
        assert row.regime == "perfect"
        assert not row.critical_cover_found
        assert row.witness_cover == ""
        assert row.covers_examined == 6 ** 4
        assert row.seconds >= 0.0

    def test_dirac_refutation_row(self):
        g6 = emit_graph6(make_dirac(3, 1))
        rows = verify_dirac_bound(SweepConfig(k=3, include_dirac=True), [g6])
        assert len(rows) == 1
        row = rows[0]
        assert row.is_dirac and row.deficit == 0
        assert row.critical_cover_found
        assert row.covers_examined == 1  # the all-identity cover comes first
        assert row.witness_cover
        assert revalidate_row(row)

    def test_rejected_graphs_produce_no_rows(self):
        stream = [emit_graph6(complete(4)), emit_graph6(make_dirac(3, 2))]
        assert verify_dirac_bound(SweepConfig(k=3), stream) == []

    def test_row_order_and_blank_lines(self):
        stream = ["", W4_G6, "   ", emit_graph6(prism()), ""]
        rows = verify_dirac_bound(SweepConfig(k=3), stream)
        assert [r.graph6 for r in rows] == [W4_G6, emit_graph6(prism())]
        assert all(not r.critical_cover_found for r in rows)

    def test_parallel_matches_serial(self):
        stream = [W4_G6, emit_graph6(k33())]
        serial = verify_dirac_bound(SweepConfig(k=3, parallelism=1), stream)
        parallel = verify_dirac_bound(SweepConfig(k=3, parallelism=2), stream)
        strip = lambda r: dataclasses.replace(r, seconds=0.0)
        assert [strip(r) for r in serial] == [strip(r) for r in parallel]

    def test_parse_error_names_the_line(self):
        with pytest.raises(ValueError, match="line 2"):
            verify_dirac_bound(SweepConfig(k=3), [W4_G6, "C\x1f"])

    def test_size_cap_names_the_line(self):
        cfg = SweepConfig(k=3, max_n=5)
        with pytest.raises(ValueError, match="line 2.*above the cap"):
            verify_dirac_bound(cfg, [W4_G6, emit_graph6(prism())])

    def test_empty_stream(self):
        assert verify_dirac_bound(SweepConfig(k=3), []) == []


@pytest.fixture(scope="module")
def found():
    g6 = emit_graph6(make_dirac(3, 1))
    rows = verify_dirac_bound(SweepConfig(k=3, include_dirac=True), [g6])
    return rows[0]


@pytest.fixture(scope="module")
def rows():
    stream = [W4_G6, emit_graph6(make_dirac(3, 1))]
    return verify_dirac_bound(SweepConfig(k=3, include_dirac=True), stream)


class TestRevalidateRow:
    def test_good_row(self, found):
        assert revalidate_row(found)

    def test_witness_removed(self, found):
        assert not revalidate_row(dataclasses.replace(found, witness_cover=""))

    def test_witness_garbage(self, found):
        assert not revalidate_row(dataclasses.replace(found, witness_cover="{oops"))

    def test_graph_mismatch(self, found):
        assert not revalidate_row(dataclasses.replace(found, graph6=W4_G6))
        assert not revalidate_row(dataclasses.replace(found, n=found.n + 1))
        assert not revalidate_row(dataclasses.replace(found, m=found.m - 1))

    def test_colorable_witness_rejected(self, found):
        g = make_wheel(4)
        cover = cover_from_lists(g, [[0, 1, 2]] * g.n)
        fake = dataclasses.replace(
            found,
            graph6=W4_G6,
            n=g.n,
            m=g.m,
            witness_cover=cover_to_json_text(cover),
        )
        assert not revalidate_row(fake)

    def test_multigraph_witness_rejected(self, found):
        _, cover = make_multigraph_counterexample(3)
        fake = dataclasses.replace(found, witness_cover=cover_to_json_text(cover))
        assert not revalidate_row(fake)

    def test_perfect_regime_requires_full_matchings(self, found):
        g, lists = make_ks_example(3)
        cover = cover_from_lists(g, lists)  # critical, but some matchings partial
        row = dataclasses.replace(
            found,
            graph6=emit_graph6(g),
            n=g.n,
            m=g.m,
            witness_cover=cover_to_json_text(cover),
        )
        assert not revalidate_row(row)
        assert revalidate_row(dataclasses.replace(row, regime="partial"))

    def test_unfound_row(self, found):
        clean = dataclasses.replace(found, critical_cover_found=False, witness_cover="")
        assert revalidate_row(clean)
        leftover = dataclasses.replace(found, critical_cover_found=False)
        assert not revalidate_row(leftover)


class TestReports:
    def test_csv_round_trip(self, rows):
        buf = io.StringIO()
        emit_report(rows, "csv", buf)
        text = buf.getvalue()
        assert text.splitlines()[0] == ",".join(REPORT_FIELDS)
        back = parse_report_csv(text)
        assert len(back) == len(rows)
        for a, b in zip(back, rows):
            assert dataclasses.replace(a, seconds=0.0) == dataclasses.replace(b, seconds=0.0)
            assert a.seconds == pytest.approx(b.seconds, abs=1e-6)

    def test_csv_quotes_witness_json(self, rows):
        found = [r for r in rows if r.critical_cover_found]
        assert found and "," in found[0].witness_cover
        buf = io.StringIO()
        emit_report(rows, "csv", buf)
        assert parse_report_csv(buf.getvalue())[1].witness_cover == found[0].witness_cover

    def test_json_format(self, rows):
        buf = io.StringIO()
        emit_report(rows, "json", buf)
        payload = json.loads(buf.getvalue())
        assert [list(entry) for entry in payload] == [list(REPORT_FIELDS)] * len(rows)
        assert payload[0]["graph6"] == W4_G6
        assert payload[1]["critical_cover_found"] is True

    def test_header_only_when_empty(self):
        buf = io.StringIO()
        emit_report([], "csv", buf)
        assert buf.getvalue().strip() == ",".join(REPORT_FIELDS)
        assert parse_report_csv(buf.getvalue()) == []

    def test_file_sink(self, rows, tmp_path):
        path = tmp_path / "report.csv"
        emit_report(rows, "csv", str(path))
        assert len(parse_report_csv(path.read_text())) == len(rows)

    def test_bad_format(self, rows):
        with pytest.raises(ValueError):
            emit_report(rows, "yaml", io.StringIO())

    def test_bad_header(self):
        with pytest.raises(ValueError):
            parse_report_csv("a,b,c\n1,2,3\n")


class TestVerifyCriticalStructure:
    def test_full_clique(self):
        g = complete(4)
        report = verify_critical_structure(cover_from_lists(g, [[0, 1, 2]] * 4))
        assert report.ok and report.in_scope
        assert report.k == 3 and report.min_degree == 3
        assert report.D == (0, 1, 2, 3)
        assert report.gdp_forest
        assert len(report.components) == 1
        comp = report.components[0]
        assert comp.is_full_clique and comp.boundary_edges == 0
        assert comp.bound_ok and not comp.equality

    def test_below_scope_only_checks_degrees(self):
        _, twisted = make_c4_covers()
        report = verify_critical_structure(twisted)
        assert not report.in_scope
        assert report.min_degree_ok and report.ok
        assert report.gdp_forest  # a cycle is still a legal block
        assert not report.components[0].bound_ok  # informational below scope

    def test_joined_cliques(self):
        g, lists = make_ks_example(3)
        report = verify_critical_structure(cover_from_lists(g, lists))
        assert report.ok
        assert len(report.D) == 6
        assert len(report.components) == 2
        for comp in report.components:
            assert len(comp.vertices) == 3
            assert comp.boundary_edges == 3
            assert comp.equality and comp.equality_shape_ok
            assert not comp.is_full_clique

    def test_multigraph_boundary_counts_multiplicity(self):
        _, cover = make_multigraph_counterexample(3)
        report = verify_critical_structure(cover)
        assert report.ok
        assert report.D == (0, 1)
        assert len(report.components) == 1
        assert report.components[0].boundary_edges == 4
        assert report.gdp_forest

    def test_non_critical_rejected(self):
        straight, _ = make_c4_covers()
        with pytest.raises(ValueError, match="not critical"):
            verify_critical_structure(straight)

    def test_non_uniform_rejected(self):
        edge = SimpleGraph(2, [(0, 1)])
        lopsided = Cover(edge, [1, 2], {(0, 1): ((0, 0),)})
        with pytest.raises(ValueError, match="uniform"):
            verify_critical_structure(lopsided)


class TestSweepConfig:
    def test_validation(self):
        with pytest.raises(ValueError):
            SweepConfig(k=2)
        with pytest.raises(ValueError):
            SweepConfig(k=3, regime="greedy")
        with pytest.raises(ValueError):
            SweepConfig(k=3, parallelism=0)

    def test_size_caps(self):
        assert SweepConfig(k=3).resolved_max_n() == 9
        assert SweepConfig(k=4).resolved_max_n() == 7
        assert SweepConfig(k=4, max_n=12).resolved_max_n() == 12
