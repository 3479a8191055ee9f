"""Enumeration counts, seeded sampling, and scan report determinism."""

from __future__ import annotations

import json

import pytest

from rainbowroman.catalog import (CSV_COLUMNS, DEDUP_ORDER_CAP,
                                  LABELED_ORDER_CAP, SCAN_ORDER_CAP,
                                  enumerate_graphs, random_graphs, scan)
from rainbowroman.graph import canonical_form, edge_mask

from oracles import isomorphic

# number of isomorphism classes of simple graphs on n vertices
CLASS_COUNTS = {0: 1, 1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}
CONNECTED_CLASS_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112}


class TestEnumerate:
    @pytest.mark.parametrize("n", range(6))
    def test_labeled_count(self, n):
        assert sum(1 for _ in enumerate_graphs(n)) == 1 << (n * (n - 1) // 2)

    @pytest.mark.parametrize("n", sorted(CLASS_COUNTS))
    def test_class_count(self, n):
        assert sum(1 for _ in enumerate_graphs(n, dedup=True)) == \
            CLASS_COUNTS[n]

    @pytest.mark.parametrize("n", sorted(CONNECTED_CLASS_COUNTS))
    def test_connected_class_count(self, n):
        got = sum(1 for _ in enumerate_graphs(n, dedup=True,
                                              connected_only=True))
        assert got == CONNECTED_CLASS_COUNTS[n]

    def test_dedup_reps_are_pairwise_non_isomorphic(self):
        reps = list(enumerate_graphs(4, dedup=True))
        for i, g in enumerate(reps):
            for h in reps[i + 1:]:
                assert not isomorphic(g, h)
        forms = {canonical_form(g) for g in reps}
        assert len(forms) == len(reps)

    def test_dedup_rep_has_least_mask_in_class(self):
        reps = {canonical_form(g): g for g in enumerate_graphs(4, dedup=True)}
        for g in enumerate_graphs(4):
            rep = reps[canonical_form(g)]
            assert edge_mask(rep) <= edge_mask(g)

    def test_caps_and_bad_order(self):
        with pytest.raises(ValueError, match="labeled.*capped"):
            next(enumerate_graphs(LABELED_ORDER_CAP + 1))
        with pytest.raises(ValueError, match="dedup.*capped"):
            next(enumerate_graphs(DEDUP_ORDER_CAP + 1, dedup=True))
        with pytest.raises(ValueError, match="non-negative"):
            next(enumerate_graphs(-1))


class TestRandomGraphs:
    def test_deterministic(self):
        a = [edge_mask(g) for g in random_graphs(7, 50, seed=5)]
        b = [edge_mask(g) for g in random_graphs(7, 50, seed=5)]
        assert a == b
        assert len(set(a)) > 1

    def test_seed_matters(self):
        a = [edge_mask(g) for g in random_graphs(7, 20, seed=5)]
        b = [edge_mask(g) for g in random_graphs(7, 20, seed=6)]
        assert a != b

    def test_shapes(self):
        for g in random_graphs(5, 10, seed=0):
            assert g.order == 5
        assert list(random_graphs(3, 0, seed=0)) == []
        with pytest.raises(ValueError, match="non-negative"):
            list(random_graphs(-1, 1, seed=0))
        with pytest.raises(ValueError, match="non-negative"):
            list(random_graphs(3, -1, seed=0))


class TestScan:
    def test_exhaustive_row_set(self):
        report = scan(4)
        assert len(report.rows) == 1 + 2 + 4 + 11
        assert all(r["kind"] == "exhaustive" for r in report.rows)
        assert [r["canonical"] for r in report.rows] == \
            sorted(r["canonical"] for r in report.rows)
        orders = [r["order"] for r in report.rows]
        assert orders == sorted(orders)
        for r in report.rows:
            assert r["index"] is None
            assert r["gap"] == r["gamma_R"] - r["gamma_r2"]
            assert isinstance(r["min_functions"], int)
            assert isinstance(r["audit_all_pass"], bool)
            assert r["extremal"] == (2 * r["gamma_R"] == 3 * r["gamma_r2"])

    def test_sample_rows(self):
        report = scan(2, sample=(6, 25, 11))
        sample_rows = [r for r in report.rows if r["kind"] == "sample"]
        assert len(sample_rows) == 25
        assert sorted(r["index"] for r in sample_rows) == list(range(25))
        keys = [(r["canonical"], r["index"]) for r in sample_rows]
        assert keys == sorted(keys)
        for r in sample_rows:
            audited = r["extremal"]
            assert (r["min_functions"] is not None) == audited
            assert (r["audit_all_pass"] is not None) == audited

    def test_aggregate(self):
        report = scan(3, sample=(5, 10, 4))
        agg = report.aggregate
        assert agg["kind"] == "aggregate"
        assert agg["max_order"] == 3
        assert agg["sample"] == {"order": 5, "count": 10, "seed": 4}
        assert agg["rows"] == len(report.rows) == 1 + 2 + 4 + 10
        assert agg["extremal"] == sum(1 for r in report.rows if r["extremal"])
        assert agg["max_gap"] == max(r["gap"] for r in report.rows)
        total = sum(c for gaps in agg["gap_by_order"].values()
                    for c in gaps.values())
        assert total == agg["rows"]
        assert set(agg["gap_by_order"]) == \
            {str(r["order"]) for r in report.rows}

    def test_jsonl_bytes_deterministic(self):
        a = scan(4, sample=(7, 40, 99)).to_jsonl()
        b = scan(4, sample=(7, 40, 99)).to_jsonl()
        assert a == b
        lines = a.splitlines()
        assert a.endswith("\n")
        assert json.loads(lines[-1])["kind"] == "aggregate"
        assert len(lines) == 1 + 2 + 4 + 11 + 40 + 1
        first = json.loads(lines[0])
        assert list(first) == list(CSV_COLUMNS)

    def test_csv_bytes_deterministic(self):
        report = scan(3, sample=(5, 8, 7))
        text = report.to_csv()
        assert text == scan(3, sample=(5, 8, 7)).to_csv()
        lines = text.splitlines()
        assert lines[0] == ",".join(CSV_COLUMNS)
        assert len(lines) == 1 + len(report.rows)
        # null cells are empty, booleans lowercase
        non_extremal_sample = next(
            (r for r in report.rows
             if r["kind"] == "sample" and not r["extremal"]), None)
        assert "true" in text and "false" in text
        if non_extremal_sample is not None:
            row_line = lines[1 + report.rows.index(non_extremal_sample)]
            assert row_line.endswith(",,")

    def test_caps(self):
        with pytest.raises(ValueError, match="capped"):
            scan(SCAN_ORDER_CAP + 1)
        with pytest.raises(ValueError, match="capped"):
            scan(2, sample=(11, 5, 0))
