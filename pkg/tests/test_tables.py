from __future__ import annotations

import csv
import io
from pathlib import Path

import pytest

from circulant import reference as ref
from circulant.tables import TABLES, render_table

GOLDEN = Path(__file__).with_name("golden")


def _rows(text: str) -> list[list[str]]:
    return list(csv.reader(io.StringIO(text)))


def _ints(cells: list[str]) -> tuple[int, ...]:
    return tuple(int(c) for c in cells if c != "-")


@pytest.mark.parametrize("table_id", sorted(TABLES))
def test_matches_golden(table_id):
    assert render_table(table_id) == (GOLDEN / f"{table_id}.csv").read_text()


@pytest.mark.parametrize("table_id", ["t2", "t5", "t7b"])
def test_stable_across_runs(table_id):
    assert render_table(table_id) == render_table(table_id)


def test_unknown_table():
    with pytest.raises(KeyError):
        render_table("t99")


def test_t2_values():
    for row in _rows(render_table("t2"))[1:]:
        k, n, *profile = row
        assert _ints(profile) == ref.PROFILES_D5[int(k)]
        assert int(n) == ref.ORDERS_D5[int(k)]


def test_t3_values():
    for row in _rows(render_table("t3"))[1:]:
        k, n, *profile = row
        assert _ints(profile) == ref.PROFILES_D6[int(k)]
        assert int(n) == ref.ORDERS_D6[int(k)]


def test_t5_values():
    for row in _rows(render_table("t5"))[1:]:
        assert _ints(row[2:]) == ref.LMAC_GRID[int(row[1])]


def test_t7_values():
    for row in _rows(render_table("t7"))[1:]:
        assert _ints(row[2:]) == ref.DEFECTS_D6[int(row[0])]


@pytest.mark.parametrize("table_id, census", [("t7a", ref.CENSUS_D4K12), ("t7b", ref.CENSUS_D6K12), ("t7c", ref.CENSUS_D8K12)])
def test_census_tables(table_id, census):
    rows = _rows(render_table(table_id))[1:]
    body = {int(r[0][1:]): tuple(0 if c == "-" else int(c) for c in r[1:]) for r in rows if r[0] != "Total"}
    assert body == census
    d = {"t7a": 4, "t7b": 6, "t7c": 8}[table_id]
    assert _ints(rows[-1][1:]) == ref.CENSUS_TOTALS[d]


def test_t4_values():
    rows = _rows(render_table("t4"))[1:]
    for gens, expected in ref.ARRAYS_D9K3.items():
        key = " ".join(map(str, gens))
        mine = [r[2:] for r in rows if r[0] == key]
        cols = [tuple(None if x == "-" else int(x) for x in col) for col in zip(*mine)]
        assert cols == [tuple(r) for r in expected]
