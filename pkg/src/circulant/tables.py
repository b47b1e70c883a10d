"""Deterministic CSV renderings of the reference tables."""

from __future__ import annotations

import csv
import io
from typing import Callable

from .analysis import census_of, total_intersection_array
from .bounds import lmac
from .catalog import catalog_entry
from .partition import distance_levels, level_defects

ABSENT = "-"


def _csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([ABSENT if cell is None else cell for cell in row])
    return buf.getvalue()


def _padded(values, width: int) -> list:
    values = list(values)
    return values + [None] * (width - len(values))


def _profile_table(d: int, label: str, ks: range, width: int) -> str:
    header = ["k", label] + [str(l) for l in range(width)]
    rows = []
    for k in ks:
        entry = catalog_entry(d, k, 1)
        profile = distance_levels(entry.spec).profile
        rows.append([k, entry.order] + _padded(profile, width))
    return _csv(header, rows)


def table_t2() -> str:
    return _profile_table(5, "CC(5,k)", range(1, 7), 7)


def table_t3() -> str:
    return _profile_table(6, "DF(6,k)", range(1, 16), 16)


def table_t4() -> str:
    header = ["generators", "level", "c", "a", "b"]
    rows = []
    for cid in range(1, 5):
        entry = catalog_entry(9, 3, cid)
        tia = total_intersection_array(distance_levels(entry.spec))
        gens = " ".join(map(str, entry.spec.generators))
        for l in range(tia.diameter + 1):
            rows.append([gens, l, tia.c_row[l], tia.a_row[l], tia.b_row[l]])
    return _csv(header, rows)


def table_t5() -> str:
    header = ["f", "d"] + [str(l) for l in range(2, 11)]
    rows = [[d // 2, d] + [lmac(d, l) for l in range(2, 11)] for d in range(2, 10)]
    return _csv(header, rows)


_T6_TEXT = {
    2: ("2", "k"),
    3: ("4", "k"),
    4: ("4l", "k"),
    5: ("8l-4", "k-1"),
    6: ("4l^2+2", "floor((2k+1)/3)"),
    7: ("8l^2-8l+8", "floor(2k/3)"),
    8: ("(8l^3+16l)/3", "floor((k+1)/2)"),
    9: ("(16l^3-24l^2+56l-24)/3", "floor(k/2)"),
}


def table_t6() -> str:
    header = ["f", "d", "LM_AC(d,1)", "LM_AC(d,l) l>=2", "last maximal level"]
    rows = [[d // 2, d, lmac(d, 1), *_T6_TEXT[d]] for d in range(2, 10)]
    return _csv(header, rows)


def table_t7() -> str:
    header = ["k", "n"] + [str(l) for l in range(16)]
    rows = []
    for k in range(3, 16):
        entry = catalog_entry(6, k, 1)
        defects = level_defects(distance_levels(entry.spec)).defects
        rows.append([k, entry.order] + _padded(defects, 16))
    return _csv(header, rows)


def _census_table(d: int, k: int) -> str:
    census = census_of(catalog_entry(d, k, 1).spec)
    header = ["type"] + [str(l) for l in range(k + 1)]
    rows = []
    for s, row in enumerate(census.grid()[: census.max_type() + 1]):
        rows.append([f"T{s}"] + [c if c else None for c in row])
    rows.append(["Total"] + [census.level_total(l) for l in range(k + 1)])
    return _csv(header, rows)


def table_t7a() -> str:
    return _census_table(4, 12)


def table_t7b() -> str:
    return _census_table(6, 12)


def table_t7c() -> str:
    return _census_table(8, 12)


_T8_ROWS = [
    (2, "Extremal", "CC(2,k)", None, "2k"),
    (3, "Extremal", "CC(3,k)", None, "2k+1"),
    (4, "Extremal", "CC(4,k)", None, "4k"),
    (5, "Extremal", "CC(5,k)", None, "4k-1"),
    (6, "Largest known", "DF(6,k)", 1, "4k"),
    (6, "Largest known", "DF(6,k)", 2, "4k+2"),
    (7, "Largest known", "DF(7,k)", 1, "4k-1"),
    (7, "Largest known", "DF(7,k)", 2, "4k+1"),
    (8, "Largest known", "L(8,k)", None, "4k+4"),
    (9, "Largest known", "L(9,k)", 1, "4k+1"),
    (9, "Largest known", "L(9,k)", 2, "4k+1"),
]


def table_t8() -> str:
    header = ["d", "status", "order", "class", "T1 vertices"]
    return _csv(header, [list(r) for r in _T8_ROWS])


TABLES: dict[str, Callable[[], str]] = {
    "t2": table_t2,
    "t3": table_t3,
    "t4": table_t4,
    "t5": table_t5,
    "t6": table_t6,
    "t7": table_t7,
    "t7a": table_t7a,
    "t7b": table_t7b,
    "t7c": table_t7c,
    "t8": table_t8,
}


def render_table(table_id: str) -> str:
    try:
        builder = TABLES[table_id.lower()]
    except KeyError:
        raise KeyError(f"unknown table {table_id!r}; choose from {', '.join(TABLES)}") from None
    return builder()
