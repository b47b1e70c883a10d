"""Extremal and largest-known circulant graphs of degree 2 to 9.

Orders come from closed formulas in the diameter. Generator sets come from
three places: explicit constructions (``published-formula``), the four degree-9
diameter-3 sets (``published-sporadic``), and sets found by the search module
and shipped in ``data/derived.json`` (``derived-by-search``).
"""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

from .core import GraphSpec, make_graph_spec
from .errors import BelowThreshold, UnknownFamily

__all__ = [
    "FamilyEntry",
    "PROVENANCES",
    "order_formula",
    "order_threshold",
    "generator_family",
    "class_count",
    "catalog_entry",
    "catalog_entries",
    "catalog_json",
    "register_derived",
]

PROVENANCES = ("published-formula", "published-sporadic", "derived-by-search")
SEARCH_REQUIRED = "search-required"
DATA_DIR = Path(__file__).with_name("data")
DERIVED_PATH = DATA_DIR / "derived.json"
K_MAX = 15


@dataclass(frozen=True)
class FamilyEntry:
    degree: int
    diameter: int
    order: int
    class_id: int | None
    spec: GraphSpec | None
    provenance: str
    method: str = ""
    # row of the type-1 total table this graph follows; None when it follows none
    t1_class: int | None = 1

    @property
    def search_required(self) -> bool:
        return self.spec is None

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "diameter": self.diameter,
            "order": self.order,
            "class_id": self.class_id,
            "spec": self.spec.to_dict() if self.spec else SEARCH_REQUIRED,
            "provenance": self.provenance,
            "method": self.method,
            "t1_class": self.t1_class,
        }


# degree -> modulus, {residue: (threshold, numerator polynomial, denominator)}
def _poly(*coeffs: int):
    def value(k: int) -> int:
        acc = 0
        for c in coeffs:
            acc = acc * k + c
        return acc

    return value


_ORDER_TABLE = {
    2: (1, {0: (1, _poly(2, 1), 1)}),
    3: (1, {0: (1, _poly(4, 0), 1)}),
    4: (1, {0: (1, _poly(2, 2, 1), 1)}),
    5: (1, {0: (2, _poly(4, 0, 0), 1)}),
    6: (3, {
        0: (3, _poly(32, 48, 54, 27), 27),
        1: (1, _poly(32, 48, 78, 31), 27),
        2: (2, _poly(32, 48, 54, 11), 27),
    }),
    7: (3, {
        0: (3, _poly(64, 0, 108, 0), 27),
        1: (4, _poly(64, 0, 60, -16), 27),
        2: (5, _poly(64, 0, 60, 16), 27),
    }),
    8: (2, {
        0: (4, _poly(1, 2, 6, 4, 0), 2),
        1: (3, _poly(1, 2, 6, 6, 1), 2),
    }),
    9: (2, {
        0: (6, _poly(1, 0, 3, 2, 0), 1),
        1: (5, _poly(1, 0, 3, 0, 0), 1),
    }),
}

# degree -> modulus, {residue: class count}
_CLASS_TABLE = {
    2: (1, {0: 1}),
    3: (1, {0: 1}),
    4: (1, {0: 1}),
    5: (1, {0: 1}),
    6: (3, {0: 2, 1: 1, 2: 2}),
    7: (3, {0: 1, 1: 2, 2: 2}),
    8: (2, {0: 1, 1: 1}),
    9: (2, {0: 1, 1: 2}),
}


def order_threshold(d: int, k: int) -> int:
    if d not in _ORDER_TABLE:
        raise UnknownFamily(f"no order formula for degree {d}")
    mod, rows = _ORDER_TABLE[d]
    return rows[k % mod][0]


def order_formula(d: int, k: int) -> int:
    """Order of the extremal or largest-known circulant graph of degree d, diameter k."""
    if d not in _ORDER_TABLE:
        raise UnknownFamily(f"no order formula for degree {d}")
    mod, rows = _ORDER_TABLE[d]
    threshold, numerator, denominator = rows[k % mod]
    if k < threshold:
        raise BelowThreshold(f"degree {d} formula for k = {k % mod} (mod {mod}) needs k >= {threshold}")
    q, r = divmod(numerator(k), denominator)
    assert r == 0, (d, k)
    return q


def class_count(d: int, k: int) -> int:
    """Number of isomorphism classes attaining the tabulated order."""
    order_formula(d, k)  # raises below threshold or for unknown degree
    if d == 6 and k == 2:
        return 3
    mod, rows = _CLASS_TABLE[d]
    return rows[k % mod]


def _families(d: int, k: int) -> dict[int, GraphSpec]:
    """Explicit generator constructions, keyed by class id."""
    if d == 2:
        return {1: make_graph_spec(2 * k + 1, [1])}
    if d == 4:
        n = 2 * k * k + 2 * k + 1
        return {1: make_graph_spec(n, [1, min(2 * k + 1, n - 2 * k - 1)])}
    if d == 6 and k % 3 == 0 and k >= 3:
        m = k // 3
        n = 32 * m**3 + 16 * m**2 + 6 * m + 1
        return {
            1: make_graph_spec(n, [1, 4 * m + 1, 16 * m * m + 4 * m + 1]),
            2: make_graph_spec(n, [1, 8 * m * m + 2 * m, 8 * m * m + 6 * m + 2]),
        }
    if d == 8 and k % 2 == 0 and k >= 4:
        m = k // 2
        n = 8 * m**4 + 8 * m**3 + 12 * m**2 + 4 * m
        gens = [1, 4 * m**3 + 4 * m**2 + 6 * m + 1, 4 * m**4 + 4 * m**2 - 4 * m, 4 * m**4 + 4 * m**2 - 2 * m]
        return {1: make_graph_spec(n, gens)}
    return {}


_D9_SPORADIC = {
    1: (1, 8, 14, 47),
    2: (1, 8, 20, 35),
    3: (1, 26, 49, 61),
    4: (2, 8, 13, 32),
}


def generator_family(d: int, k: int, class_id: int | None = None) -> FamilyEntry:
    """Explicit generator set for (d, k, class), or a search-required marker."""
    if d == 9 and k == 3:
        cid = 1 if class_id is None else class_id
        if cid not in _D9_SPORADIC:
            raise UnknownFamily(f"degree 9, diameter 3 has classes 1-4, not {class_id}")
        spec = make_graph_spec(130, _D9_SPORADIC[cid], True)
        return FamilyEntry(9, 3, 130, cid, spec, "published-sporadic", t1_class=None)
    if d == 5 and k == 1:
        if class_id not in (None, 1):
            raise UnknownFamily(f"degree 5, diameter 1 has one class, not {class_id}")
        return _sporadic_d5()
    if d not in _ORDER_TABLE:
        raise UnknownFamily(f"degree {d} is outside 2..9")
    try:
        n = order_formula(d, k)
    except BelowThreshold as exc:
        raise UnknownFamily(str(exc)) from None
    classes = class_count(d, k)
    cid = 1 if class_id is None else class_id
    if not 1 <= cid <= classes:
        raise UnknownFamily(f"degree {d}, diameter {k} has {classes} class(es), not {class_id}")
    if d == 3:
        return FamilyEntry(3, k, n, 1, make_graph_spec(4 * k, [1], True), "derived-by-search", "half-element cycle")
    explicit = _families(d, k)
    if cid in explicit:
        return FamilyEntry(d, k, n, cid, explicit[cid], "published-formula", t1_class=cid)
    return FamilyEntry(d, k, n, cid, None, "derived-by-search", SEARCH_REQUIRED, None)


# ---------------------------------------------------------------------------
# derived witnesses

_lock = threading.Lock()
_derived_extra: dict[tuple[int, int, int], FamilyEntry] = {}


def _entry_from_record(rec: dict) -> FamilyEntry:
    spec = make_graph_spec(rec["n"], rec["generators"], rec.get("half", False))
    return FamilyEntry(
        rec["degree"], rec["diameter"], rec["n"], rec.get("class_id"), spec,
        "derived-by-search", rec.get("method", ""), rec.get("t1_class"),
    )


@lru_cache(maxsize=1)
def _shipped_derived() -> dict[tuple[int, int, int], FamilyEntry]:
    if not DERIVED_PATH.exists():
        return {}
    records = json.loads(DERIVED_PATH.read_text())
    out = {}
    for rec in records:
        entry = _entry_from_record(rec)
        out[(entry.degree, entry.diameter, entry.class_id or 1)] = entry
    return out


def register_derived(entry: FamilyEntry) -> None:
    """Publish a search-derived entry for this process (single writer)."""
    if entry.spec is None or entry.provenance != "derived-by-search":
        raise ValueError("only concrete derived-by-search entries can be registered")
    key = (entry.degree, entry.diameter, entry.class_id or 1)
    with _lock:
        # copy-on-write so readers never observe a half-built mapping
        updated = dict(_derived_extra)
        updated[key] = entry
        globals()["_derived_extra"] = updated


def catalog_entry(d: int, k: int, class_id: int | None = None) -> FamilyEntry:
    """Concrete catalog graph, falling back on shipped search-derived witnesses."""
    entry = generator_family(d, k, class_id)
    if entry.spec is not None:
        return entry
    key = (d, k, entry.class_id or 1)
    found = _derived_extra.get(key) or _shipped_derived().get(key)
    return found if found is not None else entry


def catalog_entries(k_max: int = K_MAX, *, include_missing: bool = False) -> list[FamilyEntry]:
    """Every catalog entry with diameter up to ``k_max``, ordered by (d, k, class)."""
    out: list[FamilyEntry] = []
    for d in range(2, 10):
        for k in range(1, k_max + 1):
            if d == 9 and k == 3:
                out.extend(generator_family(9, 3, c) for c in sorted(_D9_SPORADIC))
                continue
            if d == 5 and k == 1:
                out.append(generator_family(5, 1))
                continue
            try:
                classes = class_count(d, k)
            except (BelowThreshold, UnknownFamily):
                continue
            for c in range(1, classes + 1):
                e = catalog_entry(d, k, c)
                if e.spec is not None or include_missing:
                    out.append(e)
    return out


def _sporadic_d5() -> FamilyEntry:
    # K6: the degree-5 diameter-1 case sits below the order formula's threshold
    return FamilyEntry(5, 1, 6, 1, make_graph_spec(6, [1, 2], True), "derived-by-search", "complete graph K6", None)


def catalog_json(k_max: int = K_MAX) -> str:
    entries = catalog_entries(k_max, include_missing=True)
    return json.dumps([e.to_dict() for e in entries], indent=1) + "\n"
