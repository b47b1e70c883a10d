from __future__ import annotations

import json
import threading

import pytest

from circulant.analysis import odd_girth
from circulant.bounds import last_maximal_level
from circulant.catalog import (
    FamilyEntry,
    catalog_entries,
    catalog_entry,
    catalog_json,
    class_count,
    generator_family,
    order_formula,
    register_derived,
)
from circulant.core import make_graph_spec
from circulant.errors import BelowThreshold, UnknownFamily
from circulant.partition import distance_levels, maximal_prefix
from circulant.search import graph_diameter


@pytest.mark.parametrize(
    "d, k, expected",
    [(6, 4, 117), (8, 12, 12552), (5, 6, 144), (2, 9, 19), (3, 9, 36), (4, 3, 25), (7, 3, 76), (9, 5, 700), (9, 6, 1416)],
)
def test_order_formula(d, k, expected):
    assert order_formula(d, k) == expected


@pytest.mark.parametrize("d, k", [(9, 4), (9, 3), (8, 2), (7, 2), (7, 4 - 3), (5, 1), (6, 0)])
def test_order_formula_threshold(d, k):
    with pytest.raises(BelowThreshold):
        order_formula(d, k)


def test_order_formula_unknown_degree():
    with pytest.raises(UnknownFamily):
        order_formula(10, 5)


@pytest.mark.parametrize("d, k, expected", [(6, 2, 3), (7, 6, 1), (9, 7, 2), (6, 3, 2), (6, 4, 1), (8, 5, 1), (7, 5, 2)])
def test_class_count(d, k, expected):
    assert class_count(d, k) == expected


def test_generator_family_degree_six():
    e = generator_family(6, 12, 1)
    assert e.spec == make_graph_spec(2329, [1, 17, 273])
    assert e.provenance == "published-formula"
    assert generator_family(6, 12, 2).spec == make_graph_spec(2329, [1, 136, 154])


def test_generator_family_degree_eight():
    e = generator_family(8, 8)
    assert e.spec == make_graph_spec(2768, [1, 345, 1072, 1080])
    assert graph_diameter(e.spec) == 8


def test_generator_family_degree_nine_sporadic():
    e = generator_family(9, 3, 1)
    assert e.spec == make_graph_spec(130, [1, 8, 14, 47], True)
    assert e.provenance == "published-sporadic"
    assert generator_family(9, 3, 4).spec.generators == (2, 8, 13, 32)


def test_generator_family_degree_three_is_derived():
    e = generator_family(3, 5)
    assert e.spec == make_graph_spec(20, [1], True)
    assert e.provenance == "derived-by-search"


def test_generator_family_search_required():
    e = generator_family(7, 6)
    assert e.spec is None and e.search_required
    assert e.to_dict()["spec"] == "search-required"


@pytest.mark.parametrize("d, k, cid", [(6, 3, 3), (9, 3, 5), (10, 3, None), (9, 4, None), (4, 3, 2)])
def test_generator_family_unknown(d, k, cid):
    with pytest.raises(UnknownFamily):
        generator_family(d, k, cid)


def test_catalog_entry_falls_back_on_derived():
    e = catalog_entry(7, 6)
    assert e.spec is not None
    assert e.provenance == "derived-by-search"
    assert graph_diameter(e.spec) == 6 and e.spec.order == 536


@pytest.mark.parametrize("e", catalog_entries(15), ids=lambda e: f"d{e.degree}k{e.diameter}c{e.class_id}")
def test_catalog_entry_invariants(e: FamilyEntry):
    assert e.spec.order == e.order
    assert e.spec.degree == e.degree
    assert graph_diameter(e.spec) == e.diameter


# graphs whose odd girth is below 2k+1: the diameter-3 degree-9 sets (their
# intersection arrays have same-level edges at level 2) and the third class
# at degree 6, diameter 2, which contains a triangle
GIRTH_EXCEPTIONS = {(9, 3, 1): 5, (9, 3, 2): 5, (9, 3, 3): 5, (9, 3, 4): 5, (6, 2, 3): 3}


def test_odd_girth_across_catalog():
    for e in catalog_entries(15):
        want = GIRTH_EXCEPTIONS.get((e.degree, e.diameter, e.class_id), 2 * e.diameter + 1)
        assert odd_girth(e.spec) == want, e


def test_published_formula_entries_are_maximal_where_claimed():
    for e in catalog_entries(15):
        if e.provenance != "published-formula":
            continue
        assert maximal_prefix(distance_levels(e.spec)) == last_maximal_level(e.degree, e.diameter)


def test_degree_six_classes_share_profile():
    for k in (3, 6, 9, 12):
        a, b = (distance_levels(catalog_entry(6, k, c).spec) for c in (1, 2))
        assert a.profile == b.profile


def test_catalog_covers_every_class_to_fifteen():
    missing = [e for e in catalog_entries(15, include_missing=True) if e.spec is None]
    assert missing == []


def test_catalog_json_is_deterministic():
    text = catalog_json(6)
    assert text == catalog_json(6)
    recs = json.loads(text)
    assert {r["provenance"] for r in recs} <= {"published-formula", "published-sporadic", "derived-by-search"}


def test_register_derived_rejects_placeholders():
    with pytest.raises(ValueError):
        register_derived(generator_family(7, 6))


def test_register_derived_publishes():
    spec = make_graph_spec(26, [1, 3, 8], True)
    entry = FamilyEntry(7, 2, 26, 1, spec, "derived-by-search", "test")
    threads = [threading.Thread(target=register_derived, args=(entry,)) for _ in range(4)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    from circulant import catalog

    assert catalog._derived_extra[(7, 2, 1)] == entry
