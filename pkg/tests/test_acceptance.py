"""Acceptance criteria, one test each; every test prints a PASS/FAIL line."""

from __future__ import annotations

import time

import pytest

from circulant import reference as ref
from circulant.analysis import census_of, odd_girth, t1_total_formula, total_intersection_array, vertex_types, vt_formula
from circulant.analysis import dodecahedron, intersection_array_of_graph
from circulant.bounds import last_maximal_level, lmac, lmac_closed
from circulant.catalog import FamilyEntry, catalog_entries, catalog_entry, order_threshold
from circulant.partition import distance_levels, level_defects, maximal_prefix
from circulant.search import extremal_search
from circulant.verify import VerifyOutcome, _below_range, check_d10_negative, check_defect_differences, check_defects, reference_order


@pytest.fixture
def report(capsys):
    def emit(number: int, title: str, problems: list[str], detail: str = "") -> None:
        status = "PASS" if not problems else "FAIL"
        line = f"criterion {number:>2} {status}  {title}"
        if detail:
            line += f"  ({detail})"
        with capsys.disabled():
            print("\n" + line)
            for p in problems[:12]:
                print(f"    {p}")
            if len(problems) > 12:
                print(f"    ... {len(problems) - 12} more")
        assert not problems, f"criterion {number}: {len(problems)} problem(s), first: {problems[0]}"
    return emit


def in_family_range(e: FamilyEntry) -> bool:
    return e.diameter >= order_threshold(e.degree, e.diameter)


def test_criterion_01_profiles(report):
    problems = []
    for k, want in ref.PROFILES_D5.items():
        e = catalog_entry(5, k, 1)
        got = distance_levels(e.spec).profile
        if (e.order, got) != (ref.ORDERS_D5[k], want):
            problems.append(f"d=5 k={k}: order {e.order} profile {got}, want {ref.ORDERS_D5[k]} {want}")
    for k, want in ref.PROFILES_D6.items():
        e = catalog_entry(6, k, 1)
        got = distance_levels(e.spec).profile
        if (e.order, got) != (ref.ORDERS_D6[k], want):
            problems.append(f"d=6 k={k}: order {e.order} profile {got}, want {ref.ORDERS_D6[k]} {want}")
    report(1, "degree 5 and 6 profiles", problems, f"{len(ref.PROFILES_D5)} + {len(ref.PROFILES_D6)} rows")


def test_criterion_02_bounds(report):
    problems = []
    for d, row in ref.LMAC_GRID.items():
        got = tuple(lmac(d, l) for l in range(2, 11))
        if got != row:
            problems.append(f"lmac d={d}: {got} != {row}")
    for d in range(2, 10):
        for l in range(2, 51):
            if lmac_closed(d, l) != lmac(d, l):
                problems.append(f"lmac_closed({d},{l}) = {lmac_closed(d, l)} != {lmac(d, l)}")
    report(2, "level bound grid and closed form", problems, "d=2..9, l<=50")


def test_criterion_03_maximal_zones(report):
    problems, checked = [], 0
    for e in catalog_entries(15):
        if not in_family_range(e):
            continue
        checked += 1
        got, want = maximal_prefix(distance_levels(e.spec)), last_maximal_level(e.degree, e.diameter)
        if got != want:
            problems.append(f"d={e.degree} k={e.diameter} class={e.class_id}: {got} != {want}")
    report(3, "maximal prefix equals last-maximal-level formula", problems, f"{checked} graphs in family ranges")


def test_criterion_04_defects(report):
    problems = []
    for k, want in ref.DEFECTS_D6.items():
        got = level_defects(distance_levels(catalog_entry(6, k, 1).spec)).defects
        if tuple(got) != tuple(want):
            problems.append(f"d=6 k={k}: {got} != {want}")
    out = VerifyOutcome()
    check_defects(out, 15)
    check_defect_differences(out)
    problems += [f"{c.name}: expected {c.expected}, got {c.actual}" for c in out.failures()]
    report(4, "defect rows, closed-form totals, difference laws", problems, f"{len(out.checks)} checks")


def test_criterion_05_intersection_arrays(report):
    problems, middles = [], []
    for cid in range(1, 5):
        spec = catalog_entry(9, 3, cid).spec
        la = distance_levels(spec)
        tia = total_intersection_array(la)
        want = ref.ARRAYS_D9K3.get(spec.generators)
        if want is None or tuple(tia.rows()) != want or la.profile != ref.PROFILE_D9K3:
            problems.append(f"{spec}: {tia.rows()} vs {want}")
        middles.append(tia.a_row[2])
    if sorted(middles) != [2, 44, 46, 54]:
        problems.append(f"level-2 a values {middles}")
    dodeca = intersection_array_of_graph(dodecahedron(), 0)
    if tuple(dodeca.rows()) != ref.DODECAHEDRON_ARRAY:
        problems.append(f"dodecahedron {dodeca.rows()} != {ref.DODECAHEDRON_ARRAY}")
    report(5, "degree 9 n=130 arrays and dodecahedron", problems)


def test_criterion_06_odd_girth(report):
    problems, checked = [], 0
    for e in catalog_entries(15):
        checked += 1
        g = odd_girth(e.spec)
        a = total_intersection_array(distance_levels(e.spec)).a_row
        if g != 2 * e.diameter + 1 or any(a[1:e.diameter]):
            problems.append(f"d={e.degree} k={e.diameter} class={e.class_id} {e.spec}: odd girth {g}, "
                            f"interior a {list(a[1:e.diameter])}")
    report(6, "odd girth 2k+1 and thin interior for every catalog graph", problems, f"{checked} graphs")


def test_criterion_07_vertex_types(report):
    problems = []
    for d, table in ((4, ref.CENSUS_D4K12), (6, ref.CENSUS_D6K12), (8, ref.CENSUS_D8K12)):
        census = census_of(catalog_entry(d, 12, 1).spec)
        got = {s: tuple(census.get(l, s) for l in range(13)) for s in range(d + 1)
               if any(census.get(l, s) for l in range(13))}
        if got != table:
            problems.append(f"census d={d} k=12 differs")
    zone_cells = 0
    for e in catalog_entries(12):
        if e.degree < 4:
            continue
        la = distance_levels(e.spec)
        census = vertex_types(la)
        for l in range(1, maximal_prefix(la) + 1):
            for s in range(1, e.degree + 1):
                zone_cells += 1
                if census.get(l, s) != vt_formula(e.degree, s, l):
                    problems.append(f"d={e.degree} k={e.diameter} class={e.class_id} VT(s={s},l={l})")
    t1_checked = 0
    for e in catalog_entries(15):
        if not in_family_range(e):
            continue
        t1_checked += 1
        got = vertex_types(distance_levels(e.spec)).t1_total
        want = t1_total_formula(e.degree, e.diameter, e.t1_class)
        if got != want:
            problems.append(f"T1 d={e.degree} k={e.diameter} class={e.class_id}: {got} != {want}")
    report(7, "type censuses, zone formula, T1 totals", problems,
           f"{zone_cells} zone cells, {t1_checked} T1 totals")


SEARCH_CASES = ([(2, k) for k in range(1, 7)] + [(3, k) for k in range(1, 7)] + [(4, k) for k in range(1, 5)]
                + [(5, k) for k in range(1, 4)] + [(6, 2), (6, 3), (7, 2)])


def test_criterion_08_search_oracle(report):
    problems, notes = [], []
    start = time.perf_counter()
    for d, k in SEARCH_CASES:
        result = extremal_search(d, k)
        want = reference_order(d, k)
        if _below_range(d, k):
            # below the tabulated validity range: reported, not gated
            notes.append(f"d={d} k={k} untabulated: search {result.best_order}, closed form gives {want}")
            continue
        if result.best_order != want:
            problems.append(f"d={d} k={k}: search {result.best_order}, table {want}")
        if (d, k) == (6, 2) and result.multiplier_classes < 3:
            problems.append(f"d=6 k=2: {result.multiplier_classes} multiplier classes")
    elapsed = time.perf_counter() - start
    if elapsed > 300:
        problems.append(f"took {elapsed:.0f} s")
    gated = len(SEARCH_CASES) - len(notes)
    report(8, "exhaustive search reproduces tabulated orders", problems,
           f"{gated} tabulated cases, {elapsed:.1f} s; " + "; ".join(notes))


def test_criterion_09_properties(report):
    import test_properties as props

    problems = []
    for name in ("test_levels_never_exceed_bound", "test_canonical_form_orbit_constant"):
        try:
            getattr(props, name)()
        except Exception as exc:  # noqa: BLE001 - reported as a failure line
            problems.append(f"{name}: {type(exc).__name__}: {exc}")
    one = extremal_search(6, 2, 25, workers=1).to_json()
    two = extremal_search(6, 2, 25, workers=2).to_json()
    if one != two:
        problems.append("search reports differ between 1 and 2 workers")
    report(9, "bound soundness, canonical form, parallel determinism", problems, "1000 examples each")


def test_criterion_10_degree_ten_negative(report):
    out = VerifyOutcome()
    check_d10_negative(out)
    problems = [f"{c.name}: expected {c.expected}, got {c.actual}" for c in out.failures()]
    report(10, "degree 10 extrapolated T2 goes negative", problems, f"{len(out.checks)} checks")
