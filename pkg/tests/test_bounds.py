from __future__ import annotations

import pytest

from circulant.bounds import last_maximal_level, lmac, lmac_closed, mac_bound, s_poly


@pytest.mark.parametrize("f, k, expected", [(2, 2, 13), (3, 1, 7), (0, 5, 1), (4, 0, 1)])
def test_s_poly(f, k, expected):
    assert s_poly(f, k) == expected


def test_s_poly_rejects_negative():
    with pytest.raises(ValueError):
        s_poly(-1, 2)


@pytest.mark.parametrize("d, k, expected", [(4, 2, 13), (7, 2, 32), (5, 2, 18), (9, 3, 170)])
def test_mac_bound(d, k, expected):
    assert mac_bound(d, k) == expected


@pytest.mark.parametrize("k", range(1, 12))
def test_mac_bound_degree_two(k):
    assert mac_bound(2, k) == 2 * k + 1


def test_mac_bound_at_zero_is_the_root():
    assert all(mac_bound(d, 0) == 1 for d in range(2, 12))


@pytest.mark.parametrize("d", range(2, 12))
def test_lmac_first_level_is_degree(d):
    assert lmac(d, 1) == d


@pytest.mark.parametrize("d, l, expected", [(6, 4, 66), (9, 10, 4712), (8, 2, 32), (7, 2, 24)])
def test_lmac_values(d, l, expected):
    assert lmac(d, l) == expected


def test_lmac_rejects_level_zero():
    with pytest.raises(ValueError):
        lmac(4, 0)


@pytest.mark.parametrize("d, l, expected", [(6, 5, 102), (7, 2, 24), (8, 4, 192), (9, 3, 120)])
def test_lmac_closed_examples(d, l, expected):
    assert lmac_closed(d, l) == expected


@pytest.mark.parametrize("d", range(2, 10))
def test_lmac_closed_matches_difference(d):
    assert all(lmac_closed(d, l) == lmac(d, l) for l in range(2, 51))


@pytest.mark.parametrize("d, l", [(1, 3), (10, 3), (6, 1)])
def test_lmac_closed_domain(d, l):
    with pytest.raises(ValueError):
        lmac_closed(d, l)


@pytest.mark.parametrize(
    "d, k, expected",
    [(6, 12, 8), (8, 12, 6), (4, 7, 7), (2, 5, 5), (3, 5, 5), (5, 6, 5), (7, 9, 6), (9, 9, 4), (6, 15, 10)],
)
def test_last_maximal_level(d, k, expected):
    assert last_maximal_level(d, k) == expected


def test_last_maximal_level_domain():
    with pytest.raises(ValueError):
        last_maximal_level(10, 4)


def test_pascal_recurrence():
    for f in range(1, 7):
        for k in range(1, 31):
            assert s_poly(f, k) == s_poly(f, k - 1) + s_poly(f - 1, k) + s_poly(f - 1, k - 1)


def test_monotonicity():
    for d in (2, 3):
        assert len({lmac(d, l) for l in range(2, 40)}) == 1
    for d in range(4, 10):
        seq = [lmac(d, l) for l in range(1, 40)]
        assert all(a < b for a, b in zip(seq, seq[1:]))


def _diff(seq, order):
    for _ in range(order):
        seq = [b - a for a, b in zip(seq, seq[1:])]
    return seq


@pytest.mark.parametrize("d, order, value", [(6, 2, 8), (7, 2, 16), (8, 3, 16), (9, 3, 32)])
def test_constant_differences(d, order, value):
    seq = [lmac(d, l) for l in range(2, 30)]
    assert set(_diff(seq, order)) == {value}
