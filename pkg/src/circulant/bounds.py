"""The Abelian Cayley upper bound and its per-level differences."""

from __future__ import annotations

from math import comb

__all__ = ["s_poly", "mac_bound", "lmac", "lmac_closed", "last_maximal_level"]


def s_poly(f: int, k: int) -> int:
    """Number of points of ``Z^f`` within L1 distance ``k`` of the origin."""
    if f < 0 or k < 0:
        raise ValueError("f and k must be non-negative")
    return sum(2**i * comb(f, i) * comb(k, i) for i in range(f + 1))


def mac_bound(d: int, k: int) -> int:
    """Upper bound on the order of an Abelian Cayley graph of degree d, diameter k.

    At ``k = 0`` the value is 1 (the root alone) for every degree, so
    ``lmac(d, 1) == d`` holds for odd degrees as well.
    """
    if d < 2:
        raise ValueError(f"degree must be >= 2, got {d}")
    if k < 0:
        raise ValueError(f"diameter must be >= 0, got {k}")
    f = d // 2
    if d % 2 == 0:
        return s_poly(f, k)
    if k == 0:
        return 1
    return s_poly(f, k) + s_poly(f, k - 1)


def lmac(d: int, l: int) -> int:
    """Maximum possible size of distance level ``l >= 1``."""
    if l < 1:
        raise ValueError(f"level must be >= 1, got {l}")
    return mac_bound(d, l) - mac_bound(d, l - 1)


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    assert r == 0, (num, den)
    return q


_CLOSED_FORMS = {
    2: lambda l: 2,
    3: lambda l: 4,
    4: lambda l: 4 * l,
    5: lambda l: 8 * l - 4,
    6: lambda l: 4 * l * l + 2,
    7: lambda l: 8 * l * l - 8 * l + 8,
    8: lambda l: _exact_div(8 * l**3 + 16 * l, 3),
    9: lambda l: _exact_div(16 * l**3 - 24 * l * l + 56 * l - 24, 3),
}


def lmac_closed(d: int, l: int) -> int:
    """Per-degree polynomial for the maximal level size, valid for ``l >= 2``."""
    if d not in _CLOSED_FORMS:
        raise ValueError(f"closed form only tabulated for degrees 2..9, got {d}")
    if l < 2:
        raise ValueError(f"closed form holds for l >= 2, got {l}")
    return _CLOSED_FORMS[d](l)


def last_maximal_level(d: int, k: int) -> int:
    """Position of the last level that attains ``lmac`` in the catalog graphs."""
    if d in (2, 3, 4):
        return k
    if d == 5:
        return k - 1
    if d == 6:
        return (2 * k + 1) // 3
    if d == 7:
        return (2 * k) // 3
    if d == 8:
        return (k + 1) // 2
    if d == 9:
        return k // 2
    raise ValueError(f"last maximal level only tabulated for degrees 2..9, got {d}")
