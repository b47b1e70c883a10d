"""Reference values the library is checked against.

Profiles, bounds, defects, intersection arrays and type censuses of the
extremal and largest-known circulant graphs, stored as plain literals.
"""

from __future__ import annotations

# degree 5, diameter k -> distance partition profile
PROFILES_D5: dict[int, tuple[int, ...]] = {
    1: (1, 5),
    2: (1, 5, 10),
    3: (1, 5, 12, 18),
    4: (1, 5, 12, 20, 26),
    5: (1, 5, 12, 20, 28, 34),
    6: (1, 5, 12, 20, 28, 36, 42),
}

ORDERS_D5 = {1: 6, 2: 16, 3: 36, 4: 64, 5: 100, 6: 144}

# degree 6 (largest known), diameter k -> profile
PROFILES_D6: dict[int, tuple[int, ...]] = {
    1: (1, 6),
    2: (1, 6, 14),
    3: (1, 6, 18, 30),
    4: (1, 6, 18, 38, 54),
    5: (1, 6, 18, 38, 62, 78),
    6: (1, 6, 18, 38, 66, 94, 110),
    7: (1, 6, 18, 38, 66, 102, 134, 150),
    8: (1, 6, 18, 38, 66, 102, 142, 174, 190),
    9: (1, 6, 18, 38, 66, 102, 146, 190, 222, 238),
    10: (1, 6, 18, 38, 66, 102, 146, 198, 246, 278, 294),
    11: (1, 6, 18, 38, 66, 102, 146, 198, 254, 302, 334, 350),
    12: (1, 6, 18, 38, 66, 102, 146, 198, 258, 318, 366, 398, 414),
    13: (1, 6, 18, 38, 66, 102, 146, 198, 258, 326, 390, 438, 470, 486),
    14: (1, 6, 18, 38, 66, 102, 146, 198, 258, 326, 398, 462, 510, 542, 558),
    15: (1, 6, 18, 38, 66, 102, 146, 198, 258, 326, 402, 478, 542, 590, 622, 638),
}

ORDERS_D6 = {1: 7, 2: 21, 3: 55, 4: 117, 5: 203, 6: 333, 7: 515, 8: 737, 9: 1027, 10: 1393, 11: 1815, 12: 2329, 13: 2943, 14: 3629, 15: 4431}

# degree -> level-size bounds for l = 2..10
LMAC_GRID: dict[int, tuple[int, ...]] = {
    2: (2, 2, 2, 2, 2, 2, 2, 2, 2),
    3: (4, 4, 4, 4, 4, 4, 4, 4, 4),
    4: (8, 12, 16, 20, 24, 28, 32, 36, 40),
    5: (12, 20, 28, 36, 44, 52, 60, 68, 76),
    6: (18, 38, 66, 102, 146, 198, 258, 326, 402),
    7: (24, 56, 104, 168, 248, 344, 456, 584, 728),
    8: (32, 88, 192, 360, 608, 952, 1408, 1992, 2720),
    9: (40, 120, 280, 552, 968, 1560, 2360, 3400, 4712),
}

# degree 6, diameter k -> level defects for l = 0..k
DEFECTS_D6: dict[int, tuple[int, ...]] = {
    3: (0, 0, 0, 8),
    4: (0, 0, 0, 0, 12),
    5: (0, 0, 0, 0, 4, 24),
    6: (0, 0, 0, 0, 0, 8, 36),
    7: (0, 0, 0, 0, 0, 0, 12, 48),
    8: (0, 0, 0, 0, 0, 0, 4, 24, 68),
    9: (0, 0, 0, 0, 0, 0, 0, 8, 36, 88),
    10: (0, 0, 0, 0, 0, 0, 0, 0, 12, 48, 108),
    11: (0, 0, 0, 0, 0, 0, 0, 0, 4, 24, 68, 136),
    12: (0, 0, 0, 0, 0, 0, 0, 0, 0, 8, 36, 88, 164),
    13: (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 12, 48, 108, 192),
    14: (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 24, 68, 136, 228),
    15: (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 8, 36, 88, 164, 264),
}

# degree 9, diameter 3, order 130: generators -> (c, a, b) rows; None marks an absent cell
ARRAYS_D9K3: dict[tuple[int, ...], tuple[tuple[int | None, ...], ...]] = {
    (1, 8, 14, 47): ((None, 9, 72, 244), (0, 0, 44, 476), (9, 72, 244, None)),
    (1, 8, 20, 35): ((None, 9, 72, 242), (0, 0, 46, 478), (9, 72, 242, None)),
    (1, 26, 49, 61): ((None, 9, 72, 286), (0, 0, 2, 434), (9, 72, 286, None)),
    (2, 8, 13, 32): ((None, 9, 72, 234), (0, 0, 54, 486), (9, 72, 234, None)),
}
PROFILE_D9K3 = (1, 9, 40, 80)

DODECAHEDRON_ARRAY = (
    (None, 3, 6, 6, 6, 3),
    (0, 0, 6, 6, 0, 0),
    (3, 6, 6, 6, 3, None),
)

# diameter-12 type censuses: type s -> counts per level 0..12 (zeros where blank)
CENSUS_D4K12: dict[int, tuple[int, ...]] = {
    0: (1,) + (0,) * 12,
    1: (0,) + (4,) * 12,
    2: (0, 0, 4, 8, 12, 16, 20, 24, 28, 32, 36, 40, 44),
}
CENSUS_D6K12: dict[int, tuple[int, ...]] = {
    0: (1,) + (0,) * 12,
    1: (0, 6, 6, 6, 6, 6, 6, 6, 6, 0, 0, 0, 0),
    2: (0, 0, 12, 24, 36, 48, 60, 72, 84, 88, 76, 64, 52),
    3: (0, 0, 0, 8, 24, 48, 80, 120, 168, 226, 274, 306, 322),
    4: (0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 16, 28, 40),
}
CENSUS_D8K12: dict[int, tuple[int, ...]] = {
    0: (1,) + (0,) * 12,
    1: (0, 8, 8, 8, 8, 8, 8, 4, 0, 0, 0, 0, 0),
    2: (0, 0, 24, 48, 72, 96, 120, 136, 124, 100, 76, 52, 26),
    3: (0, 0, 0, 32, 96, 192, 320, 476, 624, 720, 752, 720, 624),
    4: (0, 0, 0, 0, 16, 64, 160, 328, 564, 844, 1124, 1356, 1495),
    5: (0, 0, 0, 0, 0, 0, 0, 0, 32, 96, 192, 320, 476),
    6: (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2),
}
CENSUS_TOTALS: dict[int, tuple[int, ...]] = {
    4: (1, 4, 8, 12, 16, 20, 24, 28, 32, 36, 40, 44, 48),
    6: (1, 6, 18, 38, 66, 102, 146, 198, 258, 318, 366, 398, 414),
    8: (1, 8, 32, 88, 192, 360, 608, 944, 1344, 1760, 2144, 2448, 2623),
}

# degree 6 total defect, keyed by k mod 3: (cubic coefficients, divisor)
TOTAL_DEFECT_D6 = {
    0: ((4, 6, 18, 0), 27),
    1: ((4, 6, -6, -4), 27),
    2: ((4, 6, 18, 16), 27),
}
