"""Total intersection arrays, odd girth and vertex-type censuses."""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from math import comb
from pathlib import Path
from typing import Mapping, Sequence

from .bounds import lmac
from .core import GraphSpec, connection_set
from .errors import UnknownFamily
from .partition import LevelAssignment, distance_levels

__all__ = [
    "TotalIntersectionArray",
    "TypeCensus",
    "total_intersection_array",
    "intersection_array_of_graph",
    "odd_girth",
    "vertex_types",
    "vt_formula",
    "t1_total_formula",
    "load_adjacency",
    "dodecahedron",
]


@dataclass(frozen=True)
class TotalIntersectionArray:
    """Back/same/forward edge totals per level.

    ``c_row[0]`` and ``b_row[-1]`` do not exist and are stored as ``None``.
    """

    c_row: tuple[int | None, ...]
    a_row: tuple[int, ...]
    b_row: tuple[int | None, ...]

    @property
    def diameter(self) -> int:
        return len(self.a_row) - 1

    def rows(self) -> list[tuple[int | None, ...]]:
        return [self.c_row, self.a_row, self.b_row]

    def as_records(self) -> list[dict]:
        return [
            {"level": l, "c": self.c_row[l], "a": self.a_row[l], "b": self.b_row[l]}
            for l in range(len(self.a_row))
        ]


def intersection_array_of_graph(adjacency: Mapping[int, Sequence[int]], root) -> TotalIntersectionArray:
    """Total intersection array of any connected undirected graph around ``root``."""
    dist = {root: 0}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w in adjacency[v]:
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    if len(dist) != len(adjacency):
        raise ValueError("graph is not connected")
    k = max(dist.values())
    c = [0] * (k + 1)
    a = [0] * (k + 1)
    b = [0] * (k + 1)
    for v, dv in dist.items():
        for w in adjacency[v]:
            step = dist[w] - dv
            if step < 0:
                c[dv] += 1
            elif step == 0:
                a[dv] += 1
            else:
                b[dv] += 1
    return TotalIntersectionArray(
        (None, *c[1:]), tuple(a), (*b[:-1], None)
    )


def total_intersection_array(assignment: LevelAssignment) -> TotalIntersectionArray:
    spec = assignment.spec
    n = spec.order
    conn = connection_set(spec)
    dist = assignment.dist
    k = assignment.diameter
    c = [0] * (k + 1)
    a = [0] * (k + 1)
    b = [0] * (k + 1)
    for v in range(n):
        dv = dist[v]
        for x in conn:
            dw = dist[(v + x) % n]
            if dw < dv:
                c[dv] += 1
            elif dw == dv:
                a[dv] += 1
            else:
                b[dv] += 1
    return TotalIntersectionArray((None, *c[1:]), tuple(a), (*b[:-1], None))


def odd_girth(spec: GraphSpec) -> int | None:
    """Length of the shortest odd cycle, or ``None`` for bipartite graphs.

    BFS on the parity double cover: the distance from ``(0, even)`` to
    ``(0, odd)`` is the shortest odd closed walk through 0, and the shortest
    odd closed walk is always a cycle.
    """
    n = spec.order
    conn = connection_set(spec)
    dist = [[-1] * n, [-1] * n]
    dist[0][0] = 0
    queue = deque([(0, 0)])
    while queue:
        v, p = queue.popleft()
        dv = dist[p][v]
        q = 1 - p
        row = dist[q]
        for x in conn:
            w = (v + x) % n
            if row[w] < 0:
                row[w] = dv + 1
                if w == 0 and q == 1:
                    return dv + 1
                queue.append((w, q))
    return None


@dataclass(frozen=True)
class TypeCensus:
    """``counts[(l, s)]``: vertices in level l with s neighbours in level l-1."""

    counts: Mapping[tuple[int, int], int]
    diameter: int
    degree: int

    @property
    def t1_total(self) -> int:
        return sum(c for (l, s), c in self.counts.items() if s == 1)

    def get(self, l: int, s: int) -> int:
        return self.counts.get((l, s), 0)

    def level_total(self, l: int) -> int:
        return sum(c for (ll, _), c in self.counts.items() if ll == l)

    def grid(self) -> list[list[int]]:
        """Rows indexed by type 0..d, columns by level 0..k."""
        return [
            [self.get(l, s) for l in range(self.diameter + 1)]
            for s in range(self.degree + 1)
        ]

    def max_type(self) -> int:
        return max(s for (_, s) in self.counts)


def vertex_types(assignment: LevelAssignment) -> TypeCensus:
    spec = assignment.spec
    n = spec.order
    conn = connection_set(spec)
    dist = assignment.dist
    counts: Counter[tuple[int, int]] = Counter()
    for v in range(n):
        dv = dist[v]
        s = sum(1 for x in conn if dist[(v + x) % n] == dv - 1)
        counts[(dv, s)] += 1
    return TypeCensus(dict(counts), assignment.diameter, spec.degree)


def _vt_even(f: int, s: int, l: int) -> int:
    if s < 1 or l < 1 or s > f:
        return 0
    return comb(f, s) * sum(
        (-1) ** (s - i) * comb(s, i) * lmac(2 * i, l) for i in range(1, s + 1)
    )


def vt_formula(d: int, s: int, l: int) -> int:
    """Predicted number of type-``s`` vertices in a maximal level ``l``.

    For odd degree the half element only adds a type-1 vertex in level 1,
    so type-1 counts are ``d`` in level 1 and ``d - 1`` beyond it.
    """
    if d < 2 or l < 1 or s < 1:
        return 0
    f = d // 2
    if d % 2 == 0:
        return _vt_even(f, s, l)
    if s > f + 1:
        return 0
    if s == 1:
        return d if l == 1 else d - 1
    if l < 2:
        return 0
    return _vt_even(f, s, l) + _vt_even(f, s - 1, l - 1)


# degree -> {class: (slope, intercept)} of the type-1 total as a function of k
_T1_TABLE: dict[int, dict[int, tuple[int, int]]] = {
    2: {1: (2, 0)},
    3: {1: (2, 1)},
    4: {1: (4, 0)},
    5: {1: (4, -1)},
    6: {1: (4, 0), 2: (4, 2)},
    7: {1: (4, -1), 2: (4, 1)},
    8: {1: (4, 4)},
    9: {1: (4, 1), 2: (4, 1)},
}


def t1_total_formula(d: int, k: int, class_id: int | None = None) -> int:
    """Tabulated total of type-1 vertices, linear in the diameter.

    ``class_id`` may be omitted when every class of the degree shares one formula.
    """
    rows = _T1_TABLE.get(d, {})
    if class_id is None and len(set(rows.values())) == 1:
        class_id = 1
    if class_id not in rows:
        raise UnknownFamily(f"no type-1 total tabulated for degree {d}, class {class_id}")
    slope, intercept = rows[class_id]
    return slope * k + intercept


def load_adjacency(path: str | Path) -> dict[int, list[int]]:
    """Read ``vertex: nbr nbr ...`` lines; ``#`` starts a comment."""
    adjacency: dict[int, list[int]] = {}
    for raw in Path(path).read_text().splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, tail = line.partition(":")
        adjacency[int(head)] = [int(tok) for tok in tail.split()]
    for v, nbrs in adjacency.items():
        for w in nbrs:
            if v not in adjacency.get(w, ()):
                raise ValueError(f"adjacency is not symmetric at {v}-{w}")
    return adjacency


def dodecahedron() -> dict[int, list[int]]:
    return load_adjacency(Path(__file__).with_name("data") / "dodecahedron.txt")


def census_of(spec: GraphSpec) -> TypeCensus:
    return vertex_types(distance_levels(spec))
