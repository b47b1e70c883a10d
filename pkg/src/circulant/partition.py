"""Distance partitions of circulant graphs around vertex 0.

Circulant graphs are vertex transitive, so the breadth-first levels around
vertex 0 carry the full distance information of the graph.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

from .bounds import lmac
from .core import GraphSpec, connection_set
from .errors import DisconnectedGraph, NegativeDefect

__all__ = [
    "LevelAssignment",
    "DefectProfile",
    "distance_levels",
    "level_defects",
    "maximal_prefix",
    "total_defect",
    "profile_rows",
    "rows_to_csv",
]

_UNSEEN = -1


@dataclass(frozen=True)
class LevelAssignment:
    spec: GraphSpec
    dist: tuple[int, ...] = field(repr=False)
    diameter: int
    profile: tuple[int, ...]

    @property
    def degree(self) -> int:
        return self.spec.degree

    def level(self, l: int) -> list[int]:
        """Vertices at distance ``l``, in residue order."""
        return [v for v, dv in enumerate(self.dist) if dv == l]

    def levels(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.diameter + 1)]
        for v, dv in enumerate(self.dist):
            out[dv].append(v)
        return out


@dataclass(frozen=True)
class DefectProfile:
    degree: int
    defects: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.defects)


def distance_levels(spec: GraphSpec) -> LevelAssignment:
    """Single-source BFS from vertex 0.

    Frontiers are expanded in residue order so the level contents do not
    depend on set iteration order.
    """
    n = spec.order
    conn = connection_set(spec)
    dist = [_UNSEEN] * n
    dist[0] = 0
    frontier = [0]
    depth = 0
    while frontier:
        nxt = []
        for v in frontier:
            for c in conn:
                w = v + c
                if w >= n:
                    w -= n
                if dist[w] == _UNSEEN:
                    dist[w] = depth + 1
                    nxt.append(w)
        if not nxt:
            break
        nxt.sort()
        frontier = nxt
        depth += 1
    reached = n - dist.count(_UNSEEN)
    if reached != n:
        raise DisconnectedGraph(f"{spec}: only {reached} of {n} vertices reachable from 0")
    profile = [0] * (depth + 1)
    for dv in dist:
        profile[dv] += 1
    return LevelAssignment(spec, tuple(dist), depth, tuple(profile))


def level_defects(assignment: LevelAssignment) -> DefectProfile:
    """Shortfall of every level against the bound; level 0 counts as 0."""
    d = assignment.degree
    defects = [0]
    for l, size in enumerate(assignment.profile[1:], start=1):
        cap = lmac(d, l)
        if size > cap:
            raise NegativeDefect(
                f"{assignment.spec}: level {l} has {size} vertices, bound is {cap}"
            )
        defects.append(cap - size)
    return DefectProfile(d, tuple(defects))


def maximal_prefix(assignment: LevelAssignment) -> int:
    """Largest L with every level up to L attaining the bound."""
    last = 0
    for l, defect in enumerate(level_defects(assignment).defects):
        if defect:
            break
        last = l
    return last


def total_defect(assignment: LevelAssignment) -> int:
    return level_defects(assignment).total


def profile_rows(assignment: LevelAssignment) -> list[dict]:
    """One record per level: level, size, bound, defect."""
    defects = level_defects(assignment).defects
    rows = []
    for l, size in enumerate(assignment.profile):
        cap = 1 if l == 0 else lmac(assignment.degree, l)
        rows.append({"level": l, "size": size, "lmac": cap, "defect": defects[l]})
    return rows


def rows_to_csv(rows: list[dict]) -> str:
    if not rows:
        return ""
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def rows_to_json(rows: list[dict]) -> str:
    return json.dumps(rows)
