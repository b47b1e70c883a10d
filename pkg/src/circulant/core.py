"""Residue-ring model of undirected circulant graphs.

A circulant graph on ``Z_n`` is fixed by its order and its generator set:
the residues of the connection set that lie strictly between 0 and n/2,
plus the self-inverse element n/2 when the degree is odd.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvalidSpec

__all__ = [
    "GraphSpec",
    "make_graph_spec",
    "connection_set",
    "neighbors",
    "is_connected",
]


@dataclass(frozen=True)
class GraphSpec:
    """Order ``n`` plus a sorted generator set, optionally with ``n/2``."""

    order: int
    generators: tuple[int, ...]
    include_half: bool = False

    def __post_init__(self) -> None:
        n = self.order
        gens = self.generators
        if not isinstance(n, int) or n < 2:
            raise InvalidSpec(f"order must be an integer >= 2, got {n!r}")
        if len(set(gens)) != len(gens):
            raise InvalidSpec(f"duplicate generators in {list(gens)}")
        for g in gens:
            if not 0 < 2 * g < n:
                raise InvalidSpec(f"generator {g} is not strictly between 0 and n/2 = {n / 2}")
        if list(gens) != sorted(gens):
            raise InvalidSpec("generators must be strictly increasing")
        if self.include_half and n % 2:
            raise InvalidSpec(f"the half element needs an even order, got n={n}")
        if not gens and not self.include_half:
            raise InvalidSpec("empty connection set")

    @property
    def dimension(self) -> int:
        return len(self.generators)

    @property
    def degree(self) -> int:
        return 2 * len(self.generators) + (1 if self.include_half else 0)

    @property
    def half_element(self) -> int | None:
        return self.order // 2 if self.include_half else None

    def to_dict(self) -> dict:
        return {"n": self.order, "generators": list(self.generators), "half": self.include_half}

    @classmethod
    def from_dict(cls, data: dict) -> "GraphSpec":
        return make_graph_spec(int(data["n"]), data["generators"], bool(data.get("half", False)))

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "GraphSpec":
        return cls.from_dict(json.loads(text))

    def __str__(self) -> str:
        gens = ",".join(map(str, self.generators))
        return f"C_{self.order}({gens}{'; n/2' if self.include_half else ''})"


def make_graph_spec(n: int, generators: Iterable[int], include_half: bool = False) -> GraphSpec:
    """Validate and build a :class:`GraphSpec`; generators are sorted."""
    gens = [int(g) for g in generators]
    if len(set(gens)) != len(gens):
        raise InvalidSpec(f"duplicate generators in {gens}")
    return GraphSpec(int(n), tuple(sorted(gens)), bool(include_half))


def connection_set(spec: GraphSpec) -> tuple[int, ...]:
    """All residues ``c`` with ``i ~ i + c``, sorted; its size is the degree."""
    n = spec.order
    elems = {g for g in spec.generators} | {n - g for g in spec.generators}
    if spec.include_half:
        elems.add(n // 2)
    return tuple(sorted(elems))


def neighbors(spec: GraphSpec, v: int) -> tuple[int, ...]:
    n = spec.order
    return tuple(sorted((v + c) % n for c in connection_set(spec)))


def is_connected(spec: GraphSpec) -> bool:
    """The connection set generates ``Z_n`` iff its gcd with n is 1."""
    return math.gcd(spec.order, *connection_set(spec)) == 1


def parse_generators(text: str | Sequence[int]) -> list[int]:
    """Accept ``"1,5,8"`` style strings as well as integer sequences."""
    try:
        if isinstance(text, str):
            return [int(tok) for tok in text.replace(" ", "").split(",") if tok]
        return [int(g) for g in text]
    except ValueError:
        raise InvalidSpec(f"cannot read generators from {text!r}") from None
