from __future__ import annotations

import math

from hypothesis import assume
from hypothesis import strategies as st

from circulant.core import GraphSpec, is_connected, make_graph_spec


@st.composite
def specs(draw, max_n: int = 2000, max_f: int = 4, connected: bool = True) -> GraphSpec:
    half = draw(st.booleans())
    n = draw(st.integers(5, max_n))
    if half and n % 2:
        n += 1
    h = (n - 1) // 2
    f = draw(st.integers(1, min(max_f, h)))
    gens = draw(st.lists(st.integers(1, h), min_size=f, max_size=f, unique=True))
    spec = make_graph_spec(n, gens, half)
    if connected:
        assume(is_connected(spec))
    return spec


def units(n: int) -> list[int]:
    return [u for u in range(1, n) if math.gcd(u, n) == 1]


def scaled(spec: GraphSpec, u: int) -> GraphSpec:
    n = spec.order
    gens = sorted({min(u * g % n, n - u * g % n) for g in spec.generators})
    return make_graph_spec(n, gens, spec.include_half)
