"""Extremal colored-digraph generators and their closed-form edge counts.

Each generator produces a graph that avoids one (or both) rainbow triangle
patterns while packing as many edges as possible into every color layer:

``bipartite_double(n, c)``
    Vertices split into two near-halves (larger part last); every cross pair
    carries double edges in every color.  No triangle of any kind exists, and
    each layer has 2*floor(n/2)*ceil(n/2) edges — density 1/2.

``directed3(n)``
    Three near-equal parts A1, A2, A3 (larger parts last); part Ai is a
    complete double-edge digraph in both colors other than i, and every
    forward pair (A1->A2, A1->A3, A2->A3) carries single edges in all three
    colors.  Any directed cycle stays inside one part, where only two colors
    live, so no rainbow directed triangle appears; density 5/9 per color.

``transitive3(n)``
    Three sets: two of size a = round(alpha*n), alpha = (4 - sqrt 7)/9 (ties
    toward zero), one of size n - 2a, listed largest-last.  Each set is a
    complete double-edge digraph in its two designated colors — the large set
    misses color 3, the small sets are {2,3} and {3,1} — and all cross pairs
    carry double edges in color 3.  Every pair of vertices spans at most two
    colors, so no rainbow triangle of either shape; per-color density
    (52 - 4*sqrt 7)/81 ~ 0.51133.

``oriented_cyclic(n, c)``
    Three near-equal parts with all edges A1->A2, A2->A3, A3->A1 in every
    color.  Oriented; every triangle is a directed cycle, so the graph has
    no transitive triangle at all; density 1/3 per color.

``two_color_heavy(n)``
    Colors 1 and 2 complete (double edges everywhere), color 3 empty: only
    two colors, hence rainbow-free, with total edge count 2n(n-1) > 3/2 n^2
    for n > 4 — total mass alone cannot force a rainbow triangle with 3
    colors.

``expected_count`` returns the exact per-color edge count each generator
realizes (including remainder effects at small n), computed from the part
sizes rather than from the built graph.
"""

from __future__ import annotations

import math
from enum import Enum

from .graphs import ColoredDigraph, GraphBuilder, GraphInputError

__all__ = [
    "ConstructionId",
    "build_construction",
    "expected_count",
    "bipartite_double",
    "directed3",
    "transitive3",
    "oriented_cyclic",
    "two_color_heavy",
    "equal_parts",
    "small_set_size",
]

ALPHA = (4.0 - math.sqrt(7.0)) / 9.0  # size ratio of each small set in transitive3


class ConstructionId(str, Enum):
    BIPARTITE_DOUBLE = "bipartite-double"
    DIRECTED3 = "directed3"
    TRANSITIVE3 = "transitive3"
    ORIENTED_CYCLIC = "oriented-cyclic"
    TWO_COLOR_HEAVY = "two-color-heavy"


def equal_parts(n: int, k: int) -> list[list[int]]:
    """Split 0..n-1 into k contiguous near-equal parts, larger parts last."""
    base, rem = divmod(n, k)
    sizes = [base] * (k - rem) + [base + 1] * rem
    parts, start = [], 0
    for s in sizes:
        parts.append(list(range(start, start + s)))
        start += s
    return parts


def small_set_size(n: int) -> int:
    """round(alpha * n) with ties toward zero (alpha*n is never exactly .5
    for n > 0 since alpha is irrational, but the convention is pinned)."""
    x = ALPHA * n
    frac = x - math.floor(x)
    return math.floor(x) if frac <= 0.5 else math.ceil(x)


def _complete_double(b: GraphBuilder, color: int, part: list[int]) -> None:
    for i, u in enumerate(part):
        for v in part[i + 1 :]:
            b.add_double(color, u, v)


def _cross_double(b: GraphBuilder, color: int, pa: list[int], pb: list[int]) -> None:
    for u in pa:
        for v in pb:
            b.add_double(color, u, v)


def bipartite_double(n: int, c: int) -> ColoredDigraph:
    if c < 1:
        raise GraphInputError("bipartite_double needs c >= 1")
    parts = equal_parts(n, 2)
    b = GraphBuilder(n, c)
    for color in range(1, c + 1):
        _cross_double(b, color, parts[0], parts[1])
    return b.build()


def directed3(n: int) -> ColoredDigraph:
    parts = equal_parts(n, 3)
    b = GraphBuilder(n, 3)
    for i, part in enumerate(parts):  # part Ai+1 is complete in colors != i+1
        for color in range(1, 4):
            if color != i + 1:
                _complete_double(b, color, part)
    for i in range(3):  # forward single edges in every color
        for j in range(i + 1, 3):
            for color in range(1, 4):
                for u in parts[i]:
                    for v in parts[j]:
                        b.add(color, u, v)
    return b.build()


def transitive3(n: int) -> ColoredDigraph:
    a = small_set_size(n)
    if n - 2 * a < 0:
        raise GraphInputError(f"n={n} too small for the three-set split")
    # largest set last; designated inner colors per set
    sets = [list(range(a)), list(range(a, 2 * a)), list(range(2 * a, n))]
    inner_colors = [(2, 3), (3, 1), (1, 2)]  # large set misses color 3
    b = GraphBuilder(n, 3)
    for part, colors in zip(sets, inner_colors):
        for color in colors:
            _complete_double(b, color, part)
    for i in range(3):  # all cross pairs double in the missing color 3
        for j in range(i + 1, 3):
            _cross_double(b, 3, sets[i], sets[j])
    return b.build()


def oriented_cyclic(n: int, c: int) -> ColoredDigraph:
    if c < 1:
        raise GraphInputError("oriented_cyclic needs c >= 1")
    parts = equal_parts(n, 3)
    b = GraphBuilder(n, c)
    for i in range(3):
        src, dst = parts[i], parts[(i + 1) % 3]
        for color in range(1, c + 1):
            for u in src:
                for v in dst:
                    b.add(color, u, v)
    return b.build()


def two_color_heavy(n: int) -> ColoredDigraph:
    b = GraphBuilder(n, 3)
    for color in (1, 2):
        _complete_double(b, color, list(range(n)))
    return b.build()


def build_construction(cid: ConstructionId | str, n: int, c: int | None = None) -> ColoredDigraph:
    cid = ConstructionId(cid)
    if cid is ConstructionId.BIPARTITE_DOUBLE:
        return bipartite_double(n, c if c is not None else 4)
    if cid is ConstructionId.DIRECTED3:
        _reject_c(cid, c)
        return directed3(n)
    if cid is ConstructionId.TRANSITIVE3:
        _reject_c(cid, c)
        return transitive3(n)
    if cid is ConstructionId.ORIENTED_CYCLIC:
        return oriented_cyclic(n, c if c is not None else 3)
    _reject_c(cid, c)
    return two_color_heavy(n)


def _reject_c(cid: ConstructionId, c: int | None) -> None:
    if c is not None and c != 3:
        raise GraphInputError(f"{cid.value} is defined for c = 3 only")


def expected_count(cid: ConstructionId | str, n: int, color: int, c: int | None = None) -> int:
    """Exact per-color edge count the generator realizes, from part sizes."""
    cid = ConstructionId(cid)
    if cid is ConstructionId.BIPARTITE_DOUBLE:
        return 2 * (n // 2) * ((n + 1) // 2)
    if cid is ConstructionId.DIRECTED3:
        m = [len(p) for p in equal_parts(n, 3)]
        inner = sum(m[j] * (m[j] - 1) for j in range(3) if j + 1 != color)
        cross = m[0] * m[1] + m[0] * m[2] + m[1] * m[2]
        return inner + cross
    if cid is ConstructionId.TRANSITIVE3:
        a = small_set_size(n)
        b = n - 2 * a
        if color in (1, 2):
            return b * (b - 1) + a * (a - 1)
        return 2 * a * (a - 1) + 4 * a * b + 2 * a * a
    if cid is ConstructionId.ORIENTED_CYCLIC:
        m = [len(p) for p in equal_parts(n, 3)]
        return m[0] * m[1] + m[1] * m[2] + m[2] * m[0]
    # two_color_heavy
    return n * (n - 1) if color in (1, 2) else 0
