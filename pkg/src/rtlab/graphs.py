"""Colored directed graphs on a shared vertex set.

A *colored digraph* is a tuple (G_1, ..., G_c) of simple directed graphs on
the common vertex set {0, ..., n-1}.  We picture layer i as the set of edges
drawn in color i.  Between an unordered pair of vertices {u, v} a single layer
can hold zero, one, or two edges; two edges (u -> v and v -> u in the same
color) form a *double edge* in that color, so a pair carries up to 2c edges in
total.  A colored digraph is *oriented* when no layer contains a double edge.

Counting conventions used throughout:

    e_i(G)      -- number of edges in layer i                  (count_color)
    e_i(U, V)   -- edges of color i with one endpoint in U and
                   the other in V, each present ordered pair
                   counted once even when U and V overlap      (count_between)

Graphs are value objects: construct them through ``GraphBuilder`` or the
classmethods, after which the layer array is frozen.  All query functions are
read-only.  Colors are 1-based (matching the interchange format); vertices
are 0-based.

Interchange format (JSON)::

    {"n": 5, "c": 3, "edges": [[color, from, to], ...]}

with edges deduplicated and sorted lexicographically by (color, from, to),
so serializing the same graph always yields byte-identical output.
"""

from __future__ import annotations

import hashlib
import json
from typing import Iterable, NamedTuple, Sequence

import numpy as np

__all__ = [
    "GraphInputError",
    "EdgeRef",
    "PairProfile",
    "ColoredDigraph",
    "GraphBuilder",
    "add_edge",
    "count_color",
    "count_between",
    "classify_pair",
    "is_oriented",
    "induced",
    "dumps_graph",
    "loads_graph",
    "save_graph",
    "load_graph",
    "graph_digest",
]


class GraphInputError(ValueError):
    """Raised for structurally invalid graph input (bad vertex, color, loop)."""


class EdgeRef(NamedTuple):
    """One directed edge: color (1-based), source vertex, target vertex."""

    color: int
    src: int
    dst: int


class PairProfile(NamedTuple):
    """Per-color summary of the edges between one unordered vertex pair.

    ``counts[i]`` is the number of edges in color i+1 between u and v (0, 1
    or 2); ``singles[i]`` records the orientation of a lone edge as ``"uv"``
    or ``"vu"``, and is None when the color holds zero or two edges.
    """

    counts: tuple[int, ...]
    singles: tuple[str | None, ...]

    @property
    def total(self) -> int:
        return sum(self.counts)

    def doubled_colors(self) -> tuple[int, ...]:
        """1-based colors in which the pair carries a double edge."""
        return tuple(i + 1 for i, k in enumerate(self.counts) if k == 2)


def _check_vertex(n: int, v) -> int:
    if not isinstance(v, (int, np.integer)) or isinstance(v, bool):
        raise GraphInputError(f"vertex must be an integer, got {v!r}")
    if not 0 <= v < n:
        raise GraphInputError(f"vertex {v} out of range for n={n}")
    return int(v)


def _check_color(c: int, color) -> int:
    if not isinstance(color, (int, np.integer)) or isinstance(color, bool):
        raise GraphInputError(f"color must be an integer, got {color!r}")
    if not 1 <= color <= c:
        raise GraphInputError(f"color {color} out of range for c={c}")
    return int(color)


class ColoredDigraph:
    """An immutable c-colored directed graph on n vertices."""

    __slots__ = ("n", "c", "_layers")

    def __init__(self, n: int, c: int, layers: np.ndarray):
        if n < 0 or c < 0:
            raise GraphInputError("n and c must be non-negative")
        if layers.shape != (c, n, n) or layers.dtype != bool:
            raise GraphInputError("layer array must be bool with shape (c, n, n)")
        layers = layers.copy()
        for i in range(c):
            if layers[i].diagonal().any():
                raise GraphInputError("loops are not allowed")
        layers.setflags(write=False)
        self.n = n
        self.c = c
        self._layers = layers

    # -- constructors -------------------------------------------------

    @classmethod
    def empty(cls, n: int, c: int) -> "ColoredDigraph":
        return cls(n, c, np.zeros((c, n, n), dtype=bool))

    @classmethod
    def from_edges(cls, n: int, c: int, edges: Iterable) -> "ColoredDigraph":
        b = GraphBuilder(n, c)
        for e in edges:
            color, u, v = e
            b.add(color, u, v)
        return b.build()

    # -- queries ------------------------------------------------------

    def layer(self, color: int) -> np.ndarray:
        """Read-only adjacency matrix of one color layer."""
        return self._layers[_check_color(self.c, color) - 1]

    @property
    def layers(self) -> np.ndarray:
        return self._layers

    def has_edge(self, color: int, u: int, v: int) -> bool:
        color = _check_color(self.c, color)
        u = _check_vertex(self.n, u)
        v = _check_vertex(self.n, v)
        return bool(self._layers[color - 1, u, v])

    def edges(self) -> list[EdgeRef]:
        """All edges, sorted lexicographically by (color, src, dst)."""
        out = []
        for i in range(self.c):
            for u, v in zip(*np.nonzero(self._layers[i])):
                out.append(EdgeRef(i + 1, int(u), int(v)))
        return out

    def total_edges(self) -> int:
        return int(self._layers.sum())

    def __eq__(self, other) -> bool:
        if not isinstance(other, ColoredDigraph):
            return NotImplemented
        return (
            self.n == other.n
            and self.c == other.c
            and bool(np.array_equal(self._layers, other._layers))
        )

    __hash__ = None  # mutable-array value semantics: not hashable

    def __repr__(self) -> str:
        return f"ColoredDigraph(n={self.n}, c={self.c}, edges={self.total_edges()})"


class GraphBuilder:
    """Accumulates edges, then freezes them into a ColoredDigraph."""

    def __init__(self, n: int, c: int):
        if n < 0 or c < 0:
            raise GraphInputError("n and c must be non-negative")
        self.n = n
        self.c = c
        self._layers = np.zeros((c, n, n), dtype=bool)

    def add(self, color: int, u: int, v: int) -> "GraphBuilder":
        """Insert one edge; inserting an existing edge is a no-op."""
        color = _check_color(self.c, color)
        u = _check_vertex(self.n, u)
        v = _check_vertex(self.n, v)
        if u == v:
            raise GraphInputError(f"loop at vertex {u} rejected")
        self._layers[color - 1, u, v] = True
        return self

    def add_double(self, color: int, u: int, v: int) -> "GraphBuilder":
        return self.add(color, u, v).add(color, v, u)

    def build(self) -> ColoredDigraph:
        return ColoredDigraph(self.n, self.c, self._layers)


def add_edge(g: ColoredDigraph, e: EdgeRef | Sequence[int]) -> ColoredDigraph:
    """Return a new graph with edge e added (idempotent)."""
    color, u, v = e
    b = GraphBuilder(g.n, g.c)
    b._layers |= g.layers
    b.add(color, u, v)
    return b.build()


def count_color(g: ColoredDigraph, color: int) -> int:
    """e_i(G): number of edges in one color layer."""
    return int(g.layer(color).sum())


def count_between(g: ColoredDigraph, color: int, U: Iterable[int], V: Iterable[int]) -> int:
    """e_i(U, V): edges of color i running between U and V, in either direction.

    Each present ordered pair (a, b) is counted once, even if U and V overlap
    and the pair qualifies both as U->V and as V->U.  With U = {u}, V = {v}
    the result is the 0/1/2 multiplicity of the pair in that color.
    """
    u_mask = np.zeros(g.n, dtype=bool)
    v_mask = np.zeros(g.n, dtype=bool)
    for x in U:
        u_mask[_check_vertex(g.n, x)] = True
    for x in V:
        v_mask[_check_vertex(g.n, x)] = True
    between = np.outer(u_mask, v_mask) | np.outer(v_mask, u_mask)
    return int((g.layer(color) & between).sum())


def classify_pair(g: ColoredDigraph, u: int, v: int) -> PairProfile:
    """Multiplicity and single-edge orientation of pair (u, v), per color."""
    u = _check_vertex(g.n, u)
    v = _check_vertex(g.n, v)
    if u == v:
        raise GraphInputError("classify_pair needs two distinct vertices")
    counts = []
    singles: list[str | None] = []
    for i in range(g.c):
        fwd = bool(g.layers[i, u, v])
        rev = bool(g.layers[i, v, u])
        counts.append(int(fwd) + int(rev))
        if fwd and not rev:
            singles.append("uv")
        elif rev and not fwd:
            singles.append("vu")
        else:
            singles.append(None)
    return PairProfile(tuple(counts), tuple(singles))


def is_oriented(g: ColoredDigraph) -> bool:
    """True iff no color layer contains both (u, v) and (v, u)."""
    for i in range(g.c):
        if (g.layers[i] & g.layers[i].T).any():
            return False
    return True


def induced(g: ColoredDigraph, S: Iterable[int]) -> ColoredDigraph:
    """Induced subgraph on S, relabeled to 0..|S|-1 in sorted vertex order."""
    idx = sorted({_check_vertex(g.n, x) for x in S})
    sel = np.array(idx, dtype=int)
    layers = g.layers[:, sel[:, None], sel[None, :]] if idx else np.zeros(
        (g.c, 0, 0), dtype=bool
    )
    return ColoredDigraph(len(idx), g.c, np.ascontiguousarray(layers))


# -- interchange -------------------------------------------------------


def _edge_list(g: ColoredDigraph) -> list[list[int]]:
    return [[e.color, e.src, e.dst] for e in g.edges()]


def dumps_graph(g: ColoredDigraph) -> str:
    """Canonical JSON serialization (sorted, compact, byte-reproducible)."""
    payload = {"n": g.n, "c": g.c, "edges": _edge_list(g)}
    return json.dumps(payload, separators=(",", ":"))


def loads_graph(text: str) -> ColoredDigraph:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphInputError(f"malformed graph JSON: {exc}") from exc
    if not isinstance(payload, dict):
        raise GraphInputError("graph JSON must be an object")
    for key in ("n", "c", "edges"):
        if key not in payload:
            raise GraphInputError(f"graph JSON missing key {key!r}")
    n, c, edges = payload["n"], payload["c"], payload["edges"]
    if not isinstance(n, int) or not isinstance(c, int):
        raise GraphInputError("n and c must be integers")
    if not isinstance(edges, list):
        raise GraphInputError("edges must be a list")
    b = GraphBuilder(n, c)
    for e in edges:
        if not (isinstance(e, list) and len(e) == 3):
            raise GraphInputError(f"edge entry {e!r} must be [color, from, to]")
        b.add(e[0], e[1], e[2])
    return b.build()


def save_graph(g: ColoredDigraph, path) -> None:
    with open(path, "w") as fh:
        fh.write(dumps_graph(g) + "\n")


def load_graph(path) -> ColoredDigraph:
    with open(path) as fh:
        return loads_graph(fh.read())


def graph_digest(g: ColoredDigraph) -> str:
    """SHA-256 of the canonical serialization."""
    return hashlib.sha256(dumps_graph(g).encode()).hexdigest()
