"""Shift graphs on ordered integer pairs, and their critical cores.

The shift graph on the ground interval [1, N] has every ordered pair
(x, y) with 1 <= x < y <= N as a vertex.  Two pairs are adjacent exactly
when they chain: (x, y) ~ (y, z).  Adjacency is evaluated from that rule
on demand, so a graph object is just its parameter N and stays cheap to
hold even for N in the thousands.

For N = 2^n + 1 the vertex set carries a distinguished subset, the
critical core W: all pairs whose two endpoints lie together in one of the
n + 1 intervals

    I_l = [2^l, 2^n - 2^(n-l) + 2],      l = 0, ..., n.

Exactly 2^l - 1 ground points lie strictly left of I_l and 2^(n-l) - 1
strictly right of it.  The subgraph induced by W is the unique minimal
induced subgraph whose chromatic number still exceeds n.
"""
from __future__ import annotations

import math
import operator
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .errors import InvalidParameterError, InvalidVertexError


class Vertex(NamedTuple):
    """An ordered pair (x, y) with x < y."""

    x: int
    y: int

    def __str__(self) -> str:
        return f"({self.x},{self.y})"


class Interval(NamedTuple):
    """A closed integer interval [lo, hi]."""

    lo: int
    hi: int

    def covers(self, t: int) -> bool:
        return self.lo <= t <= self.hi


def as_vertex(v) -> Vertex:
    """Coerce a pair to a Vertex, checking 1 <= x < y."""
    try:
        x, y = v
        x = operator.index(x)
        y = operator.index(y)
    except (TypeError, ValueError):
        raise InvalidVertexError(f"not an ordered integer pair: {v!r}") from None
    if not 1 <= x < y:
        raise InvalidVertexError(f"need 1 <= x < y, got ({x},{y})")
    return Vertex(x, y)


def adjacent(u, w) -> bool:
    """Chain rule: (a, b) ~ (c, d) iff b == c or d == a."""
    u = as_vertex(u)
    w = as_vertex(w)
    return u.y == w.x or w.y == u.x


@dataclass(frozen=True)
class ShiftGraph:
    """The shift graph with vertices {(x, y) : 1 <= x < y <= n_points}."""

    n_points: int

    def __post_init__(self):
        if not isinstance(self.n_points, int) or self.n_points < 2:
            raise InvalidParameterError(f"ground interval needs N >= 2, got {self.n_points!r}")

    def vertex_count(self) -> int:
        return math.comb(self.n_points, 2)

    def edge_count(self) -> int:
        # each chain x < y < z contributes exactly one edge
        return math.comb(self.n_points, 3)

    def vertices(self) -> Iterator[Vertex]:
        for x in range(1, self.n_points):
            for y in range(x + 1, self.n_points + 1):
                yield Vertex(x, y)

    def vertex_list(self) -> tuple[Vertex, ...]:
        return tuple(self.vertices())

    def has_vertex(self, v) -> bool:
        try:
            v = as_vertex(v)
        except InvalidVertexError:
            return False
        return v.y <= self.n_points

    def require_vertex(self, v) -> Vertex:
        v = as_vertex(v)
        if v.y > self.n_points:
            raise InvalidVertexError(f"{v} is not a vertex: endpoint exceeds N={self.n_points}")
        return v

    def neighbors(self, v) -> set[Vertex]:
        """All pairs chaining into v from the left or out of v to the right."""
        v = self.require_vertex(v)
        left = {Vertex(w, v.x) for w in range(1, v.x)}
        right = {Vertex(v.y, z) for z in range(v.y + 1, self.n_points + 1)}
        return left | right

    def degree(self, v) -> int:
        v = self.require_vertex(v)
        return (v.x - 1) + (self.n_points - v.y)

    def edges(self) -> Iterator[tuple[Vertex, Vertex]]:
        for v in self.vertices():
            for z in range(v.y + 1, self.n_points + 1):
                yield v, Vertex(v.y, z)

    def induced(self, X) -> "InducedSubgraph":
        return InducedSubgraph(self, tuple(X))


@dataclass(frozen=True)
class InducedSubgraph:
    """The subgraph of a shift graph induced by an explicit vertex set."""

    parent: ShiftGraph
    vertices: tuple[Vertex, ...]

    def __post_init__(self):
        vs = tuple(sorted(self.parent.require_vertex(v) for v in self.vertices))
        if len(set(vs)) != len(vs):
            raise InvalidVertexError("induced vertex set contains duplicates")
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "_members", frozenset(vs))
        by_first: dict[int, list[Vertex]] = {}
        for v in vs:
            by_first.setdefault(v.x, []).append(v)
        object.__setattr__(self, "_by_first", {x: tuple(l) for x, l in by_first.items()})

    @property
    def n_points(self) -> int:
        return self.parent.n_points

    def vertex_count(self) -> int:
        return len(self.vertices)

    def edge_count(self) -> int:
        return sum(len(self._by_first.get(v.y, ())) for v in self.vertices)

    def vertex_list(self) -> tuple[Vertex, ...]:
        return self.vertices

    def has_vertex(self, v) -> bool:
        try:
            return as_vertex(v) in self._members
        except InvalidVertexError:
            return False

    def require_vertex(self, v) -> Vertex:
        v = as_vertex(v)
        if v not in self._members:
            raise InvalidVertexError(f"{v} is not in the induced vertex set")
        return v

    def neighbors(self, v) -> set[Vertex]:
        v = self.require_vertex(v)
        out = {w for w in self._by_first.get(v.y, ())}
        out.update(Vertex(w, v.x) for w in range(1, v.x) if Vertex(w, v.x) in self._members)
        return out

    def degree(self, v) -> int:
        return len(self.neighbors(v))

    def edges(self) -> Iterator[tuple[Vertex, Vertex]]:
        for v in self.vertices:
            for w in self._by_first.get(v.y, ()):
                yield v, w


@dataclass(frozen=True)
class CriticalCore:
    """The critical vertex set W of the shift graph on [1, 2^n + 1]."""

    n: int
    intervals: tuple[Interval, ...]
    members: tuple[Vertex, ...]

    def __post_init__(self):
        object.__setattr__(self, "_member_set", frozenset(self.members))

    @property
    def n_points(self) -> int:
        return 2 ** self.n + 1

    def member_set(self) -> frozenset[Vertex]:
        return self._member_set

    def __contains__(self, v) -> bool:
        try:
            return as_vertex(v) in self._member_set
        except InvalidVertexError:
            return False

    def __len__(self) -> int:
        return len(self.members)

    def graph(self) -> ShiftGraph:
        return ShiftGraph(self.n_points)

    def induced(self) -> InducedSubgraph:
        return InducedSubgraph(self.graph(), self.members)

    def least_interval_index(self, v) -> int:
        """Smallest l such that both endpoints of v lie in I_l."""
        v = as_vertex(v)
        for l, iv in enumerate(self.intervals):
            if iv.covers(v.x) and iv.covers(v.y):
                return l
        raise InvalidVertexError(f"{v} is not in the critical core for n={self.n}")

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "n_points": self.n_points,
            "intervals": [[iv.lo, iv.hi] for iv in self.intervals],
            "members": [[v.x, v.y] for v in self.members],
        }


def build_shift_graph(n_points: int) -> ShiftGraph:
    """Shift graph on the ground interval [1, n_points]; needs n_points >= 2."""
    return ShiftGraph(n_points)


def neighbors(graph, v) -> set[Vertex]:
    """Neighbor set of v in a ShiftGraph or InducedSubgraph view."""
    return graph.neighbors(v)


def induced_subgraph(graph: ShiftGraph, X) -> InducedSubgraph:
    """Subgraph of a shift graph induced by the vertex set X."""
    return graph.induced(X)


def critical_core(n: int) -> CriticalCore:
    """Critical core for ground interval [1, 2^n + 1]; needs n >= 2.

    A pair (x, y) belongs to the core iff some interval I_l contains both
    endpoints, which happens iff y <= max{hi(I_l) : x in I_l}.  Members
    are enumerated per left endpoint from that largest right bound.
    """
    if not isinstance(n, int) or n < 2:
        raise InvalidParameterError(f"critical core needs n >= 2, got {n!r}")
    intervals = tuple(Interval(2 ** l, 2 ** n - 2 ** (n - l) + 2) for l in range(n + 1))
    members: list[Vertex] = []
    for x in range(1, 2 ** n + 2):
        best_hi = 0
        for iv in intervals:
            if iv.covers(x) and iv.hi > best_hi:
                best_hi = iv.hi
        for y in range(x + 1, best_hi + 1):
            members.append(Vertex(x, y))
    return CriticalCore(n, intervals, tuple(members))


def is_triangle_free(view) -> bool:
    """Check edge-wise that no two adjacent vertices share a neighbor.

    Works from the edge list alone, so it does not trust the view's own
    adjacency rule.
    """
    edges = list(view.edges())
    nbrs: dict[Vertex, set[Vertex]] = {}
    for u, w in edges:
        nbrs.setdefault(u, set()).add(w)
        nbrs.setdefault(w, set()).add(u)
    return all(not nbrs[u] & nbrs[w] for u, w in edges)


def to_dimacs(view) -> str:
    """DIMACS edge-format text for a graph view, with a vertex id legend."""
    verts = view.vertex_list()
    ids = {v: i + 1 for i, v in enumerate(verts)}
    lines = ["c shift graph: vertices are ordered pairs, (x,y) ~ (y,z)"]
    lines.extend(f"c vertex {ids[v]} = ({v.x},{v.y})" for v in verts)
    edges = sorted((ids[u], ids[w]) if ids[u] < ids[w] else (ids[w], ids[u])
                   for u, w in view.edges())
    lines.append(f"p edge {len(verts)} {len(edges)}")
    lines.extend(f"e {i} {j}" for i, j in edges)
    return "\n".join(lines) + "\n"


def graph_to_json_dict(view) -> dict:
    """JSON-ready adjacency dump of a graph view."""
    verts = view.vertex_list()
    ids = {v: i + 1 for i, v in enumerate(verts)}
    edges = sorted((ids[u], ids[w]) if ids[u] < ids[w] else (ids[w], ids[u])
                   for u, w in view.edges())
    return {
        "n_points": view.n_points,
        "vertex_count": len(verts),
        "edge_count": len(edges),
        "vertices": [{"id": ids[v], "x": v.x, "y": v.y} for v in verts],
        "edges": [[i, j] for i, j in edges],
    }
