"""Finite simple undirected graphs with labeled edges.

Vertices are integers ``0 .. vertex_count - 1``.  Graphs built from
bicirculant parameters use ``u_i -> i`` and ``v_i -> n + i``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional

INFINITY = float("inf")


class GraphError(ValueError):
    """Raised for malformed graphs or invalid vertex/edge arguments."""


@dataclass(frozen=True, order=True)
class EdgeKind:
    """Role of an edge: ``rim``, ``hub`` or ``spoke`` (with its offset)."""

    kind: str
    offset: Optional[int] = None

    def __post_init__(self):
        if self.kind not in ("rim", "hub", "spoke"):
            raise GraphError(f"unknown edge kind {self.kind!r}")
        if (self.kind == "spoke") != (self.offset is not None):
            raise GraphError("only spokes carry an offset")

    def __str__(self):
        return f"spoke({self.offset})" if self.kind == "spoke" else self.kind


RIM = EdgeKind("rim")
HUB = EdgeKind("hub")


def Spoke(offset: int) -> EdgeKind:
    return EdgeKind("spoke", offset)


@dataclass(frozen=True, eq=False)
class LabeledGraph:
    """Immutable simple graph.

    ``adjacency[x]`` is the sorted tuple of neighbours of ``x`` and
    ``rows[x]`` the same set as an integer bitmask, used for O(1)
    adjacency tests and fast common-neighbour counts.
    """

    vertex_count: int
    adjacency: tuple
    edge_labels: dict
    rows: tuple = field(repr=False)
    params: object = None

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable, params=None) -> "LabeledGraph":
        """Build a graph from ``(x, y, kind)`` triples.

        Loops, repeated edges and out-of-range endpoints raise
        :class:`GraphError`.
        """
        if vertex_count < 1:
            raise GraphError("vertex_count must be positive")
        nbrs = [set() for _ in range(vertex_count)]
        labels = {}
        for x, y, kind in edges:
            if not (0 <= x < vertex_count and 0 <= y < vertex_count):
                raise GraphError(f"edge ({x}, {y}) out of range")
            if x == y:
                raise GraphError(f"loop at vertex {x}")
            key = (x, y) if x < y else (y, x)
            if key in labels:
                raise GraphError(f"parallel edge {key} ({labels[key]} and {kind})")
            labels[key] = kind
            nbrs[x].add(y)
            nbrs[y].add(x)
        adjacency = tuple(tuple(sorted(s)) for s in nbrs)
        rows = tuple(sum(1 << y for y in s) for s in nbrs)
        return cls(vertex_count, adjacency, labels, rows, params)

    @classmethod
    def from_unlabeled(cls, vertex_count: int, pairs: Iterable) -> "LabeledGraph":
        """Graph from plain vertex pairs; every edge gets the ``rim`` label."""
        return cls.from_edges(vertex_count, ((x, y, RIM) for x, y in pairs))

    @property
    def edge_count(self) -> int:
        return len(self.edge_labels)

    def edges(self) -> list:
        """Sorted list of edges as ``(x, y)`` with ``x < y``."""
        return sorted(self.edge_labels)

    def has_edge(self, x: int, y: int) -> bool:
        return (self.rows[x] >> y) & 1 == 1

    def label(self, x: int, y: int) -> EdgeKind:
        key = (x, y) if x < y else (y, x)
        try:
            return self.edge_labels[key]
        except KeyError:
            raise GraphError(f"({x}, {y}) is not an edge") from None

    def degree(self, x: int) -> int:
        return len(self.adjacency[x])

    def vertex_name(self, x: int) -> str:
        """``u3``/``v5`` style name when built from bicirculant parameters."""
        if self.params is None:
            return str(x)
        n = self.params.n
        return f"u{x}" if x < n else f"v{x - n}"

    def __repr__(self):
        tag = f", params={self.params}" if self.params is not None else ""
        return f"LabeledGraph(vertices={self.vertex_count}, edges={self.edge_count}{tag})"


def _check_vertex(g: LabeledGraph, x: int) -> None:
    if not (isinstance(x, int) and 0 <= x < g.vertex_count):
        raise GraphError(f"vertex {x!r} out of range 0..{g.vertex_count - 1}")


def neighbors(g: LabeledGraph, x: int) -> list:
    """Sorted neighbourhood of ``x``."""
    _check_vertex(g, x)
    return list(g.adjacency[x])


def common_neighbor_count(g: LabeledGraph, x: int, y: int) -> int:
    return (g.rows[x] & g.rows[y]).bit_count()


def triangles_through_edge(g: LabeledGraph, x: int, y: int) -> int:
    if not g.has_edge(x, y):
        raise GraphError(f"({x}, {y}) is not an edge")
    return common_neighbor_count(g, x, y)


def triangle_count(g: LabeledGraph) -> int:
    return sum(common_neighbor_count(g, x, y) for x, y in g.edge_labels) // 3


def _bfs_girth_from(g: LabeledGraph, root: int, bound) -> float:
    # Shortest cycle through the BFS tree of ``root``; exact when ``root``
    # lies on a shortest cycle, an upper bound otherwise.
    dist = {root: 0}
    parent = {root: -1}
    queue = deque([root])
    best = bound
    while queue:
        x = queue.popleft()
        dx = dist[x]
        if 2 * dx + 1 >= best:
            break
        for y in g.adjacency[x]:
            if y not in dist:
                dist[y] = dx + 1
                parent[y] = x
                queue.append(y)
            elif parent[x] != y:
                best = min(best, dx + dist[y] + 1)
    return best


def girth(g: LabeledGraph) -> float:
    """Length of a shortest cycle, ``INFINITY`` for forests.

    For graphs carrying bicirculant parameters only ``u_0`` and ``v_0`` are
    used as BFS roots: the cyclic shift maps every vertex to one of them.
    """
    if g.vertex_count == 0:
        raise GraphError("empty graph")
    if g.params is not None:
        roots = (0, g.params.n)
    else:
        roots = range(g.vertex_count)
    best = INFINITY
    for r in roots:
        best = _bfs_girth_from(g, r, best)
        if best == 3:
            break
    return int(best) if best != INFINITY else INFINITY


def is_bipartite(g: LabeledGraph) -> bool:
    color = [-1] * g.vertex_count
    for s in range(g.vertex_count):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.adjacency[x]:
                if color[y] < 0:
                    color[y] = color[x] ^ 1
                    queue.append(y)
                elif color[y] == color[x]:
                    return False
    return True


def canonical_cycle(seq) -> tuple:
    """Least rotation, then least reflection, of a cyclic vertex sequence."""
    seq = list(seq)
    m = len(seq)
    best = None
    for s in (seq, seq[::-1]):
        for r in range(m):
            cand = tuple(s[r:] + s[:r])
            if best is None or cand < best:
                best = cand
    return best


def cycles_through_edge(g: LabeledGraph, edge, length: int) -> list:
    """All cycles of the given length (3, 4 or 5) through ``edge``.

    Cycles are returned in canonical form (see :func:`canonical_cycle`),
    sorted.
    """
    x, y = edge
    if length not in (3, 4, 5):
        raise GraphError("cycle length must be 3, 4 or 5")
    _check_vertex(g, x)
    _check_vertex(g, y)
    if not g.has_edge(x, y):
        raise GraphError(f"({x}, {y}) is not an edge")
    adj = g.adjacency
    found = []
    path = [x, y]

    def extend(last):
        if len(path) == length:
            if g.has_edge(last, x):
                found.append(canonical_cycle(path))
            return
        for z in adj[last]:
            if z != x and z not in path:
                path.append(z)
                extend(z)
                path.pop()

    extend(y)
    return sorted(set(found))


def distance_profile(g: LabeledGraph, root: int) -> tuple:
    """Number of vertices at each distance from ``root``."""
    dist = {root: 0}
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y in g.adjacency[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    counts = [0] * (max(dist.values()) + 1)
    for d in dist.values():
        counts[d] += 1
    return tuple(counts)


def is_connected(g: LabeledGraph) -> bool:
    return sum(distance_profile(g, 0)) == g.vertex_count


# graph6 -------------------------------------------------------------------

def _g6_size(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)])
    return bytes([126, 126] + [63 + (n >> s & 63) for s in (30, 24, 18, 12, 6, 0)])


def to_graph6(g: LabeledGraph) -> str:
    """Standard graph6 encoding of the underlying unlabeled graph."""
    n = g.vertex_count
    bits = []
    for j in range(1, n):
        row = g.rows[j]
        bits.extend((row >> i) & 1 for i in range(j))
    bits.extend([0] * (-len(bits) % 6))
    body = bytes(
        63 + (bits[i] << 5 | bits[i + 1] << 4 | bits[i + 2] << 3 | bits[i + 3] << 2 | bits[i + 4] << 1 | bits[i + 5])
        for i in range(0, len(bits), 6)
    )
    return (_g6_size(n) + body).decode("ascii")


def from_graph6(text: str) -> LabeledGraph:
    """Parse a graph6 string (optional ``>>graph6<<`` header)."""
    data = text.strip()
    if data.startswith(">>graph6<<"):
        data = data[10:]
    raw = [ord(ch) - 63 for ch in data]
    if any(not 0 <= r <= 63 for r in raw):
        raise GraphError("invalid graph6 character")
    if raw[0] != 63:
        n, body = raw[0], raw[1:]
    elif raw[1] != 63:
        n = raw[1] << 12 | raw[2] << 6 | raw[3]
        body = raw[4:]
    else:
        n = 0
        for r in raw[2:8]:
            n = n << 6 | r
        body = raw[8:]
    need = n * (n - 1) // 2
    if len(body) * 6 < need:
        raise GraphError("graph6 string too short")
    bits = [(r >> s) & 1 for r in body for s in range(5, -1, -1)]
    pairs = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                pairs.append((i, j))
            pos += 1
    return LabeledGraph.from_unlabeled(n, pairs)
