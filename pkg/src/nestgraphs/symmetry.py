"""Transitivity classes, local structure, cycle censuses and alternets."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Optional

from .autgroup import orbits, stabilizer_order
from .bicirculant import NestParams, build, isomorphism_moves
from .graph import GraphError, LabeledGraph, canonical_cycle, girth, is_bipartite
from .perm import PermGroup

CLASSES = ("NotVT", "VTOnly", "AT", "HAT", "ETNotVT")


@dataclass(frozen=True)
class TransitivityReport:
    vertex_orbit_count: int
    edge_orbit_count: int
    arc_orbit_count: int
    klass: str
    lam: int
    girth: object
    bipartite: bool
    aut_order: int
    stab_order: int

    @property
    def edge_transitive(self) -> bool:
        return self.edge_orbit_count == 1


def lambda_from_params(p) -> int:
    """Number of 1s among the cyclic gaps of the sorted spoke offsets."""
    offs = sorted(s % p.n for s in p.spokes)
    gaps = [(offs[(i + 1) % len(offs)] - offs[i]) % p.n for i in range(len(offs))]
    return sum(1 for gap in gaps if gap == 1)


def classify(g: LabeledGraph, grp: PermGroup) -> TransitivityReport:
    nv = len(orbits(grp, "vertices", g))
    ne = len(orbits(grp, "edges", g))
    na = len(orbits(grp, "arcs", g))
    if nv == 1:
        if na == 1:
            klass = "AT"
        elif ne == 1:
            klass = "HAT"
        else:
            klass = "VTOnly"
    else:
        klass = "ETNotVT" if ne == 1 else "NotVT"
    edges = g.edges()
    lam = (g.rows[edges[0][0]] & g.rows[edges[0][1]]).bit_count() if edges else 0
    if g.params is not None and g.params.n >= 3:
        direct = (g.rows[0] & g.rows[1]).bit_count()
        if direct != lambda_from_params(g.params):
            raise ArithmeticError("triangle count on u0u1 disagrees with the parameter formula")
    return TransitivityReport(
        vertex_orbit_count=nv,
        edge_orbit_count=ne,
        arc_orbit_count=na,
        klass=klass,
        lam=lam,
        girth=girth(g),
        bipartite=is_bipartite(g),
        aut_order=grp.order,
        stab_order=stabilizer_order(grp, 0),
    )


# local structure -----------------------------------------------------------

@dataclass(frozen=True)
class LocalStructure:
    x: int
    y: int
    vertices: tuple
    edges: tuple
    side_x: tuple
    side_y: tuple
    mu: int


def _check_edge(g, x, y):
    if not (0 <= x < g.vertex_count and 0 <= y < g.vertex_count) or not g.has_edge(x, y):
        raise GraphError(f"({x}, {y}) is not an edge")


def local_structure(g: LabeledGraph, x: int, y: int) -> LocalStructure:
    """Subgraph on the neighbours of ``x`` and ``y`` that are not common to both."""
    _check_edge(g, x, y)
    nx_, ny = set(g.adjacency[x]), set(g.adjacency[y])
    common = nx_ & ny
    side_x = tuple(sorted(nx_ - common - {y}))
    side_y = tuple(sorted(ny - common - {x}))
    verts = tuple(sorted(set(side_x) | set(side_y)))
    vs = set(verts)
    edges = tuple(sorted((a, b) for a, b in g.edge_labels if a in vs and b in vs))
    sx = set(side_x)
    mu = sum(1 for a, b in edges if (a in sx) != (b in sx))
    return LocalStructure(x, y, verts, edges, side_x, side_y, mu)


def s_vertex(g: LabeledGraph, x: int, y: int) -> int:
    """Internal vertex of the side of ``y`` when that side induces a 2-path."""
    ls = local_structure(g, x, y)
    side = set(ls.side_y)
    inner = [(a, b) for a, b in ls.edges if a in side and b in side]
    deg = Counter()
    for a, b in inner:
        deg[a] += 1
        deg[b] += 1
    if len(side) != 3 or len(inner) != 2 or sorted(deg.values()) != [1, 1, 2]:
        raise GraphError(f"s undefined for ({x}, {y}): side of {y} is not a 2-path")
    return next(v for v, d in deg.items() if d == 2)


def s_walk(g: LabeledGraph, arc) -> list:
    """Closed walk ``x, y, s(x, y), ...`` until the starting arc recurs."""
    x, y = arc
    walk = [x]
    a, b = x, y
    limit = 2 * g.edge_count + 1
    while True:
        walk.append(b)
        a, b = b, s_vertex(g, a, b)
        if (a, b) == (x, y):
            return walk[:-1]
        if len(walk) > limit:
            raise GraphError("s-walk did not close")


# cycle census --------------------------------------------------------------

FOUR_SPOKE_CODES = {
    ("0", "b", "0", "c"): "O1",
    ("0", "b", "1", "c"): "O2",
    ("0", "c", "0", "c"): "O3",
    ("0", "c", "1", "b"): "O4",
    ("0", "c", "1", "c"): "O5",
    ("1", "b", "1", "c"): "O6",
    ("1", "c", "1", "c"): "O7",
}
_SYMBOL_ORDER = {"0": 0, "1": 1, "b": 2, "c": 3}


@dataclass
class CycleCensus:
    length: int
    N0: int
    N2: int
    N4: int
    total: int
    induced: int
    per_edge: object  # int when uniform, else Counter of counts
    normalized: Optional[NestParams] = None
    four_spoke_codes: object = field(default_factory=list)  # or "not applicable"
    generic_five_cycle_types: object = field(default_factory=list)

    @property
    def uniform(self) -> bool:
        return isinstance(self.per_edge, int)


def all_cycles(g: LabeledGraph, length: int) -> list:
    """Every cycle of ``length`` as a canonical vertex tuple, sorted."""
    adj = g.adjacency
    found = set()
    path = []

    def extend(start, last):
        if len(path) == length:
            if g.has_edge(last, start):
                found.add(canonical_cycle(path))
            return
        for z in adj[last]:
            if z > start and z not in path:
                path.append(z)
                extend(start, z)
                path.pop()

    for s in range(g.vertex_count):
        path.append(s)
        extend(s, s)
        path.pop()
    return sorted(found)


def _is_induced(g, cyc) -> bool:
    m = len(cyc)
    for i in range(m):
        for j in range(i + 2, m):
            if (i, j) != (0, m - 1) and g.has_edge(cyc[i], cyc[j]):
                return False
    return True


def lambda_one_normalization(p: NestParams) -> Optional[NestParams]:
    """Equivalent tuple ``(n; 1, b, b+k; k)`` with ``3 <= b``, ``b+2 <= c <= n-2``, ``b-1 <= n-c``.

    The hub step may exceed ``n/2`` here.
    """
    n = p.n
    cands = []
    for q in isomorphism_moves(p):
        if q.a == 1 and q.b < q.c and (q.c - q.b - q.k) % n == 0:
            if 3 <= q.b and q.b + 2 <= q.c <= n - 2 and q.b - 1 <= n - q.c:
                cands.append(q)
    return min(cands) if cands else None


def _generic_applicable(q: NestParams) -> bool:
    n, b, k = q.n, q.b, q.k
    bad = {(-2 * k) % n, (1 - 2 * k) % n, (-k) % n, (1 - k) % n, k % n, (k + 1) % n}
    return 2 <= k <= n - 5 and b % n not in bad and 3 <= b <= (n - 1) // 2 and b + k <= n - 2


def _code(q: NestParams, cyc) -> tuple:
    n = q.n
    sym = {0: "0", 1: "1", q.b % n: "b", q.c % n: "c"}
    readings = []
    m = len(cyc)
    for seq in (list(cyc), list(cyc)[::-1]):
        for r in range(m):
            rot = seq[r:] + seq[:r]
            if rot[0] >= n:
                continue
            word = []
            for i in range(m):
                x, y = rot[i], rot[(i + 1) % m]
                u, v = (x, y) if x < n else (y, x)
                word.append(sym[(v - n - u) % n])
            if word[0] in ("0", "1"):
                readings.append(tuple(word))
    return min(readings, key=lambda w: [_SYMBOL_ORDER[s] for s in w])


def generic_five_cycles(q: NestParams) -> dict:
    """The four generic 5-cycles through ``u_0`` in the normalized labelling."""
    n, b, k = q.n, q.b, q.k

    def u(i):
        return i % n

    def v(i):
        return n + i % n

    return {
        "g.1": (u(0), v(1), u(1 - b), u(-b), v(0)),
        "g.2": (u(0), v(1), u(1 - b - k), u(-b - k), v(0)),
        "g.3": (u(0), v(b + k), u(k), v(k), v(0)),
        "g.4": (u(0), v(b + k), u(k), v(k + 1), v(1)),
    }


def cycle_census(g: LabeledGraph, length: int) -> CycleCensus:
    if length not in (4, 5):
        raise ValueError("census length must be 4 or 5")
    if g.params is None:
        raise GraphError("cycle census needs a graph built from parameters")
    cycles = all_cycles(g, length)
    labels = g.edge_labels
    split = {0: 0, 2: 0, 4: 0}
    per_edge = Counter()
    induced = 0
    for cyc in cycles:
        spokes = 0
        for i in range(length):
            x, y = cyc[i], cyc[(i + 1) % length]
            key = (x, y) if x < y else (y, x)
            per_edge[key] += 1
            spokes += labels[key].kind == "spoke"
        split[spokes] = split.get(spokes, 0) + 1
        induced += _is_induced(g, cyc)
    counts = Counter(per_edge.get(e, 0) for e in labels)
    per = next(iter(counts)) if len(counts) == 1 else counts
    census = CycleCensus(
        length=length,
        N0=split[0],
        N2=split[2],
        N4=split[4],
        total=len(cycles),
        induced=induced,
        per_edge=per,
    )
    p = g.params
    q = lambda_one_normalization(p) if isinstance(p, NestParams) else None
    census.normalized = q
    if q is None:
        census.four_spoke_codes = "not applicable"
        census.generic_five_cycle_types = "not applicable"
        return census
    h = g if q == p else build(q)
    hcycles = cycles if h is g else all_cycles(h, length)
    if length == 4:
        names = set()
        for cyc in hcycles:
            if all(h.label(cyc[i], cyc[(i + 1) % 4]).kind == "spoke" for i in range(4)):
                code = _code(q, cyc)
                names.add(FOUR_SPOKE_CODES.get(code, "".join(code)))
        census.four_spoke_codes = sorted(names)
        census.generic_five_cycle_types = "not applicable"
    else:
        census.four_spoke_codes = "not applicable"
        if not _generic_applicable(q):
            census.generic_five_cycle_types = "not applicable"
        else:
            present = set(hcycles)
            census.generic_five_cycle_types = sorted(
                name for name, cyc in generic_five_cycles(q).items()
                if canonical_cycle(cyc) in present and _is_induced(h, cyc)
            )
    return census


# orientations and alternets ------------------------------------------------

@dataclass(frozen=True)
class Orientation:
    """Set of arcs ``(tail, head)``, one per edge."""

    vertex_count: int
    arcs: tuple

    def out_degree(self, x: int) -> int:
        return sum(1 for t, _ in self.arcs if t == x)

    def in_degree(self, x: int) -> int:
        return sum(1 for _, h in self.arcs if h == x)

    def reversed(self) -> "Orientation":
        return Orientation(self.vertex_count, tuple(sorted((h, t) for t, h in self.arcs)))

    def has_arc(self, tail: int, head: int) -> bool:
        return (tail, head) in set(self.arcs)

    def lines(self, g: Optional[LabeledGraph] = None) -> list:
        name = g.vertex_name if g is not None else str
        return [f"{name(t)}>{name(h)}" for t, h in self.arcs]


def induced_orientation(g: LabeledGraph, grp: PermGroup) -> tuple:
    """The two paired orientations of a half-arc-transitive graph, ``u0 -> u1`` first."""
    report = classify(g, grp)
    if report.klass != "HAT":
        raise GraphError("graph is not half-arc-transitive")
    arc_orbits = orbits(grp, "arcs", g)
    first = next(o for o in arc_orbits if (0, 1) in o) if g.has_edge(0, 1) else arc_orbits[0]
    second = next(o for o in arc_orbits if o is not first)
    return Orientation(g.vertex_count, tuple(sorted(first))), Orientation(g.vertex_count, tuple(sorted(second)))


@dataclass(frozen=True)
class AlternetPartition:
    classes: tuple  # tuple of sorted edge tuples, ordered by least edge

    @property
    def universal(self) -> bool:
        return len(self.classes) == 1

    @property
    def count(self) -> int:
        return len(self.classes)

    def class_index(self) -> dict:
        return {e: i for i, cls in enumerate(self.classes) for e in cls}


def alternets(o: Orientation) -> AlternetPartition:
    """Components of edges sharing a common head or a common tail."""
    edges = sorted((min(t, h), max(t, h)) for t, h in o.arcs)
    index = {e: i for i, e in enumerate(edges)}
    parent = list(range(len(edges)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    first_out = {}
    first_in = {}
    for t, h in o.arcs:
        i = index[(min(t, h), max(t, h))]
        if t in first_out:
            union(first_out[t], i)
        else:
            first_out[t] = i
        if h in first_in:
            union(first_in[h], i)
        else:
            first_in[h] = i
    classes = {}
    for i, e in enumerate(edges):
        classes.setdefault(find(i), []).append(e)
    return AlternetPartition(tuple(tuple(classes[r]) for r in sorted(classes)))
