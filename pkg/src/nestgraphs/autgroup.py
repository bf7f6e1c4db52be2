"""Automorphism groups and canonical forms.

A search tree of equitable ordered partitions: each node individualizes
one vertex of the first smallest non-singleton cell and refines.  Leaves
(discrete partitions) are relabelings of the graph.  Two leaves with equal
node invariants and equal relabeled graphs differ by an automorphism, which
is used to prune the rest of the tree.  The largest leaf under the order
(invariant sequence, relabeled edge list) gives the canonical form.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import kernels
from .graph import GraphError, LabeledGraph
from .perm import Permutation, PermGroup


@dataclass
class SearchResult:
    group: PermGroup
    certificate: bytes
    canonical_labeling: list  # position -> vertex of the best leaf
    first_path: list
    leaves: int
    nodes: int


def vertex_invariants(g: LabeledGraph) -> list:
    """Per-vertex colour: degree, triangles at the vertex, triangle profile of its edges."""
    rows = g.rows
    raw = []
    for x in range(g.vertex_count):
        per_edge = sorted((rows[x] & rows[y]).bit_count() for y in g.adjacency[x])
        raw.append((len(per_edge), sum(per_edge) // 2, tuple(per_edge)))
    ranks = {key: i for i, key in enumerate(sorted(set(raw)))}
    return [ranks[r] for r in raw]


def _edge_array(g: LabeledGraph) -> np.ndarray:
    if not g.edge_labels:
        return np.zeros((0, 2), dtype=np.int64)
    return np.array(sorted(g.edge_labels), dtype=np.int64)


class _Search:
    def __init__(self, g: LabeledGraph, backend=None):
        self.g = g
        self.n = g.vertex_count
        self.kernel = backend if backend is not None else kernels.impl
        self.refiner = self.kernel.Refiner(g.adjacency)
        self.edges = _edge_array(g)
        self.automorphisms = []
        self.first = None  # (lab, invs, prefix, cert)
        self.best = None
        self.leaves = 0
        self.nodes = 0

    # leaf handling ---------------------------------------------------------

    def _cert(self, lab) -> bytes:
        pos = np.empty(self.n, dtype=np.int64)
        pos[np.asarray(lab, dtype=np.int64)] = np.arange(self.n)
        if not len(self.edges):
            return b""
        e = pos[self.edges]
        keys = np.sort(np.minimum(e[:, 0], e[:, 1]) * self.n + np.maximum(e[:, 0], e[:, 1]))
        return keys.astype(">u8").tobytes()

    def _add_automorphism(self, lab_from, lab_to):
        images = [0] * self.n
        for a, b in zip(lab_from, lab_to):
            images[a] = b
        self.automorphisms.append(images)

    @staticmethod
    def _gca(p, q) -> int:
        i = 0
        while i < len(p) and i < len(q) and p[i] == q[i]:
            i += 1
        return i

    def _leaf(self, node, invs, prefix) -> Optional[int]:
        self.leaves += 1
        lab = node.labeling()
        cert = self._cert(lab)
        if self.first is None:
            self.first = self.best = (lab, invs, prefix, cert)
            return None
        f_lab, f_invs, f_prefix, f_cert = self.first
        if invs == f_invs and cert == f_cert:
            self._add_automorphism(f_lab, lab)
            return self._gca(prefix, f_prefix)
        b_lab, b_invs, b_prefix, b_cert = self.best
        key, best_key = (invs, cert), (b_invs, b_cert)
        if key == best_key:
            self._add_automorphism(b_lab, lab)
            return self._gca(prefix, b_prefix)
        if key > best_key:
            self.best = (lab, invs, prefix, cert)
        return None

    # tree walk ---------------------------------------------------------------

    def _stab_orbits(self, prefix):
        """Union-find parents for automorphisms fixing ``prefix`` pointwise."""
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a in self.automorphisms:
            if all(a[p] == p for p in prefix):
                for x, y in enumerate(a):
                    rx, ry = find(x), find(y)
                    if rx != ry:
                        parent[max(rx, ry)] = min(rx, ry)
        return find

    def _prunable(self, invs) -> bool:
        # A subtree can be skipped when its invariants already differ from
        # the first path and compare below the best path.
        d = len(invs)
        f_invs = self.first[1]
        if invs == f_invs[:d]:
            return False
        return invs < self.best[1][:d]

    def _visit(self, node, invs, prefix) -> Optional[int]:
        self.nodes += 1
        if node.discrete:
            return self._leaf(node, invs, prefix)
        level = len(prefix)
        cell = sorted(node.target_cell())
        explored = []
        seen_auts = -1
        find = None
        for v in cell:
            if explored:
                if seen_auts != len(self.automorphisms):
                    find = self._stab_orbits(prefix)
                    seen_auts = len(self.automorphisms)
                root = find(v)
                if any(find(w) == root for w in explored):
                    continue
            explored.append(v)
            child = self.refiner.individualize(node, v)
            child_invs = invs + [child.inv]
            if self.first is not None and self._prunable(child_invs):
                continue
            back = self._visit(child, child_invs, prefix + [v])
            if back is not None and back < level:
                return back
        return None

    def run(self) -> SearchResult:
        colors = vertex_invariants(self.g)
        root = self.refiner.root(colors)
        self._visit(root, [root.inv], [])
        first_prefix = self.first[2]
        gens = [Permutation(a) for a in self.automorphisms]
        group = PermGroup(self.n, gens, base_hint=first_prefix)
        # Orbit sizes along the first path multiply to the group order.
        expected = 1
        for i, v in enumerate(first_prefix):
            fixed = first_prefix[:i]
            sub = [a for a in self.automorphisms if all(a[p] == p for p in fixed)]
            expected *= len(_orbit(v, sub))
        if expected != group.order:
            raise ArithmeticError(f"search order {expected} != Schreier-Sims order {group.order}")
        return SearchResult(
            group=group,
            certificate=self._canonical_bytes(self.best[0]),
            canonical_labeling=list(self.best[0]),
            first_path=list(first_prefix),
            leaves=self.leaves,
            nodes=self.nodes,
        )

    def _canonical_bytes(self, lab) -> bytes:
        n = self.n
        pos = np.empty(n, dtype=np.int64)
        pos[np.asarray(lab, dtype=np.int64)] = np.arange(n)
        mat = np.zeros((n, n), dtype=bool)
        if len(self.edges):
            e = pos[self.edges]
            mat[e[:, 0], e[:, 1]] = True
            mat[e[:, 1], e[:, 0]] = True
        bits = mat[np.triu_indices(n, 1)]
        return struct.pack(">I", n) + np.packbits(bits).tobytes()


def _orbit(x, perms) -> set:
    seen = {x}
    stack = [x]
    while stack:
        y = stack.pop()
        for p in perms:
            z = p[y]
            if z not in seen:
                seen.add(z)
                stack.append(z)
    return seen


def search(g: LabeledGraph, backend=None) -> SearchResult:
    """Run the full search once: group and canonical form together."""
    if g.vertex_count < 1:
        raise GraphError("empty graph")
    return _Search(g, backend).run()


def automorphism_group(g: LabeledGraph, backend=None) -> PermGroup:
    """Full automorphism group of the underlying unlabeled graph."""
    result = search(g, backend)
    rows = g.rows
    for p in result.group.generators:
        im = p.images
        if any(not (rows[im[x]] >> im[y]) & 1 for x, y in g.edge_labels):
            raise ArithmeticError("search produced a non-automorphism")
    return result.group


def canonical_form(g: LabeledGraph, backend=None) -> bytes:
    """Certificate: equal bytes iff the graphs are isomorphic."""
    return search(g, backend).certificate


def orbits(grp: PermGroup, domain: str, g: LabeledGraph) -> list:
    """Orbit partition of ``vertices``, ``edges`` (as ``(x, y)``, ``x < y``) or ``arcs``."""
    if grp.degree != g.vertex_count:
        raise GraphError(f"group degree {grp.degree} != vertex count {g.vertex_count}")
    if domain == "vertices":
        return grp.orbits()
    if domain == "edges":
        items = g.edges()
        index = {e: i for i, e in enumerate(items)}

        def image(p, e):
            x, y = p[e[0]], p[e[1]]
            return index[(x, y) if x < y else (y, x)]
    elif domain == "arcs":
        items = sorted([(x, y) for x, y in g.edge_labels] + [(y, x) for x, y in g.edge_labels])
        index = {e: i for i, e in enumerate(items)}

        def image(p, e):
            return index[(p[e[0]], p[e[1]])]
    else:
        raise ValueError(f"unknown domain {domain!r}; use vertices, edges or arcs")

    parent = list(range(len(items)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for gen in grp.generators:
        im = gen.images
        for i, e in enumerate(items):
            a, b = find(i), find(image(im, e))
            if a != b:
                parent[max(a, b)] = min(a, b)
    classes = {}
    for i, e in enumerate(items):
        classes.setdefault(find(i), []).append(e)
    return [classes[r] for r in sorted(classes)]


def stabilizer_order(grp: PermGroup, x: int) -> int:
    """``|A_x|`` by orbit-stabilizer, checked against the stabilizer chain."""
    if not 0 <= x < grp.degree:
        raise GraphError(f"vertex {x} out of range")
    return grp.stabilizer_order(x)


def are_isomorphic(g: LabeledGraph, h: LabeledGraph) -> bool:
    return g.vertex_count == h.vertex_count and canonical_form(g) == canonical_form(h)
