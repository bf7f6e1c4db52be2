"""Pure-Python kernels: partition refinement and the parameter sweep filter.

``_core.pyx`` implements the same functions; both must produce identical
results (the refinement trace hash included).
"""

from collections import deque
from itertools import combinations

BACKEND = "python"
_MASK = (1 << 64) - 1
_MUL = 1000003


def _mix(h, v):
    return ((h * _MUL) ^ (v & _MASK)) & _MASK


# partition refinement ------------------------------------------------------

class Node:
    """Ordered partition: ``lab`` lists vertices cell by cell.

    ``cell_of[v]`` is the start position of the cell holding ``v`` and
    ``size[p]`` the cell length when ``p`` is a cell start.
    """

    __slots__ = ("lab", "cell_of", "size", "ncells", "inv")

    def __init__(self, lab, cell_of, size, ncells, inv):
        self.lab = lab
        self.cell_of = cell_of
        self.size = size
        self.ncells = ncells
        self.inv = inv

    @property
    def discrete(self):
        return self.ncells == len(self.lab)

    def labeling(self):
        return list(self.lab)

    def target_cell(self):
        """Vertices of the first smallest non-singleton cell."""
        size = self.size
        n = len(self.lab)
        best = -1
        best_size = n + 1
        p = 0
        while p < n:
            s = size[p]
            if 1 < s < best_size:
                best, best_size = p, s
                if s == 2:
                    break
            p += s
        return list(self.lab[best:best + best_size]) if best >= 0 else []

    def cells(self):
        out = []
        p = 0
        while p < len(self.lab):
            out.append(list(self.lab[p:p + self.size[p]]))
            p += self.size[p]
        return out


class Refiner:
    def __init__(self, adjacency):
        self.adj = [list(a) for a in adjacency]
        self.n = len(adjacency)

    def _refine(self, lab, cell_of, size, queue, ncells):
        adj = self.adj
        n = self.n
        inq = bytearray(n)
        for s in queue:
            inq[s] = 1
        q = deque(queue)
        h = 0
        while q and ncells < n:
            w = q.popleft()
            inq[w] = 0
            cnt = {}
            for p in range(w, w + size[w]):
                for x in adj[lab[p]]:
                    cnt[x] = cnt.get(x, 0) + 1
            bycell = {}
            for x in cnt:
                s = cell_of[x]
                if size[s] > 1:
                    bycell.setdefault(s, []).append(x)
            for s in sorted(bycell):
                xs = bycell[s]
                sz = size[s]
                groups = {}
                for x in xs:
                    groups.setdefault(cnt[x], []).append(x)
                if len(xs) < sz:
                    groups[0] = [y for y in lab[s:s + sz] if y not in cnt]
                if len(groups) == 1:
                    continue
                keys = sorted(groups)
                h = _mix(_mix(_mix(h, w), s), len(keys))
                pos = s
                starts = []
                for key in keys:
                    g = groups[key]
                    lg = len(g)
                    lab[pos:pos + lg] = g
                    for y in g:
                        cell_of[y] = pos
                    size[pos] = lg
                    starts.append(pos)
                    h = _mix(_mix(h, key), lg)
                    pos += lg
                ncells += len(keys) - 1
                if inq[s]:
                    for st in starts[1:]:
                        q.append(st)
                        inq[st] = 1
                else:
                    big = 0
                    for i in range(1, len(starts)):
                        if size[starts[i]] > size[starts[big]]:
                            big = i
                    for i, st in enumerate(starts):
                        if i != big:
                            q.append(st)
                            inq[st] = 1
        return ncells, _mix(h, ncells)

    def root(self, colors):
        """Equitable refinement of the partition by ``colors`` (ordered by value)."""
        n = self.n
        lab = sorted(range(n), key=lambda v: (colors[v], v))
        cell_of = [0] * n
        size = [0] * n
        starts = []
        p = 0
        while p < n:
            q = p
            while q < n and colors[lab[q]] == colors[lab[p]]:
                q += 1
            for i in range(p, q):
                cell_of[lab[i]] = p
            size[p] = q - p
            starts.append(p)
            p = q
        ncells, h = self._refine(lab, cell_of, size, starts, len(starts))
        return Node(lab, cell_of, size, ncells, (ncells, h))

    def individualize(self, node, v):
        lab = list(node.lab)
        cell_of = list(node.cell_of)
        size = list(node.size)
        s = cell_of[v]
        sz = size[s]
        p = lab.index(v, s, s + sz)
        lab[s], lab[p] = lab[p], lab[s]
        size[s] = 1
        size[s + 1] = sz - 1
        for i in range(s + 1, s + sz):
            cell_of[lab[i]] = s + 1
        ncells, h = self._refine(lab, cell_of, size, [s], node.ncells + 1)
        return Node(lab, cell_of, size, ncells, (ncells, h))


# parameter sweep -----------------------------------------------------------

def _darts(n, spokes, k):
    """Dart tables of the two-vertex base graph.

    Darts ``0..D-1`` leave the rim side, ``D..2D-1`` the hub side.  Index
    0/1 on each side is the +/- cycle step, ``2 + j`` the ``j``-th spoke.
    """
    d = len(spokes) + 2
    vol = [1, -1] + list(spokes) + [k, -k] + [-s for s in spokes]
    head = [0, 0] + [1] * len(spokes) + [1, 1] + [0] * len(spokes)
    rev = list(range(2 * d))
    rev[0], rev[1], rev[d], rev[d + 1] = 1, 0, d + 1, d
    for j in range(len(spokes)):
        rev[2 + j] = d + 2 + j
        rev[d + 2 + j] = 2 + j
    vol = [x % n for x in vol]
    nxt = []
    for e in range(2 * d):
        side = head[e]
        nxt.append([f for f in range(side * d, side * d + d) if f != rev[e]])
    return d, vol, head, rev, nxt


def _closed_walks(n, tables, start, length):
    d, vol, head, rev, nxt = tables
    home = 0 if start < d else 1
    forbid_last = rev[start]
    count = 0
    stack = [(start, vol[start], 1)]
    while stack:
        e, total, depth = stack.pop()
        if depth == length:
            if head[e] == home and total == 0 and e != forbid_last:
                count += 1
            continue
        for f in nxt[e]:
            stack.append((f, (total + vol[f]) % n, depth + 1))
    return count


def walk_counts(n, spokes, k, length):
    """Cyclically reduced closed walks of ``length`` through each edge class.

    Order: rim, hub, then one entry per spoke offset.  For length <= 5 the
    numbers are the cycle counts through one edge of each class.
    """
    tables = _darts(n, spokes, k)
    d = tables[0]
    starts = [0, d] + [2 + j for j in range(len(spokes))]
    return [_closed_walks(n, tables, s, length) for s in starts]


def uniform_walk_counts(n, spokes, k, max_length):
    """True when every edge class has equal counts for lengths 3..max_length."""
    tables = _darts(n, spokes, k)
    d = tables[0]
    starts = [0, d] + [2 + j for j in range(len(spokes))]
    for length in range(3, max_length + 1):
        ref = _closed_walks(n, tables, starts[0], length)
        for s in starts[1:]:
            if _closed_walks(n, tables, s, length) != ref:
                return False
    return True


def is_canonical_offsets(n, spokes):
    """``spokes`` sorted with leading 0 and least among translates/negations."""
    m = len(spokes)
    first_gap = spokes[1] if m > 1 else n
    for i in range(m):
        gap = (spokes[(i + 1) % m] - spokes[i]) % n or n
        if gap < first_gap:
            return False
    target = tuple(spokes)
    for t in spokes:
        shifted = [(s - t) % n for s in spokes]
        if tuple(sorted(shifted)) < target:
            return False
        if tuple(sorted((-s) % n for s in shifted)) < target:
            return False
    return True


def sweep(n, nspokes, max_length):
    """Canonical ``(spokes, k)`` for order ``2n`` passing the walk-count filter."""
    out = []
    kmax = (n - 1) // 2
    for rest in combinations(range(1, n), nspokes - 1):
        spokes = (0,) + rest
        if not is_canonical_offsets(n, spokes):
            continue
        for k in range(1, kmax + 1):
            if uniform_walk_counts(n, spokes, k, max_length):
                out.append((spokes, k))
    return out


def count_canonical(n, nspokes):
    """Number of canonical ``(spokes, k)`` tuples the sweep visits."""
    total = 0
    for rest in combinations(range(1, n), nspokes - 1):
        if is_canonical_offsets(n, (0,) + rest):
            total += 1
    return total * ((n - 1) // 2)
