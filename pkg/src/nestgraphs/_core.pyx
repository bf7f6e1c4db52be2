# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels; same interface and results as ``_pycore``."""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free, qsort

import numpy as np
cimport numpy as cnp

cnp.import_array()

BACKEND = "compiled"

cdef uint64_t _MUL = 1000003


cdef inline uint64_t _mix(uint64_t h, long long v):
    return (h * _MUL) ^ (<uint64_t>v)


cdef int _cmp_pair(const void* a, const void* b) noexcept nogil:
    cdef long long x = (<long long*>a)[0]
    cdef long long y = (<long long*>b)[0]
    return (x > y) - (x < y)


cdef int _cmp_int(const void* a, const void* b) noexcept nogil:
    cdef int x = (<int*>a)[0]
    cdef int y = (<int*>b)[0]
    return (x > y) - (x < y)


# partition refinement ------------------------------------------------------

cdef class Node:
    cdef public object lab_arr, cell_arr, size_arr
    cdef public int ncells
    cdef public object inv

    @property
    def discrete(self):
        return self.ncells == len(self.lab_arr)

    @property
    def lab(self):
        return self.lab_arr.tolist()

    def labeling(self):
        return self.lab_arr.tolist()

    def target_cell(self):
        cdef int[::1] size = self.size_arr
        cdef int n = size.shape[0]
        cdef int p = 0, s, best = -1, best_size = n + 1
        while p < n:
            s = size[p]
            if 1 < s < best_size:
                best = p
                best_size = s
                if s == 2:
                    break
            p += s
        if best < 0:
            return []
        return self.lab_arr[best:best + best_size].tolist()

    def cells(self):
        lab = self.lab_arr.tolist()
        size = self.size_arr
        out = []
        p = 0
        while p < len(lab):
            out.append(lab[p:p + size[p]])
            p += size[p]
        return out


cdef class Refiner:
    cdef int n
    cdef int* adj_ptr
    cdef int* adj_idx
    cdef int* cnt
    cdef int* touched
    cdef int* tcells
    cdef char* cellmark
    cdef int* queue
    cdef char* inq
    cdef long long* pairs
    cdef int* starts

    def __cinit__(self, adjacency):
        cdef int n = len(adjacency)
        cdef int total = 0, i, j
        self.n = n
        for a in adjacency:
            total += len(a)
        self.adj_ptr = <int*>malloc((n + 1) * sizeof(int))
        self.adj_idx = <int*>malloc((total + 1) * sizeof(int))
        self.cnt = <int*>malloc((n + 1) * sizeof(int))
        self.touched = <int*>malloc((n + 1) * sizeof(int))
        self.tcells = <int*>malloc((n + 1) * sizeof(int))
        self.cellmark = <char*>malloc(n + 1)
        self.queue = <int*>malloc((n + 1) * sizeof(int))
        self.inq = <char*>malloc(n + 1)
        self.pairs = <long long*>malloc((n + 1) * sizeof(long long))
        self.starts = <int*>malloc((n + 1) * sizeof(int))
        if (not self.adj_ptr or not self.adj_idx or not self.cnt or not self.touched or not self.tcells
                or not self.cellmark or not self.queue or not self.inq or not self.pairs or not self.starts):
            raise MemoryError()
        j = 0
        for i in range(n):
            self.adj_ptr[i] = j
            for y in adjacency[i]:
                self.adj_idx[j] = y
                j += 1
            self.cnt[i] = 0
            self.cellmark[i] = 0
            self.inq[i] = 0
        self.adj_ptr[n] = j

    def __dealloc__(self):
        free(self.adj_ptr)
        free(self.adj_idx)
        free(self.cnt)
        free(self.touched)
        free(self.tcells)
        free(self.cellmark)
        free(self.queue)
        free(self.inq)
        free(self.pairs)
        free(self.starts)

    cdef int _refine(self, int[::1] lab, int[::1] cell_of, int[::1] size,
                     int nq0, int ncells, uint64_t* hout):
        # queue[0:nq0] holds the initial splitter cells
        cdef int n = self.n
        cdef int head = 0, qlen = nq0, cap = n + 1
        cdef int w, p, x, y, e, nt, nc, ci, s, sz, i, j, nkeys, pos, big, st, lg
        cdef long long key
        cdef uint64_t h = 0
        cdef int* cnt = self.cnt
        cdef int* touched = self.touched
        cdef int* tcells = self.tcells
        cdef long long* pairs = self.pairs
        cdef int* starts = self.starts
        for i in range(nq0):
            self.inq[self.queue[i]] = 1
        while qlen > 0 and ncells < n:
            w = self.queue[head]
            head = (head + 1) % cap
            qlen -= 1
            self.inq[w] = 0
            nt = 0
            for p in range(w, w + size[w]):
                x = lab[p]
                for e in range(self.adj_ptr[x], self.adj_ptr[x + 1]):
                    y = self.adj_idx[e]
                    if cnt[y] == 0:
                        touched[nt] = y
                        nt += 1
                    cnt[y] += 1
            nc = 0
            for i in range(nt):
                s = cell_of[touched[i]]
                if size[s] > 1 and not self.cellmark[s]:
                    self.cellmark[s] = 1
                    tcells[nc] = s
                    nc += 1
            qsort(tcells, nc, sizeof(int), _cmp_int)
            for ci in range(nc):
                s = tcells[ci]
                self.cellmark[s] = 0
                sz = size[s]
                for i in range(sz):
                    x = lab[s + i]
                    pairs[i] = (<long long>cnt[x]) * (n + 1) + x
                qsort(pairs, sz, sizeof(long long), _cmp_pair)
                if pairs[0] // (n + 1) == pairs[sz - 1] // (n + 1):
                    continue
                nkeys = 1
                for i in range(1, sz):
                    if pairs[i] // (n + 1) != pairs[i - 1] // (n + 1):
                        nkeys += 1
                h = _mix(_mix(_mix(h, w), s), nkeys)
                pos = s
                j = 0
                i = 0
                while i < sz:
                    key = pairs[i] // (n + 1)
                    lg = 0
                    while i + lg < sz and pairs[i + lg] // (n + 1) == key:
                        x = <int>(pairs[i + lg] % (n + 1))
                        lab[pos + lg] = x
                        cell_of[x] = pos
                        lg += 1
                    size[pos] = lg
                    starts[j] = pos
                    j += 1
                    h = _mix(_mix(h, key), lg)
                    pos += lg
                    i += lg
                ncells += nkeys - 1
                if self.inq[s]:
                    for i in range(1, nkeys):
                        st = starts[i]
                        self.queue[(head + qlen) % cap] = st
                        qlen += 1
                        self.inq[st] = 1
                else:
                    big = 0
                    for i in range(1, nkeys):
                        if size[starts[i]] > size[starts[big]]:
                            big = i
                    for i in range(nkeys):
                        if i != big:
                            st = starts[i]
                            self.queue[(head + qlen) % cap] = st
                            qlen += 1
                            self.inq[st] = 1
            for i in range(nt):
                cnt[touched[i]] = 0
        # clear leftover queue flags
        while qlen > 0:
            self.inq[self.queue[head]] = 0
            head = (head + 1) % cap
            qlen -= 1
        hout[0] = _mix(h, ncells)
        return ncells

    def root(self, colors):
        cdef int n = self.n
        order = sorted(range(n), key=lambda v: (colors[v], v))
        lab_arr = np.asarray(order, dtype=np.int32)
        cell_arr = np.zeros(n, dtype=np.int32)
        size_arr = np.zeros(n, dtype=np.int32)
        cdef int[::1] lab = lab_arr
        cdef int[::1] cell_of = cell_arr
        cdef int[::1] size = size_arr
        cdef int p = 0, q, i, nstarts = 0
        cdef uint64_t h
        while p < n:
            q = p
            while q < n and colors[lab[q]] == colors[lab[p]]:
                q += 1
            for i in range(p, q):
                cell_of[lab[i]] = p
            size[p] = q - p
            self.queue[nstarts] = p
            nstarts += 1
            p = q
        ncells = self._refine(lab, cell_of, size, nstarts, nstarts, &h)
        node = Node()
        node.lab_arr, node.cell_arr, node.size_arr = lab_arr, cell_arr, size_arr
        node.ncells = ncells
        node.inv = (ncells, h)
        return node

    def individualize(self, Node node, int v):
        lab_arr = node.lab_arr.copy()
        cell_arr = node.cell_arr.copy()
        size_arr = node.size_arr.copy()
        cdef int[::1] lab = lab_arr
        cdef int[::1] cell_of = cell_arr
        cdef int[::1] size = size_arr
        cdef int s = cell_of[v], sz = size[s], p, i
        cdef uint64_t h
        p = s
        while lab[p] != v:
            p += 1
        lab[p] = lab[s]
        lab[s] = v
        size[s] = 1
        size[s + 1] = sz - 1
        for i in range(s + 1, s + sz):
            cell_of[lab[i]] = s + 1
        self.queue[0] = s
        ncells = self._refine(lab, cell_of, size, 1, node.ncells + 1, &h)
        child = Node()
        child.lab_arr, child.cell_arr, child.size_arr = lab_arr, cell_arr, size_arr
        child.ncells = ncells
        child.inv = (ncells, h)
        return child


# parameter sweep -----------------------------------------------------------

cdef enum:
    MAXD = 16

cdef struct Darts:
    int d
    int n
    int vol[2 * MAXD]
    int head[2 * MAXD]
    int rev[2 * MAXD]


cdef void _fill_darts(Darts* t, int n, int* spokes, int m, int k) noexcept nogil:
    cdef int d = m + 2, j
    t.d = d
    t.n = n
    t.vol[0] = 1
    t.vol[1] = n - 1
    t.vol[d] = k % n
    t.vol[d + 1] = (n - k) % n
    t.head[0] = 0
    t.head[1] = 0
    t.head[d] = 1
    t.head[d + 1] = 1
    t.rev[0] = 1
    t.rev[1] = 0
    t.rev[d] = d + 1
    t.rev[d + 1] = d
    for j in range(m):
        t.vol[2 + j] = spokes[j] % n
        t.vol[d + 2 + j] = (n - spokes[j]) % n
        t.head[2 + j] = 1
        t.head[d + 2 + j] = 0
        t.rev[2 + j] = d + 2 + j
        t.rev[d + 2 + j] = 2 + j


cdef long long _walk(Darts* t, int e, int total, int depth, int length, int home, int forbid) noexcept nogil:
    cdef int base, f, d = t.d, n = t.n, nt
    cdef long long c = 0
    if depth == length:
        return 1 if (t.head[e] == home and total == 0 and e != forbid) else 0
    base = t.head[e] * d
    for f in range(base, base + d):
        if f == t.rev[e]:
            continue
        nt = total + t.vol[f]
        if nt >= n:
            nt -= n
        c += _walk(t, f, nt, depth + 1, length, home, forbid)
    return c


cdef long long _closed(Darts* t, int start, int length) noexcept nogil:
    cdef int home = 0 if start < t.d else 1
    return _walk(t, start, t.vol[start], 1, length, home, t.rev[start])


cdef bint _uniform(int n, int* spokes, int m, int k, int max_length) noexcept nogil:
    cdef Darts t
    cdef int length, j
    cdef long long ref
    _fill_darts(&t, n, spokes, m, k)
    for length in range(3, max_length + 1):
        ref = _closed(&t, 0, length)
        if _closed(&t, t.d, length) != ref:
            return False
        for j in range(m):
            if _closed(&t, 2 + j, length) != ref:
                return False
    return True


def walk_counts(int n, spokes, int k, int length):
    cdef int sp[MAXD]
    cdef int m = len(spokes), j
    cdef Darts t
    if m + 2 > MAXD:
        raise ValueError("too many spoke offsets")
    for j in range(m):
        sp[j] = spokes[j]
    _fill_darts(&t, n, sp, m, k)
    out = [_closed(&t, 0, length), _closed(&t, t.d, length)]
    for j in range(m):
        out.append(_closed(&t, 2 + j, length))
    return out


def uniform_walk_counts(int n, spokes, int k, int max_length):
    cdef int sp[MAXD]
    cdef int m = len(spokes), j
    if m + 2 > MAXD:
        raise ValueError("too many spoke offsets")
    for j in range(m):
        sp[j] = spokes[j]
    return bool(_uniform(n, sp, m, k, max_length))


cdef void _isort(int* a, int m) noexcept nogil:
    cdef int i, j, x
    for i in range(1, m):
        x = a[i]
        j = i - 1
        while j >= 0 and a[j] > x:
            a[j + 1] = a[j]
            j -= 1
        a[j + 1] = x


cdef int _lexcmp(int* a, int* b, int m) noexcept nogil:
    cdef int i
    for i in range(m):
        if a[i] != b[i]:
            return -1 if a[i] < b[i] else 1
    return 0


cdef bint _canonical(int n, int* s, int m) noexcept nogil:
    cdef int i, j, t, gap
    cdef int first_gap = s[1] if m > 1 else n
    cdef int img[MAXD]
    for i in range(m):
        gap = (s[(i + 1) % m] - s[i] + n) % n
        if gap == 0:
            gap = n
        if gap < first_gap:
            return False
    for i in range(m):
        t = s[i]
        for j in range(m):
            img[j] = (s[j] - t + n) % n
        _isort(img, m)
        if _lexcmp(img, s, m) < 0:
            return False
        for j in range(m):
            img[j] = (t - s[j] + n) % n
        _isort(img, m)
        if _lexcmp(img, s, m) < 0:
            return False
    return True


def is_canonical_offsets(int n, spokes):
    cdef int sp[MAXD]
    cdef int m = len(spokes), j
    for j in range(m):
        sp[j] = spokes[j]
    return bool(_canonical(n, sp, m))


cdef int _next_comb(int* s, int m, int n) noexcept nogil:
    # s[1:m] is an increasing tuple from 1..n-1; advance lexicographically
    cdef int i = m - 1, j
    while i >= 1 and s[i] == n - m + i:
        i -= 1
    if i < 1:
        return 0
    s[i] += 1
    for j in range(i + 1, m):
        s[j] = s[j - 1] + 1
    return 1


def sweep(int n, int nspokes, int max_length):
    cdef int s[MAXD]
    cdef int m = nspokes, j, k, kmax = (n - 1) // 2
    cdef int more
    out = []
    if m + 2 > MAXD:
        raise ValueError("too many spoke offsets")
    if m > n:
        return out
    s[0] = 0
    for j in range(1, m):
        s[j] = j
    if m == 1:
        more = 1
    else:
        more = 1 if m - 1 <= n - 1 else 0
    while more:
        if _canonical(n, s, m):
            for k in range(1, kmax + 1):
                if _uniform(n, s, m, k, max_length):
                    out.append((tuple([s[j] for j in range(m)]), k))
        if m == 1:
            break
        more = _next_comb(s, m, n)
    return out


def count_canonical(int n, int nspokes):
    cdef int s[MAXD]
    cdef int m = nspokes, j
    cdef long long total = 0
    cdef int more = 1
    s[0] = 0
    for j in range(1, m):
        s[j] = j
    while more:
        if _canonical(n, s, m):
            total += 1
        if m == 1:
            break
        more = _next_comb(s, m, n)
    return total * ((n - 1) // 2)
