"""Permutations and permutation groups (base and strong generating set).

Permutations act on the right, matching the usual ``x^(gh) = (x^g)^h``
convention: ``(g * h)(x) == h(g(x))``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True)
class Permutation:
    images: tuple

    def __init__(self, images):
        object.__setattr__(self, "images", tuple(int(i) for i in images))

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: "Permutation") -> "Permutation":
        o = other.images
        return Permutation(o[i] for i in self.images)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def __pow__(self, e: int) -> "Permutation":
        result = Permutation.identity(self.degree)
        base = self if e >= 0 else self.inverse()
        for _ in range(abs(e)):
            result = result * base
        return result

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def is_valid(self) -> bool:
        return sorted(self.images) == list(range(len(self.images)))

    def cycles(self) -> list:
        seen = set()
        out = []
        for start in range(len(self.images)):
            if start in seen or self.images[start] == start:
                continue
            cyc = [start]
            seen.add(start)
            j = self.images[start]
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        from math import lcm

        result = 1
        for c in self.cycles():
            result = lcm(result, len(c))
        return result

    def cycle_notation(self, name=str) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(name(x) for x in c) + ")" for c in cyc)

    def __str__(self):
        return self.cycle_notation()


def _as_array(p) -> np.ndarray:
    if isinstance(p, Permutation):
        return np.asarray(p.images, dtype=np.int64)
    return np.asarray(p, dtype=np.int64)


class _Level:
    __slots__ = ("point", "gens", "transversal")

    def __init__(self, point: int):
        self.point = point
        self.gens = []
        # orbit point -> array u with u[point] == orbit point
        self.transversal = {}


@dataclass
class PermGroup:
    """Permutation group with a stabilizer chain computed by Schreier-Sims.

    ``base`` is a list of points whose pointwise stabilizer is trivial;
    ``strong_generators`` generate each stabilizer in the chain.
    """

    degree: int
    generators: list
    base: list = field(default_factory=list)
    strong_generators: list = field(default_factory=list)
    basic_orbit_sizes: list = field(default_factory=list)

    def __init__(self, degree: int, generators, base_hint=()):
        self.degree = degree
        self.generators = [g if isinstance(g, Permutation) else Permutation(g) for g in generators]
        for g in self.generators:
            if g.degree != degree:
                raise ValueError(f"generator degree {g.degree} != {degree}")
        self._levels = []
        self._schreier_sims(list(base_hint))
        self.base = [lv.point for lv in self._levels]
        self.basic_orbit_sizes = [len(lv.transversal) for lv in self._levels]
        seen = {}
        for lv in self._levels:
            for g in lv.gens:
                seen.setdefault(g.tobytes(), g)
        self.strong_generators = [Permutation(g) for g in seen.values()]

    # stabilizer chain ---------------------------------------------------

    def _orbit_transversal(self, level: _Level):
        identity = np.arange(self.degree, dtype=np.int64)
        trans = {level.point: identity}
        frontier = [level.point]
        while frontier:
            nxt = []
            for beta in frontier:
                u = trans[beta]
                for g in level.gens:
                    gamma = int(g[beta])
                    if gamma not in trans:
                        trans[gamma] = g[u]
                        nxt.append(gamma)
            frontier = nxt
        level.transversal = trans

    def _sift(self, g: np.ndarray, start: int = 0):
        for i in range(start, len(self._levels)):
            lv = self._levels[i]
            beta = int(g[lv.point])
            u = lv.transversal.get(beta)
            if u is None:
                return g, i
            inv = np.empty_like(u)
            inv[u] = np.arange(self.degree)
            g = inv[g]
        return g, len(self._levels)

    def _new_base_point(self, g: np.ndarray, hint: list) -> int:
        used = {lv.point for lv in self._levels}
        for b in hint:
            if b not in used and g[b] != b:
                return b
        moved = np.nonzero(g != np.arange(self.degree))[0]
        return int(moved[0])

    def _schreier_sims(self, hint: list):
        identity = np.arange(self.degree, dtype=np.int64)
        gens = [_as_array(g) for g in self.generators]
        gens = [g for g in gens if not np.array_equal(g, identity)]
        if not gens:
            return
        for b in hint:
            if any(g[b] != b for g in gens):
                self._levels.append(_Level(b))
        for g in gens:
            if all(g[lv.point] == lv.point for lv in self._levels):
                self._levels.append(_Level(self._new_base_point(g, hint)))
        for i, lv in enumerate(self._levels):
            lv.gens = [g for g in gens if all(g[self._levels[j].point] == self._levels[j].point for j in range(i))]
            self._orbit_transversal(lv)

        i = len(self._levels) - 1
        while i >= 0:
            lv = self._levels[i]
            restart = False
            for beta in list(lv.transversal):
                u_beta = lv.transversal[beta]
                for s in lv.gens:
                    gamma = int(s[beta])
                    u_gamma = lv.transversal[gamma]
                    # Schreier generator u_beta * s * u_gamma^-1
                    h = s[u_beta]
                    inv = np.empty_like(u_gamma)
                    inv[u_gamma] = identity
                    h = inv[h]
                    if np.array_equal(h, identity):
                        continue
                    residue, j = self._sift(h, i + 1)
                    if j < len(self._levels) or not np.array_equal(residue, identity):
                        if j == len(self._levels):
                            self._levels.append(_Level(self._new_base_point(residue, hint)))
                        for level_index in range(i + 1, j + 1):
                            self._levels[level_index].gens.append(residue)
                            self._orbit_transversal(self._levels[level_index])
                        i = j
                        restart = True
                        break
                if restart:
                    break
            if not restart:
                i -= 1

    # queries --------------------------------------------------------------

    @property
    def order(self) -> int:
        result = 1
        for size in self.basic_orbit_sizes:
            result *= size
        return result

    def contains(self, p) -> bool:
        g = _as_array(p)
        residue, _ = self._sift(g)
        return bool(np.array_equal(residue, np.arange(self.degree)))

    def orbit(self, x: int) -> list:
        seen = {x}
        frontier = [x]
        gens = [g.images for g in self.generators]
        while frontier:
            nxt = []
            for y in frontier:
                for g in gens:
                    z = g[y]
                    if z not in seen:
                        seen.add(z)
                        nxt.append(z)
            frontier = nxt
        return sorted(seen)

    def orbits(self) -> list:
        """Vertex orbits, each sorted, ordered by least element."""
        parent = list(range(self.degree))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.generators:
            for x, y in enumerate(g.images):
                rx, ry = find(x), find(y)
                if rx != ry:
                    parent[max(rx, ry)] = min(rx, ry)
        classes = {}
        for x in range(self.degree):
            classes.setdefault(find(x), []).append(x)
        return [classes[r] for r in sorted(classes)]

    def stabilizer_order(self, x: int) -> int:
        """``|G_x|`` via orbit-stabilizer, cross-checked on the chain when ``x`` is the first base point."""
        size = len(self.orbit(x))
        order = self.order
        if order % size:
            raise ArithmeticError("orbit size does not divide group order")
        stab = order // size
        if self._levels and self._levels[0].point == x:
            chain = 1
            for s in self.basic_orbit_sizes[1:]:
                chain *= s
            if chain != stab:
                raise ArithmeticError("stabilizer chain disagrees with orbit-stabilizer")
        return stab
