"""Nest graphs and cycle-containing bicirculants.

``N(n; a, b, c; k)`` has a rim cycle ``u_i u_{i+1}``, hub edges
``v_i v_{i+k}`` and spokes ``u_i v_{i+s}`` for ``s`` in ``{0, a, b, c}``.
The general :class:`BicirculantParams` allows any spoke offset set, giving
valence ``len(spokes) + 2``.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Optional, Sequence

from .graph import HUB, RIM, LabeledGraph, Spoke
from .perm import Permutation


class ParameterError(ValueError):
    """A parameter tuple violates the construction's conditions."""


class PreconditionError(ValueError):
    """A named automorphism was requested outside its hypotheses."""


@dataclass(frozen=True, order=True)
class NestParams:
    n: int
    a: int
    b: int
    c: int
    k: int

    def __post_init__(self):
        n, a, b, c, k = self.n, self.a, self.b, self.c, self.k
        if n < 4:
            raise ParameterError(f"n = {n} violates n >= 4")
        for name, val in (("a", a), ("b", b), ("c", c), ("k", k)):
            if not 1 <= val <= n - 1:
                raise ParameterError(f"{name} = {val} violates 1 <= {name} <= n-1")
        if 2 * k == n:
            raise ParameterError(f"k = n/2 (k = {k}, n = {n}) is forbidden")
        if len({a, b, c}) != 3:
            raise ParameterError(f"a, b, c = {a}, {b}, {c} are not pairwise distinct")

    @property
    def spokes(self) -> tuple:
        return (0, self.a, self.b, self.c)

    @property
    def valence(self) -> int:
        return 6

    def as_bicirculant(self) -> "BicirculantParams":
        return BicirculantParams(self.n, tuple(sorted(self.spokes)), self.k)

    def astuple(self) -> tuple:
        return (self.n, self.a, self.b, self.c, self.k)

    def __str__(self):
        return f"{self.n};{self.a},{self.b},{self.c};{self.k}"


@dataclass(frozen=True, order=True)
class BicirculantParams:
    """Bicirculant with rim cycle, hub step ``k`` and a set of spoke offsets."""

    n: int
    spokes: tuple
    k: int

    def __post_init__(self):
        n, k = self.n, self.k
        if n < 4:
            raise ParameterError(f"n = {n} violates n >= 4")
        if not 1 <= k <= n - 1:
            raise ParameterError(f"k = {k} violates 1 <= k <= n-1")
        if 2 * k == n:
            raise ParameterError(f"k = n/2 (k = {k}, n = {n}) is forbidden")
        if len(self.spokes) < 1:
            raise ParameterError("at least one spoke offset is required")
        if any(not 0 <= s < n for s in self.spokes):
            raise ParameterError(f"spoke offsets {self.spokes} must lie in 0..n-1")
        if len(set(self.spokes)) != len(self.spokes):
            raise ParameterError(f"spoke offsets {self.spokes} are not pairwise distinct")

    @property
    def valence(self) -> int:
        return len(self.spokes) + 2

    def __str__(self):
        return f"{self.n};{','.join(map(str, self.spokes))};{self.k}"


_PARAM_RE = re.compile(r"^\s*(\d+)\s*;\s*([\d\s,]+?)\s*;\s*(\d+)\s*$")


def parse_params(text: str, valence: Optional[int] = None):
    """Parse ``"n;a,b,c;k"`` (or ``"n;s1,...;k"`` for other valences).

    With ``valence`` 6 or ``None`` and exactly three middle entries a
    :class:`NestParams` is returned; otherwise a :class:`BicirculantParams`.
    """
    m = _PARAM_RE.match(text)
    if not m:
        raise ParameterError(f"cannot parse parameters {text!r}; expected 'n;a,b,c;k'")
    n = int(m.group(1))
    mids = [int(t) for t in m.group(2).replace(" ", "").split(",") if t != ""]
    k = int(m.group(3))
    if valence in (None, 6) and len(mids) == 3:
        return NestParams(n, *mids, k)
    if valence is not None and len(mids) != valence - 2:
        raise ParameterError(f"valence {valence} needs {valence - 2} spoke offsets, got {len(mids)}")
    return BicirculantParams(n, tuple(mids), k)


def build(p) -> LabeledGraph:
    """Construct the graph on ``2n`` vertices with labeled edges."""
    n, k = p.n, p.k
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n, RIM))
        edges.append((n + i, n + (i + k) % n, HUB))
        for s in p.spokes:
            edges.append((i, n + (i + s) % n, Spoke(s)))
    return LabeledGraph.from_edges(2 * n, edges, params=p)


# parameter-level isomorphisms ---------------------------------------------

def _offset_images(n: int, spokes: Sequence[int]):
    """Translate each offset to 0, optionally negate; yield sorted tuples."""
    for t in spokes:
        shifted = [(s - t) % n for s in spokes]
        yield tuple(sorted(shifted))
        yield tuple(sorted((-s) % n for s in shifted))


def canonical_offsets(n: int, spokes: Sequence[int]) -> tuple:
    """Least sorted offset set (containing 0) up to translation and negation."""
    return min(_offset_images(n, spokes))


def isomorphism_moves(p: NestParams) -> set:
    """Closure of ``p`` under the elementary parameter isomorphisms.

    The moves are: permuting ``a, b, c``; ``k -> -k``; negating all spoke
    offsets; translating the offset set ``{0, a, b, c}`` so that another
    element becomes 0.
    """
    n = p.n
    out = set()
    for img in _offset_images(n, p.spokes):
        x, y, z = img[1:]
        for a, b, c in ((x, y, z), (x, z, y), (y, x, z), (y, z, x), (z, x, y), (z, y, x)):
            for k in {p.k, n - p.k}:
                out.add(NestParams(n, a, b, c, k))
    return out


def canonical_params(p: NestParams) -> NestParams:
    """Lexicographically least ``(a, b, c, k)`` with ``a < b < c``, ``k <= n/2``."""
    _, a, b, c = canonical_offsets(p.n, p.spokes)
    return NestParams(p.n, a, b, c, min(p.k, p.n - p.k))


def canonical_bicirculant(p: BicirculantParams) -> BicirculantParams:
    return BicirculantParams(p.n, canonical_offsets(p.n, p.spokes), min(p.k, p.n - p.k))


def is_canonical(p) -> bool:
    if isinstance(p, NestParams):
        return canonical_params(p) == p
    return canonical_bicirculant(p) == p


# named automorphisms ------------------------------------------------------

class NamedAutomorphism(enum.Enum):
    RHO = "rho"
    TAU = "tau"
    ETA = "eta"
    PHI_FAM1 = "phi1"
    PHI_FAM2 = "phi2"
    THETA = "theta"
    ALPHA = "alpha"


def _is_fam1(p: NestParams) -> Optional[int]:
    if p.n % 2:
        return None
    m = p.n // 2
    if m >= 3 and m % 2 == 1 and (p.a, p.b, p.c, p.k) == (2, m, m + 2, 1):
        return m
    return None


def _is_fam2(p: NestParams) -> Optional[int]:
    if p.n % 4:
        return None
    m = p.n // 4
    if m >= 3 and m % 2 == 1 and (p.a, p.b, p.c, p.k) == (2, m, m + 2, 2 * m - 1):
        return m
    return None


def theta_m(p: NestParams) -> Optional[int]:
    """``m`` when ``p = (n; 1, 2m+1, 2m+2; 1)`` satisfies the rotation-family hypotheses."""
    if p.a != 1 or p.k != 1 or p.b % 2 == 0 or p.c != p.b + 1:
        return None
    m = (p.b - 1) // 2
    n = p.n
    if m >= 1 and n % 2 == 0 and (2 * (m * m + m + 1)) % n == 0 and n >= 4 * m + 2:
        return m
    return None


def alpha_data(p: NestParams) -> Optional[tuple]:
    """``(m, b, b0)`` when ``p = (2m; 1, b, b+m+1; m-1)`` is a half-arc family tuple."""
    n = p.n
    if n % 2 or p.a != 1:
        return None
    m = n // 2
    b = p.b
    if m <= 2 or m % 4 != 2 or p.k != m - 1 or p.c != (b + m + 1) % n:
        return None
    if b % 4 != 3 or b >= 2 * m or (b * b + 3) % m:
        return None
    return m, b, (b + 1) // 4


def named_automorphism(which: NamedAutomorphism, p: NestParams) -> Permutation:
    """Explicit automorphism of ``build(p)``; raises if hypotheses fail."""
    n = p.n
    if which is NamedAutomorphism.RHO:
        images = [(i + 1) % n for i in range(n)] + [n + (i + 1) % n for i in range(n)]
        return Permutation(images)

    if which is NamedAutomorphism.TAU:
        if (p.a + p.b - p.c) % n:
            raise PreconditionError("tau requires c = a + b (mod n)")
        images = [(-i) % n for i in range(n)] + [n + (p.c - i) % n for i in range(n)]
        return Permutation(images)

    if which in (NamedAutomorphism.ETA, NamedAutomorphism.PHI_FAM1):
        m = _is_fam1(p)
        if m is None:
            raise PreconditionError(f"{which.value} requires p = (2m;2,m,m+2;1) with m odd >= 3")
        if which is NamedAutomorphism.ETA:
            return Permutation(list(range(n)) + [n + (i + m) % n for i in range(n)])
        return Permutation(_phi_images(n, 2))

    if which is NamedAutomorphism.PHI_FAM2:
        m = _is_fam2(p)
        if m is None:
            raise PreconditionError("phi2 requires p = (4m;2,m,m+2;2m-1) with m odd >= 3")
        return Permutation(_phi_images(n, 2 * m + 2))

    if which is NamedAutomorphism.THETA:
        m = theta_m(p)
        if m is None:
            raise PreconditionError(
                "theta requires p = (n;1,2m+1,2m+2;1) with n an even divisor of 2(m^2+m+1), n >= 4m+2"
            )
        step = p.b + 1
        images = [0] * (2 * n)
        for j in range(n):
            i, odd = divmod(j, 2)
            base = (-i * step) % n
            if odd:
                images[j] = n + base
                images[n + j] = (base - 1) % n
            else:
                images[j] = base
                images[n + j] = n + (p.b + base) % n
        return Permutation(images)

    if which is NamedAutomorphism.ALPHA:
        data = alpha_data(p)
        if data is None:
            raise PreconditionError(
                "alpha requires p = (2m;1,b,b+m+1;m-1), b = 4b0-1, m | b^2+3, m = 2 mod 4, b < 2m"
            )
        m, b, _ = data
        images = [0] * (2 * n)
        for j in range(n):
            i, odd = divmod(j, 2)
            t = i * (b - 1)
            if odd:
                images[j] = n + (t + 2 * b) % n
                images[n + j] = n + (t + 2 * b + m + 1) % n
            else:
                images[j] = (t + b) % n
                images[n + j] = (t + b + 1) % n
        return Permutation(images)

    raise ValueError(f"unknown automorphism {which!r}")


def _phi_images(n: int, v_odd_shift: int) -> list:
    images = [0] * (2 * n)
    for i in range(n):
        if i % 2 == 0:
            images[i] = (-i) % n
            images[n + i] = (1 - i) % n
        else:
            images[i] = n + (1 - i) % n
            images[n + i] = n + (v_odd_shift - i) % n
    return images


def is_automorphism(g: LabeledGraph, sigma) -> bool:
    """True iff ``sigma`` maps edges onto edges (labels may change)."""
    images = sigma.images if isinstance(sigma, Permutation) else tuple(sigma)
    if len(images) != g.vertex_count:
        raise ValueError(f"permutation degree {len(images)} != vertex count {g.vertex_count}")
    if sorted(images) != list(range(g.vertex_count)):
        raise ValueError("not a permutation")
    rows = g.rows
    for x, y in g.edge_labels:
        if not (rows[images[x]] >> images[y]) & 1:
            return False
    return True
