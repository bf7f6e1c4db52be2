import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nestgraphs import _pycore, kernels
from nestgraphs.bicirculant import BicirculantParams, build, canonical_offsets
from nestgraphs.graph import cycles_through_edge

BACKENDS = [_pycore]
if kernels.get_backend("auto").BACKEND == "compiled":
    BACKENDS.append(kernels.get_backend("compiled"))


@st.composite
def bicirculants(draw):
    n = draw(st.integers(5, 16))
    m = draw(st.integers(1, min(5, n - 1)))
    rest = draw(st.lists(st.integers(1, n - 1), min_size=m - 1, max_size=m - 1, unique=True))
    k = draw(st.integers(1, n - 1).filter(lambda k: 2 * k != n))
    return n, tuple(sorted([0] + rest)), k


def _edge_reps(n, spokes, k):
    return [(0, 1), (n, n + k % n)] + [(0, n + s) for s in spokes]


@pytest.mark.parametrize("backend", BACKENDS, ids=lambda b: b.BACKEND)
@settings(max_examples=40, deadline=None)
@given(bicirculants())
def test_short_walk_counts_are_cycle_counts(backend, data):
    n, spokes, k = data
    g = build(BicirculantParams(n, spokes, k))
    for length in (3, 4, 5):
        got = backend.walk_counts(n, spokes, k, length)
        want = [len(cycles_through_edge(g, e, length)) for e in _edge_reps(n, spokes, k)]
        assert got == want


@pytest.mark.parametrize("backend", BACKENDS, ids=lambda b: b.BACKEND)
def test_canonical_offsets_agree(backend):
    for n in range(5, 14):
        tuples = backend.sweep(n, 3, 2)
        sets = {s for s, _ in tuples}
        from itertools import combinations

        expected = {canonical_offsets(n, (0,) + r) for r in combinations(range(1, n), 2)}
        assert sets == expected
        assert len(tuples) == backend.count_canonical(n, 3)


@pytest.mark.skipif(len(BACKENDS) < 2, reason="compiled kernels not built")
def test_backends_sweep_identically():
    py, cc = BACKENDS
    for n in (8, 12, 15, 20):
        for length in (4, 6, 8):
            assert py.sweep(n, 4, length) == cc.sweep(n, 4, length)
    assert py.sweep(12, 5, 6) == cc.sweep(12, 5, 6)


@pytest.mark.skipif(len(BACKENDS) < 2, reason="compiled kernels not built")
def test_backends_refine_identically():
    py, cc = BACKENDS
    g = build(BicirculantParams(20, (0, 2, 5, 7), 9))
    colors = [0] * g.vertex_count
    a, b = py.Refiner(g.adjacency).root(colors), cc.Refiner(g.adjacency).root(colors)
    assert a.inv == b.inv
    for v in (0, 3, 27):
        ca, cb = py.Refiner(g.adjacency).individualize(a, v), cc.Refiner(g.adjacency).individualize(b, v)
        assert ca.inv == cb.inv
        assert sorted(map(sorted, ca.cells())) == sorted(map(sorted, cb.cells()))


def test_get_backend_rejects_unknown():
    with pytest.raises(ValueError):
        kernels.get_backend("fortran")
    assert kernels.get_backend("python") is _pycore


def test_env_forces_fallback():
    import os
    import subprocess
    import sys

    env = dict(os.environ, NESTGRAPHS_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "import nestgraphs.kernels as k; print(k.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
