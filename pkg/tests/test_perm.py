import itertools

from hypothesis import given, settings
from hypothesis import strategies as st

from nestgraphs.perm import Permutation, PermGroup


def closure(gens, degree):
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(g.images[i] for i in p)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return seen


def test_permutation_algebra():
    p = Permutation([1, 2, 0, 3])
    q = Permutation([0, 1, 3, 2])
    assert (p * q)(0) == q(p(0))
    assert (p * p.inverse()).is_identity()
    assert p.order() == 3
    assert (p ** 3).is_identity()
    assert p.cycle_notation() == "(0 1 2)"
    assert Permutation.identity(3).cycle_notation() == "()"


def test_symmetric_group_order():
    gens = [Permutation([1, 2, 3, 4, 5, 0]), Permutation([1, 0, 2, 3, 4, 5])]
    g = PermGroup(6, gens)
    assert g.order == 720
    assert g.contains(Permutation([5, 4, 3, 2, 1, 0]))


def test_trivial_group():
    g = PermGroup(4, [])
    assert g.order == 1
    assert g.orbits() == [[0], [1], [2], [3]]


perms = st.integers(3, 7).flatmap(
    lambda d: st.lists(st.permutations(list(range(d))), min_size=1, max_size=3).map(lambda ps: (d, ps))
)


@settings(max_examples=60, deadline=None)
@given(perms)
def test_schreier_sims_matches_closure(data):
    degree, raw = data
    gens = [Permutation(p) for p in raw]
    g = PermGroup(degree, gens)
    elems = closure(gens, degree)
    assert g.order == len(elems)
    for x in range(degree):
        assert g.stabilizer_order(x) * len(g.orbit(x)) == g.order
    for p in itertools.islice(itertools.permutations(range(degree)), 50):
        assert g.contains(Permutation(p)) == (tuple(p) in elems)
