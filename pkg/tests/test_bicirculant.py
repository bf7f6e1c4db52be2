import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nestgraphs.autgroup import canonical_form
from nestgraphs.bicirculant import (
    BicirculantParams,
    NamedAutomorphism,
    NestParams,
    ParameterError,
    PreconditionError,
    build,
    canonical_params,
    is_automorphism,
    is_canonical,
    isomorphism_moves,
    named_automorphism,
    parse_params,
)
from nestgraphs.perm import Permutation


@st.composite
def nest_params(draw, max_n=30):
    n = draw(st.integers(4, max_n))
    a, b, c = draw(st.lists(st.integers(1, n - 1), min_size=3, max_size=3, unique=True))
    k = draw(st.integers(1, n - 1).filter(lambda k: 2 * k != n))
    return NestParams(n, a, b, c, k)


@pytest.mark.parametrize(
    "args, fragment",
    [
        ((3, 1, 2, 3, 1), "n >= 4"),
        ((6, 1, 2, 3, 3), "k = n/2"),
        ((6, 1, 1, 3, 1), "pairwise distinct"),
        ((6, 0, 2, 3, 1), "1 <= a"),
        ((6, 1, 2, 6, 1), "1 <= c"),
    ],
)
def test_invalid_params(args, fragment):
    with pytest.raises(ParameterError, match=fragment):
        NestParams(*args)


def test_parse_params():
    assert parse_params(" 28 ; 1, 6 ,19 ; 13 ") == NestParams(28, 1, 6, 19, 13)
    assert parse_params("10;0,3;4", valence=4) == BicirculantParams(10, (0, 3), 4)
    with pytest.raises(ParameterError):
        parse_params("28;1,6;13", valence=6)
    with pytest.raises(ParameterError):
        parse_params("garbage")


def test_build_shape():
    g = build(NestParams(7, 1, 2, 4, 2))
    assert g.vertex_count == 14 and g.edge_count == 42
    assert all(g.degree(x) == 6 for x in range(14))
    g = build(BicirculantParams(10, (0, 3), 4))
    assert all(g.degree(x) == 4 for x in range(20))


def test_canonical_params_examples():
    assert canonical_params(NestParams(28, 1, 19, 6, 13)) == NestParams(28, 1, 6, 19, 13)
    assert canonical_params(NestParams(7, 1, 2, 4, 5)) == NestParams(7, 1, 2, 4, 2)


@settings(max_examples=100, deadline=None)
@given(nest_params())
def test_canonical_params_idempotent_and_closure_constant(p):
    cp = canonical_params(p)
    assert is_canonical(cp)
    assert canonical_params(cp) == cp
    assert cp in isomorphism_moves(p)
    for q in list(isomorphism_moves(p))[:10]:
        assert canonical_params(q) == cp


def test_canonical_params_preserve_isomorphism():
    rng = random.Random(2024)
    for _ in range(200):
        n = rng.randint(4, 30)
        a, b, c = rng.sample(range(1, n), 3)
        k = rng.choice([k for k in range(1, n) if 2 * k != n])
        p = NestParams(n, a, b, c, k)
        assert canonical_form(build(p)) == canonical_form(build(canonical_params(p)))


def test_rho_and_tau_examples():
    p = NestParams(7, 1, 2, 4, 2)
    rho = named_automorphism(NamedAutomorphism.RHO, p)
    assert is_automorphism(build(p), rho)
    assert len(rho.cycles()) == 2 and all(len(c) == 7 for c in rho.cycles())
    q = NestParams(14, 1, 5, 6, 1)
    tau = named_automorphism(NamedAutomorphism.TAU, q)
    assert tau(0) == 0 and tau(14) == 14 + 6
    assert is_automorphism(build(q), tau)
    rho_q = named_automorphism(NamedAutomorphism.RHO, q)
    swap = tau * rho_q
    assert swap(0) == 1 and swap(1) == 0


def test_is_automorphism_rejects():
    g = build(NestParams(7, 1, 2, 4, 2))
    assert is_automorphism(g, Permutation.identity(14))
    swap = list(range(14))
    swap[0], swap[1] = 1, 0
    assert not is_automorphism(g, Permutation(swap))
    with pytest.raises(ValueError):
        is_automorphism(g, Permutation.identity(13))


def test_alpha_example():
    p = NestParams(28, 1, 19, 6, 13)
    alpha = named_automorphism(NamedAutomorphism.ALPHA, p)
    for i in range(14):
        assert alpha(2 * i) == (18 * i + 19) % 28
    assert is_automorphism(build(p), alpha)


@pytest.mark.parametrize(
    "which, p",
    [
        (NamedAutomorphism.TAU, NestParams(7, 1, 2, 4, 2)),
        (NamedAutomorphism.ETA, NestParams(10, 2, 5, 7, 3)),
        (NamedAutomorphism.PHI_FAM2, NestParams(12, 2, 3, 5, 1)),
        (NamedAutomorphism.THETA, NestParams(12, 1, 3, 4, 1)),
        (NamedAutomorphism.ALPHA, NestParams(28, 1, 6, 19, 13)),
    ],
)
def test_preconditions(which, p):
    with pytest.raises(PreconditionError):
        named_automorphism(which, p)
