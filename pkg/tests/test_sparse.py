import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hylag.hypergraph import Hypergraph, InvalidInput
from hylag.sparse import (
    SparseBuildError,
    SparseParams,
    VerificationTooCostly,
    build_sparse,
    subset_cost,
    verify_edge_count,
    verify_local_sparsity,
)


def brute_sparse(a, k):
    edges = set(a.edges)
    for s in range(a.r, min(k, a.n) + 1):
        for sub in itertools.combinations(range(a.n), s):
            if sum(e in edges for e in itertools.combinations(sub, a.r)) > s - a.r + 1:
                return False
    return True


@st.composite
def small_3graphs(draw):
    n = draw(st.integers(3, 7))
    sets = list(itertools.combinations(range(n), 3))
    return Hypergraph(3, n, tuple(draw(st.lists(st.sampled_from(sets), unique=True))))


@given(small_3graphs(), st.integers(3, 7))
def test_verifier_matches_brute_force(a, k):
    chk = verify_local_sparsity(a, k)
    assert chk.ok == brute_sparse(a, k)
    if not chk.ok:
        w = chk.witness
        assert chk.edges_inside > len(w) - a.r + 1
        # the witness is smallest: no violator of smaller size exists
        assert brute_sparse(a, len(w) - 1) if len(w) > a.r + 1 else True


def test_known_violation():
    # two 3-edges inside 4 vertices exceed 4 - 3 + 1 = 2? no; three do
    a = Hypergraph(3, 4, ((0, 1, 2), (0, 1, 3), (0, 2, 3)))
    chk = verify_local_sparsity(a, 4)
    assert not chk and chk.witness == (0, 1, 2, 3) and chk.edges_inside == 3


def test_build_default_and_determinism():
    p = SparseParams(r=5, t=10, k=6, sigma=0.002, seed=3)
    a, b = build_sparse(p), build_sparse(p)
    assert a.edges == b.edges
    assert verify_local_sparsity(a, p.k) and verify_edge_count(a, p.sigma)


def test_sigma_zero_gives_empty():
    assert build_sparse(SparseParams(t=8, sigma=0)).num_edges == 0


def test_impossible_request_raises():
    with pytest.raises(SparseBuildError) as e:
        build_sparse(SparseParams(r=5, t=8, k=8, sigma=0.5, max_attempts=2))
    assert e.value.shortfall > 0


def test_cost_guard():
    assert subset_cost(12, 5, 7) == sum(__import__("math").comb(12, s) for s in range(5, 8))
    with pytest.raises(VerificationTooCostly):
        verify_local_sparsity(Hypergraph.empty(5, 40), 12, budget=10**4)


@pytest.mark.parametrize("kw", [dict(k=4), dict(r=1), dict(t=0), dict(sigma=-1), dict(max_attempts=0)])
def test_invalid_params(kw):
    with pytest.raises(InvalidInput):
        SparseParams(**kw)
