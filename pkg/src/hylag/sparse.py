"""Locally sparse hypergraphs by random sampling plus deletion.

A graph A on t vertices is *k-locally sparse* when every vertex set V0 with
r <= |V0| <= k spans at most |V0| - r + 1 edges.  The builder samples each
r-set independently, then deletes edges from violating sets until none is
left, and only returns graphs that pass the exhaustive check.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .hypergraph import Edge, Hypergraph, InvalidInput

DEFAULT_BUDGET = 10**7
# Inclusion probability multiplier; see the ledger note on why it exceeds 4.
DEFAULT_C = 6.0


@dataclass(frozen=True)
class SparseParams:
    r: int = 5
    t: int = 12
    k: int = 7
    sigma: float = 0.002
    seed: int = 0
    max_attempts: int = 16
    c: float = DEFAULT_C
    budget: int = DEFAULT_BUDGET

    def __post_init__(self) -> None:
        if self.r < 2:
            raise InvalidInput("r must be >= 2")
        if self.k < self.r:
            raise InvalidInput(f"k must be >= r (k={self.k}, r={self.r})")
        if self.t < 1:
            raise InvalidInput("t must be >= 1")
        if self.sigma < 0:
            raise InvalidInput("sigma must be >= 0")
        if self.max_attempts < 1:
            raise InvalidInput("max_attempts must be >= 1")

    @property
    def required_edges(self) -> float:
        return self.sigma * self.t ** (self.r - 1)

    @property
    def inclusion_probability(self) -> float:
        return min(1.0, self.c * self.sigma * math.factorial(self.r) / self.t)


class SparseBuildError(RuntimeError):
    """No valid graph within the attempt budget; retry with larger t or smaller sigma."""

    def __init__(self, params: SparseParams, best_edges: int):
        self.params = params
        self.best_edges = best_edges
        self.shortfall = params.required_edges - best_edges
        super().__init__(
            f"no locally sparse graph after {params.max_attempts} attempts: "
            f"best had {best_edges} edges, need {params.required_edges:g}"
        )


class VerificationTooCostly(InvalidInput):
    pass


@dataclass(frozen=True)
class SparsityCheck:
    ok: bool
    witness: tuple[int, ...] | None = None
    edges_inside: int = 0
    subsets_checked: int = 0

    def __bool__(self) -> bool:
        return self.ok


def subset_cost(t: int, r: int, k: int) -> int:
    return sum(math.comb(t, s) for s in range(r, min(k, t) + 1))


def _edges_inside(s: tuple[int, ...], r: int, edges: set[Edge]) -> list[Edge]:
    return [e for e in itertools.combinations(s, r) if e in edges]


def _subsets(t: int, r: int, k: int, smallest: int) -> Iterator[tuple[int, ...]]:
    for size in range(smallest, min(k, t) + 1):
        yield from itertools.combinations(range(t), size)


def verify_local_sparsity(a: Hypergraph, k: int, budget: int = DEFAULT_BUDGET) -> SparsityCheck:
    """Exhaustive check; on failure returns a smallest, lexicographically first violator.

    Sizes above ``|V(A)|`` have no subsets, so ``k`` is effectively capped at
    the vertex count.
    """
    if k < a.r:
        raise InvalidInput(f"k must be >= r (k={k}, r={a.r})")
    cost = subset_cost(a.n, a.r, k)
    if cost > budget:
        raise VerificationTooCostly(f"{cost} subsets exceed the verification budget {budget}")
    edges = set(a.edges)
    checked = 0
    # a set of exactly r vertices spans at most one edge, so start one above
    for s in _subsets(a.n, a.r, k, a.r + 1):
        checked += 1
        inside = len(_edges_inside(s, a.r, edges)) if edges else 0
        if inside > len(s) - a.r + 1:
            return SparsityCheck(False, s, inside, checked)
    return SparsityCheck(True, None, 0, checked)


def verify_edge_count(a: Hypergraph, sigma: float) -> bool:
    return a.num_edges >= sigma * a.n ** (a.r - 1)


def _delete_violations(t: int, r: int, k: int, edges: set[Edge]) -> None:
    """Sweep sizes r+1..k in lexicographic order, dropping the last edge of each violator."""
    while True:
        dirty = False
        for s in _subsets(t, r, k, r + 1):
            inside = _edges_inside(s, r, edges)
            if len(inside) > len(s) - r + 1:
                edges.discard(inside[-1])
                dirty = True
        if not dirty:
            return


def _attempt(p: SparseParams, attempt: int) -> Hypergraph:
    rng = np.random.default_rng([p.seed, attempt])
    all_sets = list(itertools.combinations(range(p.t), p.r))
    keep = rng.random(len(all_sets)) < p.inclusion_probability
    edges = {e for e, kept in zip(all_sets, keep) if kept}
    _delete_violations(p.t, p.r, p.k, edges)
    return Hypergraph(p.r, p.t, tuple(edges))


def build_sparse(p: SparseParams) -> Hypergraph:
    """First attempt (lowest index) whose graph passes both checks."""
    if p.sigma == 0:
        return Hypergraph.empty(p.r, p.t)
    if subset_cost(p.t, p.r, p.k) > p.budget:
        raise VerificationTooCostly(f"parameters exceed the verification budget {p.budget}")
    best = 0
    for attempt in range(p.max_attempts):
        a = _attempt(p, attempt)
        best = max(best, a.num_edges)
        if verify_edge_count(a, p.sigma) and verify_local_sparsity(a, p.k, p.budget):
            return a
    raise SparseBuildError(p, best)
