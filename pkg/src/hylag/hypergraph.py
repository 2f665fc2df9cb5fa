"""Immutable r-uniform hypergraphs and their combinatorial operations.

Vertices are the integers ``0 .. n-1``; every edge is stored as a sorted
tuple and the edge list is kept in lexicographic order, so two graphs with
the same edge set compare (and serialize) identically.
"""

from __future__ import annotations

import io
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np


class InvalidInput(ValueError):
    """Raised when an operation receives arguments outside its domain."""


Edge = tuple[int, ...]


@dataclass(frozen=True)
class Hypergraph:
    r: int
    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self) -> None:
        if self.r < 1:
            raise InvalidInput(f"uniformity must be >= 1, got {self.r}")
        if self.n < 0:
            raise InvalidInput(f"vertex count must be >= 0, got {self.n}")
        canon = set()
        for e in self.edges:
            e = tuple(sorted(int(v) for v in e))
            if len(e) != self.r or len(set(e)) != self.r:
                raise InvalidInput(f"edge {e} is not a set of {self.r} distinct vertices")
            if e[0] < 0 or e[-1] >= self.n:
                raise InvalidInput(f"edge {e} has a vertex outside 0..{self.n - 1}")
            canon.add(e)
        object.__setattr__(self, "edges", tuple(sorted(canon)))

    @classmethod
    def complete(cls, r: int, n: int) -> "Hypergraph":
        return cls(r, n, tuple(itertools.combinations(range(n), r)))

    @classmethod
    def empty(cls, r: int, n: int) -> "Hypergraph":
        return cls(r, n, ())

    def __len__(self) -> int:
        return len(self.edges)

    def __contains__(self, e: Iterable[int]) -> bool:
        return tuple(sorted(e)) in self.edge_set

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def edge_array(self) -> np.ndarray:
        """Edges as an ``(|E|, r)`` integer array (read-only)."""
        arr = np.array(self.edges, dtype=np.intp).reshape(len(self.edges), self.r)
        arr.flags.writeable = False
        return arr

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise InvalidInput(f"vertex {v} outside 0..{self.n - 1}")


def density(g: Hypergraph) -> Fraction:
    """|E(G)| / C(n, r) as an exact rational."""
    if g.n < g.r:
        raise InvalidInput(f"density needs n >= r (n={g.n}, r={g.r})")
    return Fraction(g.num_edges, math.comb(g.n, g.r))


def induced_subgraph(g: Hypergraph, subset: Iterable[int]) -> Hypergraph:
    """Subgraph induced on ``subset``; vertices relabeled in increasing order."""
    verts = sorted(set(subset))
    for v in verts:
        g._check_vertex(v)
    relabel = {v: i for i, v in enumerate(verts)}
    keep = set(verts)
    edges = [tuple(relabel[v] for v in e) for e in g.edges if keep.issuperset(e)]
    return Hypergraph(g.r, len(verts), tuple(edges))


def link(g: Hypergraph, i: int) -> Hypergraph:
    """The (r-1)-graph of edges through ``i`` with ``i`` removed.

    The result lives on ``n - 1`` vertices: vertex ``i`` is deleted and the
    vertices above it shift down by one.
    """
    if g.r < 2:
        raise InvalidInput("link needs r >= 2")
    g._check_vertex(i)
    edges = [tuple(v - (v > i) for v in e if v != i) for e in g.edges if i in e]
    return Hypergraph(g.r - 1, g.n - 1, tuple(edges))


def _link_off_pair(g: Hypergraph, i: int, j: int) -> frozenset[Edge]:
    return frozenset(tuple(v for v in e if v != i) for e in g.edges if i in e and j not in e)


def equivalent(g: Hypergraph, i: int, j: int) -> bool:
    """True iff the links of ``i`` and ``j`` agree on V - {i, j}."""
    g._check_vertex(i)
    g._check_vertex(j)
    if i == j:
        raise InvalidInput("equivalent() needs two distinct vertices")
    return _link_off_pair(g, i, j) == _link_off_pair(g, j, i)


def symmetry_classes(g: Hypergraph) -> list[list[int]]:
    """Partition of V(G) into maximal classes of pairwise-equivalent vertices.

    Classes are grown greedily against a representative and then every
    pair inside a class is re-checked, so the returned partition never relies
    on transitivity of the relation.
    """
    classes: list[list[int]] = []
    for v in range(g.n):
        for cls in classes:
            if equivalent(g, cls[0], v):
                cls.append(v)
                break
        else:
            classes.append([v])
    for cls in classes:
        for a, b in itertools.combinations(cls, 2):
            if not equivalent(g, a, b):  # pragma: no cover - relation is transitive
                raise AssertionError(f"vertices {a} and {b} grouped but not equivalent")
    return classes


def blow_up(g: Hypergraph, sizes: Sequence[int]) -> Hypergraph:
    """Replace vertex ``i`` by ``sizes[i]`` clones; classes are laid out contiguously."""
    sizes = [int(s) for s in sizes]
    if len(sizes) != g.n:
        raise InvalidInput(f"blow-up vector has length {len(sizes)}, graph has {g.n} vertices")
    if any(s < 1 for s in sizes):
        raise InvalidInput("blow-up class sizes must be >= 1")
    offsets = np.concatenate([[0], np.cumsum(sizes)]).astype(int)
    classes = [range(offsets[i], offsets[i + 1]) for i in range(g.n)]
    edges = []
    for e in g.edges:
        edges.extend(itertools.product(*(classes[v] for v in e)))
    return Hypergraph(g.r, int(offsets[-1]), tuple(edges))


def blow_up_edge_count(g: Hypergraph, sizes: Sequence[int]) -> int:
    """Edge count of the blow-up, sum over edges of the product of class sizes."""
    if len(sizes) != g.n:
        raise InvalidInput(f"blow-up vector has length {len(sizes)}, graph has {g.n} vertices")
    return sum(math.prod(int(sizes[v]) for v in e) for e in g.edges)


# --- HYG v1 text format ---------------------------------------------------


def dumps(g: Hypergraph, comment: str | None = None) -> str:
    out = io.StringIO()
    if comment:
        for line in comment.splitlines():
            out.write(f"# {line}\n")
    out.write(f"{g.r} {g.n}\n")
    for e in g.edges:
        out.write(" ".join(map(str, e)) + "\n")
    return out.getvalue()


def loads(text: str) -> Hypergraph:
    header: tuple[int, int] | None = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            nums = [int(tok) for tok in line.split()]
        except ValueError as exc:
            raise InvalidInput(f"line {lineno}: non-integer token") from exc
        if header is None:
            if len(nums) != 2:
                raise InvalidInput(f"line {lineno}: header must be 'r n'")
            header = (nums[0], nums[1])
            continue
        if nums != sorted(nums) or len(set(nums)) != len(nums):
            raise InvalidInput(f"line {lineno}: edge vertices must be strictly ascending")
        edges.append(tuple(nums))
    if header is None:
        raise InvalidInput("missing 'r n' header")
    r, n = header
    if len(set(edges)) != len(edges):
        raise InvalidInput("duplicate edge")
    return Hypergraph(r, n, tuple(edges))


def write_hyg(g: Hypergraph, path: str | Path, comment: str | None = None) -> None:
    Path(path).write_text(dumps(g, comment))


def read_hyg(path: str | Path) -> Hypergraph:
    return loads(Path(path).read_text())
