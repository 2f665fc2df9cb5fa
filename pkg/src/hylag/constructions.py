"""The explicit 5-uniform families, their layered and lifted versions, and
the exact rational quantities attached to them.

Every base family G(l, t) lives on ``l`` parts of ``t`` vertices, with part
``i`` occupying the contiguous ids ``i*t .. (i+1)*t - 1``.  Each family is a
union of *profiles*: a profile is a vector ``c`` of per-part counts summing
to 5, and contributes every 5-set with exactly ``c[i]`` vertices in part
``i``.  Enumerating profiles instead of filtering all 5-subsets keeps the
build proportional to the edge count.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np
import sympy

from .hypergraph import Hypergraph, InvalidInput, blow_up, blow_up_edge_count, induced_subgraph

R = 5
Profile = tuple[int, ...]


class FamilyChoice(str, enum.Enum):
    ALPHA = "alpha"
    COMPLEMENT = "complement"
    N12_125 = "n12_125"
    N96_625 = "n96_625"
    N252_625 = "n252_625"

    @property
    def is_special(self) -> bool:
        return self in SPECIALS


SPECIALS = {
    FamilyChoice.N12_125: Fraction(12, 125),
    FamilyChoice.N96_625: Fraction(96, 625),
    FamilyChoice.N252_625: Fraction(252, 625),
}


def parse_family(name: str | FamilyChoice) -> FamilyChoice:
    try:
        return FamilyChoice(str(getattr(name, "value", name)).lower())
    except ValueError:
        raise InvalidInput(f"unknown family {name!r}; choose from {[c.value for c in FamilyChoice]}") from None


def _check_ell(choice: FamilyChoice, ell: int) -> None:
    if ell < 2:
        raise InvalidInput(f"ell must be >= 2, got {ell}")
    if choice.is_special and ell != 5:
        raise InvalidInput(f"family {choice.value} is defined only for ell = 5")


@dataclass(frozen=True)
class ConstructionParams:
    choice: FamilyChoice = FamilyChoice.ALPHA
    ell: int = 5
    q: int = 1
    t: int = 1
    r: int = 5

    def __post_init__(self) -> None:
        object.__setattr__(self, "choice", parse_family(self.choice))
        _check_ell(self.choice, self.ell)
        if self.q < 1:
            raise InvalidInput(f"q must be >= 1, got {self.q}")
        if self.t < 1:
            raise InvalidInput(f"t must be >= 1, got {self.t}")
        if self.r < 5:
            raise InvalidInput(f"r must be >= 5, got {self.r}")


# --- exact constants ---------------------------------------------------------


def alpha(ell: int) -> Fraction:
    """1 - 5/l^3 + 4/l^4."""
    if ell < 2:
        raise InvalidInput(f"ell must be >= 2, got {ell}")
    return 1 - Fraction(5, ell**3) + Fraction(4, ell**4)


def N_of_ell(choice: FamilyChoice | str, ell: int) -> Fraction:
    choice = parse_family(choice)
    _check_ell(choice, ell)
    if choice is FamilyChoice.ALPHA:
        return alpha(ell)
    if choice is FamilyChoice.COMPLEMENT:
        return 1 - Fraction(1, ell**4)
    return SPECIALS[choice]


def N_of_ell_q(choice: FamilyChoice | str, ell: int, q: int) -> Fraction:
    """Limit density of the layered construction with ``q`` blocks."""
    if q < 1:
        raise InvalidInput(f"q must be >= 1, got {q}")
    n = N_of_ell(choice, ell)
    L, Q = Fraction(ell), Fraction(q)
    return (
        1
        - 10 / (L * Q)
        + 35 / (L**2 * Q**2)
        - 50 / (L**3 * Q**3)
        + 10 / (L * Q**4)
        - 35 / (L**2 * Q**4)
        + 50 / (L**3 * Q**4)
        - 1 / Q**4
        + n / Q**4
    )


def condition7_value(choice: FamilyChoice | str, ell: int, q: int) -> Fraction:
    """l^3(1-N)(q^3+q^2+q+1) - 10l^2(q^2+q+1) + 35l(q+1) - 50."""
    n = N_of_ell(choice, ell)
    return ell**3 * (1 - n) * (q**3 + q**2 + q + 1) - 10 * ell**2 * (q**2 + q + 1) + 35 * ell * (q + 1) - 50


def condition7(choice: FamilyChoice | str, ell: int, q: int) -> bool:
    if q < 1:
        raise InvalidInput(f"q must be >= 1, got {q}")
    return q == 1 or condition7_value(choice, ell, q) >= 0


def sigma_block(ell: int, q: int) -> Fraction:
    """Sparse-edge budget l^4 q / 12 used by the layered construction."""
    return Fraction(ell**4 * q, 12)


# --- profiles ----------------------------------------------------------------


def _count_vectors(parts: int, total: int = R) -> Iterator[Profile]:
    for bars in itertools.combinations(range(total + parts - 1), parts - 1):
        prev, out = -1, []
        for b in bars + (total + parts - 1,):
            out.append(b - prev - 1)
            prev = b
        yield tuple(out)


_ALPHA_SHAPES = {(1, 1, 1, 1, 1), (2, 1, 1, 1), (2, 2, 1), (3, 1, 1), (3, 2)}


@lru_cache(maxsize=None)
def profiles(choice: FamilyChoice | str, ell: int) -> tuple[Profile, ...]:
    """Per-part count vectors whose 5-sets make up G(l, t)."""
    choice = parse_family(choice)
    _check_ell(choice, ell)
    if choice is FamilyChoice.ALPHA:
        keep = lambda c: tuple(sorted((v for v in c if v), reverse=True)) in _ALPHA_SHAPES  # noqa: E731
        return tuple(c for c in _count_vectors(ell) if keep(c))
    if choice is FamilyChoice.COMPLEMENT:
        return tuple(c for c in _count_vectors(ell) if max(c) < R)
    if choice is FamilyChoice.N12_125:
        # one vertex in each of V1, V2, V3, or a pair in Vi with a vertex in the next part (cyclically);
        # always one vertex in each of V4, V5
        return ((1, 1, 1, 1, 1), (2, 1, 0, 1, 1), (0, 2, 1, 1, 1), (1, 0, 2, 1, 1))
    if choice is FamilyChoice.N96_625:
        return tuple(c + (1, 1) for c in _count_vectors(3, 3) if max(c) < 3)
    return tuple(c + (1,) for c in _count_vectors(4, 4) if max(c) < 4)


def _profile_edges(profile: Sequence[int], starts: Sequence[int], t: int) -> Iterator[tuple[int, ...]]:
    pools = [itertools.combinations(range(s, s + t), c) for s, c in zip(starts, profile) if c]
    for pieces in itertools.product(*pools):
        yield tuple(itertools.chain.from_iterable(pieces))


def part_range(i: int, t: int) -> range:
    return range(i * t, (i + 1) * t)


def part_of(v: int, t: int) -> int:
    return v // t


def edge_profile(e: Sequence[int], t: int, parts: int) -> Profile:
    c = [0] * parts
    for v in e:
        c[part_of(v, t)] += 1
    return tuple(c)


def build_base(params: ConstructionParams) -> Hypergraph:
    """G(l, t): the 5-uniform base graph of the chosen family."""
    p = params
    starts = [i * p.t for i in range(p.ell)]
    edges = [e for prof in profiles(p.choice, p.ell) for e in _profile_edges(prof, starts, p.t)]
    return Hypergraph(R, p.ell * p.t, tuple(edges))


def base_edge_count(choice: FamilyChoice | str, ell: int, t: int) -> int:
    """|E(G(l, t))| summed over profiles, without building the graph."""
    return sum(math.prod(math.comb(t, c) for c in prof) for prof in profiles(choice, ell))


def closed_form_edge_count(choice: FamilyChoice | str, ell: int, t: int) -> int:
    """Edge count from the family's published counting formula."""
    choice = parse_family(choice)
    _check_ell(choice, ell)
    C = math.comb
    if choice is FamilyChoice.ALPHA:
        return (
            C(ell, 5) * t**5
            + ell * C(ell - 1, 3) * C(t, 2) * t**3
            + C(ell, 2) * (ell - 2) * C(t, 2) ** 2 * t
            + ell * C(ell - 1, 2) * C(t, 3) * t**2
            + ell * (ell - 1) * C(t, 3) * C(t, 2)
        )
    if choice is FamilyChoice.COMPLEMENT:
        return C(ell * t, 5) - ell * C(t, 5)
    if choice is FamilyChoice.N12_125:
        return t**5 + 3 * C(t, 2) * t**3
    if choice is FamilyChoice.N96_625:
        return (C(3 * t, 3) - 3 * C(t, 3)) * t**2
    return (C(4 * t, 4) - 4 * C(t, 4)) * t


def build_layered(params: ConstructionParams) -> Hypergraph:
    """G(l, q, t): q copies of G(l, t) plus every transversal 5-set across blocks."""
    p = params
    parts = p.ell * p.q
    edges: list[tuple[int, ...]] = []
    for b in range(p.q):
        starts = [(b * p.ell + i) * p.t for i in range(p.ell)]
        for prof in profiles(p.choice, p.ell):
            edges.extend(_profile_edges(prof, starts, p.t))
    for js in itertools.combinations(range(parts), R):
        if len({j // p.ell for j in js}) == 1:
            continue
        edges.extend(itertools.product(*(part_range(j, p.t) for j in js)))
    return Hypergraph(R, parts * p.t, tuple(edges))


def layered_edge_count(choice: FamilyChoice | str, ell: int, q: int, t: int) -> int:
    return q * base_edge_count(choice, ell, t) + (math.comb(ell * q, R) - q * math.comb(ell, R)) * t**R


def attach_sparse(g: Hypergraph, a: Hypergraph, part1: Sequence[int]) -> Hypergraph:
    """Add the edges of ``a`` (relabeled onto ``part1``) to ``g``."""
    part1 = [int(v) for v in part1]
    if a.r != g.r:
        raise InvalidInput(f"uniformity mismatch: {a.r} vs {g.r}")
    if a.n != len(part1):
        raise InvalidInput(f"sparse graph has {a.n} vertices, part has {len(part1)}")
    for v in part1:
        g._check_vertex(v)
    new = {tuple(sorted(part1[v] for v in e)) for e in a.edges}
    clash = new & g.edge_set
    if clash:
        raise InvalidInput(f"sparse edge {min(clash)} already present in the base graph")
    return Hypergraph(g.r, g.n, g.edges + tuple(new))


def lift_to_r(h5: Hypergraph, r: int, t: int) -> Hypergraph:
    """Extend every 5-edge by one vertex from each of the new parts V6..Vr."""
    if r < 6:
        raise InvalidInput("lift needs r >= 6; use the 5-uniform graph directly")
    if h5.r != R or h5.n != R * t:
        raise InvalidInput(f"expected a 5-graph on 5t = {R * t} vertices")
    extra = [part_range(j, t) for j in range(R, r)]
    edges = [e + tail for e in h5.edges for tail in itertools.product(*extra)]
    return Hypergraph(r, r * t, tuple(edges))


def blowup_sizes(y: Sequence[float], n: int) -> list[int]:
    return [int(math.floor(n * float(v))) for v in y]


def weighted_blowup(g: Hypergraph, y: Sequence[float], n: int) -> Hypergraph:
    """Blow-up with class sizes floor(n * y_i); vertices with empty classes are dropped."""
    sizes = blowup_sizes(y, n)
    if len(sizes) != g.n:
        raise InvalidInput(f"weight vector has length {len(sizes)}, graph has {g.n} vertices")
    keep = [i for i, s in enumerate(sizes) if s >= 1]
    if not keep:
        raise InvalidInput("every class is empty; increase n")
    return blow_up(induced_subgraph(g, keep), [sizes[i] for i in keep])


def weighted_blowup_density(g: Hypergraph, y: Sequence[float], n: int) -> Fraction:
    """Exact density of :func:`weighted_blowup` computed from class sizes alone."""
    sizes = blowup_sizes(y, n)
    if len(sizes) != g.n:
        raise InvalidInput(f"weight vector has length {len(sizes)}, graph has {g.n} vertices")
    total = sum(sizes)
    if total < g.r:
        raise InvalidInput("blow-up has fewer than r vertices")
    return Fraction(blow_up_edge_count(g, sizes), math.comb(total, g.r))


# --- asymptotics -------------------------------------------------------------


@lru_cache(maxsize=None)
def edge_count_polynomial(choice: FamilyChoice | str, ell: int) -> tuple[Fraction, ...]:
    """Coefficients (constant first) of |E(G(l, t))| as a polynomial in t.

    Found by exact interpolation through t = 1..8; the top coefficients are
    checked to vanish, so a degree above 5 raises instead of being truncated.
    """
    ts = range(1, 9)
    tt = sympy.Symbol("t")
    poly = sympy.Poly(sympy.interpolate([(k, base_edge_count(choice, ell, k)) for k in ts], tt), tt)
    coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs())]
    coeffs += [Fraction(0)] * (8 - len(coeffs))
    if any(coeffs[6:]):
        raise AssertionError("edge count is not a quintic in t")
    return tuple(coeffs[:6])


def c0(choice: FamilyChoice | str, ell: int) -> Fraction:
    """Minus the t^4 coefficient of |E(G(l, t))|."""
    return -edge_count_polynomial(choice, ell)[4]


def eq4_holds(choice: FamilyChoice | str, ell: int, t: int) -> bool:
    """(|E(G(l,t))| + l^4 t^4 / 12) / (l t)^5 >= (N(l) + 1/(l^5 t)) / 120, exactly."""
    lhs = Fraction(base_edge_count(choice, ell, t)) + Fraction(ell**4 * t**4, 12)
    lhs /= (ell * t) ** 5
    rhs = (N_of_ell(choice, ell) + Fraction(1, ell**5 * t)) / 120
    return lhs >= rhs


def eq4_threshold(choice: FamilyChoice | str, ell: int, t_max: int = 200) -> int | None:
    """Smallest t1 with the edge-count inequality holding on every t in [t1, t_max]."""
    t1 = None
    for t in range(t_max, 0, -1):
        if not eq4_holds(choice, ell, t):
            break
        t1 = t
    return t1


def exact_density(g: Hypergraph) -> Fraction:
    return Fraction(g.num_edges, math.comb(g.n, g.r))


def uniform_lagrangian(g: Hypergraph) -> Fraction:
    """|E| / n^r, exact."""
    return Fraction(g.num_edges, g.n**g.r)


def parts_of(params: ConstructionParams) -> list[range]:
    return [part_range(i, params.t) for i in range(params.ell * params.q)]


def blocks_of(params: ConstructionParams) -> list[list[int]]:
    """Part indices grouped by block."""
    return [list(range(b * params.ell, (b + 1) * params.ell)) for b in range(params.q)]


def part_weights(x: Sequence[float], t: int, parts: int) -> np.ndarray:
    """Sum of vertex weights per part."""
    x = np.asarray(x, dtype=float)
    return np.add.reduceat(x, np.arange(0, parts * t, t))
