"""Hypergraph Lagrangians: evaluation, gradients and a multi-start ascent.

The reported maximum is always a value attained at a simplex point, so it is
a certified *lower* bound on the Lagrangian.  No upper bounds are claimed.
"""

from __future__ import annotations

import dataclasses
import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .hypergraph import Hypergraph, InvalidInput, link, symmetry_classes
from .polynomial import MonomialPoly

SIMPLEX_TOL = 1e-12


@dataclass(frozen=True)
class OptimizerConfig:
    restarts: int = 32
    max_iterations: int = 100_000
    step_tolerance: float = 1e-10
    value_tolerance: float = 1e-12
    seed: int = 0
    symmetrize: bool = True
    polish: bool = True

    def __post_init__(self) -> None:
        if self.restarts < 1:
            raise InvalidInput("restarts must be >= 1")
        if self.max_iterations < 1:
            raise InvalidInput("max_iterations must be >= 1")
        if not (self.step_tolerance > 0 and self.value_tolerance > 0):
            raise InvalidInput("tolerances must be positive")


@dataclass(frozen=True)
class OptResult:
    lambda_lower: float
    argmax: np.ndarray
    kkt_residual: float
    restarts: int
    iterations: int
    seed: int
    converged: bool = True

    def to_dict(self) -> dict:
        return {
            "lambda_lower": self.lambda_lower,
            "argmax": [float(v) for v in self.argmax],
            "kkt_residual": self.kkt_residual,
            "restarts": self.restarts,
            "iterations": self.iterations,
            "seed": self.seed,
            "converged": self.converged,
        }


def simplex_point(x: Sequence[float], tol: float = SIMPLEX_TOL) -> np.ndarray:
    """Validate ``x`` as a point of the probability simplex."""
    x = np.asarray(x, dtype=float)
    if x.ndim != 1 or not len(x):
        raise InvalidInput("weight vector must be a non-empty 1-d sequence")
    if np.any(x < 0):
        raise InvalidInput("weights must be nonnegative")
    if abs(x.sum() - 1.0) > tol:
        raise InvalidInput(f"weights sum to {x.sum()!r}, not 1")
    return x


def project_to_simplex(v: np.ndarray, total: float = 1.0) -> np.ndarray:
    """Euclidean projection onto {x >= 0, sum x = total} (sort-based)."""
    u = np.sort(v)[::-1]
    css = np.cumsum(u) - total
    ks = np.arange(1, len(v) + 1)
    rho = np.nonzero(u - css / ks > 0)[0][-1]
    return np.maximum(v - css[rho] / (rho + 1), 0.0)


@lru_cache(maxsize=512)
def lagrangian_polynomial(g: Hypergraph) -> MonomialPoly:
    return MonomialPoly.from_edges(g.n, g.edges)


def _check_dim(g: Hypergraph, x: Sequence[float]) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if x.shape != (g.n,):
        raise InvalidInput(f"weight vector has shape {x.shape}, graph has {g.n} vertices")
    return x


def evaluate(g: Hypergraph, x: Sequence[float]) -> float:
    """Sum over edges of the product of vertex weights."""
    x = _check_dim(g, x)
    if not g.num_edges:
        return 0.0
    return float(np.prod(x[g.edge_array], axis=1).sum())


def gradient(g: Hypergraph, x: Sequence[float]) -> np.ndarray:
    """Partial derivatives of :func:`evaluate`; entry i is the link value at i."""
    x = _check_dim(g, x)
    if not g.num_edges:
        return np.zeros(g.n)
    return lagrangian_polynomial(g).gradient(x)


def gradient_via_links(g: Hypergraph, x: Sequence[float]) -> np.ndarray:
    """Slow reference: evaluate each link graph on the remaining weights."""
    x = _check_dim(g, x)
    return np.array([evaluate(link(g, i), np.delete(x, i)) for i in range(g.n)])


def kkt_residual(g: Hypergraph, x: Sequence[float]) -> float:
    """max over the support of |grad_i - r * lambda(G, x)|."""
    x = simplex_point(_check_dim(g, x), tol=1e-9)
    grad = gradient(g, x)
    support = x > 0
    return float(np.max(np.abs(grad[support] - g.r * evaluate(g, x))))


# --- generic simplex ascent -------------------------------------------------


@dataclass
class Ascent:
    x: np.ndarray
    value: float
    iterations: int
    converged: bool


def _extrapolate(poly: MonomialPoly, x: np.ndarray, y: np.ndarray, vy: float, max_doublings: int = 20):
    """Push further along the growth-transform direction while the value rises."""
    d = y - x
    neg = d < 0
    s_max = float(np.min(x[neg] / -d[neg])) if np.any(neg) else np.inf
    best, vbest, s = y, vy, 1.0
    for _ in range(max_doublings):
        s *= 2.0
        if s > s_max:
            s = s_max
        z = np.maximum(x + s * d, 0.0)
        vz = poly(z)
        if vz <= vbest:
            break
        best, vbest = z / z.sum(), vz
        if s == s_max:
            break
    return best, vbest


def _replicator(poly: MonomialPoly, x: np.ndarray, cfg: OptimizerConfig) -> Ascent:
    # Baum-Eagon growth transform; monotone for nonnegative homogeneous polynomials.
    val = poly(x)
    for it in range(1, cfg.max_iterations + 1):
        g = poly.gradient(x)
        denom = float(x @ g)
        if denom <= 0.0:
            # zero objective at x: escape with one projected-gradient step
            if not np.any(g > 0):
                return Ascent(x, val, it, True)
            x_new = project_to_simplex(x + g / np.max(g))
        else:
            x_new = x * g / denom
            x_new /= x_new.sum()
        val_new = poly(x_new)
        if denom > 0:
            x_new, val_new = _extrapolate(poly, x, x_new, val_new)
        step = float(np.max(np.abs(x_new - x)))
        gain = val_new - val
        x, val = x_new, val_new
        if denom > 0 and (gain < cfg.value_tolerance or step < cfg.step_tolerance):
            return Ascent(x, val, it, True)
    return Ascent(x, val, cfg.max_iterations, False)


WARMUP_ITERATIONS = 200
REDUCE_EVERY = 25
PRUNE_LEVELS = (1e-9, 1e-6, 1e-4, 1e-2)


def _is_multilinear(poly: MonomialPoly) -> bool:
    return all(len(set(k)) == len(k) for k in poly.coeffs)


def _pair_coefficient(poly: MonomialPoly, x: np.ndarray, i: int, j: int) -> float:
    """Second mixed partial d^2 P / dx_i dx_j of a multilinear polynomial."""
    idx, coef = poly._arrays
    rows = np.any(idx == i, axis=1) & np.any(idx == j, axis=1)
    if not np.any(rows):
        return 0.0
    sub = idx[rows]
    xe = np.append(x, 1.0)
    vals = np.where((sub == i) | (sub == j), 1.0, xe[sub])
    return float(coef[rows] @ np.prod(vals, axis=1))


def _spread(poly: MonomialPoly, x: np.ndarray) -> tuple[float, np.ndarray]:
    g = poly.gradient(x)
    return float(np.max(g) - np.min(g[x > 0])), g


def _support_reduction(poly: MonomialPoly, x: np.ndarray, val: float) -> tuple[np.ndarray, float] | None:
    """Drop small weights and re-solve the KKT system on what remains.

    On degenerate faces a vertex whose gradient ties the multiplier loses
    weight only like 1/k under first-order updates; cutting it and polishing
    reaches the face's optimum directly.  Accepted only if the value does not
    drop and the gradient spread shrinks.
    """
    base, _ = _spread(poly, x)
    best = None
    for cut in PRUNE_LEVELS:
        if not np.any((x > 0) & (x < cut)) and best is not None:
            continue
        y = _newton_polish(poly, x, prune=cut)
        vy = poly(y)
        sy, _ = _spread(poly, y)
        if vy >= val - 1e-15 * max(1.0, abs(val)) and sy < base:
            if best is None or sy < best[2]:
                best = (y, vy, sy)
    return None if best is None else best[:2]


def _pairwise_exchange(poly: MonomialPoly, x: np.ndarray, cfg: OptimizerConfig, budget: int) -> Ascent:
    """Move weight from the worst support vertex to the best vertex, exactly.

    For a multilinear objective the value along ``e_i - e_j`` is a concave
    quadratic, so each step is an exact line search.  Stops once the
    gradient spread max_i g_i - min_{j in supp} g_j falls below 1e-13
    (relative), which is the first-order optimality condition on the simplex.
    """
    val = poly(x)
    for it in range(1, budget + 1):
        if cfg.polish and it % REDUCE_EVERY == 0:
            reduced = _support_reduction(poly, x, val)
            if reduced is not None:
                x, val = reduced
        g = poly.gradient(x)
        supp = np.nonzero(x > 0)[0]
        i = int(np.argmax(g))
        j = int(supp[np.argmin(g[supp])])
        gap = g[i] - g[j]
        if gap <= 1e-13 * max(1.0, abs(g[i])) or i == j:
            return Ascent(x, val, it, True)
        h = _pair_coefficient(poly, x, i, j)
        t = x[j] if h <= 0 else min(x[j], gap / (2 * h))
        y = x.copy()
        y[i] += t
        y[j] -= t
        if t == x[j]:
            y[j] = 0.0
        vy = poly(y)
        if vy < val:
            return Ascent(x, val, it, True)
        x, val = y, vy
    return Ascent(x, val, budget, False)


def _project_mixed(v: np.ndarray, n_simplex: int) -> np.ndarray:
    out = np.empty_like(v)
    out[:n_simplex] = project_to_simplex(v[:n_simplex])
    out[n_simplex:] = np.clip(v[n_simplex:], 0.0, 1.0)
    return out


def _projected_ascent(poly: MonomialPoly, x: np.ndarray, n_simplex: int, cfg: OptimizerConfig) -> Ascent:
    """Projected gradient ascent with Armijo backtracking.

    The first ``n_simplex`` coordinates live on the probability simplex and
    the rest in the unit box.
    """
    val = poly(x)
    eta = 1.0
    for it in range(1, cfg.max_iterations + 1):
        g = poly.gradient(x)
        while True:
            y = _project_mixed(x + eta * g, n_simplex)
            vy = poly(y)
            if vy >= val + 1e-4 * float(g @ (y - x)):
                break
            eta *= 0.5
            if eta < 1e-16:
                return Ascent(x, val, it, True)
        step = float(np.max(np.abs(y - x)))
        gain = vy - val
        x, val = y, vy
        eta = min(eta * 2.0, 1e6)
        if gain < cfg.value_tolerance or step < cfg.step_tolerance:
            return Ascent(x, val, it, True)
    return Ascent(x, val, cfg.max_iterations, False)


def _newton_polish(poly: MonomialPoly, x: np.ndarray, prune: float = 1e-9, iters: int = 25) -> np.ndarray:
    """Newton iterations on the KKT system restricted to the support of ``x``."""
    x = np.where(x < prune, 0.0, x)
    x /= x.sum()
    support = np.nonzero(x)[0]
    if len(support) < 2:
        return x
    val = poly(x)
    mu = float(np.mean(poly.gradient(x)[support]))
    m = len(support)
    for _ in range(iters):
        g = poly.gradient(x)[support]
        resid = np.append(g - mu, x[support].sum() - 1.0)
        if np.max(np.abs(resid)) < 1e-15:
            break
        h = poly.hessian(x)[np.ix_(support, support)]
        jac = np.zeros((m + 1, m + 1))
        jac[:m, :m] = h
        jac[:m, m] = -1.0
        jac[m, :m] = 1.0
        delta = np.linalg.lstsq(jac, -resid, rcond=None)[0]
        y = x.copy()
        y[support] += delta[:m]
        if np.any(y[support] < 0):
            break
        vy = poly(y)
        if vy < val - 1e-15 * max(1.0, abs(val)):
            break
        x, val, mu = y, vy, mu + delta[m]
    x = np.maximum(x, 0.0)
    return x / x.sum()


def ascend(poly: MonomialPoly, x0: np.ndarray, cfg: OptimizerConfig, n_simplex: int | None = None) -> Ascent:
    """Local ascent from ``x0``; picks the update rule from the polynomial's shape."""
    n_simplex = poly.nvars if n_simplex is None else n_simplex
    x0 = np.asarray(x0, dtype=float)
    if n_simplex == poly.nvars and poly.is_homogeneous and poly.is_nonnegative:
        if _is_multilinear(poly):
            warm = dataclasses.replace(cfg, max_iterations=min(cfg.max_iterations, WARMUP_ITERATIONS))
            res = _replicator(poly, x0, warm)
            rest = _pairwise_exchange(poly, res.x, cfg, max(cfg.max_iterations - res.iterations, 1))
            res = Ascent(rest.x, rest.value, res.iterations + rest.iterations, rest.converged)
        else:
            res = _replicator(poly, x0, cfg)
    else:
        res = _projected_ascent(poly, x0, n_simplex, cfg)
    if cfg.polish and n_simplex == poly.nvars and poly.is_homogeneous:
        y = np.clip(_newton_polish(poly, res.x), 0.0, None)
        y /= y.sum()
        vy = poly(y)
        if vy >= res.value - 1e-15 * max(1.0, abs(res.value)):
            res = Ascent(y, vy, res.iterations, res.converged)
    return res


def restart_rng(seed: int, index: int) -> np.random.Generator:
    """Independent substream for restart ``index``."""
    return np.random.default_rng([seed, index])


def pool(x: np.ndarray, classes: Sequence[Sequence[int]]) -> np.ndarray:
    """Replace each class's weights by their mean."""
    y = np.array(x, dtype=float)
    for cls in classes:
        idx = list(cls)
        y[idx] = y[idx].mean()
    return y


def _starting_points(n: int, cfg: OptimizerConfig, classes: Sequence[Sequence[int]]) -> list[np.ndarray]:
    starts = [np.full(n, 1.0 / n)]
    for k in range(cfg.restarts):
        x = restart_rng(cfg.seed, k).dirichlet(np.ones(n))
        starts.append(pool(x, classes) if cfg.symmetrize else x)
    if cfg.symmetrize:
        for cls in classes:
            x = np.zeros(n)
            x[list(cls)] = 1.0 / len(cls)
            starts.append(x)
    return starts


def maximize(g: Hypergraph, cfg: OptimizerConfig | None = None) -> OptResult:
    """Best attained value of the Lagrangian over all restarts.

    Ties between restarts go to the lowest start index, so the result is a
    deterministic function of ``(g, cfg)``.
    """
    cfg = cfg or OptimizerConfig()
    if g.n == 0:
        raise InvalidInput("graph has no vertices")
    uniform = np.full(g.n, 1.0 / g.n)
    if not g.num_edges:
        return OptResult(0.0, uniform, 0.0, 0, 0, cfg.seed, True)
    poly = lagrangian_polynomial(g)
    classes = symmetry_classes(g) if cfg.symmetrize else [[v] for v in range(g.n)]
    best: Ascent | None = None
    iterations = 0
    starts = _starting_points(g.n, cfg, classes)
    for x0 in starts:
        res = ascend(poly, x0, cfg)
        iterations += res.iterations
        if best is None or res.value > best.value:
            best = res
    assert best is not None
    x = best.x
    value = evaluate(g, x)
    return OptResult(
        lambda_lower=value,
        argmax=x,
        kkt_residual=kkt_residual(g, x),
        restarts=len(starts),
        iterations=iterations,
        seed=cfg.seed,
        converged=best.converged,
    )


def simplex_grid(m: int, resolution: int):
    """All points of the m-simplex with coordinates in (1/resolution)Z."""
    for bars in itertools.combinations(range(resolution + m - 1), m - 1):
        prev = -1
        parts = []
        for b in bars + (resolution + m - 1,):
            parts.append(b - prev - 1)
            prev = b
        yield np.array(parts, dtype=float) / resolution


def brute_force_lagrangian(g: Hypergraph, grid_resolution: int, max_vertices: int = 7) -> float:
    """Maximum of the Lagrangian over a rational simplex grid (a lower bound)."""
    if g.n > max_vertices:
        raise InvalidInput(f"brute force refused: {g.n} vertices > {max_vertices}")
    if grid_resolution < 1:
        raise InvalidInput("grid resolution must be >= 1")
    if not g.num_edges:
        return 0.0
    pts = np.array(list(simplex_grid(g.n, grid_resolution)))
    vals = np.prod(pts[:, g.edge_array], axis=2).sum(axis=1)
    return float(vals.max())


def uniform_bound(g: Hypergraph) -> float:
    """|E| / m^r, the value at the uniform weight vector."""
    return g.num_edges / g.n**g.r
