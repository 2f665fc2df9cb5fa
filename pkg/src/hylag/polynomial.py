"""Sparse polynomials stored as lists of monomials with repeated indices.

A monomial ``c * x_0^2 * x_3`` is stored as coefficient ``c`` with the index
row ``(0, 0, 3)``.  Rows are padded to a common degree with the sentinel
index ``nvars``, whose value is fixed to 1, so constants and lower-degree
terms fit in the same array.  A hypergraph's Lagrangian is the special case
of unit coefficients and distinct indices per row.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence

import numpy as np

Number = int | Fraction


@dataclass(frozen=True)
class MonomialPoly:
    nvars: int
    # sorted index tuple -> exact coefficient; the sentinel ``nvars`` never appears here
    coeffs: Mapping[tuple[int, ...], Fraction] = field(default_factory=dict)

    @classmethod
    def from_terms(cls, nvars: int, terms: Iterable[tuple[Number, Sequence[int]]]) -> "MonomialPoly":
        acc: dict[tuple[int, ...], Fraction] = defaultdict(Fraction)
        for c, idx in terms:
            key = tuple(sorted(int(i) for i in idx))
            if key and (key[0] < 0 or key[-1] >= nvars):
                raise ValueError(f"monomial index {key} outside 0..{nvars - 1}")
            acc[key] += Fraction(c)
        return cls(nvars, {k: v for k, v in acc.items() if v != 0})

    @classmethod
    def from_edges(cls, nvars: int, edges: Iterable[Sequence[int]]) -> "MonomialPoly":
        return cls.from_terms(nvars, ((1, e) for e in edges))

    def __add__(self, other: "MonomialPoly") -> "MonomialPoly":
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")
        return MonomialPoly.from_terms(
            self.nvars, [(c, k) for k, c in self.coeffs.items()] + [(c, k) for k, c in other.coeffs.items()]
        )

    def __mul__(self, other: "MonomialPoly") -> "MonomialPoly":
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")
        return MonomialPoly.from_terms(
            self.nvars,
            ((c1 * c2, k1 + k2) for k1, c1 in self.coeffs.items() for k2, c2 in other.coeffs.items()),
        )

    def scale(self, c: Number) -> "MonomialPoly":
        return MonomialPoly(self.nvars, {k: v * Fraction(c) for k, v in self.coeffs.items() if v * c != 0})

    def substitute(self, var: int, replacement: "MonomialPoly") -> "MonomialPoly":
        """Replace every occurrence of variable ``var`` by ``replacement``."""
        powers = {0: MonomialPoly.constant(self.nvars, 1)}
        terms = []
        for key, c in self.coeffs.items():
            m = key.count(var)
            for k in range(len(powers), m + 1):
                powers[k] = powers[k - 1] * replacement
            rest = tuple(i for i in key if i != var)
            terms.extend((c * pc, rest + pk) for pk, pc in powers[m].coeffs.items())
        return MonomialPoly.from_terms(self.nvars, terms)

    @classmethod
    def constant(cls, nvars: int, c: Number) -> "MonomialPoly":
        return cls.from_terms(nvars, [(c, ())])

    @classmethod
    def variable(cls, nvars: int, i: int, c: Number = 1) -> "MonomialPoly":
        return cls.from_terms(nvars, [(c, (i,))])

    # --- structure --------------------------------------------------------

    @property
    def degree(self) -> int:
        return max((len(k) for k in self.coeffs), default=0)

    @property
    def is_homogeneous(self) -> bool:
        return len({len(k) for k in self.coeffs}) <= 1

    @property
    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs.values())

    @cached_property
    def _arrays(self) -> tuple[np.ndarray, np.ndarray]:
        d = max(self.degree, 1)
        keys = list(self.coeffs)
        idx = np.full((len(keys), d), self.nvars, dtype=np.intp)
        for row, k in enumerate(keys):
            idx[row, : len(k)] = k
        coef = np.array([float(self.coeffs[k]) for k in keys], dtype=float)
        return idx, coef

    # --- evaluation -------------------------------------------------------

    def _extend(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        if x.shape != (self.nvars,):
            raise ValueError(f"expected {self.nvars} values, got shape {x.shape}")
        return np.append(x, 1.0)

    def __call__(self, x: Sequence[float]) -> float:
        idx, coef = self._arrays
        if not len(coef):
            return 0.0
        xe = self._extend(np.asarray(x))
        return float(coef @ np.prod(xe[idx], axis=1))

    def exact(self, values: Sequence[Number]) -> Fraction:
        """Evaluate in exact rational arithmetic."""
        if len(values) != self.nvars:
            raise ValueError(f"expected {self.nvars} values, got {len(values)}")
        vals = [Fraction(v) for v in values]
        total = Fraction(0)
        for key, c in self.coeffs.items():
            term = c
            for i in key:
                term *= vals[i]
            total += term
        return total

    def gradient(self, x: Sequence[float]) -> np.ndarray:
        idx, coef = self._arrays
        n = self.nvars
        if not len(coef):
            return np.zeros(n)
        xe = self._extend(np.asarray(x))
        vals = xe[idx]
        d = idx.shape[1]
        # products of all factors except column k, via prefix/suffix products
        prefix = np.ones_like(vals)
        suffix = np.ones_like(vals)
        for k in range(1, d):
            prefix[:, k] = prefix[:, k - 1] * vals[:, k - 1]
            suffix[:, d - 1 - k] = suffix[:, d - k] * vals[:, d - k]
        g = np.zeros(n + 1)
        for k in range(d):
            g += np.bincount(idx[:, k], weights=coef * prefix[:, k] * suffix[:, k], minlength=n + 1)
        return g[:n]

    def hessian(self, x: Sequence[float]) -> np.ndarray:
        idx, coef = self._arrays
        n = self.nvars
        if not len(coef):
            return np.zeros((n, n))
        xe = self._extend(np.asarray(x))
        vals = xe[idx]
        d = idx.shape[1]
        h = np.zeros((n + 1) * (n + 1))
        cols = np.arange(d)
        for a in range(d):
            for b in range(d):
                if a == b:
                    continue
                rest = np.prod(vals[:, (cols != a) & (cols != b)], axis=1) if d > 2 else np.ones(len(coef))
                flat = idx[:, a] * (n + 1) + idx[:, b]
                h += np.bincount(flat, weights=coef * rest, minlength=(n + 1) ** 2)
        return h.reshape(n + 1, n + 1)[:n, :n]
