"""Exact polynomial models of the bounding functions f, g, h, F and H.

All builders return :class:`MonomialPoly` objects with rational
coefficients, so values at rational points are exact.  Variable layouts:

* ``f``: parts ``a_1..a_l`` are variables ``0..l-1`` and ``rho`` is ``l``.
* ``F``: parts ``a_1..a_{lq}`` are ``0..lq-1`` and ``rho`` is ``lq``.
* ``H``: block weights ``b_1..b_q`` are ``0..q-1``.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from ..constructions import FamilyChoice, N_of_ell, parse_family, profiles
from ..polynomial import MonomialPoly


def _poly_sum(nvars: int, polys) -> MonomialPoly:
    terms = []
    for p in polys:
        terms.extend((c, k) for k, c in p.coeffs.items())
    return MonomialPoly.from_terms(nvars, terms)


def _var(nvars: int, i: int, c=1) -> MonomialPoly:
    return MonomialPoly.variable(nvars, i, c)


def _const(nvars: int, c) -> MonomialPoly:
    return MonomialPoly.constant(nvars, c)


def profile_polynomial(profs: Sequence[Sequence[int]], var_ids: Sequence[int], nvars: int) -> MonomialPoly:
    """sum over profiles of prod_i x_i^{k_i} / k_i!.

    This is the Lagrangian contribution of a profile-defined graph whose part
    weights are ``x``, spread evenly over infinitely many vertices per part.
    """
    terms = []
    for prof in profs:
        coef = Fraction(1, math.prod(math.factorial(k) for k in prof))
        idx = [v for v, k in zip(var_ids, prof) for _ in range(k)]
        terms.append((coef, idx))
    return MonomialPoly.from_terms(nvars, terms)


def g_poly(L: int, var_ids: Sequence[int] | None = None, nvars: int | None = None) -> MonomialPoly:
    """The symmetric degree-5 function g on L parts."""
    return family_g_poly(FamilyChoice.ALPHA, L, var_ids, nvars)


def family_g_poly(
    choice: FamilyChoice | str, ell: int, var_ids: Sequence[int] | None = None, nvars: int | None = None
) -> MonomialPoly:
    """Part-weight polynomial of G(l, t) for any family (equals N(l) l^5 c^5 / 120 at uniform)."""
    var_ids = list(range(ell)) if var_ids is None else list(var_ids)
    nvars = len(var_ids) if nvars is None else nvars
    return profile_polynomial(profiles(parse_family(choice), ell), var_ids, nvars)


def h_poly(m: int, var_ids: Sequence[int] | None = None, nvars: int | None = None) -> MonomialPoly:
    """Degree-4 companion of g on m = l-1 variables: (s^4 - sum a^4) / 24."""
    var_ids = list(range(m)) if var_ids is None else list(var_ids)
    nvars = len(var_ids) if nvars is None else nvars
    profs = [c for c in _compositions(m, 4) if max(c) < 4]
    return profile_polynomial(profs, var_ids, nvars)


def _compositions(parts: int, total: int):
    for bars in itertools.combinations(range(total + parts - 1), parts - 1):
        prev, out = -1, []
        for b in bars + (total + parts - 1,):
            out.append(b - prev - 1)
            prev = b
        yield tuple(out)


def elementary(var_ids: Sequence[int], degree: int, nvars: int) -> MonomialPoly:
    return MonomialPoly.from_terms(nvars, ((1, c) for c in itertools.combinations(var_ids, degree)))


def rho_block(nvars: int, a1: int, rho: int, rest: MonomialPoly) -> MonomialPoly:
    """rho^2 [a1 rho^2 - 4 rho^3 + (2/3 rho - a1) S^2 - (1/3) S^3] with S = ``rest``."""
    A, P = _var(nvars, a1), _var(nvars, rho)
    S2 = rest * rest
    S3 = S2 * rest
    inner = _poly_sum(
        nvars,
        [
            A * P * P,
            (P * P * P).scale(-4),
            (_poly_sum(nvars, [P.scale(Fraction(2, 3)), A.scale(-1)])) * S2,
            S3.scale(Fraction(-1, 3)),
        ],
    )
    return P * P * inner


def f_poly(ell: int, choice: FamilyChoice | str = FamilyChoice.ALPHA, homogeneous: bool = False) -> MonomialPoly:
    """f(a_1..a_l, rho) on variables (a_1..a_l, rho).

    With ``homogeneous=False`` the rho correction uses the literal ``1 - a_1``;
    otherwise ``a_2 + ... + a_l``, which agrees on the simplex.  Families
    other than ALPHA have no rho correction: their f is their g.
    """
    choice = parse_family(choice)
    nvars = ell + 1
    base = family_g_poly(choice, ell, range(ell), nvars)
    if choice is not FamilyChoice.ALPHA:
        return base
    if homogeneous:
        rest = _poly_sum(nvars, [_var(nvars, j) for j in range(1, ell)])
    else:
        rest = _poly_sum(nvars, [_const(nvars, 1), _var(nvars, 0, -1)])
    return base + rho_block(nvars, 0, ell, rest)


@lru_cache(maxsize=64)
def F_poly(choice: FamilyChoice | str, ell: int, q: int) -> MonomialPoly:
    """F(a_1..a_{lq}, rho): f on block 1, g on the other blocks, plus cross-block transversals."""
    choice = parse_family(choice)
    n = ell * q
    nvars = n + 1
    blocks = [list(range(p * ell, (p + 1) * ell)) for p in range(q)]
    pieces = []
    first = f_poly(ell, choice, homogeneous=True)
    # re-embed f's variables (a_1..a_l, rho) into F's layout
    remap = {i: i for i in range(ell)}
    remap[ell] = n
    pieces.append(MonomialPoly.from_terms(nvars, ((c, [remap[i] for i in k]) for k, c in first.coeffs.items())))
    for blk in blocks[1:]:
        pieces.append(family_g_poly(choice, ell, blk, nvars))
    pieces.append(elementary(range(n), 5, nvars))
    for blk in blocks:
        pieces.append(elementary(blk, 5, nvars).scale(-1))
    return _poly_sum(nvars, pieces)


@lru_cache(maxsize=64)
def H_poly(choice: FamilyChoice | str, ell: int, q: int) -> MonomialPoly:
    """H(b_1..b_q), homogenized: the factor (1 - l b_p) becomes l * sum_{p' != p} b_p'.

    On the constraint set sum b = 1/l this is identical to the literal form.
    """
    choice = parse_family(choice)
    N = N_of_ell(choice, ell)
    C = math.comb
    L = ell
    terms: list[tuple[Fraction, tuple[int, ...]]] = []
    B = range(q)
    for p in B:
        terms.append((N / 120 * L**5, (p,) * 5))
        for o in B:
            if o != p:
                terms.append((Fraction(C(L, 4) * L), (p,) * 4 + (o,)))
                terms.append((Fraction(C(L, 3) * C(L, 2)), (p,) * 3 + (o,) * 2))
        for o1, o2 in itertools.combinations(B, 2):
            if p not in (o1, o2):
                terms.append((Fraction(C(L, 3) * L**2), (p,) * 3 + (o1, o2)))
        for o1, o2, o3 in itertools.combinations(B, 3):
            if p not in (o1, o2, o3):
                terms.append((Fraction(C(L, 2) * L**3), (p, p, o1, o2, o3)))
    for p1, p2 in itertools.combinations(B, 2):
        for o in B:
            if o not in (p1, p2):
                terms.append((Fraction(C(L, 2) ** 2 * L), (p1, p1, p2, p2, o)))
    for c in itertools.combinations(B, 5):
        terms.append((Fraction(L**5), c))
    return MonomialPoly.from_terms(q, terms)


def with_rho_fraction(poly: MonomialPoly, a1: int, rho: int) -> MonomialPoly:
    """Substitute rho = u * a1 / 4, so the new variable ``u`` (same index) ranges over [0, 1]."""
    repl = MonomialPoly.from_terms(poly.nvars, [(Fraction(1, 4), (a1, rho))])
    # the replacement mentions ``rho`` itself, now read as u; substitute handles one pass
    return poly.substitute(rho, repl)


# --- closed forms (used as cross-checks) ------------------------------------


def g_closed(c: Sequence[float]) -> float:
    s = sum(c)
    return s**5 / 120 - s * sum(x**4 for x in c) / 24 + sum(x**5 for x in c) / 30


def h_closed(a: Sequence[float]) -> float:
    return (sum(a) ** 4 - sum(x**4 for x in a)) / 24


def _num(x, p: int, q: int = 1):
    """p/q as an exact Fraction when ``x`` is exact, else as a float."""
    return Fraction(p, q) if isinstance(x, (Fraction, int)) else p / q


def rho_block_value(a1, rho):
    """Scalar rho-block with the literal ``1 - a1``; accepts Fractions, floats or arrays."""
    s = 1 - a1
    return rho**2 * (a1 * rho**2 - 4 * rho**3 + (_num(a1, 2, 3) * rho - a1) * s**2 - _num(a1, 1, 3) * s**3)


def rho_cubic(a1):
    """-21 a1^3 + 32 a1^2 + 8 a1 - 16."""
    return -21 * a1**3 + 32 * a1**2 + 8 * a1 - 16


def f_of_a1(ell: int, a1):
    """The single-variable bound used for a_1 >= 11/15."""
    m = ell - 1
    k5 = 1 - _num(a1, 5, m**3) + _num(a1, 4, m**4)
    k4 = 1 - _num(a1, 1, m**3)
    b = 1 - a1
    return k5 * _num(a1, 1, 120) * b**5 + k4 * _num(a1, 1, 24) * b**4 * a1 + a1**2 * b**2 * _num(a1, 1, 12) + _num(a1, 1, 1728)


def f_of_a1_derivative(ell: int, a1):
    """Closed-form derivative of :func:`f_of_a1`."""
    m = ell - 1
    b = 1 - a1
    return (
        (_num(a1, 1, m**3) - _num(a1, 1, m**4)) * _num(a1, 1, 6) * b**4
        + _num(a1, 1, 6 * m**3) * b**3 * a1
        - a1**3 * b * _num(a1, 1, 6)
    )
