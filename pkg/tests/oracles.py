"""Independent reference implementations used by the tests.

Nothing here imports the package's polynomial builders: every formula is
written out from the definitions so that agreement is a real cross-check.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Sequence

C = math.comb


# --- Lagrangians with known closed forms -----------------------------------


def single_edge_lagrangian(r: int) -> Fraction:
    return Fraction(1, r**r)


def complete_lagrangian(r: int, n: int) -> Fraction:
    return Fraction(C(n, r), n**r)


def clique_number(n: int, edges: Sequence[tuple[int, int]]) -> int:
    adj = {frozenset(e) for e in edges}
    best = 1 if n else 0
    for k in range(2, n + 1):
        if any(all(frozenset(p) in adj for p in itertools.combinations(s, 2)) for s in itertools.combinations(range(n), k)):
            best = k
    return best


def motzkin_straus(n: int, edges: Sequence[tuple[int, int]]) -> Fraction:
    """Lagrangian of a 2-graph: (1 - 1/omega) / 2."""
    if not edges:
        return Fraction(0)
    w = clique_number(n, edges)
    return (1 - Fraction(1, w)) / 2


# --- edge counts as printed ------------------------------------------------


def alpha_edge_count(ell: int, t: int) -> int:
    return (
        C(ell, 5) * t**5
        + ell * C(ell - 1, 3) * C(t, 2) * t**3
        + C(ell, 2) * (ell - 2) * C(t, 2) * C(t, 2) * t
        + ell * C(ell - 1, 2) * C(t, 3) * t**2
        + ell * (ell - 1) * C(t, 3) * C(t, 2)
    )


def complement_edge_count(ell: int, t: int) -> int:
    return C(ell * t, 5) - ell * C(t, 5)


def n12_edge_count(t: int) -> int:
    return t**5 + 3 * C(t, 2) * t**3


def n96_edge_count(t: int) -> int:
    return (C(3 * t, 3) - 3 * C(t, 3)) * t**2


def n252_edge_count(t: int) -> int:
    return (C(4 * t, 4) - 4 * C(t, 4)) * t


# --- bounding functions written from their definitions ---------------------


def power_sum(a, k):
    return sum(x**k for x in a)


def e5(a):
    """Fifth elementary symmetric polynomial via Newton's identities."""
    p = [None] + [power_sum(a, k) for k in range(1, 6)]
    e = [1]
    for k in range(1, 6):
        e.append(sum((-1) ** (i - 1) * e[k - i] * p[i] for i in range(1, k + 1)) / k)
    return e[5]


def g_literal(c):
    s = sum(c)
    return s**5 / 120 - s * power_sum(c, 4) / 24 + power_sum(c, 5) / 30


def h_literal(a):
    return (sum(a) ** 4 - power_sum(a, 4)) / 24


def complement_literal(a):
    return (sum(a) ** 5 - power_sum(a, 5)) / 120


def n12_literal(a):
    a1, a2, a3, a4, a5 = a
    return a4 * a5 * (a1 * a2 * a3 + a1**2 * a2 / 2 + a2**2 * a3 / 2 + a3**2 * a1 / 2)


def n96_literal(a):
    s = a[0] + a[1] + a[2]
    return (s**3 - power_sum(a[:3], 3)) / 6 * a[3] * a[4]


def n252_literal(a):
    s = sum(a[:4])
    return (s**4 - power_sum(a[:4], 4)) / 24 * a[4]


FAMILY_LITERAL = {
    "alpha": g_literal,
    "complement": complement_literal,
    "n12_125": n12_literal,
    "n96_625": n96_literal,
    "n252_625": n252_literal,
}


def rho_block_literal(a1, rho, s):
    third = Fraction(1, 3) if isinstance(a1, Fraction) else 1 / 3
    return rho**2 * (a1 * rho**2 - 4 * rho**3 + (2 * third * rho - a1) * s**2 - third * s**3)


def f_literal(a, rho, homogeneous=False):
    s = sum(a[1:]) if homogeneous else 1 - a[0]
    return g_literal(a) + rho_block_literal(a[0], rho, s)


def F_literal(family: str, ell: int, a, rho):
    """Block 1 carries f (or the family polynomial), the rest the family polynomial,
    plus every transversal 5-set meeting at least two blocks."""
    q = len(a) // ell
    blocks = [list(a[p * ell : (p + 1) * ell]) for p in range(q)]
    fam = FAMILY_LITERAL[family]
    first = f_literal(blocks[0], rho, homogeneous=True) if family == "alpha" else fam(blocks[0])
    return first + sum(fam(b) for b in blocks[1:]) + e5(list(a)) - sum(e5(b) for b in blocks)


def H_literal(family: str, ell: int, b):
    """H(b) is F at the block-uniform point a = (b_1 x l, ..., b_q x l) with rho = 0."""
    a = [x for x in b for _ in range(ell)]
    return F_literal(family, ell, a, 0)


# --- non-jump values ---------------------------------------------------------


def N_base(family: str, ell: int) -> Fraction:
    if family == "alpha":
        return 1 - Fraction(5, ell**3) + Fraction(4, ell**4)
    if family == "complement":
        return 1 - Fraction(1, ell**4)
    return {"n12_125": Fraction(12, 125), "n96_625": Fraction(96, 625), "n252_625": Fraction(252, 625)}[family]


def N_layered(family: str, ell: int, q: int) -> Fraction:
    L, q = Fraction(ell), Fraction(q)
    return (
        1 - 10 / (L * q) + 35 / (L**2 * q**2) - 50 / (L**3 * q**3)
        + 10 / (L * q**4) - 35 / (L**2 * q**4) + 50 / (L**3 * q**4) - 1 / q**4
        + N_base(family, ell) / q**4
    )


def stated_value(family: str, ell: int, q: int) -> Fraction:
    """The non-jump values in their expanded published form, family by family."""
    L, q = Fraction(ell), Fraction(q)
    head = 1 - 10 / (L * q) + 35 / (L**2 * q**2) - 50 / (L**3 * q**3)
    if family == "alpha":
        return head + 4 / (L**4 * q**4) + 10 / (L * q**4) - 35 / (L**2 * q**4) + 45 / (L**3 * q**4)
    if family == "complement":
        return head + 10 / (L * q**4) - 35 / (L**2 * q**4) + 50 / (L**3 * q**4) - 1 / (L**4 * q**4)
    tail = {"n12_125": Fraction(12, 125), "n96_625": Fraction(96, 625), "n252_625": Fraction(252, 625)}[family]
    return 1 - 2 / q + Fraction(7, 5) / q**2 - Fraction(2, 5) / q**3 + tail / q**4
