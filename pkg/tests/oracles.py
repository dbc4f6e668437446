"""Independent reference computations used by the test suite.

Nothing here imports the engine's internals; each oracle works from first
principles (brute-force enumeration, naive sign counting, closed formulas).
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations
from math import comb

from supergeom import GrassmannAlgebra, SuperMatrix, SuperPoly, SuperRing


def inversion_sign(seq) -> int:
    """Sign of the permutation sorting ``seq`` (no repeats), by counting inversions."""
    inv = sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])
    return -1 if inv % 2 else 1


def naive_monomial_product(u, v):
    """(sign, monomial) of the product of two super monomials, or None if zero.

    Monomials are ((even exps), (odd indices ascending)).
    """
    (ea, oa), (eb, ob) = u, v
    if set(oa) & set(ob):
        return None
    joined = list(oa) + list(ob)
    return inversion_sign(joined), (tuple(x + y for x, y in zip(ea, eb)), tuple(sorted(joined)))


def even_exponents(nvars: int, d: int):
    if nvars == 0:
        if d == 0:
            yield ()
        return
    if nvars == 1:
        yield (d,)
        return
    for a in range(d, -1, -1):
        for rest in even_exponents(nvars - 1, d - a):
            yield (a,) + rest


def super_monomials(m: int, n: int, d: int):
    """All monomials of B(m,n) of Z-degree d."""
    out = []
    for k in range(0, min(n, d) + 1):
        for odd in combinations(range(1, n + 1), k):
            for ev in even_exponents(m + 1, d - k):
                out.append((ev, odd))
    return out


def super_divides(g, mono) -> bool:
    (ge, go), (me, mo) = g, mono
    return all(a <= b for a, b in zip(ge, me)) and set(go) <= set(mo)


def quotient_dims(m: int, n: int, gens, d: int) -> tuple[int, int]:
    """(even, odd) dimension of B(m,n)/(monomial gens) in degree d by enumeration."""
    even = odd = 0
    for mono in super_monomials(m, n, d):
        if any(super_divides(g, mono) for g in gens):
            continue
        if len(mono[1]) % 2:
            odd += 1
        else:
            even += 1
    return even, odd


def h_closed(m: int, n: int, r: int) -> tuple[int, int]:
    if r < 0:
        return (0, 0)
    ev = sum(comb(m + r - p, m) * comb(n, p) for p in range(0, min(n, r) + 1, 2))
    od = sum(comb(m + r - p, m) * comb(n, p) for p in range(1, min(n, r) + 1, 2))
    return ev, od


def series_mul(a, b, order):
    out = [0] * (order + 1)
    for i, x in enumerate(a[: order + 1]):
        if x:
            for j, y in enumerate(b[: order + 1 - i]):
                out[i + j] += x * y
    return out


def series_pow_one_minus_t(e: int, order: int):
    """(1 - t)^e as a truncated series, e any integer."""
    if e >= 0:
        return [(-1) ** k * comb(e, k) if k <= e else 0 for k in range(order + 1)]
    # (1 - t)^{-k} = sum C(k + j - 1, j) t^j
    k = -e
    return [comb(k + j - 1, j) for j in range(order + 1)]


def bott_classical(m: int, i: int, d: int) -> int:
    """h^i(P^m, O(d)); on a point both clauses apply."""
    out = 0
    if i == 0 and d >= 0:
        out += comb(m + d, m)
    if i == m and d <= -m - 1:
        out += comb(-d - 1, m)
    return out


# -- random Grassmann data ------------------------------------------------------


def random_element(rng: random.Random, ring: SuperRing, parity: int, density=0.6, body=None):
    """Random element of a Grassmann algebra ``ring`` of the given parity."""
    terms = {}
    n = ring.n_odd
    for k in range(parity, n + 1, 2):
        for odd in combinations(range(1, n + 1), k):
            if k == 0:
                continue
            if rng.random() < density:
                terms[((), odd)] = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
    if parity == 0:
        c = body if body is not None else Fraction(rng.randint(-3, 3), rng.randint(1, 2))
        terms[((), ())] = c
    return SuperPoly(ring, terms)


def random_invertible_scalar(rng: random.Random, k: int):
    while True:
        M = [[Fraction(rng.randint(-3, 3)) for _ in range(k)] for _ in range(k)]
        if k == 0 or _det(M) != 0:
            return M


def _det(M):
    if not M:
        return Fraction(1)
    if len(M) == 1:
        return M[0][0]
    return sum((-1) ** j * M[0][j] * _det([row[:j] + row[j + 1:] for row in M[1:]]) for j in range(len(M)))


def random_supermatrix(rng: random.Random, ring: SuperRing, p: int, q: int) -> SuperMatrix:
    """Invertible even supermatrix: scalar invertible bodies plus nilpotent noise."""
    A0 = random_invertible_scalar(rng, p)
    D0 = random_invertible_scalar(rng, q)
    A = [[random_element(rng, ring, 0, 0.3, A0[i][j]) for j in range(p)] for i in range(p)]
    D = [[random_element(rng, ring, 0, 0.3, D0[i][j]) for j in range(q)] for i in range(q)]
    B = [[random_element(rng, ring, 1, 0.5) for _ in range(q)] for _ in range(p)]
    C = [[random_element(rng, ring, 1, 0.5) for _ in range(p)] for _ in range(q)]
    return SuperMatrix.from_blocks(A, B, C, D, ring)


def random_block_unit(rng: random.Random, A: GrassmannAlgebra, odd_block: bool):
    """Random even element of A in the even-geometric block (with a nonzero
    body) or, with ``odd_block``, a nilpotent element of the odd-geometric block."""
    terms = {}
    n = len(A.names)
    for k in range(0 if not odd_block else 2, n + 1, 2):
        for odd in combinations(range(1, n + 1), k):
            g = sum(1 for j in odd if A.tags[j - 1] == "geometric")
            if (g % 2 == 1) != odd_block:
                continue
            if k == 0:
                terms[((), odd)] = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 3))
            elif rng.random() < 0.6:
                terms[((), odd)] = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
    return SuperPoly(A.ring, terms)


# -- Young diagrams -------------------------------------------------------------


def young_diagrams(k: int):
    """All Young diagrams of size k as frozensets of cells (row, col)."""
    def parts(n, largest):
        if n == 0:
            yield ()
            return
        for first in range(min(n, largest), 0, -1):
            for rest in parts(n - first, first):
                yield (first,) + rest

    for lam in parts(k, k):
        yield frozenset((i, j) for i, row in enumerate(lam) for j in range(row))


def nested_brute_force(p: int, q: int) -> int:
    """Pairs I0 in I1 of monomial ideals with colengths (p, q): the standard
    monomial diagram of I1 must sit inside that of I0."""
    return sum(1 for big in young_diagrams(p) for small in young_diagrams(q) if small <= big)


# -- module corpus --------------------------------------------------------------


def module_corpus():
    """(label, presentation) pairs of bihomogeneous B(m,n)-modules."""
    from supergeom import BModulePresentation, polys

    out = [
        ("O_P11", BModulePresentation.structure_sheaf(1, 1)),
        ("O_P12", BModulePresentation.structure_sheaf(1, 2)),
        ("O_P21", BModulePresentation.structure_sheaf(2, 1)),
    ]
    R = SuperRing.B(1, 1)
    x0, x1, t1 = polys(R, "x0 x1 th1")
    out.append(("P11/th1", BModulePresentation.quotient(1, 1, [t1])))
    out.append(("P11/x0th1", BModulePresentation.quotient(1, 1, [x0 * t1])))
    out.append(("P11/x0^2", BModulePresentation.quotient(1, 1, [x0 ** 2])))
    R = SuperRing.B(1, 2)
    x0, x1, t1, t2 = polys(R, "x0 x1 th1 th2")
    out.append(("P12/th1th2", BModulePresentation.quotient(1, 2, [t1 * t2])))
    out.append(("P12/x0th1,x1th2", BModulePresentation.quotient(1, 2, [x0 * t1, x1 * t2])))
    out.append(("P12/x0x1,th1", BModulePresentation.quotient(1, 2, [x0 * x1, t1])))
    out.append(("P12/mixed", BModulePresentation.quotient(1, 2, [x0 * t1 - x1 * t2, x1 ** 2])))
    R = SuperRing.B(2, 1)
    x0, x1, x2, t1 = polys(R, "x0 x1 x2 th1")
    out.append(("P21/x0,x1th1", BModulePresentation.quotient(2, 1, [x0, x1 * t1])))
    out.append(("P21/x0x1x2", BModulePresentation.quotient(2, 1, [x0 * x1 * x2])))
    out.append(("O_P02", BModulePresentation.structure_sheaf(0, 2)))
    return out
