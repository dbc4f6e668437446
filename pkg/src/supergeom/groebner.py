"""Groebner bases, syzygies, saturation and minimal free resolutions over S.

Submodules of a free module S^r are handled as sparse vectors
``{(position, exponent_tuple): Fraction}``.  The term order is
position-over-term: a smaller position index is larger, ties broken by the
monomial order (degrevlex by default).  With that order a Groebner basis
eliminates low positions first, which is what the syzygy, colon and
filtration computations rely on.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

from .errors import PreconditionError
from .expansion import FrozenVector, GradedSModule, Mono, Term, Vector, freeze
from .linalg import Echelon
from .superalgebra import Parity

# ---------------------------------------------------------------------------
# monomials and orders
# ---------------------------------------------------------------------------


def _degrevlex_key(mono: Mono):
    return (sum(mono),) + tuple(-e for e in reversed(mono))


def _lex_key(mono: Mono):
    return mono


@dataclass(frozen=True)
class MonomialOrder:
    kind: str = "degrevlex"

    def __post_init__(self):
        if self.kind not in ("degrevlex", "lex"):
            raise ValueError(f"unknown monomial order {self.kind!r}")

    @property
    def key(self):
        return _degrevlex_key if self.kind == "degrevlex" else _lex_key

    def term_key(self, term: Term):
        pos, mono = term
        return (-pos, self.key(mono))


DEGREVLEX = MonomialOrder("degrevlex")
LEX = MonomialOrder("lex")


def mono_divides(a: Mono, b: Mono) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a: Mono, b: Mono) -> Mono:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_div(a: Mono, b: Mono) -> Mono:
    return tuple(x - y for x, y in zip(a, b))


def mono_mul(a: Mono, b: Mono) -> Mono:
    return tuple(x + y for x, y in zip(a, b))


@lru_cache(maxsize=None)
def monomials_of_degree(nvars: int, d: int) -> tuple[Mono, ...]:
    """All exponent vectors of total degree d in nvars variables (empty if d < 0)."""
    if d < 0 or nvars <= 0:
        return ((),) if (d == 0 and nvars == 0) else ()
    out = []
    for combo in combinations_with_replacement(range(nvars), d):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return tuple(out)


# ---------------------------------------------------------------------------
# vector arithmetic
# ---------------------------------------------------------------------------


def vec_axpy(h: Vector, c: Fraction, shift: Mono, g: Vector) -> None:
    """In place h -= c * x^shift * g."""
    for (pos, mono), v in g.items():
        key = (pos, mono_mul(mono, shift))
        s = h.get(key, 0) - c * v
        if s:
            h[key] = s
        else:
            h.pop(key, None)


def vec_scale(g: Vector, c: Fraction) -> Vector:
    return {k: v * c for k, v in g.items()}


def vec_mul_mono(g: Vector, mono: Mono, c: Fraction = Fraction(1)) -> Vector:
    return {(pos, mono_mul(m, mono)): v * c for (pos, m), v in g.items()}


def vec_degree(g: Vector, shifts: Sequence[int] | None) -> int:
    (pos, mono) = next(iter(g))
    return sum(mono) + (shifts[pos] if shifts else 0)


def vec_is_homogeneous(g: Vector, shifts: Sequence[int]) -> bool:
    return len({sum(mono) + shifts[pos] for pos, mono in g}) <= 1


# ---------------------------------------------------------------------------
# Groebner bases
# ---------------------------------------------------------------------------


class GroebnerBasis:
    """A (reduced, monic) Groebner basis of a submodule of S^rank."""

    def __init__(self, nvars: int, elements: list[Vector], order: MonomialOrder = DEGREVLEX):
        self.nvars = nvars
        self.order = order
        tk = order.term_key
        self.elements = elements
        self.leads: list[Term] = [max(g, key=tk) for g in elements]
        self._by_pos: dict[int, list[int]] = {}
        for i, (pos, _) in enumerate(self.leads):
            self._by_pos.setdefault(pos, []).append(i)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def find_reducer(self, term: Term) -> int | None:
        pos, mono = term
        for i in self._by_pos.get(pos, ()):
            if mono_divides(self.leads[i][1], mono):
                return i
        return None

    def normal_form(self, f: Vector) -> Vector:
        return _reduce(dict(f), self.elements, self.leads, self._by_pos, self.order.term_key)

    def contains(self, f: Vector) -> bool:
        return not self.normal_form(f)

    def lead_monomials(self, pos: int) -> list[Mono]:
        return [self.leads[i][1] for i in self._by_pos.get(pos, ())]

    def is_standard(self, term: Term) -> bool:
        return self.find_reducer(term) is None


def _reduce(h: Vector, elems, leads, by_pos, tk) -> Vector:
    """Full reduction of h (consumed) modulo the given elements."""
    rem: Vector = {}
    while h:
        t = max(h, key=tk)
        c = h[t]
        pos, mono = t
        for i in by_pos.get(pos, ()):
            lm = leads[i][1]
            if mono_divides(lm, mono):
                g = elems[i]
                vec_axpy(h, c / g[leads[i]], mono_div(mono, lm), g)
                break
        else:
            rem[t] = c
            del h[t]
    return rem


def groebner_basis(
    gens: Iterable[Vector],
    nvars: int,
    order: MonomialOrder = DEGREVLEX,
    shifts: Sequence[int] | None = None,
) -> GroebnerBasis:
    """Reduced Groebner basis of the submodule generated by ``gens`` (Buchberger).

    ``shifts`` (generator degrees of the ambient free module) only steer the
    pair selection; correctness does not depend on them.
    """
    tk = order.term_key
    elems: list[Vector] = []
    leads: list[Term] = []
    by_pos: dict[int, list[int]] = {}
    pairs: list = []
    pending: set[tuple[int, int]] = set()
    counter = 0

    def sugar(term: Term) -> int:
        pos, mono = term
        return sum(mono) + (shifts[pos] if shifts else 0)

    def insert(g: Vector):
        nonlocal counter
        lt = max(g, key=tk)
        g = vec_scale(g, 1 / g[lt])
        k = len(elems)
        for i in by_pos.get(lt[0], ()):
            l = mono_lcm(leads[i][1], lt[1])
            heapq.heappush(pairs, (sugar((lt[0], l)), counter, i, k))
            counter += 1
            pending.add((i, k))
        elems.append(g)
        leads.append(lt)
        by_pos.setdefault(lt[0], []).append(k)

    initial = [dict(g) for g in gens if g]
    initial.sort(key=lambda g: sugar(max(g, key=tk)))
    for g in initial:
        r = _reduce(g, elems, leads, by_pos, tk)
        if r:
            insert(r)

    while pairs:
        _, _, i, j = heapq.heappop(pairs)
        pending.discard((i, j))
        pos = leads[i][0]
        l = mono_lcm(leads[i][1], leads[j][1])
        # Buchberger's chain criterion
        skip = False
        for k in by_pos[pos]:
            if k == i or k == j or not mono_divides(leads[k][1], l):
                continue
            if (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending:
                skip = True
                break
        if skip:
            continue
        s = vec_mul_mono(elems[i], mono_div(l, leads[i][1]))
        vec_axpy(s, Fraction(1), mono_div(l, leads[j][1]), elems[j])
        if not s:
            continue
        r = _reduce(s, elems, leads, by_pos, tk)
        if r:
            insert(r)

    # minimalize, then interreduce
    keep: list[int] = []
    for i, li in enumerate(leads):
        if any(lj[0] == li[0] and lj != li and mono_divides(lj[1], li[1]) for lj in leads):
            continue
        if any(leads[j] == li for j in keep):
            continue
        keep.append(i)
    basis = [elems[i] for i in keep]
    bleads = [leads[i] for i in keep]
    reduced = []
    for idx, g in enumerate(basis):
        others = [basis[k] for k in range(len(basis)) if k != idx]
        oleads = [bleads[k] for k in range(len(basis)) if k != idx]
        obp: dict[int, list[int]] = {}
        for k, (p, _) in enumerate(oleads):
            obp.setdefault(p, []).append(k)
        lt = bleads[idx]
        tail = {t: c for t, c in g.items() if t != lt}
        red = _reduce(tail, others, oleads, obp, tk)
        red[lt] = Fraction(1)
        reduced.append(red)
    reduced.sort(key=lambda g: tk(max(g, key=tk)), reverse=True)
    return GroebnerBasis(nvars, reduced, order)


def s_vectors_reduce_to_zero(G: GroebnerBasis) -> bool:
    """Buchberger's criterion, checked pair by pair without shortcuts."""
    els, leads = G.elements, G.leads
    for i in range(len(els)):
        for j in range(i + 1, len(els)):
            if leads[i][0] != leads[j][0]:
                continue
            l = mono_lcm(leads[i][1], leads[j][1])
            s = vec_mul_mono(els[i], mono_div(l, leads[i][1]), 1 / els[i][leads[i]])
            vec_axpy(s, 1 / els[j][leads[j]], mono_div(l, leads[j][1]), els[j])
            if G.normal_form(s):
                return False
    return True


def normal_form(f: Vector, G: GroebnerBasis) -> Vector:
    return G.normal_form(f)


# ---------------------------------------------------------------------------
# syzygies, colons, intersections
# ---------------------------------------------------------------------------


def _project(g: Vector, offset: int) -> Vector:
    return {(pos - offset, mono): c for (pos, mono), c in g.items()}


def eliminate_below(G: GroebnerBasis, offset: int) -> list[Vector]:
    """Elements of G supported on positions >= offset, shifted down by offset."""
    out = []
    for g, (pos, _) in zip(G.elements, G.leads):
        if pos >= offset:
            out.append(_project(g, offset))
    return out


def syzygies(columns: Sequence[Vector], rank: int, nvars: int, shifts: Sequence[int] | None = None) -> list[Vector]:
    """Generators of the module of relations among ``columns`` (vectors in S^rank).

    Computed as the part of a POT Groebner basis of {(g_i, e_i)} living in
    the second summand.
    """
    big = []
    for i, g in enumerate(columns):
        v = dict(g)
        v[(rank + i, (0,) * nvars)] = Fraction(1)
        big.append(v)
    big_shifts = None
    if shifts is not None:
        col_degs = [vec_degree(g, shifts) if g else 0 for g in columns]
        big_shifts = list(shifts) + col_degs
    G = groebner_basis(big, nvars, DEGREVLEX, big_shifts)
    return eliminate_below(G, rank)


def colon_by_variable(gens: Sequence[Vector], rank: int, nvars: int, var: int, shifts=None) -> list[Vector]:
    """Generators of N : x_var for N = <gens> in S^rank."""
    unit = [0] * nvars
    unit[var] = 1
    xv = tuple(unit)
    zero = (0,) * nvars
    big = []
    for j in range(rank):
        big.append({(j, xv): Fraction(1), (rank + j, zero): Fraction(1)})
    for g in gens:
        big.append(dict(g))
    big_shifts = None if shifts is None else [s - 1 for s in shifts] + list(shifts)
    # first summand carries x_var * e_j, so its degree shift is irrelevant to correctness
    G = groebner_basis(big, nvars, DEGREVLEX, big_shifts)
    return eliminate_below(G, rank)


def intersect(U: Sequence[Vector], V: Sequence[Vector], rank: int, nvars: int) -> list[Vector]:
    """Generators of <U> cap <V> inside S^rank."""
    big = []
    for u in U:
        v = dict(u)
        for (pos, mono), c in u.items():
            v[(pos + rank, mono)] = c
        big.append(v)
    for w in V:
        big.append(dict(w))
    G = groebner_basis(big, nvars, DEGREVLEX)
    return eliminate_below(G, rank)


def colon_by_maximal_ideal(gens: Sequence[Vector], rank: int, nvars: int) -> list[Vector]:
    """Generators of N : (x0, ..., xm)."""
    result = None
    for v in range(nvars):
        cv = colon_by_variable(gens, rank, nvars, v)
        result = cv if result is None else intersect(result, cv, rank, nvars)
    return result if result is not None else list(gens)


# ---------------------------------------------------------------------------
# module-level operations
# ---------------------------------------------------------------------------


@lru_cache(maxsize=512)
def module_gb(M: GradedSModule, order: MonomialOrder = DEGREVLEX) -> GroebnerBasis:
    shifts = [d for d, _ in M.generators]
    return groebner_basis(M.relation_dicts(), M.nvars, order, shifts)


@lru_cache(maxsize=512)
def saturate(M: GradedSModule) -> GradedSModule:
    """M / H^0_m(M): the relation module replaced by its saturation N : m^infinity.

    Iterates the colon by the irrelevant ideal until it stabilises.
    """
    nv, r = M.nvars, M.rank
    if r == 0:
        return M
    G = module_gb(M)
    while True:
        bigger = colon_by_maximal_ideal(list(G.elements), r, nv)
        if all(G.contains(v) for v in bigger):
            break
        G = groebner_basis(list(G.elements) + bigger, nv, DEGREVLEX, [d for d, _ in M.generators])
    return GradedSModule.create(M.m, M.generators, list(G.elements))


def standard_monomial_count(M: GradedSModule, degree: int, parity: Parity | None = None) -> int:
    """dim_k of the degree piece of M (restricted to one generator parity if given)."""
    G = module_gb(M)
    total = 0
    for j, (d, p) in enumerate(M.generators):
        if parity is not None and p != parity:
            continue
        leads = G.lead_monomials(j)
        for mono in monomials_of_degree(M.nvars, degree - d):
            if not any(mono_divides(l, mono) for l in leads):
                total += 1
    return total


# ---------------------------------------------------------------------------
# minimal free resolutions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Resolution:
    """F_0 <- F_1 <- ... <- F_L.

    ``terms[i]`` lists the (degree, parity) of the generators of F_i and
    ``maps[i]`` (i >= 1) holds the columns of d_i : F_i -> F_{i-1}, one
    sparse vector per generator of F_i.
    """

    m: int
    terms: tuple[tuple[tuple[int, Parity], ...], ...]
    maps: tuple[tuple[FrozenVector, ...], ...]
    minimal: bool = True

    @property
    def length(self) -> int:
        return len(self.terms) - 1 if any(self.terms) else 0

    def column_dicts(self, i: int) -> list[Vector]:
        return [dict(c) for c in self.maps[i]]


def minimal_generators(vectors: Sequence[Vector], shifts: Sequence[int], nvars: int) -> list[Vector]:
    """A minimal homogeneous generating set of the submodule spanned by ``vectors``."""
    vecs = [dict(v) for v in vectors if v]
    by_deg: dict[int, list[Vector]] = {}
    for v in vecs:
        by_deg.setdefault(vec_degree(v, shifts), []).append(v)
    chosen: list[Vector] = []
    G: GroebnerBasis | None = None
    for d in sorted(by_deg):
        ech = Echelon()
        colmap: dict[Term, int] = {}
        new = []
        for v in by_deg[d]:
            nf = G.normal_form(v) if G is not None else dict(v)
            if not nf:
                continue
            row = {}
            for t, c in nf.items():
                row[colmap.setdefault(t, len(colmap))] = c
            if ech.add(row):
                new.append(v)
        if new:
            chosen.extend(new)
            G = groebner_basis(chosen, nvars, DEGREVLEX, shifts)
    return chosen


def _prune(gens: list[tuple[int, Parity]], rels: list[Vector], nvars: int):
    """Remove generators killed by relations with a unit coefficient."""
    zero = (0,) * nvars
    gens = list(gens)
    rels = [dict(r) for r in rels]
    while True:
        hit = None
        for ri, r in enumerate(rels):
            for (pos, mono), c in r.items():
                if mono == zero:
                    hit = (ri, pos, c)
                    break
            if hit:
                break
        if hit is None:
            break
        ri, pos, c = hit
        r = rels.pop(ri)
        new_rels = []
        for s in rels:
            comp = {mono: v for (p, mono), v in s.items() if p == pos}
            s = dict(s)
            for mono, v in comp.items():
                vec_axpy(s, v / c, mono, r)
            if s:
                new_rels.append(s)
        # drop position pos and renumber
        rels = [{((p if p < pos else p - 1), mono): v for (p, mono), v in s.items()} for s in new_rels]
        gens.pop(pos)
    return gens, rels


def minimal_presentation(M: GradedSModule) -> GradedSModule:
    shifts = [d for d, _ in M.generators]
    rels = minimal_generators(M.relation_dicts(), shifts, M.nvars)
    gens, rels = _prune(list(M.generators), rels, M.nvars)
    shifts = [d for d, _ in gens]
    rels = minimal_generators(rels, shifts, M.nvars)
    return GradedSModule.create(M.m, gens, rels)


@lru_cache(maxsize=512)
def free_resolution(M: GradedSModule) -> Resolution:
    """Minimal graded free resolution (Schreyer-style syzygies, then minimization)."""
    nv = M.nvars
    P = minimal_presentation(M)
    terms = [tuple(P.generators)]
    maps: list[tuple[FrozenVector, ...]] = [()]
    cols = P.relation_dicts()
    prev = list(P.generators)
    while cols:
        shifts = [d for d, _ in prev]
        level = []
        for c in cols:
            pos = next(iter(c))[0]
            level.append((vec_degree(c, shifts), prev[pos][1]))
        terms.append(tuple(level))
        maps.append(tuple(freeze(c) for c in cols))
        if len(terms) - 1 > nv:
            raise PreconditionError("resolution longer than the Hilbert syzygy bound")
        syz = syzygies(cols, len(prev), nv, shifts)
        cols = minimal_generators(syz, [d for d, _ in level], nv)
        prev = level
    return Resolution(M.m, tuple(terms), tuple(maps), True)


def compose_is_zero(R: Resolution) -> bool:
    """d_i o d_{i+1} = 0 for every i, checked symbolically."""
    for i in range(1, len(R.maps) - 1):
        d_i = R.column_dicts(i)
        for col in R.column_dicts(i + 1):
            acc: Vector = {}
            for (pos, mono), c in col.items():
                vec_axpy(acc, -c, mono, d_i[pos])
            if acc:
                return False
    return True


def _degree_matrix(columns: Sequence[Vector], src: Sequence[tuple[int, Parity]], dst_shifts: Sequence[int], nvars: int, degree: int):
    """Matrix (as rows over the source basis) of a map of free modules in one degree."""
    rows = []
    dst_index: dict[Term, int] = {}
    for j, (d, _) in enumerate(src):
        for mono in monomials_of_degree(nvars, degree - d):
            row = {}
            for (pos, m2), c in columns[j].items():
                key = (pos, mono_mul(m2, mono))
                row[dst_index.setdefault(key, len(dst_index))] = c
            rows.append(row)
    return rows


def exactness_defects(R: Resolution, degrees: Iterable[int]) -> list[tuple[int, int]]:
    """(i, d) where rank ker d_i != rank im d_{i+1} in degree d; empty means exact."""
    nv = R.m + 1
    bad = []
    for d in degrees:
        for i in range(1, len(R.terms)):
            src = R.terms[i]
            dim_src = sum(len(monomials_of_degree(nv, d - a)) for a, _ in src)
            rk_i = _rank_rows(_degree_matrix(R.column_dicts(i), src, [a for a, _ in R.terms[i - 1]], nv, d))
            ker = dim_src - rk_i
            if i + 1 < len(R.terms):
                im = _rank_rows(_degree_matrix(R.column_dicts(i + 1), R.terms[i + 1], [a for a, _ in src], nv, d))
            else:
                im = 0
            if ker != im:
                bad.append((i, d))
    return bad


def _rank_rows(rows) -> int:
    ech = Echelon()
    for r in rows:
        ech.add(r)
    return ech.rank


@dataclass(frozen=True)
class BettiTable:
    entries: dict = field(default_factory=dict)  # (i, j, parity) -> beta

    def __getitem__(self, key) -> int:
        return self.entries.get(key, 0)

    def total(self, i: int) -> int:
        return sum(v for (k, _, _), v in self.entries.items() if k == i)

    def max_shift(self) -> int | None:
        """max over nonzero entries of j - i (the Castelnuovo-Mumford regularity)."""
        if not self.entries:
            return None
        return max(j - i for (i, j, _) in self.entries)

    def rows(self) -> list[tuple[int, int, Parity, int]]:
        return sorted((i, j, p, v) for (i, j, p), v in self.entries.items())


def betti_table(R: Resolution) -> BettiTable:
    if not R.minimal:
        raise PreconditionError("Betti numbers need a minimal resolution")
    entries: dict = {}
    for i, level in enumerate(R.terms):
        for d, p in level:
            entries[(i, d, p)] = entries.get((i, d, p), 0) + 1
    return BettiTable(entries)
